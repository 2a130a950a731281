#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "redcor/errors.hpp"
#include "redcor/generators.hpp"
#include "redcor/suites.hpp"

#include <cstdlib>
#include <map>
#include <set>

using namespace redcor;

TEST_CASE("every statement belongs to exactly one suite") {
    std::map<std::string, int> owners;
    std::set<std::string> ids;
    for (const auto& s : suite_index()) {
        CHECK(ids.insert(s.id).second);
        CHECK(s.default_cases > 0);
        CHECK_FALSE(s.statements.empty());
        for (const auto& st : s.statements) ++owners[st];
    }
    const auto& manifest = statement_manifest();
    CHECK(std::set<std::string>(manifest.begin(), manifest.end()).size() == manifest.size());
    for (const auto& st : manifest) {
        INFO(st);
        CHECK(owners[st] == 1);
    }
    CHECK(owners.size() == manifest.size());
}

TEST_CASE("unknown suites are rejected") {
    CHECK_THROWS_AS(run_suite("nonexistent", {}), UnknownSuite);
    CHECK_THROWS_AS(suite_info("nonexistent"), UnknownSuite);
    Case c;
    c.suite = "nonexistent";
    CHECK_THROWS_AS(check_case(c, {}), UnknownSuite);
}

TEST_CASE("identical seeds give byte-identical reports, whatever the worker count") {
    for (const char* id : {"mgm-c", "composition-d", "coreduced-char"}) {
        SuiteConfig one;
        one.cases = 60;
        one.workers = 1;
        SuiteConfig many = one;
        many.workers = 4;
        const std::string a = write_text(encode(run_suite(id, one)));
        CHECK(a == write_text(encode(run_suite(id, many))));
        CHECK(a == write_text(encode(run_suite(id, one))));
        SuiteConfig other = one;
        other.seed = one.seed + 1;
        const SuiteReport r = run_suite(id, other);
        CHECK(r.passes + r.failures.size() + r.skipped.size() == r.cases);
    }
}

TEST_CASE("generated cases are deterministic") {
    GenConfig cfg;
    cfg.seed = 1;
    cfg.max_generators = 2;
    cfg.max_relations = 2;
    cfg.entry_bound = 4;
    for (std::uint64_t i = 0; i < 50; ++i) {
        Rng r1(1, "modules", i), r2(1, "modules", i);
        const RingSpec R = gen_ring(cfg, r1);
        CHECK(R == gen_ring(cfg, r2));
        CHECK(gen_module(R, cfg, r1) == gen_module(R, cfg, r2));
    }
    SuiteConfig s;
    const Case a = generate_case("gm-c", s, 5), b = generate_case("gm-c", s, 5);
    CHECK(write_text(encode(a)) == write_text(encode(b)));
}

TEST_CASE("failures re-parse into runnable single cases") {
    SuiteConfig cfg;
    cfg.cases = 20;
    const SuiteReport r = run_suite("composition-d", cfg);
    REQUIRE_FALSE(r.failures.empty());
    const Node report = read_text(write_text(encode(r)));
    std::size_t replayed = 0;
    for (const auto& [name, child] : report.children) {
        if (child.kind != "failure") continue;
        const Case c = decode_case(child.child("instance"));
        const Outcome o = check_case(c, cfg);
        CHECK(o.status == Status::Fail);
        CHECK(o.detail == child.field("detail").as_string());
        CHECK(write_text(encode(c)) == write_text(child.child("instance")));
        ++replayed;
    }
    CHECK(replayed == r.failures.size());

    // A stored case also replays through JSON.
    const Case c = generate_case("gm-c", cfg, 3);
    const Case d = decode_case(from_json(to_json(encode(c))));
    CHECK(check_case(d, cfg).status == check_case(c, cfg).status);
}

TEST_CASE("the quasi-isomorphism example suite") {
    const SuiteReport r = run_suite("example-fig3", {});
    CHECK(r.cases == 1);
    CHECK(r.passes == 1);
    CHECK(r.exit_code() == 0);
}

TEST_CASE("report exit codes") {
    SuiteReport r;
    r.cases = 2;
    r.skipped.resize(2);
    CHECK(r.exit_code() == 3);
    r.passes = 1;
    r.skipped.resize(1);
    CHECK(r.exit_code() == 0);
    r.failures.resize(1);
    CHECK(r.exit_code() == 1);
}

TEST_CASE("a ring override reaches every generated case") {
    SuiteConfig cfg;
    cfg.ring = RingSpec::integers_mod(Int(12));
    for (std::size_t i = 0; i < 20; ++i) CHECK(generate_case("reduced-char", cfg, i).ring == *cfg.ring);
    cfg.ring = RingSpec::integers();
    for (std::size_t i = 0; i < 20; ++i) CHECK(generate_case("mgm-c", cfg, i).ring.is_integers());
}

TEST_CASE("the Z/6 enumeration covers windows of length at most two") {
    const SuiteInfo& info = suite_info("idempotent-c");
    CHECK(info.default_cases == suite_info("idempotent-d").default_cases);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < info.default_cases; ++i) {
        const Case c = generate_case("idempotent-c", {}, i);
        const Complex& M = c.complexes.at("M");
        CHECK(M.hi() - M.lo() <= 1);
        for (int n = M.lo(); n <= M.hi(); ++n)
            for (const auto& o : M.term(n).orders) CHECK(Int(6) % o == 0);
        seen.insert(write_text(encode(M)));
    }
    CHECK(seen.size() == info.default_cases);
}

TEST_CASE("the seed can be overridden from the environment") {
    ::unsetenv("REDCOR_SEED");
    CHECK(default_seed() == kDefaultSeed);
    ::setenv("REDCOR_SEED", "99", 1);
    CHECK(default_seed() == 99);
    ::setenv("REDCOR_SEED", "junk", 1);
    CHECK(default_seed() == kDefaultSeed);
    ::unsetenv("REDCOR_SEED");
}
