// Acceptance checks: one pass/fail line per criterion, thresholds pinned below.

#include "redcor/errors.hpp"
#include "redcor/suites.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace redcor;

namespace {

constexpr double kExampleSeconds = 1.0;
constexpr double kCharacterizationSeconds = 30.0;
constexpr double kFullRunSeconds = 300.0;
constexpr std::size_t kCharacterizationCases = 500;
constexpr std::size_t kGmCases = 200;
constexpr std::size_t kIdempotenceCases = 200;
constexpr std::size_t kMgmCases = 300;
constexpr std::size_t kMgmDecidable = 100;
constexpr std::size_t kSignCases = 1000;
constexpr std::size_t kSystemCases = 100;
constexpr std::size_t kWprRandomCases = 100;
constexpr std::size_t kDerivedCases = 100;
constexpr std::size_t kMgmDerivedCases = 200;
constexpr long kMaxModulus = 64;

struct Verdict {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) pass = false;
        notes.push_back((ok ? "" : "NOT ") + what);
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

SuiteConfig with_cases(std::size_t n) {
    SuiteConfig cfg;
    cfg.seed = default_seed();
    cfg.cases = n;
    return cfg;
}

std::string counts(const SuiteReport& r) {
    return r.suite + " " + std::to_string(r.passes) + "/" + std::to_string(r.cases) + " passed, " +
           std::to_string(r.failures.size()) + " failed, " + std::to_string(r.skipped.size()) + " skipped";
}

std::string first_failure(const SuiteReport& r) {
    if (r.failures.empty()) return {};
    std::string d = r.failures.front().outcome.detail;
    if (auto nl = d.find('\n'); nl != std::string::npos) d = d.substr(0, nl);
    return " (case " + std::to_string(r.failures.front().index) + ": " + d + ")";
}

// Ring kinds drawn by a suite, read off the generated cases.
std::pair<bool, bool> ring_kinds(const std::string& suite, const SuiteConfig& cfg, std::size_t n, bool& modulus_ok) {
    bool integers = false, modular = false;
    modulus_ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        const RingSpec R = generate_case(suite, cfg, i).ring;
        if (R.is_integers()) {
            integers = true;
        } else {
            modular = true;
            modulus_ok = modulus_ok && R.modulus <= kMaxModulus;
        }
    }
    return {integers, modular};
}

Verdict zero_failures(const std::string& suite, std::size_t cases, bool allow_skips) {
    Verdict v;
    const SuiteReport r = run_suite(suite, with_cases(cases));
    v.require(r.cases >= cases, counts(r) + first_failure(r));
    v.require(r.failures.empty(), "zero failures in " + suite);
    if (!allow_skips) v.require(r.skipped.empty(), "zero skips in " + suite);
    return v;
}

Verdict criterion_1() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    const std::string dir = REDCOR_FIXTURES;
    const Complex M = decode_complex(read_document(read_file(dir + "/quasi_iso_source.rc")));
    const Complex N = decode_complex(read_document(read_file(dir + "/quasi_iso_target.rc")));
    const ChainMap f = decode_chain_map(read_document(read_file(dir + "/quasi_iso_map.rc")));
    const RingSpec Z = RingSpec::integers();
    const Ideal a(Z, {Int(2)});
    v.require(M == Complex::two_term(Morphism::scalar(Module::cyclic(Z, 0), Int(4)), -1), "M is [Z --4--> Z]");
    v.require(N == Complex::concentrated(Module::cyclic(Z, Int(4))), "N is Z/4 in degree 0");
    v.require(is_reduced_complex(M, a), "M reduced");
    v.require(!is_reduced_complex(N, a), "N not reduced");
    v.require(f.source() == M && f.target() == N && is_quasi_iso(f), "f: M -> N quasi-isomorphism");
    const SuiteReport r = run_suite("example-fig3", with_cases(1));
    v.require(r.passes == 1, counts(r));
    const double s = seconds_since(t0);
    v.require(s < kExampleSeconds, "runtime " + std::to_string(s) + " s < 1 s");
    return v;
}

Verdict criterion_2() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    for (const char* suite : {"reduced-char", "coreduced-char"}) {
        const SuiteConfig cfg = with_cases(kCharacterizationCases);
        const SuiteReport r = run_suite(suite, cfg);
        v.require(r.cases >= kCharacterizationCases, counts(r) + first_failure(r));
        v.require(r.failures.empty(), std::string("agreement on every ") +
                                          (std::string(suite) == "reduced-char" ? "case" : "stabilizing case"));
        bool modulus_ok = true;
        const auto [integers, modular] = ring_kinds(suite, cfg, kCharacterizationCases, modulus_ok);
        v.require(integers && modular && modulus_ok, "both ring kinds drawn, n <= 64");
    }
    v.require(run_suite("reduced-char", with_cases(kCharacterizationCases)).skipped.empty(),
              "no skips in the reduced characterization");
    const double s = seconds_since(t0);
    v.require(s < kCharacterizationSeconds, "runtime " + std::to_string(s) + " s < 30 s");
    return v;
}

Verdict criterion_3() { return zero_failures("gm-c", kGmCases, false); }

Verdict criterion_4() { return zero_failures("idempotence-c", kIdempotenceCases, false); }

Verdict criterion_5() {
    Verdict v;
    const SuiteConfig cfg = with_cases(kMgmCases);
    const SuiteReport r = run_suite("mgm-c", cfg);
    const std::size_t decidable = r.passes + r.failures.size();
    v.require(r.cases >= kMgmCases, counts(r) + first_failure(r));
    v.require(decidable >= kMgmDecidable, std::to_string(decidable) + " decidable cases >= 100");
    v.require(r.failures.empty(), "zero inconsistencies");
    bool modulus_ok = true;
    const auto [integers, modular] = ring_kinds("mgm-c", cfg, kMgmCases, modulus_ok);
    v.require(integers && modular, "both ring kinds drawn");
    return v;
}

Verdict criterion_6() {
    Verdict v;
    for (const char* suite : {"idempotent-c", "idempotent-d"}) {
        const std::size_t all = suite_info(suite).default_cases;
        const SuiteReport r = run_suite(suite, with_cases(all));
        v.require(r.passes == all, counts(r) + first_failure(r) + ", exhaustive");
    }
    return v;
}

Verdict criterion_7() { return zero_failures("sign-conventions", kSignCases, false); }

Verdict criterion_8() { return zero_failures("telescope-microscope", kSystemCases, false); }

Verdict criterion_9() {
    Verdict v;
    // The first four cases are the fixed instances, each checked against its lag bound.
    const SuiteReport r = run_suite("wpr", with_cases(4 + kWprRandomCases));
    v.require(r.failures.empty(), counts(r) + first_failure(r) + ", no refutation or excess lag");
    bool fixed_ok = true;
    for (const auto& s : r.skipped) fixed_ok = fixed_ok && s.index >= 4;
    v.require(fixed_ok, "explicit witnesses for (2) over Z, (2) over Z/4, (3) over Z/6, (2,3) over Z");
    return v;
}

Verdict criterion_10() {
    Verdict v;
    const SuiteReport r = run_suite("derived-char", with_cases(kDerivedCases));
    v.require(r.cases >= kDerivedCases, counts(r) + first_failure(r));
    v.require(r.failures.empty(), "zero contradictions");
    return v;
}

Verdict criterion_11() {
    Verdict v;
    for (const char* suite : {"gm-d", "composition-d"}) {
        const SuiteReport r = run_suite(suite, with_cases(kDerivedCases));
        v.require(r.passes >= kDerivedCases, counts(r) + first_failure(r));
    }
    return v;
}

Verdict criterion_12() {
    Verdict v;
    const SuiteReport r = run_suite("mgm-d", with_cases(kMgmDerivedCases));
    v.require(r.failures.empty() && r.passes >= kMgmDerivedCases, counts(r) + first_failure(r) + ", zero mismatches");
    return v;
}

Verdict full_run() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t cases = 0;
    for (const auto& s : suite_index()) cases += run_suite(s.id, with_cases(s.default_cases)).cases;
    const double s = seconds_since(t0);
    v.require(s < kFullRunSeconds, std::to_string(cases) + " cases in " + std::to_string(s) + " s < 300 s");
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    std::string which = "all";
    app.add_option("--criterion", which, "1..12, 'full-run', or 'all'");
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"1", criterion_1},   {"2", criterion_2},   {"3", criterion_3},   {"4", criterion_4},
        {"5", criterion_5},   {"6", criterion_6},   {"7", criterion_7},   {"8", criterion_8},
        {"9", criterion_9},   {"10", criterion_10}, {"11", criterion_11}, {"12", criterion_12},
        {"full-run", full_run}};

    bool all_pass = true, matched = false;
    for (const auto& [id, run] : criteria) {
        if (which != "all" && which != id) continue;
        matched = true;
        Verdict v;
        try {
            v = run();
        } catch (const std::exception& e) {
            v.pass = false;
            v.notes.push_back(std::string("error: ") + e.what());
        }
        all_pass = all_pass && v.pass;
        std::cout << "criterion " << id << ": " << (v.pass ? "PASS" : "FAIL");
        for (std::size_t i = 0; i < v.notes.size(); ++i) std::cout << (i ? "; " : " | ") << v.notes[i];
        std::cout << std::endl;
    }
    if (!matched) {
        std::cerr << "unknown criterion '" << which << "'\n";
        return 2;
    }
    return all_pass ? 0 : 1;
}
