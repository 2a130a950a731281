#pragma once

#include "redcor/derived.hpp"
#include "redcor/serialize.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace redcor {

constexpr std::uint64_t kDefaultSeed = 20240611;

// The default seed, overridden by the REDCOR_SEED environment variable.
std::uint64_t default_seed();

struct SuiteConfig {
    std::uint64_t seed = kDefaultSeed;
    std::optional<std::size_t> cases;  // overrides the suite's default count
    std::optional<RingSpec> ring;      // every generated case uses this ring
    unsigned k_max = kDefaultKMax;
    unsigned window = kDefaultStabilityWindow;
    unsigned workers = 0;  // 0: one per hardware thread
};

// One generated instance, self-contained so that it replays without the generator.
struct Case {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t index = 0;
    RingSpec ring;
    std::optional<Ideal> ideal;
    Vector sequence;
    std::map<std::string, Module> modules;
    std::map<std::string, Complex> complexes;
    std::map<std::string, ChainMap> maps;
};

enum class Status { Pass, Fail, Skip };
std::string to_string(Status s);

struct Outcome {
    Status status = Status::Pass;
    std::string detail;
};

struct SuiteInfo {
    std::string id;
    std::string title;
    std::vector<std::string> statements;
    std::size_t default_cases = 0;
};

struct CaseRecord {
    std::size_t index = 0;
    Outcome outcome;
    std::optional<Case> instance;  // absent when generation itself gave up
};

struct SuiteReport {
    std::string suite;
    std::vector<std::string> statements;
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    std::size_t passes = 0;
    std::vector<CaseRecord> failures;
    std::vector<CaseRecord> skipped;
    double seconds = 0;  // wall time; excluded from the serialized report

    // 0 pass, 1 failure found, 3 nothing but skips.
    int exit_code() const;
    std::string summary() const;
};

// Every statement covered by the harness, each owned by exactly one suite.
const std::vector<std::string>& statement_manifest();
const std::vector<SuiteInfo>& suite_index();
const SuiteInfo& suite_info(const std::string& id);

// Throws UnknownSuite.
SuiteReport run_suite(const std::string& id, const SuiteConfig& cfg);
Case generate_case(const std::string& id, const SuiteConfig& cfg, std::size_t index);
// Re-runs the suite's property on a stored instance.
Outcome check_case(const Case& c, const SuiteConfig& cfg);

Node encode(const Case& c);
Case decode_case(const Node& n);
Node encode(const SuiteReport& r);

}  // namespace redcor
