#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tabkit/expansions.hpp"

namespace tabkit {

struct SuiteConfig {
    int sn = 4;             ///< symmetric group degree for sweeps
    int vars = 3;           ///< variable bound (F identities use vars + 1)
    int max_deg = 6;        ///< degree bound for truncations
    int max_len = 6;        ///< word-length bound for bijection sweeps
    int corpus_max_entry = 5;
    int corpus_max_rows = 4;
    int corpus_max_cols = 4;
    int random_pairs = 1000;
    std::uint64_t seed = 20240915;
    int jobs = 1;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool pass = false;
};

/// Runs one of the named suites: examples, roundtrip, pieri, eg, expansion.
SuiteReport run_suite(std::string_view name, const SuiteConfig& config);

/// Deterministic pseudo-random compatible pair stream for fuzz suites.
std::vector<CompatiblePair> random_compatible_pairs(std::uint64_t seed, int count,
                                                    int max_len, int max_letter);

}  // namespace tabkit
