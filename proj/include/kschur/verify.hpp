#pragma once

// Named verification sweeps over configurable ranges, shared by the CLI and
// the acceptance suite.  Sweeps emit one verdict per instance, in
// configuration order, and never abort on a failing instance.

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace kschur {

struct SweepConfig {
    int k_lo = 2, k_hi = 3;
    int size_lo = 1, size_hi = 6;
    int n_lo = 1, n_hi = 6;
    std::vector<std::string> checks;  // empty selects every known check
    long long budget = 10'000'000;    // search nodes per instance
};

struct Verdict {
    std::string check;
    nlohmann::json params;
    std::string result;       // "pass" | "fail" | "budget-exceeded"
    nlohmann::json witness;   // present on fail
    double elapsed_ms = 0.0;  // side channel; not part of the payload
};

nlohmann::json verdict_payload(const Verdict& v);

const std::vector<std::string>& all_check_names();

// Returns true iff every emitted verdict passed.
bool run_checks(const SweepConfig& config, const std::function<void(const Verdict&)>& sink);

}  // namespace kschur
