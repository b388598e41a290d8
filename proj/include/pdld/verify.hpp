#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdld/table.hpp"

namespace pdld {

// Optional overrides for the named suites; unset fields fall back to each
// suite's pinned defaults.
struct VerifyOptions {
    std::optional<double> theta;
    std::optional<double> c;
    std::optional<double> x;
    std::optional<double> t;
    std::optional<double> delta;
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> k;
    std::optional<std::int64_t> K;
    std::optional<std::int64_t> N;
    std::optional<std::vector<double>> grid;
    std::uint64_t master_seed = 20260819;
};

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;      // measured values and the pinned tolerance
    double seconds = 0.0;
    std::optional<Table> table;
};

struct CriterionResult {
    int number = 0;
    std::string label;
    bool pass = false;
    std::vector<CheckResult> parts;
};

std::vector<std::string> verify_ids();
CheckResult run_check(const std::string& id, const VerifyOptions& opt = {});

// The full gate: thirteen criteria, each aggregating one or more named checks
// at their pinned defaults.
std::vector<CriterionResult> run_acceptance();

}  // namespace pdld
