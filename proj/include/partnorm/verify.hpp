#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "partnorm/report.hpp"

namespace partnorm {

/// Knobs shared by the verification suites; unset fields fall back to each
/// suite's documented default.
struct VerifyOptions {
    std::optional<unsigned> n_max;
    std::optional<std::uint64_t> nu_max;
    std::optional<double> tol;
    bool allow_paper_flags = true;
};

/// Suite names in the canonical (sorted) order used by `verify all`.
std::vector<std::string> verify_suite_names();
bool is_verify_suite(const std::string& name);

/// Runs one named suite. Throws std::invalid_argument for unknown names.
std::vector<VerifyReport> run_verify_suite(const std::string& name,
                                           const VerifyOptions& options = {});

/// Runs every suite, reports concatenated in suite-name order.
std::vector<VerifyReport> run_all_verify_suites(const VerifyOptions& options = {});

/// Pass criterion: no Discrepancy, except paper-flagged ones when
/// allow_paper_flags is set.
bool verify_passes(const std::vector<VerifyReport>& reports, bool allow_paper_flags);

}  // namespace partnorm
