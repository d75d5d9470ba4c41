#pragma once

#include <optional>
#include <string>

namespace partnorm {

enum class VerifyStatus { ExactPass, NumericPass, Discrepancy, Skipped };

const char* to_string(VerifyStatus s);

/// Structured outcome of one identity check. ExactPass is reserved for
/// equality of exact representations; numeric comparisons at a tolerance
/// report NumericPass. A Discrepancy always carries a note, and
/// `paper_flagged` marks the two documented families the verify harness
/// tolerates by default.
struct VerifyReport {
    std::string identity;
    VerifyStatus status = VerifyStatus::Skipped;
    std::string lhs;
    std::string rhs;
    std::optional<double> error;
    std::string notes;
    bool paper_flagged = false;
};

}  // namespace partnorm
