#pragma once

#include <cstdint>

namespace partnorm::config {

// Resource ceilings for enumeration-backed operations. Each value is read
// once from the environment on first use and falls back to the default:
//
//   PARTNORM_ENUM_CEILING      max partition count p(n) an enumeration-backed
//                              operation may visit (default 1000000)
//   PARTNORM_MACMAHON_NMAX     largest n accepted by the partial-fraction
//                              check (default 25)
//   PARTNORM_VERIFY_CEILING    largest n at which the verify harness runs the
//                              brute-force oracle next to a closed form
//                              (default 40)
//   PARTNORM_SERIES_ORDER_MAX  largest truncation order for series builders
//                              (default 5000)

std::uint64_t enumeration_ceiling();
unsigned macmahon_n_max();
unsigned verify_ceiling();
unsigned series_order_max();

}  // namespace partnorm::config
