#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "partnorm/partition.hpp"

namespace partnorm {

enum class ExtremalSource { ClosedForm, BruteForce };
enum class ExtremalDirection { Max, Min };

/// Result of an extremal-norm query. Witnesses are sorted in the
/// enumeration order (lexicographically decreasing part lists) and every
/// witness has the claimed norm. `agreement` is filled by the verify
/// harness when both the closed form and the oracle were run.
struct ExtremalResult {
    mpz_class value;
    std::vector<Partition> witnesses;
    ExtremalSource source = ExtremalSource::ClosedForm;
    std::optional<bool> agreement;
};

/// Maximum norm over all partitions of n, by residue of n mod 3. n = 0
/// returns value 1 with the empty partition by convention.
ExtremalResult max_norm(std::uint64_t n);

/// Maximum norm over partitions of n into odd parts; closed form for
/// n >= 3, brute force below.
ExtremalResult max_norm_odd(std::uint64_t n);

/// Maximum norm over partitions of n into distinct parts via the
/// triangular-number decomposition n = T_k + j, -1 <= j <= k-2. For the
/// gap values n = T_{k+1} - 2 (4, 8, 13, ...) no decomposition exists and
/// the brute-force result is returned with source = BruteForce.
ExtremalResult max_norm_distinct(std::uint64_t n);

/// Whether the triangular decomposition behind max_norm_distinct exists.
bool distinct_closed_form_applies(std::uint64_t n);

/// Maximum norm over Rogers-Ramanujan partitions of n (consecutive
/// differences >= 2), constructed case by case from n = D_k + j,
/// D_k = k(k+1), 0 <= j < 2k+2. The value always comes from the witness
/// product; the stated factorial formula is exposed separately through
/// rr_case_info for comparison. n <= 1 falls back to brute force.
ExtremalResult max_norm_rr(std::uint64_t n);

/// Case index (1-6), decomposition, and the stated factorial value for
/// the Rogers-Ramanujan maximum at n >= 2. The case-5 formula is known to
/// disagree with the witness product; callers compare, never adopt.
struct RRCaseInfo {
    int case_index = 0;
    std::uint64_t k = 0;
    std::uint64_t j = 0;
    mpz_class paper_value;
};
RRCaseInfo rr_case_info(std::uint64_t n);

/// Exhaustive extremal scan over the class; all tied witnesses returned.
/// Larger sizes fan out over largest-part sub-enumerations on a small
/// thread pool; partials merge by split index, so the result (including
/// witness order) is identical to the sequential scan.
/// Throws std::domain_error when the class has no partitions of size n.
ExtremalResult brute_extremal_norm(std::uint64_t n, const PartitionClass& cls,
                                   ExtremalDirection direction);

/// Minimum size of a partition of norm nu, with the full witness family
/// <2^(a1-2b) 3^(a2) 4^b 5^(a3) ...> for 0 <= beta <= a1/2. nu = 1 gives
/// size 0 and the empty partition.
struct MinSizeResult {
    std::uint64_t size = 0;
    std::vector<Partition> witnesses;  // indexed by beta = 0..beta_max
    std::uint64_t beta_max = 0;
};
MinSizeResult min_size_for_norm(std::uint64_t nu);

/// 1 / (N(lambda) * prod m_i!), the probability of lambda under the
/// MacMahon (permutation cycle type) distribution on partitions of n.
mpq_class macmahon_coeff(const Partition& lambda);

/// sum over partitions of n of macmahon_coeff * m_i, exactly 1/i.
mpq_class macmahon_expected_multiplicity(std::uint64_t n, std::uint64_t i);

/// Samples a partition of n with probability equal to its MacMahon
/// coefficient, as the cycle type of a uniform random permutation of n
/// elements (the two distributions coincide).
Partition sample_macmahon(std::uint64_t n, std::mt19937_64& rng);
Partition sample_macmahon(std::uint64_t n, std::uint64_t seed);

// Dotted Young diagram counts.
mpz_class dotted_count(const Partition& lambda);                      // N(lambda)
mpz_class k_dotted_count(const Partition& lambda, std::uint64_t k);   // prod C(i,k)^{m_i}
mpz_class multicolor_count(const Partition& lambda);                  // N(lambda) prod m_i!

/// sum over partitions of n of 1/N(lambda), via the series route.
mpq_class lehmer_sum(unsigned n);
std::vector<mpq_class> lehmer_sums(unsigned n_max);
/// Restriction to partitions into distinct parts.
mpq_class lehmer_sum_distinct(unsigned n);
std::vector<mpq_class> lehmer_sums_distinct(unsigned n_max);

/// E[N] over partitions of n: prod_{i<=n} i^(1/i), returned as the double
/// value together with the raw log sum (sum of ln i / i).
struct ExpectedNorm {
    double value = 1.0;
    double log_sum = 0.0;
};
ExpectedNorm expected_norm(std::uint64_t n);

// Classical constants, stored to 30 significant digits.
extern const char* const kEulerGammaDigits;
extern const char* const kStieltjesGamma1Digits;
double euler_gamma();
double stieltjes_gamma1();

}  // namespace partnorm
