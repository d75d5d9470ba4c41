#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "partnorm/partition.hpp"
#include "partnorm/report.hpp"

namespace partnorm {

/// An exact rational multiple of an integer power of pi. Addition is only
/// defined between equal powers; multiplication adds powers.
struct PiValue {
    mpq_class coeff;
    unsigned power = 0;

    PiValue() = default;
    PiValue(mpq_class c, unsigned p) : coeff(std::move(c)), power(p) {}

    PiValue operator+(const PiValue& other) const;
    PiValue operator*(const PiValue& other) const;
    PiValue scaled(const mpq_class& factor) const;
    double to_double() const;
    /// "7/360 * pi^4"; bare rational when power is 0.
    std::string to_string() const;
    friend bool operator==(const PiValue&, const PiValue&) = default;
};

/// A double evaluation with a rigorous absolute truncation bound where one
/// is available (nullopt means no bound is claimed, never that it is 0).
struct EvalResult {
    double value = 0.0;
    std::optional<double> tail_bound;
    std::uint64_t terms_used = 0;
};

/// The part set X behind an Euler product over parts. 1 is excluded from
/// every Euler-product set; AllFromOne exists solely for the distinct-parts
/// product (1 + n^-s).
class PartSetSpec {
public:
    enum class Kind { Primes, EvenIntegers, IntegersFrom, ExplicitList, AllFromOne };

    static PartSetSpec primes();
    static PartSetSpec even_integers();
    static PartSetSpec integers_from(std::uint64_t bound);  // bound >= 2
    static PartSetSpec explicit_list(std::vector<std::uint64_t> members);  // all >= 2
    static PartSetSpec all_from_one();

    /// Accepts "primes", "even", "from:<b>", "list:a,b,c". Throws
    /// std::invalid_argument otherwise.
    static PartSetSpec parse(const std::string& name);

    Kind kind() const { return kind_; }
    std::string name() const;
    bool finite() const { return kind_ == Kind::ExplicitList; }
    const std::vector<std::uint64_t>& members() const { return members_; }

    /// Calls fn(n) for every member n <= limit in ascending order.
    void for_each_member(std::uint64_t limit, const std::function<void(std::uint64_t)>& fn) const;

private:
    Kind kind_ = Kind::Primes;
    std::uint64_t from_ = 2;
    std::vector<std::uint64_t> members_;
};

/// Exact Bernoulli number B_m (B_1 = -1/2), by the ascending recurrence,
/// cached.
mpq_class bernoulli_number(unsigned m);

/// Riemann zeta for real s > 1 by Euler-Maclaurin summation; tail_bound is
/// the magnitude of the first omitted correction term. Throws
/// std::domain_error for s <= 1.
EvalResult riemann_zeta(double s, double tol);

/// zeta(2j) = (-1)^(j+1) B_{2j} (2 pi)^(2j) / (2 (2j)!) as an exact
/// rational multiple of pi^(2j).
PiValue riemann_zeta_even_exact(unsigned j);

/// prod_{n in X, n <= M} (1 - n^-s)^-1 with M grown until the product's
/// rigorous tail bound (via sum_{n>M} n^-s <= M^(1-s)/(s-1)) drops under
/// tol. Throws std::domain_error for s <= 1 and std::invalid_argument if
/// X admits the part 1.
EvalResult partition_zeta_product(const PartSetSpec& set, double s, double tol);

/// prod_{n >= 1} (1 + n^-s), truncated with the same integral tail bound.
EvalResult distinct_zeta(double s, double tol);

/// Evaluates the same truncated Euler product in the x^(log n) variables,
/// x = e^-s, and compares with the n^-s form at the same truncation point.
VerifyReport change_of_variables_check(const PartSetSpec& set, double s, double tol);

/// Number of nuclear partitions of norm nu (multiplicative partitions of
/// nu into factors >= 2); 1 for nu = 1 (the empty partition).
std::uint64_t multiplicative_partitions(std::uint64_t nu);
std::vector<std::uint64_t> multiplicative_partition_counts(std::uint64_t nu_max);

/// The nuclear partitions of norm nu themselves (exhaustive enumerator,
/// used as the oracle for the count and the min-size check).
std::vector<Partition> nuclear_partitions_of_norm(std::uint64_t nu);

/// Partial sum of sum_{nu <= nu_max} P~(nu) / nu^s. No rigorous tail bound
/// is available; tail_bound is left empty.
EvalResult nuclear_zeta_dirichlet(double s, std::uint64_t nu_max);

/// Fixed-length partition zeta via the MacMahon-coefficient formula:
/// sum over partitions of k of prod_j zeta(j s)^(m_j) / (N prod m_j!).
EvalResult fixed_length_zeta_faa(double s, unsigned k, double tol = 1e-12);

/// Exact path for positive even integer s: every term carries pi^(s k).
PiValue fixed_length_zeta_faa_exact(unsigned s, unsigned k);

/// Direct truncation: sum over partitions of length exactly k with parts
/// <= part_bound of N^-s, by dynamic programming. Monotone nondecreasing
/// in part_bound and a lower bound for the exact value.
EvalResult fixed_length_zeta_direct(double s, unsigned k, std::uint64_t part_bound);

/// (2^(2k-1) - 1) / 2^(2k-2) * zeta(2k) as an exact multiple of pi^(2k).
/// Throws std::domain_error for k = 0 (the identity is formal there).
PiValue fixed_length_zeta_closed_s2(unsigned k);

/// Partial sum of sum_{k >= 0} zeta_P({2}^k) / 100^k over `terms` terms,
/// from the exact fixed-length values. tail_bound uses zeta_P({2}^k) < 2.
EvalResult golden_ratio_series(unsigned terms);

/// phi * pi / 5, the limit of the series above.
double golden_ratio_target();

/// N(lambda) * prod over distinct parts (1 - 1/part); 1 for the empty
/// partition.
mpq_class phi_partition(const Partition& lambda);

/// Exact check of sum over subpartitions delta of phi(delta) = N(lambda).
VerifyReport phi_divisor_sum_check(const Partition& lambda);

/// Exact per-part factor identity behind the phi Dirichlet series,
/// 1 + (1 - 1/n) n^(1-s) / (1 - n^(1-s)) = (1 - n^-s) / (1 - n^(1-s)),
/// checked in rational arithmetic for n = 2..n_max at integer s >= 3.
VerifyReport phi_dirichlet_factor_identity_check(std::uint64_t n_max, unsigned s);

/// Compares the phi Dirichlet product over X against the ratio
/// zeta_X(s-1) / zeta_X(s). Exact for finite explicit sets at integer s;
/// numeric with tolerance otherwise. Throws std::domain_error for s <= 2.
VerifyReport phi_dirichlet_check(const PartSetSpec& set, double s, double tol);

}  // namespace partnorm
