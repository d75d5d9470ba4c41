#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <vector>

#include "partnorm/report.hpp"

namespace partnorm {

/// Truncated formal power series with exact rational coefficients indexed
/// 0..order (inclusive). Binary operations truncate to the smaller order.
/// Values are immutable once built apart from the in-place factor helpers
/// used by the product builders.
class Series {
public:
    explicit Series(unsigned order) : coeffs_(order + 1) {}
    static Series one(unsigned order);

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const mpq_class& operator[](unsigned k) const { return coeffs_[k]; }
    void set(unsigned k, mpq_class v) {
        v.canonicalize();
        coeffs_[k] = std::move(v);
    }

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    bool operator==(const Series&) const = default;

    /// Multiplicative inverse modulo q^(order+1). Throws std::domain_error
    /// when the constant term is zero.
    Series reciprocal() const;
    /// Integer power; negative exponents go through reciprocal().
    Series pow(long e) const;

    // In-place factor helpers. Accumulation order in the product builders
    // below is ascending n, fixed for reproducibility.
    void mul_geometric(unsigned n, const mpq_class& w);  // *= 1/(1 - w q^n)
    void mul_affine(unsigned n, const mpq_class& w);     // *= (1 + w q^n)
    void mul_binomial(unsigned n, const mpq_class& e);   // *= (1 - q^n)^e

private:
    std::vector<mpq_class> coeffs_;
};

/// prod_{n=1}^{order} 1/(1-q^n); the q^n coefficient is p(n).
Series euler_partition_series(unsigned order);

/// p(0..n_max) by Euler's pentagonal-number recurrence (independent of the
/// series route).
std::vector<mpz_class> partition_numbers(unsigned n_max);
mpz_class pentagonal_p(unsigned n);

/// prod_{n=1}^{order} 1/(1 - w(n) q^n).
Series weighted_partition_series(unsigned order, const std::function<mpq_class(unsigned)>& weight);

/// prod_{n=1}^{order} (1 + w(n) q^n).
Series weighted_distinct_series(unsigned order, const std::function<mpq_class(unsigned)>& weight);

/// prod_{n=1}^{order} (1 - q^n)^exponent for an arbitrary rational
/// exponent, expanded with the generalized binomial theorem.
Series power_product_series(const mpq_class& exponent, unsigned order);

/// The enumeration side of the sigma-power identity: coefficient of q^n is
/// sum over partitions of n of (sign*c)^length * prod sigma(i)^{m_i} /
/// (N * prod m_i!). With sign=+1 this expands prod (1-q^n)^(-c); with
/// sign=-1 it expands prod (1-q^n)^(+c).
Series sigma_power_expansion(const mpq_class& c, int sign, unsigned order);

/// Number of dotted Young diagrams of size n: sum of norms over partitions
/// of n, read off prod 1/(1-n q^n).
std::vector<mpz_class> dotted_diagram_counts(unsigned n_max);
mpz_class p_dot(unsigned n);

/// q^0..q^n_max coefficients of prod 1/(1 - q^m / m): the reciprocal-norm
/// sums over all partitions. Computed over the fixed common denominator
/// prod_{p<=n_max} p^(floor(n_max/p)) so the inner loop is exact integer
/// arithmetic; feasible to n_max ~ 5000.
std::vector<mpq_class> reciprocal_norm_sums(unsigned n_max);

/// Same for prod (1 + q^m / m): partitions into distinct parts.
std::vector<mpq_class> reciprocal_norm_sums_distinct(unsigned n_max);

/// Exact check of sum over partitions of n of 1/(N(lambda) prod m_i!) = 1.
VerifyReport fine_identity_check(unsigned n);

/// Exact rational evaluation of both sides of the partial-fraction
/// identity for partitions of n at a rational q with 0 < |q| < 1.
/// Throws std::invalid_argument outside that range and std::length_error
/// above the configured ceiling.
VerifyReport macmahon_partial_fraction_check(unsigned n, const mpq_class& q);

}  // namespace partnorm
