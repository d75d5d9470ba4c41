#include "partnorm/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "partnorm/config.hpp"
#include "partnorm/partition.hpp"
#include "partnorm/stats.hpp"

namespace partnorm {

namespace {

void check_order(unsigned order) {
    if (order > config::series_order_max())
        throw std::length_error("series order " + std::to_string(order) +
                                " exceeds PARTNORM_SERIES_ORDER_MAX");
}

mpq_class mpq_pow_ui(const mpq_class& q, unsigned long e) {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
    r.canonicalize();
    return r;
}

}  // namespace

Series Series::one(unsigned order) {
    Series s(order);
    s.coeffs_[0] = 1;
    return s;
}

Series operator+(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (unsigned k = 0; k <= out.order(); ++k) out.coeffs_[k] = a[k] + b[k];
    return out;
}

Series operator-(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (unsigned k = 0; k <= out.order(); ++k) out.coeffs_[k] = a[k] - b[k];
    return out;
}

Series operator*(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (unsigned i = 0; i <= out.order(); ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; i + j <= out.order(); ++j) {
            if (b[j] == 0) continue;
            out.coeffs_[i + j] += a[i] * b[j];
        }
    }
    return out;
}

Series Series::reciprocal() const {
    if (coeffs_[0] == 0) throw std::domain_error("series reciprocal requires a nonzero constant term");
    Series out(order());
    out.coeffs_[0] = 1 / coeffs_[0];
    for (unsigned k = 1; k <= order(); ++k) {
        mpq_class acc;
        for (unsigned j = 1; j <= k; ++j) acc += coeffs_[j] * out.coeffs_[k - j];
        out.coeffs_[k] = -acc / coeffs_[0];
    }
    return out;
}

Series Series::pow(long e) const {
    if (e < 0) return reciprocal().pow(-e);
    Series acc = Series::one(order());
    Series base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

void Series::mul_geometric(unsigned n, const mpq_class& w) {
    if (n == 0) throw std::invalid_argument("factor exponent must be positive");
    if (w == 0) return;
    // c_new[k] = c[k] + w c_new[k-n], ascending k
    for (unsigned k = n; k <= order(); ++k) coeffs_[k] += w * coeffs_[k - n];
}

void Series::mul_affine(unsigned n, const mpq_class& w) {
    if (n == 0) throw std::invalid_argument("factor exponent must be positive");
    if (w == 0) return;
    // c_new[k] = c[k] + w c[k-n], descending k
    for (unsigned k = order(); k >= n; --k) {
        coeffs_[k] += w * coeffs_[k - n];
        if (k == n) break;
    }
}

void Series::mul_binomial(unsigned n, const mpq_class& e) {
    if (n == 0) throw std::invalid_argument("factor exponent must be positive");
    // (1-q^n)^e = sum_j binom(e,j) (-1)^j q^(n j) with binom(e,j) the
    // falling-factorial form, exact for rational e.
    Series factor(order());
    mpq_class coeff = 1;
    factor.coeffs_[0] = 1;
    for (unsigned long j = 1; n * j <= order(); ++j) {
        coeff *= (e - static_cast<long>(j) + 1) / mpq_class(static_cast<long>(j));
        mpq_class term = coeff;
        if (j % 2 == 1) term = -term;
        factor.coeffs_[static_cast<unsigned>(n * j)] = term;
    }
    *this = *this * factor;
}

Series euler_partition_series(unsigned order) {
    check_order(order);
    Series s = Series::one(order);
    for (unsigned n = 1; n <= order; ++n) s.mul_geometric(n, 1);
    return s;
}

std::vector<mpz_class> partition_numbers(unsigned n_max) {
    std::vector<mpz_class> p(n_max + 1);
    p[0] = 1;
    for (unsigned n = 1; n <= n_max; ++n) {
        mpz_class acc;
        for (unsigned k = 1;; ++k) {
            const std::uint64_t g1 = static_cast<std::uint64_t>(k) * (3 * k - 1) / 2;
            const std::uint64_t g2 = static_cast<std::uint64_t>(k) * (3 * k + 1) / 2;
            if (g1 > n) break;
            mpz_class term = p[n - g1];
            if (g2 <= n) term += p[n - g2];
            if (k % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        p[n] = acc;
    }
    return p;
}

mpz_class pentagonal_p(unsigned n) { return partition_numbers(n)[n]; }

Series weighted_partition_series(unsigned order, const std::function<mpq_class(unsigned)>& weight) {
    check_order(order);
    Series s = Series::one(order);
    for (unsigned n = 1; n <= order; ++n) s.mul_geometric(n, weight(n));
    return s;
}

Series weighted_distinct_series(unsigned order, const std::function<mpq_class(unsigned)>& weight) {
    check_order(order);
    Series s = Series::one(order);
    for (unsigned n = 1; n <= order; ++n) s.mul_affine(n, weight(n));
    return s;
}

Series power_product_series(const mpq_class& exponent, unsigned order) {
    check_order(order);
    Series s = Series::one(order);
    for (unsigned n = 1; n <= order; ++n) s.mul_binomial(n, exponent);
    return s;
}

Series sigma_power_expansion(const mpq_class& c, int sign, unsigned order) {
    check_order(order);
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    require_enumeration_feasible(order);
    const mpq_class signed_c = sign > 0 ? c : mpq_class(-c);
    Series s(order);
    s.set(0, 1);
    for (unsigned n = 1; n <= order; ++n) {
        mpq_class acc;
        for_each_partition(n, PartitionClass::all(), [&](const Partition& lambda) {
            mpq_class term = macmahon_coeff(lambda);
            mpz_class sig_prod = 1, pw;
            for (const PartCount& pc : lambda.freq()) {
                mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(sigma(pc.part)),
                              static_cast<unsigned long>(pc.mult));
                sig_prod *= pw;
            }
            term *= sig_prod;
            term *= mpq_pow_ui(signed_c, static_cast<unsigned long>(lambda.length()));
            acc += term;
            return true;
        });
        s.set(n, acc);
    }
    return s;
}

std::vector<mpz_class> dotted_diagram_counts(unsigned n_max) {
    Series s = weighted_partition_series(n_max, [](unsigned n) { return mpq_class(n); });
    std::vector<mpz_class> out(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) out[n] = s[n].get_num();  // denominators are 1
    return out;
}

mpz_class p_dot(unsigned n) { return dotted_diagram_counts(n)[n]; }

namespace {

// Every reciprocal-norm coefficient c_k has denominator dividing
// D = prod_{p <= n_max} p^(floor(n_max/p)) (the lcm of partition norms),
// so the recurrences run in scaled integers C_k = D c_k with exact small
// divisions instead of per-step rational canonicalization.
mpz_class norm_lcm_denominator(unsigned n_max) {
    mpz_class d = 1, pk;
    std::vector<bool> composite(n_max + 1, false);
    for (unsigned p = 2; p <= n_max; ++p) {
        if (composite[p]) continue;
        for (unsigned q = 2 * p; q <= n_max; q += p) composite[q] = true;
        mpz_ui_pow_ui(pk.get_mpz_t(), p, n_max / p);
        d *= pk;
    }
    return d;
}

std::vector<mpq_class> scaled_to_rationals(const std::vector<mpz_class>& scaled, const mpz_class& d) {
    std::vector<mpq_class> out(scaled.size());
    for (std::size_t k = 0; k < scaled.size(); ++k) {
        out[k] = mpq_class(scaled[k], d);
        out[k].canonicalize();
    }
    return out;
}

}  // namespace

std::vector<mpq_class> reciprocal_norm_sums(unsigned n_max) {
    check_order(n_max);
    const mpz_class d = norm_lcm_denominator(n_max);
    std::vector<mpz_class> c(n_max + 1);
    c[0] = d;
    mpz_class q, r;
    for (unsigned m = 1; m <= n_max; ++m)
        for (unsigned k = m; k <= n_max; ++k) {
            mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), c[k - m].get_mpz_t(), m);
            if (r != 0) throw std::logic_error("reciprocal_norm_sums: scaled division not exact");
            c[k] += q;
        }
    return scaled_to_rationals(c, d);
}

std::vector<mpq_class> reciprocal_norm_sums_distinct(unsigned n_max) {
    check_order(n_max);
    const mpz_class d = norm_lcm_denominator(n_max);
    std::vector<mpz_class> c(n_max + 1);
    c[0] = d;
    mpz_class q, r;
    for (unsigned m = 1; m <= n_max; ++m)
        for (unsigned k = n_max; k >= m; --k) {
            mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), c[k - m].get_mpz_t(), m);
            if (r != 0) throw std::logic_error("reciprocal_norm_sums_distinct: scaled division not exact");
            c[k] += q;
            if (k == m) break;
        }
    return scaled_to_rationals(c, d);
}

VerifyReport fine_identity_check(unsigned n) {
    require_enumeration_feasible(n);
    mpq_class total;
    for_each_partition(n, PartitionClass::all(), [&](const Partition& lambda) {
        total += macmahon_coeff(lambda);
        return true;
    });
    VerifyReport rep;
    rep.identity = "fine/n=" + std::to_string(n);
    rep.lhs = total.get_str();
    rep.rhs = "1";
    if (total == 1) {
        rep.status = VerifyStatus::ExactPass;
    } else {
        rep.status = VerifyStatus::Discrepancy;
        rep.notes = "coefficient sum differs from 1";
    }
    return rep;
}

VerifyReport macmahon_partial_fraction_check(unsigned n, const mpq_class& q) {
    if (q == 0 || abs(q) >= 1)
        throw std::invalid_argument("macmahon check requires a rational q with 0 < |q| < 1");
    if (n > config::macmahon_n_max())
        throw std::length_error("macmahon check limited to n <= " +
                                std::to_string(config::macmahon_n_max()) +
                                "; raise PARTNORM_MACMAHON_NMAX");
    require_enumeration_feasible(n);

    // powers q^1..q^n, shared by both sides
    std::vector<mpq_class> qpow(n + 1);
    qpow[0] = 1;
    for (unsigned j = 1; j <= n; ++j) qpow[j] = qpow[j - 1] * q;

    mpq_class lhs = 1;
    for (unsigned j = 1; j <= n; ++j) lhs /= 1 - qpow[j];

    mpq_class rhs;
    for_each_partition(n, PartitionClass::all(), [&](const Partition& lambda) {
        mpq_class denom_q = 1;
        for (const PartCount& pc : lambda.freq())
            denom_q *= mpq_pow_ui(1 - qpow[static_cast<unsigned>(pc.part)],
                                  static_cast<unsigned long>(pc.mult));
        rhs += macmahon_coeff(lambda) / denom_q;
        return true;
    });

    VerifyReport rep;
    rep.identity = "macmahon-pf/n=" + std::to_string(n) + ",q=" + q.get_str();
    rep.lhs = lhs.get_str();
    rep.rhs = rhs.get_str();
    if (lhs == rhs) {
        rep.status = VerifyStatus::ExactPass;
    } else {
        rep.status = VerifyStatus::Discrepancy;
        rep.notes = "partial-fraction sides differ";
    }
    return rep;
}

}  // namespace partnorm
