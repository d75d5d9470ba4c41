#include "partnorm/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "partnorm/config.hpp"
#include "partnorm/stats.hpp"

namespace partnorm {

namespace {

constexpr std::uint64_t kMaxProductBound = 1ull << 36;

double mpq_to_double(const mpq_class& q) { return mpq_get_d(q.get_mpq_t()); }

// n^-s with fast paths for the integer exponents used throughout.
double inv_pow(std::uint64_t n, double s) {
    const double d = static_cast<double>(n);
    if (s == 2.0) return 1.0 / (d * d);
    if (s == 3.0) return 1.0 / (d * d * d);
    if (s == 4.0) {
        const double t = d * d;
        return 1.0 / (t * t);
    }
    return std::pow(d, -s);
}

// -log(1-x) resp. log(1+x), series form below the threshold where the
// cubic truncation is already below double rounding.
double log_geometric_factor(double x) {
    if (x < 1e-6) return x * (1.0 + x * (0.5 + x / 3.0));
    return -std::log1p(-x);
}

double log_affine_factor(double x) {
    if (x < 1e-6) return x * (1.0 - x * (0.5 - x / 3.0));
    return std::log1p(x);
}

struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double term) {
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

void simple_sieve(std::uint64_t limit, std::vector<std::uint64_t>& primes) {
    primes.clear();
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
    }
}

// Visits primes in [lo, hi] ascending; constant memory via segments.
void for_each_prime_in(std::uint64_t lo, std::uint64_t hi,
                       const std::function<void(std::uint64_t)>& fn) {
    if (hi < 2 || hi < lo) return;
    lo = std::max<std::uint64_t>(lo, 2);
    const std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi))) + 2;
    std::vector<std::uint64_t> base;
    simple_sieve(root, base);
    constexpr std::uint64_t kSeg = 1ull << 22;
    std::vector<std::uint8_t> seg(kSeg);
    for (std::uint64_t start = lo; start <= hi; start += kSeg) {
        const std::uint64_t end = std::min(start + kSeg - 1, hi);
        std::fill(seg.begin(), seg.begin() + (end - start + 1), 1);
        for (std::uint64_t p : base) {
            if (p * p > end) break;
            const std::uint64_t first = std::max(p * p, (start + p - 1) / p * p);
            for (std::uint64_t q = first; q <= end; q += p) seg[q - start] = 0;
        }
        for (std::uint64_t n = start; n <= end; ++n)
            if (seg[n - start]) fn(n);
    }
}

}  // namespace

PiValue PiValue::operator+(const PiValue& other) const {
    if (power != other.power)
        throw std::invalid_argument("cannot add pi^" + std::to_string(power) + " to pi^" +
                                    std::to_string(other.power));
    return {coeff + other.coeff, power};
}

PiValue PiValue::operator*(const PiValue& other) const {
    return {coeff * other.coeff, power + other.power};
}

PiValue PiValue::scaled(const mpq_class& factor) const { return {coeff * factor, power}; }

double PiValue::to_double() const {
    return mpq_to_double(coeff) * std::pow(M_PI, static_cast<double>(power));
}

std::string PiValue::to_string() const {
    if (power == 0) return coeff.get_str();
    return coeff.get_str() + " * pi^" + std::to_string(power);
}

PartSetSpec PartSetSpec::primes() { return {}; }

PartSetSpec PartSetSpec::even_integers() {
    PartSetSpec s;
    s.kind_ = Kind::EvenIntegers;
    return s;
}

PartSetSpec PartSetSpec::integers_from(std::uint64_t bound) {
    if (bound < 2) throw std::invalid_argument("Euler-product part sets exclude 1");
    PartSetSpec s;
    s.kind_ = Kind::IntegersFrom;
    s.from_ = bound;
    return s;
}

PartSetSpec PartSetSpec::explicit_list(std::vector<std::uint64_t> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty() || members.front() < 2)
        throw std::invalid_argument("explicit part sets need members >= 2");
    PartSetSpec s;
    s.kind_ = Kind::ExplicitList;
    s.members_ = std::move(members);
    return s;
}

PartSetSpec PartSetSpec::all_from_one() {
    PartSetSpec s;
    s.kind_ = Kind::AllFromOne;
    s.from_ = 1;
    return s;
}

PartSetSpec PartSetSpec::parse(const std::string& name) {
    if (name == "primes") return primes();
    if (name == "even") return even_integers();
    if (name.rfind("from:", 0) == 0) return integers_from(std::stoull(name.substr(5)));
    if (name.rfind("list:", 0) == 0) {
        std::vector<std::uint64_t> members;
        std::stringstream ss(name.substr(5));
        std::string item;
        while (std::getline(ss, item, ',')) members.push_back(std::stoull(item));
        return explicit_list(std::move(members));
    }
    throw std::invalid_argument("unknown part set: " + name +
                                " (expected primes, even, from:<b>, list:a,b,c)");
}

std::string PartSetSpec::name() const {
    switch (kind_) {
        case Kind::Primes: return "primes";
        case Kind::EvenIntegers: return "even";
        case Kind::IntegersFrom: return "from:" + std::to_string(from_);
        case Kind::AllFromOne: return "all";
        case Kind::ExplicitList: {
            std::string out = "list:";
            for (std::size_t i = 0; i < members_.size(); ++i)
                out += (i ? "," : "") + std::to_string(members_[i]);
            return out;
        }
    }
    return "?";
}

void PartSetSpec::for_each_member(std::uint64_t limit,
                                  const std::function<void(std::uint64_t)>& fn) const {
    switch (kind_) {
        case Kind::Primes:
            for_each_prime_in(2, limit, fn);
            return;
        case Kind::EvenIntegers:
            for (std::uint64_t n = 2; n <= limit; n += 2) fn(n);
            return;
        case Kind::IntegersFrom:
        case Kind::AllFromOne:
            for (std::uint64_t n = from_; n <= limit; ++n) fn(n);
            return;
        case Kind::ExplicitList:
            for (std::uint64_t n : members_) {
                if (n > limit) break;
                fn(n);
            }
            return;
    }
}

mpq_class bernoulli_number(unsigned m) {
    static std::vector<mpq_class> cache{mpq_class(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= m) {
        const unsigned n = static_cast<unsigned>(cache.size());
        // B_n = -1/(n+1) * sum_{j<n} C(n+1, j) B_j
        mpq_class acc;
        mpz_class binom;
        for (unsigned j = 0; j < n; ++j) {
            mpz_bin_uiui(binom.get_mpz_t(), n + 1, j);
            acc += mpq_class(binom) * cache[j];
        }
        cache.push_back(-acc / mpq_class(n + 1));
    }
    return cache[m];
}

EvalResult riemann_zeta(double s, double tol) {
    if (!(s > 1.0)) throw std::domain_error("riemann_zeta requires s > 1");
    constexpr unsigned K = 12;
    // remainder magnitude of Euler-Maclaurin after K correction terms
    const auto remainder_bound = [&](double m) {
        double r = std::abs(mpq_to_double(bernoulli_number(2 * K + 2)));
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), 2 * K + 2);
        r /= mpz_get_d(fact.get_mpz_t());
        for (unsigned i = 0; i <= 2 * K; ++i) r *= s + i;
        return r * std::pow(m, -s - 2 * K - 1);
    };
    std::uint64_t m = 16;
    while (remainder_bound(static_cast<double>(m)) >= tol && m < (1u << 24)) m *= 2;
    if (remainder_bound(static_cast<double>(m)) >= tol)
        throw std::length_error("riemann_zeta cannot reach the requested tolerance");

    KahanSum head;
    for (std::uint64_t n = 1; n < m; ++n) head.add(inv_pow(n, s));
    const double dm = static_cast<double>(m);
    double value = head.sum + std::pow(dm, 1.0 - s) / (s - 1.0) + 0.5 * inv_pow(m, s);
    double deriv_prod = 1.0;  // s(s+1)...(s+2k-2)
    for (unsigned k = 1; k <= K; ++k) {
        deriv_prod *= (k == 1) ? s : (s + 2 * k - 3) * (s + 2 * k - 2);
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), 2 * k);
        value += mpq_to_double(bernoulli_number(2 * k)) / mpz_get_d(fact.get_mpz_t()) *
                 deriv_prod * std::pow(dm, -s - 2 * k + 1);
    }
    return {value, remainder_bound(dm), m};
}

PiValue riemann_zeta_even_exact(unsigned j) {
    if (j == 0) throw std::invalid_argument("riemann_zeta_even_exact requires j >= 1");
    // zeta(2j) = (-1)^(j+1) B_{2j} (2 pi)^(2j) / (2 (2j)!)
    mpz_class two_pow, fact;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * j);
    mpz_fac_ui(fact.get_mpz_t(), 2 * j);
    mpq_class coeff = bernoulli_number(2 * j) * mpq_class(two_pow) / (2 * mpq_class(fact));
    if (j % 2 == 0) coeff = -coeff;
    return {coeff, 2 * j};
}

namespace {

// Shared truncated-log-product evaluator. `affine` selects (1 + n^-s)
// factors; otherwise (1 - n^-s)^-1. The truncation point grows until the
// rigorous bound on the dropped tail is below tol:
//     log-tail <= sum_{n>M} n^-s / (1 - 2^-s)   (geometric factors)
//     log-tail <= sum_{n>M} n^-s                (affine factors)
// with sum_{n>M} n^-s <= M^(1-s)/(s-1).
EvalResult truncated_product(const PartSetSpec& set, double s, double tol, bool affine,
                             std::uint64_t* final_bound = nullptr) {
    if (!(s > 1.0)) throw std::domain_error("Euler product requires s > 1");
    if (!affine && set.kind() == PartSetSpec::Kind::AllFromOne)
        throw std::invalid_argument("Euler-product part sets exclude 1");

    KahanSum log_sum;
    std::uint64_t terms = 0;
    const auto absorb = [&](std::uint64_t lo, std::uint64_t hi) {
        set.for_each_member(hi, [&](std::uint64_t n) {
            if (n < lo) return;
            const double x = inv_pow(n, s);
            log_sum.add(affine ? log_affine_factor(x) : log_geometric_factor(x));
            ++terms;
        });
    };

    if (set.finite()) {
        const std::uint64_t m = set.members().back();
        absorb(2, m);
        if (final_bound != nullptr) *final_bound = m;
        return {std::exp(log_sum.sum), 0.0, terms};
    }

    const double factor = affine ? 1.0 : 1.0 / (1.0 - inv_pow(2, s));
    const auto log_tail = [&](std::uint64_t m) {
        return std::pow(static_cast<double>(m), 1.0 - s) / (s - 1.0) * factor;
    };

    std::uint64_t m = 4096;
    absorb(1, m);
    for (;;) {
        const double value = std::exp(log_sum.sum);
        const double bound = value * std::expm1(log_tail(m));
        if (bound <= tol) {
            if (final_bound != nullptr) *final_bound = m;
            return {value, bound, terms};
        }
        // solve value * T(M) ~= tol for the next truncation point
        const double target_tail = tol / (value * 1.10);
        const double m_req = std::pow(target_tail * (s - 1.0) / factor, 1.0 / (1.0 - s));
        std::uint64_t next = std::max(
            2 * m, static_cast<std::uint64_t>(std::min(m_req + 2.0, 1e19)));
        if (next > kMaxProductBound)
            throw std::length_error("Euler product cannot reach the requested tolerance "
                                    "within the iteration budget");
        absorb(m + 1, next);
        m = next;
    }
}

}  // namespace

EvalResult partition_zeta_product(const PartSetSpec& set, double s, double tol) {
    return truncated_product(set, s, tol, /*affine=*/false);
}

EvalResult distinct_zeta(double s, double tol) {
    return truncated_product(PartSetSpec::all_from_one(), s, tol, /*affine=*/true);
}

VerifyReport change_of_variables_check(const PartSetSpec& set, double s, double tol) {
    if (!(s > 1.0)) throw std::domain_error("change of variables requires s > 1");
    // evaluate both factor forms at the same truncation point
    std::uint64_t limit = 0;
    const EvalResult direct = truncated_product(set, s, tol, /*affine=*/false, &limit);
    const double x = std::exp(-s);
    KahanSum log_sum;
    set.for_each_member(limit, [&](std::uint64_t n) {
        const double xn = std::pow(x, std::log(static_cast<double>(n)));
        log_sum.add(log_geometric_factor(xn));
    });
    const double via_log = std::exp(log_sum.sum);

    VerifyReport rep;
    rep.identity = "change-of-vars/set=" + set.name() + ",s=" + std::to_string(s);
    rep.lhs = std::to_string(direct.value);
    rep.rhs = std::to_string(via_log);
    rep.error = std::abs(direct.value - via_log);
    if (*rep.error <= 1e-10 * std::max(1.0, std::abs(direct.value))) {
        rep.status = VerifyStatus::NumericPass;
    } else {
        rep.status = VerifyStatus::Discrepancy;
        rep.notes = "x^log(n) and n^-s truncations disagree beyond rounding";
    }
    return rep;
}

namespace {

std::uint64_t count_factorizations(std::uint64_t rem, std::uint64_t max_factor) {
    if (rem == 1) return 1;
    std::uint64_t total = 0;
    for (std::uint64_t d = std::min(rem, max_factor); d >= 2; --d)
        if (rem % d == 0) total += count_factorizations(rem / d, d);
    return total;
}

void collect_factorizations(std::uint64_t rem, std::uint64_t max_factor,
                            std::vector<std::uint64_t>& acc, std::vector<Partition>& out) {
    if (rem == 1) {
        out.push_back(Partition::from_parts(acc));
        return;
    }
    for (std::uint64_t d = std::min(rem, max_factor); d >= 2; --d) {
        if (rem % d != 0) continue;
        acc.push_back(d);
        collect_factorizations(rem / d, d, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::uint64_t multiplicative_partitions(std::uint64_t nu) {
    if (nu == 0) throw std::invalid_argument("multiplicative_partitions requires nu >= 1");
    return count_factorizations(nu, nu);
}

std::vector<std::uint64_t> multiplicative_partition_counts(std::uint64_t nu_max) {
    std::vector<std::uint64_t> out(nu_max + 1, 0);
    for (std::uint64_t nu = 1; nu <= nu_max; ++nu) out[nu] = count_factorizations(nu, nu);
    return out;
}

std::vector<Partition> nuclear_partitions_of_norm(std::uint64_t nu) {
    if (nu == 0) throw std::invalid_argument("nuclear_partitions_of_norm requires nu >= 1");
    std::vector<Partition> out;
    std::vector<std::uint64_t> acc;
    collect_factorizations(nu, nu, acc, out);
    return out;
}

EvalResult nuclear_zeta_dirichlet(double s, std::uint64_t nu_max) {
    if (!(s > 1.0)) throw std::domain_error("nuclear Dirichlet series requires s > 1");
    const auto counts = multiplicative_partition_counts(nu_max);
    KahanSum sum;
    for (std::uint64_t nu = 1; nu <= nu_max; ++nu)
        if (counts[nu] > 0) sum.add(static_cast<double>(counts[nu]) * inv_pow(nu, s));
    EvalResult r;
    r.value = sum.sum;
    r.terms_used = nu_max;
    return r;  // no rigorous tail bound is known; tail_bound stays empty
}

EvalResult fixed_length_zeta_faa(double s, unsigned k, double tol) {
    if (!(s > 1.0)) throw std::domain_error("fixed-length zeta requires s > 1");
    if (k == 0) return {1.0, 0.0, 0};
    require_enumeration_feasible(k);
    const double zeta_tol = tol / (4.0 * k);
    std::vector<double> zeta_js(k + 1);
    for (unsigned j = 1; j <= k; ++j) zeta_js[j] = riemann_zeta(j * s, zeta_tol).value;
    KahanSum sum;
    std::uint64_t terms = 0;
    for_each_partition(k, PartitionClass::all(), [&](const Partition& lambda) {
        double term = mpq_to_double(macmahon_coeff(lambda));
        for (const PartCount& pc : lambda.freq())
            term *= std::pow(zeta_js[static_cast<unsigned>(pc.part)],
                             static_cast<double>(pc.mult));
        sum.add(term);
        ++terms;
        return true;
    });
    return {sum.sum, sum.sum * k * zeta_tol + 1e-15, terms};
}

PiValue fixed_length_zeta_faa_exact(unsigned s, unsigned k) {
    if (s == 0 || s % 2 != 0)
        throw std::invalid_argument("exact fixed-length zeta requires even s >= 2");
    if (k == 0) return {mpq_class(1), 0};
    require_enumeration_feasible(k);
    PiValue total(mpq_class(0), s * k);
    for_each_partition(k, PartitionClass::all(), [&](const Partition& lambda) {
        PiValue term(macmahon_coeff(lambda), 0);
        for (const PartCount& pc : lambda.freq()) {
            const PiValue z = riemann_zeta_even_exact(pc.part * s / 2);
            for (std::uint64_t i = 0; i < pc.mult; ++i) term = term * z;
        }
        total = total + term;
        return true;
    });
    return total;
}

EvalResult fixed_length_zeta_direct(double s, unsigned k, std::uint64_t part_bound) {
    if (!(s > 1.0)) throw std::domain_error("fixed-length zeta requires s > 1");
    if (k == 0) return {1.0, 0.0, 0};
    // g[l] = sum over partitions with parts <= j, length l, of N^-s
    std::vector<double> g(k + 1, 0.0);
    g[0] = 1.0;
    for (std::uint64_t j = 1; j <= part_bound; ++j) {
        const double x = inv_pow(j, s);
        for (unsigned l = 1; l <= k; ++l) g[l] += x * g[l - 1];
    }
    EvalResult r;
    r.value = g[k];
    r.terms_used = part_bound;
    return r;  // lower-bound oracle: monotone in part_bound, no upper tail bound
}

PiValue fixed_length_zeta_closed_s2(unsigned k) {
    if (k == 0)
        throw std::domain_error("closed form rejects k = 0; the identity is only formal there");
    mpz_class num, den;
    mpz_ui_pow_ui(num.get_mpz_t(), 2, 2 * k - 1);
    num -= 1;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, 2 * k - 2);
    mpq_class ratio(num, den);
    ratio.canonicalize();
    return riemann_zeta_even_exact(k).scaled(ratio);
}

EvalResult golden_ratio_series(unsigned terms) {
    if (terms == 0) throw std::invalid_argument("golden ratio series needs at least one term");
    KahanSum sum;
    mpz_class hundred_pow = 1;
    for (unsigned k = 0; k < terms; ++k) {
        const PiValue zk = fixed_length_zeta_faa_exact(2, k);
        mpq_class scaled = zk.coeff / mpq_class(hundred_pow);
        sum.add(mpq_to_double(scaled) * std::pow(M_PI, static_cast<double>(zk.power)));
        hundred_pow *= 100;
    }
    // zeta_P({2}^k) < 2 for every k, so the dropped tail is < 2 * 100^-terms * 100/99
    const double tail = 2.0 * std::pow(100.0, -static_cast<double>(terms)) * (100.0 / 99.0);
    return {sum.sum, tail, terms};
}

double golden_ratio_target() { return (1.0 + std::sqrt(5.0)) / 2.0 * M_PI / 5.0; }

mpq_class phi_partition(const Partition& lambda) {
    mpq_class out(lambda.norm());
    for (const PartCount& pc : lambda.freq()) {
        out *= mpq_class(pc.part - 1);
        out /= mpq_class(pc.part);
    }
    return out;
}

VerifyReport phi_divisor_sum_check(const Partition& lambda) {
    if (subpartition_count(lambda) > mpz_class(static_cast<unsigned long>(config::enumeration_ceiling())))
        throw std::length_error("subpartition count exceeds the enumeration ceiling");
    mpq_class total;
    for (const Partition& delta : subpartitions(lambda)) total += phi_partition(delta);
    VerifyReport rep;
    rep.identity = "phi-sum/" + lambda.to_string();
    rep.lhs = total.get_str();
    rep.rhs = lambda.norm().get_str();
    if (total == mpq_class(lambda.norm())) {
        rep.status = VerifyStatus::ExactPass;
    } else {
        rep.status = VerifyStatus::Discrepancy;
        rep.notes = "subpartition phi sum differs from the norm";
    }
    return rep;
}

VerifyReport phi_dirichlet_factor_identity_check(std::uint64_t n_max, unsigned s) {
    if (s < 3) throw std::domain_error("phi Dirichlet series requires s > 2");
    VerifyReport rep;
    rep.identity = "phi-dirichlet/factor-identity,s=" + std::to_string(s) +
                   ",n<=" + std::to_string(n_max);
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        mpz_class ns, ns1;
        mpz_ui_pow_ui(ns.get_mpz_t(), static_cast<unsigned long>(n), s);
        mpz_ui_pow_ui(ns1.get_mpz_t(), static_cast<unsigned long>(n), s - 1);
        mpq_class x(1, ns1);  // n^(1-s)
        x.canonicalize();
        mpq_class lhs = 1 + mpq_class(n - 1, n) * x / (1 - x);
        lhs.canonicalize();
        mpq_class rhs = (1 - mpq_class(1, ns)) / (1 - x);
        rhs.canonicalize();
        if (lhs != rhs) {
            rep.status = VerifyStatus::Discrepancy;
            rep.lhs = lhs.get_str();
            rep.rhs = rhs.get_str();
            rep.notes = "factor identity fails at n=" + std::to_string(n);
            return rep;
        }
    }
    rep.status = VerifyStatus::ExactPass;
    rep.lhs = std::to_string(n_max - 1) + " factors";
    rep.rhs = rep.lhs;
    return rep;
}

VerifyReport phi_dirichlet_check(const PartSetSpec& set, double s, double tol) {
    if (!(s > 2.0)) throw std::domain_error("phi Dirichlet series requires s > 2");
    VerifyReport rep;
    rep.identity = "phi-dirichlet/set=" + set.name() + ",s=" + std::to_string(s);

    const bool integral_s = s == std::floor(s);
    if (set.finite() && integral_s) {
        // finite set, integer s: the Dirichlet-factor form on the left,
        // the ratio of the two finite Euler products on the right, both exact
        const unsigned si = static_cast<unsigned>(s);
        mpq_class lhs = 1, rhs = 1;
        for (std::uint64_t n : set.members()) {
            mpz_class ns, ns1;
            mpz_ui_pow_ui(ns.get_mpz_t(), static_cast<unsigned long>(n), si);
            mpz_ui_pow_ui(ns1.get_mpz_t(), static_cast<unsigned long>(n), si - 1);
            mpq_class xs(1, ns), xs1(1, ns1);
            xs.canonicalize();
            xs1.canonicalize();
            lhs *= 1 + mpq_class(n - 1, n) * xs1 / (1 - xs1);
            rhs *= (1 - xs) / (1 - xs1);
        }
        lhs.canonicalize();
        rhs.canonicalize();
        rep.lhs = lhs.get_str();
        rep.rhs = rhs.get_str();
        rep.status = lhs == rhs ? VerifyStatus::ExactPass : VerifyStatus::Discrepancy;
        if (rep.status == VerifyStatus::Discrepancy) rep.notes = "exact sides differ";
        return rep;
    }

    // numeric route: independent truncations on both sides
    KahanSum lhs_log;
    const double factor = 1.0 / (1.0 - inv_pow(2, s - 1));
    const auto log_tail = [&](std::uint64_t m) {
        return std::pow(static_cast<double>(m), 2.0 - s) / (s - 2.0) * factor;
    };
    std::uint64_t m = 4096;
    const auto absorb = [&](std::uint64_t lo, std::uint64_t hi) {
        set.for_each_member(hi, [&](std::uint64_t n) {
            if (n < lo) return;
            const double xs = inv_pow(n, s);
            const double xs1 = inv_pow(n, s - 1.0);
            lhs_log.add(std::log1p(-xs) - std::log1p(-xs1));
        });
    };
    absorb(2, m);
    double lhs;
    for (;;) {
        lhs = std::exp(lhs_log.sum);
        const double bound = lhs * std::expm1(log_tail(m));
        if (bound <= tol / 3.0) break;
        const double target_tail = tol / (3.0 * lhs * 1.10);
        const double m_req = std::pow(target_tail * (s - 2.0) / factor, 1.0 / (2.0 - s));
        std::uint64_t next =
            std::max(2 * m, static_cast<std::uint64_t>(std::min(m_req + 2.0, 1e19)));
        if (next > kMaxProductBound)
            throw std::length_error("phi Dirichlet product cannot reach the tolerance");
        absorb(m + 1, next);
        m = next;
    }

    const EvalResult num = partition_zeta_product(set, s - 1.0, tol / 4.0);
    const EvalResult den = partition_zeta_product(set, s, tol / 4.0);
    const double rhs = num.value / den.value;

    rep.lhs = std::to_string(lhs);
    rep.rhs = std::to_string(rhs);
    rep.error = std::abs(lhs - rhs);
    if (*rep.error <= tol) {
        rep.status = VerifyStatus::NumericPass;
    } else {
        rep.status = VerifyStatus::Discrepancy;
        rep.notes = "phi Dirichlet product and zeta ratio disagree beyond tolerance";
    }
    return rep;
}

}  // namespace partnorm
