#include "partnorm/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "partnorm/config.hpp"
#include "partnorm/series.hpp"

namespace partnorm {

namespace {

Partition make_freq(std::vector<PartCount> freq) {
    std::erase_if(freq, [](const PartCount& pc) { return pc.mult == 0; });
    std::sort(freq.begin(), freq.end(),
              [](const PartCount& a, const PartCount& b) { return a.part < b.part; });
    return Partition::from_freq(std::move(freq));
}

ExtremalResult closed_result(std::vector<Partition> witnesses) {
    ExtremalResult r;
    r.value = witnesses.front().norm();
    r.witnesses = std::move(witnesses);
    r.source = ExtremalSource::ClosedForm;
    return r;
}

mpz_class factorial(std::uint64_t n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

// base^e as an exact rational; e may be negative
mpq_class mpq_pow_si(unsigned long base, long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), base, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e < 0) {
        mpq_class r(1, p);
        r.canonicalize();
        return r;
    }
    return mpq_class(p);
}

// Largest k >= 1 with threshold(k) <= target.
std::uint64_t largest_k(std::uint64_t target, const std::function<std::uint64_t(std::uint64_t)>& threshold) {
    std::uint64_t k = 1;
    while (threshold(k + 1) <= target) ++k;
    return k;
}

}  // namespace

ExtremalResult max_norm(std::uint64_t n) {
    if (n == 0) return closed_result({Partition()});
    if (n == 1) return closed_result({Partition::from_parts({1})});
    switch (n % 3) {
        case 0:
            return closed_result({make_freq({{3, n / 3}})});
        case 1:
            // two witnesses tie: <3^((n-4)/3) 4> and <2^2 3^((n-4)/3)>
            return closed_result({make_freq({{3, (n - 4) / 3}, {4, 1}}),
                                  make_freq({{2, 2}, {3, (n - 4) / 3}})});
        default:
            return closed_result({make_freq({{2, 1}, {3, (n - 2) / 3}})});
    }
}

ExtremalResult max_norm_odd(std::uint64_t n) {
    if (n < 3) return brute_extremal_norm(n, PartitionClass::odd_parts(), ExtremalDirection::Max);
    switch (n % 3) {
        case 0:
            return closed_result({make_freq({{3, n / 3}})});
        case 1:
            return closed_result({make_freq({{1, 1}, {3, (n - 1) / 3}})});
        default:
            return closed_result({make_freq({{3, (n - 5) / 3}, {5, 1}})});
    }
}

bool distinct_closed_form_applies(std::uint64_t n) {
    if (n < 2) return false;
    const std::uint64_t k =
        largest_k(n + 1, [](std::uint64_t k) { return k * (k + 1) / 2; });
    // j = n - T_k lies in [-1, k-1]; only j <= k-2 is covered, so the
    // family n = T_{k+1} - 2 (4, 8, 13, ...) has no decomposition
    const std::int64_t j =
        static_cast<std::int64_t>(n) - static_cast<std::int64_t>(k * (k + 1) / 2);
    return j <= static_cast<std::int64_t>(k) - 2;
}

ExtremalResult max_norm_distinct(std::uint64_t n) {
    if (!distinct_closed_form_applies(n)) {
        ExtremalResult r = brute_extremal_norm(n, PartitionClass::distinct(), ExtremalDirection::Max);
        return r;
    }
    const std::uint64_t k =
        largest_k(n + 1, [](std::uint64_t k) { return k * (k + 1) / 2; });
    const std::int64_t j = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(k * (k + 1) / 2);
    const std::uint64_t removed = static_cast<std::uint64_t>(static_cast<std::int64_t>(k) - j);
    // one copy of each of 2..k+1 except (k - j)
    std::vector<std::uint64_t> parts;
    for (std::uint64_t p = 2; p <= k + 1; ++p)
        if (p != removed) parts.push_back(p);
    return closed_result({Partition::from_parts(parts)});
}

namespace {

std::uint64_t rr_k_of(std::uint64_t n) {
    return largest_k(n, [](std::uint64_t k) { return k * (k + 1); });
}

// Witness construction for the six Rogers-Ramanujan cases.
std::vector<std::uint64_t> rr_witness_parts(std::uint64_t k, std::uint64_t j) {
    std::vector<std::uint64_t> parts;
    if (j == 0) {
        for (std::uint64_t p = 2 * k; p >= 2; p -= 2) parts.push_back(p);
    } else if (j < k) {
        for (std::uint64_t t = 0; t < j; ++t) parts.push_back(2 * k + 1 - 2 * t);
        for (std::uint64_t p = 2 * (k - j); p >= 2; p -= 2) parts.push_back(p);
    } else if (j == k) {
        for (std::uint64_t p = 2 * k + 1; p >= 3; p -= 2) parts.push_back(p);
    } else if (j < 2 * k) {
        const std::uint64_t jp = j - k;
        for (std::uint64_t t = 0; t < jp; ++t) parts.push_back(2 * k + 2 - 2 * t);
        for (std::uint64_t p = 2 * (k - jp) + 1; p >= 3; p -= 2) parts.push_back(p);
    } else if (j == 2 * k) {
        for (std::uint64_t p = 2 * k + 2; p >= 4; p -= 2) parts.push_back(p);
    } else {  // j == 2k + 1
        parts.push_back(2 * k + 3);
        for (std::uint64_t p = 2 * k; p >= 4; p -= 2) parts.push_back(p);
    }
    return parts;
}

}  // namespace

RRCaseInfo rr_case_info(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("rr_case_info requires n >= 2");
    RRCaseInfo info;
    info.k = rr_k_of(n);
    info.j = n - info.k * (info.k + 1);
    const std::uint64_t k = info.k, j = info.j;
    mpq_class v;
    if (j == 0) {
        info.case_index = 1;
        v = mpq_class(factorial(k)) * mpq_pow_si(2, static_cast<long>(k));
    } else if (j < k) {
        info.case_index = 2;
        v = mpq_pow_si(2, static_cast<long>(k) - 2 * static_cast<long>(j));
        v *= factorial(k - j) * factorial(k - j + 1) * factorial(2 * k + 2);
        v /= mpq_class(factorial(k + 1) * factorial(2 * (k - j) + 2));
    } else if (j == k) {
        info.case_index = 3;
        v = mpq_class(factorial(2 * k + 2)) /
            (mpq_pow_si(2, static_cast<long>(k) + 1) * mpq_class(factorial(k + 1)));
    } else if (j < 2 * k) {
        info.case_index = 4;
        const std::uint64_t jp = j - k;
        v = mpq_class(factorial(2 * (k - jp) + 2) * factorial(k + 1));
        v /= mpq_pow_si(2, static_cast<long>(k) - 2 * static_cast<long>(jp) + 1) *
             mpq_class(factorial(k - jp + 1) * factorial(k - jp + 1));
    } else if (j == 2 * k) {
        info.case_index = 5;
        v = mpq_class(factorial(k + 1)) * mpq_pow_si(2, static_cast<long>(k) + 1);
    } else {
        info.case_index = 6;
        v = mpq_class(factorial(k) * mpz_class(2 * k + 3)) * mpq_pow_si(2, static_cast<long>(k) - 1);
    }
    info.paper_value = v;
    return info;
}

ExtremalResult max_norm_rr(std::uint64_t n) {
    if (n < 2)
        return brute_extremal_norm(n, PartitionClass::rogers_ramanujan(), ExtremalDirection::Max);
    const std::uint64_t k = rr_k_of(n);
    const std::uint64_t j = n - k * (k + 1);
    return closed_result({Partition::from_parts(rr_witness_parts(k, j))});
}

namespace {

struct ExtremalPartial {
    bool found = false;
    mpz_class value;
    std::vector<Partition> witnesses;
};

void scan_extremal(const Partition& lambda, ExtremalDirection direction, ExtremalPartial& p) {
    const mpz_class v = lambda.norm();
    const bool better =
        !p.found || (direction == ExtremalDirection::Max ? v > p.value : v < p.value);
    if (better) {
        p.value = v;
        p.witnesses.assign(1, lambda);
        p.found = true;
    } else if (v == p.value) {
        p.witnesses.push_back(lambda);
    }
}

}  // namespace

ExtremalResult brute_extremal_norm(std::uint64_t n, const PartitionClass& cls,
                                   ExtremalDirection direction) {
    require_enumeration_feasible(n);

    // Fan the scan out over disjoint largest-part sub-enumerations. Partials
    // are merged by split index (largest part descending), so the outcome is
    // identical to the sequential lex-decreasing scan no matter how the
    // splits are scheduled.
    std::vector<ExtremalPartial> partials(n + 1);
    const unsigned workers =
        n >= 25 ? std::max(1u, std::min(8u, std::thread::hardware_concurrency())) : 1;
    const auto scan_split = [&](std::uint64_t largest, ExtremalPartial& p) {
        for_each_partition_with_largest(n, cls, largest, [&](const Partition& lambda) {
            scan_extremal(lambda, direction, p);
            return true;
        });
    };
    if (workers <= 1) {
        for (std::uint64_t largest = 0; largest <= n; ++largest)
            scan_split(largest, partials[largest]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::uint64_t largest = w; largest <= n; largest += workers)
                    scan_split(largest, partials[largest]);
            });
        for (std::thread& t : pool) t.join();
    }

    ExtremalResult r;
    r.source = ExtremalSource::BruteForce;
    bool found = false;
    for (std::uint64_t largest = n + 1; largest-- > 0;) {
        const ExtremalPartial& p = partials[largest];
        if (!p.found) continue;
        const bool better =
            !found || (direction == ExtremalDirection::Max ? p.value > r.value : p.value < r.value);
        if (better) {
            r.value = p.value;
            r.witnesses = p.witnesses;
            found = true;
        } else if (p.value == r.value) {
            r.witnesses.insert(r.witnesses.end(), p.witnesses.begin(), p.witnesses.end());
        }
    }
    if (!found)
        throw std::domain_error("no partitions in class " + cls.name() + " at size " +
                                std::to_string(n));
    return r;
}

MinSizeResult min_size_for_norm(std::uint64_t nu) {
    if (nu == 0) throw std::invalid_argument("min_size_for_norm requires nu >= 1");
    const auto factors = factorize(nu);
    MinSizeResult out;
    std::uint64_t alpha1 = 0;
    for (const auto& [p, e] : factors) {
        out.size += p * e;
        if (p == 2) alpha1 = e;
    }
    out.beta_max = alpha1 / 2;
    for (std::uint64_t beta = 0; beta <= out.beta_max; ++beta) {
        std::vector<PartCount> freq;
        for (const auto& [p, e] : factors)
            freq.push_back({p, p == 2 ? e - 2 * beta : e});
        if (beta > 0) freq.push_back({4, beta});
        out.witnesses.push_back(make_freq(std::move(freq)));
    }
    return out;
}

mpq_class macmahon_coeff(const Partition& lambda) {
    mpz_class den = lambda.norm();
    for (const PartCount& pc : lambda.freq()) den *= factorial(pc.mult);
    mpq_class c(1, den);
    c.canonicalize();
    return c;
}

mpq_class macmahon_expected_multiplicity(std::uint64_t n, std::uint64_t i) {
    if (i < 1 || i > n) throw std::invalid_argument("expected multiplicity requires 1 <= i <= n");
    require_enumeration_feasible(n);
    mpq_class acc;
    for_each_partition(n, PartitionClass::all(), [&](const Partition& lambda) {
        const std::uint64_t m = lambda.multiplicity(i);
        if (m > 0) acc += macmahon_coeff(lambda) * mpq_class(m);
        return true;
    });
    return acc;
}

Partition sample_macmahon(std::uint64_t n, std::mt19937_64& rng) {
    if (n == 0) throw std::invalid_argument("sample_macmahon requires n >= 1");
    std::vector<std::uint64_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::uint64_t i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng() % (i + 1)]);
    std::vector<bool> seen(n, false);
    std::vector<std::uint64_t> cycle_lengths;
    for (std::uint64_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::uint64_t len = 0;
        for (std::uint64_t at = start; !seen[at]; at = perm[at]) {
            seen[at] = true;
            ++len;
        }
        cycle_lengths.push_back(len);
    }
    return Partition::from_parts(cycle_lengths);
}

Partition sample_macmahon(std::uint64_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return sample_macmahon(n, rng);
}

mpz_class dotted_count(const Partition& lambda) { return lambda.norm(); }

mpz_class k_dotted_count(const Partition& lambda, std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("k_dotted_count requires k >= 1");
    mpz_class out = 1, b, bp;
    for (const PartCount& pc : lambda.freq()) {
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(pc.part),
                     static_cast<unsigned long>(k));
        mpz_pow_ui(bp.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(pc.mult));
        out *= bp;
    }
    return out;
}

mpz_class multicolor_count(const Partition& lambda) {
    mpz_class out = lambda.norm();
    for (const PartCount& pc : lambda.freq()) out *= factorial(pc.mult);
    return out;
}

std::vector<mpq_class> lehmer_sums(unsigned n_max) { return reciprocal_norm_sums(n_max); }

mpq_class lehmer_sum(unsigned n) { return reciprocal_norm_sums(n)[n]; }

std::vector<mpq_class> lehmer_sums_distinct(unsigned n_max) {
    return reciprocal_norm_sums_distinct(n_max);
}

mpq_class lehmer_sum_distinct(unsigned n) { return reciprocal_norm_sums_distinct(n)[n]; }

ExpectedNorm expected_norm(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("expected_norm requires n >= 1");
    ExpectedNorm out;
    for (std::uint64_t i = 2; i <= n; ++i)
        out.log_sum += std::log(static_cast<double>(i)) / static_cast<double>(i);
    out.value = std::exp(out.log_sum);
    return out;
}

const char* const kEulerGammaDigits = "0.577215664901532860606512090082";
const char* const kStieltjesGamma1Digits = "-0.0728158454836767248605863758749";

double euler_gamma() { return std::strtod(kEulerGammaDigits, nullptr); }

double stieltjes_gamma1() { return std::strtod(kStieltjesGamma1Digits, nullptr); }

}  // namespace partnorm
