// Acceptance suite: runs every gating criterion at its pinned tolerance and
// prints one PASS/FAIL line per criterion. Exit status is the number of
// failed criteria.

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "partnorm/partition.hpp"
#include "partnorm/series.hpp"
#include "partnorm/stats.hpp"
#include "partnorm/verify.hpp"
#include "partnorm/zeta.hpp"

using namespace partnorm;

namespace {

int failures = 0;

void report(int index, const std::string& label, bool ok, const std::string& detail = "") {
    std::printf("%s: %02d %s%s%s\n", ok ? "PASS" : "FAIL", index, label.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool suite_clean(const std::vector<VerifyReport>& reports, bool allow_paper_flags = true) {
    return verify_passes(reports, allow_paper_flags);
}

// 1. Fine identity, exact, n <= 30
void criterion01() {
    bool ok = true;
    for (unsigned n = 0; n <= 30 && ok; ++n)
        ok = fine_identity_check(n).status == VerifyStatus::ExactPass;
    report(1, "Fine identity exact for 0 <= n <= 30", ok);
}

// 2. p(n) from sigma powers equals the pentagonal recurrence, n <= 30
void criterion02() {
    const Series expansion = sigma_power_expansion(1, +1, 30);
    const auto p = partition_numbers(30);
    bool ok = true;
    for (unsigned n = 0; n <= 30; ++n) ok = ok && expansion[n] == mpq_class(p[n]);
    report(2, "sigma-power expansion reproduces p(n) exactly for n <= 30", ok);
}

// 3. MacMahon partial fractions, exact, n <= 15 at four rational q
void criterion03() {
    bool ok = true;
    std::string detail;
    for (unsigned n = 1; n <= 15 && ok; ++n)
        for (const mpq_class& q :
             {mpq_class(1, 2), mpq_class(1, 3), mpq_class(-1, 2), mpq_class(9, 10)}) {
            const VerifyReport rep = macmahon_partial_fraction_check(n, q);
            if (rep.status != VerifyStatus::ExactPass) {
                ok = false;
                detail = rep.identity;
                break;
            }
        }
    report(3, "MacMahon partial fractions exact for n <= 15, q in {1/2,1/3,-1/2,9/10}", ok,
           detail);
}

// 4. Extremal closed forms vs brute force, n <= 40, flags surfaced
void criterion04() {
    VerifyOptions opt;
    opt.n_max = 40;
    bool ok = true;
    std::string detail;

    for (const char* suite : {"extremal-all", "extremal-odd"}) {
        const auto reports = run_verify_suite(suite, opt);
        if (!suite_clean(reports, /*allow_paper_flags=*/false)) {
            ok = false;
            detail = suite;
        }
    }

    // distinct and rr: witness-derived values must match brute force for every
    // n; the two documented families appear as paper-flagged discrepancies
    int flagged_distinct = 0;
    for (const auto& rep : run_verify_suite("extremal-distinct", opt)) {
        if (rep.status == VerifyStatus::Discrepancy) {
            if (!rep.paper_flagged) {
                ok = false;
                detail = rep.identity;
            } else {
                ++flagged_distinct;
            }
        }
    }
    if (flagged_distinct != 6) {  // n = 4, 8, 13, 19, 26, 34
        ok = false;
        detail = "expected 6 flagged decomposition gaps, saw " + std::to_string(flagged_distinct);
    }

    int flagged_rr = 0;
    for (const auto& rep : run_verify_suite("extremal-rr", opt)) {
        if (rep.status == VerifyStatus::Discrepancy) {
            if (!rep.paper_flagged) {
                ok = false;
                detail = rep.identity;
            } else {
                ++flagged_rr;
            }
        }
    }
    if (flagged_rr != 5) {  // case v at n = k(k+3): 4, 10, 18, 28, 40
        ok = false;
        detail = "expected 5 flagged case-v values, saw " + std::to_string(flagged_rr);
    }

    report(4, "extremal closed forms equal brute force for n <= 40 (flags surfaced)", ok, detail);
}

// 5. Minimum size for fixed norm vs exhaustive search, nu <= 300
void criterion05() {
    VerifyOptions opt;
    opt.nu_max = 300;
    report(5, "min-size closed form equals exhaustive search for nu <= 300",
           suite_clean(run_verify_suite("min-size", opt), false));
}

// 6. p_dot series coefficients equal enumeration sums, n <= 30
void criterion06() {
    const auto counts = dotted_diagram_counts(30);
    bool ok = true;
    for (unsigned n = 0; n <= 30; ++n) {
        mpz_class by_enum;
        for_each_partition(n, PartitionClass::all(), [&](const Partition& lambda) {
            by_enum += lambda.norm();
            return true;
        });
        ok = ok && counts[n] == by_enum;
    }
    report(6, "dotted diagram series equals enumeration sums exactly for n <= 30", ok);
}

// 7. Zeta closed forms at 1e-8 with consistent tail bounds
void criterion07() {
    const double tol = 1e-8;
    struct Case {
        const char* label;
        EvalResult eval;
        double target;
    };
    const std::vector<Case> cases{
        {"primes s=2", partition_zeta_product(PartSetSpec::primes(), 2.0, tol),
         M_PI * M_PI / 6.0},
        {"even s=2", partition_zeta_product(PartSetSpec::even_integers(), 2.0, tol), M_PI / 2.0},
        {"distinct s=2", distinct_zeta(2.0, tol), std::sinh(M_PI) / M_PI},
        {"nuclear s=3", partition_zeta_product(PartSetSpec::integers_from(2), 3.0, tol),
         3.0 * M_PI / std::cosh(0.5 * M_PI * std::sqrt(3.0))},
    };
    bool ok = true;
    std::string detail;
    for (const Case& c : cases) {
        const double err = std::abs(c.eval.value - c.target);
        const bool within = err <= tol;
        const bool consistent = c.eval.tail_bound.has_value() &&
                                err <= *c.eval.tail_bound + 64e-16 * std::abs(c.target);
        if (!(within && consistent)) {
            ok = false;
            detail = std::string(c.label) + " err=" + std::to_string(err);
        }
    }
    report(7, "zeta closed forms within 1e-8 with consistent tail bounds", ok, detail);
}

// 8. Fixed-length family: exact for k <= 6; direct truncation at M=1e4
//    within 1e-4 (relative) for k <= 3
void criterion08() {
    bool ok = true;
    std::string detail;
    for (unsigned k = 1; k <= 6; ++k)
        ok = ok && fixed_length_zeta_faa_exact(2, k) == fixed_length_zeta_closed_s2(k);
    if (!ok) detail = "exact family mismatch";
    for (unsigned k = 1; k <= 3 && ok; ++k) {
        const double exact = fixed_length_zeta_faa_exact(2, k).to_double();
        const double direct = fixed_length_zeta_direct(2.0, k, 10000).value;
        const double abs_err = exact - direct;
        const double rel_err = abs_err / exact;
        std::printf("  criterion 8, k=%u: direct=%.10f exact=%.10f abs_err=%.3e rel_err=%.3e\n",
                    k, direct, exact, abs_err, rel_err);
        if (!(direct <= exact && rel_err >= 0 && rel_err <= 1e-4)) {
            ok = false;
            detail = "k=" + std::to_string(k) + " rel_err=" + std::to_string(rel_err);
        }
    }
    report(8, "fixed-length zeta: exact family k <= 6; direct M=1e4 within 1e-4 for k <= 3", ok,
           detail);
}

// 9. Golden ratio series, 13 terms, 1e-12
void criterion09() {
    const double sum = golden_ratio_series(13).value;
    const double err = std::abs(sum - golden_ratio_target());
    report(9, "golden-ratio series (k <= 12) within 1e-12 of phi*pi/5", err <= 1e-12,
           "err=" + std::to_string(err));
}

// 10. Lehmer limits at n = 2000 with the 200 -> 2000 trend check
void criterion10() {
    VerifyOptions opt;
    opt.n_max = 2000;
    report(10, "Lehmer limit checks at n=2000 (0.05 band plus trend)",
           suite_clean(run_verify_suite("lehmer-limit", opt), false));
}

// 11. E[m_i] = 1/i exactly for n <= 18; sampler chi-square at n=6
void criterion11() {
    bool ok = true;
    std::string detail;
    for (std::uint64_t n = 1; n <= 18 && ok; ++n)
        for (std::uint64_t i = 1; i <= n; ++i) {
            mpq_class expect(1, i);
            expect.canonicalize();
            if (macmahon_expected_multiplicity(n, i) != expect) {
                ok = false;
                detail = "n=" + std::to_string(n) + ",i=" + std::to_string(i);
                break;
            }
        }

    // chi-square goodness of fit: n=6, 1e5 samples, 11 categories
    const auto lambdas = enumerate_partitions(6, PartitionClass::all());
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < lambdas.size(); ++i) index[lambdas[i].to_string()] = i;
    std::vector<double> expected(lambdas.size());
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        expected[i] = mpq_get_d(macmahon_coeff(lambdas[i]).get_mpq_t()) * 100000.0;
    std::vector<double> observed(lambdas.size(), 0.0);
    std::mt19937_64 rng(20260809);
    for (int t = 0; t < 100000; ++t) observed[index.at(sample_macmahon(6, rng).to_string())] += 1;
    double stat = 0.0;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        const double d = observed[i] - expected[i];
        stat += d * d / expected[i];
    }
    // chi-square critical value, 10 degrees of freedom, significance 0.001
    const double critical = 29.58829844507442;
    std::printf("  criterion 11: chi-square statistic %.4f against critical %.4f (df=10)\n", stat,
                critical);
    if (stat >= critical) {
        ok = false;
        detail = "chi-square " + std::to_string(stat);
    }
    report(11, "E[m_i] = 1/i exactly (n <= 18); sampler chi-square at n=6 passes", ok, detail);
}

// 12. Partition phi: divisor sums exact for n <= 18; Dirichlet factor
//     identity exact for n = 2..50 at s=3; primes product within 1e-8
void criterion12() {
    bool ok = true;
    std::string detail;
    for (unsigned n = 0; n <= 18 && ok; ++n)
        for_each_partition(n, PartitionClass::all(), [&](const Partition& lambda) {
            if (phi_divisor_sum_check(lambda).status != VerifyStatus::ExactPass) {
                ok = false;
                detail = lambda.to_string();
                return false;
            }
            return true;
        });
    if (phi_dirichlet_factor_identity_check(50, 3).status != VerifyStatus::ExactPass) {
        ok = false;
        detail = "factor identity";
    }
    const VerifyReport primes = phi_dirichlet_check(PartSetSpec::primes(), 3.0, 1e-8);
    if (primes.status != VerifyStatus::NumericPass) {
        ok = false;
        detail = "primes product err=" + (primes.error ? std::to_string(*primes.error) : "?");
    }
    report(12, "partition phi: divisor sums (n <= 18), factor identity, primes product 1e-8", ok,
           detail);
}

// 13. Multiplicative partition counts vs brute force (nu <= 200); nuclear
//     Dirichlet partial sum within 1e-3 of the Euler product
void criterion13() {
    bool ok = true;
    std::string detail;
    for (std::uint64_t nu = 1; nu <= 200; ++nu) {
        const auto witnesses = nuclear_partitions_of_norm(nu);
        bool all_valid = witnesses.size() == multiplicative_partitions(nu);
        for (const Partition& lambda : witnesses)
            all_valid = all_valid && lambda.norm() == mpz_class(static_cast<unsigned long>(nu)) &&
                        PartitionClass::nuclear().contains(lambda);
        if (!all_valid) {
            ok = false;
            detail = "nu=" + std::to_string(nu);
            break;
        }
    }
    const double product = partition_zeta_product(PartSetSpec::integers_from(2), 3.0, 1e-8).value;
    const double partial = nuclear_zeta_dirichlet(3.0, 5000).value;
    const double gap = std::abs(product - partial);
    std::printf("  criterion 13: partial sum %.10f vs Euler product %.10f (gap %.3e)\n", partial,
                product, gap);
    if (!(partial <= product + 1e-8 && gap <= 1e-3)) {
        ok = false;
        detail = "gap=" + std::to_string(gap);
    }
    report(13, "multiplicative partitions vs brute force (nu <= 200); Dirichlet sum vs product",
           ok, detail);
}

// 14. Non-reproducible statements are reported, not gated
void criterion14() {
    bool saw_stieltjes = false, saw_k0 = false;
    for (const auto& rep : run_verify_suite("stieltjes", {}))
        saw_stieltjes = saw_stieltjes || rep.status == VerifyStatus::Skipped;
    for (const auto& rep : run_verify_suite("pennthm", {}))
        if (rep.identity == "pennthm/k=0-formal" && rep.status == VerifyStatus::Skipped)
            saw_k0 = true;
    report(14, "Stieltjes estimate and formal k=0 value reported side by side, not gated",
           saw_stieltjes && saw_k0);
}

}  // namespace

int main() {
    criterion01();
    criterion02();
    criterion03();
    criterion04();
    criterion05();
    criterion06();
    criterion07();
    criterion08();
    criterion09();
    criterion10();
    criterion11();
    criterion12();
    criterion13();
    criterion14();
    std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
