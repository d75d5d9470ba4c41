#include "partnorm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "partnorm/config.hpp"
#include "partnorm/partition.hpp"
#include "partnorm/series.hpp"
#include "partnorm/stats.hpp"
#include "partnorm/zeta.hpp"

namespace partnorm {

const char* to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::ExactPass: return "ExactPass";
        case VerifyStatus::NumericPass: return "NumericPass";
        case VerifyStatus::Discrepancy: return "Discrepancy";
        case VerifyStatus::Skipped: return "Skipped";
    }
    return "?";
}

namespace {

std::string witness_list(const std::vector<Partition>& ws) {
    std::string out = "{";
    for (std::size_t i = 0; i < ws.size(); ++i) out += (i ? " " : "") + ws[i].to_string();
    return out + "}";
}

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(15);
    os << v;
    return os.str();
}

VerifyReport exact_report(std::string identity, bool equal, std::string lhs, std::string rhs,
                          std::string fail_note) {
    VerifyReport rep;
    rep.identity = std::move(identity);
    rep.lhs = std::move(lhs);
    rep.rhs = std::move(rhs);
    if (equal) {
        rep.status = VerifyStatus::ExactPass;
    } else {
        rep.status = VerifyStatus::Discrepancy;
        rep.notes = std::move(fail_note);
    }
    return rep;
}

bool same_extremal(const ExtremalResult& a, const ExtremalResult& b) {
    if (a.value != b.value) return false;
    auto wa = a.witnesses, wb = b.witnesses;
    std::sort(wa.begin(), wa.end(), lex_desc_less);
    std::sort(wb.begin(), wb.end(), lex_desc_less);
    return wa == wb;
}

// ---- suites ----------------------------------------------------------

std::vector<VerifyReport> suite_fine(const VerifyOptions& opt) {
    const unsigned n_max = opt.n_max.value_or(30);
    std::vector<VerifyReport> out;
    for (unsigned n = 0; n <= n_max; ++n) out.push_back(fine_identity_check(n));
    return out;
}

std::vector<VerifyReport> suite_macmahon_pf(const VerifyOptions& opt) {
    const unsigned n_max = opt.n_max.value_or(15);
    const std::vector<mpq_class> qs{mpq_class(1, 2), mpq_class(1, 3), mpq_class(-1, 2),
                                    mpq_class(9, 10)};
    std::vector<VerifyReport> out;
    for (unsigned n = 1; n <= n_max; ++n)
        for (const mpq_class& q : qs) out.push_back(macmahon_partial_fraction_check(n, q));
    return out;
}

std::vector<VerifyReport> suite_norm2(const VerifyOptions& opt) {
    const unsigned n_max = opt.n_max.value_or(30);
    const Series expansion = sigma_power_expansion(1, +1, n_max);
    const auto p = partition_numbers(n_max);
    std::vector<VerifyReport> out;
    for (unsigned n = 0; n <= n_max; ++n) {
        out.push_back(exact_report("norm2/n=" + std::to_string(n),
                                   expansion[n] == mpq_class(p[n]), expansion[n].get_str(),
                                   p[n].get_str(),
                                   "sigma-power sum differs from the pentagonal recurrence"));
    }
    return out;
}

std::vector<VerifyReport> suite_eq1(const VerifyOptions& opt) {
    const unsigned n_max = opt.n_max.value_or(15);
    std::vector<VerifyReport> out;
    for (unsigned n = 1; n <= n_max; ++n) {
        bool all_ok = true;
        std::string offender;
        for_each_partition(n, PartitionClass::all(), [&](const Partition& lambda) {
            // |lambda| = N(lambda) * sum over part occurrences 1/N(lambda/part)
            mpq_class acc;
            for (const PartCount& pc : lambda.freq()) {
                const mpq_class one_over(1, lambda.delete_part(pc.part).norm());
                acc += mpq_class(pc.mult) * one_over;
            }
            mpq_class lhs = mpq_class(lambda.norm()) * acc;
            lhs.canonicalize();
            if (lhs != mpq_class(lambda.size())) {
                all_ok = false;
                offender = lambda.to_string();
                return false;
            }
            return true;
        });
        out.push_back(exact_report("eq1/n=" + std::to_string(n), all_ok,
                                   "size via norm-weighted reciprocals", "size",
                                   "identity fails at " + offender));
    }
    return out;
}

std::vector<VerifyReport> suite_pdot(const VerifyOptions& opt) {
    const unsigned n_max = opt.n_max.value_or(30);
    const auto series_counts = dotted_diagram_counts(n_max);
    std::vector<VerifyReport> out;
    for (unsigned n = 0; n <= n_max; ++n) {
        mpz_class by_enum;
        for_each_partition(n, PartitionClass::all(), [&](const Partition& lambda) {
            by_enum += lambda.norm();
            return true;
        });
        out.push_back(exact_report("pdot/n=" + std::to_string(n), series_counts[n] == by_enum,
                                   series_counts[n].get_str(), by_enum.get_str(),
                                   "series coefficient differs from the enumeration sum"));
    }
    return out;
}

using ClosedFormFn = ExtremalResult (*)(std::uint64_t);

// For classes whose closed form covers the whole range (brute-force
// fallbacks below the closed form's range count as trivially agreeing).
std::vector<VerifyReport> extremal_suite(const std::string& name, ClosedFormFn closed_form,
                                         const PartitionClass& cls, std::uint64_t n_lo,
                                         const VerifyOptions& opt) {
    const unsigned n_max = opt.n_max.value_or(config::verify_ceiling());
    std::vector<VerifyReport> out;
    for (std::uint64_t n = n_lo; n <= n_max; ++n) {
        ExtremalResult closed = closed_form(n);
        ExtremalResult oracle = brute_extremal_norm(n, cls, ExtremalDirection::Max);
        closed.agreement = same_extremal(closed, oracle);
        VerifyReport rep;
        rep.identity = name + "/n=" + std::to_string(n);
        rep.lhs = closed.value.get_str() + " " + witness_list(closed.witnesses);
        rep.rhs = oracle.value.get_str() + " " + witness_list(oracle.witnesses);
        if (!*closed.agreement) {
            rep.status = VerifyStatus::Discrepancy;
            rep.notes = "closed form disagrees with the brute-force oracle";
        } else {
            rep.status = VerifyStatus::ExactPass;
            if (closed.source == ExtremalSource::BruteForce)
                rep.notes = "below the closed form's range; oracle value used";
        }
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<VerifyReport> suite_extremal_all(const VerifyOptions& opt) {
    return extremal_suite("extremal-all", &max_norm, PartitionClass::all(), 1, opt);
}

std::vector<VerifyReport> suite_extremal_odd(const VerifyOptions& opt) {
    return extremal_suite("extremal-odd", &max_norm_odd, PartitionClass::odd_parts(), 1, opt);
}

std::vector<VerifyReport> suite_extremal_distinct(const VerifyOptions& opt) {
    const unsigned n_max = opt.n_max.value_or(config::verify_ceiling());
    std::vector<VerifyReport> out;
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        ExtremalResult closed = max_norm_distinct(n);
        ExtremalResult oracle =
            brute_extremal_norm(n, PartitionClass::distinct(), ExtremalDirection::Max);
        closed.agreement = same_extremal(closed, oracle);
        VerifyReport rep;
        rep.identity = "extremal-distinct/n=" + std::to_string(n);
        rep.lhs = closed.value.get_str() + " " + witness_list(closed.witnesses);
        rep.rhs = oracle.value.get_str() + " " + witness_list(oracle.witnesses);
        if (!*closed.agreement) {
            rep.status = VerifyStatus::Discrepancy;
            rep.notes = "closed form disagrees with the brute-force oracle";
        } else if (!distinct_closed_form_applies(n)) {
            rep.status = VerifyStatus::Discrepancy;
            rep.paper_flagged = true;
            rep.notes = "no decomposition n = T_k + j with -1 <= j <= k-2 exists at this n, "
                        "though one is asserted to exist uniquely; oracle value used";
        } else {
            rep.status = VerifyStatus::ExactPass;
        }
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<VerifyReport> suite_extremal_rr(const VerifyOptions& opt) {
    const unsigned n_max = opt.n_max.value_or(config::verify_ceiling());
    std::vector<VerifyReport> out;
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        ExtremalResult closed = max_norm_rr(n);
        ExtremalResult oracle =
            brute_extremal_norm(n, PartitionClass::rogers_ramanujan(), ExtremalDirection::Max);
        closed.agreement = same_extremal(closed, oracle);
        const RRCaseInfo info = rr_case_info(n);
        const bool formula_matches = info.paper_value == mpq_class(closed.value);

        VerifyReport rep;
        rep.identity = "extremal-rr/n=" + std::to_string(n) + ",case=" +
                       std::to_string(info.case_index);
        rep.lhs = closed.value.get_str() + " " + witness_list(closed.witnesses);
        rep.rhs = oracle.value.get_str() + " " + witness_list(oracle.witnesses);
        if (!*closed.agreement) {
            rep.status = VerifyStatus::Discrepancy;
            rep.notes = "constructed witness disagrees with the brute-force oracle";
        } else if (!formula_matches) {
            rep.status = VerifyStatus::Discrepancy;
            rep.paper_flagged = info.case_index == 5;
            rep.lhs = "stated formula value " + info.paper_value.get_str();
            rep.rhs = "witness/oracle value " + closed.value.get_str();
            rep.notes = info.case_index == 5
                            ? "stated case-v formula disagrees with the constructed witness; "
                              "the witness (confirmed by the oracle) is authoritative"
                            : "stated formula disagrees with the witness outside the known case-v family";
        } else {
            rep.status = VerifyStatus::ExactPass;
        }
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<VerifyReport> suite_min_size(const VerifyOptions& opt) {
    const std::uint64_t nu_max = opt.nu_max.value_or(300);
    std::vector<VerifyReport> out;
    for (std::uint64_t nu = 1; nu <= nu_max; ++nu) {
        const MinSizeResult closed = min_size_for_norm(nu);
        // oracle: exhaustive minimum over all nuclear partitions of norm nu
        std::uint64_t best = ~0ull;
        std::vector<Partition> best_witnesses;
        for (const Partition& lambda : nuclear_partitions_of_norm(nu)) {
            if (lambda.size() < best) {
                best = lambda.size();
                best_witnesses.assign(1, lambda);
            } else if (lambda.size() == best) {
                best_witnesses.push_back(lambda);
            }
        }
        bool ok = closed.size == best;
        for (const Partition& w : closed.witnesses)
            ok = ok && w.norm() == mpz_class(static_cast<unsigned long>(nu)) && w.size() == closed.size;
        auto ws = closed.witnesses;
        std::sort(ws.begin(), ws.end(), lex_desc_less);
        std::sort(best_witnesses.begin(), best_witnesses.end(), lex_desc_less);
        ok = ok && ws == best_witnesses;
        out.push_back(exact_report("min-size/nu=" + std::to_string(nu), ok,
                                   std::to_string(closed.size) + " " + witness_list(ws),
                                   std::to_string(best) + " " + witness_list(best_witnesses),
                                   "closed form disagrees with exhaustive search"));
    }
    return out;
}

std::vector<VerifyReport> suite_e_mi(const VerifyOptions& opt) {
    const unsigned n_max = opt.n_max.value_or(18);
    std::vector<VerifyReport> out;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        bool all_ok = true;
        std::string offender;
        for (std::uint64_t i = 1; i <= n; ++i) {
            mpq_class expect(1, i);
            expect.canonicalize();
            if (macmahon_expected_multiplicity(n, i) != expect) {
                all_ok = false;
                offender = "i=" + std::to_string(i);
                break;
            }
        }
        out.push_back(exact_report("e-mi/n=" + std::to_string(n), all_ok, "E[m_i] by enumeration",
                                   "1/i", "expected multiplicity differs at " + offender));
    }
    return out;
}

std::vector<VerifyReport> suite_lehmer_limit(const VerifyOptions& opt) {
    const unsigned n_max = opt.n_max.value_or(2000);
    const unsigned n_small = std::max(1u, n_max / 10);
    const double tol = opt.tol.value_or(0.05);
    const double target = std::exp(-euler_gamma());
    const auto sums = lehmer_sums(n_max);
    const auto sums_distinct = lehmer_sums_distinct(n_max);

    const auto dev = [&](const mpq_class& v, bool divide, unsigned n) {
        double x = mpq_get_d(v.get_mpq_t());
        if (divide) x /= n;
        return std::abs(x - target);
    };
    const double dev_all = dev(sums[n_max], true, n_max);
    const double dev_all_small = dev(sums[n_small], true, n_small);
    const double dev_d = dev(sums_distinct[n_max], false, n_max);
    const double dev_d_small = dev(sums_distinct[n_small], false, n_small);

    std::vector<VerifyReport> out;
    VerifyReport r1;
    r1.identity = "lehmer-limit/all,n=" + std::to_string(n_max);
    r1.lhs = format_double(mpq_get_d(sums[n_max].get_mpq_t()) / n_max);
    r1.rhs = format_double(target);
    r1.error = dev_all;
    r1.status = dev_all <= tol ? VerifyStatus::NumericPass : VerifyStatus::Discrepancy;
    if (r1.status == VerifyStatus::Discrepancy) r1.notes = "limit deviation above tolerance";
    out.push_back(r1);

    VerifyReport r2;
    r2.identity = "lehmer-limit/distinct,n=" + std::to_string(n_max);
    r2.lhs = format_double(mpq_get_d(sums_distinct[n_max].get_mpq_t()));
    r2.rhs = format_double(target);
    r2.error = dev_d;
    r2.status = dev_d <= tol ? VerifyStatus::NumericPass : VerifyStatus::Discrepancy;
    if (r2.status == VerifyStatus::Discrepancy) r2.notes = "limit deviation above tolerance";
    out.push_back(r2);

    VerifyReport r3;
    r3.identity = "lehmer-limit/trend,n=" + std::to_string(n_small) + "->" + std::to_string(n_max);
    r3.lhs = format_double(dev_all_small) + " / " + format_double(dev_d_small);
    r3.rhs = format_double(dev_all) + " / " + format_double(dev_d);
    const bool trend = dev_all < dev_all_small && dev_d < dev_d_small;
    r3.status = trend ? VerifyStatus::NumericPass : VerifyStatus::Discrepancy;
    if (!trend) r3.notes = "deviation did not shrink between the two scales";
    out.push_back(r3);
    return out;
}

VerifyReport closed_form_eval_report(const std::string& identity, const EvalResult& eval,
                                     double target, double tol) {
    VerifyReport rep;
    rep.identity = identity;
    rep.lhs = format_double(eval.value);
    rep.rhs = format_double(target);
    rep.error = std::abs(eval.value - target);
    const bool within = *rep.error <= tol;
    const bool bound_consistent =
        !eval.tail_bound.has_value() || *rep.error <= *eval.tail_bound + 64 * 1e-16 * std::abs(target);
    if (within && bound_consistent) {
        rep.status = VerifyStatus::NumericPass;
        rep.notes = eval.tail_bound ? "tail bound " + format_double(*eval.tail_bound) : "";
    } else {
        rep.status = VerifyStatus::Discrepancy;
        rep.notes = within ? "achieved error exceeds the reported tail bound"
                           : "value misses the closed form beyond tolerance";
    }
    return rep;
}

std::vector<VerifyReport> suite_zeta_closed_forms(const VerifyOptions& opt) {
    const double tol = opt.tol.value_or(1e-8);
    std::vector<VerifyReport> out;
    out.push_back(closed_form_eval_report(
        "zeta-closed-forms/primes,s=2", partition_zeta_product(PartSetSpec::primes(), 2.0, tol),
        M_PI * M_PI / 6.0, tol));
    out.push_back(closed_form_eval_report(
        "zeta-closed-forms/even,s=2",
        partition_zeta_product(PartSetSpec::even_integers(), 2.0, tol), M_PI / 2.0, tol));
    out.push_back(closed_form_eval_report("zeta-closed-forms/distinct,s=2",
                                          distinct_zeta(2.0, tol), std::sinh(M_PI) / M_PI, tol));
    out.push_back(closed_form_eval_report(
        "zeta-closed-forms/nuclear,s=3",
        partition_zeta_product(PartSetSpec::integers_from(2), 3.0, tol),
        3.0 * M_PI / std::cosh(0.5 * M_PI * std::sqrt(3.0)), tol));
    return out;
}

std::vector<VerifyReport> suite_pennthm(const VerifyOptions& opt) {
    const unsigned k_max = opt.n_max.value_or(6);
    const double rel_tol = opt.tol.value_or(1e-4);
    std::vector<VerifyReport> out;

    for (unsigned k = 1; k <= k_max; ++k) {
        const PiValue lhs = fixed_length_zeta_faa_exact(2, k);
        const PiValue rhs = fixed_length_zeta_closed_s2(k);
        out.push_back(exact_report("pennthm/exact,k=" + std::to_string(k), lhs == rhs,
                                   lhs.to_string(), rhs.to_string(),
                                   "fixed-length zeta disagrees with the closed form"));
    }

    bool powers_ok = true;
    for (unsigned m : {2u, 4u})
        for (unsigned k = 1; k <= k_max; ++k)
            powers_ok = powers_ok && fixed_length_zeta_faa_exact(m, k).power == m * k;
    out.push_back(exact_report("pennthm/pi-power-structure", powers_ok, "power = m*k",
                               "power = m*k", "a term escaped the pi^(mk) family"));

    for (unsigned k = 1; k <= std::min(3u, k_max); ++k) {
        const double exact = fixed_length_zeta_faa_exact(2, k).to_double();
        const EvalResult direct = fixed_length_zeta_direct(2.0, k, 10000);
        VerifyReport rep;
        rep.identity = "pennthm/direct,k=" + std::to_string(k) + ",M=10000";
        rep.lhs = format_double(direct.value);
        rep.rhs = format_double(exact);
        const double rel = std::abs(direct.value - exact) / exact;
        rep.error = rel;
        if (direct.value <= exact && rel <= rel_tol) {
            rep.status = VerifyStatus::NumericPass;
            rep.notes = "relative truncation error " + format_double(rel);
        } else {
            rep.status = VerifyStatus::Discrepancy;
            rep.notes = direct.value > exact ? "truncation exceeded the exact value"
                                             : "relative error above tolerance";
        }
        out.push_back(rep);
    }

    VerifyReport k0;
    k0.identity = "pennthm/k=0-formal";
    k0.lhs = "2^-2/(2^-1 - 1) * zeta_P({2}^0) = -1/2 (formal manipulation)";
    k0.rhs = "zeta(0) = -1/2 (analytic continuation)";
    k0.status = VerifyStatus::Skipped;
    k0.notes = "the closed-form operation rejects k = 0; the formal value is reported only";
    out.push_back(k0);
    return out;
}

std::vector<VerifyReport> suite_phi_sum(const VerifyOptions& opt) {
    const unsigned n_max = opt.n_max.value_or(18);
    std::vector<VerifyReport> out;
    for (unsigned n = 0; n <= n_max; ++n) {
        bool all_ok = true;
        std::string offender;
        for_each_partition(n, PartitionClass::all(), [&](const Partition& lambda) {
            if (phi_divisor_sum_check(lambda).status != VerifyStatus::ExactPass) {
                all_ok = false;
                offender = lambda.to_string();
                return false;
            }
            return true;
        });
        out.push_back(exact_report("phi-sum/n=" + std::to_string(n), all_ok,
                                   "sum of phi over subpartitions", "norm",
                                   "identity fails at " + offender));
    }
    return out;
}

std::vector<VerifyReport> suite_phi_dirichlet(const VerifyOptions& opt) {
    const double tol = opt.tol.value_or(1e-8);
    std::vector<VerifyReport> out;
    out.push_back(phi_dirichlet_factor_identity_check(50, 3));
    out.push_back(phi_dirichlet_check(PartSetSpec::explicit_list({2, 3, 5}), 3.0, tol));
    out.push_back(phi_dirichlet_check(PartSetSpec::primes(), 3.0, tol));
    return out;
}

std::vector<VerifyReport> suite_golden(const VerifyOptions& opt) {
    const unsigned terms = opt.n_max.value_or(13);
    const double tol = opt.tol.value_or(1e-12);
    const EvalResult sum = golden_ratio_series(terms);
    VerifyReport rep;
    rep.identity = "golden/terms=" + std::to_string(terms);
    rep.lhs = format_double(sum.value);
    rep.rhs = format_double(golden_ratio_target());
    rep.error = std::abs(sum.value - golden_ratio_target());
    rep.status = *rep.error <= tol ? VerifyStatus::NumericPass : VerifyStatus::Discrepancy;
    if (rep.status == VerifyStatus::Discrepancy) rep.notes = "series misses phi*pi/5";
    return {rep};
}

std::vector<VerifyReport> suite_change_of_vars(const VerifyOptions& opt) {
    const double tol = opt.tol.value_or(1e-6);
    return {change_of_variables_check(PartSetSpec::integers_from(2), 3.0, tol),
            change_of_variables_check(PartSetSpec::primes(), 2.0, tol)};
}

std::vector<VerifyReport> suite_stieltjes(const VerifyOptions& opt) {
    const unsigned n = opt.n_max.value_or(2000);
    const ExpectedNorm en = expected_norm(n);
    const double log_n = std::log(static_cast<double>(n));
    const double corollary = -stieltjes_gamma1() * n;
    const double log_asymptote = 0.5 * log_n * log_n + stieltjes_gamma1();

    VerifyReport rep;
    rep.identity = "stieltjes/n=" + std::to_string(n);
    rep.lhs = "ln E[N] = " + format_double(en.log_sum) +
              " (vs (ln n)^2/2 + gamma_1 = " + format_double(log_asymptote) + ")";
    rep.rhs = "-gamma_1 * n = " + format_double(corollary);
    rep.status = VerifyStatus::Skipped;
    rep.notes = "stated estimate E[N] ~ e^(-gamma_1 n) is reported side by side only; "
                "ln E[N] tracks (ln n)^2/2 + gamma_1, not a linear multiple of n";
    return {rep};
}

using SuiteFn = std::vector<VerifyReport> (*)(const VerifyOptions&);

const std::map<std::string, SuiteFn>& suite_table() {
    static const std::map<std::string, SuiteFn> table{
        {"change-of-vars", &suite_change_of_vars},
        {"e-mi", &suite_e_mi},
        {"eq1", &suite_eq1},
        {"extremal-all", &suite_extremal_all},
        {"extremal-distinct", &suite_extremal_distinct},
        {"extremal-odd", &suite_extremal_odd},
        {"extremal-rr", &suite_extremal_rr},
        {"fine", &suite_fine},
        {"golden", &suite_golden},
        {"lehmer-limit", &suite_lehmer_limit},
        {"macmahon-pf", &suite_macmahon_pf},
        {"min-size", &suite_min_size},
        {"norm2", &suite_norm2},
        {"pdot", &suite_pdot},
        {"pennthm", &suite_pennthm},
        {"phi-dirichlet", &suite_phi_dirichlet},
        {"phi-sum", &suite_phi_sum},
        {"stieltjes", &suite_stieltjes},
        {"zeta-closed-forms", &suite_zeta_closed_forms},
    };
    return table;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : suite_table()) names.push_back(name);
    return names;
}

bool is_verify_suite(const std::string& name) { return suite_table().count(name) > 0; }

std::vector<VerifyReport> run_verify_suite(const std::string& name, const VerifyOptions& options) {
    auto it = suite_table().find(name);
    if (it == suite_table().end()) throw std::invalid_argument("unknown verify suite: " + name);
    return it->second(options);
}

std::vector<VerifyReport> run_all_verify_suites(const VerifyOptions& options) {
    std::vector<VerifyReport> out;
    for (const auto& [name, fn] : suite_table()) {
        auto reports = fn(options);
        out.insert(out.end(), reports.begin(), reports.end());
    }
    return out;
}

bool verify_passes(const std::vector<VerifyReport>& reports, bool allow_paper_flags) {
    for (const VerifyReport& rep : reports) {
        if (rep.status != VerifyStatus::Discrepancy) continue;
        if (!(allow_paper_flags && rep.paper_flagged)) return false;
    }
    return true;
}

}  // namespace partnorm
