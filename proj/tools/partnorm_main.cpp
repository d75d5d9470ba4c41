// partnorm: enumeration, norm statistics, zeta evaluations, sequence export,
// and the identity-verification harness on the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "partnorm/partition.hpp"
#include "partnorm/series.hpp"
#include "partnorm/stats.hpp"
#include "partnorm/verify.hpp"
#include "partnorm/zeta.hpp"

using json = nlohmann::json;
using namespace partnorm;

namespace {

constexpr std::uint64_t kDefaultSeed = 20260809;

json partition_row(const Partition& lambda) {
    json row;
    row["parts"] = lambda.parts();
    row["size"] = lambda.size();
    row["length"] = lambda.length();
    row["norm"] = lambda.norm().get_str();
    row["rank"] = lambda.rank();
    return row;
}

void print_partition_csv(const Partition& lambda) {
    std::string parts;
    for (std::uint64_t p : lambda.parts()) {
        if (!parts.empty()) parts += ' ';
        parts += std::to_string(p);
    }
    std::cout << parts << ',' << lambda.size() << ',' << lambda.length() << ','
              << lambda.norm().get_str() << ',' << lambda.rank() << '\n';
}

void stream_partitions(const std::vector<Partition>& lambdas, const std::string& format) {
    if (format == "csv") {
        std::cout << "parts,size,length,norm,rank\n";
        for (const Partition& lambda : lambdas) print_partition_csv(lambda);
    } else {
        for (const Partition& lambda : lambdas) std::cout << partition_row(lambda).dump() << '\n';
    }
}

int cmd_enum(std::uint64_t n, const std::string& class_name, const std::string& format) {
    const PartitionClass cls = PartitionClass::parse(class_name);
    stream_partitions(enumerate_partitions(n, cls), format);
    return 0;
}

std::vector<std::pair<std::uint64_t, std::string>> sequence_terms(const std::string& name,
                                                                  std::uint64_t n_max) {
    std::vector<std::pair<std::uint64_t, std::string>> terms;
    const auto push = [&](std::uint64_t n, std::string v) { terms.emplace_back(n, std::move(v)); };
    if (name == "p") {
        const auto p = partition_numbers(static_cast<unsigned>(n_max));
        for (std::uint64_t n = 0; n <= n_max; ++n) push(n, p[n].get_str());
    } else if (name == "p-dot") {
        const auto counts = dotted_diagram_counts(static_cast<unsigned>(n_max));
        for (std::uint64_t n = 0; n <= n_max; ++n) push(n, counts[n].get_str());
    } else if (name == "max-norm") {
        for (std::uint64_t n = 0; n <= n_max; ++n) push(n, max_norm(n).value.get_str());
    } else if (name == "max-norm-odd") {
        for (std::uint64_t n = 0; n <= n_max; ++n) push(n, max_norm_odd(n).value.get_str());
    } else if (name == "max-norm-distinct") {
        for (std::uint64_t n = 0; n <= n_max; ++n) push(n, max_norm_distinct(n).value.get_str());
    } else if (name == "max-norm-rr") {
        for (std::uint64_t n = 0; n <= n_max; ++n) push(n, max_norm_rr(n).value.get_str());
    } else if (name == "lehmer") {
        const auto sums = lehmer_sums(static_cast<unsigned>(n_max));
        for (std::uint64_t n = 0; n <= n_max; ++n) push(n, sums[n].get_str());
    } else if (name == "lehmer-distinct") {
        const auto sums = lehmer_sums_distinct(static_cast<unsigned>(n_max));
        for (std::uint64_t n = 0; n <= n_max; ++n) push(n, sums[n].get_str());
    } else if (name == "mult-partitions") {
        const auto counts = multiplicative_partition_counts(n_max);
        for (std::uint64_t nu = 1; nu <= n_max; ++nu) push(nu, std::to_string(counts[nu]));
    } else {
        throw std::invalid_argument(
            "unknown sequence: " + name +
            " (expected p, p-dot, max-norm, max-norm-odd, max-norm-distinct, max-norm-rr, "
            "lehmer, lehmer-distinct, mult-partitions)");
    }
    return terms;
}

// Series export: a JSON array of {num, den} strings, arbitrary precision safe.
int cmd_series(const std::string& name, unsigned order, const mpq_class& c, int sign) {
    Series s(0);
    if (name == "euler") {
        s = euler_partition_series(order);
    } else if (name == "p-dot") {
        s = weighted_partition_series(order, [](unsigned n) { return mpq_class(n); });
    } else if (name == "lehmer") {
        s = weighted_partition_series(order, [](unsigned n) { return mpq_class(1, n); });
    } else if (name == "lehmer-distinct") {
        s = weighted_distinct_series(order, [](unsigned n) { return mpq_class(1, n); });
    } else if (name == "sigma-power") {
        s = sigma_power_expansion(c, sign, order);
    } else {
        throw std::invalid_argument(
            "unknown series: " + name +
            " (expected euler, p-dot, lehmer, lehmer-distinct, sigma-power)");
    }
    json doc;
    doc["name"] = name;
    doc["order"] = order;
    json coeffs = json::array();
    for (unsigned k = 0; k <= order; ++k) {
        json entry;
        entry["num"] = s[k].get_num().get_str();
        entry["den"] = s[k].get_den().get_str();
        coeffs.push_back(entry);
    }
    doc["coeffs"] = coeffs;
    std::cout << doc.dump() << '\n';
    return 0;
}

int cmd_seq(const std::string& name, std::uint64_t n_max, const std::string& format) {
    const auto terms = sequence_terms(name, n_max);
    if (format == "json") {
        json doc;
        doc["name"] = name;
        json list = json::array();
        for (const auto& [n, v] : terms) list.push_back(json::array({n, v}));
        doc["terms"] = list;
        std::cout << doc.dump() << '\n';
    } else {  // b-file
        for (const auto& [n, v] : terms) std::cout << n << ' ' << v << '\n';
    }
    return 0;
}

void print_eval(const EvalResult& r, const std::string& format) {
    if (format == "json") {
        json doc;
        doc["value"] = r.value;
        if (r.tail_bound.has_value())
            doc["tail_bound"] = *r.tail_bound;
        else
            doc["tail_bound"] = nullptr;
        doc["terms_used"] = r.terms_used;
        std::cout << doc.dump() << '\n';
        return;
    }
    std::printf("value=%.15g tail_bound=", r.value);
    if (r.tail_bound.has_value())
        std::printf("%.6g", *r.tail_bound);
    else
        std::printf("unavailable");
    std::printf(" terms_used=%llu\n", static_cast<unsigned long long>(r.terms_used));
}

void print_pi_value(const PiValue& v, const std::string& format) {
    if (format == "json") {
        json doc;
        doc["coeff"] = v.coeff.get_str();
        doc["power"] = v.power;
        doc["value"] = v.to_double();
        std::cout << doc.dump() << '\n';
        return;
    }
    std::cout << v.to_string() << '\n';
}

json report_to_json(const VerifyReport& rep) {
    json doc;
    doc["identity"] = rep.identity;
    doc["status"] = to_string(rep.status);
    doc["lhs"] = rep.lhs;
    doc["rhs"] = rep.rhs;
    if (rep.error.has_value())
        doc["error"] = *rep.error;
    else
        doc["error"] = nullptr;
    doc["notes"] = rep.notes;
    doc["paper_flagged"] = rep.paper_flagged;
    return doc;
}

void print_report_text(const VerifyReport& rep) {
    std::cout << '[' << to_string(rep.status) << "] " << rep.identity << " lhs=" << rep.lhs
              << " rhs=" << rep.rhs;
    if (rep.error.has_value()) std::printf(" err=%.6g", *rep.error);
    if (rep.paper_flagged) std::cout << " [paper-flag]";
    if (!rep.notes.empty()) std::cout << " note=" << rep.notes;
    std::cout << '\n';
}

int cmd_verify(const std::string& suite, const VerifyOptions& options,
               const std::string& format) {
    const auto reports =
        suite == "all" ? run_all_verify_suites(options) : run_verify_suite(suite, options);
    int discrepancies = 0, flagged = 0;
    for (const VerifyReport& rep : reports) {
        if (format == "jsonl")
            std::cout << report_to_json(rep).dump() << '\n';
        else
            print_report_text(rep);
        if (rep.status == VerifyStatus::Discrepancy) {
            ++discrepancies;
            if (rep.paper_flagged) ++flagged;
        }
    }
    const bool ok = verify_passes(reports, options.allow_paper_flags);
    if (format != "jsonl")
        std::printf("%zu reports, %d discrepancies (%d paper-flagged) -> %s\n", reports.size(),
                    discrepancies, flagged, ok ? "pass" : "fail");
    return ok ? 0 : 1;
}

int cmd_sample(std::uint64_t n, std::uint64_t count, std::uint64_t seed,
               const std::string& format) {
    std::mt19937_64 rng(seed);
    std::vector<Partition> rows;
    rows.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) rows.push_back(sample_macmahon(n, rng));
    stream_partitions(rows, format);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition norm toolkit"};
    app.require_subcommand(1);
    int exit_code = 0;

    // enum
    std::uint64_t enum_n = 0;
    std::string enum_class = "all", enum_format = "jsonl";
    auto* enum_cmd = app.add_subcommand("enum", "enumerate partitions of n in a class");
    enum_cmd->add_option("n", enum_n, "partition size")->required();
    enum_cmd->add_option("--class", enum_class, "all|distinct|odd|even|prime|nuclear|rr|gg|schur");
    enum_cmd->add_option("--format", enum_format, "jsonl|csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    enum_cmd->callback([&] { exit_code = cmd_enum(enum_n, enum_class, enum_format); });

    // seq
    std::string seq_name;
    std::uint64_t seq_n_max = 0;
    std::string seq_format = "bfile";
    auto* seq_cmd = app.add_subcommand("seq", "export a sequence in b-file or JSON form");
    seq_cmd->add_option("name", seq_name, "sequence name")->required();
    seq_cmd->add_option("n_max", seq_n_max, "last index")->required();
    seq_cmd->add_option("--format", seq_format, "bfile|json")
        ->check(CLI::IsMember({"bfile", "json"}));
    seq_cmd->callback([&] { exit_code = cmd_seq(seq_name, seq_n_max, seq_format); });

    // series export
    std::string series_name;
    unsigned series_order = 0;
    std::string series_c = "1";
    int series_sign = 1;
    auto* series_cmd =
        app.add_subcommand("series", "export exact series coefficients as {num, den} JSON");
    series_cmd->add_option("name", series_name,
                           "euler|p-dot|lehmer|lehmer-distinct|sigma-power")
        ->required();
    series_cmd->add_option("order", series_order, "truncation order")->required();
    series_cmd->add_option("--c", series_c, "exponent parameter for sigma-power (rational)");
    series_cmd->add_option("--sign", series_sign, "+1 or -1 for sigma-power")
        ->check(CLI::IsMember({1, -1}));
    series_cmd->callback([&] {
        mpq_class c(series_c);
        c.canonicalize();
        exit_code = cmd_series(series_name, series_order, c, series_sign);
    });

    // zeta family
    auto* zeta_cmd = app.add_subcommand("zeta", "partition zeta evaluations");
    zeta_cmd->require_subcommand(1);
    std::string zeta_format = "text";
    double zs = 2.0, ztol = 1e-8;
    std::string zset = "primes";
    std::uint64_t znu_max = 5000, zpart_bound = 0;
    unsigned zk = 1, zterms = 13;
    bool zexact = false;

    auto* zprod = zeta_cmd->add_subcommand("product", "Euler product over a part set");
    zprod->add_option("--set", zset, "primes|even|from:<b>|list:a,b,c");
    zprod->add_option("--s", zs, "exponent, s > 1")->required();
    zprod->add_option("--tol", ztol, "absolute tolerance");
    zprod->add_option("--format", zeta_format, "text|json");
    zprod->callback([&] {
        print_eval(partition_zeta_product(PartSetSpec::parse(zset), zs, ztol), zeta_format);
    });

    auto* zdist = zeta_cmd->add_subcommand("distinct", "product over distinct parts");
    zdist->add_option("--s", zs, "exponent, s > 1")->required();
    zdist->add_option("--tol", ztol, "absolute tolerance");
    zdist->add_option("--format", zeta_format, "text|json");
    zdist->callback([&] { print_eval(distinct_zeta(zs, ztol), zeta_format); });

    auto* znuc = zeta_cmd->add_subcommand("nuclear-dirichlet",
                                          "partial sums of the nuclear Dirichlet series");
    znuc->add_option("--s", zs, "exponent, s > 1")->required();
    znuc->add_option("--nu-max", znu_max, "number of terms");
    znuc->add_option("--format", zeta_format, "text|json");
    znuc->callback([&] { print_eval(nuclear_zeta_dirichlet(zs, znu_max), zeta_format); });

    auto* zfix = zeta_cmd->add_subcommand("fixed-length", "zeta over partitions of length k");
    zfix->add_option("--s", zs, "exponent")->required();
    zfix->add_option("--k", zk, "length")->required();
    zfix->add_flag("--exact", zexact, "exact pi-power path (even integer s)");
    zfix->add_option("--part-bound", zpart_bound, "direct truncation with this part bound");
    zfix->add_option("--tol", ztol, "tolerance for the float path");
    zfix->add_option("--format", zeta_format, "text|json");
    zfix->callback([&] {
        if (zexact) {
            if (zs != std::floor(zs) || zs < 2 || static_cast<unsigned>(zs) % 2 != 0)
                throw std::domain_error("--exact requires an even integer s >= 2");
            print_pi_value(fixed_length_zeta_faa_exact(static_cast<unsigned>(zs), zk),
                           zeta_format);
        } else if (zpart_bound > 0) {
            print_eval(fixed_length_zeta_direct(zs, zk, zpart_bound), zeta_format);
        } else {
            print_eval(fixed_length_zeta_faa(zs, zk, ztol), zeta_format);
        }
    });

    auto* zgold = zeta_cmd->add_subcommand("golden", "golden-ratio series partial sums");
    zgold->add_option("--terms", zterms, "number of terms");
    zgold->add_option("--format", zeta_format, "text|json");
    zgold->callback([&] { print_eval(golden_ratio_series(zterms), zeta_format); });

    // verify
    std::string verify_suite = "all", verify_format = "text";
    VerifyOptions verify_options;
    unsigned verify_n_max = 0;
    std::uint64_t verify_nu_max = 0;
    double verify_tol = 0.0;
    auto* verify_cmd = app.add_subcommand("verify", "run identity-verification suites");
    verify_cmd->add_option("suite", verify_suite, "suite name or 'all'");
    verify_cmd->add_option("--n-max", verify_n_max, "override the suite's n ceiling");
    verify_cmd->add_option("--nu-max", verify_nu_max, "override the suite's norm ceiling");
    verify_cmd->add_option("--tol", verify_tol, "override the suite's tolerance");
    verify_cmd->add_flag("--allow-paper-flags,!--no-allow-paper-flags",
                         verify_options.allow_paper_flags,
                         "tolerate the two documented paper-flagged discrepancy families");
    verify_cmd->add_option("--format", verify_format, "text|jsonl")
        ->check(CLI::IsMember({"text", "jsonl"}));
    verify_cmd->callback([&] {
        if (verify_n_max > 0) verify_options.n_max = verify_n_max;
        if (verify_nu_max > 0) verify_options.nu_max = verify_nu_max;
        if (verify_tol > 0) verify_options.tol = verify_tol;
        if (verify_suite != "all" && !is_verify_suite(verify_suite))
            throw std::invalid_argument("unknown verify suite: " + verify_suite);
        exit_code = cmd_verify(verify_suite, verify_options, verify_format);
    });

    // sample
    std::uint64_t sample_n = 0, sample_count = 1, sample_seed = kDefaultSeed;
    std::string sample_format = "jsonl";
    auto* sample_cmd =
        app.add_subcommand("sample", "draw partitions from the MacMahon distribution");
    sample_cmd->add_option("n", sample_n, "partition size")->required();
    sample_cmd->add_option("--count", sample_count, "number of draws");
    sample_cmd->add_option("--seed", sample_seed, "RNG seed (fixed default for reproducibility)");
    sample_cmd->add_option("--format", sample_format, "jsonl|csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    sample_cmd->callback(
        [&] { exit_code = cmd_sample(sample_n, sample_count, sample_seed, sample_format); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
