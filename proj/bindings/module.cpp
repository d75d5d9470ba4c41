// Python bindings for the partition-norm toolkit. Big integers cross the
// boundary as Python ints and exact rationals as fractions.Fraction, so no
// precision is lost.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>
#include <string>
#include <vector>

#include "partnorm/partition.hpp"
#include "partnorm/series.hpp"
#include "partnorm/stats.hpp"
#include "partnorm/verify.hpp"
#include "partnorm/zeta.hpp"

namespace py = pybind11;
using namespace partnorm;

namespace {

py::object to_py_int(const mpz_class& z) {
    return py::module_::import("builtins").attr("int")(z.get_str());
}

py::object to_py_fraction(const mpq_class& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(q.get_str());
}

py::list to_py_fraction_list(const std::vector<mpq_class>& values) {
    py::list out;
    for (const mpq_class& v : values) out.append(to_py_fraction(v));
    return out;
}

py::dict report_to_dict(const VerifyReport& rep) {
    py::dict d;
    d["identity"] = rep.identity;
    d["status"] = std::string(to_string(rep.status));
    d["lhs"] = rep.lhs;
    d["rhs"] = rep.rhs;
    d["error"] = rep.error.has_value() ? py::cast(*rep.error) : py::none();
    d["notes"] = rep.notes;
    d["paper_flagged"] = rep.paper_flagged;
    return d;
}

py::list reports_to_list(const std::vector<VerifyReport>& reports) {
    py::list out;
    for (const VerifyReport& rep : reports) out.append(report_to_dict(rep));
    return out;
}

VerifyOptions options_from_kwargs(std::optional<unsigned> n_max,
                                  std::optional<std::uint64_t> nu_max,
                                  std::optional<double> tol, bool allow_paper_flags) {
    VerifyOptions opt;
    opt.n_max = n_max;
    opt.nu_max = nu_max;
    opt.tol = tol;
    opt.allow_paper_flags = allow_paper_flags;
    return opt;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact-arithmetic partition norm toolkit";

    py::class_<Partition>(m, "Partition")
        .def(py::init([](const std::vector<std::uint64_t>& parts) {
                 return Partition::from_parts(parts);
             }),
             py::arg("parts") = std::vector<std::uint64_t>{})
        .def_static("from_freq",
                    [](const std::vector<std::pair<std::uint64_t, std::uint64_t>>& freq) {
                        std::vector<PartCount> pcs;
                        for (const auto& [part, mult] : freq) pcs.push_back({part, mult});
                        return Partition::from_freq(std::move(pcs));
                    })
        .def_property_readonly("size", &Partition::size)
        .def_property_readonly("length", &Partition::length)
        .def_property_readonly("largest_part", &Partition::largest_part)
        .def_property_readonly("rank", &Partition::rank)
        .def_property_readonly("parts", &Partition::parts)
        .def_property_readonly("freq",
                               [](const Partition& p) {
                                   std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
                                   for (const PartCount& pc : p.freq())
                                       out.emplace_back(pc.part, pc.mult);
                                   return out;
                               })
        .def("norm", [](const Partition& p) { return to_py_int(p.norm()); })
        .def("multiplicity", &Partition::multiplicity, py::arg("part"))
        .def("delete_part", &Partition::delete_part, py::arg("part"))
        .def("__len__", &Partition::length)
        .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; })
        .def("__hash__",
             [](const Partition& p) { return py::hash(py::str(p.to_string())); })
        .def("__repr__",
             [](const Partition& p) { return "Partition" + p.to_string(); });

    m.def("subpartitions", &subpartitions, py::arg("partition"));
    m.def("subpartition_count",
          [](const Partition& p) { return to_py_int(subpartition_count(p)); });

    m.def("class_names", &PartitionClass::known_names);
    m.def(
        "enumerate_partitions",
        [](std::uint64_t n, const std::string& cls) {
            return enumerate_partitions(n, PartitionClass::parse(cls));
        },
        py::arg("n"), py::arg("partition_class") = "all");
    m.def(
        "in_class",
        [](const Partition& p, const std::string& cls) {
            return PartitionClass::parse(cls).contains(p);
        },
        py::arg("partition"), py::arg("partition_class"));

    m.def("is_prime", &is_prime);
    m.def("factorize", &factorize);
    m.def("sigma", &sigma);

    m.def("pentagonal_p", [](unsigned n) { return to_py_int(pentagonal_p(n)); });
    m.def("partition_numbers", [](unsigned n_max) {
        py::list out;
        for (const mpz_class& v : partition_numbers(n_max)) out.append(to_py_int(v));
        return out;
    });
    m.def("euler_partition_coeffs", [](unsigned order) {
        py::list out;
        const Series s = euler_partition_series(order);
        for (unsigned k = 0; k <= order; ++k) out.append(to_py_fraction(s[k]));
        return out;
    });
    m.def("p_dot", [](unsigned n) { return to_py_int(p_dot(n)); });
    m.def("p_dot_sequence", [](unsigned n_max) {
        py::list out;
        for (const mpz_class& v : dotted_diagram_counts(n_max)) out.append(to_py_int(v));
        return out;
    });

    py::enum_<ExtremalSource>(m, "ExtremalSource")
        .value("ClosedForm", ExtremalSource::ClosedForm)
        .value("BruteForce", ExtremalSource::BruteForce);

    py::class_<ExtremalResult>(m, "ExtremalResult")
        .def_property_readonly("value",
                               [](const ExtremalResult& r) { return to_py_int(r.value); })
        .def_readonly("witnesses", &ExtremalResult::witnesses)
        .def_readonly("source", &ExtremalResult::source)
        .def_readonly("agreement", &ExtremalResult::agreement)
        .def("__repr__", [](const ExtremalResult& r) {
            return "ExtremalResult(value=" + r.value.get_str() + ", witnesses=" +
                   std::to_string(r.witnesses.size()) + ")";
        });

    m.def("max_norm", &max_norm, py::arg("n"));
    m.def("max_norm_odd", &max_norm_odd, py::arg("n"));
    m.def("max_norm_distinct", &max_norm_distinct, py::arg("n"));
    m.def("max_norm_rr", &max_norm_rr, py::arg("n"));
    m.def("distinct_closed_form_applies", &distinct_closed_form_applies, py::arg("n"));
    m.def(
        "brute_extremal_norm",
        [](std::uint64_t n, const std::string& cls, const std::string& direction) {
            const ExtremalDirection dir = direction == "min" ? ExtremalDirection::Min
                                                             : ExtremalDirection::Max;
            return brute_extremal_norm(n, PartitionClass::parse(cls), dir);
        },
        py::arg("n"), py::arg("partition_class") = "all", py::arg("direction") = "max");

    py::class_<MinSizeResult>(m, "MinSizeResult")
        .def_readonly("size", &MinSizeResult::size)
        .def_readonly("witnesses", &MinSizeResult::witnesses)
        .def_readonly("beta_max", &MinSizeResult::beta_max);
    m.def("min_size_for_norm", &min_size_for_norm, py::arg("norm"));

    m.def("macmahon_coeff",
          [](const Partition& p) { return to_py_fraction(macmahon_coeff(p)); });
    m.def("macmahon_expected_multiplicity", [](std::uint64_t n, std::uint64_t i) {
        return to_py_fraction(macmahon_expected_multiplicity(n, i));
    });
    m.def(
        "sample_macmahon",
        [](std::uint64_t n, std::uint64_t seed) { return sample_macmahon(n, seed); },
        py::arg("n"), py::arg("seed") = 20260809ull);
    m.def(
        "sample_macmahon_many",
        [](std::uint64_t n, std::uint64_t count, std::uint64_t seed) {
            std::mt19937_64 rng(seed);
            std::vector<Partition> out;
            out.reserve(count);
            for (std::uint64_t i = 0; i < count; ++i) out.push_back(sample_macmahon(n, rng));
            return out;
        },
        py::arg("n"), py::arg("count"), py::arg("seed") = 20260809ull);

    m.def("dotted_count", [](const Partition& p) { return to_py_int(dotted_count(p)); });
    m.def("k_dotted_count", [](const Partition& p, std::uint64_t k) {
        return to_py_int(k_dotted_count(p, k));
    });
    m.def("multicolor_count",
          [](const Partition& p) { return to_py_int(multicolor_count(p)); });

    m.def("lehmer_sum", [](unsigned n) { return to_py_fraction(lehmer_sum(n)); });
    m.def("lehmer_sums", [](unsigned n_max) { return to_py_fraction_list(lehmer_sums(n_max)); });
    m.def("lehmer_sum_distinct",
          [](unsigned n) { return to_py_fraction(lehmer_sum_distinct(n)); });
    m.def("lehmer_sums_distinct",
          [](unsigned n_max) { return to_py_fraction_list(lehmer_sums_distinct(n_max)); });

    py::class_<ExpectedNorm>(m, "ExpectedNorm")
        .def_readonly("value", &ExpectedNorm::value)
        .def_readonly("log_sum", &ExpectedNorm::log_sum);
    m.def("expected_norm", &expected_norm, py::arg("n"));
    m.def("euler_gamma", &euler_gamma);
    m.def("stieltjes_gamma1", &stieltjes_gamma1);

    py::class_<EvalResult>(m, "EvalResult")
        .def_readonly("value", &EvalResult::value)
        .def_property_readonly("tail_bound",
                               [](const EvalResult& r) -> py::object {
                                   return r.tail_bound ? py::cast(*r.tail_bound) : py::none();
                               })
        .def_readonly("terms_used", &EvalResult::terms_used)
        .def("__repr__", [](const EvalResult& r) {
            return "EvalResult(value=" + std::to_string(r.value) + ")";
        });

    py::class_<PiValue>(m, "PiValue")
        .def_property_readonly("coeff",
                               [](const PiValue& v) { return to_py_fraction(v.coeff); })
        .def_readonly("power", &PiValue::power)
        .def("to_float", &PiValue::to_double)
        .def("__eq__", [](const PiValue& a, const PiValue& b) { return a == b; })
        .def("__str__", &PiValue::to_string)
        .def("__repr__", [](const PiValue& v) { return "PiValue(" + v.to_string() + ")"; });

    m.def("bernoulli_number", [](unsigned n) { return to_py_fraction(bernoulli_number(n)); });
    m.def("riemann_zeta", &riemann_zeta, py::arg("s"), py::arg("tol") = 1e-12);
    m.def("riemann_zeta_even_exact", &riemann_zeta_even_exact, py::arg("j"));
    m.def(
        "partition_zeta_product",
        [](const std::string& set, double s, double tol) {
            return partition_zeta_product(PartSetSpec::parse(set), s, tol);
        },
        py::arg("part_set"), py::arg("s"), py::arg("tol") = 1e-8);
    m.def("distinct_zeta", &distinct_zeta, py::arg("s"), py::arg("tol") = 1e-8);
    m.def(
        "change_of_variables_check",
        [](const std::string& set, double s, double tol) {
            return report_to_dict(change_of_variables_check(PartSetSpec::parse(set), s, tol));
        },
        py::arg("part_set"), py::arg("s"), py::arg("tol") = 1e-6);

    m.def("multiplicative_partitions", &multiplicative_partitions, py::arg("norm"));
    m.def("nuclear_partitions_of_norm", &nuclear_partitions_of_norm, py::arg("norm"));
    m.def("nuclear_zeta_dirichlet", &nuclear_zeta_dirichlet, py::arg("s"),
          py::arg("nu_max") = 5000ull);

    m.def("fixed_length_zeta_faa", &fixed_length_zeta_faa, py::arg("s"), py::arg("k"),
          py::arg("tol") = 1e-12);
    m.def("fixed_length_zeta_faa_exact", &fixed_length_zeta_faa_exact, py::arg("s"),
          py::arg("k"));
    m.def("fixed_length_zeta_direct", &fixed_length_zeta_direct, py::arg("s"), py::arg("k"),
          py::arg("part_bound"));
    m.def("fixed_length_zeta_closed_s2", &fixed_length_zeta_closed_s2, py::arg("k"));
    m.def("golden_ratio_series", &golden_ratio_series, py::arg("terms") = 13u);
    m.def("golden_ratio_target", &golden_ratio_target);

    m.def("phi_partition", [](const Partition& p) { return to_py_fraction(phi_partition(p)); });
    m.def("phi_divisor_sum_check",
          [](const Partition& p) { return report_to_dict(phi_divisor_sum_check(p)); });
    m.def(
        "phi_dirichlet_check",
        [](const std::string& set, double s, double tol) {
            return report_to_dict(phi_dirichlet_check(PartSetSpec::parse(set), s, tol));
        },
        py::arg("part_set"), py::arg("s"), py::arg("tol") = 1e-8);

    m.def("verify_suite_names", &verify_suite_names);
    m.def(
        "run_verify_suite",
        [](const std::string& name, std::optional<unsigned> n_max,
           std::optional<std::uint64_t> nu_max, std::optional<double> tol,
           bool allow_paper_flags) {
            return reports_to_list(run_verify_suite(
                name, options_from_kwargs(n_max, nu_max, tol, allow_paper_flags)));
        },
        py::arg("name"), py::arg("n_max") = py::none(), py::arg("nu_max") = py::none(),
        py::arg("tol") = py::none(), py::arg("allow_paper_flags") = true);
    m.def(
        "verify_passes",
        [](const py::list& reports, bool allow_paper_flags) {
            // reconstruct just the pass/fail inputs
            for (const auto& item : reports) {
                const py::dict d = item.cast<py::dict>();
                const std::string status = d["status"].cast<std::string>();
                const bool flagged = d["paper_flagged"].cast<bool>();
                if (status == "Discrepancy" && !(allow_paper_flags && flagged)) return false;
            }
            return true;
        },
        py::arg("reports"), py::arg("allow_paper_flags") = true);

    m.attr("__version__") = "0.1.0";
}
