#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cyclohecke/blocks.hpp"
#include "cyclohecke/checks.hpp"
#include "cyclohecke/cli.hpp"
#include "cyclohecke/expr.hpp"
#include "cyclohecke/io.hpp"

namespace py = pybind11;
using namespace cyclohecke;

namespace {

// rationals cross the boundary as strings ("3", "-5/7"); python Fractions
// and ints convert via str()
Rat to_rat(const py::object& obj) { return parse_rat(py::str(obj).cast<std::string>()); }

std::vector<Rat> to_rats(const py::sequence& seq) {
    std::vector<Rat> out;
    for (const auto& item : seq) out.push_back(to_rat(py::reinterpret_borrow<py::object>(item)));
    return out;
}

// pybind11 holders cannot be shared_ptr<const T>, so the spec handle is
// wrapped in a tiny value type
struct PySpec {
    SpecPtr ptr;
};

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

Multipartition to_multipartition(const std::vector<std::vector<int>>& comps) {
    std::vector<Partition> parts;
    for (const auto& c : comps) parts.push_back(Partition(c));
    return Multipartition(std::move(parts));
}

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<std::string> residues_to_strings(const ResidueMultiset& r) {
    std::vector<std::string> out;
    for (const auto& e : r.entries()) out.push_back(to_string(e));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact-arithmetic kernel for degenerate cyclotomic Hecke algebras";
    m.attr("__version__") = "0.1.0";

    py::class_<PySpec>(m, "Spec")
        .def_static(
            "from_roots",
            [](int d, const py::sequence& roots) {
                return PySpec{CyclotomicSpec::from_roots(d, to_rats(roots))};
            },
            py::arg("d"), py::arg("roots"))
        .def_static(
            "from_coeffs",
            [](int d, const py::sequence& coeffs) {
                return PySpec{CyclotomicSpec::from_coeffs(d, to_rats(coeffs))};
            },
            py::arg("d"), py::arg("coeffs"))
        .def_property_readonly("d", [](const PySpec& s) { return s.ptr->d(); })
        .def_property_readonly("l", [](const PySpec& s) { return s.ptr->l(); })
        .def("__repr__", [](const PySpec& s) { return "Spec(" + s.ptr->to_string() + ")"; });

    py::class_<HeckeElement>(m, "Element")
        .def("__add__", [](const HeckeElement& a, const HeckeElement& b) { return a + b; })
        .def("__sub__", [](const HeckeElement& a, const HeckeElement& b) { return a - b; })
        .def("__mul__", [](const HeckeElement& a, const HeckeElement& b) { return a * b; })
        .def("__eq__", [](const HeckeElement& a, const HeckeElement& b) { return a == b; })
        .def("scale", [](const HeckeElement& a, const py::object& c) { return a * to_rat(c); })
        .def("is_zero", &HeckeElement::is_zero)
        .def("degree", &HeckeElement::filtration_degree)
        .def("__str__", &HeckeElement::to_string)
        .def("__repr__", [](const HeckeElement& e) { return "Element(" + e.to_string() + ")"; })
        .def("to_json", [](const HeckeElement& e) { return json_to_py(element_to_json(e)); });

    m.def(
        "one", [](const PySpec& spec) { return HeckeElement::one(spec.ptr); }, py::arg("spec"));
    m.def(
        "x", [](const PySpec& spec, int i) { return HeckeElement::generator_x(i, spec.ptr); },
        py::arg("spec"), py::arg("i"));
    m.def(
        "s", [](const PySpec& spec, int i) { return HeckeElement::generator_s(i, spec.ptr); },
        py::arg("spec"), py::arg("i"));

    m.def(
        "nf",
        [](const std::string& expression, const PySpec& spec) {
            return evaluate(parse(expression), spec.ptr);
        },
        py::arg("expression"), py::arg("spec"),
        "PBW normal form of an expression over x<i>, s<i>, rationals");
    m.def(
        "graded_nf",
        [](const std::string& expression, int d, int l) {
            return evaluate_graded(parse(expression), d, l).to_string();
        },
        py::arg("expression"), py::arg("d"), py::arg("l"),
        "normal form in the graded algebra, rendered as text");

    m.def(
        "p_element",
        [](const PySpec& spec, const std::vector<int>& mu) {
            return p_element(to_partition(mu), spec.ptr);
        },
        py::arg("spec"), py::arg("mu"));
    m.def(
        "center_basis",
        [](const PySpec& spec) { return center_basis_bruteforce(spec.ptr); }, py::arg("spec"),
        "brute-force center basis, cross-checked against the p_d(mu) span");
    m.def(
        "power_sum_generation",
        [](const PySpec& spec) { return power_sum_generation_check(spec.ptr); }, py::arg("spec"));

    // combinatorics
    m.def("partitions", [](int d) {
        std::vector<std::vector<int>> out;
        for (const auto& p : enumerate_partitions(d)) out.push_back(p.parts());
        return out;
    });
    m.def("multipartitions", [](int d, int l) {
        std::vector<std::vector<std::vector<int>>> out;
        for (const auto& mp : enumerate_multipartitions(d, l)) {
            std::vector<std::vector<int>> comps;
            for (const auto& c : mp.components()) comps.push_back(c.parts());
            out.push_back(std::move(comps));
        }
        return out;
    });
    m.def("p_set", [](int d, int l) {
        std::vector<std::vector<int>> out;
        for (const auto& p : enumerate_p_set(d, l)) out.push_back(p.parts());
        return out;
    });
    m.def("phi", [](const std::vector<std::vector<int>>& mp, int l) {
        return phi(to_multipartition(mp), l).parts();
    });
    m.def("phi_inv", [](const std::vector<int>& mu, int l, int d) {
        Multipartition mp = phi_inv(to_partition(mu), l, d);
        std::vector<std::vector<int>> out;
        for (const auto& c : mp.components()) out.push_back(c.parts());
        return out;
    });
    m.def("residue_tuple", [](const std::vector<std::vector<int>>& mp, const py::sequence& q) {
        return residues_to_strings(residue_tuple(to_multipartition(mp), to_rats(q)));
    });
    m.def("basd_rank", [](int d, int l) {
        return py::module_::import("builtins").attr("int")(basd_rank(d, l).get_str());
    });

    // graded algebra
    m.def("class_sum", [](const std::vector<std::vector<int>>& mp, int d, int l) {
        return class_sum(to_multipartition(mp), d, l).to_string();
    });
    m.def("murphy_element", [](const std::vector<int>& mu, int d, int l) {
        return murphy_element(to_partition(mu), d, l).to_string();
    });
    m.def("graded_center_dimension",
          [](int d, int l) { return center_basis_bruteforce(d, l).size(); });
    m.def("centralizer_dimension", [](int d, int l) { return centralizer_basis(d, l).size(); });

    // blocks and Specht modules
    m.def(
        "blocks",
        [](int d, const py::sequence& roots) {
            auto spec = CyclotomicSpec::from_roots(d, to_rats(roots));
            auto descriptors = block_idempotents(spec);
            block_center_dimensions(spec);
            return json_to_py(blocks_report_json(*spec, descriptors));
        },
        py::arg("d"), py::arg("roots"), "block decomposition report as plain data");
    m.def(
        "specht_character",
        [](const std::vector<std::vector<int>>& mp, const py::sequence& roots) {
            Multipartition bp = to_multipartition(mp);
            std::vector<Rat> q = to_rats(roots);
            Representation rep = dual_specht(bp, q);
            std::vector<ResidueMultiset> candidates;
            for (const auto& other : enumerate_multipartitions(bp.total_size(), bp.level()))
                candidates.push_back(residue_tuple(other, q));
            py::dict out;
            out["dimension"] = rep.dim;
            out["residues"] = residues_to_strings(central_character(rep, candidates));
            return out;
        },
        py::arg("multipartition"), py::arg("roots"));

    m.def(
        "verify",
        [](const std::string& suite) {
            auto results = checks::run_suite(suite == "full");
            py::list out;
            for (const auto& r : results) {
                py::dict item;
                item["name"] = r.name;
                item["pass"] = r.pass;
                item["detail"] = r.detail;
                out.append(item);
            }
            return out;
        },
        py::arg("suite") = "small", "run the oracle suite; returns one entry per check");

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
