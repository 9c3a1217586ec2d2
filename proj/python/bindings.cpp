#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgdef/chromatic.hpp"
#include "hgdef/constructions.hpp"
#include "hgdef/defect.hpp"
#include "hgdef/harness.hpp"
#include "hgdef/io.hpp"
#include "hgdef/kneser.hpp"

namespace py = pybind11;

namespace {

using Budget = std::optional<std::uint64_t>;

std::vector<std::vector<int>> edge_lists(const hgdef::Hypergraph& h) {
    std::vector<std::vector<int>> out;
    out.reserve(h.edges().size());
    for (const auto& e : h.edges())
        out.push_back(e.members());
    return out;
}

hgdef::DefectCertificate certificate_from_lists(int n, const std::vector<int>& x0,
                                                const std::vector<std::vector<int>>& parts,
                                                bool equitable) {
    hgdef::DefectCertificate cert;
    cert.x0 = hgdef::VertexSet::of(n, x0);
    cert.parts.reserve(parts.size());
    for (const auto& part : parts)
        cert.parts.push_back(hgdef::VertexSet::of(n, part));
    cert.equitable = equitable;
    return cert;
}

const char* status_name(hgdef::SolveStatus status) {
    return status == hgdef::SolveStatus::exact ? "exact" : "inconclusive";
}

py::dict chi_dict(const hgdef::ChiResult& r) {
    py::dict d;
    d["status"] = status_name(r.status);
    d["lower"] = r.lower;
    d["upper"] = r.upper;
    if (r.status == hgdef::SolveStatus::exact)
        d["chi"] = r.lower;
    d["coloring"] = r.witness.colors;
    d["palette_size"] = r.witness.palette_size;
    d["nodes_explored"] = r.nodes_explored;
    return d;
}

py::dict defect_dict(const hgdef::DefectResult& r) {
    py::dict d;
    d["status"] = status_name(r.status);
    d["lower"] = r.lower;
    d["upper"] = r.upper;
    if (r.status == hgdef::SolveStatus::exact)
        d["value"] = r.lower;
    d["x0"] = r.certificate.x0.members();
    py::list parts;
    for (const auto& part : r.certificate.parts)
        parts.append(part.members());
    d["parts"] = parts;
    d["equitable"] = r.certificate.equitable;
    d["nodes_explored"] = r.nodes_explored;
    return d;
}

/// Bridge nlohmann output into plain Python dicts/lists.
py::object json_to_py(const nlohmann::ordered_json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::object claim_to_py(const hgdef::Claim& claim) {
    nlohmann::ordered_json j;
    j["id"] = claim.id;
    j["params"] = claim.params;
    j["predicted"] = claim.predicted;
    j["computed"] = claim.computed;
    j["status"] = hgdef::to_string(claim.status);
    return json_to_py(j);
}

} // namespace

PYBIND11_MODULE(_hgdef, m) {
    m.doc() = "Exact computations on generalized Kneser hypergraphs and "
              "colorability defects. Vertex indices are 0-based here; the text "
              "file format uses 1-based labels.";

    py::register_exception<hgdef::ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<hgdef::Hypergraph>(m, "Hypergraph")
        .def(py::init([](int n_vertices, const std::vector<std::vector<int>>& edges) {
                 return hgdef::Hypergraph::from_edge_lists(n_vertices, edges);
             }),
             py::arg("n_vertices"), py::arg("edges") = std::vector<std::vector<int>>{})
        .def_property_readonly("n_vertices", &hgdef::Hypergraph::n_vertices)
        .def_property_readonly("n_edges", &hgdef::Hypergraph::n_edges)
        .def("edge", [](const hgdef::Hypergraph& h, int i) { return h.edge(i).members(); },
             py::arg("i"), "Members of edge i, ascending.")
        .def("edges", &edge_lists, "All edges as sorted vertex lists, in stored order.")
        .def("min_edge_size", &hgdef::Hypergraph::min_edge_size)
        .def("degrees", &hgdef::Hypergraph::degrees)
        .def(py::self == py::self)
        .def("__repr__", [](const hgdef::Hypergraph& h) {
            return "Hypergraph(n_vertices=" + std::to_string(h.n_vertices()) +
                   ", n_edges=" + std::to_string(h.n_edges()) + ")";
        });

    m.def("parse", &hgdef::parse_hypergraph, py::arg("text"),
          "Parse the 'p hg' text format.");
    m.def("emit", &hgdef::emit_hypergraph, py::arg("h"),
          "Canonical text form; parse(emit(h)) == h.");
    m.def("read_file", &hgdef::read_hypergraph_file, py::arg("path"));
    m.def("write_file", &hgdef::write_hypergraph_file, py::arg("h"), py::arg("path"));

    m.def("complete_uniform", &hgdef::complete_uniform, py::arg("n"), py::arg("k"),
          "Complete k-uniform hypergraph on n vertices.");
    m.def(
        "thm2_family",
        [](int l, int s, int n) { return hgdef::thm2_family({l, s, n}); }, py::arg("l"),
        py::arg("s"), py::arg("n"),
        "Tailed-complete family: n-subsets of a (2n+l-2)-element base, each "
        "extended by a fixed s-element tail.");
    m.def(
        "thm2_predicted",
        [](int l, int s, int n) {
            const auto p = hgdef::thm2_predicted({l, s, n});
            py::dict d;
            d["chi"] = p.chi;
            d["ecd"] = p.ecd;
            return d;
        },
        py::arg("l"), py::arg("s"), py::arg("n"));
    m.def(
        "thm2_certificate",
        [](int l, int s, int n) {
            return json_to_py(hgdef::certificate_json(hgdef::thm2_upper_certificate({l, s, n}), s));
        },
        py::arg("l"), py::arg("s"), py::arg("n"),
        "Wire-form equitable certificate witnessing ecd <= l+s (1-based labels).");
    m.def(
        "thm3_family", [](int k, int s) { return hgdef::thm3_family({k, s}); }, py::arg("k"),
        py::arg("s"), "Disjoint-blocks family: k blocks of size s+1, s even.");
    m.def(
        "thm3_predicted",
        [](int k, int s, int l) {
            const auto p = hgdef::thm3_predicted({k, s}, l);
            py::dict d;
            d["chi"] = p.chi;
            d["cd"] = p.cd;
            d["ecd"] = p.ecd;
            return d;
        },
        py::arg("k"), py::arg("s"), py::arg("l"));
    m.def(
        "thm3_certificate",
        [](int k, int s, int l) {
            return json_to_py(hgdef::certificate_json(hgdef::thm3_upper_certificate({k, s}, l), l));
        },
        py::arg("k"), py::arg("s"), py::arg("l"),
        "Wire-form equitable certificate witnessing both defects at threshold l.");
    m.def("closed_form_chi_complete", &hgdef::closed_form_chi_complete, py::arg("n"),
          py::arg("k"), py::arg("r"), "None when n < r(k-1)+1.");
    m.def("closed_form_cd_complete", &hgdef::closed_form_cd_complete, py::arg("n"), py::arg("k"),
          py::arg("r"), "None when n < r(k-1)+1.");

    m.def(
        "build_kneser",
        [](const hgdef::Hypergraph& base, int r, int s) {
            return hgdef::build_kneser(base, {r, s});
        },
        py::arg("base"), py::arg("r"), py::arg("s") = 0,
        "KG^r(base, s): vertex i is base edge i; r-sets of pairwise s-almost-"
        "disjoint edges form hyperedges.");

    m.def(
        "chromatic_number",
        [](const hgdef::Hypergraph& h, Budget budget) {
            return chi_dict(hgdef::chromatic_number_exact(h, budget));
        },
        py::arg("h"), py::arg("budget") = py::none(),
        "Exact weak chromatic number with witness coloring. With a node budget "
        "the result may be inconclusive, carrying sound lower/upper bounds.");
    m.def(
        "cd",
        [](const hgdef::Hypergraph& f, int r, int s, Budget budget) {
            return defect_dict(hgdef::cd_exact(f, r, s, budget));
        },
        py::arg("f"), py::arg("r"), py::arg("s"), py::arg("budget") = py::none(),
        "r-colorability defect at threshold s, with optimal certificate.");
    m.def(
        "ecd",
        [](const hgdef::Hypergraph& f, int r, int s, Budget budget) {
            return defect_dict(hgdef::ecd_exact(f, r, s, budget));
        },
        py::arg("f"), py::arg("r"), py::arg("s"), py::arg("budget") = py::none(),
        "Equitable variant of cd(); always >= cd on the same input.");
    m.def(
        "verify_certificate",
        [](const hgdef::Hypergraph& f, int s, const std::vector<int>& x0,
           const std::vector<std::vector<int>>& parts, bool equitable) {
            return hgdef::verify_certificate(
                f, s, certificate_from_lists(f.n_vertices(), x0, parts, equitable));
        },
        py::arg("f"), py::arg("s"), py::arg("x0"), py::arg("parts"),
        py::arg("equitable") = false,
        "Check a defect certificate (0-based vertex lists) against f at "
        "threshold s.");

    m.def(
        "check_aj_bound",
        [](const hgdef::Hypergraph& f, int r, int s, Budget budget) {
            return claim_to_py(hgdef::check_aj_bound(f, r, s, budget));
        },
        py::arg("f"), py::arg("r"), py::arg("s"), py::arg("budget") = py::none(),
        "Verify chi(KG^r(f,s)) >= ceil(ecd^r(f, floor(s/2)) / (r-1)).");
    m.def(
        "check_strengthened_bound",
        [](const hgdef::Hypergraph& f, int r, int s, int x, Budget budget) {
            return claim_to_py(hgdef::check_strengthened_bound(f, r, s, x, budget));
        },
        py::arg("f"), py::arg("r"), py::arg("s"), py::arg("x"), py::arg("budget") = py::none(),
        "Evaluate the x-strengthened defect bounds; records HOLDS / VIOLATED "
        "per variant.");
    m.def(
        "fuzz",
        [](std::uint64_t seed, int trials, int max_n, int max_edges, std::vector<int> r_values,
           int s_max, Budget budget) {
            hgdef::FuzzConfig config;
            config.seed = seed;
            config.trials = trials;
            config.max_n = max_n;
            config.max_edges = max_edges;
            config.r_values = std::move(r_values);
            config.s_max = s_max;
            config.budget = budget;
            return json_to_py(hgdef::report_json(hgdef::fuzz_corpus(config)));
        },
        py::arg("seed") = 42, py::arg("trials") = 200, py::arg("max_n") = 8,
        py::arg("max_edges") = 8, py::arg("r_values") = std::vector<int>{2, 3},
        py::arg("s_max") = 2, py::arg("budget") = py::none(),
        "Seeded random-instance sweep; returns the verification report as a dict.");
    m.def(
        "reproduce",
        [](const std::string& grid, Budget budget) {
            if (grid != "small" && grid != "full")
                throw hgdef::UsageError("grid must be 'small' or 'full'");
            const auto kind = grid == "small" ? hgdef::GridKind::small : hgdef::GridKind::full;
            return json_to_py(hgdef::report_json(hgdef::reproduce_paper(kind, budget)));
        },
        py::arg("grid") = "full", py::arg("budget") = py::none(),
        "Re-verify the bundled family claims; returns the report as a dict.");
}
