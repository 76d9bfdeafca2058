#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "geomplex/bottleneck.hpp"
#include "geomplex/builders.hpp"
#include "geomplex/generators.hpp"
#include "geomplex/io.hpp"
#include "geomplex/metric.hpp"
#include "geomplex/persistence.hpp"
#include "geomplex/verify.hpp"

namespace py = pybind11;
using namespace geomplex;

namespace {

std::vector<double> flatten(const std::vector<std::vector<double>>& rows, int& n_rows, int& n_cols) {
    n_rows = static_cast<int>(rows.size());
    n_cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(n_rows) * n_cols);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != n_cols) throw ValidationError("rows of unequal length");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return flat;
}

MetricKind metric_from_name(const std::string& name) {
    if (name == "euclidean") return MetricKind::euclidean;
    if (name == "l1") return MetricKind::l1;
    if (name == "linf") return MetricKind::linf;
    if (name == "circle") return MetricKind::circle_geodesic;
    throw ValidationError("unknown metric: " + name);
}

py::dict report_to_dict(const VerificationReport& r) {
    py::dict d;
    d["name"] = r.name;
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["passed"] = r.passed;
    d["seed"] = r.seed;
    d["details"] = r.details.dump();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "filtered geometric complexes, persistent homology, and diagram distances";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<SizeCapError>(m, "SizeCapError", PyExc_RuntimeError);

    py::class_<DissimilarityMatrix>(m, "DissimilarityMatrix")
        .def(py::init([](const std::vector<std::vector<double>>& rows) {
                 int nr, nc;
                 auto flat = flatten(rows, nr, nc);
                 if (nr != nc) throw ValidationError("matrix must be square");
                 return DissimilarityMatrix::from_entries(nr, std::move(flat));
             }),
             py::arg("rows"))
        .def_readonly("n", &DissimilarityMatrix::n)
        .def_readonly("triangle", &DissimilarityMatrix::triangle)
        .def("__getitem__",
             [](const DissimilarityMatrix& self, std::pair<int, int> ij) { return self(ij.first, ij.second); })
        .def("rows", [](const DissimilarityMatrix& self) {
            std::vector<std::vector<double>> rows(self.n, std::vector<double>(self.n));
            for (int i = 0; i < self.n; ++i)
                for (int j = 0; j < self.n; ++j) rows[i][j] = self(i, j);
            return rows;
        });

    py::class_<CrossDissimilarity>(m, "CrossDissimilarity")
        .def(py::init([](const std::vector<std::vector<double>>& rows) {
                 int nr, nc;
                 auto flat = flatten(rows, nr, nc);
                 return CrossDissimilarity::from_entries(nr, nc, std::move(flat));
             }),
             py::arg("rows"))
        .def_readonly("m", &CrossDissimilarity::m)
        .def_readonly("n", &CrossDissimilarity::n)
        .def("transpose", [](const CrossDissimilarity& self) { return dowker_transpose(self); });

    py::class_<Correspondence>(m, "Correspondence")
        .def(py::init([](int m_, int n_, const std::vector<std::pair<int, int>>& pairs) {
                 return Correspondence::from_pairs(m_, n_, pairs);
             }),
             py::arg("left_size"), py::arg("right_size"), py::arg("pairs"))
        .def_static("identity", &Correspondence::identity)
        .def_static("full", &Correspondence::full)
        .def_readonly("pairs", &Correspondence::pairs)
        .def_property_readonly("left_total", &Correspondence::left_total)
        .def_property_readonly("right_total", &Correspondence::right_total)
        .def("transpose", &Correspondence::transpose);

    py::class_<Simplex>(m, "Simplex")
        .def_readonly("vertices", &Simplex::vertices)
        .def_readonly("value", &Simplex::value)
        .def("__repr__", [](const Simplex& s) {
            std::ostringstream ss;
            ss << "Simplex([";
            for (std::size_t i = 0; i < s.vertices.size(); ++i) ss << (i ? "," : "") << s.vertices[i];
            ss << "], " << format_double(s.value) << ")";
            return ss.str();
        });

    py::class_<FilteredComplex>(m, "FilteredComplex")
        .def_readonly("vertex_count", &FilteredComplex::vertex_count)
        .def_readonly("max_dim", &FilteredComplex::max_dim)
        .def_readonly("simplices", &FilteredComplex::simplices)
        .def("validate", &FilteredComplex::validate)
        .def("slice", &FilteredComplex::slice, py::arg("a"), py::arg("strict") = false)
        .def("critical_values", &FilteredComplex::critical_values)
        .def("__len__", [](const FilteredComplex& k) { return k.simplices.size(); });

    py::class_<DiagramPoint>(m, "DiagramPoint")
        .def_readonly("dim", &DiagramPoint::dim)
        .def_readonly("birth", &DiagramPoint::birth)
        .def_readonly("death", &DiagramPoint::death)
        .def("__repr__", [](const DiagramPoint& p) {
            return "(" + std::to_string(p.dim) + ", " + format_double(p.birth) + ", " + format_double(p.death) + ")";
        });

    py::class_<PersistenceDiagram>(m, "PersistenceDiagram")
        .def(py::init([](const std::vector<std::tuple<int, double, double>>& pts) {
                 PersistenceDiagram d;
                 for (auto [dim, b, dth] : pts) d.points.push_back({dim, b, dth});
                 return d;
             }),
             py::arg("points"))
        .def_readonly("points", &PersistenceDiagram::points)
        .def("restrict_dim", &PersistenceDiagram::restrict_dim)
        .def("same_multiset", &PersistenceDiagram::same_multiset)
        .def("to_tsv",
             [](const PersistenceDiagram& d) {
                 std::ostringstream ss;
                 save_diagram_tsv(ss, d);
                 return ss.str();
             })
        .def("__len__", [](const PersistenceDiagram& d) { return d.points.size(); });

    // construction
    m.def(
        "matrix_from_points",
        [](const std::vector<std::vector<double>>& pts, const std::string& metric, double circumference) {
            PointCloud pc;
            pc.points = pts;
            pc.metric = metric_from_name(metric);
            pc.circumference = circumference;
            return pointcloud_to_matrix(pc);
        },
        py::arg("points"), py::arg("metric") = "euclidean", py::arg("circumference") = 1.0);

    // builders
    m.def("rips_filtration", &rips_filtration, py::arg("d"), py::arg("max_dim"));
    m.def("rips_complex_at", &rips_complex_at, py::arg("d"), py::arg("a"), py::arg("strict"), py::arg("max_dim"));
    m.def("cech_filtration", &cech_intrinsic_filtration, py::arg("d"), py::arg("max_dim"));
    m.def("dowker_filtration", &dowker_filtration, py::arg("lam"), py::arg("max_dim"));
    m.def(
        "ambient_cech_filtration",
        [](const std::vector<int>& L, const std::vector<int>& W, const DissimilarityMatrix& amb, int max_dim) {
            return ambient_cech_filtration(L, W, amb, max_dim);
        },
        py::arg("landmarks"), py::arg("witnesses"), py::arg("ambient"), py::arg("max_dim"));
    m.def("witness_filtration", &witness_filtration, py::arg("lam"), py::arg("max_dim"));

    // persistence
    m.def("persistence", &compute_persistence, py::arg("complex"), py::arg("field") = 2);
    m.def("betti_at", &betti_at, py::arg("complex"), py::arg("a"), py::arg("strict") = false, py::arg("field") = 2);
    m.def("rank_of_inclusion", &rank_of_inclusion, py::arg("complex"), py::arg("a"), py::arg("b"), py::arg("dim"),
          py::arg("field") = 2);

    // distances
    m.def(
        "bottleneck",
        [](const PersistenceDiagram& a, const PersistenceDiagram& b, int dim) {
            return bottleneck_distance(a, b, dim).value;
        },
        py::arg("a"), py::arg("b"), py::arg("dim") = 0);
    m.def(
        "bottleneck_with_certificate",
        [](const PersistenceDiagram& a, const PersistenceDiagram& b, int dim) {
            auto r = bottleneck_distance(a, b, dim);
            std::vector<std::pair<int, int>> pairs;
            for (const auto& e : r.certificate.pairs) pairs.emplace_back(e.left, e.right);
            return py::make_tuple(r.value, pairs);
        },
        py::arg("a"), py::arg("b"), py::arg("dim") = 0);
    m.def("bottleneck_bruteforce", &bottleneck_bruteforce, py::arg("a"), py::arg("b"), py::arg("dim") = 0,
          py::arg("max_points") = 8);
    m.def(
        "hausdorff",
        [](const std::vector<int>& L, const std::vector<int>& Lp, const DissimilarityMatrix& amb) {
            return hausdorff_distance(L, Lp, amb);
        },
        py::arg("L"), py::arg("Lp"), py::arg("ambient"));
    m.def("distortion", &distortion, py::arg("c"), py::arg("dx"), py::arg("dy"));
    m.def("gh_exact", &gh_exact, py::arg("dx"), py::arg("dy"), py::arg("cap") = 1e7);
    m.def("gh_upper_bound", &gh_upper_bound, py::arg("dx"), py::arg("dy"), py::arg("c"));

    // generators
    m.def("gen_circle", &gen_circle, py::arg("n"), py::arg("circumference"));
    m.def(
        "gen_tree", [](const std::string& preset, double h) { return gen_subdivided_tree(TreeSpec::by_name(preset), h); },
        py::arg("preset"), py::arg("h"));
    m.def("gen_parallel_segments", [](int n) { return gen_parallel_segments(n).points; }, py::arg("n"));
    m.def("gen_two_rectangles", [](int n) { return gen_two_rectangles(n).points; }, py::arg("n"));
    m.def("gen_open_rips", [](int N) { return gen_open_rips(N).points; }, py::arg("N"));

    // verification
    m.def(
        "verify",
        [](const std::string& theorem, int trials, std::uint64_t seed, int size, int max_dim, int field,
           double delta, int n) {
            BatchOptions opts;
            opts.trials = trials;
            opts.seed = seed;
            opts.size = size;
            opts.max_dim = max_dim;
            opts.field_p = field;
            opts.delta = delta;
            opts.n = n;
            std::vector<py::dict> out;
            for (const auto& r : run_verification(theorem, opts)) out.push_back(report_to_dict(r));
            return out;
        },
        py::arg("theorem"), py::arg("trials") = 50, py::arg("seed") = 7, py::arg("size") = 0,
        py::arg("max_dim") = -1, py::arg("field") = 2, py::arg("delta") = 0.1, py::arg("n") = 100);
    m.def("verification_names", &verification_names);
}
