// Python bindings for the ffdg core: fields, character sums, Fourier
// averages, point sets, distance graphs and embedding counts. Exact integer
// counts cross into Python as arbitrary-precision ints, exact rationals as
// fractions.Fraction.

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <tuple>
#include <vector>

#include "ffdg/char_sums.hpp"
#include "ffdg/embeddings.hpp"
#include "ffdg/fourier.hpp"
#include "ffdg/harness.hpp"

namespace py = pybind11;
using namespace py::literals;
using namespace ffdg;

namespace {

py::object to_py_int(const BigInt& v) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::object to_py_fraction(const BigRational& v) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(v.str());
}

std::shared_ptr<FiniteField> mutable_field(FieldPtr field) {
  return std::const_pointer_cast<FiniteField>(std::move(field));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "character sums, Fourier averages and distance-graph embedding "
            "counts over F_q^d";

  py::class_<FiniteField, std::shared_ptr<FiniteField>>(m, "FiniteField")
      .def_static(
          "make",
          [](std::uint32_t p, std::uint32_t k,
             std::optional<std::vector<Elem>> modulus) {
            return mutable_field(FiniteField::make(p, k, std::move(modulus)));
          },
          "p"_a, "k"_a = 1, "modulus"_a = py::none())
      .def_static(
          "parse_spec",
          [](const std::string& spec) {
            return mutable_field(FiniteField::parse_spec(spec));
          },
          "spec"_a)
      .def_property_readonly("p", &FiniteField::p)
      .def_property_readonly("k", &FiniteField::k)
      .def_property_readonly("q", &FiniteField::q)
      .def_property_readonly("modulus", &FiniteField::modulus)
      .def("spec_string", &FiniteField::spec_string)
      .def("add", &FiniteField::add, "a"_a, "b"_a)
      .def("sub", &FiniteField::sub, "a"_a, "b"_a)
      .def("neg", &FiniteField::neg, "a"_a)
      .def("mul", &FiniteField::mul, "a"_a, "b"_a)
      .def("inv", &FiniteField::inv, "a"_a)
      .def("div", &FiniteField::div, "a"_a, "b"_a)
      .def("pow", &FiniteField::pow, "a"_a, "e"_a)
      .def("embed", &FiniteField::embed, "v"_a)
      .def("trace", &FiniteField::trace, "a"_a)
      .def("additive_char", &FiniteField::additive_char, "a"_a)
      .def("quadratic_char", &FiniteField::quadratic_char, "a"_a)
      .def_property_readonly("eta_minus_one", &FiniteField::eta_minus_one)
      .def_property_readonly("generator", &FiniteField::generator)
      .def("__repr__", [](const FiniteField& f) {
        return "FiniteField('" + f.spec_string() + "')";
      });

  py::class_<CharSumRecord>(m, "CharSumRecord")
      .def_property_readonly(
          "kind", [](const CharSumRecord& r) { return to_string(r.kind); })
      .def_readonly("a", &CharSumRecord::a)
      .def_readonly("b", &CharSumRecord::b)
      .def_readonly("value", &CharSumRecord::value)
      .def_readonly("magnitude", &CharSumRecord::magnitude)
      .def_readonly("bound", &CharSumRecord::bound)
      .def_readonly("bound_applies", &CharSumRecord::bound_applies)
      .def("within_bound", &CharSumRecord::within_bound, "tol"_a = 1e-6);

  m.def(
      "gauss_sum",
      [](const FiniteField& f) { return gauss_sum(f); }, "field"_a);
  m.def(
      "kloosterman_sum",
      [](const FiniteField& f, Elem a, Elem b) {
        return kloosterman_sum(f, a, b);
      },
      "field"_a, "a"_a, "b"_a);
  m.def(
      "salie_sum",
      [](const FiniteField& f, Elem a, Elem b) { return salie_sum(f, a, b); },
      "field"_a, "a"_a, "b"_a);

  py::class_<VectorSpace>(m, "VectorSpace")
      .def(py::init([](std::shared_ptr<FiniteField> field, int dim) {
             return VectorSpace(std::move(field), dim);
           }),
           "field"_a, "dim"_a)
      .def_property_readonly(
          "field",
          [](const VectorSpace& s) { return mutable_field(s.field_ptr()); })
      .def_property_readonly("dim", &VectorSpace::dim)
      .def_property_readonly("size", &VectorSpace::size)
      .def(
          "encode",
          [](const VectorSpace& s, const std::vector<Elem>& coords) {
            return s.encode(coords);
          },
          "coords"_a)
      .def(
          "decode",
          [](const VectorSpace& s, VecIndex v) {
            std::vector<Elem> out(std::size_t(s.dim()));
            s.decode(v, out);
            return out;
          },
          "v"_a)
      .def("coord", &VectorSpace::coord, "v"_a, "j"_a)
      .def("add", &VectorSpace::add, "v"_a, "w"_a)
      .def("sub", &VectorSpace::sub, "v"_a, "w"_a)
      .def("negate", &VectorSpace::negate, "v"_a)
      .def("dot", &VectorSpace::dot, "v"_a, "w"_a)
      .def("norm", &VectorSpace::norm, "v"_a)
      .def("distance", &VectorSpace::distance, "v"_a, "w"_a)
      .def(py::self == py::self)
      .def(py::self != py::self);

  py::class_<PointSet>(m, "PointSet")
      .def_static("empty", &PointSet::empty, "space"_a,
                  "index_budget"_a = kDefaultIndexBudget)
      .def_static("full", &PointSet::full, "space"_a,
                  "index_budget"_a = kDefaultIndexBudget)
      .def_static(
          "from_indices",
          [](const VectorSpace& space, const std::vector<VecIndex>& indices,
             std::uint64_t budget) {
            return PointSet::from_indices(space, indices, budget);
          },
          "space"_a, "indices"_a, "index_budget"_a = kDefaultIndexBudget)
      .def_static("parse", &PointSet::parse, "text"_a,
                  "max_q"_a = FiniteField::kDefaultMaxQ,
                  "index_budget"_a = kDefaultIndexBudget)
      .def_property_readonly("space", &PointSet::space)
      .def("contains", &PointSet::contains, "v"_a)
      .def("__contains__", &PointSet::contains)
      .def("__len__", &PointSet::count)
      .def_property_readonly("members", &PointSet::members)
      .def_property_readonly("alpha", &PointSet::alpha)
      .def("serialize", &PointSet::serialize);

  py::class_<SphereIndex>(m, "SphereIndex")
      .def(py::init<const VectorSpace&, std::uint64_t>(), "space"_a,
           "index_budget"_a = kDefaultIndexBudget)
      .def_property_readonly("space", &SphereIndex::space)
      .def(
          "shell",
          [](const SphereIndex& s, Elem lam) {
            auto span = s.shell(lam);
            return std::vector<std::uint32_t>(span.begin(), span.end());
          },
          "lam"_a)
      .def("shell_size", &SphereIndex::shell_size, "lam"_a)
      .def("sigma_mean", &SphereIndex::sigma_mean, "lam"_a)
      .def("lemma_margin", &SphereIndex::lemma_margin, "lam"_a)
      .def("lemma_bound", &SphereIndex::lemma_bound);

  py::class_<FunctionTable>(m, "FunctionTable")
      .def(py::init<const VectorSpace&, std::vector<std::complex<double>>,
                    bool>(),
           "space"_a, "values"_a, "is_spectrum"_a = false)
      .def_static("zero", &FunctionTable::zero, "space"_a,
                  "is_spectrum"_a = false)
      .def_static("constant", &FunctionTable::constant, "space"_a, "value"_a)
      .def_static("indicator", &FunctionTable::indicator, "set"_a)
      .def_property_readonly("space", &FunctionTable::space)
      .def_property_readonly("is_spectrum", &FunctionTable::is_spectrum)
      .def_property_readonly("values",
                             [](const FunctionTable& t) {
                               auto span = t.values();
                               return std::vector<std::complex<double>>(
                                   span.begin(), span.end());
                             })
      .def("__getitem__", &FunctionTable::at)
      .def("__setitem__",
           [](FunctionTable& t, VecIndex v, std::complex<double> value) {
             t[v] = value;
           })
      .def("mean", &FunctionTable::mean)
      .def("sum", &FunctionTable::sum)
      .def("l2_norm", &FunctionTable::l2_norm);

  m.def("fourier_transform", &fourier_transform, "f"_a);
  m.def("inverse_transform", &inverse_transform, "fhat"_a);
  m.def("quadratic_phase_mean", &quadratic_phase_mean, "space"_a, "ell"_a,
        "xi"_a);
  m.def("distance_bilinear", &distance_bilinear, "f"_a, "g"_a, "lam"_a,
        "spheres"_a);

  py::class_<DistanceGapRecord>(m, "DistanceGapRecord")
      .def_readonly("bilinear", &DistanceGapRecord::bilinear)
      .def_readonly("product_term", &DistanceGapRecord::product_term)
      .def_readonly("gap", &DistanceGapRecord::gap)
      .def_readonly("bound", &DistanceGapRecord::bound)
      .def_readonly("holds", &DistanceGapRecord::holds);

  m.def("distance_theorem_gap", &distance_theorem_gap, "f"_a, "g"_a, "lam"_a,
        "spheres"_a);

  py::class_<DistanceGraph>(m, "DistanceGraph")
      .def_static(
          "make",
          [](int n,
             const std::vector<std::tuple<int, int, std::uint32_t>>& edges) {
            std::vector<GraphEdge> parsed;
            parsed.reserve(edges.size());
            for (const auto& [i, j, lam] : edges) parsed.push_back({i, j, lam});
            return DistanceGraph::make(n, std::move(parsed));
          },
          "n"_a, "edges"_a)
      .def_static(
          "generate",
          [](const std::string& kind, int n, std::uint32_t lam) {
            return DistanceGraph::generate(graph_kind_from_string(kind), n,
                                           lam);
          },
          "kind"_a, "n"_a, "lam"_a = 1)
      .def_static(
          "generate_random_lengths",
          [](const std::string& kind, int n, std::uint32_t q,
             std::uint64_t seed) {
            return DistanceGraph::generate_random_lengths(
                graph_kind_from_string(kind), n, q, seed);
          },
          "kind"_a, "n"_a, "q"_a, "seed"_a)
      .def_static("parse", &DistanceGraph::parse, "text"_a)
      .def("serialize", &DistanceGraph::serialize)
      .def_property_readonly("n", &DistanceGraph::n)
      .def_property_readonly("m", &DistanceGraph::m)
      .def_property_readonly("t", &DistanceGraph::t)
      .def_property_readonly("degrees", &DistanceGraph::degrees)
      .def_property_readonly("edges",
                             [](const DistanceGraph& g) {
                               std::vector<std::tuple<int, int, std::uint32_t>>
                                   out;
                               out.reserve(g.edges().size());
                               for (const auto& e : g.edges())
                                 out.emplace_back(e.i, e.j, e.lambda);
                               return out;
                             })
      .def(py::self == py::self);

  py::class_<EmbeddingCount>(m, "EmbeddingCount")
      .def_readonly("n", &EmbeddingCount::n)
      .def_readonly("m", &EmbeddingCount::m)
      .def_property_readonly(
          "tuples", [](const EmbeddingCount& c) { return to_py_int(c.tuples); })
      .def_property_readonly("tuples_distinct",
                             [](const EmbeddingCount& c) {
                               return to_py_int(c.tuples_distinct);
                             })
      .def_property_readonly("normalized",
                             [](const EmbeddingCount& c) {
                               return to_py_fraction(c.normalized);
                             })
      .def_property_readonly("normalized_distinct",
                             [](const EmbeddingCount& c) {
                               return to_py_fraction(c.normalized_distinct);
                             })
      .def_readonly("normalized_f", &EmbeddingCount::normalized_f)
      .def_readonly("normalized_distinct_f",
                    &EmbeddingCount::normalized_distinct_f);

  m.def("count_bruteforce", &count_bruteforce, "set"_a, "graph"_a,
        "budget"_a = kDefaultCountBudget);
  m.def("count_backtracking", &count_backtracking, "set"_a, "graph"_a,
        "spheres"_a);
  m.def("fullspace_triangle_count", &fullspace_triangle_count, "space"_a,
        "lam"_a, "spheres"_a);

  py::class_<TheoremCheckRecord>(m, "TheoremCheckRecord")
      .def_readonly("graph", &TheoremCheckRecord::graph)
      .def_readonly("n", &TheoremCheckRecord::n)
      .def_readonly("m", &TheoremCheckRecord::m)
      .def_readonly("t", &TheoremCheckRecord::t)
      .def_readonly("field_spec", &TheoremCheckRecord::field_spec)
      .def_readonly("d", &TheoremCheckRecord::d)
      .def_readonly("set_size", &TheoremCheckRecord::set_size)
      .def_readonly("alpha", &TheoremCheckRecord::alpha)
      .def_readonly("normalized", &TheoremCheckRecord::normalized)
      .def_readonly("normalized_distinct",
                    &TheoremCheckRecord::normalized_distinct)
      .def_readonly("hypothesis_met", &TheoremCheckRecord::hypothesis_met)
      .def_readonly("gap", &TheoremCheckRecord::gap)
      .def_readonly("bound", &TheoremCheckRecord::bound)
      .def_readonly("holds", &TheoremCheckRecord::holds)
      .def_readonly("defect", &TheoremCheckRecord::defect)
      .def_readonly("defect_bound", &TheoremCheckRecord::defect_bound)
      .def_readonly("defect_holds", &TheoremCheckRecord::defect_holds)
      .def_readonly("genuine_threshold_met",
                    &TheoremCheckRecord::genuine_threshold_met)
      .def_readonly("genuine_holds", &TheoremCheckRecord::genuine_holds);

  m.def("asymptotic_check", &asymptotic_check, "set"_a, "graph"_a, "counts"_a);
  m.def("genuine_check", &genuine_check, "set"_a, "graph"_a, "counts"_a);

  m.def("random_set", &random_set, "space"_a, "density"_a, "seed"_a,
        "index_budget"_a = kDefaultIndexBudget);
  m.def("random_table", &random_table, "space"_a, "seed"_a);
  m.def("load_graph_source", &load_graph_source, "source"_a, "q"_a,
        "seed"_a = 0);

  m.def(
      "run_experiment",
      [](const std::string& field_spec, int d, const std::string& suite,
         const std::string& graph, const std::string& set_file,
         std::optional<double> density, std::uint64_t seed,
         std::optional<Elem> lam, std::uint64_t index_budget,
         std::uint64_t count_budget) {
        ExperimentSpec spec;
        spec.field_spec = field_spec;
        spec.d = d;
        spec.suite = suite;
        spec.graph_source = graph;
        spec.set_file = set_file;
        spec.density = density;
        spec.seed = seed;
        spec.lambda = lam;
        spec.index_budget = index_budget;
        spec.count_budget = count_budget;
        auto result = run_experiment(spec);
        py::dict out;
        out["json"] = result.json;
        out["checked"] = result.summary.checked;
        out["held"] = result.summary.held;
        out["not_applicable"] = result.summary.not_applicable;
        out["failed"] = result.summary.failed;
        return out;
      },
      "field_spec"_a, "d"_a = 2, "suite"_a = "all", "graph"_a = "",
      "set_file"_a = "", "density"_a = py::none(), "seed"_a = 0,
      "lam"_a = py::none(), "index_budget"_a = kDefaultIndexBudget,
      "count_budget"_a = kDefaultCountBudget);
}
