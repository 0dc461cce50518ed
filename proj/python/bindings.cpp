#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>

#include "grpwl/acceptance.hpp"
#include "grpwl/descriptors.hpp"
#include "grpwl/error.hpp"
#include "grpwl/io.hpp"
#include "grpwl/iso.hpp"
#include "grpwl/mekler.hpp"
#include "grpwl/pebble.hpp"
#include "grpwl/wl.hpp"

namespace py = pybind11;
using namespace grpwl;

namespace {

MarkedVersion version_of(int v) {
  if (v != 1 && v != 2) throw Error(ErrorCode::kInvalidArgument, "version must be 1 or 2");
  return v == 1 ? MarkedVersion::kI : MarkedVersion::kII;
}

WlOptions wl_options(std::size_t k, const std::string& mode, const std::string& criterion,
                     std::optional<std::size_t> rounds, unsigned threads) {
  WlOptions o;
  o.k = k;
  if (mode != "countfree" && mode != "counting")
    throw Error(ErrorCode::kInvalidArgument, "mode must be countfree or counting");
  if (criterion != "set" && criterion != "multiset")
    throw Error(ErrorCode::kInvalidArgument, "criterion must be set or multiset");
  o.mode = mode == "counting" ? WlMode::kCounting : WlMode::kCountFree;
  o.criterion = criterion == "set" ? Criterion::kSet : Criterion::kMultiset;
  o.rounds = rounds;
  o.threads = threads;
  return o;
}

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["distinguished"] = v.distinguished;
  d["reason"] = v.reason;
  d["round"] = v.round ? py::cast(*v.round) : py::none();
  d["rounds_run"] = v.rounds_run;
  d["reached_stable"] = v.reached_stable;
  return d;
}

RefinableStructure as_structure(const py::object& x, int version) {
  if (py::isinstance<Graph>(x))
    return RefinableStructure::graph(std::make_shared<const Graph>(x.cast<Graph>()));
  return RefinableStructure::group(std::make_shared<const Group>(x.cast<Group>()),
                                   version_of(version));
}

}  // namespace

PYBIND11_MODULE(_grpwl, m) {
  m.doc() = "WL refinement, pebble games and isomorphism tests on finite groups";

  // Messages start with the error code name, e.g. "NotLatinSquare: ...".
  py::register_exception<Error>(m, "GrpwlError", PyExc_ValueError);

  py::class_<Group>(m, "Group")
      .def_property_readonly("order", &Group::order)
      .def_property_readonly("identity", &Group::identity)
      .def("mul", &Group::mul)
      .def("inv", &Group::inv)
      .def("element_order", &Group::elt_order)
      .def("is_abelian", &Group::is_abelian)
      .def("exponent", &Group::exponent)
      .def("table", [](const Group& g) {
        auto t = g.table();
        return std::vector<Element>(t.begin(), t.end());
      })
      .def("to_text", [](const Group& g) { return to_text(g); })
      .def("__eq__", [](const Group& a, const Group& b) { return a == b; })
      .def("__repr__", [](const Group& g) { return "<Group order=" + std::to_string(g.order()) + ">"; });

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("adjacent", &Graph::adjacent)
      .def("edges", &Graph::sorted_edges)
      .def("to_text", [](const Graph& g) { return to_text(g); })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges()) + ">";
      });

  m.def("from_table", [](const std::vector<std::vector<Element>>& rows) { return validate_cayley(rows); },
        "Validate a Cayley table given as rows.");
  m.def("build_group", [](const std::string& d, std::size_t cap) { return build_group(d, cap); },
        py::arg("descriptor"), py::arg("cap") = kDefaultCayleyCap);
  m.def("build_graph", &build_graph, py::arg("descriptor"));
  m.def("parse", [](const std::string& text) -> py::object {
    std::istringstream in(text);
    Structure s = read_structure(in);
    if (auto* g = std::get_if<Group>(&s)) return py::cast(*g);
    return py::cast(std::get<Graph>(s));
  });
  m.def("cfi", [](const Graph& base, const std::vector<Edge>& twist) { return cfi(base, twist).graph; },
        py::arg("base"), py::arg("twist") = std::vector<Edge>{});

  m.def("wl_classes",
        [](const py::object& x, std::size_t k, const std::string& mode, int version,
           std::optional<std::size_t> rounds, unsigned threads) {
          auto s = as_structure(x, version);
          WlOptions o = wl_options(k, mode, "multiset", rounds, threads);
          Coloring c = run_single(s, o.k, o.mode, o.rounds, o.threads);
          py::list hist;
          for (const auto& r : c.history) hist.append(r.num_classes);
          return hist;
        },
        py::arg("structure"), py::arg("k") = 2, py::arg("mode") = "countfree", py::arg("version") = 1,
        py::arg("rounds") = py::none(), py::arg("threads") = 0,
        "Number of color classes after each round.");
  m.def("wl_compare",
        [](const py::object& a, const py::object& b, std::size_t k, const std::string& mode,
           const std::string& criterion, int version, std::optional<std::size_t> rounds,
           unsigned threads) {
          auto l = as_structure(a, version);
          auto r = as_structure(b, version);
          return verdict_dict(run(l, r, wl_options(k, mode, criterion, rounds, threads)).verdict);
        },
        py::arg("left"), py::arg("right"), py::arg("k") = 2, py::arg("mode") = "countfree",
        py::arg("criterion") = "multiset", py::arg("version") = 1, py::arg("rounds") = py::none(),
        py::arg("threads") = 0);

  m.def("isomorphic",
        [](const Group& a, const Group& b, const std::string& method, std::size_t cap) -> py::object {
          IsoResult r;
          if (method == "oracle")
            r = oracle_isomorphic(a, b, cap);
          else if (method == "abelian")
            r = abelian_isomorphic(a, b);
          else if (method == "wl")
            r = wl_pipeline(a, b, WlOptions{}, MarkedVersion::kII);
          else
            throw Error(ErrorCode::kInvalidArgument, "method must be oracle, abelian or wl");
          if (r.verdict == IsoVerdict::kInconclusive) return py::none();
          return py::bool_(r.isomorphic());
        },
        py::arg("left"), py::arg("right"), py::arg("method") = "oracle",
        py::arg("cap") = kDefaultOracleCap, "True, False, or None when inconclusive.");
  m.def("abelian_invariants", &abelian_invariants);

  m.def("canonical_digest",
        [](const Group& g, std::size_t d, int version) {
          CanonizeOptions o;
          o.d = d;
          o.version = version_of(version);
          return certificate_digest(canonize(g, o));
        },
        py::arg("group"), py::arg("d") = 2, py::arg("version") = 2);

  m.def("mekler_order_exponent",
        [](const Graph& g, std::uint32_t p) { return MeklerGroup(g, p).order_exponent(); },
        py::arg("graph"), py::arg("p") = 3);
  m.def("mekler_group",
        [](const Graph& g, std::uint32_t p, std::size_t cap) { return MeklerGroup(g, p).to_cayley(cap); },
        py::arg("graph"), py::arg("p") = 3, py::arg("cap") = kDefaultCayleyCap);

  m.def("exhaustive_spoiler_wins",
        [](const Group& a, const Group& b, std::size_t budget, std::size_t rounds, int version) {
          return exhaustive_spoiler(a, b, budget, rounds, version_of(version));
        },
        py::arg("left"), py::arg("right"), py::arg("budget"), py::arg("rounds"), py::arg("version") = 2);
  m.def("family_games",
        [](std::uint32_t q, std::uint32_t n, std::size_t budget, std::size_t games, std::size_t rounds,
           std::uint64_t seed) {
          auto [ls, rs] = theorem_family_implicit(q, n);
          auto l = std::make_shared<const AbelianGroup>(ls);
          auto r = std::make_shared<const AbelianGroup>(rs);
          std::size_t losses = 0, broken = 0;
          for (std::size_t i = 0; i < games; ++i) {
            GameState st(l, r, budget, q, MarkedVersion::kII);
            RandomSpoiler sp(seed + i);
            FamilyDuplicator dup(l, r);
            GameRecord rec = play_game(st, sp, dup, rounds, l.get(), r.get());
            losses += rec.outcome == Outcome::kSpoilerWins;
            broken += rec.invariant_broken;
          }
          py::dict d;
          d["games"] = games;
          d["losses"] = losses;
          d["invariant_broken"] = broken;
          return d;
        },
        py::arg("q"), py::arg("n"), py::arg("budget") = 1, py::arg("games") = 10, py::arg("rounds") = 10,
        py::arg("seed") = 1, "Random Spoiler against the family Duplicator.");

  m.def("acceptance_tags", &acceptance_tags);
  m.def("run_acceptance",
        [](const std::string& tag) {
          CriterionResult r = run_acceptance(tag);
          py::dict d;
          d["number"] = r.number;
          d["tag"] = r.tag;
          d["passed"] = r.passed;
          d["facts"] = r.facts;
          d["failures"] = r.failures;
          return d;
        },
        py::arg("tag"));
}
