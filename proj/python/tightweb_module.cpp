#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tightweb/assembly.hpp"
#include "tightweb/certify.hpp"
#include "tightweb/search.hpp"
#include "tightweb/simplicial.hpp"
#include "tightweb/spiderweb.hpp"
#include "tightweb/zhomology.hpp"

namespace py = pybind11;
using namespace tightweb;

namespace {

Deck deck_from_pairs(const std::vector<std::pair<std::vector<int>, std::vector<int>>>& pairs) {
  Deck deck;
  for (const auto& [sigma, tau] : pairs) deck.pairs.push_back({sigma, tau});
  return deck;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> deck_to_pairs(const Deck& deck) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (const auto& p : deck.pairs) out.emplace_back(p.sigma, p.tau);
  return out;
}

py::dict summary_to_dict(const SearchSummary& s) {
  py::dict d;
  d["d"] = s.d;
  d["k"] = s.k;
  d["n"] = s.n;
  d["raw"] = s.raw;
  d["solutions"] = s.solutions;
  d["aborted"] = s.aborted;
  return d;
}

}  // namespace

PYBIND11_MODULE(tightweb, m) {
  m.doc() = "tight triangulations of manifolds from spiderweb graphs and permutation decks";

  py::register_exception<StructureError>(m, "StructureError");
  py::register_exception<ParseError>(m, "FormatError");

  py::class_<FacetComplex>(m, "Complex")
      .def(py::init<int, int, std::vector<Face>>(), py::arg("dim"), py::arg("n_vertices"),
           py::arg("facets"))
      .def_property_readonly("dim", &FacetComplex::dim)
      .def_property_readonly("n_vertices", &FacetComplex::n_vertices)
      .def_property_readonly("facets", [](const FacetComplex& x) { return x.facets(); })
      .def("f_vector", [](const FacetComplex& x) { return f_vector(x).counts; })
      .def("euler_characteristic", [](const FacetComplex& x) { return euler_characteristic(x); })
      .def("skeleton", [](const FacetComplex& x, int i) { return skeleton(x, i); }, py::arg("i"))
      .def("induced_subcomplex",
           [](const FacetComplex& x, const std::vector<Vertex>& w) {
             return induced_subcomplex(x, w);
           },
           py::arg("vertices"))
      .def("link", [](const FacetComplex& x, Vertex v) { return link(x, v); }, py::arg("vertex"))
      .def("dual_graph_edges",
           [](const FacetComplex& x) { return dual_graph(x).edges; })
      .def("boundary", [](const FacetComplex& x) { return boundary_complex(x); })
      .def("is_weak_pseudomanifold", [](const FacetComplex& x) { return is_weak_pseudomanifold(x); })
      .def("is_pseudomanifold", [](const FacetComplex& x) { return is_pseudomanifold(x); })
      .def("is_neighbourly",
           [](const FacetComplex& x, int k) { return is_k_neighbourly(x, k); }, py::arg("k") = 2)
      .def("betti", [](const FacetComplex& x) { return betti_z2(x).beta; })
      .def("betti1", [](const FacetComplex& x) { return betti1_z2(x); })
      .def("is_orientable", [](const FacetComplex& x) { return is_orientable(x); })
      .def("is_tight_bruteforce",
           [](const FacetComplex& x, int cap) { return is_z2_tight_bruteforce(x, cap); },
           py::arg("max_vertices") = 16)
      .def("canonical_key",
           [](const FacetComplex& x) { return py::bytes(canonical_key(x)); })
      .def("is_isomorphic",
           [](const FacetComplex& x, const FacetComplex& y) { return is_isomorphic(x, y); })
      .def("orbit_representatives",
           [](const FacetComplex& x, int n) { return orbit_representatives(x, n); },
           py::arg("n"))
      .def("certify",
           [](const FacetComplex& x, const std::string& label) {
             Certificate c = certify_tight(x, label);
             py::dict d;
             d["verdict"] = std::string(Certificate::verdict_name(c.verdict));
             d["report"] = c.to_text();
             return d;
           },
           py::arg("label") = "complex")
      .def("write_fct", [](const FacetComplex& x, const std::string& path) {
        write_fct_file(path, x);
      })
      .def("__eq__", [](const FacetComplex& a, const FacetComplex& b) { return a == b; })
      .def("__repr__", [](const FacetComplex& x) {
        std::ostringstream os;
        os << "Complex(dim=" << x.dim() << ", vertices=" << x.n_vertices() << ", facets="
           << x.facets().size() << ")";
        return os.str();
      });

  m.def("read_fct", &read_fct_file, py::arg("path"));

  m.def("treetype",
        [](const std::vector<int>& sigma, const std::vector<int>& tau) {
          return treetype(sigma, tau).tuples;
        },
        py::arg("sigma"), py::arg("tau"));
  m.def("permutations_from_treetype",
        [](const std::vector<std::pair<int, int>>& tuples, int d) {
          Treetype t{tuples};
          std::sort(t.tuples.begin(), t.tuples.end());
          PermutationPair p = permutations_from_treetype(t, d);
          return std::make_pair(p.sigma, p.tau);
        },
        py::arg("tuples"), py::arg("d"));

  m.def("deck_conditions",
        [](int d, int k, const std::vector<int>& mvec,
           const std::vector<std::pair<std::vector<int>, std::vector<int>>>& pairs) {
          Params p = Params::make(d, k);
          MVector m{mvec};
          DeckReport r = deck_conditions(deck_from_pairs(pairs), m, p);
          py::dict out;
          out["span_full"] = r.span_full;
          out["middle_ok"] = r.middle_ok;
          out["tail_ok"] = r.tail_ok;
          out["pass"] = r.pass();
          return out;
        },
        py::arg("d"), py::arg("k"), py::arg("m"), py::arg("deck"));

  m.def("build_handlebody",
        [](int d, int k, const std::vector<int>& mvec,
           const std::vector<std::pair<std::vector<int>, std::vector<int>>>& pairs) {
          Params p = Params::make(d, k);
          MVector m{mvec};
          HandleComplex h = build_handlebody(p, m, deck_from_pairs(pairs));
          BoundaryReport br = boundary_of(h);
          py::dict out;
          out["complex"] = h.complex;
          out["boundary"] = br.boundary;
          out["orbit_representatives"] = orbit_representatives(h.complex, p.n);
          return out;
        },
        py::arg("d"), py::arg("k"), py::arg("m"), py::arg("deck"));

  m.def("betti_from_formula", &betti_from_formula, py::arg("d"), py::arg("k"));
  m.def("family_count", &family_count, py::arg("d"));
  m.def("family_decks",
        [](int d) {
          std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
          for (const Deck& deck : family_decks(d)) {
            out.emplace_back(deck.pairs[0].sigma, deck.pairs[0].tau);
          }
          return out;
        },
        py::arg("d"));

  m.def("search",
        [](int d, int k, bool dedup, int jobs, const std::string& out_dir) {
          SearchTask task;
          task.d = d;
          task.k = k;
          task.dedup = dedup;
          task.jobs = jobs;
          task.out_dir = out_dir;
          SearchResult r = search(task);
          py::dict out = summary_to_dict(r.summary);
          py::list sols;
          for (const Solution& s : r.solutions) {
            py::dict e;
            e["m"] = s.m.m;
            e["deck"] = deck_to_pairs(s.deck);
            e["key"] = py::bytes(s.canonical_key);
            sols.append(e);
          }
          out["list"] = sols;
          return out;
        },
        py::arg("d"), py::arg("k"), py::arg("dedup") = true, py::arg("jobs") = 1,
        py::arg("out_dir") = std::string());
}
