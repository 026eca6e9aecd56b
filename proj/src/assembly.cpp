#include "tightweb/assembly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tightweb {

std::vector<std::string> HandleComplex::provenance_comments() const {
  std::vector<std::string> out;
  out.push_back("d " + std::to_string(params.d));
  out.push_back("k " + std::to_string(params.k));
  {
    std::ostringstream os;
    os << "m";
    for (int v : m.m) os << ' ' << v;
    out.push_back(os.str());
  }
  for (int i = params.k; i >= 1; --i) {
    std::ostringstream os;
    os << "sigma " << i;
    for (int v : deck.pairs[i - 1].sigma) os << ' ' << v;
    os << " ; tau " << i;
    for (int v : deck.pairs[i - 1].tau) os << ' ' << v;
    out.push_back(os.str());
  }
  return out;
}

HandleComplex build_complex(const SpiderwebGraph& g, const std::vector<InducedTree>& trees) {
  const Params& p = g.params();
  const int n = p.n;
  if (static_cast<int>(trees.size()) != n)
    throw std::invalid_argument("expected one tree per residue class");
  for (int j = 0; j < n; ++j)
    if (trees[j].root != j) throw std::invalid_argument("trees must be indexed by their root");

  std::vector<Face> hat(g.n_vertices());
  for (int j = 0; j < n; ++j)
    for (int u : trees[j].vertices) hat[u].push_back(j);

  // cover counts: every graph vertex in d+2 trees
  for (int u = 0; u < g.n_vertices(); ++u)
    if (static_cast<int>(hat[u].size()) != p.d + 2)
      throw StructureError("graph vertex lies in " + std::to_string(hat[u].size()) +
                           " trees, expected " + std::to_string(p.d + 2));
  // and every graph edge in d+1 trees
  for (int u = 0; u < g.n_vertices(); ++u)
    for (int v : g.adjacency()[u]) {
      if (v < u) continue;
      Face meet;
      std::set_intersection(hat[u].begin(), hat[u].end(), hat[v].begin(), hat[v].end(),
                            std::back_inserter(meet));
      if (static_cast<int>(meet.size()) != p.d + 1)
        throw StructureError("graph edge covered by " + std::to_string(meet.size()) +
                             " trees, expected " + std::to_string(p.d + 1));
    }

  std::vector<Face> facets = hat;
  std::sort(facets.begin(), facets.end());
  if (std::adjacent_find(facets.begin(), facets.end()) != facets.end())
    throw StructureError("two graph vertices produced the same facet");

  HandleComplex k;
  k.complex = FacetComplex(p.d + 1, n, std::move(facets));
  k.params = p;
  k.m = g.m_vector();
  k.hat = std::move(hat);
  return k;
}

HandleComplex build_handlebody(const Params& p, const MVector& m, const Deck& deck) {
  DeckReport report = deck_conditions(deck, m, p);
  if (!report.pass())
    throw StructureError(std::string("deck conditions failed:") +
                         (report.shape_ok ? "" : " shape") +
                         (report.span_full ? "" : " span") +
                         (report.middle_ok ? "" : " middle") + (report.tail_ok ? "" : " tail"));
  SpiderwebGraph g = make_graph(p, m);
  auto trees = build_all_trees(deck, m, g);
  HandleComplex k = build_complex(g, trees);
  k.deck = deck;
  return k;
}

std::vector<Face> orbit_representatives(const FacetComplex& x, int n) {
  if (n < 1 || n > x.n_vertices())
    throw std::invalid_argument("rotation modulus out of range");
  if (!check_transitivity(x, n))
    throw StructureError("facet set is not invariant under the rotation");
  std::vector<Face> reps;
  for (const Face& f : x.facets()) {
    Face best;
    for (Vertex shift : f) {
      Face g;
      g.reserve(f.size());
      for (Vertex v : f) g.push_back(((v - shift) % n + n) % n);
      std::sort(g.begin(), g.end());
      if (best.empty() || g < best) best = std::move(g);
    }
    reps.push_back(std::move(best));
  }
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  if (reps.size() * static_cast<size_t>(n) != x.facets().size())
    throw StructureError("rotation action on facets is not free");
  return reps;
}

BoundaryReport boundary_of(const HandleComplex& k) {
  BoundaryReport r;
  r.boundary = boundary_complex(k.complex);
  if (r.boundary.empty()) throw StructureError("handlebody has empty boundary");
  r.closed = boundary_complex(r.boundary).empty();
  if (!r.closed) throw StructureError("boundary complex is not closed");
  r.vertices = r.boundary.n_used_vertices();
  if (r.vertices != k.params.n)
    throw StructureError("boundary misses vertices: " + std::to_string(r.vertices) + " of " +
                         std::to_string(k.params.n));
  const int d = k.params.d;
  r.skeleton_match = skeleton(k.complex, d - 1) == skeleton(r.boundary, d - 1);
  if (!r.skeleton_match)
    throw StructureError("interior faces of dimension < d exist; handlebody is not stacked");
  return r;
}

std::vector<int> check_dual_graph(const HandleComplex& k, const SpiderwebGraph& g) {
  Graph dual = dual_graph(k.complex);
  if (dual.n_nodes != g.n_vertices()) throw StructureError("dual graph node count mismatch");
  if (static_cast<long long>(dual.edges.size()) != g.n_edges())
    throw StructureError("dual graph edge count mismatch");

  const auto& facets = k.complex.facets();
  std::vector<int> to_facet(g.n_vertices(), -1);
  for (int u = 0; u < g.n_vertices(); ++u) {
    auto it = std::lower_bound(facets.begin(), facets.end(), k.hat[u]);
    if (it == facets.end() || *it != k.hat[u])
      throw StructureError("facet of a graph vertex missing from the complex");
    to_facet[u] = static_cast<int>(it - facets.begin());
  }
  // edge sets must correspond under u -> hat(u), both directions
  for (int u = 0; u < g.n_vertices(); ++u)
    for (int v : g.adjacency()[u]) {
      if (v < u) continue;
      if (!dual.has_edge(to_facet[u], to_facet[v]))
        throw StructureError("graph edge missing from the dual graph");
    }
  // counts equal and the map is injective, so the reverse inclusion follows
  std::vector<int> seen(dual.n_nodes, 0);
  for (int f : to_facet) {
    if (seen[f]) throw StructureError("facet map is not injective");
    seen[f] = 1;
  }
  return to_facet;
}

bool check_transitivity(const FacetComplex& x, int n) {
  for (const Face& f : x.facets()) {
    Face g;
    g.reserve(f.size());
    for (Vertex v : f) g.push_back((v + 1) % n);
    std::sort(g.begin(), g.end());
    if (!x.has_facet(g)) return false;
  }
  return true;
}

}  // namespace tightweb
