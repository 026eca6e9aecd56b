#pragma once

#include <string>
#include <vector>

#include "tightweb/simplicial.hpp"
#include "tightweb/spiderweb.hpp"

namespace tightweb {

// The (d+1)-dimensional handlebody K(G, DT) on vertex set Z_n, together
// with its provenance and the facet assigned to each graph vertex.
struct HandleComplex {
  FacetComplex complex;  // dim d+1, n vertices
  Params params;
  MVector m;
  Deck deck;
  std::vector<Face> hat;  // hat[u] = {j : u in DT_j}, per graph vertex id

  std::vector<std::string> provenance_comments() const;
};

// Assembles the facets hat(u) = {j : u in DT_j} and verifies the cover
// counts: every graph vertex lies in exactly d+2 trees and every graph
// edge in exactly d+1.
HandleComplex build_complex(const SpiderwebGraph& g, const std::vector<InducedTree>& trees);

// Convenience pipeline: graph, trees, complex.
HandleComplex build_handlebody(const Params& p, const MVector& m, const Deck& deck);

// One lexicographically minimal representative per rotation orbit
// (j -> j+1 mod n), sorted; verifies the action is free and preserves the
// facet set.
std::vector<Face> orbit_representatives(const FacetComplex& x, int n);

struct BoundaryReport {
  FacetComplex boundary;
  bool closed = false;          // the boundary itself has empty boundary
  long long vertices = 0;       // used vertices of the boundary
  bool skeleton_match = false;  // skel_{d-1}(K) == skel_{d-1}(bd K)
};

// Extracts bd K and asserts: bd K closed, f_0(bd K) = n, and the
// codimension-two skeletons of K and bd K agree.
BoundaryReport boundary_of(const HandleComplex& k);

// Verifies that u -> hat(u) is a graph isomorphism onto the dual graph of
// K; returns the facet index assigned to each graph vertex.
std::vector<int> check_dual_graph(const HandleComplex& k, const SpiderwebGraph& g);

// Does j -> j+1 mod n map the facet set onto itself?
bool check_transitivity(const FacetComplex& x, int n);

}  // namespace tightweb
