#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tightweb {

using Vertex = int;

// A face is a strictly increasing list of vertex ids.
using Face = std::vector<Vertex>;

// Thrown when an input violates a structural requirement (not a usage error).
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by the text-format readers; carries a 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct FVector {
  std::vector<long long> counts;  // counts[i] = number of i-faces
  long long euler() const;
  bool operator==(const FVector&) const = default;
};

// Undirected simple graph on nodes 0..n_nodes-1.
struct Graph {
  int n_nodes = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted, unique

  static Graph from_edges(int n_nodes, std::vector<std::pair<int, int>> edges);

  std::vector<std::vector<int>> adjacency() const;
  bool connected() const;
  bool is_tree() const;
  bool has_edge(int u, int v) const;
};

// A pure simplicial complex stored as its facet set.  Facets are kept
// sorted lexicographically; vertex ids live in [0, n_vertices) but need
// not all be used (links keep the ambient labels).
class FacetComplex {
 public:
  FacetComplex() = default;
  FacetComplex(int dim, int n_vertices, std::vector<Face> facets);

  int dim() const { return dim_; }
  int n_vertices() const { return n_vertices_; }
  const std::vector<Face>& facets() const { return facets_; }
  bool empty() const { return facets_.empty(); }
  bool has_facet(const Face& f) const;

  std::vector<Vertex> used_vertices() const;  // sorted
  long long n_used_vertices() const;

  bool operator==(const FacetComplex&) const = default;

 private:
  int dim_ = 0;
  int n_vertices_ = 1;
  std::vector<Face> facets_;
};

// All i-dimensional faces, deduplicated, sorted lexicographically.
std::vector<Face> skeleton(const FacetComplex& x, int i);

FVector f_vector(const FacetComplex& x);
long long euler_characteristic(const FacetComplex& x);

// Faces of x contained in w, represented by their maximal members.
std::vector<Face> induced_subcomplex(const FacetComplex& x, const std::vector<Vertex>& w);

// Facets F \ {v} for each facet F containing v; dimension drops by one.
FacetComplex link(const FacetComplex& x, Vertex v);

// One node per facet (in facet order), an edge whenever two facets share
// a codimension-one face.
Graph dual_graph(const FacetComplex& x);

bool is_weak_pseudomanifold(const FacetComplex& x);
bool is_pseudomanifold(const FacetComplex& x);

// Pure (dim-1)-complex of ridges lying in exactly one facet; empty when x
// is closed.  Throws StructureError if some ridge lies in three or more
// facets.
FacetComplex boundary_complex(const FacetComplex& x);

// Every k-subset of the used vertices spans a (k-1)-face.
bool is_k_neighbourly(const FacetComplex& x, int k);

// Applies a permutation of the vertex ids (perm[v] = new id of v).
FacetComplex relabel(const FacetComplex& x, const std::vector<Vertex>& perm);

// Searches for a vertex bijection carrying facets onto facets.
std::optional<std::vector<Vertex>> is_isomorphic(const FacetComplex& x, const FacetComplex& y);

// Canonical byte string: equal keys iff the complexes are isomorphic.
// `automorphisms` may carry known automorphisms (as vertex permutations);
// they only prune the search and never change the result.
std::string canonical_key(const FacetComplex& x,
                          const std::vector<std::vector<Vertex>>& automorphisms = {});

// ".fct" text format.
FacetComplex read_fct(std::istream& in);
FacetComplex read_fct_file(const std::string& path);
void write_fct(std::ostream& out, const FacetComplex& x,
               const std::vector<std::string>& comments = {});
void write_fct_file(const std::string& path, const FacetComplex& x,
                    const std::vector<std::string>& comments = {});

long long binomial(long long n, long long k);

}  // namespace tightweb
