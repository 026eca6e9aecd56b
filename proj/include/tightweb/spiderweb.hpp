#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "tightweb/simplicial.hpp"

namespace tightweb {

// Search parameters; n = (d+1)((d+2)k+2)+1 is always odd.
struct Params {
  int d = 2;
  int k = 0;
  int n = 0;

  static Params make(int d, int k);
  bool operator==(const Params&) const = default;
};

// Residues (m_0, ..., m_k), each invertible mod n, pairwise distinct,
// normalized so that m_k = 1.
struct MVector {
  std::vector<int> m;

  void validate(const Params& p) const;  // throws std::invalid_argument
  bool operator==(const MVector&) const = default;
};

struct PermutationPair {
  std::vector<int> sigma;
  std::vector<int> tau;

  // (l, m) with sigma(l) = 0 and tau(m) = 0.
  std::pair<int, int> type() const;
  bool operator==(const PermutationPair&) const = default;
};

// pairs[i-1] holds (sigma_i, tau_i) for 1 <= i <= k.
struct Deck {
  std::vector<PermutationPair> pairs;

  int k() const { return static_cast<int>(pairs.size()); }
  bool operator==(const Deck&) const = default;
};

// {(p+1, q+1) : sigma(p) + tau(q) >= d+1}; always binom(d+1, 2) tuples.
struct Treetype {
  std::vector<std::pair<int, int>> tuples;  // sorted
  bool operator==(const Treetype&) const = default;
};

struct SpanSet {
  int n = 0;
  std::vector<char> member;  // indexed by residue
  long long size = 0;
  bool full = false;

  bool contains(int residue) const { return member[((residue % n) + n) % n] != 0; }
};

// The spiderweb graph: (d+1)k+1 concentric n-rings joined by radial
// paths, with an orbit cycle of step m_i on ring (d+1)i.  Vertex v_i(l)
// is encoded as i*n + l.
class SpiderwebGraph {
 public:
  SpiderwebGraph(const Params& p, const MVector& m);

  const Params& params() const { return params_; }
  const MVector& m_vector() const { return m_; }
  int rings() const { return rings_; }
  int n_vertices() const { return rings_ * params_.n; }
  long long n_edges() const;

  int vertex_id(int ring, int ell) const { return ring * params_.n + ell; }
  int ring_of(int id) const { return id / params_.n; }
  int column_of(int id) const { return id % params_.n; }
  int rotated(int id, int shift) const;  // the rotation automorphism, applied shift times

  const std::vector<std::vector<int>>& adjacency() const { return adj_; }
  bool has_edge(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;

 private:
  Params params_;
  MVector m_;
  int rings_ = 0;
  std::vector<std::vector<int>> adj_;
};

// One tree of the family; vertices are SpiderwebGraph ids.
struct InducedTree {
  int root = 0;  // the index j
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;
};

SpiderwebGraph make_graph(const Params& p, const MVector& m);

Treetype treetype(const std::vector<int>& sigma, const std::vector<int>& tau);

// Inverts the treetype map; throws std::invalid_argument when the tuple
// set is not realizable.
PermutationPair permutations_from_treetype(const Treetype& t, int d);

SpanSet span(const Deck& deck, const MVector& m, const Params& p);

struct DeckReport {
  bool shape_ok = false;      // sizes and permutation validity
  bool span_full = false;     // condition (i)
  bool middle_ok = false;     // condition (ii): tau_i(t) + sigma_{i-1}(t) >= 1
  bool tail_ok = false;       // condition (iii): sigma_i(d), tau_i(d) >= 1
  bool pass() const { return shape_ok && span_full && middle_ok && tail_ok; }
};

DeckReport deck_conditions(const Deck& deck, const MVector& m, const Params& p);

// Builds the induced tree rooted at column j and verifies it is a tree
// with n-d-1 vertices whose degree defect in the graph is at most one.
InducedTree build_tree(int j, const Deck& deck, const MVector& m, const SpiderwebGraph& g);

std::vector<InducedTree> build_all_trees(const Deck& deck, const MVector& m,
                                         const SpiderwebGraph& g);

// Do the trees rooted at 0 and at j share a vertex?
bool trees_intersect(const Deck& deck, const MVector& m, const SpiderwebGraph& g, int j);

int permutation_sign(const std::vector<int>& sigma);

// ".deck" text format.
struct DeckFile {
  Params params;
  MVector m;
  Deck deck;
  bool operator==(const DeckFile&) const = default;
};

DeckFile read_deck(std::istream& in);
DeckFile read_deck_file(const std::string& path);
void write_deck(std::ostream& out, const DeckFile& df,
                const std::vector<std::string>& comments = {});
void write_deck_file(const std::string& path, const DeckFile& df,
                     const std::vector<std::string>& comments = {});

}  // namespace tightweb
