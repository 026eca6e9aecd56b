#include "tightweb/simplicial.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace tightweb {

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long FVector::euler() const {
  long long chi = 0;
  for (size_t i = 0; i < counts.size(); ++i) chi += (i % 2 == 0) ? counts[i] : -counts[i];
  return chi;
}

namespace {

struct FaceHash {
  size_t operator()(const Face& f) const {
    size_t h = 1469598103934665603ull;
    for (Vertex v : f) {
      h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

using FaceCountMap = std::unordered_map<Face, int, FaceHash>;

// ridge -> indices of incident facets (at most a handful each)
std::unordered_map<Face, std::vector<int>, FaceHash> ridge_map(const FacetComplex& x) {
  std::unordered_map<Face, std::vector<int>, FaceHash> m;
  m.reserve(x.facets().size() * (x.dim() + 1));
  Face ridge(static_cast<size_t>(x.dim()));
  for (int fi = 0; fi < static_cast<int>(x.facets().size()); ++fi) {
    const Face& f = x.facets()[fi];
    for (size_t drop = 0; drop < f.size(); ++drop) {
      ridge.clear();
      for (size_t i = 0; i < f.size(); ++i)
        if (i != drop) ridge.push_back(f[i]);
      m[ridge].push_back(fi);
    }
  }
  return m;
}

}  // namespace

Graph Graph::from_edges(int n_nodes, std::vector<std::pair<int, int>> e) {
  Graph g;
  g.n_nodes = n_nodes;
  for (auto& [u, v] : e) {
    if (u == v) throw std::invalid_argument("graph edge is a loop");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_nodes) throw std::invalid_argument("graph edge endpoint out of range");
  }
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  g.edges = std::move(e);
  return g;
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n_nodes);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

bool Graph::connected() const {
  if (n_nodes == 0) return true;
  auto adj = adjacency();
  std::vector<char> seen(n_nodes, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n_nodes;
}

bool Graph::is_tree() const {
  return static_cast<long long>(edges.size()) == static_cast<long long>(n_nodes) - 1 &&
         connected();
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

FacetComplex::FacetComplex(int dim, int n_vertices, std::vector<Face> facets)
    : dim_(dim), n_vertices_(n_vertices), facets_(std::move(facets)) {
  if (dim_ < 0) throw std::invalid_argument("complex dimension must be non-negative");
  if (n_vertices_ < 1) throw std::invalid_argument("complex needs at least one vertex");
  for (const Face& f : facets_) {
    if (static_cast<int>(f.size()) != dim_ + 1)
      throw std::invalid_argument("facet has " + std::to_string(f.size()) +
                                  " vertices, expected " + std::to_string(dim_ + 1));
    for (size_t i = 0; i < f.size(); ++i) {
      if (f[i] < 0 || f[i] >= n_vertices_)
        throw std::invalid_argument("facet vertex " + std::to_string(f[i]) + " out of range");
      if (i > 0 && f[i] <= f[i - 1])
        throw std::invalid_argument("facet vertices must be strictly increasing");
    }
  }
  std::sort(facets_.begin(), facets_.end());
  facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
}

bool FacetComplex::has_facet(const Face& f) const {
  return std::binary_search(facets_.begin(), facets_.end(), f);
}

std::vector<Vertex> FacetComplex::used_vertices() const {
  std::vector<char> used(n_vertices_, 0);
  for (const Face& f : facets_)
    for (Vertex v : f) used[v] = 1;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_vertices_; ++v)
    if (used[v]) out.push_back(v);
  return out;
}

long long FacetComplex::n_used_vertices() const {
  return static_cast<long long>(used_vertices().size());
}

std::vector<Face> skeleton(const FacetComplex& x, int i) {
  if (i < 0 || i > x.dim())
    throw std::invalid_argument("skeleton dimension " + std::to_string(i) + " out of range");
  if (i == x.dim()) return x.facets();
  std::vector<Face> out;
  Face sub(static_cast<size_t>(i) + 1);
  std::vector<int> idx(static_cast<size_t>(i) + 1);
  const int r = i + 1;
  for (const Face& f : x.facets()) {
    const int n = static_cast<int>(f.size());
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      for (int t = 0; t < r; ++t) sub[t] = f[idx[t]];
      out.push_back(sub);
      int t = r - 1;
      while (t >= 0 && idx[t] == n - r + t) --t;
      if (t < 0) break;
      ++idx[t];
      for (int s = t + 1; s < r; ++s) idx[s] = idx[s - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FVector f_vector(const FacetComplex& x) {
  FVector fv;
  if (x.empty()) {
    fv.counts.assign(static_cast<size_t>(x.dim()) + 1, 0);
    return fv;
  }
  for (int i = 0; i <= x.dim(); ++i)
    fv.counts.push_back(static_cast<long long>(skeleton(x, i).size()));
  return fv;
}

long long euler_characteristic(const FacetComplex& x) { return f_vector(x).euler(); }

std::vector<Face> induced_subcomplex(const FacetComplex& x, const std::vector<Vertex>& w) {
  std::vector<char> in(x.n_vertices(), 0);
  for (Vertex v : w) {
    if (v < 0 || v >= x.n_vertices()) throw std::invalid_argument("vertex out of range");
    in[v] = 1;
  }
  std::vector<Face> parts;
  for (const Face& f : x.facets()) {
    Face g;
    for (Vertex v : f)
      if (in[v]) g.push_back(v);
    if (!g.empty()) parts.push_back(std::move(g));
  }
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  // keep only maximal members
  std::vector<Face> out;
  for (size_t i = 0; i < parts.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < parts.size() && maximal; ++j) {
      if (i == j || parts[j].size() <= parts[i].size()) continue;
      maximal = !std::includes(parts[j].begin(), parts[j].end(), parts[i].begin(), parts[i].end());
    }
    if (maximal) out.push_back(parts[i]);
  }
  return out;
}

FacetComplex link(const FacetComplex& x, Vertex v) {
  if (v < 0 || v >= x.n_vertices()) throw std::invalid_argument("vertex out of range");
  if (x.dim() < 1) throw std::invalid_argument("link requires dimension >= 1");
  std::vector<Face> facets;
  for (const Face& f : x.facets()) {
    if (!std::binary_search(f.begin(), f.end(), v)) continue;
    Face g;
    for (Vertex u : f)
      if (u != v) g.push_back(u);
    facets.push_back(std::move(g));
  }
  if (facets.empty()) throw std::invalid_argument("vertex is unused");
  return FacetComplex(x.dim() - 1, x.n_vertices(), std::move(facets));
}

Graph dual_graph(const FacetComplex& x) {
  std::vector<std::pair<int, int>> edges;
  if (!x.empty()) {
    auto rm = ridge_map(x);
    for (const auto& [ridge, incident] : rm)
      for (size_t a = 0; a < incident.size(); ++a)
        for (size_t b = a + 1; b < incident.size(); ++b)
          edges.emplace_back(incident[a], incident[b]);
  }
  return Graph::from_edges(static_cast<int>(x.facets().size()), std::move(edges));
}

bool is_weak_pseudomanifold(const FacetComplex& x) {
  if (x.empty()) return true;
  auto rm = ridge_map(x);
  for (const auto& [ridge, incident] : rm)
    if (incident.size() > 2) return false;
  return true;
}

bool is_pseudomanifold(const FacetComplex& x) {
  if (x.empty()) return false;
  return is_weak_pseudomanifold(x) && dual_graph(x).connected();
}

FacetComplex boundary_complex(const FacetComplex& x) {
  if (x.empty()) return FacetComplex(std::max(x.dim() - 1, 0), x.n_vertices(), {});
  auto rm = ridge_map(x);
  std::vector<Face> bd;
  for (const auto& [ridge, incident] : rm) {
    if (incident.size() > 2)
      throw StructureError("ridge lies in " + std::to_string(incident.size()) +
                           " facets; not a weak pseudomanifold");
    if (incident.size() == 1) bd.push_back(ridge);
  }
  return FacetComplex(std::max(x.dim() - 1, 0), x.n_vertices(), std::move(bd));
}

bool is_k_neighbourly(const FacetComplex& x, int k) {
  if (k < 1 || k > x.dim() + 1) throw std::invalid_argument("neighbourliness order out of range");
  const long long f0 = x.n_used_vertices();
  return static_cast<long long>(skeleton(x, k - 1).size()) == binomial(f0, k);
}

FacetComplex relabel(const FacetComplex& x, const std::vector<Vertex>& perm) {
  if (static_cast<int>(perm.size()) != x.n_vertices())
    throw std::invalid_argument("permutation size mismatch");
  std::vector<Face> facets;
  facets.reserve(x.facets().size());
  for (const Face& f : x.facets()) {
    Face g;
    g.reserve(f.size());
    for (Vertex v : f) g.push_back(perm[v]);
    std::sort(g.begin(), g.end());
    facets.push_back(std::move(g));
  }
  return FacetComplex(x.dim(), x.n_vertices(), std::move(facets));
}

namespace {

// Shared scaffolding for isomorphism search and canonical labeling: the
// complex restricted to its used vertices, with per-vertex facet lists and
// the pair-count matrix (# facets containing both u and v).
struct CompressedComplex {
  int n = 0;  // used vertices, renumbered 0..n-1
  int dim = 0;
  std::vector<Face> facets;                 // over renumbered vertices, sorted
  std::vector<std::vector<int>> at_vertex;  // facet ids containing v
  std::vector<std::vector<int>> paircount;  // n x n

  explicit CompressedComplex(const FacetComplex& x) {
    dim = x.dim();
    std::vector<Vertex> used = x.used_vertices();
    n = static_cast<int>(used.size());
    std::vector<int> newid(x.n_vertices(), -1);
    for (int i = 0; i < n; ++i) newid[used[i]] = i;
    facets.reserve(x.facets().size());
    for (const Face& f : x.facets()) {
      Face g;
      g.reserve(f.size());
      for (Vertex v : f) g.push_back(newid[v]);
      facets.push_back(std::move(g));
    }
    std::sort(facets.begin(), facets.end());
    at_vertex.assign(n, {});
    paircount.assign(n, std::vector<int>(n, 0));
    for (int fi = 0; fi < static_cast<int>(facets.size()); ++fi) {
      const Face& f = facets[fi];
      for (size_t a = 0; a < f.size(); ++a) {
        at_vertex[f[a]].push_back(fi);
        for (size_t b = a + 1; b < f.size(); ++b) {
          ++paircount[f[a]][f[b]];
          ++paircount[f[b]][f[a]];
        }
      }
    }
  }
};

// Canonical labeling by branch and bound over vertex orderings.  The
// encoding of an ordering lists, per position t, the pair counts to the
// earlier vertices followed by the facets completed at t; tokens are
// arranged so that plain lexicographic comparison prefers densely packed
// orderings.  The minimum over all orderings is a complete isomorphism
// invariant since the final block sequence spells out the whole relabeled
// facet set.
class CanonicalLabeler {
 public:
  CanonicalLabeler(const CompressedComplex& cc, const std::vector<std::vector<int>>& root_orbits)
      : cc_(cc), root_orbits_(root_orbits) {}

  std::vector<int> run() {
    const int n = cc_.n;
    best_.assign(1, SENTINEL);
    best_order_.clear();
    order_.assign(n, -1);
    position_.assign(n, -1);
    facet_hits_.assign(cc_.facets.size(), 0);
    enc_.clear();
    if (n == 0) return {};
    dfs(0);
    return best_order_;
  }

 private:
  static constexpr int SENTINEL = std::numeric_limits<int>::max();
  static constexpr int FLIP = 1 << 28;  // larger counts encode as smaller tokens

  void candidate_segment(int v, int t, std::vector<int>& seg) {
    seg.clear();
    for (int s = 0; s < t; ++s) seg.push_back(FLIP - cc_.paircount[v][order_[s]]);
    completed_.clear();
    for (int fi : cc_.at_vertex[v])
      if (facet_hits_[fi] == cc_.dim) completed_.push_back(fi);
    seg.push_back(FLIP - static_cast<int>(completed_.size()));
    if (!completed_.empty()) {
      // relabeled faces, sorted
      block_.clear();
      for (int fi : completed_) {
        Face g;
        g.reserve(cc_.facets[fi].size());
        for (int u : cc_.facets[fi]) g.push_back(u == v ? t : position_[u]);
        std::sort(g.begin(), g.end());
        block_.push_back(std::move(g));
      }
      std::sort(block_.begin(), block_.end());
      for (const Face& g : block_)
        for (int u : g) seg.push_back(u);
    }
  }

  // -1 / 0 / +1 comparison of seg against best_ starting at offset.
  int compare_to_best(const std::vector<int>& seg, size_t offset) {
    for (size_t i = 0; i < seg.size(); ++i) {
      if (offset + i >= best_.size()) return 1;
      if (seg[i] != best_[offset + i]) return seg[i] < best_[offset + i] ? -1 : 1;
    }
    return 0;
  }

  void place(int v, int t) {
    order_[t] = v;
    position_[v] = t;
    for (int fi : cc_.at_vertex[v]) ++facet_hits_[fi];
  }

  void unplace(int v, int t) {
    for (int fi : cc_.at_vertex[v]) --facet_hits_[fi];
    order_[t] = -1;
    position_[v] = -1;
  }

  // The loop below keeps the invariant that enc_ matches best_ up to the
  // current offset: every explored candidate either ties with the incumbent
  // prefix or replaces it (truncated at this branch) before descending.
  void dfs(int t) {
    const int n = cc_.n;
    if (t == n) {
      best_ = enc_;
      best_order_ = order_;
      return;
    }
    std::vector<std::pair<int, std::vector<int>>> cands;
    if (t == 0) {
      for (const auto& orbit : root_orbits_) cands.push_back({orbit.front(), {}});
    } else {
      for (int v = 0; v < n; ++v)
        if (position_[v] < 0) cands.push_back({v, {}});
    }
    for (auto& c : cands) candidate_segment(c.first, t, c.second);
    std::sort(cands.begin(), cands.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });

    const size_t offset = enc_.size();
    for (const auto& [v, seg] : cands) {
      int cmp = compare_to_best(seg, offset);
      if (cmp > 0) break;  // candidates are sorted; the rest are no better
      if (cmp < 0) {
        best_.assign(enc_.begin(), enc_.end());
        best_.insert(best_.end(), seg.begin(), seg.end());
        best_.push_back(SENTINEL);
      }
      enc_.insert(enc_.end(), seg.begin(), seg.end());
      place(v, t);
      dfs(t + 1);
      unplace(v, t);
      enc_.resize(offset);
    }
  }

  const CompressedComplex& cc_;
  const std::vector<std::vector<int>>& root_orbits_;
  std::vector<int> best_, enc_, order_, position_, facet_hits_, best_order_;
  std::vector<int> completed_;
  std::vector<Face> block_;
};

}  // namespace

std::string canonical_key(const FacetComplex& x,
                          const std::vector<std::vector<Vertex>>& automorphisms) {
  CompressedComplex cc(x);

  // Orbits of the used vertices under the supplied automorphisms; only the
  // root level of the search uses them.
  std::vector<std::vector<int>> root_orbits;
  {
    std::vector<int> parent(cc.n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    if (!automorphisms.empty()) {
      std::vector<Vertex> used = x.used_vertices();
      std::vector<int> newid(x.n_vertices(), -1);
      for (int i = 0; i < cc.n; ++i) newid[used[i]] = i;
      for (const auto& perm : automorphisms) {
        if (static_cast<int>(perm.size()) != x.n_vertices())
          throw std::invalid_argument("automorphism size mismatch");
        for (Vertex v : used) {
          Vertex w = perm[v];
          if (w < 0 || w >= x.n_vertices() || newid[w] < 0)
            throw std::invalid_argument("automorphism does not preserve the used vertex set");
          int a = find(newid[v]), b = find(newid[w]);
          if (a != b) parent[a] = b;
        }
      }
    }
    std::vector<std::vector<int>> groups(cc.n);
    for (int v = 0; v < cc.n; ++v) groups[find(v)].push_back(v);
    for (auto& g : groups)
      if (!g.empty()) root_orbits.push_back(std::move(g));
  }

  CanonicalLabeler labeler(cc, root_orbits);
  std::vector<int> order = labeler.run();
  std::vector<int> pos(cc.n);
  for (int t = 0; t < cc.n; ++t) pos[order[t]] = t;

  std::vector<Face> canon;
  canon.reserve(cc.facets.size());
  for (const Face& f : cc.facets) {
    Face g;
    g.reserve(f.size());
    for (int v : f) g.push_back(pos[v]);
    std::sort(g.begin(), g.end());
    canon.push_back(std::move(g));
  }
  std::sort(canon.begin(), canon.end());

  std::string key;
  auto put = [&key](int value) {
    for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>((value >> (8 * b)) & 0xff));
  };
  put(cc.dim);
  put(cc.n);
  put(static_cast<int>(canon.size()));
  for (const Face& f : canon)
    for (int v : f) put(v);
  return key;
}

namespace {

// Backtracking facet-preserving bijection search, pruned by incidence
// counts and pair counts.  Deliberately independent of the canonical
// labeling above so the two can cross-check each other.
class IsomorphismSearch {
 public:
  IsomorphismSearch(const CompressedComplex& a, const CompressedComplex& b) : a_(a), b_(b) {}

  std::optional<std::vector<int>> run() {
    if (a_.n != b_.n || a_.dim != b_.dim || a_.facets.size() != b_.facets.size()) return {};
    // visit vertices of a in a constraint-dense order
    visit_order_.clear();
    {
      std::vector<char> chosen(a_.n, 0);
      for (int step = 0; step < a_.n; ++step) {
        int bestv = -1;
        long long bestscore = -1;
        for (int v = 0; v < a_.n; ++v) {
          if (chosen[v]) continue;
          long long score = 0;
          for (int u = 0; u < a_.n; ++u)
            if (chosen[u] && a_.paircount[v][u] > 0) ++score;
          score = score * 1000 + static_cast<long long>(a_.at_vertex[v].size());
          if (score > bestscore) {
            bestscore = score;
            bestv = v;
          }
        }
        chosen[bestv] = 1;
        visit_order_.push_back(bestv);
      }
    }
    map_.assign(a_.n, -1);
    used_.assign(b_.n, 0);
    b_facets_.reserve(b_.facets.size());
    for (const Face& f : b_.facets) b_facets_.push_back(f);
    std::sort(b_facets_.begin(), b_facets_.end());
    if (dfs(0)) return map_;
    return {};
  }

 private:
  bool dfs(int step) {
    if (step == a_.n) return true;
    int v = visit_order_[step];
    for (int w = 0; w < b_.n; ++w) {
      if (used_[w]) continue;
      if (a_.at_vertex[v].size() != b_.at_vertex[w].size()) continue;
      bool ok = true;
      for (int s = 0; s < step && ok; ++s) {
        int u = visit_order_[s];
        ok = a_.paircount[v][u] == b_.paircount[w][map_[u]];
      }
      if (!ok) continue;
      map_[v] = w;
      used_[w] = 1;
      // every facet of a completed by v must map onto a facet of b
      for (int fi : a_.at_vertex[v]) {
        const Face& f = a_.facets[fi];
        Face img;
        img.reserve(f.size());
        bool complete = true;
        for (int u : f) {
          if (map_[u] < 0) {
            complete = false;
            break;
          }
          img.push_back(map_[u]);
        }
        if (!complete) continue;
        std::sort(img.begin(), img.end());
        if (!std::binary_search(b_facets_.begin(), b_facets_.end(), img)) {
          ok = false;
          break;
        }
      }
      if (ok && dfs(step + 1)) return true;
      map_[v] = -1;
      used_[w] = 0;
    }
    return false;
  }

  const CompressedComplex& a_;
  const CompressedComplex& b_;
  std::vector<int> visit_order_, map_;
  std::vector<char> used_;
  std::vector<Face> b_facets_;
};

}  // namespace

std::optional<std::vector<Vertex>> is_isomorphic(const FacetComplex& x, const FacetComplex& y) {
  if (x.dim() != y.dim()) return {};
  if (f_vector(x) != f_vector(y)) return {};
  CompressedComplex a(x), b(y);
  IsomorphismSearch search(a, b);
  auto m = search.run();
  if (!m) return {};
  // lift back to the original labels; unused vertices map in index order
  std::vector<Vertex> ua = x.used_vertices(), ub = y.used_vertices();
  std::vector<Vertex> out(x.n_vertices(), -1);
  for (size_t i = 0; i < ua.size(); ++i) out[ua[i]] = ub[(*m)[i]];
  std::vector<char> taken(y.n_vertices(), 0);
  for (Vertex v : out)
    if (v >= 0) taken[v] = 1;
  int next = 0;
  for (Vertex v = 0; v < x.n_vertices(); ++v) {
    if (out[v] >= 0) continue;
    while (next < y.n_vertices() && taken[next]) ++next;
    if (next < y.n_vertices()) out[v] = next++;
  }
  return out;
}

namespace {

std::vector<std::vector<std::string>> tokenize_lines(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    lines.push_back(std::move(tokens));
  }
  return lines;
}

int parse_int(const std::string& tok, int line) {
  try {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
}

}  // namespace

FacetComplex read_fct(std::istream& in) {
  auto lines = tokenize_lines(in);
  int dim = -1, vertices = -1;
  std::vector<Face> facets;
  for (size_t li = 0; li < lines.size(); ++li) {
    const auto& t = lines[li];
    const int ln = static_cast<int>(li) + 1;
    if (t.empty()) continue;
    if (t[0] == "dim") {
      if (t.size() != 2) throw ParseError(ln, "expected 'dim <d>'");
      dim = parse_int(t[1], ln);
    } else if (t[0] == "vertices") {
      if (t.size() != 2) throw ParseError(ln, "expected 'vertices <n>'");
      vertices = parse_int(t[1], ln);
    } else if (t[0] == "facet") {
      if (dim < 0 || vertices < 0)
        throw ParseError(ln, "facet before 'dim'/'vertices' header");
      if (static_cast<int>(t.size()) != dim + 2)
        throw ParseError(ln, "expected " + std::to_string(dim + 1) + " vertices on facet line");
      Face f;
      for (size_t i = 1; i < t.size(); ++i) f.push_back(parse_int(t[i], ln));
      for (size_t i = 1; i < f.size(); ++i)
        if (f[i] <= f[i - 1]) throw ParseError(ln, "facet vertices must be strictly increasing");
      for (Vertex v : f)
        if (v < 0 || v >= vertices) throw ParseError(ln, "vertex id out of range");
      facets.push_back(std::move(f));
    } else {
      throw ParseError(ln, "unknown directive '" + t[0] + "'");
    }
  }
  if (dim < 0) throw ParseError(static_cast<int>(lines.size()), "missing 'dim' header");
  if (vertices < 0) throw ParseError(static_cast<int>(lines.size()), "missing 'vertices' header");
  FacetComplex x(dim, vertices, std::move(facets));
  // vertex ids must be 0-based and contiguous
  if (x.n_used_vertices() != vertices)
    throw ParseError(static_cast<int>(lines.size()),
                     "vertex ids must use every value in [0, vertices)");
  return x;
}

FacetComplex read_fct_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return read_fct(in);
}

void write_fct(std::ostream& out, const FacetComplex& x,
               const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << "\n";
  out << "dim " << x.dim() << "\n";
  out << "vertices " << x.n_vertices() << "\n";
  for (const Face& f : x.facets()) {
    out << "facet";
    for (Vertex v : f) out << ' ' << v;
    out << "\n";
  }
}

void write_fct_file(const std::string& path, const FacetComplex& x,
                    const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
  write_fct(out, x, comments);
}

}  // namespace tightweb
