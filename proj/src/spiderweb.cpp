#include "tightweb/spiderweb.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace tightweb {

namespace {

int mod(long long a, int n) { return static_cast<int>(((a % n) + n) % n); }

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

bool is_permutation_of_range(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

Params Params::make(int d, int k) {
  if (d < 2) throw std::invalid_argument("dimension d must be >= 2");
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  Params p;
  p.d = d;
  p.k = k;
  p.n = (d + 1) * ((d + 2) * k + 2) + 1;
  return p;
}

void MVector::validate(const Params& p) const {
  if (static_cast<int>(m.size()) != p.k + 1)
    throw std::invalid_argument("m-vector needs k+1 entries");
  for (int v : m) {
    if (v < 1 || v >= p.n) throw std::invalid_argument("m-vector entry out of range");
    // the 2(d+1) signed multiples l*v, |l| <= d+1, must be distinct and
    // nonzero; for composite n this admits entries that are not units
    // (the published solution counts require them)
    if (p.n / static_cast<int>(gcd_ll(v, p.n)) <= 2 * (p.d + 1))
      throw std::invalid_argument("m-vector entry " + std::to_string(v) +
                                  " has order <= 2(d+1) mod " + std::to_string(p.n));
  }
  std::vector<int> copy = m;
  std::sort(copy.begin(), copy.end());
  if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
    throw std::invalid_argument("m-vector entries must be distinct");
  if (m.back() != 1) throw std::invalid_argument("m-vector must be normalized with m_k = 1");
}

std::pair<int, int> PermutationPair::type() const {
  auto zero_at = [](const std::vector<int>& p) {
    return static_cast<int>(std::find(p.begin(), p.end(), 0) - p.begin());
  };
  return {zero_at(sigma), zero_at(tau)};
}

SpiderwebGraph::SpiderwebGraph(const Params& p, const MVector& m) : params_(p), m_(m) {
  m_.validate(p);
  rings_ = (p.d + 1) * p.k + 1;
  adj_.assign(static_cast<size_t>(rings_) * p.n, {});
  auto add_edge = [this](int u, int v) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  };
  // orbit cycles C_i on ring (d+1)i with step m_i
  for (int i = 0; i <= p.k; ++i) {
    const int ring = (p.d + 1) * i;
    for (int ell = 0; ell < p.n; ++ell)
      add_edge(vertex_id(ring, ell), vertex_id(ring, mod(ell + m_.m[i], p.n)));
  }
  // radial paths P_j
  for (int ring = 0; ring + 1 < rings_; ++ring)
    for (int j = 0; j < p.n; ++j) add_edge(vertex_id(ring, j), vertex_id(ring + 1, j));
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

long long SpiderwebGraph::n_edges() const {
  long long total = 0;
  for (const auto& nb : adj_) total += static_cast<long long>(nb.size());
  return total / 2;
}

int SpiderwebGraph::rotated(int id, int shift) const {
  const int n = params_.n;
  return ring_of(id) * n + mod(column_of(id) + shift, n);
}

bool SpiderwebGraph::has_edge(int u, int v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> SpiderwebGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_vertices(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

SpiderwebGraph make_graph(const Params& p, const MVector& m) { return SpiderwebGraph(p, m); }

Treetype treetype(const std::vector<int>& sigma, const std::vector<int>& tau) {
  if (sigma.size() != tau.size() || sigma.empty())
    throw std::invalid_argument("permutations must have equal positive length");
  if (!is_permutation_of_range(sigma) || !is_permutation_of_range(tau))
    throw std::invalid_argument("inputs are not permutations of {0..d}");
  const int d = static_cast<int>(sigma.size()) - 1;
  Treetype t;
  for (int p = 0; p <= d; ++p)
    for (int q = 0; q <= d; ++q)
      if (sigma[p] + tau[q] >= d + 1) t.tuples.emplace_back(p + 1, q + 1);
  std::sort(t.tuples.begin(), t.tuples.end());
  return t;
}

PermutationPair permutations_from_treetype(const Treetype& t, int d) {
  if (static_cast<long long>(t.tuples.size()) != static_cast<long long>(d + 1) * d / 2)
    throw std::invalid_argument("treetype must have binom(d+1,2) tuples");
  std::vector<int> sigma(static_cast<size_t>(d) + 1, 0), tau(static_cast<size_t>(d) + 1, 0);
  for (auto [a, b] : t.tuples) {
    if (a < 1 || a > d + 1 || b < 1 || b > d + 1)
      throw std::invalid_argument("treetype tuple out of range");
    ++sigma[a - 1];
    ++tau[b - 1];
  }
  PermutationPair pair{sigma, tau};
  if (!is_permutation_of_range(sigma) || !is_permutation_of_range(tau))
    throw std::invalid_argument("treetype occurrence counts do not form permutations");
  if (!(treetype(sigma, tau) == t))
    throw std::invalid_argument("treetype is not realizable by any permutation pair");
  return pair;
}

SpanSet span(const Deck& deck, const MVector& m, const Params& p) {
  SpanSet s;
  s.n = p.n;
  s.member.assign(p.n, 0);
  auto add = [&s, &p](long long value) {
    int r = mod(value, p.n);
    if (!s.member[r]) {
      s.member[r] = 1;
      ++s.size;
    }
  };
  for (int j = 0; j <= p.k; ++j)
    for (int ell = 0; ell <= p.d + 1; ++ell) {
      add(static_cast<long long>(ell) * m.m[j]);
      add(-static_cast<long long>(ell) * m.m[j]);
    }
  for (int i = 1; i <= deck.k(); ++i) {
    const auto& sigma = deck.pairs[i - 1].sigma;
    const auto& tau = deck.pairs[i - 1].tau;
    for (int pp = 0; pp <= p.d; ++pp)
      for (int qq = 0; qq <= p.d; ++qq)
        if (sigma[pp] + tau[qq] >= p.d + 1) {
          long long diff =
              static_cast<long long>(qq + 1) * m.m[i - 1] - static_cast<long long>(pp + 1) * m.m[i];
          add(diff);
          add(-diff);
        }
  }
  s.full = (s.size == p.n);
  return s;
}

DeckReport deck_conditions(const Deck& deck, const MVector& m, const Params& p) {
  DeckReport r;
  m.validate(p);
  if (deck.k() != p.k) return r;
  for (const auto& pair : deck.pairs) {
    if (static_cast<int>(pair.sigma.size()) != p.d + 1 ||
        static_cast<int>(pair.tau.size()) != p.d + 1)
      return r;
    if (!is_permutation_of_range(pair.sigma) || !is_permutation_of_range(pair.tau)) return r;
  }
  r.shape_ok = true;
  r.span_full = span(deck, m, p).full;
  r.middle_ok = true;
  for (int i = 2; i <= p.k; ++i)
    for (int t = 0; t <= p.d - 1; ++t)
      if (deck.pairs[i - 1].tau[t] + deck.pairs[i - 2].sigma[t] < 1) r.middle_ok = false;
  r.tail_ok = true;
  for (int i = 1; i <= p.k; ++i)
    if (deck.pairs[i - 1].sigma[p.d] < 1 || deck.pairs[i - 1].tau[p.d] < 1) r.tail_ok = false;
  return r;
}

InducedTree build_tree(int j, const Deck& deck, const MVector& m, const SpiderwebGraph& g) {
  const Params& p = g.params();
  if (deck.k() != p.k) throw std::invalid_argument("deck size does not match k");
  const int n = p.n;
  std::vector<char> in(g.n_vertices(), 0);
  std::vector<int> verts;
  auto add = [&](int ring, long long col) {
    int id = g.vertex_id(ring, mod(col, n));
    if (!in[id]) {
      in[id] = 1;
      verts.push_back(id);
    }
  };

  // Offsets run in the negative direction so that the assembled facets
  // match the published orbit representatives; the positive direction
  // yields the mirror image of every complex.
  // (i) orbit paths along each cycle ring
  for (int i = 0; i <= p.k; ++i)
    for (int t = 0; t <= p.d + 1; ++t) add((p.d + 1) * i, j - static_cast<long long>(t) * m.m[i]);
  // (ii) the radial path P_j
  for (int ring = 0; ring < g.rings(); ++ring) add(ring, j);
  // (iii) outward paths of length tau_{i+1}(l-1) at v_{(d+1)i}(j - l m_i)
  for (int i = 0; i + 1 <= p.k; ++i)
    for (int ell = 1; ell <= p.d + 1; ++ell) {
      int len = deck.pairs[i].tau[ell - 1];
      for (int s = 0; s <= len; ++s)
        add((p.d + 1) * i + s, j - static_cast<long long>(ell) * m.m[i]);
    }
  // (iv) inward paths of length sigma_i(l-1) at v_{(d+1)i}(j - l m_i)
  for (int i = 1; i <= p.k; ++i)
    for (int ell = 1; ell <= p.d + 1; ++ell) {
      int len = deck.pairs[i - 1].sigma[ell - 1];
      for (int s = 0; s <= len; ++s)
        add((p.d + 1) * i - s, j - static_cast<long long>(ell) * m.m[i]);
    }

  std::sort(verts.begin(), verts.end());

  InducedTree tree;
  tree.root = mod(j, n);
  tree.vertices = verts;
  for (int u : verts)
    for (int v : g.adjacency()[u])
      if (u < v && in[v]) tree.edges.emplace_back(u, v);

  // structural guarantees of the construction, re-verified
  const long long expected = static_cast<long long>(n) - p.d - 1;
  if (static_cast<long long>(verts.size()) != expected)
    throw StructureError("tree at " + std::to_string(tree.root) + " has " +
                         std::to_string(verts.size()) + " vertices, expected " +
                         std::to_string(expected));
  if (static_cast<long long>(tree.edges.size()) != expected - 1)
    throw StructureError("induced subgraph at " + std::to_string(tree.root) +
                         " is not a tree (edge count " + std::to_string(tree.edges.size()) + ")");
  {
    // connectivity over the induced edges
    std::vector<std::vector<int>> local(verts.size());
    std::vector<int> pos(g.n_vertices(), -1);
    for (int t = 0; t < static_cast<int>(verts.size()); ++t) pos[verts[t]] = t;
    for (auto [u, v] : tree.edges) {
      local[pos[u]].push_back(pos[v]);
      local[pos[v]].push_back(pos[u]);
    }
    std::vector<char> seen(verts.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    size_t reached = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : local[u])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached != verts.size())
      throw StructureError("induced subgraph at " + std::to_string(tree.root) +
                           " is disconnected");
    for (int t = 0; t < static_cast<int>(verts.size()); ++t) {
      long long defect = static_cast<long long>(g.adjacency()[verts[t]].size()) -
                         static_cast<long long>(local[t].size());
      if (defect > 1)
        throw StructureError("tree vertex has degree defect " + std::to_string(defect) +
                             " in the ambient graph, limit is 1");
    }
  }
  return tree;
}

std::vector<InducedTree> build_all_trees(const Deck& deck, const MVector& m,
                                         const SpiderwebGraph& g) {
  std::vector<InducedTree> trees;
  trees.reserve(g.params().n);
  for (int j = 0; j < g.params().n; ++j) trees.push_back(build_tree(j, deck, m, g));
  return trees;
}

bool trees_intersect(const Deck& deck, const MVector& m, const SpiderwebGraph& g, int j) {
  InducedTree t0 = build_tree(0, deck, m, g);
  const int n = g.params().n;
  std::vector<char> in(g.n_vertices(), 0);
  for (int v : t0.vertices) in[v] = 1;
  for (int v : t0.vertices)
    if (in[g.rotated(v, -mod(j, n))]) return true;
  return false;
}

int permutation_sign(const std::vector<int>& sigma) {
  if (!is_permutation_of_range(sigma)) throw std::invalid_argument("not a permutation");
  std::vector<char> seen(sigma.size(), 0);
  int sign = 1;
  for (size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = sigma[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

namespace {

std::vector<std::vector<std::string>> tokenize_all(std::istream& in) {
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

int to_int(const std::string& tok, int line) {
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

DeckFile read_deck(std::istream& in) {
  auto lines = tokenize_all(in);
  int d = -1, k = -1;
  std::vector<int> m;
  std::vector<std::vector<int>> sigmas, taus;
  std::vector<char> have_sigma, have_tau;
  for (size_t li = 0; li < lines.size(); ++li) {
    const auto& t = lines[li];
    const int ln = static_cast<int>(li) + 1;
    if (t.empty()) continue;
    if (t[0] == "d") {
      if (t.size() != 2) throw ParseError(ln, "expected 'd <d>'");
      d = to_int(t[1], ln);
    } else if (t[0] == "k") {
      if (t.size() != 2) throw ParseError(ln, "expected 'k <k>'");
      k = to_int(t[1], ln);
      sigmas.assign(k, {});
      taus.assign(k, {});
      have_sigma.assign(k, 0);
      have_tau.assign(k, 0);
    } else if (t[0] == "m") {
      if (k < 0) throw ParseError(ln, "'m' line before 'k'");
      if (static_cast<int>(t.size()) != k + 2)
        throw ParseError(ln, "expected " + std::to_string(k + 1) + " m-vector entries");
      m.clear();
      for (size_t i = 1; i < t.size(); ++i) m.push_back(to_int(t[i], ln));
    } else if (t[0] == "sigma" || t[0] == "tau") {
      if (d < 0 || k < 0) throw ParseError(ln, "permutation line before 'd'/'k'");
      if (static_cast<int>(t.size()) != d + 3)
        throw ParseError(ln, "expected index plus " + std::to_string(d + 1) + " values");
      int idx = to_int(t[1], ln);
      if (idx < 1 || idx > k) throw ParseError(ln, "permutation index out of range 1..k");
      std::vector<int> vals;
      for (size_t i = 2; i < t.size(); ++i) vals.push_back(to_int(t[i], ln));
      if (t[0] == "sigma") {
        sigmas[idx - 1] = std::move(vals);
        have_sigma[idx - 1] = 1;
      } else {
        taus[idx - 1] = std::move(vals);
        have_tau[idx - 1] = 1;
      }
    } else {
      throw ParseError(ln, "unknown directive '" + t[0] + "'");
    }
  }
  const int end_line = static_cast<int>(lines.size());
  if (d < 0) throw ParseError(end_line, "missing 'd' line");
  if (k < 0) throw ParseError(end_line, "missing 'k' line");
  if (static_cast<int>(m.size()) != k + 1) throw ParseError(end_line, "missing 'm' line");
  for (int i = 0; i < k; ++i)
    if (!have_sigma[i] || !have_tau[i])
      throw ParseError(end_line, "missing sigma/tau " + std::to_string(i + 1));

  DeckFile df;
  df.params = Params::make(d, k);
  df.m.m = std::move(m);
  df.m.validate(df.params);
  for (int i = 0; i < k; ++i) df.deck.pairs.push_back({sigmas[i], taus[i]});
  return df;
}

DeckFile read_deck_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return read_deck(in);
}

void write_deck(std::ostream& out, const DeckFile& df, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << "\n";
  out << "d " << df.params.d << "\n";
  out << "k " << df.params.k << "\n";
  out << "m";
  for (int v : df.m.m) out << ' ' << v;
  out << "\n";
  for (int i = df.params.k; i >= 1; --i) {
    out << "sigma " << i;
    for (int v : df.deck.pairs[i - 1].sigma) out << ' ' << v;
    out << "\n";
    out << "tau " << i;
    for (int v : df.deck.pairs[i - 1].tau) out << ' ' << v;
    out << "\n";
  }
}

void write_deck_file(const std::string& path, const DeckFile& df,
                     const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
  write_deck(out, df, comments);
}

}  // namespace tightweb
