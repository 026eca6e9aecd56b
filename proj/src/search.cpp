#include "tightweb/search.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "tightweb/zhomology.hpp"

namespace tightweb {

std::string SearchSummary::to_line() const {
  std::ostringstream os;
  os << "d=" << d << " k=" << k << " n=" << n << " raw=" << raw << " solutions=" << solutions;
  if (aborted > 0) os << " aborted=" << aborted;
  return os.str();
}

PermBlockTable PermBlockTable::make(int d) {
  if (d < 2) throw std::invalid_argument("dimension d must be >= 2");
  PermBlockTable t;
  t.d = d;
  t.perm_ids_by_type.assign(d, {});
  std::vector<int> p(static_cast<size_t>(d) + 1);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (p[d] == 0) continue;  // sigma(d) >= 1 is required of every deck entry
    int type = static_cast<int>(std::find(p.begin(), p.end(), 0) - p.begin());
    t.perm_ids_by_type[type].push_back(static_cast<int>(t.perms.size()));
    t.perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return t;
}

long long PermBlockTable::pairs_per_block() const {
  long long f = 1;
  for (int i = 2; i <= d; ++i) f *= i;
  return f * f;
}

long long PermBlockTable::total_pairs() const {
  return pairs_per_block() * d * d;
}

namespace {

int mod(long long a, int n) { return static_cast<int>(((a % n) + n) % n); }

// the set {±l m : 1 <= l <= d+1} reduced mod n
std::vector<int> multiple_set(int m, int d, int n) {
  std::vector<int> out;
  for (int ell = 1; ell <= d + 1; ++ell) {
    out.push_back(mod(static_cast<long long>(ell) * m, n));
    out.push_back(mod(-static_cast<long long>(ell) * m, n));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void m_vector_dfs(const Params& p, std::vector<int>& chosen, std::vector<char>& taken,
                  const std::vector<int>& candidates, std::vector<MVector>& out) {
  if (static_cast<int>(chosen.size()) == p.k) {
    MVector m;
    m.m = chosen;
    m.m.push_back(1);
    out.push_back(std::move(m));
    return;
  }
  for (int a : candidates) {
    auto mult = multiple_set(a, p.d, p.n);
    bool ok = true;
    for (int r : mult)
      if (taken[r]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    for (int r : mult) taken[r] = 1;
    chosen.push_back(a);
    m_vector_dfs(p, chosen, taken, candidates, out);
    chosen.pop_back();
    for (int r : mult) taken[r] = 0;
  }
}

}  // namespace

std::vector<MVector> enumerate_m_vectors(int d, int k) {
  Params p = Params::make(d, k);
  std::vector<int> candidates;
  for (int a = 2; a < p.n; ++a)
    if (p.n / std::gcd(a, p.n) > 2 * (d + 1)) candidates.push_back(a);
  std::vector<char> taken(p.n, 0);
  for (int r : multiple_set(1, d, p.n)) taken[r] = 1;  // m_k = 1
  std::vector<int> chosen;
  std::vector<MVector> out;
  m_vector_dfs(p, chosen, taken, candidates, out);
  return out;
}

namespace {

// Incremental span state for the deck depth-first search: residues are
// claimed level by level and released on backtrack.  Fullness at the end
// is equivalent to all claims having been disjoint.
struct SpanState {
  std::vector<char> member;
  long long size = 0;
  int n = 0;

  explicit SpanState(int n_) : member(n_, 0), n(n_) {}

  // claims value and -value, recording the residues in `added`; returns
  // false on collision with the state unchanged
  bool claim(long long value, std::vector<int>& added) {
    int r = mod(value, n);
    int s = mod(-value, n);
    if (member[r] || (s != r && member[s])) return false;
    member[r] = 1;
    ++size;
    added.push_back(r);
    if (s != r) {
      member[s] = 1;
      ++size;
      added.push_back(s);
    }
    return true;
  }

  void release(const std::vector<int>& added) {
    for (int r : added) {
      member[r] = 0;
      --size;
    }
  }
};

struct DeckDfs {
  const Params& p;
  const MVector& m;
  const PermBlockTable& table;
  const std::function<void(const Deck&)>& yield;
  SpanState span_state;
  std::vector<const std::vector<int>*> sigma_at, tau_at;  // per level 1..k

  DeckDfs(const Params& p_, const MVector& m_, const PermBlockTable& t_,
          const std::function<void(const Deck&)>& y_)
      : p(p_), m(m_), table(t_), yield(y_), span_state(p_.n) {
    sigma_at.assign(static_cast<size_t>(p.k) + 1, nullptr);
    tau_at.assign(static_cast<size_t>(p.k) + 1, nullptr);
  }

  void emit() {
    Deck deck;
    for (int i = 1; i <= p.k; ++i) deck.pairs.push_back({*sigma_at[i], *tau_at[i]});
    yield(deck);
  }

  // level runs k, k-1, ..., 1; prev_tau_type constrains sigma's type
  void descend(int level, int prev_tau_type) {
    if (level == 0) {
      if (span_state.size == p.n) emit();
      return;
    }
    std::vector<int> added;
    for (int stype = 0; stype < p.d; ++stype) {
      if (stype == prev_tau_type) continue;  // incompatible pair types
      for (int sid : table.perm_ids_by_type[stype]) {
        const std::vector<int>& sigma = table.perms[sid];
        for (int ttype = 0; ttype < p.d; ++ttype) {
          for (int tid : table.perm_ids_by_type[ttype]) {
            const std::vector<int>& tau = table.perms[tid];
            added.clear();
            bool ok = true;
            for (int pp = 0; pp <= p.d && ok; ++pp) {
              if (sigma[pp] == 0) continue;
              for (int qq = 0; qq <= p.d; ++qq) {
                if (sigma[pp] + tau[qq] < p.d + 1) continue;
                long long diff = static_cast<long long>(qq + 1) * m.m[level - 1] -
                                 static_cast<long long>(pp + 1) * m.m[level];
                if (!span_state.claim(diff, added)) {
                  ok = false;
                  break;
                }
              }
            }
            if (ok) {
              sigma_at[level] = &sigma;
              tau_at[level] = &tau;
              descend(level - 1, ttype);
            }
            span_state.release(added);
          }
        }
      }
    }
  }
};

}  // namespace

void enumerate_decks(const Params& p, const MVector& m, const PermBlockTable& table,
                     const std::function<void(const Deck&)>& yield) {
  m.validate(p);
  if (table.d != p.d) throw std::invalid_argument("table built for a different dimension");
  SpanState st(p.n);
  std::vector<int> base;
  for (int j = 0; j <= p.k; ++j)
    for (int ell = (j == 0 ? 0 : 1); ell <= p.d + 1; ++ell)
      if (!st.claim(static_cast<long long>(ell) * m.m[j], base))
        return;  // multiple sets collide; no deck can reach a full span
  DeckDfs dfs(p, m, table, yield);
  dfs.span_state = st;
  dfs.descend(p.k, -1);
}

std::vector<Deck> enumerate_decks(const Params& p, const MVector& m,
                                  const PermBlockTable& table) {
  std::vector<Deck> out;
  enumerate_decks(p, m, table, [&out](const Deck& d) { out.push_back(d); });
  return out;
}

std::string short_digest(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

namespace {

// Full evaluation of one (m, deck) candidate: build, verify, certify, key.
Solution evaluate_candidate(const Params& p, const MVector& m, const Deck& deck) {
  HandleComplex k = build_handlebody(p, m, deck);
  SpiderwebGraph g = make_graph(p, m);
  check_dual_graph(k, g);
  if (!check_transitivity(k.complex, p.n))
    throw StructureError("rotation does not preserve the handlebody facets");
  BoundaryReport br = boundary_of(k);
  if (!check_transitivity(br.boundary, p.n))
    throw StructureError("rotation does not preserve the boundary facets");

  Certificate cert = certify_tight(br.boundary, "boundary of K(G(" + std::to_string(p.d) + "," +
                                                    std::to_string(p.k) + "))");
  if (cert.verdict != Certificate::Verdict::Tight)
    throw StructureError("boundary certificate verdict is " +
                         std::string(Certificate::verdict_name(cert.verdict)));

  std::vector<Vertex> rotation(p.n);
  for (int v = 0; v < p.n; ++v) rotation[v] = (v + 1) % p.n;

  Solution s;
  s.m = m;
  s.deck = deck;
  s.canonical_key = canonical_key(br.boundary, {rotation});
  s.cert_digest = cert.digest();
  s.verdict = cert.verdict;
  return s;
}

void write_solution_files(const std::filesystem::path& dir, int index, const Params& p,
                          const Solution& s) {
  HandleComplex k = build_handlebody(p, s.m, s.deck);
  BoundaryReport br = boundary_of(k);
  std::ostringstream stem;
  stem << "sol" << std::setfill('0') << std::setw(3) << index;
  DeckFile df{p, s.m, s.deck};
  write_deck_file((dir / (stem.str() + ".deck")).string(), df,
                  {"canonical key digest " + short_digest(s.canonical_key)});
  auto comments = k.provenance_comments();
  write_fct_file((dir / (stem.str() + "_K.fct")).string(), k.complex, comments);
  comments.push_back("boundary complex");
  write_fct_file((dir / (stem.str() + "_boundary.fct")).string(), br.boundary, comments);
}

}  // namespace

SearchResult search(const SearchTask& task) {
  Params p = Params::make(task.d, task.k);
  PermBlockTable table = PermBlockTable::make(task.d);
  std::vector<MVector> mvecs = enumerate_m_vectors(task.d, task.k);

  struct Slot {
    std::vector<Solution> raw;
    long long aborted = 0;
  };
  std::vector<Slot> slots(mvecs.size());

  const int jobs = std::max(1, task.jobs);
  std::atomic<size_t> next{0};
  std::mutex log_mutex;
  auto worker = [&]() {
    while (true) {
      size_t idx = next.fetch_add(1);
      if (idx >= mvecs.size()) break;
      const MVector& m = mvecs[idx];
      enumerate_decks(p, m, table, [&](const Deck& deck) {
        try {
          slots[idx].raw.push_back(evaluate_candidate(p, m, deck));
        } catch (const std::exception& e) {
          std::lock_guard<std::mutex> lock(log_mutex);
          std::cerr << "candidate aborted (m =";
          for (int v : m.m) std::cerr << ' ' << v;
          std::cerr << "): " << e.what() << "\n";
          ++slots[idx].aborted;
        }
      });
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SearchResult result;
  result.summary.d = task.d;
  result.summary.k = task.k;
  result.summary.n = p.n;
  std::unordered_set<std::string> seen;
  for (const Slot& slot : slots) {
    result.summary.aborted += slot.aborted;
    for (const Solution& s : slot.raw) {
      ++result.summary.raw;
      if (task.dedup && !seen.insert(s.canonical_key).second) continue;
      result.solutions.push_back(s);
    }
  }
  result.summary.solutions = static_cast<long long>(result.solutions.size());

  if (!task.out_dir.empty()) {
    std::filesystem::path dir(task.out_dir);
    std::filesystem::create_directories(dir);
    for (size_t i = 0; i < result.solutions.size(); ++i)
      write_solution_files(dir, static_cast<int>(i), p, result.solutions[i]);
    std::ofstream summary(dir / "summary.txt");
    summary << result.summary.to_line() << "\n";
  }
  return result;
}

long long family_count(int d) {
  if (d < 2) throw std::invalid_argument("dimension d must be >= 2");
  long long c = 1;
  for (int i = 1; i < d; ++i) c *= 2;
  for (int i = 2; i <= d / 2; ++i) c *= i;
  for (int i = 2; i <= (d - 1) / 2; ++i) c *= i;
  return c;
}

namespace {

// All permutations (x_0, ..., x_d) extending the fixed assignments, with
// x_i + x_{partner(i)} = pair_sum for the position pairing i + partner =
// first_pos + d over positions first_pos..d.
void paired_assignments(int d, int first_pos, int pair_sum,
                        const std::vector<std::pair<int, int>>& fixed,
                        std::vector<std::vector<int>>& out) {
  std::vector<std::pair<int, int>> pos_pairs;
  int self_pos = -1;
  for (int i = first_pos; i <= d; ++i) {
    int partner = first_pos + d - i;
    if (i < partner) pos_pairs.emplace_back(i, partner);
    if (i == partner) self_pos = i;
  }
  std::vector<char> used(static_cast<size_t>(d) + 1, 0);
  std::vector<int> perm(static_cast<size_t>(d) + 1, -1);
  for (auto [pos, value] : fixed) {
    perm[pos] = value;
    used[value] = 1;
  }
  if (self_pos >= 0) {
    if (pair_sum % 2 != 0) return;  // no self-paired value exists
    int v = pair_sum / 2;
    if (v < 0 || v > d || used[v]) return;
    perm[self_pos] = v;
    used[v] = 1;
  }
  std::function<void(size_t)> rec = [&](size_t at) {
    if (at == pos_pairs.size()) {
      out.push_back(perm);
      return;
    }
    auto [i, j] = pos_pairs[at];
    for (int v = 0; v <= d; ++v) {
      if (used[v]) continue;
      int w = pair_sum - v;
      if (w < 0 || w > d || w == v || used[w]) continue;
      perm[i] = v;
      perm[j] = w;
      used[v] = used[w] = 1;
      rec(at + 1);
      used[v] = used[w] = 0;
      perm[i] = perm[j] = -1;
    }
  };
  rec(0);
}

}  // namespace

std::vector<Deck> family_decks(int d) {
  if (d < 2) throw std::invalid_argument("dimension d must be >= 2");
  // beta = (0, d, b_2, ..., b_d) with b_{i+1} + b_{d+1-i} = d for i >= 1:
  // positions 2..d pair to position sum d+2, values pair to sum d
  std::vector<std::vector<int>> betas;
  paired_assignments(d, 2, d, {{0, 0}, {1, d}}, betas);
  // alpha = (0, a_1, ..., a_d) with a_i + a_{d+1-i} = d+1: positions 1..d
  // pair to position sum d+1, values pair to sum d+1
  std::vector<std::vector<int>> alphas;
  paired_assignments(d, 1, d + 1, {{0, 0}}, alphas);

  // the deck entry pairs alpha with the inward role and beta with the
  // outward role; the opposite association leaves the span short
  std::vector<Deck> out;
  for (const auto& beta : betas)
    for (const auto& alpha : alphas) {
      Deck deck;
      deck.pairs.push_back({alpha, beta});
      out.push_back(std::move(deck));
    }
  std::sort(out.begin(), out.end(), [](const Deck& a, const Deck& b) {
    return std::make_pair(a.pairs[0].sigma, a.pairs[0].tau) <
           std::make_pair(b.pairs[0].sigma, b.pairs[0].tau);
  });
  return out;
}

std::vector<FamilyMember> family_generate(int d) {
  Params p = Params::make(d, 1);
  MVector m;
  m.m = {d + 2, 1};
  std::vector<FamilyMember> out;
  for (const Deck& deck : family_decks(d)) {
    DeckReport report = deck_conditions(deck, m, p);
    if (!report.pass())
      throw StructureError("family deck fails the deck conditions");
    out.push_back({p, m, deck});
  }
  if (static_cast<long long>(out.size()) != family_count(d))
    throw StructureError("family enumeration does not match the closed-form count");
  return out;
}

}  // namespace tightweb
