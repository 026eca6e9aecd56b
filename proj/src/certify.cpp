#include "tightweb/certify.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "tightweb/zhomology.hpp"

namespace tightweb {

namespace {

const char* kCiteTightDef = "definition of Z/2-tightness";
const char* kCiteSurfaces = "Kuehnel: a triangulated surface is tight iff its graph is complete";
const char* kCiteBDS = "Bagchi-Datta-Spreer: a closed 3-manifold is F-tight iff F-orientable, neighbourly and stacked";
const char* kCiteMurai = "Murai: a closed manifold (dim >= 3) is tight-neighbourly iff stacked and neighbourly";
const char* kCiteEffenberger = "Effenberger: neighbourly locally stacked closed manifolds (dim != 3) are tight";
const char* kCiteBagchi = "Bagchi: neighbourly stacked manifolds with boundary (dim >= 3) are F-tight";
const char* kCiteStackedBall = "stacked balls are exactly the simplex trees with one private vertex per leaf";
const char* kCiteLocallyStacked = "links of stacked manifolds are stacked spheres";
const char* kCiteOrientation = "coherent facet orientations propagated over the dual graph";

}  // namespace

const char* Certificate::verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Tight:
      return "tight";
    case Verdict::NotCertified:
      return "not-certified";
    case Verdict::Refuted:
      return "refuted";
  }
  return "?";
}

std::string Certificate::to_text() const {
  std::ostringstream os;
  os << "# subject: " << subject << "\n";
  for (const auto& c : checks)
    os << c.name << ' ' << (c.pass ? "PASS" : "FAIL") << ' ' << c.citation << "\n";
  os << "VERDICT " << verdict_name(verdict) << "\n";
  return os.str();
}

std::string Certificate::digest() const {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
  };
  for (const auto& c : checks) {
    mix(c.name);
    mix(c.pass ? "1" : "0");
  }
  mix(verdict_name(verdict));
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

namespace {

struct PeelComplex {
  // facets as vertex sets, with live flags
  std::vector<Face> facets;
  std::vector<char> live;
  int dim;

  explicit PeelComplex(const FacetComplex& x)
      : facets(x.facets()), live(x.facets().size(), 1), dim(x.dim()) {}

  long long live_count() const { return std::count(live.begin(), live.end(), 1); }
};

bool face_contains(const Face& f, Vertex v) {
  return std::binary_search(f.begin(), f.end(), v);
}

}  // namespace

bool is_stacked_sphere(const FacetComplex& s) {
  if (s.empty()) return false;
  if (!is_weak_pseudomanifold(s)) return false;
  {
    FacetComplex bd = boundary_complex(s);
    if (!bd.empty()) throw std::invalid_argument("stacked sphere test needs a closed complex");
  }
  if (!dual_graph(s).connected()) return false;

  const int dim = s.dim();
  if (dim == 1) {
    // a single cycle: connected and every used vertex of degree two
    std::map<Vertex, int> degree;
    for (const Face& e : s.facets())
      for (Vertex v : e) ++degree[v];
    for (auto [v, deg] : degree)
      if (deg != 2) return false;
    return true;
  }

  PeelComplex pc(s);
  while (true) {
    // current vertex -> live facet indices
    std::unordered_map<Vertex, std::vector<int>> at;
    for (int fi = 0; fi < static_cast<int>(pc.facets.size()); ++fi)
      if (pc.live[fi])
        for (Vertex v : pc.facets[fi]) at[v].push_back(fi);

    const long long nf = pc.live_count();
    if (static_cast<long long>(at.size()) == dim + 2 && nf == dim + 2) {
      // boundary of a simplex: every (dim+1)-subset of the vertex set present
      return true;
    }

    bool peeled = false;
    for (const auto& [v, inc] : at) {
      if (static_cast<int>(inc.size()) != dim + 1) continue;
      // the link of v must be the boundary of a simplex on its neighbours
      std::vector<Vertex> nbrs;
      for (int fi : inc)
        for (Vertex u : pc.facets[fi])
          if (u != v) nbrs.push_back(u);
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
      if (static_cast<int>(nbrs.size()) != dim + 1) continue;
      // each facet at v omits a distinct neighbour
      std::vector<char> omitted(nbrs.size(), 0);
      bool ok = true;
      for (int fi : inc) {
        int omit = -1;
        for (size_t t = 0; t < nbrs.size(); ++t)
          if (!face_contains(pc.facets[fi], nbrs[t])) {
            if (omit >= 0) {
              ok = false;
              break;
            }
            omit = static_cast<int>(t);
          }
        if (!ok || omit < 0 || omitted[omit]) {
          ok = false;
          break;
        }
        omitted[omit] = 1;
      }
      if (!ok) continue;
      // replace star(v) by the simplex on the neighbours
      for (int fi : inc) pc.live[fi] = 0;
      pc.facets.push_back(nbrs);
      pc.live.push_back(1);
      peeled = true;
      break;
    }
    if (!peeled) return false;
  }
}

bool is_stacked_ball(const FacetComplex& b) {
  if (b.empty()) return false;
  if (!is_weak_pseudomanifold(b)) return false;
  if (boundary_complex(b).empty()) return false;  // needs non-empty boundary
  if (!dual_graph(b).is_tree()) return false;

  std::vector<Face> live(b.facets().begin(), b.facets().end());
  while (live.size() > 1) {
    // leaf = facet sharing a ridge with exactly one other facet, carrying
    // exactly one private vertex
    std::map<Vertex, int> vertex_count;
    for (const Face& f : live)
      for (Vertex v : f) ++vertex_count[v];

    int peel = -1;
    for (int fi = 0; fi < static_cast<int>(live.size()) && peel < 0; ++fi) {
      int priv = 0;
      for (Vertex v : live[fi])
        if (vertex_count[v] == 1) ++priv;
      if (priv != 1) continue;
      int dual_degree = 0;
      for (int fj = 0; fj < static_cast<int>(live.size()); ++fj) {
        if (fj == fi) continue;
        Face meet;
        std::set_intersection(live[fi].begin(), live[fi].end(), live[fj].begin(), live[fj].end(),
                              std::back_inserter(meet));
        if (static_cast<int>(meet.size()) == b.dim()) ++dual_degree;
      }
      if (dual_degree == 1) peel = fi;
    }
    if (peel < 0) return false;
    live.erase(live.begin() + peel);
  }
  return true;
}

bool is_locally_stacked(const FacetComplex& m) {
  if (m.empty()) return false;
  if (!is_weak_pseudomanifold(m)) return false;
  if (!boundary_complex(m).empty())
    throw std::invalid_argument("locally stacked test expects a closed complex");
  for (Vertex v : m.used_vertices())
    if (!is_stacked_sphere(link(m, v))) return false;
  return true;
}

bool is_stacked_bounded(const FacetComplex& n) {
  FacetComplex bd = boundary_complex(n);
  if (bd.empty()) throw std::invalid_argument("stacked-with-boundary test needs a boundary");
  const int want = n.dim() - 2;
  if (want < 0) return true;
  return skeleton(n, want) == skeleton(bd, want);
}

bool is_tight_neighbourly(const FacetComplex& m, long long betti1) {
  const int d = m.dim();
  if (d < 3) throw std::invalid_argument("tight-neighbourly is defined for dimension >= 3");
  return binomial(m.n_used_vertices() - d - 1, 2) == binomial(d + 2, 2) * betti1;
}

long long betti_from_formula(int d, int k) {
  if (d < 2 || k < 0) throw std::invalid_argument("invalid parameters");
  const long long base = static_cast<long long>(d + 1) * ((d + 2) * static_cast<long long>(k) + 1) + 1;
  long long numer = binomial(base, 2);
  if (d == 2) numer *= 2;
  const long long denom = binomial(d + 2, 2);
  if (numer % denom != 0)
    throw std::runtime_error("Betti formula did not produce an integer");
  return numer / denom;
}

namespace {

bool links_are_single_cycles(const FacetComplex& m) {
  for (Vertex v : m.used_vertices()) {
    FacetComplex lk = link(m, v);
    if (lk.dim() != 1) return false;
    std::map<Vertex, int> degree;
    for (const Face& e : lk.facets())
      for (Vertex u : e) ++degree[u];
    for (auto [u, deg] : degree)
      if (deg != 2) return false;
    Graph dual = dual_graph(lk);
    if (!dual.connected()) return false;
  }
  return true;
}

}  // namespace

Certificate certify_tight(const FacetComplex& m, const std::string& subject_label) {
  Certificate cert;
  {
    std::ostringstream os;
    os << subject_label << "  dim=" << m.dim() << " f=(";
    if (!m.empty()) {
      FVector fv = f_vector(m);
      for (size_t i = 0; i < fv.counts.size(); ++i) os << (i ? "," : "") << fv.counts[i];
    }
    os << ")";
    cert.subject = os.str();
  }
  auto add = [&cert](const std::string& name, bool pass, const std::string& cite) {
    cert.checks.push_back({name, pass, cite});
    return pass;
  };

  if (m.empty()) {
    add("NONEMPTY", false, kCiteTightDef);
    cert.verdict = Certificate::Verdict::Refuted;
    return cert;
  }

  bool wpm = is_weak_pseudomanifold(m);
  add("WEAK-PSEUDOMANIFOLD", wpm, "ridges lie in at most two facets");
  if (!wpm) {
    cert.verdict = Certificate::Verdict::NotCertified;
    return cert;
  }

  bool connected = dual_graph(m).connected() && !m.empty();
  add("CONNECTED", connected, kCiteTightDef);

  bool neighbourly = m.dim() >= 1 && is_k_neighbourly(m, 2);
  add("NEIGHBOURLY", neighbourly,
      "tight complexes are neighbourly: a missing edge gives a disconnected induced pair");

  if (!connected || !neighbourly) {
    cert.verdict = Certificate::Verdict::Refuted;
    return cert;
  }

  FacetComplex bd = boundary_complex(m);
  const bool bounded = !bd.empty();
  const int d = m.dim();

  if (bounded) {
    bool dim_ok = add("DIMENSION-AT-LEAST-3", d >= 3, kCiteBagchi);
    bool stacked = add("STACKED-WITH-BOUNDARY", is_stacked_bounded(m), kCiteBagchi);
    bool links_ok = true;
    for (Vertex v : m.used_vertices())
      if (!is_stacked_ball(link(m, v))) {
        links_ok = false;
        break;
      }
    add("LINKS-STACKED-BALLS", links_ok, kCiteStackedBall);
    cert.verdict = (dim_ok && stacked && links_ok) ? Certificate::Verdict::Tight
                                                   : Certificate::Verdict::NotCertified;
    return cert;
  }

  bool locally_stacked;
  if (d == 2)
    locally_stacked = add("LINKS-ARE-CYCLES", links_are_single_cycles(m),
                          "vertex links of a closed surface are single cycles");
  else
    locally_stacked = add("LOCALLY-STACKED", is_locally_stacked(m), kCiteLocallyStacked);

  long long beta1 = betti1_z2(m);
  add("BETTI-1", true, "beta_1(Z/2) = " + std::to_string(beta1));
  add("ORIENTABLE", is_orientable(m), kCiteOrientation);
  bool identity = d >= 3 ? is_tight_neighbourly(m, beta1) : false;
  if (d >= 3)
    add("TIGHT-NEIGHBOURLY", identity,
        d == 3 ? std::string(kCiteMurai) + "; " + kCiteBDS : kCiteMurai);

  if (d == 2) {
    // connected + neighbourly settle tightness for surfaces
    cert.verdict = locally_stacked ? Certificate::Verdict::Tight
                                   : Certificate::Verdict::NotCertified;
    if (locally_stacked) add("TIGHT", true, kCiteSurfaces);
  } else if (d == 3) {
    // locally stacked certifies the manifold property; the identity then
    // decides tightness both ways
    if (!locally_stacked)
      cert.verdict = Certificate::Verdict::NotCertified;
    else if (identity) {
      cert.verdict = Certificate::Verdict::Tight;
      add("TIGHT", true, kCiteBDS);
    } else {
      cert.verdict = Certificate::Verdict::Refuted;
    }
  } else {
    cert.verdict =
        locally_stacked ? Certificate::Verdict::Tight : Certificate::Verdict::NotCertified;
    if (locally_stacked) add("TIGHT", true, kCiteEffenberger);
  }
  return cert;
}

}  // namespace tightweb
