#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "tightweb/assembly.hpp"
#include "tightweb/certify.hpp"
#include "tightweb/zhomology.hpp"

using namespace tightweb;

namespace {

FacetComplex simplex_boundary(int d) {
  std::vector<Face> facets;
  for (int drop = 0; drop <= d; ++drop) {
    Face f;
    for (int v = 0; v <= d; ++v)
      if (v != drop) f.push_back(v);
    facets.push_back(f);
  }
  return FacetComplex(d - 1, d + 1, facets);
}

FacetComplex octahedron() {
  return FacetComplex(2, 6,
                      {{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5},
                       {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}});
}

FacetComplex moebius_torus() {
  std::vector<Face> facets;
  for (int j = 0; j < 7; ++j) {
    Face a{j, (j + 1) % 7, (j + 3) % 7};
    Face b{j, (j + 2) % 7, (j + 3) % 7};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    facets.push_back(a);
    facets.push_back(b);
  }
  return FacetComplex(2, 7, facets);
}

// forward stacking: glue fresh simplices along boundary ridges
struct StackedBuilder {
  int dim;
  std::vector<Face> facets;
  int next_vertex;

  explicit StackedBuilder(int d) : dim(d), next_vertex(d + 1) {
    Face f(static_cast<size_t>(d) + 1);
    std::iota(f.begin(), f.end(), 0);
    facets.push_back(f);
  }

  std::vector<Face> boundary_ridges() const {
    FacetComplex x(dim, next_vertex, facets);
    return boundary_complex(x).facets();
  }

  void stack(size_t ridge_index) {
    auto ridges = boundary_ridges();
    Face f = ridges[ridge_index % ridges.size()];
    f.push_back(next_vertex++);
    std::sort(f.begin(), f.end());
    facets.push_back(f);
  }

  FacetComplex ball() const { return FacetComplex(dim, next_vertex, facets); }
};

}  // namespace

TEST_CASE("stacked spheres: base cases") {
  for (int d = 2; d <= 6; ++d) CHECK(is_stacked_sphere(simplex_boundary(d)));
  // every cycle is a stacked 1-sphere
  for (int n : {3, 4, 7}) {
    std::vector<Face> edges;
    for (int i = 0; i < n; ++i) {
      Face e{i, (i + 1) % n};
      std::sort(e.begin(), e.end());
      edges.push_back(e);
    }
    CHECK(is_stacked_sphere(FacetComplex(1, n, edges)));
  }
  CHECK_FALSE(is_stacked_sphere(octahedron()));  // no vertex of facet degree 3
  CHECK_THROWS_AS(is_stacked_sphere(FacetComplex(2, 4, {{0, 1, 2}, {0, 1, 3}})),
                  std::invalid_argument);  // not closed
}

TEST_CASE("stacked balls: base cases") {
  CHECK(is_stacked_ball(FacetComplex(3, 4, {{0, 1, 2, 3}})));
  CHECK(is_stacked_ball(FacetComplex(3, 5, {{0, 1, 2, 3}, {0, 1, 2, 4}})));
  // cone over a square: dual graph is a path but the apex peel gets stuck
  FacetComplex cone(2, 5, {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {0, 3, 4}});
  CHECK_FALSE(is_stacked_ball(cone));
}

TEST_CASE("forward-stacked balls and spheres are recognized") {
  std::mt19937 rng(5);
  for (int d = 2; d <= 4; ++d) {
    for (int trial = 0; trial < 20; ++trial) {
      StackedBuilder b(d);
      int moves = 1 + static_cast<int>(rng() % 6);
      for (int i = 0; i < moves; ++i) b.stack(rng());
      FacetComplex ball = b.ball();
      CHECK(is_stacked_ball(ball));
      CHECK(is_stacked_sphere(boundary_complex(ball)));
      CHECK(is_stacked_bounded(ball));
    }
  }
}

TEST_CASE("exhaustive forward stackings in dimension two") {
  // every complex reachable by at most 6 stacking moves passes, at every prefix
  std::function<void(StackedBuilder&, int)> explore = [&](StackedBuilder& b, int depth) {
    CHECK(is_stacked_ball(b.ball()));
    if (depth == 0) return;
    size_t nridges = b.boundary_ridges().size();
    for (size_t r = 0; r < nridges; ++r) {
      StackedBuilder next = b;
      next.stack(r);
      explore(next, depth - 1);
    }
  };
  StackedBuilder root(2);
  explore(root, 3);  // 3 levels exhaustively
  // deeper prefixes sampled in the randomized test above
}

TEST_CASE("locally stacked complexes") {
  CHECK(is_locally_stacked(simplex_boundary(4)));
  CHECK(is_locally_stacked(moebius_torus()));  // links are cycles
  // two tetrahedra boundary spheres wedged at a vertex: link disconnected
  FacetComplex wedge(2, 7,
                     {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
                      {0, 4, 5}, {0, 4, 6}, {0, 5, 6}, {4, 5, 6}});
  CHECK_FALSE(is_locally_stacked(wedge));
}

TEST_CASE("stackedness with boundary") {
  CHECK(is_stacked_bounded(FacetComplex(3, 4, {{0, 1, 2, 3}})));
  // cone over the tetrahedron boundary: vertex 4 is interior
  FacetComplex cone(3, 5, {{0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4}});
  CHECK_FALSE(is_stacked_bounded(cone));
  CHECK_THROWS_AS(is_stacked_bounded(simplex_boundary(3)), std::invalid_argument);
}

TEST_CASE("tight-neighbourly identity") {
  // f0 = 9, d = 3, beta1 = 1: C(5,2) = 10 = 10 * 1
  Params p30 = Params::make(3, 0);
  Deck empty;
  HandleComplex k = build_handlebody(p30, MVector{{1}}, empty);
  FacetComplex bd = boundary_of(k).boundary;
  CHECK(is_tight_neighbourly(bd, 1));
  CHECK_FALSE(is_tight_neighbourly(bd, 2));
  CHECK_THROWS_AS(is_tight_neighbourly(moebius_torus(), 2), std::invalid_argument);
}

TEST_CASE("betti number formula") {
  CHECK(betti_from_formula(3, 0) == 1);
  CHECK(betti_from_formula(3, 1) == 30);
  CHECK(betti_from_formula(3, 2) == 99);
  CHECK(betti_from_formula(4, 1) == 42);
  CHECK(betti_from_formula(5, 1) == 56);
  CHECK(betti_from_formula(2, 0) == 2);
  CHECK_THROWS_AS(betti_from_formula(1, 0), std::invalid_argument);
}

TEST_CASE("certificates for reference complexes") {
  Certificate sphere = certify_tight(simplex_boundary(4), "boundary of the 4-simplex");
  CHECK(sphere.verdict == Certificate::Verdict::Tight);

  Certificate octa = certify_tight(octahedron(), "octahedron");
  CHECK(octa.verdict == Certificate::Verdict::Refuted);  // not neighbourly

  Certificate torus = certify_tight(moebius_torus(), "Moebius torus");
  CHECK(torus.verdict == Certificate::Verdict::Tight);

  FacetComplex two(2, 6, {{0, 1, 2}, {3, 4, 5}});
  CHECK(certify_tight(two, "two triangles").verdict == Certificate::Verdict::Refuted);
}

TEST_CASE("certificate for a bounded handlebody") {
  Params p = Params::make(3, 1);
  Deck deck;
  deck.pairs.push_back({{2, 0, 1, 3}, {1, 2, 0, 3}});
  HandleComplex k = build_handlebody(p, MVector{{12, 1}}, deck);
  Certificate cert = certify_tight(k.complex, "bounded handlebody");
  CHECK(cert.verdict == Certificate::Verdict::Tight);
}

TEST_CASE("certificate report format") {
  Certificate cert = certify_tight(simplex_boundary(3), "tetra");
  std::string text = cert.to_text();
  CHECK(text.find("CONNECTED PASS") != std::string::npos);
  CHECK(text.find("NEIGHBOURLY PASS") != std::string::npos);
  CHECK(text.find("VERDICT tight") != std::string::npos);
  // one line per check plus subject and verdict
  size_t lines = std::count(text.begin(), text.end(), '\n');
  CHECK(lines == cert.checks.size() + 2);
}

TEST_CASE("certificate verdict is invariant under relabelling") {
  FacetComplex t = moebius_torus();
  std::vector<Vertex> perm{3, 0, 6, 2, 5, 1, 4};
  Certificate a = certify_tight(t, "a");
  Certificate b = certify_tight(relabel(t, perm), "b");
  CHECK(a.verdict == b.verdict);
  CHECK(a.digest() == b.digest());
}
