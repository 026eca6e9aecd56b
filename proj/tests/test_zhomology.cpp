#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

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

FacetComplex cycle(int n) {
  std::vector<Face> edges;
  for (int i = 0; i < n; ++i) {
    Face e{i, (i + 1) % n};
    std::sort(e.begin(), e.end());
    edges.push_back(e);
  }
  return FacetComplex(1, n, edges);
}

// the 7-vertex vertex-transitive torus: facets {j, j+1, j+3} mod 7
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

// the 6-vertex real projective plane
FacetComplex rp2_6() {
  return FacetComplex(2, 6,
                      {{0, 1, 2}, {0, 1, 5}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5},
                       {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}});
}

FacetComplex octahedron() {
  return FacetComplex(2, 6,
                      {{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5},
                       {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}});
}

}  // namespace

TEST_CASE("boundary matrix shapes and ranks") {
  BitMatrix m1 = boundary_matrix(cycle(3), 1);
  CHECK(m1.rows() == 3);
  CHECK(m1.cols() == 3);
  CHECK(m1.rank() == 2);

  BitMatrix m2 = boundary_matrix(simplex_boundary(3), 2);
  CHECK(m2.rows() == 6);
  CHECK(m2.cols() == 4);
  CHECK(m2.rank() == 3);
}

TEST_CASE("consecutive boundary maps compose to zero") {
  for (const FacetComplex& x : {simplex_boundary(4), moebius_torus(), rp2_6()}) {
    for (int j = 2; j <= x.dim(); ++j) {
      BitMatrix a = boundary_matrix(x, j - 1);
      BitMatrix b = boundary_matrix(x, j);
      for (int c = 0; c < b.cols(); ++c) {
        // image of column c under the lower boundary map
        std::vector<char> image(a.rows(), 0);
        for (int r = 0; r < b.rows(); ++r) {
          if (!b.get(r, c)) continue;
          for (int rr = 0; rr < a.rows(); ++rr)
            if (a.get(rr, r)) image[rr] ^= 1;
        }
        for (char bit : image) CHECK(bit == 0);
      }
    }
  }
}

TEST_CASE("betti numbers of reference complexes") {
  CHECK(betti_z2(cycle(3)).beta == std::vector<long long>{1, 1});
  CHECK(betti_z2(simplex_boundary(4)).beta == std::vector<long long>{1, 0, 0, 1});
  CHECK(betti_z2(moebius_torus()).beta == std::vector<long long>{1, 2, 1});
  CHECK(betti_z2(rp2_6()).beta == std::vector<long long>{1, 1, 1});
  // two components
  FacetComplex two(1, 6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(betti_z2(two).beta == std::vector<long long>{2, 2});
}

TEST_CASE("alternating betti sum equals the Euler characteristic") {
  for (const FacetComplex& x : {simplex_boundary(3), simplex_boundary(5), moebius_torus(), rp2_6()}) {
    BettiVector b = betti_z2(x);
    long long alt = 0;
    for (size_t j = 0; j < b.beta.size(); ++j) alt += (j % 2 == 0) ? b.beta[j] : -b.beta[j];
    CHECK(alt == euler_characteristic(x));
  }
}

TEST_CASE("betti1 shortcut agrees with the full vector") {
  for (const FacetComplex& x : {simplex_boundary(4), moebius_torus(), rp2_6()})
    CHECK(betti1_z2(x) == betti_z2(x).beta[1]);
}

TEST_CASE("top betti number of closed pseudomanifolds is one") {
  for (const FacetComplex& x : {simplex_boundary(3), simplex_boundary(4), moebius_torus(), rp2_6()})
    CHECK(betti_z2(x).beta.back() == 1);
}

TEST_CASE("orientability") {
  CHECK(is_orientable(simplex_boundary(4)));
  CHECK(is_orientable(moebius_torus()));
  CHECK_FALSE(is_orientable(rp2_6()));
  // disconnected dual graph is rejected
  FacetComplex two(2, 6, {{0, 1, 2}, {3, 4, 5}});
  CHECK_THROWS_AS(is_orientable(two), StructureError);
}

TEST_CASE("orientability is invariant under relabelling") {
  std::vector<Vertex> rot{1, 2, 3, 4, 5, 0};
  CHECK(is_orientable(relabel(moebius_torus(), {3, 4, 5, 6, 0, 1, 2})));
  CHECK_FALSE(is_orientable(relabel(rp2_6(), rot)));
}

TEST_CASE("brute force tightness") {
  CHECK(is_z2_tight_bruteforce(cycle(3)));
  CHECK_FALSE(is_z2_tight_bruteforce(cycle(4)));
  CHECK(is_z2_tight_bruteforce(moebius_torus()));       // 127 subsets
  CHECK(is_z2_tight_bruteforce(simplex_boundary(3)));
  CHECK_FALSE(is_z2_tight_bruteforce(octahedron()));
  CHECK_THROWS_AS(is_z2_tight_bruteforce(cycle(20)), std::invalid_argument);
}

TEST_CASE("brute force tightness is invariant under relabelling") {
  CHECK(is_z2_tight_bruteforce(relabel(moebius_torus(), {5, 3, 0, 6, 2, 4, 1})));
  CHECK_FALSE(is_z2_tight_bruteforce(relabel(cycle(4), {2, 0, 3, 1})));
}
