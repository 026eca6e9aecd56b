#pragma once

#include <cstdint>
#include <vector>

#include "tightweb/simplicial.hpp"

namespace tightweb {

// Dense bit matrix over GF(2), rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  void set(int r, int c);
  bool get(int r, int c) const;
  int rank() const;

  std::vector<uint64_t>& row(int r) { return data_[r]; }
  const std::vector<uint64_t>& row(int r) const { return data_[r]; }

  // Row-reduces `rows` in place and returns the rank; each row has `cols`
  // bit positions.
  static int rank_of(std::vector<std::vector<uint64_t>>& rows, int cols);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::vector<uint64_t>> data_;
};

struct BettiVector {
  std::vector<long long> beta;  // beta[j], coefficients Z/2
  bool operator==(const BettiVector&) const = default;
};

// Incidence matrix of d_j: rows indexed by (j-1)-faces, columns by j-faces.
BitMatrix boundary_matrix(const FacetComplex& x, int j);

// beta_j = f_j - rank d_j - rank d_{j+1} over GF(2).
BettiVector betti_z2(const FacetComplex& x);

// First Betti number only (skips the ranks above degree 2).
long long betti1_z2(const FacetComplex& x);

// Propagates facet orientations across the dual graph and checks that
// every interior ridge receives opposite induced signs.  Requires a weak
// pseudomanifold with connected dual graph.
bool is_orientable(const FacetComplex& x);

// Decides Z/2-tightness by checking, for every non-empty subset W of the
// used vertices and every degree j, that H_j(X[W]) -> H_j(X) is injective.
bool is_z2_tight_bruteforce(const FacetComplex& x, int max_vertices = 16);

}  // namespace tightweb
