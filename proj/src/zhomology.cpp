#include "tightweb/zhomology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <unordered_map>

namespace tightweb {

namespace {

constexpr int kWord = 64;

int words_for(int bits) { return (bits + kWord - 1) / kWord; }

int lowest_set_bit(const std::vector<uint64_t>& row) {
  for (size_t wi = 0; wi < row.size(); ++wi)
    if (row[wi]) return static_cast<int>(wi) * kWord + __builtin_ctzll(row[wi]);
  return -1;
}

void xor_row(std::vector<uint64_t>& dst, const std::vector<uint64_t>& src) {
  for (size_t i = 0; i < src.size(); ++i) dst[i] ^= src[i];
}

}  // namespace

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  data_.assign(rows, std::vector<uint64_t>(words_for(cols), 0));
}

void BitMatrix::set(int r, int c) { data_[r][c / kWord] |= uint64_t{1} << (c % kWord); }

bool BitMatrix::get(int r, int c) const {
  return (data_[r][c / kWord] >> (c % kWord)) & 1;
}

int BitMatrix::rank_of(std::vector<std::vector<uint64_t>>& rows, int cols) {
  // row echelon with pivot tracking; destroys `rows`
  std::vector<int> pivot_of_col(cols, -1);
  int rank = 0;
  for (size_t r = 0; r < rows.size(); ++r) {
    int lead;
    while ((lead = lowest_set_bit(rows[r])) >= 0 && pivot_of_col[lead] >= 0)
      xor_row(rows[r], rows[pivot_of_col[lead]]);
    if (lead >= 0) {
      pivot_of_col[lead] = static_cast<int>(r);
      ++rank;
    }
  }
  return rank;
}

int BitMatrix::rank() const {
  auto copy = data_;
  return rank_of(copy, cols_);
}

BitMatrix boundary_matrix(const FacetComplex& x, int j) {
  if (j < 1 || j > x.dim()) throw std::invalid_argument("boundary degree out of range");
  std::vector<Face> lower = skeleton(x, j - 1);
  std::vector<Face> upper = skeleton(x, j);
  std::map<Face, int> index;
  for (int r = 0; r < static_cast<int>(lower.size()); ++r) index[lower[r]] = r;
  BitMatrix m(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
  Face sub(static_cast<size_t>(j));
  for (int c = 0; c < static_cast<int>(upper.size()); ++c) {
    const Face& f = upper[c];
    for (size_t drop = 0; drop < f.size(); ++drop) {
      sub.clear();
      for (size_t i = 0; i < f.size(); ++i)
        if (i != drop) sub.push_back(f[i]);
      m.set(index.at(sub), c);
    }
  }
  return m;
}

BettiVector betti_z2(const FacetComplex& x) {
  BettiVector out;
  if (x.empty()) return out;
  FVector fv = f_vector(x);
  std::vector<long long> rank(static_cast<size_t>(x.dim()) + 2, 0);
  for (int j = 1; j <= x.dim(); ++j) rank[j] = boundary_matrix(x, j).rank();
  for (int j = 0; j <= x.dim(); ++j)
    out.beta.push_back(fv.counts[j] - rank[j] - rank[j + 1]);
  return out;
}

long long betti1_z2(const FacetComplex& x) {
  if (x.dim() < 1) throw std::invalid_argument("first Betti number needs dimension >= 1");
  FVector fv = f_vector(x);
  long long r1 = boundary_matrix(x, 1).rank();
  long long r2 = x.dim() >= 2 ? boundary_matrix(x, 2).rank() : 0;
  return fv.counts[1] - r1 - r2;
}

bool is_orientable(const FacetComplex& x) {
  if (x.empty()) throw StructureError("orientability of an empty complex is undefined");
  if (!is_weak_pseudomanifold(x)) throw StructureError("not a weak pseudomanifold");
  Graph dual = dual_graph(x);
  if (!dual.connected()) throw StructureError("dual graph is disconnected");

  const auto& facets = x.facets();
  // interior ridges with their two incident facets and the parity of the
  // dropped vertex position in each
  struct Incidence {
    int fa, fb;
    int pa, pb;
  };
  std::vector<Incidence> interior;
  {
    std::map<Face, std::vector<std::pair<int, int>>> rm;  // ridge -> (facet, drop pos)
    Face ridge(static_cast<size_t>(x.dim()));
    for (int fi = 0; fi < static_cast<int>(facets.size()); ++fi) {
      const Face& f = facets[fi];
      for (size_t drop = 0; drop < f.size(); ++drop) {
        ridge.clear();
        for (size_t i = 0; i < f.size(); ++i)
          if (i != drop) ridge.push_back(f[i]);
        rm[ridge].push_back({fi, static_cast<int>(drop)});
      }
    }
    for (const auto& [ridge, inc] : rm)
      if (inc.size() == 2)
        interior.push_back({inc[0].first, inc[1].first, inc[0].second, inc[1].second});
  }

  std::vector<std::vector<std::pair<int, int>>> constraints(facets.size());
  for (const auto& e : interior) {
    // signs must satisfy s_a * (-1)^pa = -s_b * (-1)^pb
    int rel = ((e.pa + e.pb) % 2 == 0) ? -1 : +1;  // s_b = rel * s_a
    constraints[e.fa].push_back({e.fb, rel});
    constraints[e.fb].push_back({e.fa, rel});
  }

  std::vector<int> sign(facets.size(), 0);
  std::queue<int> bfs;
  sign[0] = 1;
  bfs.push(0);
  while (!bfs.empty()) {
    int f = bfs.front();
    bfs.pop();
    for (auto [g, rel] : constraints[f]) {
      int expect = rel * sign[f];
      if (sign[g] == 0) {
        sign[g] = expect;
        bfs.push(g);
      } else if (sign[g] != expect) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// All faces of x, grouped by dimension, with index maps.
struct FaceTable {
  std::vector<std::vector<Face>> faces;          // faces[j] sorted
  std::vector<std::map<Face, int>> index;        // face -> column in dimension j

  explicit FaceTable(const FacetComplex& x) {
    faces.resize(static_cast<size_t>(x.dim()) + 1);
    index.resize(static_cast<size_t>(x.dim()) + 1);
    for (int j = 0; j <= x.dim(); ++j) {
      faces[j] = skeleton(x, j);
      for (int c = 0; c < static_cast<int>(faces[j].size()); ++c) index[j][faces[j][c]] = c;
    }
  }
};

using BitRow = std::vector<uint64_t>;

BitRow zero_row(int bits) { return BitRow(words_for(bits), 0); }

void set_bit(BitRow& row, int c) { row[c / kWord] |= uint64_t{1} << (c % kWord); }

// Basis (as reduced rows) of the span of the given vectors.
std::vector<BitRow> row_space_basis(std::vector<BitRow> rows) {
  std::vector<BitRow> basis;
  std::vector<int> leads;
  for (auto& r : rows) {
    int lead;
    while ((lead = lowest_set_bit(r)) >= 0) {
      auto it = std::find(leads.begin(), leads.end(), lead);
      if (it == leads.end()) break;
      xor_row(r, basis[it - leads.begin()]);
    }
    if (lead >= 0) {
      basis.push_back(r);
      leads.push_back(lead);
    }
  }
  return basis;
}

// Kernel basis of the GF(2) matrix given by columns.  Returns vectors
// over the column index set.
std::vector<BitRow> kernel_basis(const std::vector<BitRow>& columns) {
  const int ncols = static_cast<int>(columns.size());
  // eliminate on columns augmented with identity bookkeeping
  std::vector<BitRow> work(columns);
  std::vector<BitRow> keep;
  for (int c = 0; c < ncols; ++c) {
    BitRow tag = zero_row(ncols);
    set_bit(tag, c);
    keep.push_back(std::move(tag));
  }
  std::vector<int> pivot_lead;
  std::vector<int> pivot_idx;
  std::vector<BitRow> out;
  for (int c = 0; c < ncols; ++c) {
    int lead;
    while ((lead = lowest_set_bit(work[c])) >= 0) {
      auto it = std::find(pivot_lead.begin(), pivot_lead.end(), lead);
      if (it == pivot_lead.end()) break;
      int p = pivot_idx[it - pivot_lead.begin()];
      xor_row(work[c], work[p]);
      xor_row(keep[c], keep[p]);
    }
    if (lead >= 0) {
      pivot_lead.push_back(lead);
      pivot_idx.push_back(c);
    } else {
      out.push_back(keep[c]);
    }
  }
  return out;
}

long long dim_of_span(const std::vector<BitRow>& vecs) {
  std::vector<BitRow> copy(vecs);
  if (copy.empty()) return 0;
  return BitMatrix::rank_of(copy, static_cast<int>(copy[0].size()) * kWord);
}

}  // namespace

bool is_z2_tight_bruteforce(const FacetComplex& x, int max_vertices) {
  std::vector<Vertex> used = x.used_vertices();
  const int nu = static_cast<int>(used.size());
  if (nu > max_vertices || nu > 24)
    throw std::invalid_argument("complex has " + std::to_string(nu) +
                                " vertices; brute force capped at " +
                                std::to_string(std::min(max_vertices, 24)));
  if (x.empty()) return false;

  FaceTable table(x);
  const int dim = x.dim();

  // connectivity (condition (i) of tightness)
  {
    std::vector<BitRow> cols;
    if (dim >= 1)
      for (const Face& e : table.faces[1]) {
        BitRow col = zero_row(static_cast<int>(table.faces[0].size()));
        set_bit(col, table.index[0].at({e[0]}));
        set_bit(col, table.index[0].at({e[1]}));
        cols.push_back(std::move(col));
      }
    long long components = static_cast<long long>(table.faces[0].size()) - dim_of_span(cols);
    if (components != 1) return false;
  }

  // boundary spaces of the ambient complex, per degree, in ambient coordinates
  std::vector<std::vector<BitRow>> ambient_boundaries(static_cast<size_t>(dim) + 1);
  for (int j = 0; j + 1 <= dim; ++j) {
    std::vector<BitRow> cols;
    const int nj = static_cast<int>(table.faces[j].size());
    for (const Face& f : table.faces[j + 1]) {
      BitRow col = zero_row(nj);
      Face sub(static_cast<size_t>(j) + 1);
      for (size_t drop = 0; drop < f.size(); ++drop) {
        sub.clear();
        for (size_t i = 0; i < f.size(); ++i)
          if (i != drop) sub.push_back(f[i]);
        set_bit(col, table.index[j].at(sub));
      }
      cols.push_back(std::move(col));
    }
    ambient_boundaries[j] = row_space_basis(std::move(cols));
  }

  // per-dimension face vertex masks for fast subset filtering
  std::vector<std::vector<uint32_t>> masks(static_cast<size_t>(dim) + 1);
  std::vector<int> vid(x.n_vertices(), -1);
  for (int i = 0; i < nu; ++i) vid[used[i]] = i;
  for (int j = 0; j <= dim; ++j)
    for (const Face& f : table.faces[j]) {
      uint32_t m = 0;
      for (Vertex v : f) m |= uint32_t{1} << vid[v];
      masks[j].push_back(m);
    }

  for (uint32_t w = 1; w < (uint32_t{1} << nu); ++w) {
    // faces of the induced subcomplex, per dimension
    std::vector<std::vector<int>> sub(static_cast<size_t>(dim) + 1);
    for (int j = 0; j <= dim; ++j)
      for (int c = 0; c < static_cast<int>(masks[j].size()); ++c)
        if ((masks[j][c] & ~w) == 0) sub[j].push_back(c);

    for (int j = 0; j <= dim; ++j) {
      if (sub[j].empty()) break;  // higher faces need lower ones
      // cycle space of the subcomplex in degree j, ambient coordinates
      std::vector<BitRow> cycles;
      if (j == 0) {
        for (int c : sub[0]) {
          BitRow v = zero_row(static_cast<int>(table.faces[0].size()));
          set_bit(v, c);
          cycles.push_back(std::move(v));
        }
      } else {
        const int rows_bits = static_cast<int>(table.faces[j - 1].size());
        std::vector<BitRow> cols;
        for (int c : sub[j]) {
          BitRow col = zero_row(rows_bits);
          const Face& f = table.faces[j][c];
          Face s(static_cast<size_t>(j));
          for (size_t drop = 0; drop < f.size(); ++drop) {
            s.clear();
            for (size_t i = 0; i < f.size(); ++i)
              if (i != drop) s.push_back(f[i]);
            set_bit(col, table.index[j - 1].at(s));
          }
          cols.push_back(std::move(col));
        }
        std::vector<BitRow> ker = kernel_basis(cols);
        // scatter kernel coordinates (over sub[j]) into ambient degree-j space
        for (const BitRow& kv : ker) {
          BitRow v = zero_row(static_cast<int>(table.faces[j].size()));
          for (int t = 0; t < static_cast<int>(sub[j].size()); ++t)
            if ((kv[t / kWord] >> (t % kWord)) & 1) set_bit(v, sub[j][t]);
          cycles.push_back(std::move(v));
        }
      }

      // boundary space of the subcomplex in degree j, ambient coordinates
      std::vector<BitRow> sub_boundaries;
      if (j + 1 <= dim) {
        for (int c : sub[j + 1]) {
          BitRow col = zero_row(static_cast<int>(table.faces[j].size()));
          const Face& f = table.faces[j + 1][c];
          Face s(static_cast<size_t>(j) + 1);
          for (size_t drop = 0; drop < f.size(); ++drop) {
            s.clear();
            for (size_t i = 0; i < f.size(); ++i)
              if (i != drop) s.push_back(f[i]);
            set_bit(col, table.index[j].at(s));
          }
          sub_boundaries.push_back(std::move(col));
        }
      }

      // injectivity of H_j(Y) -> H_j(X):
      //   dim(Z_j(Y) cap B_j(X)) == dim B_j(Y)
      long long dim_z = dim_of_span(cycles);
      long long dim_bx = static_cast<long long>(ambient_boundaries[j].size());
      long long dim_by = dim_of_span(sub_boundaries);
      std::vector<BitRow> stacked = cycles;
      for (const BitRow& r : ambient_boundaries[j]) stacked.push_back(r);
      long long dim_sum = dim_of_span(stacked);
      long long dim_meet = dim_z + dim_bx - dim_sum;
      if (dim_meet != dim_by) return false;
    }
  }
  return true;
}

}  // namespace tightweb
