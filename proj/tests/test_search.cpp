#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "tightweb/search.hpp"
#include "tightweb/zhomology.hpp"

using namespace tightweb;

namespace {

bool contains_m(const std::vector<MVector>& ms, const std::vector<int>& want) {
  return std::any_of(ms.begin(), ms.end(), [&](const MVector& m) { return m.m == want; });
}

}  // namespace

TEST_CASE("permutation table block structure") {
  for (int d : {2, 3, 4}) {
    PermBlockTable t = PermBlockTable::make(d);
    long long dfact = 1;
    for (int i = 2; i <= d; ++i) dfact *= i;
    CHECK(static_cast<long long>(t.perms.size()) == d * dfact);
    CHECK(static_cast<long long>(t.perm_ids_by_type.size()) == d);
    for (const auto& block : t.perm_ids_by_type)
      CHECK(static_cast<long long>(block.size()) == dfact);
    CHECK(t.total_pairs() == d * dfact * d * dfact);
    // pairs compatible with a fixed pair form the complement of one
    // contiguous run of sigma-type blocks, wrapping around at most once
    for (int prev_tau_type = 0; prev_tau_type < d; ++prev_tau_type) {
      std::vector<char> compatible;
      for (int stype = 0; stype < d; ++stype)
        for (int ttype = 0; ttype < d; ++ttype)
          for (long long i = 0; i < dfact * dfact; ++i)
            compatible.push_back(stype != prev_tau_type);
      long long flips = 0;
      for (size_t i = 0; i < compatible.size(); ++i)
        if (compatible[i] != compatible[(i + 1) % compatible.size()]) ++flips;
      CHECK(flips <= 2);
      CHECK(std::count(compatible.begin(), compatible.end(), 1) ==
            (d - 1) * d * dfact * dfact);
    }
  }
}

TEST_CASE("m-vector enumeration") {
  auto m30 = enumerate_m_vectors(3, 0);
  REQUIRE(m30.size() == 1);
  CHECK(m30[0].m == std::vector<int>{1});

  auto m31 = enumerate_m_vectors(3, 1);
  CHECK(contains_m(m31, {12, 1}));
  CHECK(contains_m(m31, {5, 1}));

  auto m32 = enumerate_m_vectors(3, 2);
  CHECK(contains_m(m32, {41, 20, 1}));

  // every emitted vector has pairwise disjoint multiple sets
  Params p = Params::make(3, 2);
  for (const MVector& m : m32) {
    std::vector<char> seen(p.n, 0);
    for (int entry : m.m)
      for (int ell = 1; ell <= p.d + 1; ++ell)
        for (long long signedv : {static_cast<long long>(ell) * entry,
                                  -static_cast<long long>(ell) * entry}) {
          int r = static_cast<int>(((signedv % p.n) + p.n) % p.n);
          CHECK(!seen[r]);
          seen[r] = 1;
        }
  }
}

TEST_CASE("deck enumeration finds the published decks") {
  Params p31 = Params::make(3, 1);
  PermBlockTable t3 = PermBlockTable::make(3);
  auto decks = enumerate_decks(p31, MVector{{12, 1}}, t3);
  Deck m415;
  m415.pairs.push_back({{2, 0, 1, 3}, {1, 2, 0, 3}});
  CHECK(std::find(decks.begin(), decks.end(), m415) != decks.end());

  Params p32 = Params::make(3, 2);
  auto decks2 = enumerate_decks(p32, MVector{{41, 20, 1}}, t3);
  Deck m421;
  m421.pairs.push_back({{1, 2, 0, 3}, {1, 0, 3, 2}});
  m421.pairs.push_back({{1, 0, 2, 3}, {0, 2, 1, 3}});
  CHECK(std::find(decks2.begin(), decks2.end(), m421) != decks2.end());

  // every emitted deck passes the full condition check, and no sigma or
  // tau ends with zero
  for (const Deck& d : decks2) {
    CHECK(deck_conditions(d, MVector{{41, 20, 1}}, p32).pass());
    for (const auto& pair : d.pairs) {
      CHECK(pair.sigma[3] >= 1);
      CHECK(pair.tau[3] >= 1);
    }
  }
}

TEST_CASE("small search counts") {
  SearchTask t20;
  t20.d = 2;
  SearchResult r20 = search(t20);
  CHECK(r20.summary.n == 7);
  CHECK(r20.summary.solutions == 1);
  CHECK(r20.summary.aborted == 0);

  SearchTask t30;
  t30.d = 3;
  SearchResult r30 = search(t30);
  CHECK(r30.summary.n == 9);
  CHECK(r30.summary.solutions == 1);
}

TEST_CASE("search is deterministic across worker counts") {
  SearchTask one;
  one.d = 3;
  one.k = 1;
  SearchTask four = one;
  four.jobs = 4;
  SearchResult a = search(one);
  SearchResult b = search(four);
  CHECK(a.summary.raw == b.summary.raw);
  CHECK(a.summary.solutions == b.summary.solutions);
  REQUIRE(a.solutions.size() == b.solutions.size());
  for (size_t i = 0; i < a.solutions.size(); ++i) {
    CHECK(a.solutions[i].m == b.solutions[i].m);
    CHECK(a.solutions[i].deck == b.solutions[i].deck);
    CHECK(a.solutions[i].canonical_key == b.solutions[i].canonical_key);
  }
}

TEST_CASE("raw counts dominate deduped counts") {
  SearchTask dedup;
  dedup.d = 2;
  dedup.k = 1;
  SearchTask raw = dedup;
  raw.dedup = false;
  SearchResult a = search(dedup);
  SearchResult b = search(raw);
  CHECK(a.summary.raw == b.summary.raw);
  CHECK(b.summary.solutions == b.summary.raw);
  CHECK(a.summary.solutions <= b.summary.solutions);
  CHECK(a.summary.solutions == 2);
}

TEST_CASE("search output files round trip") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "tightweb_search_out";
  fs::remove_all(dir);
  SearchTask t;
  t.d = 2;
  t.k = 1;
  t.out_dir = dir.string();
  SearchResult r = search(t);
  CHECK(fs::exists(dir / "summary.txt"));
  for (size_t i = 0; i < r.solutions.size(); ++i) {
    std::string stem = "sol00" + std::to_string(i);
    DeckFile df = read_deck_file((dir / (stem + ".deck")).string());
    CHECK(df.m == r.solutions[i].m);
    CHECK(df.deck == r.solutions[i].deck);
    CHECK(deck_conditions(df.deck, df.m, df.params).pass());
    FacetComplex k = read_fct_file((dir / (stem + "_K.fct")).string());
    FacetComplex bd = read_fct_file((dir / (stem + "_boundary.fct")).string());
    CHECK(k.dim() == 3);
    CHECK(bd == boundary_complex(k));
  }
  fs::remove_all(dir);
}

TEST_CASE("family counts and membership") {
  CHECK(family_count(2) == 2);
  CHECK(family_count(3) == 4);
  CHECK(family_count(4) == 16);
  CHECK(family_count(5) == 64);
  CHECK(family_count(6) == 384);

  auto members = family_generate(3);
  REQUIRE(members.size() == 4);
  for (const auto& mem : members) {
    CHECK(mem.m.m == std::vector<int>{5, 1});
    CHECK(deck_conditions(mem.deck, mem.m, mem.params).pass());
  }

  // the two legacy decks appear: (beta, alpha) = ((0,d..1), (0,1..d)) and
  // ((0,d..1), (0,d..1)); the deck stores them as (alpha, beta)
  auto decks = family_decks(3);
  Deck legacy1;
  legacy1.pairs.push_back({{0, 1, 2, 3}, {0, 3, 2, 1}});
  Deck legacy2;
  legacy2.pairs.push_back({{0, 3, 2, 1}, {0, 3, 2, 1}});
  CHECK(std::find(decks.begin(), decks.end(), legacy1) != decks.end());
  CHECK(std::find(decks.begin(), decks.end(), legacy2) != decks.end());
}

TEST_CASE("family members are among the k=1 search solutions") {
  SearchTask t31;
  t31.d = 3;
  t31.k = 1;
  SearchResult r = search(t31);
  CHECK(r.summary.solutions == 6);
  long long with_family_m = 0;
  for (const Solution& s : r.solutions)
    if (s.m.m == std::vector<int>{5, 1}) ++with_family_m;
  CHECK(with_family_m == 4);
}

TEST_CASE("family boundaries: orientability follows the parity of d") {
  for (const auto& mem : family_generate(3)) {
    HandleComplex k = build_handlebody(mem.params, mem.m, mem.deck);
    CHECK_FALSE(is_orientable(boundary_of(k).boundary));
  }
  // one even-dimensional member (the full run happens in acceptance)
  auto members4 = family_generate(4);
  HandleComplex k4 = build_handlebody(members4[0].params, members4[0].m, members4[0].deck);
  CHECK(is_orientable(boundary_of(k4).boundary));
}

TEST_CASE("family members at d=3 are pairwise non-isomorphic") {
  std::vector<FacetComplex> boundaries;
  for (const auto& mem : family_generate(3))
    boundaries.push_back(boundary_of(build_handlebody(mem.params, mem.m, mem.deck)).boundary);
  std::vector<std::string> keys;
  for (const auto& bd : boundaries) keys.push_back(canonical_key(bd));
  for (size_t i = 0; i < boundaries.size(); ++i)
    for (size_t j = i + 1; j < boundaries.size(); ++j) {
      CHECK(keys[i] != keys[j]);
      CHECK_FALSE(is_isomorphic(boundaries[i], boundaries[j]).has_value());
    }
}

TEST_CASE("solution betti numbers match the closed formula") {
  SearchTask t31;
  t31.d = 3;
  t31.k = 1;
  SearchResult r = search(t31);
  REQUIRE(!r.solutions.empty());
  const Solution& s = r.solutions.front();
  Params p = Params::make(3, 1);
  HandleComplex k = build_handlebody(p, s.m, s.deck);
  CHECK(betti1_z2(boundary_of(k).boundary) == betti_from_formula(3, 1));
}
