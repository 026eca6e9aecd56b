#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tightweb/assembly.hpp"
#include "tightweb/certify.hpp"
#include "tightweb/spiderweb.hpp"

namespace tightweb {

struct SearchTask {
  int d = 2;
  int k = 0;
  bool dedup = true;
  int jobs = 1;
  std::string out_dir;  // empty: no files written
};

struct Solution {
  MVector m;
  Deck deck;
  std::string canonical_key;  // of the boundary complex
  std::string cert_digest;
  Certificate::Verdict verdict = Certificate::Verdict::NotCertified;
};

struct SearchSummary {
  int d = 0, k = 0, n = 0;
  long long raw = 0;        // (m, deck) configurations passing all conditions
  long long solutions = 0;  // after isomorphism dedup (== raw when dedup off)
  long long aborted = 0;    // candidates killed by a structural assertion

  std::string to_line() const;
};

struct SearchResult {
  SearchSummary summary;
  std::vector<Solution> solutions;
};

// Pre-processing table for the deck search at a fixed d: the d*d! valid
// permutations (those with sigma(d) != 0) grouped by type, so that the
// pairs compatible with a given pair occupy contiguous blocks of the
// lexicographic (type, type) ordering, wrapping around at most once.
struct PermBlockTable {
  int d = 0;
  std::vector<std::vector<int>> perms;             // all valid permutations
  std::vector<std::vector<int>> perm_ids_by_type;  // [type] -> perm indices

  static PermBlockTable make(int d);
  long long pairs_per_block() const;
  long long total_pairs() const;
};

// Depth-first enumeration of (m_0, ..., m_k) with m_k = 1, pruned by the
// requirement that the multiple sets {±l m_i : 1 <= l <= d+1} be pairwise
// disjoint.
std::vector<MVector> enumerate_m_vectors(int d, int k);

// Depth-first enumeration of decks for a fixed m-vector, from level k
// down to 1, pruned by pair compatibility and incremental span
// disjointness; every emitted deck satisfies the deck conditions.
void enumerate_decks(const Params& p, const MVector& m, const PermBlockTable& table,
                     const std::function<void(const Deck&)>& yield);
std::vector<Deck> enumerate_decks(const Params& p, const MVector& m,
                                  const PermBlockTable& table);

SearchResult search(const SearchTask& task);

// short hex digest for displaying canonical keys
std::string short_digest(const std::string& bytes);

// The k = 1 family on G(d, 1; d+2, 1).
long long family_count(int d);
std::vector<Deck> family_decks(int d);

struct FamilyMember {
  Params params;
  MVector m;
  Deck deck;
};
std::vector<FamilyMember> family_generate(int d);

}  // namespace tightweb
