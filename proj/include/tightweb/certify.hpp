#pragma once

#include <string>
#include <vector>

#include "tightweb/simplicial.hpp"

namespace tightweb {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string citation;
};

struct Certificate {
  enum class Verdict { Tight, NotCertified, Refuted };

  std::string subject;
  std::vector<CheckResult> checks;
  Verdict verdict = Verdict::NotCertified;

  std::string to_text() const;
  std::string digest() const;
  static const char* verdict_name(Verdict v);
};

// Reverse-stacking recognition: D = 1 accepts every single cycle; D >= 2
// repeatedly replaces the star of a vertex lying in exactly D+1 facets
// whose link is the boundary of a D-simplex.
bool is_stacked_sphere(const FacetComplex& s);

// Dual graph is a tree and greedy leaf peeling (one private vertex per
// removed facet) ends at a single simplex.
bool is_stacked_ball(const FacetComplex& b);

// All vertex links are stacked spheres.
bool is_locally_stacked(const FacetComplex& m);

// For a bounded D-complex: skel_{D-2}(N) == skel_{D-2}(bd N).
bool is_stacked_bounded(const FacetComplex& n);

// binom(f0 - d - 1, 2) == binom(d+2, 2) * beta1, dim >= 3.
bool is_tight_neighbourly(const FacetComplex& m, long long betti1);

// First Betti number of the constructed boundaries:
// binom((d+1)((d+2)k+1)+1, 2) / binom(d+2, 2), doubled for d = 2.
long long betti_from_formula(int d, int k);

// Runs the applicable chain of published tightness criteria and returns a
// pass/fail report per condition.  Closed and bounded inputs are told
// apart by their boundary.
Certificate certify_tight(const FacetComplex& m, const std::string& subject_label);

}  // namespace tightweb
