#pragma once

#include "semicover/cone_set.hpp"

namespace semicover {

struct CoverFlags {
  Verdict closed_a;
  Verdict closed_b;
  Verdict covers;
  Verdict proper_a;
  Verdict proper_b;
  Verdict trivial_intersection;
  Verdict inverse_duality;

  bool all_verified() const;
};

/// An ordered pair (A, B) of cones with the verdicts computed at `radius`.
struct CoverPair {
  ModelPtr model;
  ConeSet a;
  ConeSet b;
  CoverFlags flags;
  int radius = 0;
};

/// x in A-{1} => x^-1 in B-H, and b in B-H => b^-1 in A-{1}, where
/// H = B ∩ B^-1. Witness: the offending element.
Verdict inverse_duality(const ConeSet& a, const ConeSet& b, const Ball& domain);

/// Builds the pair and evaluates every flag on the verification domain.
CoverPair make_cover_pair(ModelPtr model, ConeSet a, ConeSet b, int radius);

}  // namespace semicover
