#pragma once

#include "semicover/cone_set.hpp"
#include "semicover/cover_pair.hpp"

#include <compare>

namespace semicover {

/// A left order on G/N: xN <= yN iff x^-1 y lies in `cone`.
struct LeftOrderWitness {
  ModelPtr model;
  ConeSet kernel;
  ConeSet cone;
};

/// Comparator induced by a cone: x <= y iff x^-1 y in cone; x and y are
/// equivalent when x^-1 y lies in the kernel.
class Comparator {
 public:
  Comparator(ConeSet cone, ConeSet kernel);

  std::weak_ordering compare(const Element& x, const Element& y) const;
  bool less_equal(const Element& x, const Element& y) const;

  const ConeSet& cone() const noexcept { return cone_; }
  const ConeSet& kernel() const noexcept { return kernel_; }

 private:
  ConeSet cone_;
  ConeSet kernel_;
};

Comparator comparator(const LeftOrderWitness& w);

/// Checks P ∪ P^-1 ⊇ domain, P ∩ P^-1 ∩ domain = {1} and closure, then returns
/// the total left order. Throws NotACone with the failing witness.
Comparator order_from_cone(const ModelPtr& model, const ConeSet& cone, int radius);

/// Preimage of a cone on Z^r under `hom`, as a cone on the source. Supported
/// for identity, pullback, coordinate and boolean/conjugate nodes; explicit
/// lists have no finite preimage description (UnsupportedCone).
ConeSet pullback_cone(const Homomorphism& hom, const ConeSet& target_cone);

/// Packages the order pulled back along `hom`; kernel = hom^-1(0).
/// Throws NotACone when `quotient_cone` is not a cone on the target ball.
LeftOrderWitness cone_from_quotient_order(const ModelPtr& model, const Homomorphism& hom,
                                          const ConeSet& quotient_cone, int radius);

/// A = preimage of the strictly negative part ∪ {1}, B = preimage of the cone.
/// Throws TrivialQuotient when the image of the model is trivial or the cone
/// has no strictly positive element on the target ball.
CoverPair pullback_cover(const ModelPtr& model, const Homomorphism& hom, const ConeSet& quotient_cone, int radius);
/// Same construction straight from a witness: A = complement(cone) ∪ {1}, B = cone.
CoverPair pullback_cover(const LeftOrderWitness& w, int radius);

struct WitnessCheck {
  Verdict kernel_inverse_closed;
  Verdict kernel_closed;
  Verdict kernel_normal;
  Verdict kernel_in_cone;
  Verdict cone_closed;
  Verdict cone_covers;
  Verdict cone_meet_in_kernel;

  bool ok() const;
};

WitnessCheck validate_witness(const LeftOrderWitness& w, int radius);

/// For all x, y in the domain exactly one of x < y, y < x, x^-1 y in kernel.
Verdict check_totality(const LeftOrderWitness& w, int radius);
/// For all h in `multipliers`, x, y in the domain: compare(x, y) = compare(hx, hy).
Verdict check_left_invariance(const LeftOrderWitness& w, const Ball& multipliers, const Ball& domain);

/// Orders by w1 first and breaks ties inside kernel1 with w2:
/// kernel = kernel1 ∩ kernel2, cone = (cone1 - kernel1) ∪ (kernel1 ∩ cone2).
/// Throws ModelMismatch.
LeftOrderWitness lex_combine(const LeftOrderWitness& w1, const LeftOrderWitness& w2);

struct MergeResult {
  CoverPair cover;
  Verdict b_within_b1;
  Verdict a1_within_a;
  Verdict symmetric_part_is_meet;

  bool ok() const;
};

/// B' = (B1 - N1) ∪ (N1 ∩ B2), A' = complement(B') ∪ {1}, with N_i the
/// symmetric part of B_i. Both inputs must have trivial intersection and
/// normal N_i on the ball (NotNormalized otherwise).
MergeResult merge_covers(const CoverPair& c1, const CoverPair& c2, int radius);

/// Ball-local normality: first (g, n) with n in S ∩ domain and g^-1 n g outside S.
Verdict is_conjugation_stable(const ConeSet& s, const Ball& domain);

}  // namespace semicover
