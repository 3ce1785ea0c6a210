#pragma once

#include "semicover/cover_pair.hpp"
#include "semicover/covering_number.hpp"
#include "semicover/errors.hpp"
#include "semicover/order_engine.hpp"

#include <optional>
#include <string>
#include <vector>

namespace semicover {

enum class Side { b_side, a_side };
std::string_view to_string(Side s);

struct IntersectionSplit {
  /// Side guaranteed to contain <I>.
  Side side = Side::b_side;
  std::vector<Element> intersection;
  /// x in I with x^-1 in A only, resp. in B only.
  std::vector<Element> i_a;
  std::vector<Element> i_b;
};

/// Only coverage is required of the input (NotACover otherwise). Throws
/// LemmaViolation with (first of I_A, first of I_B) when both are nonempty.
IntersectionSplit classify_intersection(const ModelPtr& model, const ConeSet& a, const ConeSet& b, int radius);

struct Reduction {
  CoverPair cover;
  Side side = Side::b_side;
  /// The H = I branch renamed A and B.
  bool swapped = false;
};

/// Orients <I> into B, swaps A and B when H and I agree on the ball (and
/// are not both {1}), then returns A* = (A - I) ∪ {1}, B* = B.
Reduction reduce_cover(const ModelPtr& model, const ConeSet& a, const ConeSet& b, int radius);

/// symmetric_part(B) after checking it is inverse-closed and closed on the
/// ball. Throws ClosureViolation.
ConeSet maximal_subgroup(const ModelPtr& model, const ConeSet& b, int radius);

/// h(A-{1}) = (A-{1}) = (A-{1})h and the same for B-H, for h in H. Witness (h, x).
Verdict check_coset_saturation(const CoverPair& cover, int radius);
Verdict check_inverse_duality(const CoverPair& cover, int radius);

struct ConjugateSplit {
  ConeSet h;
  ConeSet h_a;
  ConeSet h_b;
  /// H^g = H on the ball and H_A is trivial there.
  bool already_normal = false;
};

/// H_A = H ∩ A^(g^-1), H_B = H ∩ B^(g^-1). Throws IdentityOnlyH.
ConjugateSplit conjugate_split(const CoverPair& cover, const Element& g);

/// A' = A ∪ H_A, B' = (B - H_A) ∪ {1}, then every refinement property is
/// checked on the ball. Throws NothingToRefine or ClosureViolation; when B'
/// fails closure the witness is a pair (b1, b2) with b1 b2 in H_A if one exists.
CoverPair refine_pair(const CoverPair& cover, const Element& g);

struct DescentStep {
  Element g;
  /// n in N with g^-1 n g outside N.
  Element moved;
  std::size_t v_size_before = 0;
  std::size_t v_size_after = 0;
};

enum class DescentOutcome { normal_found, depth_exceeded };
std::string_view to_string(DescentOutcome o);

struct DescentState {
  CoverPair current;
  int step = 0;
  std::vector<DescentStep> history;
  DescentOutcome outcome = DescentOutcome::depth_exceeded;
  std::optional<ConeSet> normal;
};

/// Refines with the first BFS g moving N until N is conjugation-stable on the
/// ball or max_depth refinements were made.
DescentState minimal_pair_descent(const CoverPair& cover, int max_depth);

class DepthExceededError : public Error {
 public:
  explicit DepthExceededError(DescentState state);
  const DescentState& state() const noexcept { return state_; }

 private:
  DescentState state_;
};

struct WitnessDerivation {
  Reduction reduction;
  DescentState descent;
  LeftOrderWitness witness;
};

/// reduce_cover, then descent, then (N, V) as a witness. Throws DepthExceededError.
WitnessDerivation derive_order_witness(const ModelPtr& model, const ConeSet& a, const ConeSet& b, int radius,
                                       int max_depth);
LeftOrderWitness order_witness_from_cover(const ModelPtr& model, const ConeSet& a, const ConeSet& b, int radius,
                                          int max_depth);

struct GeneratorTrace {
  int generator = 0;
  int order = 1;
  /// g^(order-1), equal to g^-1.
  int power = 0;
};

struct TorsionReport {
  std::vector<GeneratorTrace> generators;
  std::string conclusion;
  bool exhaustive = false;
  std::size_t closed_subsets = 0;
  std::size_t covers_found = 0;
};

/// Every generator has finite order, so g^(n-1) = g^-1 puts g into H; the
/// exhaustive two-cover search runs up to `cap`.
TorsionReport torsion_obstruction(const FiniteGroup& group, int cap = kExhaustiveCap);

}  // namespace semicover
