#include "semicover/cover_engine.hpp"

namespace semicover {

std::string_view to_string(Side s) { return s == Side::b_side ? "B" : "A"; }

std::string_view to_string(DescentOutcome o) {
  return o == DescentOutcome::normal_found ? "normal_found" : "depth_exceeded";
}

IntersectionSplit classify_intersection(const ModelPtr& model, const ConeSet& a, const ConeSet& b, int radius) {
  require_same_model(*model, a.model(), "classify_intersection");
  require_same_model(*model, b.model(), "classify_intersection");
  const Ball domain = verification_domain(*model, radius);
  IntersectionSplit s;
  for (const auto& x : domain) {
    const bool in_a = a.contains(x);
    const bool in_b = b.contains(x);
    if (!in_a && !in_b) throw Error(ErrorCode::NotACover, "A ∪ B misses an element", {x});
    if (!(in_a && in_b)) continue;
    s.intersection.push_back(x);
    const Element xi = model->inv(x);
    const bool inv_a = a.contains(xi);
    const bool inv_b = b.contains(xi);
    if (inv_a && !inv_b) s.i_a.push_back(x);
    if (inv_b && !inv_a) s.i_b.push_back(x);
  }
  if (!s.i_a.empty() && !s.i_b.empty()) {
    throw Error(ErrorCode::LemmaViolation, "I_A and I_B are both nonempty; A or B is not a semigroup",
                {s.i_a.front(), s.i_b.front()});
  }
  s.side = s.i_a.empty() ? Side::b_side : Side::a_side;
  return s;
}

Reduction reduce_cover(const ModelPtr& model, const ConeSet& a, const ConeSet& b, int radius) {
  const IntersectionSplit split = classify_intersection(model, a, b, radius);
  const bool oriented = split.side == Side::a_side;
  ConeSet first = oriented ? b : a;
  ConeSet second = oriented ? a : b;

  const Ball domain = verification_domain(*model, radius);
  const ConeSet i = first & second;
  const ConeSet h = symmetric_part(*model, second);
  bool swap = false;
  if (!is_trivial_on(i, domain).ok() && extensionally_equal(h, i, domain).ok()) {
    std::swap(first, second);
    swap = true;
  }
  ConeSet a_star = (first - (first & second)) | ConeSet::identity(model);
  return Reduction{make_cover_pair(model, std::move(a_star), std::move(second), radius), split.side, swap};
}

ConeSet maximal_subgroup(const ModelPtr& model, const ConeSet& b, int radius) {
  const Ball domain = verification_domain(*model, radius);
  ConeSet h = symmetric_part(*model, b);
  const Verdict inverse_closed = is_subset_on(h, h.inverse(), domain);
  if (!inverse_closed.ok()) throw Error(ErrorCode::ClosureViolation, "H is not inverse-closed", inverse_closed.witness);
  const Verdict closed = is_subsemigroup(h, domain);
  if (!closed.ok()) throw Error(ErrorCode::ClosureViolation, "H is not closed", closed.witness);
  return h;
}

Verdict check_coset_saturation(const CoverPair& cover, int radius) {
  const GroupModel& m = *cover.model;
  const Ball domain = verification_domain(m, radius);
  const ConeSet h_set = symmetric_part(m, cover.b);
  const ConeSet a_rest = cover.a - ConeSet::identity(cover.model);
  const ConeSet b_rest = cover.b - h_set;
  const auto hs = members(h_set, domain);
  for (const auto& x : domain) {
    const bool in_a = a_rest.contains(x);
    const bool in_b = b_rest.contains(x);
    if (!in_a && !in_b) continue;
    const ConeSet& side = in_a ? a_rest : b_rest;
    for (const auto& h : hs) {
      if (!side.contains(m.mul(h, x)) || !side.contains(m.mul(x, h))) {
        return Verdict::fail(domain, {h, x}, in_a ? "hx or xh leaves A-{1}" : "hx or xh leaves B-H");
      }
    }
  }
  return Verdict::pass(domain);
}

Verdict check_inverse_duality(const CoverPair& cover, int radius) {
  return inverse_duality(cover.a, cover.b, verification_domain(*cover.model, radius));
}

ConjugateSplit conjugate_split(const CoverPair& cover, const Element& g) {
  const GroupModel& m = *cover.model;
  m.validate(g);
  const Ball domain = verification_domain(m, cover.radius);
  ConeSet h = symmetric_part(m, cover.b);
  if (is_trivial_on(h, domain).ok()) throw Error(ErrorCode::IdentityOnlyH, "H is trivial; nothing to split");
  const Element gi = m.inv(g);
  ConjugateSplit s{h, h & ConeSet::conjugate(cover.a, gi), h & ConeSet::conjugate(cover.b, gi), false};
  s.already_normal =
      extensionally_equal(ConeSet::conjugate(h, g), h, domain).ok() && is_trivial_on(s.h_a, domain).ok();
  return s;
}

namespace {

// First (b1, b2) in B' with b1 b2 in H_A - {1}.
std::optional<std::vector<Element>> product_into(const GroupModel& m, const std::vector<Element>& bs,
                                                 const ConeSet& h_a) {
  for (const auto& x : bs) {
    for (const auto& y : bs) {
      const Element p = m.mul(x, y);
      if (!m.is_identity(p) && h_a.contains(p)) return std::vector<Element>{x, y};
    }
  }
  return std::nullopt;
}

}  // namespace

CoverPair refine_pair(const CoverPair& cover, const Element& g) {
  const GroupModel& m = *cover.model;
  const Ball domain = verification_domain(m, cover.radius);
  const ConjugateSplit split = conjugate_split(cover, g);
  if (is_trivial_on(split.h_a, domain).ok()) {
    throw Error(ErrorCode::NothingToRefine, "H_A is trivial for this g", {g});
  }
  ConeSet a2 = cover.a | split.h_a;
  ConeSet b2 = (cover.b - split.h_a) | ConeSet::identity(cover.model);

  const Verdict b_closed = is_subsemigroup(b2, domain);
  if (!b_closed.ok()) {
    auto w = product_into(m, members(b2, domain), split.h_a);
    throw Error(ErrorCode::ClosureViolation, "B' is not closed", w ? *w : b_closed.witness);
  }
  const Verdict a_closed = is_subsemigroup(a2, domain);
  if (!a_closed.ok()) throw Error(ErrorCode::ClosureViolation, "A' is not closed", a_closed.witness);

  const auto gained = members(a2 - cover.a, domain);
  const auto lost = members(cover.b - b2, domain);
  if (gained.empty() || lost.empty()) {
    throw Error(ErrorCode::LemmaViolation, "refinement is not strict on the ball", {g});
  }
  for (const auto& x : members(a2, domain)) {
    const Element xi = m.inv(x);
    if (!b2.contains(xi)) throw Error(ErrorCode::LemmaViolation, "a in A' with a^-1 outside B'", {x});
    if (!m.is_identity(x) && a2.contains(xi)) {
      throw Error(ErrorCode::LemmaViolation, "A' contains a nontrivial subgroup", {x});
    }
  }
  return make_cover_pair(cover.model, std::move(a2), std::move(b2), cover.radius);
}

DepthExceededError::DepthExceededError(DescentState state)
    : Error(ErrorCode::DepthExceeded,
            "no conjugation-stable maximal subgroup after " + std::to_string(state.step) + " refinements",
            state.history.empty() ? std::vector<Element>{} : std::vector<Element>{state.history.back().g}),
      state_(std::move(state)) {}

DescentState minimal_pair_descent(const CoverPair& cover, int max_depth) {
  const GroupModel& m = *cover.model;
  const Ball domain = verification_domain(m, cover.radius);
  DescentState st{cover, 0, {}, DescentOutcome::depth_exceeded, std::nullopt};
  for (;;) {
    ConeSet n = symmetric_part(m, st.current.b);
    const Verdict stable = is_conjugation_stable(n, domain);
    if (stable.ok()) {
      st.outcome = DescentOutcome::normal_found;
      st.normal = std::move(n);
      return st;
    }
    if (st.step >= max_depth) return st;
    const Element& g = stable.witness[0];
    CoverPair next = refine_pair(st.current, g);
    st.history.push_back(DescentStep{g, stable.witness[1], members(st.current.b, domain).size(),
                                     members(next.b, domain).size()});
    st.current = std::move(next);
    ++st.step;
  }
}

WitnessDerivation derive_order_witness(const ModelPtr& model, const ConeSet& a, const ConeSet& b, int radius,
                                       int max_depth) {
  Reduction red = reduce_cover(model, a, b, radius);
  DescentState st = minimal_pair_descent(red.cover, max_depth);
  if (st.outcome != DescentOutcome::normal_found) throw DepthExceededError(std::move(st));
  LeftOrderWitness w{model, *st.normal, st.current.b};
  return WitnessDerivation{std::move(red), std::move(st), std::move(w)};
}

LeftOrderWitness order_witness_from_cover(const ModelPtr& model, const ConeSet& a, const ConeSet& b, int radius,
                                          int max_depth) {
  return derive_order_witness(model, a, b, radius, max_depth).witness;
}

TorsionReport torsion_obstruction(const FiniteGroup& group, int cap) {
  TorsionReport r;
  for (int g : group.generators()) {
    const ElementOrder o = element_order(group, g);
    r.generators.push_back(GeneratorTrace{g, o.order, o.inverse_witness});
  }
  if (group.order() == 1) {
    r.conclusion = "trivial group: no proper subsets to cover with";
    return r;
  }
  r.conclusion =
      "every generator g has finite order n and g^(n-1) = g^-1, so g and g^-1 lie in the same subsemigroup; "
      "no two-subsemigroup cover exists";
  if (group.order() <= cap) {
    const TwoCoverReport search = two_cover_search(group, cap);
    r.exhaustive = true;
    r.closed_subsets = search.closed_subsets;
    r.covers_found = search.covers.size();
  }
  return r;
}

}  // namespace semicover
