#include "semicover/order_engine.hpp"

#include "semicover/errors.hpp"

namespace semicover {

Comparator::Comparator(ConeSet cone, ConeSet kernel) : cone_(std::move(cone)), kernel_(std::move(kernel)) {
  require_same_model(cone_.model(), kernel_.model(), "comparator");
}

std::weak_ordering Comparator::compare(const Element& x, const Element& y) const {
  const GroupModel& m = cone_.model();
  const Element z = m.mul(m.inv(x), y);
  if (kernel_.contains(z)) return std::weak_ordering::equivalent;
  return cone_.contains(z) ? std::weak_ordering::less : std::weak_ordering::greater;
}

bool Comparator::less_equal(const Element& x, const Element& y) const {
  const GroupModel& m = cone_.model();
  return cone_.contains(m.mul(m.inv(x), y));
}

Comparator comparator(const LeftOrderWitness& w) { return Comparator(w.cone, w.kernel); }

Comparator order_from_cone(const ModelPtr& model, const ConeSet& cone, int radius) {
  require_same_model(*model, cone.model(), "order_from_cone");
  const Ball domain = verification_domain(*model, radius);
  const ConeSet inv = cone.inverse();
  for (const auto& x : domain) {
    const bool in = cone.contains(x);
    const bool in_inv = inv.contains(x);
    if (!in && !in_inv) throw Error(ErrorCode::NotACone, "P ∪ P^-1 misses an element", {x});
    if (in && in_inv && !model->is_identity(x)) throw Error(ErrorCode::NotACone, "P ∩ P^-1 is larger than {1}", {x});
  }
  if (!cone.contains(model->identity())) throw Error(ErrorCode::NotACone, "identity is not in P", {model->identity()});
  const Verdict closed = is_subsemigroup(cone, domain);
  if (!closed.ok()) throw Error(ErrorCode::NotACone, "P is not closed under products", closed.witness);
  return Comparator(cone, ConeSet::identity(model));
}

ConeSet pullback_cone(const Homomorphism& hom, const ConeSet& target_cone) {
  require_same_model(hom.target(), target_cone.model(), "pullback_cone");
  const ConeNode& n = target_cone.node();
  switch (n.kind) {
    case ConeSet::Kind::identity:
      return ConeSet::pullback(hom, Region::lex_zero);
    case ConeSet::Kind::pullback: return ConeSet::pullback(hom.then(*n.hom), n.region);
    case ConeSet::Kind::coordinates: {
      // on Z^r the coordinates are the entries of the image vector
      std::vector<std::vector<Coord>> proj;
      for (const auto& g : hom.target().generators()) {
        std::vector<Coord> row;
        for (int c : n.coords) row.push_back(g[static_cast<std::size_t>(c)]);
        proj.push_back(std::move(row));
      }
      return ConeSet::pullback(hom.then(Homomorphism::to_zr(hom.target_ptr(), proj)),
                               n.on_inverse ? reflect(n.region) : n.region);
    }
    case ConeSet::Kind::union_of:
    case ConeSet::Kind::intersection: {
      std::vector<ConeSet> parts;
      for (const auto& c : n.children) parts.push_back(pullback_cone(hom, c));
      return n.kind == ConeSet::Kind::union_of ? ConeSet::unite(std::move(parts))
                                               : ConeSet::intersect(std::move(parts));
    }
    case ConeSet::Kind::complement: return ConeSet::complement(pullback_cone(hom, n.children.front()));
    case ConeSet::Kind::conjugate:
      // Z^r is abelian, so conjugation is the identity there
      return pullback_cone(hom, n.children.front());
    case ConeSet::Kind::bits:
    case ConeSet::Kind::explicit_set: break;
  }
  throw Error(ErrorCode::UnsupportedCone, "explicit element lists have no finite preimage description");
}

LeftOrderWitness cone_from_quotient_order(const ModelPtr& model, const Homomorphism& hom,
                                          const ConeSet& quotient_cone, int radius) {
  require_same_model(*model, hom.source(), "cone_from_quotient_order");
  if (!hom.target().is_free_abelian()) {
    throw Error(ErrorCode::UnsupportedCone, "quotient orders are pulled back from Z^r");
  }
  order_from_cone(hom.target_ptr(), quotient_cone, radius);
  return LeftOrderWitness{model, ConeSet::pullback(hom, Region::lex_zero), pullback_cone(hom, quotient_cone)};
}

CoverPair pullback_cover(const ModelPtr& model, const Homomorphism& hom, const ConeSet& quotient_cone, int radius) {
  require_same_model(*model, hom.source(), "pullback_cover");
  bool image_trivial = true;
  for (const auto& e : hom.images()) image_trivial = image_trivial && hom.target().is_identity(e);
  if (image_trivial) throw Error(ErrorCode::TrivialQuotient, "the homomorphism has trivial image");
  const Ball target_ball = verification_domain(hom.target(), radius);
  const ConeSet inv = quotient_cone.inverse();
  bool nontrivial = false;
  for (const auto& t : target_ball) {
    if (!(quotient_cone.contains(t) && inv.contains(t))) {
      nontrivial = true;
      break;
    }
  }
  if (!nontrivial) throw Error(ErrorCode::TrivialQuotient, "every target ball element lies in P ∩ P^-1");
  ConeSet b = pullback_cone(hom, quotient_cone);
  ConeSet a = ~b | ConeSet::identity(model);
  return make_cover_pair(model, std::move(a), std::move(b), radius);
}

CoverPair pullback_cover(const LeftOrderWitness& w, int radius) {
  ConeSet a = ~w.cone | ConeSet::identity(w.model);
  return make_cover_pair(w.model, std::move(a), w.cone, radius);
}

bool WitnessCheck::ok() const {
  return kernel_inverse_closed.ok() && kernel_closed.ok() && kernel_normal.ok() && kernel_in_cone.ok() &&
         cone_closed.ok() && cone_covers.ok() && cone_meet_in_kernel.ok();
}

Verdict is_conjugation_stable(const ConeSet& s, const Ball& domain) {
  const auto in = members(s, domain);
  const auto& gs = domain.elements();
  const PairMembership conj(s, gs, in, PairMembership::Form::conjugate);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = 0; j < in.size(); ++j) {
      if (!conj.contains(i, j)) return Verdict::fail(domain, {gs[i], in[j]}, "g^-1 n g leaves the subgroup");
    }
  }
  return Verdict::pass(domain);
}

WitnessCheck validate_witness(const LeftOrderWitness& w, int radius) {
  require_same_model(*w.model, w.kernel.model(), "validate_witness");
  require_same_model(*w.model, w.cone.model(), "validate_witness");
  const Ball domain = verification_domain(*w.model, radius);
  const ConeSet cone_inv = w.cone.inverse();
  WitnessCheck c{
      is_subset_on(w.kernel, w.kernel.inverse(), domain),
      is_subsemigroup(w.kernel, domain),
      is_conjugation_stable(w.kernel, domain),
      is_subset_on(w.kernel, w.cone & cone_inv, domain),
      is_subsemigroup(w.cone, domain),
      Verdict::pass(domain),
      is_subset_on(w.cone & cone_inv, w.kernel, domain),
  };
  for (const auto& x : domain) {
    if (!w.cone.contains(x) && !cone_inv.contains(x)) {
      c.cone_covers = Verdict::fail(domain, {x}, "neither x nor x^-1 is non-negative");
      break;
    }
  }
  return c;
}

namespace {

// Order relation of x_i and y_j: -1, 0 or 1 for less, equivalent, greater.
class PairOrder {
 public:
  PairOrder(const LeftOrderWitness& w, const std::vector<Element>& xs)
      : kernel_(w.kernel, xs, xs, PairMembership::Form::quotient),
        cone_(w.cone, xs, xs, PairMembership::Form::quotient) {}

  int compare(std::size_t i, std::size_t j) const {
    if (kernel_.contains(i, j)) return 0;
    return cone_.contains(i, j) ? -1 : 1;
  }
  bool equivalent(std::size_t i, std::size_t j) const { return kernel_.contains(i, j); }
  bool in_cone(std::size_t i, std::size_t j) const { return cone_.contains(i, j); }

 private:
  PairMembership kernel_;
  PairMembership cone_;
};

}  // namespace

Verdict check_totality(const LeftOrderWitness& w, int radius) {
  const Ball domain = verification_domain(*w.model, radius);
  const auto& xs = domain.elements();
  const PairOrder order(w, xs);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < xs.size(); ++j) {
      // z = x^-1 y and z^-1 = y^-1 x
      const bool equiv = order.equivalent(i, j);
      const bool less = order.in_cone(i, j) && !equiv;
      const bool greater = order.in_cone(j, i) && !order.equivalent(j, i);
      if (int(equiv) + int(less) + int(greater) != 1) {
        return Verdict::fail(domain, {xs[i], xs[j]}, "not exactly one of x<y, y<x, x~y");
      }
    }
  }
  return Verdict::pass(domain);
}

Verdict check_left_invariance(const LeftOrderWitness& w, const Ball& multipliers, const Ball& domain) {
  const GroupModel& m = *w.model;
  const auto& xs = domain.elements();
  const PairOrder base(w, xs);
  for (const auto& h : multipliers) {
    std::vector<Element> shifted;
    shifted.reserve(xs.size());
    for (const auto& x : xs) shifted.push_back(m.mul(h, x));
    const PairOrder moved(w, shifted);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = 0; j < xs.size(); ++j) {
        if (base.compare(i, j) != moved.compare(i, j)) {
          return Verdict::fail(domain, {h, xs[i], xs[j]}, "order changes under h");
        }
      }
    }
  }
  return Verdict::pass(domain);
}

LeftOrderWitness lex_combine(const LeftOrderWitness& w1, const LeftOrderWitness& w2) {
  require_same_model(*w1.model, *w2.model, "lex_combine");
  return LeftOrderWitness{w1.model, w1.kernel & w2.kernel, (w1.cone - w1.kernel) | (w1.kernel & w2.cone)};
}

bool MergeResult::ok() const {
  return cover.flags.all_verified() && b_within_b1.ok() && a1_within_a.ok() && symmetric_part_is_meet.ok();
}

MergeResult merge_covers(const CoverPair& c1, const CoverPair& c2, int radius) {
  require_same_model(*c1.model, *c2.model, "merge_covers");
  const GroupModel& m = *c1.model;
  const Ball domain = verification_domain(m, radius);
  const ConeSet n1 = symmetric_part(m, c1.b);
  const ConeSet n2 = symmetric_part(m, c2.b);
  for (const auto* c : {&c1, &c2}) {
    const Verdict meet = is_trivial_on(c->a & c->b, domain);
    if (!meet.ok()) throw Error(ErrorCode::NotNormalized, "A ∩ B is larger than {1}", meet.witness);
  }
  for (const auto* n : {&n1, &n2}) {
    const Verdict normal = is_conjugation_stable(*n, domain);
    if (!normal.ok()) throw Error(ErrorCode::NotNormalized, "maximal subgroup of B is not normal", normal.witness);
  }
  ConeSet b = (c1.b - n1) | (n1 & c2.b);
  ConeSet a = ~b | ConeSet::identity(c1.model);
  MergeResult r{make_cover_pair(c1.model, a, b, radius), is_subset_on(b, c1.b, domain),
                is_subset_on(c1.a, a, domain),
                extensionally_equal(symmetric_part(m, b), n1 & n2, domain)};
  return r;
}

}  // namespace semicover
