#include "semicover/cone_set.hpp"

#include "semicover/errors.hpp"

#include <algorithm>

namespace semicover {

Region reflect(Region r) {
  switch (r) {
    case Region::lex_pos: return Region::lex_neg;
    case Region::lex_nonneg: return Region::lex_nonpos;
    case Region::lex_zero: return Region::lex_zero;
    case Region::lex_nonpos: return Region::lex_nonneg;
    case Region::lex_neg: return Region::lex_pos;
  }
  return r;
}

bool in_region(std::span<const Coord> v, Region r) {
  int sign = 0;
  for (Coord c : v) {
    if (c != 0) {
      sign = c > 0 ? 1 : -1;
      break;
    }
  }
  switch (r) {
    case Region::lex_pos: return sign > 0;
    case Region::lex_nonneg: return sign >= 0;
    case Region::lex_zero: return sign == 0;
    case Region::lex_nonpos: return sign <= 0;
    case Region::lex_neg: return sign < 0;
  }
  return false;
}

std::string_view to_string(Region r) {
  switch (r) {
    case Region::lex_pos: return "lex_pos";
    case Region::lex_nonneg: return "lex_nonneg";
    case Region::lex_zero: return "lex_zero";
    case Region::lex_nonpos: return "lex_nonpos";
    case Region::lex_neg: return "lex_neg";
  }
  return "?";
}

Region parse_region(std::string_view name) {
  for (Region r : {Region::lex_pos, Region::lex_nonneg, Region::lex_zero, Region::lex_nonpos, Region::lex_neg}) {
    if (to_string(r) == name) return r;
  }
  throw Error(ErrorCode::ParseError, "unknown region '" + std::string(name) + "'");
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::verified: return "verified";
    case Status::counterexample: return "counterexample";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

std::shared_ptr<ConeNode> make_node(ConeSet::Kind kind, ModelPtr model) {
  if (!model) throw Error(ErrorCode::ModelMismatch, "cone without a model");
  auto n = std::make_shared<ConeNode>();
  n->kind = kind;
  n->model = std::move(model);
  return n;
}

ModelPtr common_model(const std::vector<ConeSet>& parts, std::string_view what) {
  if (parts.empty()) throw Error(ErrorCode::ParseError, std::string(what) + " needs at least one argument");
  for (const auto& p : parts) require_same_model(parts.front().model(), p.model(), what);
  return parts.front().model_ptr();
}

}  // namespace

ConeSet ConeSet::identity(ModelPtr model) { return ConeSet(make_node(Kind::identity, std::move(model))); }

ConeSet ConeSet::bits(ModelPtr model, Subset members) {
  if (!model || !model->finite_group()) throw Error(ErrorCode::UnsupportedCone, "bitset cones need a finite model");
  if (members.size() != static_cast<std::size_t>(model->finite_group()->order())) {
    throw Error(ErrorCode::ModelMismatch, "bitset size differs from the group order");
  }
  auto n = make_node(Kind::bits, std::move(model));
  n->bits = std::move(members);
  return ConeSet(n);
}

ConeSet ConeSet::pullback(Homomorphism hom, Region region) {
  if (!hom.target().is_free_abelian()) {
    throw Error(ErrorCode::UnsupportedCone, "pullback cones need a homomorphism into Z^r");
  }
  auto n = make_node(Kind::pullback, hom.source_ptr());
  n->hom = std::move(hom);
  n->region = region;
  return ConeSet(n);
}

ConeSet ConeSet::coordinates(ModelPtr model, std::vector<int> coords, Region region, bool on_inverse) {
  if (!model) throw Error(ErrorCode::ModelMismatch, "cone without a model");
  const auto width = model->identity().size();
  if (model->kind() == ModelKind::free || model->kind() == ModelKind::finite) {
    throw Error(ErrorCode::UnsupportedCone, "coordinate cones need a model with fixed-width normal forms");
  }
  for (int c : coords) {
    if (c < 0 || static_cast<std::size_t>(c) >= width) {
      throw Error(ErrorCode::UnsupportedCone, "coordinate index " + std::to_string(c) + " out of range");
    }
  }
  auto n = make_node(Kind::coordinates, std::move(model));
  n->coords = std::move(coords);
  n->region = region;
  n->on_inverse = on_inverse;
  return ConeSet(n);
}

ConeSet ConeSet::explicit_set(ModelPtr model, std::vector<Element> elements, ExplicitMode mode) {
  auto n = make_node(Kind::explicit_set, std::move(model));
  for (auto& e : elements) {
    n->model->validate(e);
    if (n->lookup.insert(e).second) n->elements.push_back(std::move(e));
  }
  n->mode = mode;
  return ConeSet(n);
}

ConeSet ConeSet::unite(std::vector<ConeSet> parts) {
  auto n = make_node(Kind::union_of, common_model(parts, "union"));
  n->children = std::move(parts);
  return ConeSet(n);
}

ConeSet ConeSet::intersect(std::vector<ConeSet> parts) {
  auto n = make_node(Kind::intersection, common_model(parts, "intersection"));
  n->children = std::move(parts);
  return ConeSet(n);
}

ConeSet ConeSet::complement(ConeSet arg) {
  auto n = make_node(Kind::complement, arg.model_ptr());
  n->children.push_back(std::move(arg));
  return ConeSet(n);
}

ConeSet ConeSet::conjugate(ConeSet arg, Element by) {
  arg.model().validate(by);
  auto n = make_node(Kind::conjugate, arg.model_ptr());
  n->by_inverse = n->model->inv(by);
  n->by = std::move(by);
  n->children.push_back(std::move(arg));
  return ConeSet(n);
}

ConeSet::Kind ConeSet::kind() const noexcept { return node_->kind; }
const GroupModel& ConeSet::model() const noexcept { return *node_->model; }
const ModelPtr& ConeSet::model_ptr() const noexcept { return node_->model; }

bool ConeSet::contains(const Element& x) const {
  const ConeNode& n = *node_;
  switch (n.kind) {
    case Kind::identity: return n.model->is_identity(x);
    case Kind::bits: return n.bits.test(static_cast<std::size_t>(x[0]));
    case Kind::pullback: {
      const Element image = n.hom->apply(x);
      return in_region(std::span<const Coord>(image.coords.data(), image.size()), n.region);
    }
    case Kind::coordinates: {
      const Element y = n.on_inverse ? n.model->inv(x) : x;
      boost::container::small_vector<Coord, 4> v;
      for (int c : n.coords) v.push_back(y[static_cast<std::size_t>(c)]);
      return in_region(std::span<const Coord>(v.data(), v.size()), n.region);
    }
    case Kind::explicit_set: {
      const bool listed = n.lookup.count(x) != 0;
      return n.mode == ExplicitMode::include ? listed : !listed;
    }
    case Kind::union_of:
      return std::any_of(n.children.begin(), n.children.end(), [&](const ConeSet& c) { return c.contains(x); });
    case Kind::intersection:
      return std::all_of(n.children.begin(), n.children.end(), [&](const ConeSet& c) { return c.contains(x); });
    case Kind::complement: return !n.children.front().contains(x);
    case Kind::conjugate:
      // x in g^-1 S g  <=>  g x g^-1 in S
      return n.children.front().contains(n.model->mul(n.model->mul(n.by, x), n.by_inverse));
  }
  return false;
}

ConeSet ConeSet::inverse() const {
  const ConeNode& n = *node_;
  switch (n.kind) {
    case Kind::identity: return *this;
    case Kind::bits: {
      const FiniteGroup& g = *n.model->finite_group();
      Subset inv(n.bits.size());
      for (auto i = n.bits.find_first(); i != Subset::npos; i = n.bits.find_next(i)) {
        inv.set(static_cast<std::size_t>(g.inv(static_cast<int>(i))));
      }
      return bits(n.model, std::move(inv));
    }
    case Kind::pullback: return pullback(*n.hom, reflect(n.region));
    case Kind::coordinates: return coordinates(n.model, n.coords, n.region, !n.on_inverse);
    case Kind::explicit_set: {
      std::vector<Element> inv;
      inv.reserve(n.elements.size());
      for (const auto& e : n.elements) inv.push_back(n.model->inv(e));
      return explicit_set(n.model, std::move(inv), n.mode);
    }
    case Kind::union_of:
    case Kind::intersection: {
      std::vector<ConeSet> parts;
      for (const auto& c : n.children) parts.push_back(c.inverse());
      return n.kind == Kind::union_of ? unite(std::move(parts)) : intersect(std::move(parts));
    }
    case Kind::complement: return complement(n.children.front().inverse());
    case Kind::conjugate: return conjugate(n.children.front().inverse(), n.by);
  }
  return *this;
}

Verdict Verdict::pass(const Ball& domain, std::string note) {
  Verdict v;
  v.status = Status::verified;
  v.radius_checked = domain.radius();
  v.exact = domain.exact();
  v.note = std::move(note);
  return v;
}

Verdict Verdict::fail(const Ball& domain, std::vector<Element> witness, std::string note) {
  Verdict v;
  v.status = Status::counterexample;
  v.witness = std::move(witness);
  v.radius_checked = domain.radius();
  v.exact = domain.exact();
  v.note = std::move(note);
  return v;
}

bool contains(const GroupModel& model, const ConeSet& cone, const Element& x) {
  require_same_model(model, cone.model(), "contains");
  return cone.contains(x);
}

ConeSet invert_cone(const GroupModel& model, const ConeSet& cone) {
  require_same_model(model, cone.model(), "invert_cone");
  return cone.inverse();
}

ConeSet symmetric_part(const GroupModel& model, const ConeSet& cone) {
  require_same_model(model, cone.model(), "symmetric_part");
  return cone & cone.inverse();
}

std::vector<Element> members(const ConeSet& cone, const Ball& domain) {
  std::vector<Element> out;
  for (const auto& x : domain) {
    if (cone.contains(x)) out.push_back(x);
  }
  return out;
}

PairMembership::PairMembership(const ConeSet& cone, const std::vector<Element>& left,
                               const std::vector<Element>& right, Form form)
    : model_(&cone.model()), left_(&left), right_(&right), form_(form) {
  build(cone);
}

std::size_t PairMembership::build(const ConeSet& cone) {
  const std::size_t id = nodes_.size();
  nodes_.push_back(Node{&cone, {}, nullptr, {}, {}, {}});
  const ConeNode& n = cone.node();
  switch (n.kind) {
    case ConeSet::Kind::pullback: {
      const GroupModel& t = n.hom->target();
      std::vector<Element> l, r, plain;
      l.reserve(left_->size());
      r.reserve(right_->size());
      for (const auto& x : *left_) {
        Element img = n.hom->apply(x);
        if (form_ == Form::conjugate) plain.push_back(img);
        l.push_back(form_ == Form::product ? std::move(img) : t.inv(img));
      }
      for (const auto& y : *right_) r.push_back(n.hom->apply(y));
      nodes_[id].target = &t;
      nodes_[id].left_images = std::move(l);
      nodes_[id].right_images = std::move(r);
      nodes_[id].left_plain = std::move(plain);
      break;
    }
    case ConeSet::Kind::union_of:
    case ConeSet::Kind::intersection:
    case ConeSet::Kind::complement:
      for (const auto& c : n.children) {
        const std::size_t child = build(c);
        nodes_[id].children.push_back(child);
      }
      break;
    default: break;
  }
  return id;
}

Element PairMembership::combine(std::size_t i, std::size_t j) const {
  const Element& x = (*left_)[i];
  const Element& y = (*right_)[j];
  switch (form_) {
    case Form::quotient: return model_->mul(model_->inv(x), y);
    case Form::product: return model_->mul(x, y);
    case Form::conjugate: return model_->mul(model_->mul(model_->inv(x), y), x);
  }
  return {};
}

bool PairMembership::contains(std::size_t i, std::size_t j) const {
  std::optional<Element> z;
  return eval(0, i, j, z);
}

bool PairMembership::eval(std::size_t id, std::size_t i, std::size_t j, std::optional<Element>& z) const {
  const Node& node = nodes_[id];
  switch (node.cone->kind()) {
    case ConeSet::Kind::pullback: {
      // hom(x^-1 y) = hom(x)^-1 hom(y) and so on
      Element image = node.target->mul(node.left_images[i], node.right_images[j]);
      if (form_ == Form::conjugate) image = node.target->mul(image, node.left_plain[i]);
      return in_region(std::span<const Coord>(image.coords.data(), image.size()), node.cone->node().region);
    }
    case ConeSet::Kind::union_of:
      for (std::size_t c : node.children)
        if (eval(c, i, j, z)) return true;
      return false;
    case ConeSet::Kind::intersection:
      for (std::size_t c : node.children)
        if (!eval(c, i, j, z)) return false;
      return true;
    case ConeSet::Kind::complement: return !eval(node.children.front(), i, j, z);
    default:
      if (!z) z = combine(i, j);
      return node.cone->contains(*z);
  }
}

Verdict is_subsemigroup(const ConeSet& cone, const Ball& domain) {
  const auto in = members(cone, domain);
  const PairMembership product(cone, in, in, PairMembership::Form::product);
  for (std::size_t i = 0; i < in.size(); ++i) {
    for (std::size_t j = 0; j < in.size(); ++j) {
      if (!product.contains(i, j)) return Verdict::fail(domain, {in[i], in[j]}, "product leaves the set");
    }
  }
  return Verdict::pass(domain);
}

Verdict is_subsemigroup(const GroupModel& model, const ConeSet& cone, int radius) {
  require_same_model(model, cone.model(), "is_subsemigroup");
  return is_subsemigroup(cone, verification_domain(model, radius));
}

Verdict is_subset_on(const ConeSet& s, const ConeSet& t, const Ball& domain) {
  for (const auto& x : domain) {
    if (s.contains(x) && !t.contains(x)) return Verdict::fail(domain, {x}, "element of the first set missing from the second");
  }
  return Verdict::pass(domain);
}

Verdict extensionally_equal(const ConeSet& s, const ConeSet& t, const Ball& domain) {
  for (const auto& x : domain) {
    if (s.contains(x) != t.contains(x)) return Verdict::fail(domain, {x}, "sets disagree");
  }
  return Verdict::pass(domain);
}

Verdict is_trivial_on(const ConeSet& s, const Ball& domain) {
  const GroupModel& m = s.model();
  for (const auto& x : domain) {
    if (!m.is_identity(x) && s.contains(x)) return Verdict::fail(domain, {x}, "non-identity element");
  }
  return Verdict::pass(domain);
}

Verdict misses_some(const ConeSet& s, const Ball& domain) {
  for (const auto& x : domain) {
    if (!s.contains(x)) return Verdict::pass(domain);
  }
  // on a finite group this is exact; on a ball it only fails to show properness
  Verdict v = Verdict::fail(domain, {}, "contains every element checked");
  if (!domain.exact()) v.status = Status::inconclusive;
  return v;
}

bool CoverCheck::is_cover() const {
  return closed_a.ok() && closed_b.ok() && covers.ok() && proper_a.ok() && proper_b.ok();
}

bool CoverCheck::ok() const { return is_cover() && (!trivial_intersection || trivial_intersection->ok()); }

CoverCheck is_cover_pair(const GroupModel& model, const ConeSet& a, const ConeSet& b, int radius,
                         bool check_intersection) {
  require_same_model(model, a.model(), "is_cover_pair");
  require_same_model(model, b.model(), "is_cover_pair");
  const Ball domain = verification_domain(model, radius);
  CoverCheck c;
  c.closed_a = is_subsemigroup(a, domain);
  c.closed_b = is_subsemigroup(b, domain);
  c.covers = Verdict::pass(domain);
  for (const auto& x : domain) {
    if (!a.contains(x) && !b.contains(x)) {
      c.covers = Verdict::fail(domain, {x}, "element in neither set");
      break;
    }
  }
  c.proper_a = misses_some(a, domain);
  c.proper_b = misses_some(b, domain);
  if (check_intersection) c.trivial_intersection = is_trivial_on(a & b, domain);
  return c;
}

}  // namespace semicover
