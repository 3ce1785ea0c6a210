#include "semicover/homomorphism.hpp"

#include "semicover/errors.hpp"

namespace semicover {

namespace {

Element eval_generic(const GroupModel& source, const GroupModel& target, const std::vector<Element>& images,
                     const Element& x) {
  auto img = [&](std::size_t i) -> const Element& { return images[i]; };
  switch (source.kind()) {
    case ModelKind::finite:
      break;  // handled by the table
    case ModelKind::zr_cross_finite: {
      Element r = target.identity();
      for (std::size_t i = 0; i < x.size(); ++i) r = target.mul(r, target.pow(img(i), x[i]));
      return r;
    }
    case ModelKind::free: {
      Element r = target.identity();
      for (Coord l : x.coords) {
        const auto g = static_cast<std::size_t>((l > 0 ? l : -l) - 1);
        r = target.mul(r, l > 0 ? img(g) : target.inv(img(g)));
      }
      return r;
    }
    case ModelKind::heisenberg: {
      // (x,y,z) = X^x Y^y [X,Y]^(z - xy)
      const Element& X = img(0);
      const Element& Y = img(1);
      const Element c = target.mul(target.mul(X, Y), target.mul(target.inv(X), target.inv(Y)));
      Element r = target.mul(target.pow(X, x[0]), target.pow(Y, x[1]));
      return target.mul(r, target.pow(c, x[2] - x[0] * x[1]));
    }
    case ModelKind::klein_bottle:
      return target.mul(target.pow(img(1), x[0]), target.pow(img(0), x[1]));
  }
  return target.identity();
}

}  // namespace

Homomorphism::Homomorphism(ModelPtr source, ModelPtr target, std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (!source_ || !target_) throw Error(ErrorCode::InvalidHomomorphism, "null model");
  if (images_.size() != source_->generator_count()) {
    throw Error(ErrorCode::InvalidHomomorphism, "expected " + std::to_string(source_->generator_count()) +
                                                    " generator images, got " + std::to_string(images_.size()));
  }
  for (const auto& e : images_) {
    if (!target_->is_valid(e)) {
      throw Error(ErrorCode::InvalidHomomorphism, "image is not an element of " + target_->name(), {e});
    }
  }
  if (const FiniteGroup* g = source_->finite_group()) {
    // BFS over the Cayley graph assigns each element an image; then check the table
    const Ball all = verification_domain(*source_, 0);
    table_.assign(all.size(), target_->identity());
    std::vector<bool> seen(all.size(), false);
    seen[0] = true;
    std::vector<int> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int x = queue[head];
      for (std::size_t i = 0; i < images_.size(); ++i) {
        const int y = g->mul(x, static_cast<int>(source_->generators()[i][0]));
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          table_[static_cast<std::size_t>(y)] = target_->mul(table_[static_cast<std::size_t>(x)], images_[i]);
          queue.push_back(y);
        }
      }
    }
    for (int x = 0; x < g->order(); ++x) {
      for (int y = 0; y < g->order(); ++y) {
        const auto& lhs = table_[static_cast<std::size_t>(g->mul(x, y))];
        if (!(lhs == target_->mul(table_[static_cast<std::size_t>(x)], table_[static_cast<std::size_t>(y)]))) {
          throw Error(ErrorCode::InvalidHomomorphism, "assignment does not respect the Cayley table",
                      {Element{x}, Element{y}});
        }
      }
    }
    return;
  }
  for (const auto& rel : source_->relators()) {
    Element r = target_->identity();
    for (const auto& s : rel) r = target_->mul(r, target_->pow(images_[static_cast<std::size_t>(s.generator)], s.exponent));
    if (!target_->is_identity(r)) {
      throw Error(ErrorCode::InvalidHomomorphism, "a defining relator of " + source_->name() + " does not map to the identity",
                  {r});
    }
  }
}

Homomorphism Homomorphism::to_zr(ModelPtr source, const std::vector<std::vector<Coord>>& images) {
  std::size_t r = images.empty() ? 0 : images.front().size();
  std::vector<Element> elems;
  for (const auto& v : images) {
    if (v.size() != r) throw Error(ErrorCode::InvalidHomomorphism, "images must all have the same length");
    Element e;
    e.coords.assign(v.begin(), v.end());
    elems.push_back(std::move(e));
  }
  return Homomorphism(std::move(source), GroupModel::zr(static_cast<int>(r)), std::move(elems));
}

Element Homomorphism::apply(const Element& x) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(x[0])];
  return eval_generic(*source_, *target_, images_, x);
}

Element Homomorphism::apply(const Word& w) const {
  Element r = target_->identity();
  for (const auto& s : w) {
    if (s.generator < 0 || static_cast<std::size_t>(s.generator) >= images_.size()) {
      throw Error(ErrorCode::InvalidElement, "generator index out of range in word");
    }
    r = target_->mul(r, target_->pow(images_[static_cast<std::size_t>(s.generator)], s.exponent));
  }
  return r;
}

Homomorphism Homomorphism::then(const Homomorphism& after) const {
  require_same_model(*target_, after.source(), "composition");
  std::vector<Element> composed;
  composed.reserve(images_.size());
  for (const auto& e : images_) composed.push_back(after.apply(e));
  return Homomorphism(source_, after.target_ptr(), std::move(composed));
}

bool operator==(const Homomorphism& lhs, const Homomorphism& rhs) {
  return *lhs.source_ == *rhs.source_ && *lhs.target_ == *rhs.target_ && lhs.images_ == rhs.images_;
}

Element hom_apply(const Homomorphism& hom, const Element& x) {
  hom.source().validate(x);
  return hom.apply(x);
}

Element hom_apply(const Homomorphism& hom, const Word& w) { return hom.apply(w); }

}  // namespace semicover
