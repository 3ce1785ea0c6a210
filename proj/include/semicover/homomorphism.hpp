#pragma once

#include "semicover/group_model.hpp"

#include <vector>

namespace semicover {

/// A homomorphism between two models, fixed by one image per source generator.
/// Construction checks that the assignment extends to a homomorphism: every
/// defining relator of the source must map to the target identity, and for a
/// finite source the induced map is checked on the whole Cayley table.
class Homomorphism {
 public:
  /// Throws InvalidHomomorphism.
  Homomorphism(ModelPtr source, ModelPtr target, std::vector<Element> images);

  /// Homomorphism into Z^r, images given as integer vectors.
  static Homomorphism to_zr(ModelPtr source, const std::vector<std::vector<Coord>>& images);

  const GroupModel& source() const noexcept { return *source_; }
  const GroupModel& target() const noexcept { return *target_; }
  const ModelPtr& source_ptr() const noexcept { return source_; }
  const ModelPtr& target_ptr() const noexcept { return target_; }
  const std::vector<Element>& images() const noexcept { return images_; }

  Element apply(const Element& x) const;
  Element apply(const Word& w) const;

  /// after ∘ this
  Homomorphism then(const Homomorphism& after) const;

  friend bool operator==(const Homomorphism& lhs, const Homomorphism& rhs);

 private:
  ModelPtr source_;
  ModelPtr target_;
  std::vector<Element> images_;
  std::vector<Element> table_;  // full image list for finite sources
};

/// Throws InvalidElement when x is not valid in the source.
Element hom_apply(const Homomorphism& hom, const Element& x);
Element hom_apply(const Homomorphism& hom, const Word& w);

}  // namespace semicover
