#pragma once

#include "semicover/element.hpp"
#include "semicover/finite_group.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace semicover {

enum class ModelKind { finite, zr_cross_finite, free, heisenberg, klein_bottle };

class GroupModel;
using ModelPtr = std::shared_ptr<const GroupModel>;

inline constexpr std::size_t kDefaultBallCap = 1'000'000;

/// A group with exact normal forms. Immutable once built.
///
/// Generators are lettered a, b, c, ... in order; words use uppercase letters
/// for inverses. The generator lists are
///   finite           the table's greedy generating set
///   zr_cross_finite  unit vectors of Z^r, then one generator per torsion factor
///   free             the k free letters
///   heisenberg       x = (1,0,0), y = (0,1,0)
///   klein_bottle     a = (0,1), b = (1,0), with b a b^-1 = a^-1
class GroupModel {
 public:
  static ModelPtr finite(FiniteGroup group, std::string name);
  static ModelPtr zr(int rank, std::vector<int> torsion = {});
  static ModelPtr free_group(int rank);
  static ModelPtr heisenberg();
  static ModelPtr klein_bottle();

  ModelKind kind() const noexcept { return kind_; }
  /// CLI selector string that rebuilds this model.
  const std::string& name() const noexcept { return name_; }

  const std::vector<Element>& generators() const noexcept { return generators_; }
  std::size_t generator_count() const noexcept { return generators_.size(); }

  Element identity() const;
  Element mul(const Element& x, const Element& y) const;
  Element inv(const Element& x) const;
  Element pow(const Element& x, Coord n) const;
  /// g^-1 x g
  Element conjugate(const Element& x, const Element& g) const;

  bool is_valid(const Element& x) const;
  /// Throws InvalidElement.
  void validate(const Element& x) const;
  bool is_identity(const Element& x) const { return x == identity(); }

  bool is_abelian() const;
  bool is_finite() const noexcept { return kind_ == ModelKind::finite; }
  /// Finite order: group order; infinite models: nullopt.
  std::optional<std::size_t> order() const;

  const FiniteGroup* finite_group() const noexcept { return finite_ ? &*finite_ : nullptr; }
  int rank() const noexcept { return rank_; }
  const std::vector<int>& torsion() const noexcept { return torsion_; }
  /// True for Z^r with no torsion factors: the targets of pullback cones.
  bool is_free_abelian() const noexcept { return kind_ == ModelKind::zr_cross_finite && torsion_.empty(); }

  /// Defining relators over the generator list; a map sending every one of
  /// them to the identity extends to a homomorphism. Finite models return none
  /// (their homomorphisms are checked against the full table instead).
  std::vector<Word> relators() const;

  Element evaluate(const Word& w) const;
  /// Accepts tuples "(3,1)", words "b^2a^-1" / "abAB", "1" for the identity,
  /// and plain indices for finite models. Throws InvalidElement.
  Element parse_element(std::string_view text) const;
  std::string format(const Element& x) const;

  friend bool operator==(const GroupModel& lhs, const GroupModel& rhs);

 private:
  GroupModel() = default;

  ModelKind kind_ = ModelKind::free;
  std::string name_;
  int rank_ = 0;
  std::vector<int> torsion_;
  std::optional<FiniteGroup> finite_;
  std::vector<Element> generators_;
};

bool same_model(const GroupModel& lhs, const GroupModel& rhs);
/// Throws ModelMismatch when the two models differ.
void require_same_model(const GroupModel& lhs, const GroupModel& rhs, std::string_view context);

/// Parses a model selector: finite:<path>, fixture:<name>, z^r[xC<n>...],
/// free:<k>, heisenberg, klein_bottle. Throws ParseError.
ModelPtr parse_model_selector(std::string_view selector);

/// Parses a word over the letters a.. (uppercase = inverse), with optional
/// integer exponents: "b^2a^-1", "abAB". "1" and "" are the empty word.
Word parse_word(std::string_view text, std::size_t generator_count);

/// Elements of the Cayley ball of the given radius, in BFS order with
/// generator-index tiebreak: each layer is expanded by right multiplication by
/// g1, g1^-1, g2, g2^-1, ...
class Ball {
 public:
  Ball(const GroupModel& model, int radius, std::size_t cap = kDefaultBallCap);

  int radius() const noexcept { return radius_; }
  /// True when the ball is the whole (finite) group, so ball checks are exact.
  bool exact() const noexcept { return exact_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(const Element& x) const { return index_.count(x) != 0; }
  std::optional<std::size_t> index_of(const Element& x) const;
  /// BFS distance from the identity.
  int length(std::size_t index) const { return lengths_[index]; }

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

 private:
  int radius_ = 0;
  bool exact_ = false;
  std::vector<Element> elements_;
  std::vector<int> lengths_;
  std::unordered_map<Element, std::size_t, ElementHash> index_;
};

/// Throws BallTooLarge when more than `cap` elements would be produced.
Ball ball(const GroupModel& model, int radius, std::size_t cap = kDefaultBallCap);

/// Region checked by verifiers: the whole group for finite models (exact),
/// otherwise the ball of the given radius.
Ball verification_domain(const GroupModel& model, int radius, std::size_t cap = kDefaultBallCap);

}  // namespace semicover
