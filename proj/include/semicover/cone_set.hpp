#pragma once

#include "semicover/group_model.hpp"
#include "semicover/homomorphism.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace semicover {

/// Sign regions of Z^r under the lexicographic order, most significant
/// coordinate first.
enum class Region { lex_pos, lex_nonneg, lex_zero, lex_nonpos, lex_neg };

/// Region containing -v exactly when the original contains v.
Region reflect(Region r);
bool in_region(std::span<const Coord> v, Region r);
std::string_view to_string(Region r);
/// Throws ParseError.
Region parse_region(std::string_view name);

enum class ExplicitMode { include, exclude };

struct ConeNode;

/// A decidable subset of a group, kept as an immutable expression tree.
///
/// Node kinds:
///   identity      {1}
///   bits          a bitset over a finite model
///   pullback      {x : hom(x) in region}, hom into Z^r
///   coordinates   {x : selected normal-form coordinates of x (or of x^-1) in region}
///   explicit_set  a finite list, either the set itself or its complement
///   union_of / intersection / complement
///   conjugate     g^-1 S g
class ConeSet {
 public:
  enum class Kind { identity, bits, pullback, coordinates, explicit_set, union_of, intersection, complement, conjugate };

  static ConeSet identity(ModelPtr model);
  static ConeSet bits(ModelPtr model, Subset members);
  static ConeSet pullback(Homomorphism hom, Region region);
  static ConeSet coordinates(ModelPtr model, std::vector<int> coords, Region region, bool on_inverse = false);
  static ConeSet explicit_set(ModelPtr model, std::vector<Element> elements, ExplicitMode mode = ExplicitMode::include);
  static ConeSet unite(std::vector<ConeSet> parts);
  static ConeSet intersect(std::vector<ConeSet> parts);
  static ConeSet complement(ConeSet arg);
  /// g^-1 S g
  static ConeSet conjugate(ConeSet arg, Element by);

  bool contains(const Element& x) const;
  /// {x^-1 : x in S}, built by rewriting the tree.
  ConeSet inverse() const;

  Kind kind() const noexcept;
  const GroupModel& model() const noexcept;
  const ModelPtr& model_ptr() const noexcept;
  const ConeNode& node() const noexcept { return *node_; }

 private:
  explicit ConeSet(std::shared_ptr<const ConeNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const ConeNode> node_;
};

struct ConeNode {
  ConeSet::Kind kind = ConeSet::Kind::identity;
  ModelPtr model;
  std::vector<ConeSet> children;
  std::optional<Homomorphism> hom;
  Region region = Region::lex_nonneg;
  std::vector<int> coords;
  bool on_inverse = false;
  std::vector<Element> elements;
  std::unordered_set<Element, ElementHash> lookup;
  ExplicitMode mode = ExplicitMode::include;
  Subset bits;
  Element by;
  Element by_inverse;
};

/// Membership of x_i^-1 y_j (quotient), x_i y_j (product) or x_i^-1 y_j x_i
/// (conjugate) for two fixed
/// element lists. Pullback leaves combine images computed once per element;
/// every other leaf falls back to the group product. The cone and both lists
/// must outlive this object.
class PairMembership {
 public:
  enum class Form { quotient, product, conjugate };

  PairMembership(const ConeSet& cone, const std::vector<Element>& left, const std::vector<Element>& right, Form form);

  bool contains(std::size_t i, std::size_t j) const;
  Element combine(std::size_t i, std::size_t j) const;

 private:
  struct Node {
    const ConeSet* cone = nullptr;
    std::vector<std::size_t> children;
    // pullback leaves only
    const GroupModel* target = nullptr;
    std::vector<Element> left_images;
    std::vector<Element> right_images;
    std::vector<Element> left_plain;
  };

  std::size_t build(const ConeSet& cone);
  bool eval(std::size_t node, std::size_t i, std::size_t j, std::optional<Element>& z) const;

  const GroupModel* model_;
  const std::vector<Element>* left_;
  const std::vector<Element>* right_;
  Form form_;
  std::vector<Node> nodes_;
};

inline ConeSet operator|(ConeSet a, ConeSet b) { return ConeSet::unite({std::move(a), std::move(b)}); }
inline ConeSet operator&(ConeSet a, ConeSet b) { return ConeSet::intersect({std::move(a), std::move(b)}); }
inline ConeSet operator~(ConeSet a) { return ConeSet::complement(std::move(a)); }
/// S - T
inline ConeSet operator-(ConeSet s, ConeSet t) { return std::move(s) & ~std::move(t); }

enum class Status { verified, counterexample, inconclusive };
std::string_view to_string(Status s);

/// Outcome of a universally quantified check. Ball-local checks report the
/// radius they covered; exact checks (finite groups) set `exact`.
struct Verdict {
  Status status = Status::verified;
  std::vector<Element> witness;
  int radius_checked = 0;
  bool exact = false;
  std::string note;

  bool ok() const noexcept { return status == Status::verified; }

  static Verdict pass(const Ball& domain, std::string note = {});
  static Verdict fail(const Ball& domain, std::vector<Element> witness, std::string note = {});
};

/// Throws ModelMismatch when the cone belongs to another model.
bool contains(const GroupModel& model, const ConeSet& cone, const Element& x);
ConeSet invert_cone(const GroupModel& model, const ConeSet& cone);
/// cone ∩ cone^-1; the maximal subgroup when the cone is semigroup-closed.
ConeSet symmetric_part(const GroupModel& model, const ConeSet& cone);

/// x, y in cone ∩ domain  =>  xy in cone. Exact on finite models; first
/// counterexample in BFS order of (x, y).
Verdict is_subsemigroup(const GroupModel& model, const ConeSet& cone, int radius);
Verdict is_subsemigroup(const ConeSet& cone, const Ball& domain);

/// Members of the cone inside the domain, in BFS order.
std::vector<Element> members(const ConeSet& cone, const Ball& domain);
/// S ∩ domain ⊆ T; witness = first element of S outside T.
Verdict is_subset_on(const ConeSet& s, const ConeSet& t, const Ball& domain);
/// S and T agree on the domain; witness = first disagreement.
Verdict extensionally_equal(const ConeSet& s, const ConeSet& t, const Ball& domain);
/// S ∩ domain is exactly {1}.
Verdict is_trivial_on(const ConeSet& s, const Ball& domain);
/// Some domain element lies outside S.
Verdict misses_some(const ConeSet& s, const Ball& domain);

struct CoverCheck {
  Verdict closed_a;
  Verdict closed_b;
  Verdict covers;
  Verdict proper_a;
  Verdict proper_b;
  std::optional<Verdict> trivial_intersection;

  /// (i)-(iii) and, when it was requested, (iv).
  bool ok() const;
  bool is_cover() const;
};

/// (i) A, B closed; (ii) A ∪ B covers the domain; (iii) both proper on the
/// domain; (iv) optionally A ∩ B ∩ domain = {1}.
CoverCheck is_cover_pair(const GroupModel& model, const ConeSet& a, const ConeSet& b, int radius,
                         bool check_intersection = true);

}  // namespace semicover
