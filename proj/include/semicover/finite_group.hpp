#pragma once

#include <boost/dynamic_bitset.hpp>

#include <filesystem>
#include <string_view>
#include <vector>

namespace semicover {

/// Subset of a finite group, one bit per element index.
using Subset = boost::dynamic_bitset<>;

/// A finite group given by its Cayley table. Index 0 is the identity.
class FiniteGroup {
 public:
  /// Validates the table: square, entries in range, identity rows, associativity
  /// over all triples, right inverses.
  /// Throws MalformedTable or NotAGroup (with the witness triple for associativity).
  explicit FiniteGroup(std::vector<std::vector<int>> table);

  int order() const noexcept { return order_; }
  int mul(int x, int y) const { return table_[static_cast<std::size_t>(x * order_ + y)]; }
  int inv(int x) const { return inverse_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& inverse_table() const noexcept { return inverse_; }
  std::vector<int> row(int x) const;

  /// Greedy generating set: scan indices upward, keep every element outside
  /// the subgroup generated so far.
  const std::vector<int>& generators() const noexcept { return generators_; }

  bool is_abelian() const;

  /// Smallest subgroup containing `seed`.
  Subset generated_subgroup(const Subset& seed) const;
  /// Smallest multiplicatively closed superset of `seed` (no identity added).
  Subset closure(const Subset& seed) const;
  bool is_closed(const Subset& s) const;
  bool is_subgroup(const Subset& s) const;
  Subset full() const { return Subset(static_cast<std::size_t>(order_)).set(); }
  Subset empty() const { return Subset(static_cast<std::size_t>(order_)); }

  friend bool operator==(const FiniteGroup& lhs, const FiniteGroup& rhs) {
    return lhs.table_ == rhs.table_;
  }

 private:
  int order_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> generators_;
};

FiniteGroup load_finite_group(std::string_view text);
FiniteGroup load_finite_group_file(const std::filesystem::path& path);

struct ElementOrder {
  int order = 1;
  /// x^(order-1), which equals x^-1.
  int inverse_witness = 0;
};

ElementOrder element_order(const FiniteGroup& group, int x);

/// gHg^-1 = H for all g. Throws NotASubgroup when `subgroup` is not one.
bool is_normal(const FiniteGroup& group, const Subset& subgroup);

struct Quotient {
  FiniteGroup group;
  /// projection[x] = index of the coset of x; cosets are numbered by their
  /// smallest element, so the subgroup itself is coset 0.
  std::vector<int> projection;
};

/// Throws NotASubgroup or NotNormal.
Quotient quotient(const FiniteGroup& group, const Subset& normal_subgroup);

}  // namespace semicover
