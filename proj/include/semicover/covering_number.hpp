#pragma once

#include "semicover/finite_group.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace semicover {

inline constexpr int kSubgroupCap = 24;
inline constexpr int kExhaustiveCap = 8;

/// Every subgroup, sorted by size and then by member indices. Throws GroupTooLarge.
std::vector<Subset> all_subgroups(const FiniteGroup& group, int cap = kSubgroupCap);
/// Proper subgroups contained in no other proper subgroup, in the same order.
std::vector<Subset> maximal_subgroups(const FiniteGroup& group, int cap = kSubgroupCap);

enum class CoverMethod { maximal_set_cover, exhaustive_semigroup };
std::string_view to_string(CoverMethod m);

struct CoveringNumberResult {
  std::string group_id;
  /// nullopt: no cover by proper subgroups exists (cyclic groups).
  std::optional<int> sigma_g;
  std::optional<int> sigma_s;
  /// Lexicographically first minimum cover by maximal subgroups.
  std::vector<Subset> witness_cover;
  CoverMethod method = CoverMethod::maximal_set_cover;
  /// Set when sigma_s was recomputed from the semigroup census.
  std::optional<bool> methods_agree;
};

/// Exact minimum cover by maximal subgroups (iterative deepening).
CoveringNumberResult sigma_g(const FiniteGroup& group, std::string group_id = {}, int cap = kSubgroupCap);

struct SemigroupCensus {
  /// Multiplicatively closed subsets, empty set included, by size then indices.
  std::vector<Subset> closed;
  bool exhaustive = true;
  std::size_t subsets_examined = 0;
  /// Nonempty closed subsets that are not subgroups.
  std::vector<Subset> exceptions;

  bool all_subgroups() const { return exceptions.empty(); }
};

/// Exhaustive over all 2^n subsets up to `cap`; above it, closures of
/// `samples` random seeds drawn from `seed`.
SemigroupCensus subsemigroup_census(const FiniteGroup& group, int cap = kExhaustiveCap, std::uint64_t seed = 1,
                                    std::size_t samples = 4096);

/// sigma_g, and with `exhaustive` also the minimum cover by proper closed
/// subsets from the census. Throws GroupTooLarge when exhaustive and order > cap.
CoveringNumberResult sigma_s_finite(const FiniteGroup& group, std::string group_id = {}, bool exhaustive = false,
                                    int cap = kExhaustiveCap);

struct ScorzaResult {
  bool sigma_is_three = false;
  bool klein_four_quotient = false;
  bool agree() const { return sigma_is_three == klein_four_quotient; }
};

/// Both sides computed independently: the set cover for sigma_g, and the
/// normal subgroups of index 4 whose quotient has exponent 2.
ScorzaResult scorza_check(const FiniteGroup& group, int cap = kSubgroupCap);

struct TwoCoverReport {
  std::size_t closed_subsets = 0;
  /// Pairs of proper closed subsets whose union is the group.
  std::vector<std::pair<Subset, Subset>> covers;
};

TwoCoverReport two_cover_search(const FiniteGroup& group, int cap = kExhaustiveCap);

std::vector<int> subset_indices(const Subset& s);

}  // namespace semicover
