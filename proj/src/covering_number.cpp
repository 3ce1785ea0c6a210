#include "semicover/covering_number.hpp"

#include "semicover/errors.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace semicover {

namespace {

void require_order(const FiniteGroup& group, int cap) {
  if (group.order() > cap) {
    throw Error(ErrorCode::GroupTooLarge,
                "group order " + std::to_string(group.order()) + " exceeds cap " + std::to_string(cap));
  }
}

bool subset_less(const Subset& a, const Subset& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return subset_indices(a) < subset_indices(b);
}

// Smallest k and the lexicographically first k-subset of `sets` covering `target`.
std::optional<std::vector<std::size_t>> min_cover(const std::vector<Subset>& sets, const Subset& target) {
  const std::size_t n = sets.size();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> pick;
    std::vector<Subset> acc{Subset(target.size())};
    // depth-first over increasing index tuples
    auto rec = [&](auto&& self, std::size_t from) -> bool {
      if (pick.size() == k) return target.is_subset_of(acc.back());
      for (std::size_t i = from; i + (k - pick.size()) <= n; ++i) {
        pick.push_back(i);
        acc.push_back(acc.back() | sets[i]);
        if (self(self, i + 1)) return true;
        acc.pop_back();
        pick.pop_back();
      }
      return false;
    };
    if (rec(rec, 0)) return pick;
  }
  return std::nullopt;
}

bool is_cyclic(const FiniteGroup& group) {
  for (int x = 0; x < group.order(); ++x) {
    if (element_order(group, x).order == group.order()) return true;
  }
  return false;
}

}  // namespace

std::vector<int> subset_indices(const Subset& s) {
  std::vector<int> out;
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) out.push_back(static_cast<int>(i));
  return out;
}

std::string_view to_string(CoverMethod m) {
  return m == CoverMethod::maximal_set_cover ? "maximal_set_cover" : "exhaustive_semigroup";
}

std::vector<Subset> all_subgroups(const FiniteGroup& group, int cap) {
  require_order(group, cap);
  std::set<Subset> seen;
  std::vector<Subset> frontier;
  Subset trivial = group.empty();
  trivial.set(0);
  seen.insert(trivial);
  frontier.push_back(trivial);
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (const auto& s : frontier) {
      for (int x = 0; x < group.order(); ++x) {
        if (s.test(static_cast<std::size_t>(x))) continue;
        Subset seed = s;
        seed.set(static_cast<std::size_t>(x));
        Subset h = group.generated_subgroup(seed);
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subset> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), subset_less);
  return out;
}

std::vector<Subset> maximal_subgroups(const FiniteGroup& group, int cap) {
  const auto subs = all_subgroups(group, cap);
  const auto n = static_cast<std::size_t>(group.order());
  std::vector<Subset> out;
  for (const auto& s : subs) {
    if (s.count() == n) continue;
    bool maximal = true;
    for (const auto& t : subs) {
      if (t.count() != n && t != s && s.is_subset_of(t)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

CoveringNumberResult sigma_g(const FiniteGroup& group, std::string group_id, int cap) {
  require_order(group, cap);
  CoveringNumberResult r;
  r.group_id = std::move(group_id);
  if (is_cyclic(group)) return r;
  const auto maxes = maximal_subgroups(group, cap);
  const auto pick = min_cover(maxes, group.full());
  if (!pick) return r;
  r.sigma_g = static_cast<int>(pick->size());
  for (auto i : *pick) r.witness_cover.push_back(maxes[i]);
  return r;
}

SemigroupCensus subsemigroup_census(const FiniteGroup& group, int cap, std::uint64_t seed, std::size_t samples) {
  SemigroupCensus c;
  const auto n = static_cast<std::size_t>(group.order());
  std::set<Subset> found;
  if (group.order() <= cap) {
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      Subset s(n, mask);
      ++c.subsets_examined;
      if (group.is_closed(s)) found.insert(s);
    }
  } else {
    c.exhaustive = false;
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.25);
    found.insert(group.empty());
    for (std::size_t k = 0; k < samples; ++k) {
      Subset s(n);
      for (std::size_t i = 0; i < n; ++i) s[i] = coin(rng);
      ++c.subsets_examined;
      found.insert(group.closure(s));
    }
  }
  c.closed.assign(found.begin(), found.end());
  std::sort(c.closed.begin(), c.closed.end(), subset_less);
  for (const auto& s : c.closed) {
    if (s.any() && !group.is_subgroup(s)) c.exceptions.push_back(s);
  }
  return c;
}

CoveringNumberResult sigma_s_finite(const FiniteGroup& group, std::string group_id, bool exhaustive, int cap) {
  CoveringNumberResult r = sigma_g(group, std::move(group_id), std::max(cap, kSubgroupCap));
  r.sigma_s = r.sigma_g;
  if (!exhaustive) return r;
  require_order(group, cap);
  const auto census = subsemigroup_census(group, cap);
  const auto n = static_cast<std::size_t>(group.order());
  std::vector<Subset> proper;
  for (const auto& s : census.closed) {
    if (s.any() && s.count() != n) proper.push_back(s);
  }
  // only maximal closed subsets matter for a minimum cover
  std::vector<Subset> maximal;
  for (const auto& s : proper) {
    bool is_max = std::none_of(proper.begin(), proper.end(),
                               [&](const Subset& t) { return t != s && s.is_subset_of(t); });
    if (is_max) maximal.push_back(s);
  }
  const auto pick = min_cover(maximal, group.full());
  std::optional<int> census_value;
  if (pick) census_value = static_cast<int>(pick->size());
  r.sigma_s = census_value;
  r.method = CoverMethod::exhaustive_semigroup;
  r.methods_agree = census_value == r.sigma_g;
  return r;
}

ScorzaResult scorza_check(const FiniteGroup& group, int cap) {
  ScorzaResult r;
  const auto sg = sigma_g(group, {}, cap);
  r.sigma_is_three = sg.sigma_g == 3;
  for (const auto& n : all_subgroups(group, cap)) {
    if (n.count() * 4 != static_cast<std::size_t>(group.order()) || !is_normal(group, n)) continue;
    bool exponent_two = true;
    for (int g = 0; g < group.order() && exponent_two; ++g) {
      exponent_two = n.test(static_cast<std::size_t>(group.mul(g, g)));
    }
    if (exponent_two) {
      r.klein_four_quotient = true;
      break;
    }
  }
  return r;
}

TwoCoverReport two_cover_search(const FiniteGroup& group, int cap) {
  require_order(group, cap);
  const auto census = subsemigroup_census(group, cap);
  const auto n = static_cast<std::size_t>(group.order());
  std::vector<Subset> proper;
  for (const auto& s : census.closed) {
    if (s.count() != n) proper.push_back(s);
  }
  TwoCoverReport r;
  r.closed_subsets = census.closed.size();
  const Subset all = group.full();
  for (std::size_t i = 0; i < proper.size(); ++i) {
    for (std::size_t j = i; j < proper.size(); ++j) {
      if ((proper[i] | proper[j]) == all) r.covers.emplace_back(proper[i], proper[j]);
    }
  }
  return r;
}

}  // namespace semicover
