#include "semicover/finite_group.hpp"

#include "semicover/errors.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <string>

namespace semicover {

namespace {

Element idx(int i) { return Element{i}; }

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n < 1) throw Error(ErrorCode::MalformedTable, "table must have at least one row");
  order_ = n;
  table_.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto& r = table[static_cast<std::size_t>(i)];
    if (static_cast<int>(r.size()) != n) {
      throw Error(ErrorCode::MalformedTable, "row " + std::to_string(i) + " has " +
                                                 std::to_string(r.size()) + " entries, expected " +
                                                 std::to_string(n));
    }
    for (int v : r) {
      if (v < 0 || v >= n) {
        throw Error(ErrorCode::MalformedTable,
                    "entry " + std::to_string(v) + " in row " + std::to_string(i) + " is out of range");
      }
      table_.push_back(v);
    }
  }
  for (int j = 0; j < n; ++j) {
    if (mul(0, j) != j || mul(j, 0) != j) {
      throw Error(ErrorCode::NotAGroup, "index 0 is not an identity (column/row " + std::to_string(j) + ")",
                  {idx(0), idx(j)});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int ij = mul(i, j);
      for (int k = 0; k < n; ++k) {
        if (mul(ij, k) != mul(i, mul(j, k))) {
          throw Error(ErrorCode::NotAGroup,
                      "associativity fails for (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                          std::to_string(k) + ")",
                      {idx(i), idx(j), idx(k)});
        }
      }
    }
  }
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (mul(i, j) == 0) {
        inverse_[static_cast<std::size_t>(i)] = j;
        break;
      }
    }
    if (inverse_[static_cast<std::size_t>(i)] < 0) {
      throw Error(ErrorCode::NotAGroup, "element " + std::to_string(i) + " has no inverse", {idx(i)});
    }
  }

  Subset span = empty();
  span.set(0);
  for (int x = 1; x < n; ++x) {
    if (span.test(static_cast<std::size_t>(x))) continue;
    generators_.push_back(x);
    span.set(static_cast<std::size_t>(x));
    span = generated_subgroup(span);
  }
}

std::vector<int> FiniteGroup::row(int x) const {
  auto begin = table_.begin() + static_cast<std::ptrdiff_t>(x) * order_;
  return {begin, begin + order_};
}

bool FiniteGroup::is_abelian() const {
  for (int i = 0; i < order_; ++i)
    for (int j = i + 1; j < order_; ++j)
      if (mul(i, j) != mul(j, i)) return false;
  return true;
}

Subset FiniteGroup::closure(const Subset& seed) const {
  Subset s = seed;
  std::vector<int> members;
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) members.push_back(static_cast<int>(i));
  // worklist closure: every new element is multiplied against all members on both sides
  for (std::size_t head = 0; head < members.size(); ++head) {
    const int x = members[head];
    for (std::size_t k = 0; k <= head; ++k) {
      const int y = members[k];
      for (int p : {mul(x, y), mul(y, x)}) {
        if (!s.test(static_cast<std::size_t>(p))) {
          s.set(static_cast<std::size_t>(p));
          members.push_back(p);
        }
      }
    }
  }
  return s;
}

Subset FiniteGroup::generated_subgroup(const Subset& seed) const {
  // in a finite group the closure of a nonempty set already contains inverses
  Subset s = seed;
  s.set(0);
  return closure(s);
}

bool FiniteGroup::is_closed(const Subset& s) const {
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i))
    for (auto j = s.find_first(); j != Subset::npos; j = s.find_next(j))
      if (!s.test(static_cast<std::size_t>(mul(static_cast<int>(i), static_cast<int>(j))))) return false;
  return true;
}

bool FiniteGroup::is_subgroup(const Subset& s) const {
  if (s.size() != static_cast<std::size_t>(order_) || !s.test(0)) return false;
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i))
    if (!s.test(static_cast<std::size_t>(inv(static_cast<int>(i))))) return false;
  return is_closed(s);
}

FiniteGroup load_finite_group(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream header(line);
    std::string key;
    header >> key;
    if (key != "order:" || !(header >> n)) {
      throw Error(ErrorCode::MalformedTable, "first line must be 'order: n'");
    }
    break;
  }
  if (n < 1) throw Error(ErrorCode::MalformedTable, "order must be a positive integer");
  std::vector<std::vector<int>> table;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    std::vector<int> entries;
    std::string tok;
    while (row >> tok) {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        entries.push_back(v);
      } catch (const std::exception&) {
        throw Error(ErrorCode::MalformedTable, "non-integer entry '" + tok + "'");
      }
    }
    table.push_back(std::move(entries));
  }
  if (static_cast<int>(table.size()) != n) {
    throw Error(ErrorCode::MalformedTable,
                "declared order " + std::to_string(n) + " but found " + std::to_string(table.size()) + " rows");
  }
  return FiniteGroup(std::move(table));
}

FiniteGroup load_finite_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open table file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return load_finite_group(buf.str());
}

ElementOrder element_order(const FiniteGroup& group, int x) {
  ElementOrder result;
  int power = x;
  int previous = 0;
  while (power != 0) {
    previous = power;
    power = group.mul(power, x);
    ++result.order;
  }
  result.inverse_witness = result.order == 1 ? 0 : previous;
  return result;
}

bool is_normal(const FiniteGroup& group, const Subset& subgroup) {
  if (!group.is_subgroup(subgroup)) throw Error(ErrorCode::NotASubgroup, "subset is not a subgroup");
  for (int g = 0; g < group.order(); ++g) {
    const int gi = group.inv(g);
    for (auto h = subgroup.find_first(); h != Subset::npos; h = subgroup.find_next(h)) {
      const int c = group.mul(group.mul(g, static_cast<int>(h)), gi);
      if (!subgroup.test(static_cast<std::size_t>(c))) return false;
    }
  }
  return true;
}

Quotient quotient(const FiniteGroup& group, const Subset& normal_subgroup) {
  if (!is_normal(group, normal_subgroup)) throw Error(ErrorCode::NotNormal, "subgroup is not normal");
  const int n = group.order();
  std::vector<int> projection(static_cast<std::size_t>(n), -1);
  std::vector<int> representative;
  for (int x = 0; x < n; ++x) {
    if (projection[static_cast<std::size_t>(x)] >= 0) continue;
    const int coset = static_cast<int>(representative.size());
    representative.push_back(x);
    for (auto h = normal_subgroup.find_first(); h != Subset::npos; h = normal_subgroup.find_next(h)) {
      projection[static_cast<std::size_t>(group.mul(x, static_cast<int>(h)))] = coset;
    }
  }
  const auto m = representative.size();
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      table[i][j] = projection[static_cast<std::size_t>(group.mul(representative[i], representative[j]))];
  return Quotient{FiniteGroup(std::move(table)), std::move(projection)};
}

}  // namespace semicover
