#include "semicover/group_model.hpp"

#include "semicover/errors.hpp"
#include "semicover/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace semicover {

namespace {

Coord mod(Coord a, Coord m) {
  Coord r = a % m;
  return r < 0 ? r + m : r;
}

bool parse_int(std::string_view s, Coord& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

Element free_letter(int generator, bool inverse) {
  Coord letter = generator + 1;
  return Element{inverse ? -letter : letter};
}

}  // namespace

ModelPtr GroupModel::finite(FiniteGroup group, std::string name) {
  auto m = std::shared_ptr<GroupModel>(new GroupModel());
  m->kind_ = ModelKind::finite;
  m->name_ = std::move(name);
  for (int g : group.generators()) m->generators_.push_back(Element{g});
  m->finite_ = std::move(group);
  return m;
}

ModelPtr GroupModel::zr(int rank, std::vector<int> torsion) {
  if (rank < 0) throw Error(ErrorCode::ParseError, "rank must be non-negative");
  for (int o : torsion)
    if (o < 1) throw Error(ErrorCode::ParseError, "torsion orders must be positive");
  auto m = std::shared_ptr<GroupModel>(new GroupModel());
  m->kind_ = ModelKind::zr_cross_finite;
  m->rank_ = rank;
  m->torsion_ = std::move(torsion);
  m->name_ = "z^" + std::to_string(rank);
  for (int o : m->torsion_) m->name_ += "xC" + std::to_string(o);
  const std::size_t width = static_cast<std::size_t>(rank) + m->torsion_.size();
  for (std::size_t i = 0; i < width; ++i) {
    Element e;
    e.coords.assign(width, 0);
    e.coords[i] = 1;
    if (i >= static_cast<std::size_t>(rank) && m->torsion_[i - static_cast<std::size_t>(rank)] == 1) {
      e.coords[i] = 0;
    }
    m->generators_.push_back(std::move(e));
  }
  return m;
}

ModelPtr GroupModel::free_group(int rank) {
  if (rank < 1 || rank > 26) throw Error(ErrorCode::ParseError, "free rank must be in [1, 26]");
  auto m = std::shared_ptr<GroupModel>(new GroupModel());
  m->kind_ = ModelKind::free;
  m->rank_ = rank;
  m->name_ = "free:" + std::to_string(rank);
  for (int i = 0; i < rank; ++i) m->generators_.push_back(free_letter(i, false));
  return m;
}

ModelPtr GroupModel::heisenberg() {
  auto m = std::shared_ptr<GroupModel>(new GroupModel());
  m->kind_ = ModelKind::heisenberg;
  m->name_ = "heisenberg";
  m->generators_ = {Element{1, 0, 0}, Element{0, 1, 0}};
  return m;
}

ModelPtr GroupModel::klein_bottle() {
  auto m = std::shared_ptr<GroupModel>(new GroupModel());
  m->kind_ = ModelKind::klein_bottle;
  m->name_ = "klein_bottle";
  m->generators_ = {Element{0, 1}, Element{1, 0}};
  return m;
}

Element GroupModel::identity() const {
  switch (kind_) {
    case ModelKind::finite: return Element{0};
    case ModelKind::zr_cross_finite: {
      Element e;
      e.coords.assign(static_cast<std::size_t>(rank_) + torsion_.size(), 0);
      return e;
    }
    case ModelKind::free: return Element{};
    case ModelKind::heisenberg: return Element{0, 0, 0};
    case ModelKind::klein_bottle: return Element{0, 0};
  }
  return {};
}

Element GroupModel::mul(const Element& x, const Element& y) const {
  switch (kind_) {
    case ModelKind::finite:
      return Element{finite_->mul(static_cast<int>(x[0]), static_cast<int>(y[0]))};
    case ModelKind::zr_cross_finite: {
      Element r = x;
      for (std::size_t i = 0; i < r.size(); ++i) r.coords[i] += y[i];
      for (std::size_t t = 0; t < torsion_.size(); ++t) {
        auto i = static_cast<std::size_t>(rank_) + t;
        r.coords[i] = mod(r.coords[i], torsion_[t]);
      }
      return r;
    }
    case ModelKind::free: {
      Element r = x;
      for (Coord letter : y.coords) {
        if (!r.coords.empty() && r.coords.back() == -letter) {
          r.coords.pop_back();
        } else {
          r.coords.push_back(letter);
        }
      }
      return r;
    }
    case ModelKind::heisenberg:
      return Element{x[0] + y[0], x[1] + y[1], x[2] + y[2] + x[0] * y[1]};
    case ModelKind::klein_bottle: {
      // b^m a^n b^p a^q = b^(m+p) a^((-1)^p n + q)
      const Coord n = (y[0] % 2 == 0) ? x[1] : -x[1];
      return Element{x[0] + y[0], n + y[1]};
    }
  }
  return {};
}

Element GroupModel::inv(const Element& x) const {
  switch (kind_) {
    case ModelKind::finite: return Element{finite_->inv(static_cast<int>(x[0]))};
    case ModelKind::zr_cross_finite: {
      Element r = x;
      for (std::size_t i = 0; i < r.size(); ++i) r.coords[i] = -r.coords[i];
      for (std::size_t t = 0; t < torsion_.size(); ++t) {
        auto i = static_cast<std::size_t>(rank_) + t;
        r.coords[i] = mod(r.coords[i], torsion_[t]);
      }
      return r;
    }
    case ModelKind::free: {
      Element r;
      for (auto it = x.coords.rbegin(); it != x.coords.rend(); ++it) r.coords.push_back(-*it);
      return r;
    }
    case ModelKind::heisenberg: return Element{-x[0], -x[1], -x[2] + x[0] * x[1]};
    case ModelKind::klein_bottle: return Element{-x[0], (x[0] % 2 == 0) ? -x[1] : x[1]};
  }
  return {};
}

Element GroupModel::pow(const Element& x, Coord n) const {
  Element base = n < 0 ? inv(x) : x;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  Element result = identity();
  while (e != 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e != 0) base = mul(base, base);
  }
  return result;
}

Element GroupModel::conjugate(const Element& x, const Element& g) const {
  return mul(mul(inv(g), x), g);
}

bool GroupModel::is_valid(const Element& x) const {
  switch (kind_) {
    case ModelKind::finite:
      return x.size() == 1 && x[0] >= 0 && x[0] < finite_->order();
    case ModelKind::zr_cross_finite: {
      if (x.size() != static_cast<std::size_t>(rank_) + torsion_.size()) return false;
      for (std::size_t t = 0; t < torsion_.size(); ++t) {
        Coord v = x[static_cast<std::size_t>(rank_) + t];
        if (v < 0 || v >= torsion_[t]) return false;
      }
      return true;
    }
    case ModelKind::free:
      for (std::size_t i = 0; i < x.size(); ++i) {
        Coord l = x[i];
        if (l == 0 || l > rank_ || l < -rank_) return false;
        if (i > 0 && x[i - 1] == -l) return false;
      }
      return true;
    case ModelKind::heisenberg: return x.size() == 3;
    case ModelKind::klein_bottle: return x.size() == 2;
  }
  return false;
}

void GroupModel::validate(const Element& x) const {
  if (!is_valid(x)) {
    throw Error(ErrorCode::InvalidElement, "not a normal form of " + name_, {x});
  }
}

bool GroupModel::is_abelian() const {
  switch (kind_) {
    case ModelKind::finite: return finite_->is_abelian();
    case ModelKind::zr_cross_finite: return true;
    case ModelKind::free: return rank_ == 1;
    case ModelKind::heisenberg:
    case ModelKind::klein_bottle: return false;
  }
  return false;
}

std::optional<std::size_t> GroupModel::order() const {
  if (kind_ == ModelKind::finite) return static_cast<std::size_t>(finite_->order());
  if (kind_ == ModelKind::zr_cross_finite && rank_ == 0) {
    std::size_t n = 1;
    for (int o : torsion_) n *= static_cast<std::size_t>(o);
    return n;
  }
  return std::nullopt;
}

std::vector<Word> GroupModel::relators() const {
  std::vector<Word> rels;
  auto commutator = [](int i, int j) {
    return Word{{i, 1}, {j, 1}, {i, -1}, {j, -1}};
  };
  switch (kind_) {
    case ModelKind::finite:
    case ModelKind::free:
      break;
    case ModelKind::zr_cross_finite: {
      const int n = static_cast<int>(generators_.size());
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) rels.push_back(commutator(i, j));
      for (std::size_t t = 0; t < torsion_.size(); ++t)
        rels.push_back(Word{{rank_ + static_cast<int>(t), torsion_[t]}});
      break;
    }
    case ModelKind::heisenberg: {
      // [x,[x,y]] and [y,[x,y]]
      Word xy = commutator(0, 1);
      Word xy_inv{{1, 1}, {0, 1}, {1, -1}, {0, -1}};
      for (int g : {0, 1}) {
        Word r{{g, 1}};
        r.insert(r.end(), xy.begin(), xy.end());
        r.push_back({g, -1});
        r.insert(r.end(), xy_inv.begin(), xy_inv.end());
        rels.push_back(std::move(r));
      }
      break;
    }
    case ModelKind::klein_bottle:
      rels.push_back(Word{{1, 1}, {0, 1}, {1, -1}, {0, 1}});  // baBa
      break;
  }
  return rels;
}

Element GroupModel::evaluate(const Word& w) const {
  Element r = identity();
  for (const auto& s : w) {
    if (s.generator < 0 || static_cast<std::size_t>(s.generator) >= generators_.size()) {
      throw Error(ErrorCode::InvalidElement, "generator index out of range in word");
    }
    r = mul(r, pow(generators_[static_cast<std::size_t>(s.generator)], s.exponent));
  }
  return r;
}

Word parse_word(std::string_view text, std::size_t generator_count) {
  Word w;
  std::string s = trim(text);
  if (s.empty() || s == "1" || s == "e") return w;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::InvalidElement, "unexpected character '" + std::string(1, c) + "' in word '" + s + "'");
    }
    const bool inverse = std::isupper(static_cast<unsigned char>(c)) != 0;
    const int g = std::tolower(static_cast<unsigned char>(c)) - 'a';
    if (g < 0 || static_cast<std::size_t>(g) >= generator_count) {
      throw Error(ErrorCode::InvalidElement, "unknown generator letter '" + std::string(1, c) + "'");
    }
    ++i;
    Coord exponent = 1;
    if (i < s.size() && s[i] == '^') {
      std::size_t j = i + 1;
      if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (!parse_int(std::string_view(s).substr(i + 1, j - i - 1), exponent)) {
        throw Error(ErrorCode::InvalidElement, "bad exponent in word '" + s + "'");
      }
      i = j;
    }
    w.push_back({g, inverse ? -exponent : exponent});
  }
  return w;
}

Element GroupModel::parse_element(std::string_view text) const {
  std::string s = trim(text);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw Error(ErrorCode::InvalidElement, "unterminated tuple '" + s + "'");
    Element e;
    std::stringstream body(s.substr(1, s.size() - 2));
    std::string part;
    while (std::getline(body, part, ',')) {
      Coord v = 0;
      if (!parse_int(trim(part), v)) throw Error(ErrorCode::InvalidElement, "bad tuple entry in '" + s + "'");
      e.coords.push_back(v);
    }
    if (kind_ == ModelKind::free) throw Error(ErrorCode::InvalidElement, "free group elements are words");
    validate(e);
    return e;
  }
  Coord v = 0;
  if (kind_ == ModelKind::finite && parse_int(s, v)) {
    Element e{v};
    validate(e);
    return e;
  }
  if (kind_ == ModelKind::zr_cross_finite && rank_ == 1 && torsion_.empty() && parse_int(s, v)) {
    return Element{v};
  }
  return evaluate(parse_word(s, generators_.size()));
}

std::string GroupModel::format(const Element& x) const {
  auto tuple = [&] {
    std::string out = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(x[i]);
    }
    return out + ")";
  };
  switch (kind_) {
    case ModelKind::finite: return std::to_string(x[0]);
    case ModelKind::zr_cross_finite:
    case ModelKind::heisenberg: return tuple();
    case ModelKind::free: {
      if (x.size() == 0) return "1";
      std::string out;
      for (Coord l : x.coords) {
        char c = static_cast<char>('a' + (l > 0 ? l : -l) - 1);
        out += l > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      }
      return out;
    }
    case ModelKind::klein_bottle: {
      if (x[0] == 0 && x[1] == 0) return "1";
      std::string out;
      auto syllable = [&](char letter, Coord e) {
        if (e == 0) return;
        out += letter;
        if (e != 1) out += "^" + std::to_string(e);
      };
      syllable('b', x[0]);
      syllable('a', x[1]);
      return out;
    }
  }
  return tuple();
}

bool operator==(const GroupModel& lhs, const GroupModel& rhs) {
  if (&lhs == &rhs) return true;
  if (lhs.kind_ != rhs.kind_) return false;
  switch (lhs.kind_) {
    case ModelKind::finite: return *lhs.finite_ == *rhs.finite_;
    case ModelKind::zr_cross_finite: return lhs.rank_ == rhs.rank_ && lhs.torsion_ == rhs.torsion_;
    case ModelKind::free: return lhs.rank_ == rhs.rank_;
    case ModelKind::heisenberg:
    case ModelKind::klein_bottle: return true;
  }
  return false;
}

bool same_model(const GroupModel& lhs, const GroupModel& rhs) { return lhs == rhs; }

void require_same_model(const GroupModel& lhs, const GroupModel& rhs, std::string_view context) {
  if (!(lhs == rhs)) {
    throw Error(ErrorCode::ModelMismatch,
                std::string(context) + ": " + lhs.name() + " vs " + rhs.name());
  }
}

ModelPtr parse_model_selector(std::string_view selector) {
  const std::string s = trim(selector);
  if (s == "heisenberg") return GroupModel::heisenberg();
  if (s == "klein_bottle") return GroupModel::klein_bottle();
  if (s.rfind("finite:", 0) == 0) {
    const std::string path = s.substr(7);
    return GroupModel::finite(load_finite_group_file(path), "finite:" + path);
  }
  if (s.rfind("fixture:", 0) == 0) return load_fixture_model(s.substr(8));
  if (s.rfind("free:", 0) == 0) {
    Coord k = 0;
    if (!parse_int(s.substr(5), k)) throw Error(ErrorCode::ParseError, "bad free rank in '" + s + "'");
    return GroupModel::free_group(static_cast<int>(k));
  }
  if (s.rfind("z^", 0) == 0) {
    std::stringstream parts(s.substr(2));
    std::string part;
    std::getline(parts, part, 'x');
    Coord r = 0;
    if (!parse_int(part, r)) throw Error(ErrorCode::ParseError, "bad rank in '" + s + "'");
    std::vector<int> torsion;
    while (std::getline(parts, part, 'x')) {
      Coord o = 0;
      if (part.size() < 2 || (part[0] != 'C' && part[0] != 'c') || !parse_int(part.substr(1), o) || o < 1) {
        throw Error(ErrorCode::ParseError, "bad torsion factor '" + part + "' in '" + s + "'");
      }
      torsion.push_back(static_cast<int>(o));
    }
    return GroupModel::zr(static_cast<int>(r), std::move(torsion));
  }
  throw Error(ErrorCode::ParseError, "unknown model selector '" + s + "'");
}

Ball::Ball(const GroupModel& model, int radius, std::size_t cap) : radius_(radius) {
  if (radius < 0) throw Error(ErrorCode::ParseError, "radius must be non-negative");
  std::vector<Element> moves;
  for (const auto& g : model.generators()) {
    moves.push_back(g);
    Element gi = model.inv(g);
    if (!(gi == g)) moves.push_back(std::move(gi));
  }
  auto add = [&](Element x, int len) {
    if (index_.count(x)) return;
    if (elements_.size() >= cap) {
      throw Error(ErrorCode::BallTooLarge,
                  "ball of radius " + std::to_string(radius) + " exceeds " + std::to_string(cap) + " elements");
    }
    index_.emplace(x, elements_.size());
    elements_.push_back(std::move(x));
    lengths_.push_back(len);
  };
  add(model.identity(), 0);
  std::size_t layer_begin = 0;
  for (int r = 1; r <= radius; ++r) {
    const std::size_t layer_end = elements_.size();
    if (layer_begin == layer_end) break;
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const auto& s : moves) add(model.mul(elements_[i], s), r);
    }
    layer_begin = layer_end;
  }
  if (auto n = model.order()) exact_ = elements_.size() == *n;
}

std::optional<std::size_t> Ball::index_of(const Element& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Ball ball(const GroupModel& model, int radius, std::size_t cap) { return Ball(model, radius, cap); }

Ball verification_domain(const GroupModel& model, int radius, std::size_t cap) {
  if (auto n = model.order()) {
    // the diameter of a finite Cayley graph is below its order
    return Ball(model, static_cast<int>(*n), cap);
  }
  return Ball(model, radius, cap);
}

}  // namespace semicover
