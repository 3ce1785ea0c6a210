#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace semicover {

using Coord = std::int64_t;

/// Normal form of a group element. The meaning of the coordinates depends on
/// the owning GroupModel:
///   finite           {table index}
///   zr_cross_finite  {v_1..v_r, t_1..t_k} with 0 <= t_i < order_i
///   free             reduced word, letter +(i+1) for generator i, -(i+1) for its inverse
///   heisenberg       {x, y, z}, product (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x*y')
///   klein_bottle     {m, n} for b^m a^n
struct Element {
  boost::container::small_vector<Coord, 4> coords;

  Element() = default;
  Element(std::initializer_list<Coord> values) : coords(values) {}

  std::size_t size() const noexcept { return coords.size(); }
  Coord operator[](std::size_t i) const { return coords[i]; }

  friend bool operator==(const Element& lhs, const Element& rhs) {
    return lhs.coords == rhs.coords;
  }
  friend bool operator<(const Element& lhs, const Element& rhs) {
    return lhs.coords < rhs.coords;
  }
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ e.coords.size();
    for (Coord c : e.coords) {
      h ^= std::hash<Coord>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// A word as a list of generator powers.
struct Syllable {
  int generator = 0;
  Coord exponent = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};
using Word = std::vector<Syllable>;

}  // namespace semicover

template <>
struct std::hash<semicover::Element> : semicover::ElementHash {};
