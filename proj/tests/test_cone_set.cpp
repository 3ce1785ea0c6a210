#include "oracles.hpp"

#include "semicover/cone_io.hpp"
#include "semicover/cone_set.hpp"
#include "semicover/errors.hpp"
#include "semicover/fixtures.hpp"

#include <doctest.h>

using namespace semicover;

namespace {

ModelPtr z1() { return GroupModel::zr(1); }

ConeSet z_cone(const ModelPtr& z, Region r) { return ConeSet::pullback(Homomorphism::to_zr(z, {{1}}), r); }

std::vector<ConeSet> sample_cones() {
  std::vector<ConeSet> out;
  for (const auto& c : bundled_covers()) {
    out.push_back(c.a);
    out.push_back(c.b);
    out.push_back(ConeSet::conjugate(c.b, c.model->generators().back()));
  }
  const ModelPtr k = GroupModel::klein_bottle();
  out.push_back(ConeSet::explicit_set(k, {k->parse_element("b^2a^-1"), k->parse_element("ba")}));
  out.push_back(ConeSet::explicit_set(k, {k->parse_element("ba")}, ExplicitMode::exclude));
  const ModelPtr h = GroupModel::heisenberg();
  out.push_back(ConeSet::coordinates(h, {2, 0}, Region::lex_pos, true));
  return out;
}

}  // namespace

TEST_CASE("membership examples") {
  const ModelPtr z = z1();
  const ConeSet nonneg = z_cone(z, Region::lex_nonneg);
  CHECK(contains(*z, nonneg, Element{5}));
  CHECK_FALSE(contains(*z, nonneg, Element{-1}));
  CHECK(ConeSet::identity(z).contains(z->identity()));
  const ModelPtr z2 = GroupModel::zr(2);
  const ConeSet pos = ConeSet::pullback(Homomorphism::to_zr(z2, {{1, 0}, {0, 1}}), Region::lex_pos);
  CHECK(pos.contains(Element{0, 3}));
  CHECK_FALSE(pos.contains(Element{0, -3}));
  CHECK(pos.contains(Element{1, -100}));
  CHECK_THROWS_AS(contains(*z2, nonneg, Element{1, 1}), Error);
}

TEST_CASE("inversion is exact") {
  const ModelPtr z = z1();
  const ConeSet nonneg = z_cone(z, Region::lex_nonneg);
  const ConeSet inv = invert_cone(*z, nonneg);
  CHECK(inv.node().region == Region::lex_nonpos);
  CHECK(ConeSet::identity(z).inverse().kind() == ConeSet::Kind::identity);
  for (const auto& s : sample_cones()) {
    const GroupModel& m = s.model();
    CAPTURE(m.name());
    const Ball b = ball(m, 6);
    const ConeSet i = s.inverse();
    const ConeSet ii = i.inverse();
    for (const auto& x : b) {
      REQUIRE(i.contains(x) == s.contains(m.inv(x)));
      REQUIRE(ii.contains(x) == s.contains(x));
    }
  }
}

TEST_CASE("closure verdicts") {
  const ModelPtr z = z1();
  CHECK(is_subsemigroup(*z, z_cone(z, Region::lex_nonneg), 6).ok());
  const ConeSet pm = ConeSet::explicit_set(z, {Element{1}, Element{-1}}) | ConeSet::identity(z);
  const Verdict v = is_subsemigroup(*z, pm, 4);
  CHECK(v.status == Status::counterexample);
  REQUIRE(v.witness.size() == 2);
  CHECK(v.witness[0] == Element{1});
  CHECK(v.witness[1] == Element{1});
  CHECK_FALSE(pm.contains(z->mul(v.witness[0], v.witness[1])));

  const ModelPtr f = GroupModel::free_group(2);
  const ConeSet a_pos = ConeSet::pullback(Homomorphism::to_zr(f, {{1}, {0}}), Region::lex_pos) | ConeSet::identity(f);
  const Verdict fv = is_subsemigroup(*f, a_pos, 5);
  CHECK(fv.ok());
  CHECK(fv.radius_checked == 5);
  CHECK_FALSE(fv.exact);
}

TEST_CASE("cover pair verdicts") {
  const ModelPtr zc2 = GroupModel::zr(1, {2});
  const FixtureCover overlap = bundled_cover("zxc2_overlap");
  const CoverCheck c = is_cover_pair(*zc2, overlap.a, overlap.b, 8);
  CHECK(c.is_cover());
  REQUIRE(c.trivial_intersection.has_value());
  CHECK(c.trivial_intersection->status == Status::counterexample);
  CHECK(c.trivial_intersection->witness == std::vector<Element>{Element{0, 1}});

  const ModelPtr z = z1();
  const ConeSet a = z_cone(z, Region::lex_pos) | ConeSet::identity(z);
  const ConeSet b = z_cone(z, Region::lex_nonpos);
  CHECK(is_cover_pair(*z, a, b, 6).ok());

  // finite: no pair of proper closed subsets of S3 is a cover
  const ModelPtr s3 = load_fixture_model("S3");
  const FiniteGroup& g = *s3->finite_group();
  std::vector<Subset> closed;
  for (unsigned m = 0; m < 64; ++m) {
    Subset s(6, m);
    if (g.is_closed(s)) closed.push_back(s);
  }
  int covers = 0;
  for (const auto& x : closed)
    for (const auto& y : closed) {
      const CoverCheck cc = is_cover_pair(*s3, ConeSet::bits(s3, x), ConeSet::bits(s3, y), 1, false);
      covers += cc.is_cover();
      CHECK(cc.closed_a.exact);
    }
  CHECK(covers == 0);
}

TEST_CASE("properness on balls") {
  const ModelPtr z = z1();
  const Verdict full = misses_some(~ConeSet::explicit_set(z, {Element{100}}), ball(*z, 5));
  CHECK(full.status == Status::inconclusive);
  const ModelPtr c2 = load_fixture_model("C2");
  const Verdict exact = misses_some(~ConeSet::identity(c2) | ConeSet::identity(c2), verification_domain(*c2, 1));
  CHECK(exact.status == Status::counterexample);
}

TEST_CASE("symmetric parts") {
  const ModelPtr z = z1();
  const ConeSet h = symmetric_part(*z, z_cone(z, Region::lex_nonneg));
  CHECK(is_trivial_on(h, ball(*z, 6)).ok());

  const FixtureCover overlap = bundled_cover("zxc2_overlap");
  const ConeSet hp = symmetric_part(*overlap.model, overlap.b);
  CHECK(members(hp, ball(*overlap.model, 6)) == std::vector<Element>{Element{0, 0}, Element{0, 1}});

  const ModelPtr f = GroupModel::free_group(2);
  const Homomorphism phi = Homomorphism::to_zr(f, {{1}, {0}});
  const ConeSet hf = symmetric_part(*f, ConeSet::pullback(phi, Region::lex_nonneg));
  CHECK(extensionally_equal(hf, ConeSet::pullback(phi, Region::lex_zero), ball(*f, 4)).ok());

  for (const auto& s : sample_cones()) {
    const GroupModel& m = s.model();
    const Ball b = ball(m, 4);
    const ConeSet sym = symmetric_part(m, s);
    CHECK(is_subset_on(sym, sym.inverse(), b).ok());
    if (is_subsemigroup(s, b).ok()) CHECK(is_subsemigroup(sym, b).ok());
  }

  // finite: exact agreement with the direct bitset computation
  const ModelPtr d4 = load_fixture_model("D4");
  const FiniteGroup& g = *d4->finite_group();
  for (unsigned mask = 0; mask < 256; ++mask) {
    Subset s(8, mask);
    if (!g.is_closed(s)) continue;
    Subset direct = g.empty();
    for (int x = 0; x < 8; ++x)
      if (s.test(static_cast<std::size_t>(x)) && s.test(static_cast<std::size_t>(g.inv(x))))
        direct.set(static_cast<std::size_t>(x));
    CHECK(extensionally_equal(symmetric_part(*d4, ConeSet::bits(d4, s)), ConeSet::bits(d4, direct),
                              verification_domain(*d4, 1))
              .ok());
  }
}

TEST_CASE("De Morgan") {
  for (const auto& s : sample_cones()) {
    for (const auto& t : sample_cones()) {
      if (!same_model(s.model(), t.model())) continue;
      const Ball b = ball(s.model(), 5);
      CHECK(extensionally_equal(~(s | t), ~s & ~t, b).ok());
    }
  }
}

TEST_CASE("conjugate and coordinate nodes") {
  const ModelPtr h = GroupModel::heisenberg();
  const ConeSet b = ConeSet::coordinates(h, {1, 2}, Region::lex_nonneg);
  const Element y = h->generators()[1];
  const ConeSet c = ConeSet::conjugate(b, y);
  for (const auto& x : ball(*h, 4)) CHECK(c.contains(x) == b.contains(h->mul(h->mul(y, x), h->inv(y))));
  CHECK(b.contains(Element{-5, 0, 0}));
  CHECK(b.contains(Element{-5, 0, 1}));
  CHECK_FALSE(b.contains(Element{9, -1, 100}));
  const ConeSet on_inv = ConeSet::coordinates(h, {1, 2}, Region::lex_nonneg, true);
  for (const auto& x : ball(*h, 4)) CHECK(on_inv.contains(x) == b.contains(h->inv(x)));
}

TEST_CASE("cone documents") {
  const ModelPtr zc2 = GroupModel::zr(1, {2});
  const ConeSet a = load_cone_file(std::string(SEMICOVER_DATA_DIR) + "/cones/zxc2/A.json", zc2);
  CHECK(a.contains(Element{0, 1}));
  CHECK_FALSE(a.contains(Element{-1, 0}));
  for (const auto& s : sample_cones()) {
    const ConeSet back = cone_from_json(cone_to_json(s), s.model_ptr());
    CHECK(extensionally_equal(back, s, ball(s.model(), 4)).ok());
  }
  const ModelPtr k = GroupModel::klein_bottle();
  const ConeSet e = cone_from_json(Json::parse(R"({"op":"explicit","mode":"include","elements":["b^2a^-1"]})"), k);
  CHECK(e.contains(Element{2, -1}));
  CHECK_THROWS_AS(cone_from_json(Json::parse(R"({"op":"spline"})"), k), Error);
  CHECK_THROWS_AS(cone_from_json(Json::parse(R"({"op":"pullback","images":[[1]],"region":"lex_nonneg"})"), k), Error);
  CHECK_THROWS_AS(cone_from_json(Json::parse(R"({"op":"explicit","elements":["q"]})"), k), Error);
}

TEST_CASE("pair membership agrees with direct products") {
  auto cones = sample_cones();
  for (const auto& fw : bundled_witnesses()) cones.push_back(fw.witness.cone - fw.witness.kernel);
  for (const auto& c : cones) {
    const GroupModel& m = c.model();
    const Ball bx = ball(m, 3), by = ball(m, 2);
    const auto& xs = bx.elements();
    const auto& ys = by.elements();
    using F = PairMembership::Form;
    for (F form : {F::quotient, F::product, F::conjugate}) {
      const PairMembership pm(c, xs, ys, form);
      for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < ys.size(); ++j) {
          const Element& x = xs[i];
          const Element& y = ys[j];
          const Element z = form == F::quotient  ? m.mul(m.inv(x), y)
                            : form == F::product ? m.mul(x, y)
                                                 : m.mul(m.mul(m.inv(x), y), x);
          REQUIRE(pm.contains(i, j) == c.contains(z));
        }
    }
  }
}
