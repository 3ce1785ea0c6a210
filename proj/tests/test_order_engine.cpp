#include "semicover/cover_engine.hpp"
#include "semicover/errors.hpp"
#include "semicover/fixtures.hpp"
#include "semicover/order_engine.hpp"

#include <doctest.h>

using namespace semicover;

namespace {

ConeSet lex_on(const ModelPtr& zr, Region r = Region::lex_nonneg) {
  std::vector<int> coords;
  for (int i = 0; i < zr->rank(); ++i) coords.push_back(i);
  return ConeSet::coordinates(zr, coords, r);
}

LeftOrderWitness find_witness(const std::string& name) {
  for (auto& w : bundled_witnesses())
    if (w.name == name) return w.witness;
  FAIL("missing witness " << name);
  throw;
}

}  // namespace

TEST_CASE("order from a cone") {
  const ModelPtr z = GroupModel::zr(1);
  const Comparator le = order_from_cone(z, lex_on(z), 6);
  CHECK(le.less_equal(Element{3}, Element{5}));
  CHECK_FALSE(le.less_equal(Element{5}, Element{3}));
  for (const auto& x : ball(*z, 6)) CHECK(le.less_equal(x, x));

  const ModelPtr z2 = GroupModel::zr(2);
  const Comparator lex = order_from_cone(z2, lex_on(z2), 6);
  CHECK(lex.less_equal(Element{0, 5}, Element{1, -100}));
  CHECK(lex.compare(Element{0, 5}, Element{1, -100}) == std::weak_ordering::less);

  try {
    order_from_cone(z, lex_on(z) | ConeSet::explicit_set(z, {Element{-1}}), 6);
    FAIL("expected NotACone");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotACone);
    CHECK(e.witness() == std::vector<Element>{Element{1}});
  }
  CHECK_THROWS_AS(order_from_cone(z, lex_on(z, Region::lex_pos), 6), Error);
}

TEST_CASE("witnesses from quotient orders") {
  const ModelPtr zc2 = GroupModel::zr(1, {2});
  const Homomorphism proj = Homomorphism::to_zr(zc2, {{1}, {0}});
  const LeftOrderWitness w = cone_from_quotient_order(zc2, proj, lex_on(proj.target_ptr()), 6);
  CHECK(members(w.kernel, ball(*zc2, 6)) == std::vector<Element>{Element{0, 0}, Element{0, 1}});
  CHECK(validate_witness(w, 6).ok());

  const ModelPtr z = GroupModel::zr(1);
  const LeftOrderWitness wz = cone_from_quotient_order(z, Homomorphism::to_zr(z, {{1}}), lex_on(z), 6);
  CHECK(is_trivial_on(wz.kernel, ball(*z, 6)).ok());

  const ModelPtr k = GroupModel::klein_bottle();
  const Homomorphism b_exp = Homomorphism::to_zr(k, {{0}, {1}});
  const LeftOrderWitness wk = cone_from_quotient_order(k, b_exp, lex_on(b_exp.target_ptr()), 6);
  for (const auto& x : ball(*k, 6)) CHECK(wk.kernel.contains(x) == (x[0] == 0));
  CHECK(validate_witness(wk, 6).ok());

  CHECK_THROWS_AS(cone_from_quotient_order(z, Homomorphism::to_zr(z, {{1}}), lex_on(z, Region::lex_pos), 6), Error);
}

TEST_CASE("pullback covers") {
  const ModelPtr zc2 = GroupModel::zr(1, {2});
  const Homomorphism proj = Homomorphism::to_zr(zc2, {{1}, {0}});
  const CoverPair c = pullback_cover(zc2, proj, lex_on(proj.target_ptr()), 8);
  CHECK(c.flags.all_verified());
  const Ball b = ball(*zc2, 8);
  for (const auto& x : b) {
    CHECK(c.b.contains(x) == (x[0] >= 0));
    CHECK(c.a.contains(x) == (x[0] < 0 || zc2->is_identity(x)));
  }

  const ModelPtr z = GroupModel::zr(1);
  const CoverPair cz = pullback_cover(z, Homomorphism::to_zr(z, {{1}}), lex_on(z), 6);
  CHECK(cz.flags.all_verified());
  CHECK(members(cz.a & cz.b, ball(*z, 6)) == std::vector<Element>{Element{0}});
  for (const auto& x : ball(*z, 6)) CHECK(cz.a.contains(x) == (x[0] <= 0));

  const ModelPtr h = GroupModel::heisenberg();
  const Homomorphism xy = Homomorphism::to_zr(h, {{1, 0}, {0, 1}});
  const CoverPair ch = pullback_cover(h, xy, lex_on(xy.target_ptr()), 5);
  CHECK(ch.flags.all_verified());
  CHECK(ch.b.contains(Element{0, 0, -7}));  // the centre lands in B

  const Homomorphism zero = Homomorphism::to_zr(z, {{0}});
  CHECK_THROWS_AS(pullback_cover(z, zero, lex_on(z), 6), Error);
  const ConeSet everything = ~ConeSet::explicit_set(z, {});
  try {
    pullback_cover(z, Homomorphism::to_zr(z, {{1}}), everything, 6);
    FAIL("expected TrivialQuotient");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TrivialQuotient);
  }
  CHECK_THROWS_AS(pullback_cone(Homomorphism::to_zr(z, {{1}}), ConeSet::explicit_set(z, {Element{1}})), Error);
}

TEST_CASE("lexicographic combination") {
  const LeftOrderWitness first = find_witness("z2_first");
  const LeftOrderWitness second = find_witness("z2_second");
  const LeftOrderWitness lex = lex_combine(first, second);
  const Comparator cmp = comparator(lex);
  const Ball b = ball(*lex.model, 10);
  for (const auto& x : b)
    for (const auto& y : b) {
      const auto direct = x[0] != y[0] ? x[0] <=> y[0] : x[1] <=> y[1];
      REQUIRE(cmp.compare(x, y) == std::weak_ordering(direct));
    }
  CHECK(is_trivial_on(lex.kernel, b).ok());

  const LeftOrderWitness same = lex_combine(first, first);
  const Ball b6 = ball(*first.model, 6);
  CHECK(extensionally_equal(same.kernel, first.kernel, b6).ok());
  CHECK(extensionally_equal(same.cone, first.cone, b6).ok());

  const LeftOrderWitness k = find_witness("klein_b");
  const LeftOrderWitness kk = lex_combine(k, k);
  CHECK(extensionally_equal(kk.kernel, k.kernel, ball(*k.model, 5)).ok());

  CHECK_THROWS_AS(lex_combine(first, k), Error);
}

TEST_CASE("lex combination orders the first kernel like the second witness") {
  const auto ws = bundled_witnesses();
  for (const auto& w1 : ws)
    for (const auto& w2 : ws) {
      if (!same_model(*w1.witness.model, *w2.witness.model)) continue;
      const LeftOrderWitness c = lex_combine(w1.witness, w2.witness);
      const Comparator cmp = comparator(c), cmp2 = comparator(w2.witness);
      const auto kernel = members(w1.witness.kernel, ball(*c.model, 4));
      for (const auto& x : kernel)
        for (const auto& y : kernel) CHECK(cmp.compare(x, y) == cmp2.compare(x, y));
    }
}

TEST_CASE("totality and left invariance of bundled witnesses") {
  for (const auto& fw : bundled_witnesses()) {
    CAPTURE(fw.name);
    const LeftOrderWitness& w = fw.witness;
    CHECK(validate_witness(w, 6).ok());
    CHECK(check_totality(w, 6).ok());
    CHECK(check_left_invariance(w, ball(*w.model, 1), ball(*w.model, 6)).ok());
    CHECK(check_left_invariance(w, ball(*w.model, 3), ball(*w.model, 3)).ok());
  }
}

TEST_CASE("witness validation catches a broken kernel") {
  const LeftOrderWitness k = find_witness("klein_b");
  const ModelPtr m = k.model;
  // <b> is not normal, and the cone does not cover
  LeftOrderWitness bad{m, ConeSet::coordinates(m, {1}, Region::lex_zero), k.kernel};
  const WitnessCheck c = validate_witness(bad, 4);
  CHECK_FALSE(c.kernel_normal.ok());
  CHECK_FALSE(c.cone_covers.ok());
  CHECK_FALSE(c.ok());
}

TEST_CASE("merging covers") {
  const FixtureCover z = bundled_cover("z_order");
  const MergeResult same = merge_covers(CoverPair{z.model, z.a, z.b, {}, 6}, CoverPair{z.model, z.a, z.b, {}, 6}, 6);
  CHECK(same.ok());
  CHECK(extensionally_equal(same.cover.b, z.b, ball(*z.model, 6)).ok());

  const FixtureCover f = bundled_cover("z2_first"), s = bundled_cover("z2_second");
  const MergeResult m = merge_covers(CoverPair{f.model, f.a, f.b, {}, 5}, CoverPair{s.model, s.a, s.b, {}, 5}, 5);
  CHECK(m.ok());
  const LeftOrderWitness lex = lex_combine(find_witness("z2_first"), find_witness("z2_second"));
  CHECK(extensionally_equal(m.cover.b, lex.cone, ball(*f.model, 5)).ok());
  CHECK(is_trivial_on(symmetric_part(*f.model, m.cover.b), ball(*f.model, 5)).ok());

  const FixtureCover p = bundled_cover("zxc2_order");
  const CoverPair pc{p.model, p.a, p.b, {}, 6};
  const MergeResult mp = merge_covers(pc, pc, 6);
  CHECK(mp.ok());
  CHECK(extensionally_equal(mp.cover.b, p.b, ball(*p.model, 6)).ok());
  const LeftOrderWitness wp = find_witness("zxc2_order");
  CHECK(extensionally_equal(mp.cover.b, lex_combine(wp, wp).cone, ball(*p.model, 6)).ok());

  const FixtureCover raw = bundled_cover("zxc2_overlap");
  try {
    merge_covers(CoverPair{raw.model, raw.a, raw.b, {}, 6}, pc, 6);
    FAIL("expected NotNormalized");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNormalized);
  }
  const FixtureCover nn = bundled_cover("heisenberg_nonnormal");
  const Reduction red = reduce_cover(nn.model, nn.a, nn.b, 4);
  CHECK_THROWS_AS(merge_covers(red.cover, red.cover, 4), Error);
}
