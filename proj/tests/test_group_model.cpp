#include "oracles.hpp"

#include "semicover/errors.hpp"
#include "semicover/fixtures.hpp"
#include "semicover/group_model.hpp"
#include "semicover/homomorphism.hpp"

#include <doctest.h>

using namespace semicover;

TEST_CASE("Z^r with torsion") {
  const ModelPtr m = GroupModel::zr(1, {2});
  CHECK(m->name() == "z^1xC2");
  const Element x = m->parse_element("(3,1)");
  const Element y = m->parse_element("(-1,1)");
  CHECK(m->mul(x, y) == Element{2, 0});
  CHECK(m->inv(x) == Element{-3, 1});
  CHECK(m->is_abelian());
  CHECK_FALSE(m->is_valid(Element{1, 2}));
  CHECK_THROWS_AS(m->validate(Element{1, 2}), Error);
  CHECK_FALSE(m->order().has_value());
}

TEST_CASE("heisenberg multiplication matches unitriangular matrices") {
  const ModelPtr h = GroupModel::heisenberg();
  CHECK_FALSE(h->is_abelian());
  const Ball b = ball(*h, 3);
  for (const auto& x : b)
    for (const auto& y : b) {
      const Element p = h->mul(x, y);
      CHECK(oracle::heis_matrix(p[0], p[1], p[2]) ==
            oracle::mul3(oracle::heis_matrix(x[0], x[1], x[2]), oracle::heis_matrix(y[0], y[1], y[2])));
      CHECK(h->mul(x, h->inv(x)) == h->identity());
    }
  // [x, y] is central and equals (0,0,1)
  const Element X = h->generators()[0], Y = h->generators()[1];
  CHECK(h->mul(h->mul(X, Y), h->mul(h->inv(X), h->inv(Y))) == Element{0, 0, 1});
  for (const auto& w : h->relators()) CHECK(h->is_identity(h->evaluate(w)));
}

TEST_CASE("klein bottle multiplication matches plane isometries") {
  const ModelPtr k = GroupModel::klein_bottle();
  const Ball b = ball(*k, 4);
  for (const auto& x : b)
    for (const auto& y : b) {
      const Element p = k->mul(x, y);
      CHECK(oracle::klein_affine(p[0], p[1]) ==
            oracle::compose(oracle::klein_affine(x[0], x[1]), oracle::klein_affine(y[0], y[1])));
    }
  const Element a = k->parse_element("a"), bb = k->parse_element("b");
  CHECK(k->mul(k->mul(bb, a), k->inv(bb)) == k->inv(a));
  CHECK(k->format(k->parse_element("b^2a^-1")) == "b^2a^-1");
  for (const auto& w : k->relators()) CHECK(k->is_identity(k->evaluate(w)));
}

TEST_CASE("free group reduced words") {
  const ModelPtr f = GroupModel::free_group(2);
  for (const char* w : {"abAB", "aabBAb", "AbBa", "abbaBBAAba"}) {
    CAPTURE(w);
    CHECK(f->format(f->parse_element(w)) == (oracle::free_reduce(w).empty() ? "1" : oracle::free_reduce(w)));
  }
  const Element x = f->parse_element("ab"), y = f->parse_element("Ba");
  CHECK(f->format(f->mul(x, y)) == "aa");
  CHECK(f->format(f->inv(f->parse_element("abA"))) == "aBA");
  CHECK(f->format(f->pow(f->parse_element("ab"), 3)) == "ababab");
  CHECK(f->format(f->pow(f->parse_element("ab"), -2)) == "BABA");
}

TEST_CASE("ball sizes") {
  for (int r = 0; r <= 6; ++r) {
    CHECK(ball(*GroupModel::zr(2), r).size() == oracle::z2_ball_size(r));
    CHECK(ball(*GroupModel::free_group(2), r).size() == oracle::free_ball_size(2, r));
  }
  const Ball b = ball(*GroupModel::zr(1), 3);
  std::vector<Element> expected{{0}, {1}, {-1}, {2}, {-2}, {3}, {-3}};
  CHECK(b.elements() == expected);
  CHECK(b.length(5) == 3);
  CHECK_FALSE(b.exact());
  CHECK_THROWS_AS(ball(*GroupModel::free_group(3), 12, 1000), Error);

  const ModelPtr s3 = load_fixture_model("S3");
  CHECK(verification_domain(*s3, 1).size() == 6);
  CHECK(verification_domain(*s3, 1).exact());
}

TEST_CASE("model selectors") {
  CHECK(parse_model_selector("z^2")->rank() == 2);
  CHECK(parse_model_selector("z^1xC2xC3")->torsion() == std::vector<int>{2, 3});
  CHECK(parse_model_selector("free:3")->generator_count() == 3);
  CHECK(parse_model_selector("heisenberg")->kind() == ModelKind::heisenberg);
  CHECK(parse_model_selector("klein_bottle")->kind() == ModelKind::klein_bottle);
  CHECK(parse_model_selector("fixture:Q8")->order() == std::size_t{8});
  CHECK(parse_model_selector(std::string("finite:") + SEMICOVER_DATA_DIR + "/groups/S3.tbl")->order() ==
        std::size_t{6});
  CHECK_THROWS_AS(parse_model_selector("lie:e8"), Error);
  CHECK_THROWS_AS(parse_model_selector("fixture:nope"), Error);
  CHECK(same_model(*parse_model_selector("z^2"), *GroupModel::zr(2)));
  CHECK_THROWS_AS(require_same_model(*GroupModel::zr(2), *GroupModel::zr(3), "test"), Error);
}

TEST_CASE("homomorphisms") {
  const ModelPtr k = GroupModel::klein_bottle();
  const Homomorphism b_exp = Homomorphism::to_zr(k, {{0}, {1}});
  CHECK(b_exp.apply(k->parse_element("b^3a^-5")) == Element{3});
  // a has to die in a torsion-free abelian quotient
  CHECK_THROWS_AS(Homomorphism::to_zr(k, {{1}, {0}}), Error);

  const ModelPtr h = GroupModel::heisenberg();
  const Homomorphism xy = Homomorphism::to_zr(h, {{1, 0}, {0, 1}});
  CHECK(xy.apply(Element{4, -2, 7}) == Element{4, -2});
  const Homomorphism first = Homomorphism::to_zr(xy.target_ptr(), {{1}, {0}});
  CHECK(xy.then(first).apply(Element{4, -2, 7}) == Element{4});

  const ModelPtr c4 = load_fixture_model("C4");
  const ModelPtr c2 = load_fixture_model("C2");
  // generator of C4 onto the generator of C2
  const Homomorphism onto(c4, c2, {c2->generators()[0]});
  for (const auto& x : verification_domain(*c4, 1))
    for (const auto& y : verification_domain(*c4, 1))
      CHECK(onto.apply(c4->mul(x, y)) == c2->mul(onto.apply(x), onto.apply(y)));
  CHECK_THROWS_AS(Homomorphism(c2, c4, {c4->generators()[0]}), Error);
  CHECK_THROWS_AS(hom_apply(b_exp, Element{1, 2, 3}), Error);
}

TEST_CASE("worked products") {
  const ModelPtr k = GroupModel::klein_bottle();
  CHECK(k->mul(Element{1, 1}, Element{1, 0}) == Element{2, -1});
  const ModelPtr f = GroupModel::free_group(2);
  CHECK(f->format(f->mul(f->parse_element("aB"), f->parse_element("b"))) == "a");
  CHECK(GroupModel::zr(1, {2})->inv(Element{3, 1}) == Element{-3, 1});
  CHECK(ball(*f, 1).size() == 5);
  CHECK(ball(*f, 2).size() == 17);
}

TEST_CASE("group axioms on balls for every model") {
  const std::vector<ModelPtr> models{GroupModel::zr(2),          GroupModel::zr(1, {2}),  GroupModel::free_group(2),
                                     GroupModel::heisenberg(),   GroupModel::klein_bottle(), load_fixture_model("S3")};
  for (const auto& m : models) {
    CAPTURE(m->name());
    const Ball b3 = ball(*m, 3);
    for (const auto& x : b3)
      for (const auto& y : b3)
        for (const auto& z : b3) REQUIRE(m->mul(m->mul(x, y), z) == m->mul(x, m->mul(y, z)));
    const Ball b4 = ball(*m, 4);
    for (const auto& x : b4) {
      CHECK(m->mul(x, m->inv(x)) == m->identity());
      CHECK(m->inv(m->inv(x)) == x);
    }
    for (const auto& x : b3) CHECK(b4.contains(x));
    CHECK(ball(*m, 0).size() == 1);
  }
}

TEST_CASE("homomorphism evaluation") {
  const ModelPtr zc2 = GroupModel::zr(1, {2});
  const Homomorphism proj = Homomorphism::to_zr(zc2, {{1}, {0}});
  CHECK(hom_apply(proj, Element{5, 1}) == Element{5});
  CHECK(hom_apply(proj, zc2->identity()) == proj.target().identity());
  const ModelPtr f = GroupModel::free_group(2);
  const Homomorphism a_exp = Homomorphism::to_zr(f, {{1}, {0}});
  CHECK(hom_apply(a_exp, parse_word("abAB", 2)) == Element{0});
  const Ball b = ball(*f, 3);
  for (const auto& x : b)
    for (const auto& y : b) CHECK(a_exp.apply(f->mul(x, y)) == a_exp.target().mul(a_exp.apply(x), a_exp.apply(y)));
}
