// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "../oracles.hpp"

#include "semicover/cli.hpp"
#include "semicover/cone_io.hpp"
#include "semicover/cover_engine.hpp"
#include "semicover/covering_number.hpp"
#include "semicover/fixtures.hpp"
#include "semicover/order_engine.hpp"
#include "semicover/presentation.hpp"
#include "semicover/smith.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

using namespace semicover;

namespace {

struct Check {
  std::ostringstream why;
  bool ok = true;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int n, const std::string& title, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= limit_s) c.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
  if (!c.ok) ++failures;
  std::printf("%s criterion %d: %s (%.3f s)%s%s\n", c.ok ? "PASS" : "FAIL", n, title.c_str(), secs,
              c.ok ? "" : " -- ", c.why.str().c_str());
  std::fflush(stdout);
}

std::string fmt(const GroupModel& m, const std::vector<Element>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : " ") + m.format(x);
  return s;
}

}  // namespace

int main() {
  criterion(1, "Z x C2 overlapping cover: intersection, swap, witness, pullback round trip", 1.0, [](Check& c) {
    const ModelPtr m = parse_model_selector("z^1xC2");
    const ConeSet a = load_cone_file(data_dir() / "cones/zxc2/A.json", m);
    const ConeSet b = load_cone_file(data_dir() / "cones/zxc2/B.json", m);
    const Ball d = ball(*m, 8);

    const CoverPair raw = make_cover_pair(m, a, b, 8);
    c.require(raw.flags.closed_a.ok() && raw.flags.closed_b.ok() && raw.flags.covers.ok(), "raw pair is not a cover");
    c.require(!raw.flags.trivial_intersection.ok(), "intersection reported trivial");
    const auto inter = members(a & b, d);
    c.require(inter == std::vector<Element>{Element{0, 0}, Element{0, 1}}, "intersection is " + fmt(*m, inter));

    const Reduction red = reduce_cover(m, a, b, 8);
    c.require(red.swapped, "swap branch did not fire");
    c.require(red.cover.flags.all_verified(), "reduced cover fails a verdict");

    const WitnessDerivation w = derive_order_witness(m, a, b, 8, 8);
    const auto kernel = members(w.witness.kernel, d);
    c.require(kernel == std::vector<Element>{Element{0, 0}, Element{0, 1}}, "kernel is " + fmt(*m, kernel));
    for (const auto& x : d) {
      c.require(w.witness.cone.contains(x) == (x[0] >= 0), "cone is not the standard Z order at " + m->format(x));
    }
    const CoverPair back = pullback_cover(w.witness, 8);
    c.require(extensionally_equal(back.a, red.cover.a, d).ok(), "pullback A differs from normalized A");
    c.require(extensionally_equal(back.b, red.cover.b, d).ok(), "pullback B differs from normalized B");
  });

  criterion(2, "klein bottle presentation: Z + Z/2 and a cover passing every verdict at radius 8", 1.0, [](Check& c) {
    const PresentationData p =
        analyze_presentation(load_presentation_file(data_dir() / "presentations/klein_bottle.fp"), 8);
    // oracle: [[2,0]] has rank 1 over Q and gcd of its entries 2
    c.require(p.exponents == to_int_matrix({{2, 0}}), "exponent matrix");
    const int rank = oracle::rational_rank(p.exponents);
    c.require(rank == 1 && oracle::determinantal_divisor(p.exponents, 1) == 2, "oracle disagreement on [[2,0]]");
    c.require(p.snf.diagonal == std::vector<BigInt>{2}, "SNF diagonal");
    c.require(p.free_rank == 2 - rank, "free rank");
    c.require(p.abelianization() == "Z^1 + Z/2", "abelianization " + p.abelianization());
    c.require(p.cover.has_value(), "no cover certificate");
    if (!p.cover) return;
    const CoverFlags& f = p.cover->flags;
    for (const Verdict* v : {&f.closed_a, &f.closed_b, &f.covers, &f.proper_a, &f.proper_b, &f.trivial_intersection,
                             &f.inverse_duality}) {
      c.require(v->ok() && v->radius_checked == 8, "verdict not verified at radius 8");
    }
    const CoverPair again = make_cover_pair(GroupModel::klein_bottle(), p.cover->a, p.cover->b, 8);
    c.require(again.flags.all_verified(), "re-check on a fresh model failed");
  });

  criterion(3, "reduction properties on 100 seeded pullback covers, faults caught with witnesses", 30.0, [](Check& c) {
    const Json r = verify_suite("lemmas", 42, 5, kExhaustiveCap);
    for (const auto& prop : r["properties"]) {
      c.require(prop["failed"] == 0 && prop["passed"] == 100,
                prop["property"].get<std::string>() + ": " + prop["first_counterexample"].dump());
    }
    c.require(!r["fault_samples"].empty(), "no fault witness recorded");
    for (const auto& s : r["fault_samples"]) c.require(!s["caught_by"]["witness"].empty(), "fault without witness");
    c.require(r["passed_all"] == true, "suite reported failure");
  });

  criterion(4, "every closed subset of a group of order <= 8 is a subgroup; no two-subsemigroup covers", 10.0,
            [](Check& c) {
              int groups = 0;
              for (const auto& name : fixture_names()) {
                const FiniteGroup g = load_fixture_group(name);
                if (g.order() > 8) continue;
                ++groups;
                const SemigroupCensus census = subsemigroup_census(g, 8);
                c.require(census.exhaustive, name + ": census not exhaustive");
                c.require(census.all_subgroups(), name + ": closed subset that is not a subgroup");
                c.require(two_cover_search(g, 8).covers.empty(), name + ": two-subsemigroup cover found");
                const oracle::Table t = oracle::read_table((data_dir() / "groups" / (name + ".tbl")).string());
                c.require(oracle::two_covers(t) == 0, name + ": oracle found a two-cover");
              }
              c.require(groups >= 10, "too few fixtures of order <= 8");
            });

  criterion(5, "sigma_s = sigma_g, brute-force values, Klein-four criterion on all fixtures", 30.0, [](Check& c) {
    for (const auto& name : fixture_names()) {
      const FiniteGroup g = load_fixture_group(name);
      const oracle::Table t = oracle::read_table((data_dir() / "groups" / (name + ".tbl")).string());
      const CoveringNumberResult r = sigma_s_finite(g, name, true, 12);
      const int brute = oracle::sigma_brute(t);
      c.require(r.sigma_g.value_or(-1) == brute, name + ": sigma_g disagrees with brute force");
      c.require(r.sigma_s.value_or(-1) == oracle::sigma_semigroup_brute(t), name + ": sigma_s disagrees");
      c.require(r.sigma_s == r.sigma_g, name + ": sigma_s != sigma_g");
      c.require(r.sigma_g != 2 && r.sigma_g != 7, name + ": forbidden value");
      if (name == "V4") c.require(r.sigma_g == 3, "sigma(V4) != 3");
      if (name == "S3") c.require(r.sigma_g == 4, "sigma(S3) != 4");
      const ScorzaResult s = scorza_check(g);
      c.require(s.agree() && s.klein_four_quotient == oracle::klein_quotient(t), name + ": Klein-four criterion");
    }
  });

  criterion(6, "lex_combine gives the lex order on Z^2; totality and left invariance of every witness", 5.0,
            [](Check& c) {
              const ModelPtr z2 = GroupModel::zr(2);
              const Homomorphism p1 = Homomorphism::to_zr(z2, {{1}, {0}});
              const Homomorphism p2 = Homomorphism::to_zr(z2, {{0}, {1}});
              const LeftOrderWitness w1{z2, ConeSet::pullback(p1, Region::lex_zero),
                                        ConeSet::pullback(p1, Region::lex_nonneg)};
              const LeftOrderWitness w2{z2, ConeSet::pullback(p2, Region::lex_zero),
                                        ConeSet::pullback(p2, Region::lex_nonneg)};
              const Comparator cmp = comparator(lex_combine(w1, w2));
              const Ball b10 = ball(*z2, 10);
              for (const auto& x : b10)
                for (const auto& y : b10) {
                  const std::weak_ordering direct = x[0] != y[0] ? x[0] <=> y[0] : x[1] <=> y[1];
                  if (cmp.compare(x, y) != direct) {
                    c.require(false, "disagreement at " + z2->format(x) + ", " + z2->format(y));
                    return;
                  }
                }
              for (const auto& fw : bundled_witnesses()) {
                const GroupModel& m = *fw.witness.model;
                c.require(check_totality(fw.witness, 6).ok(), fw.name + ": totality");
                c.require(check_left_invariance(fw.witness, ball(m, 1), ball(m, 6)).ok(), fw.name + ": left invariance");
              }
            });

  criterion(7, "merge_covers: A1 in A', B' in B1, symmetric part = N1 meet N2 on ball(6)", 5.0, [](Check& c) {
    std::map<std::string, std::vector<FixtureCover>> by_model;
    for (auto& fc : bundled_covers())
      if (fc.normalized) by_model[fc.model->name()].push_back(fc);
    int pairs = 0;
    for (const auto& [model, covers] : by_model) {
      for (const auto& f1 : covers)
        for (const auto& f2 : covers) {
          const ModelPtr& m = f1.model;
          const Ball d = ball(*m, 6);
          const CoverPair c1{m, f1.a, f1.b, {}, 6}, c2{m, f2.a, f2.b, {}, 6};
          const MergeResult r = merge_covers(c1, c2, 6);
          const std::string tag = f1.name + " + " + f2.name;
          c.require(is_subset_on(f1.a, r.cover.a, d).ok(), tag + ": A1 not inside A'");
          c.require(is_subset_on(r.cover.b, f1.b, d).ok(), tag + ": B' not inside B1");
          const ConeSet meet = symmetric_part(*m, f1.b) & symmetric_part(*m, f2.b);
          c.require(extensionally_equal(symmetric_part(*m, r.cover.b), meet, d).ok(), tag + ": symmetric part");
          c.require(r.ok(), tag + ": merge self-check");
          ++pairs;
        }
    }
    c.require(pairs >= 10, "too few fixture pairs");
  });

  criterion(8, "Smith normal form battery and the quaternion presentation", 10.0, [](Check& c) {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> dim(1, 10), entry(-20, 20);
    for (int trial = 0; trial < 200; ++trial) {
      const auto rows = static_cast<std::size_t>(dim(rng)), cols = static_cast<std::size_t>(dim(rng));
      IntMatrix m(rows, std::vector<BigInt>(cols));
      for (auto& row : m)
        for (auto& x : row) x = entry(rng);
      const SmithForm f = smith_normal_form(m, cols);
      bool ok = multiply(multiply(f.left, m, rows), f.right, cols) == f.d;
      const BigInt dl = oracle::det_rational(f.left), dr = oracle::det_rational(f.right);
      ok = ok && (dl == 1 || dl == -1) && (dr == 1 || dr == -1);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) ok = ok && (i == j || f.d[i][j] == 0);
      for (std::size_t i = 0; i + 1 < f.diagonal.size(); ++i) {
        ok = ok && f.diagonal[i] >= 0;
        ok = ok && (f.diagonal[i] == 0 ? f.diagonal[i + 1] == 0 : f.diagonal[i + 1] % f.diagonal[i] == 0);
      }
      ok = ok && static_cast<int>(f.nonzero_count()) == oracle::rational_rank(m);
      c.require(ok, "matrix #" + std::to_string(trial));
    }
    const PresentationData q =
        analyze_presentation(load_presentation_file(data_dir() / "presentations/quaternion.fp"), 4);
    c.require(q.free_rank == 0 && q.torsion == std::vector<BigInt>{2, 2}, "quaternion abelianization");
    c.require(oracle::determinantal_divisor(q.exponents, 1) == 2 && oracle::determinantal_divisor(q.exponents, 2) == 4,
              "oracle disagrees with C2 x C2");
    c.require(q.verdict() == "inconclusive by abelian test", "quaternion verdict " + q.verdict());
  });

  return failures == 0 ? 0 : 1;
}
