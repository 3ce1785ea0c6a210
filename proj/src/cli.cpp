#include "semicover/cli.hpp"

#include "semicover/cover_engine.hpp"
#include "semicover/covering_number.hpp"
#include "semicover/errors.hpp"
#include "semicover/fixtures.hpp"
#include "semicover/order_engine.hpp"
#include "semicover/presentation.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace semicover {

namespace {

Json big_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(x);
  }
  return x.str();
}

Json matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(big_json(x));
    out.push_back(std::move(r));
  }
  return out;
}

Json elements_json(const std::vector<Element>& xs, const GroupModel& m) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(m.format(x));
  return out;
}

Json flags_json(const CoverFlags& f, const GroupModel& m) {
  Json out;
  out["closed_A"] = verdict_json(f.closed_a, m);
  out["closed_B"] = verdict_json(f.closed_b, m);
  out["covers"] = verdict_json(f.covers, m);
  out["proper_A"] = verdict_json(f.proper_a, m);
  out["proper_B"] = verdict_json(f.proper_b, m);
  out["trivial_intersection"] = verdict_json(f.trivial_intersection, m);
  out["inverse_duality"] = verdict_json(f.inverse_duality, m);
  return out;
}

// First failing flag in reporting order, if any.
std::optional<std::pair<std::string, Verdict>> first_failure(const CoverFlags& f) {
  const std::pair<const char*, const Verdict*> all[] = {
      {"closed_A", &f.closed_a}, {"closed_B", &f.closed_b}, {"covers", &f.covers},
      {"proper_A", &f.proper_a}, {"proper_B", &f.proper_b}, {"trivial_intersection", &f.trivial_intersection},
      {"inverse_duality", &f.inverse_duality}};
  for (const auto& [name, v] : all)
    if (!v->ok()) return std::make_pair(std::string(name), *v);
  return std::nullopt;
}

Json cover_json(const CoverPair& c) {
  Json out;
  out["model"] = c.model->name();
  out["radius"] = c.radius;
  out["A"] = cone_to_json(c.a);
  out["B"] = cone_to_json(c.b);
  out["verdicts"] = flags_json(c.flags, *c.model);
  return out;
}

Json subset_json(const Subset& s) { return subset_indices(s); }

Json witness_json(const LeftOrderWitness& w) {
  Json out;
  out["model"] = w.model->name();
  out["kernel"] = cone_to_json(w.kernel);
  out["cone"] = cone_to_json(w.cone);
  return out;
}

Json validation_json(const LeftOrderWitness& w, int radius, bool& ok) {
  const WitnessCheck c = validate_witness(w, radius);
  const Verdict total = check_totality(w, radius);
  const Ball domain = verification_domain(*w.model, radius);
  const Verdict invariant = check_left_invariance(w, ball(*w.model, 1), domain);
  const GroupModel& m = *w.model;
  Json out;
  out["kernel_inverse_closed"] = verdict_json(c.kernel_inverse_closed, m);
  out["kernel_closed"] = verdict_json(c.kernel_closed, m);
  out["kernel_normal"] = verdict_json(c.kernel_normal, m);
  out["kernel_in_cone"] = verdict_json(c.kernel_in_cone, m);
  out["cone_closed"] = verdict_json(c.cone_closed, m);
  out["cone_covers"] = verdict_json(c.cone_covers, m);
  out["cone_meet_in_kernel"] = verdict_json(c.cone_meet_in_kernel, m);
  out["totality"] = verdict_json(total, m);
  out["left_invariance"] = verdict_json(invariant, m);
  ok = c.ok() && total.ok() && invariant.ok();
  return out;
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedTable:
    case ErrorCode::NotAGroup:
    case ErrorCode::InvalidElement:
    case ErrorCode::InvalidHomomorphism:
    case ErrorCode::BallTooLarge:
    case ErrorCode::ModelMismatch:
    case ErrorCode::UnsupportedCone:
    case ErrorCode::MatrixTooLarge:
    case ErrorCode::ParseError:
    case ErrorCode::GroupTooLarge:
    case ErrorCode::UnknownSuite:
      return true;
    default:
      return false;
  }
}

int exhaustive_cap(const std::optional<int>& cap) {
  if (cap) return *cap;
  if (const char* env = std::getenv("SEMICOVER_CAP"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0) throw Error(ErrorCode::ParseError, "SEMICOVER_CAP must be a non-negative integer");
    return static_cast<int>(v);
  }
  return kExhaustiveCap;
}

template <class F>
auto with_source(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), what + ": " + e.what(), e.witness());
  }
}

struct Inputs {
  ModelPtr model;
  ConeSet a;
  ConeSet b;
};

Inputs load_inputs(const RunConfig& c) {
  if (c.model.empty()) throw Error(ErrorCode::ParseError, "--model is required");
  if (c.cone_a.empty() || c.cone_b.empty()) throw Error(ErrorCode::ParseError, "--A and --B are required");
  ModelPtr model = with_source("--model " + c.model, [&] { return parse_model_selector(c.model); });
  ConeSet a = with_source("--A " + c.cone_a, [&] { return load_cone_file(c.cone_a, model); });
  ConeSet b = with_source("--B " + c.cone_b, [&] { return load_cone_file(c.cone_b, model); });
  return Inputs{model, a, b};
}

RunResult run_analyze(const RunConfig& c) {
  if (c.presentation.empty()) throw Error(ErrorCode::ParseError, "--presentation is required");
  const Presentation p = with_source("--presentation " + c.presentation,
                                     [&] { return load_presentation_file(c.presentation); });
  const PresentationData d = analyze_presentation(p, c.radius);
  Json r;
  r["command"] = "analyze";
  r["presentation"] = c.presentation;
  Json gens = Json::array();
  for (char g : p.generators) gens.push_back(std::string(1, g));
  r["generators"] = gens;
  r["relators"] = p.relator_text;
  r["exponent_matrix"] = matrix_json(d.exponents);
  Json snf;
  Json diag = Json::array();
  for (const auto& x : d.snf.diagonal) diag.push_back(big_json(x));
  snf["diagonal"] = diag;
  snf["left"] = matrix_json(d.snf.left);
  snf["right"] = matrix_json(d.snf.right);
  r["smith"] = snf;
  r["free_rank"] = d.free_rank;
  Json tors = Json::array();
  for (const auto& t : d.torsion) tors.push_back(big_json(t));
  r["torsion"] = tors;
  r["abelianization"] = d.abelianization();
  r["z_surjection"] = d.z_surjection;
  r["model"] = d.model ? Json(d.model->name()) : Json(nullptr);
  r["verdict"] = d.verdict();
  if (!d.has_abelian_witness()) {
    r["note"] = "a trivial free rank does not rule out a left-orderable quotient";
  } else if (!d.model) {
    r["note"] = "no bundled model matches this presentation; cover not evaluated";
  }
  int exit = kExitOk;
  if (d.cover) {
    r["cover"] = cover_json(*d.cover);
    if (!d.cover->flags.all_verified()) exit = kExitNegative;
  } else {
    r["cover"] = nullptr;
  }
  return RunResult{exit, r};
}

RunResult run_check_cover(const RunConfig& c, bool reduce_requested) {
  const Inputs in = load_inputs(c);
  Json r;
  r["command"] = reduce_requested && c.subcommand == "reduce" ? "reduce" : "check-cover";
  r["model"] = in.model->name();
  r["radius"] = c.radius;
  CoverPair cover = make_cover_pair(in.model, in.a, in.b, c.radius);
  if (reduce_requested) {
    r["input_verdicts"] = flags_json(cover.flags, *in.model);
    const Reduction red = reduce_cover(in.model, in.a, in.b, c.radius);
    Json rj;
    rj["side"] = std::string(to_string(red.side));
    rj["swapped"] = red.swapped;
    r["reduction"] = rj;
    cover = red.cover;
  }
  r["cover"] = cover_json(cover);
  const auto fail = first_failure(cover.flags);
  r["verified"] = !fail.has_value();
  if (fail) {
    r["failed"] = fail->first;
    r["witness"] = elements_json(fail->second.witness, *in.model);
    return RunResult{kExitNegative, r};
  }
  return RunResult{kExitOk, r};
}

Json descent_json(const DescentState& st) {
  const GroupModel& m = *st.current.model;
  Json out;
  out["outcome"] = std::string(to_string(st.outcome));
  out["steps"] = st.step;
  Json hist = Json::array();
  for (const auto& h : st.history) {
    Json s;
    s["g"] = m.format(h.g);
    s["moved"] = m.format(h.moved);
    s["V_size_before"] = h.v_size_before;
    s["V_size_after"] = h.v_size_after;
    hist.push_back(std::move(s));
  }
  out["history"] = hist;
  out["cover"] = cover_json(st.current);
  out["N"] = st.normal ? cone_to_json(*st.normal) : Json(nullptr);
  return out;
}

RunResult run_descend(const RunConfig& c) {
  const Inputs in = load_inputs(c);
  const Reduction red = reduce_cover(in.model, in.a, in.b, c.radius);
  const DescentState st = minimal_pair_descent(red.cover, c.max_depth);
  Json r;
  r["command"] = "descend";
  r["model"] = in.model->name();
  r["radius"] = c.radius;
  r["max_depth"] = c.max_depth;
  r["descent"] = descent_json(st);
  return RunResult{st.outcome == DescentOutcome::normal_found ? kExitOk : kExitNegative, r};
}

RunResult run_witness(const RunConfig& c) {
  const Inputs in = load_inputs(c);
  Json r;
  r["command"] = "witness";
  r["model"] = in.model->name();
  r["radius"] = c.radius;
  try {
    const WitnessDerivation d = derive_order_witness(in.model, in.a, in.b, c.radius, c.max_depth);
    r["reduction"] = Json{{"side", std::string(to_string(d.reduction.side))}, {"swapped", d.reduction.swapped}};
    r["descent"] = descent_json(d.descent);
    r["witness"] = witness_json(d.witness);
    bool ok = false;
    r["validation"] = validation_json(d.witness, c.radius, ok);
    r["verified"] = ok;
    return RunResult{ok ? kExitOk : kExitNegative, r};
  } catch (const DepthExceededError& e) {
    r["error"] = std::string(to_string(e.code()));
    r["message"] = e.what();
    r["descent"] = descent_json(e.state());
    r["witness"] = elements_json(e.witness(), *in.model);
    return RunResult{kExitNegative, r};
  }
}

RunResult run_sigma(const RunConfig& c) {
  const int cap = exhaustive_cap(c.cap);
  std::string id;
  FiniteGroup group = [&] {
    if (!c.fixture.empty()) {
      id = c.fixture;
      return with_source("--fixture " + c.fixture, [&] { return load_fixture_group(c.fixture); });
    }
    if (!c.table.empty()) {
      id = c.table;
      return with_source("--table " + c.table, [&] { return load_finite_group_file(c.table); });
    }
    throw Error(ErrorCode::ParseError, "--fixture or --table is required");
  }();
  const bool exhaustive = c.exhaustive;
  const CoveringNumberResult res = sigma_s_finite(group, id, exhaustive, exhaustive ? cap : kSubgroupCap);
  const ScorzaResult sc = scorza_check(group);
  Json r;
  r["command"] = "sigma";
  r["group"] = id;
  r["order"] = group.order();
  r["sigma_g"] = res.sigma_g ? Json(*res.sigma_g) : Json("undefined");
  r["sigma_s"] = res.sigma_s ? Json(*res.sigma_s) : Json("undefined");
  r["method"] = std::string(to_string(res.method));
  if (res.methods_agree) r["methods_agree"] = *res.methods_agree;
  Json cover = Json::array();
  for (const auto& s : res.witness_cover) cover.push_back(subset_json(s));
  r["witness_cover"] = cover;
  r["scorza"] = Json{{"sigma_is_three", sc.sigma_is_three},
                     {"klein_four_quotient", sc.klein_four_quotient},
                     {"agree", sc.agree()}};
  if (group.order() <= cap) {
    const TorsionReport t = torsion_obstruction(group, cap);
    r["two_subsemigroup_covers"] = t.covers_found;
    r["closed_subsets"] = t.closed_subsets;
  }
  r["note"] = "sigma_s = sigma_g here is evidence on one group, not a general result";
  const bool agree = sc.agree() && res.methods_agree.value_or(true);
  return RunResult{agree ? kExitOk : kExitNegative, r};
}

RunResult run_verify(const RunConfig& c) {
  if (c.suite.empty()) throw Error(ErrorCode::ParseError, "--suite is required");
  Json r = verify_suite(c.suite, c.seed, c.radius, exhaustive_cap(c.cap));
  return RunResult{r.value("passed_all", false) ? kExitOk : kExitNegative, r};
}

// ---- suites

struct Tally {
  std::string name;
  int passed = 0;
  int failed = 0;
  Json first_counterexample = nullptr;

  void record(bool ok, const std::function<Json()>& detail) {
    if (ok) {
      ++passed;
      return;
    }
    ++failed;
    if (first_counterexample.is_null()) first_counterexample = detail();
  }
  Json json() const {
    return Json{{"property", name}, {"passed", passed}, {"failed", failed},
                {"first_counterexample", first_counterexample}};
  }
};

Json verdict_detail(const std::string& where, const Verdict& v, const GroupModel& m) {
  return Json{{"case", where}, {"verdict", verdict_json(v, m)}};
}

Json lemma_suite(std::uint64_t seed, int radius) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> rank(1, 2);
  const std::vector<ModelPtr> models{GroupModel::zr(2), GroupModel::heisenberg(), GroupModel::klein_bottle(),
                                     GroupModel::free_group(2)};
  Tally flags{"normalized flags"}, saturation{"coset saturation"}, duality{"inverse duality"},
      a_closed{"A-{1} closed"}, idempotent{"reduce idempotent"}, faults{"fault caught"};
  Json fault_witnesses = Json::array();
  for (int i = 0; i < 100; ++i) {
    const ModelPtr& model = models[static_cast<std::size_t>(i) % models.size()];
    const int r = rank(rng);
    std::vector<std::vector<Coord>> images;
    bool trivial = true;
    do {
      images.clear();
      for (std::size_t g = 0; g < model->generator_count(); ++g) {
        std::vector<Coord> v;
        for (int k = 0; k < r; ++k) v.push_back(entry(rng));
        // 2a = 0 in the abelianization of the Klein bottle group
        if (model->kind() == ModelKind::klein_bottle && g == 0) v.assign(static_cast<std::size_t>(r), 0);
        images.push_back(std::move(v));
      }
      trivial = true;
      for (const auto& v : images)
        for (Coord x : v) trivial = trivial && x == 0;
    } while (trivial);
    const Homomorphism hom = Homomorphism::to_zr(model, images);
    std::vector<int> coords(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) coords[static_cast<std::size_t>(k)] = k;
    const ConeSet lex = ConeSet::coordinates(hom.target_ptr(), coords, Region::lex_nonneg);
    const std::string label = model->name() + " #" + std::to_string(i);

    const CoverPair pc = pullback_cover(model, hom, lex, radius);
    const Reduction red = reduce_cover(model, pc.a, pc.b, radius);
    const CoverPair& cv = red.cover;
    const Ball domain = verification_domain(*model, radius);
    flags.record(cv.flags.all_verified(), [&] {
      return Json{{"case", label}, {"failed", first_failure(cv.flags)->first}};
    });
    const Verdict sat = check_coset_saturation(cv, radius);
    saturation.record(sat.ok(), [&] { return verdict_detail(label, sat, *model); });
    const Verdict dual = check_inverse_duality(cv, radius);
    duality.record(dual.ok(), [&] { return verdict_detail(label, dual, *model); });
    const Verdict closed = is_subsemigroup(cv.a - ConeSet::identity(model), domain);
    a_closed.record(closed.ok(), [&] { return verdict_detail(label, closed, *model); });
    const Reduction again = reduce_cover(model, cv.a, cv.b, radius);
    const Verdict same_a = extensionally_equal(again.cover.a, cv.a, domain);
    const Verdict same_b = extensionally_equal(again.cover.b, cv.b, domain);
    idempotent.record(same_a.ok() && same_b.ok(),
                      [&] { return verdict_detail(label, same_a.ok() ? same_b : same_a, *model); });

    // move one element of A-{1} across the boundary
    const auto a_rest = members(cv.a - ConeSet::identity(model), domain);
    std::uniform_int_distribution<std::size_t> pick(0, a_rest.size() - 1);
    const Element x = a_rest[pick(rng)];
    const ConeSet moved = ConeSet::explicit_set(model, {x});
    const CoverPair bad = make_cover_pair(model, cv.a - moved, cv.b | moved, radius);
    const Verdict bad_sat = check_coset_saturation(bad, radius);
    const Verdict bad_dual = check_inverse_duality(bad, radius);
    const Verdict* hit = nullptr;
    for (const Verdict* v : {&bad_sat, &bad_dual, &bad.flags.closed_b})
      if (!hit && !v->ok() && !v->witness.empty()) hit = v;
    faults.record(hit != nullptr, [&] { return Json{{"case", label}, {"moved", model->format(x)}}; });
    if (hit && fault_witnesses.size() < 4) {
      fault_witnesses.push_back(Json{{"case", label}, {"moved", model->format(x)}, {"caught_by", verdict_json(*hit, *model)}});
    }
  }
  Json props = Json::array();
  bool all = true;
  for (const Tally* t : {&flags, &saturation, &duality, &a_closed, &idempotent, &faults}) {
    props.push_back(t->json());
    all = all && t->failed == 0;
  }
  return Json{{"suite", "lemmas"}, {"seed", seed}, {"radius", radius}, {"covers", 100},
              {"properties", props}, {"fault_samples", fault_witnesses}, {"passed_all", all}};
}

Json roundtrip_suite(int radius, int max_depth) {
  Tally from_witness{"witness -> cover -> witness"}, from_cover{"cover -> witness -> cover"};
  for (const auto& fw : bundled_witnesses()) {
    const LeftOrderWitness& w = fw.witness;
    const CoverPair c = pullback_cover(w, radius);
    const LeftOrderWitness back = order_witness_from_cover(w.model, c.a, c.b, radius, max_depth);
    const Ball domain = verification_domain(*w.model, radius);
    const Verdict k = extensionally_equal(back.kernel, w.kernel, domain);
    const Verdict p = extensionally_equal(back.cone, w.cone, domain);
    from_witness.record(k.ok() && p.ok(), [&] { return verdict_detail(fw.name, k.ok() ? p : k, *w.model); });
  }
  for (const auto& fc : bundled_covers()) {
    const WitnessDerivation d = derive_order_witness(fc.model, fc.a, fc.b, radius, max_depth);
    const CoverPair c = pullback_cover(d.witness, radius);
    const Ball domain = verification_domain(*fc.model, radius);
    // normalized fixtures must come back unchanged; the rest as their descended form
    const ConeSet& ref_a = fc.normalized ? fc.a : d.descent.current.a;
    const ConeSet& ref_b = fc.normalized ? fc.b : d.descent.current.b;
    const Verdict a = extensionally_equal(c.a, ref_a, domain);
    const Verdict b = extensionally_equal(c.b, ref_b, domain);
    from_cover.record(a.ok() && b.ok(), [&] { return verdict_detail(fc.name, a.ok() ? b : a, *fc.model); });
  }
  Json props = Json::array({from_witness.json(), from_cover.json()});
  const bool all = from_witness.failed == 0 && from_cover.failed == 0;
  return Json{{"suite", "roundtrip"}, {"radius", radius}, {"properties", props}, {"passed_all", all}};
}

Json finite_suite(int cap) {
  Tally sigma_range{"sigma_g not 2 or 7"}, torsion{"sigma_s = sigma_g"}, scorza{"scorza agreement"},
      census{"closed subsets are subgroups"}, two_cover{"no two-subsemigroup cover"};
  Json rows = Json::array();
  for (const auto& name : fixture_names()) {
    const FiniteGroup g = load_fixture_group(name);
    const bool small = g.order() <= cap;
    const CoveringNumberResult res = sigma_s_finite(g, name, small, small ? cap : kSubgroupCap);
    const ScorzaResult sc = scorza_check(g);
    Json row{{"group", name},
             {"order", g.order()},
             {"sigma_g", res.sigma_g ? Json(*res.sigma_g) : Json("undefined")},
             {"sigma_s", res.sigma_s ? Json(*res.sigma_s) : Json("undefined")},
             {"klein_four_quotient", sc.klein_four_quotient}};
    sigma_range.record(res.sigma_g != 2 && res.sigma_g != 7, [&] { return row; });
    torsion.record(res.methods_agree.value_or(true), [&] { return row; });
    scorza.record(sc.agree(), [&] { return row; });
    if (small) {
      const SemigroupCensus cs = subsemigroup_census(g, cap);
      census.record(cs.all_subgroups(), [&] {
        return Json{{"group", name}, {"closed_subset", subset_json(cs.exceptions.front())}};
      });
      const TwoCoverReport tc = two_cover_search(g, cap);
      two_cover.record(tc.covers.empty(), [&] {
        return Json{{"group", name},
                    {"cover", Json::array({subset_json(tc.covers.front().first),
                                           subset_json(tc.covers.front().second)})}};
      });
      row["closed_subsets"] = cs.closed.size();
      row["two_covers"] = tc.covers.size();
    }
    rows.push_back(std::move(row));
  }
  Json props = Json::array();
  bool all = true;
  for (const Tally* t : {&sigma_range, &torsion, &scorza, &census, &two_cover}) {
    props.push_back(t->json());
    all = all && t->failed == 0;
  }
  return Json{{"suite", "finite"}, {"cap", cap}, {"groups", rows}, {"properties", props}, {"passed_all", all}};
}

void render(const Json& j, const std::string& indent, std::ostringstream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = j.is_object() ? it.key() : "-";
    const Json& v = *it;
    if (v.is_object() && v.contains("status") && v.contains("radius")) {
      out << indent << key << ": at radius " << v["radius"].get<int>() << (v["exact"].get<bool>() ? " (exact)" : "")
          << ": " << v["status"].get<std::string>();
      if (!v["witness"].empty()) out << " witness " << v["witness"].dump();
      out << "\n";
    } else if (v.is_object() || (v.is_array() && !v.empty() && v.front().is_structured())) {
      out << indent << key << ":\n";
      render(v, indent + "  ", out);
    } else {
      out << indent << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

}  // namespace

Json verdict_json(const Verdict& v, const GroupModel& model) {
  Json out;
  out["status"] = std::string(to_string(v.status));
  out["radius"] = v.radius_checked;
  out["exact"] = v.exact;
  out["witness"] = elements_json(v.witness, model);
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

Json verify_suite(const std::string& name, std::uint64_t seed, int radius, int cap) {
  if (name == "lemmas") return lemma_suite(seed, radius);
  if (name == "roundtrip") return roundtrip_suite(radius, 8);
  if (name == "finite") return finite_suite(cap);
  throw Error(ErrorCode::UnknownSuite, "unknown suite '" + name + "' (expected lemmas, roundtrip or finite)");
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(report, "", out);
  return out.str();
}

RunResult run(const RunConfig& c) {
  if (c.radius < 1) throw Error(ErrorCode::ParseError, "--radius must be at least 1");
  if (c.max_depth < 0) throw Error(ErrorCode::ParseError, "--max-depth must be non-negative");
  try {
    if (c.subcommand == "analyze") return run_analyze(c);
    if (c.subcommand == "check-cover") return run_check_cover(c, c.reduce);
    if (c.subcommand == "reduce") return run_check_cover(c, true);
    if (c.subcommand == "descend") return run_descend(c);
    if (c.subcommand == "witness") return run_witness(c);
    if (c.subcommand == "sigma") return run_sigma(c);
    if (c.subcommand == "verify") return run_verify(c);
  } catch (const Error& e) {
    if (is_input_error(e.code())) throw;
    Json r;
    r["command"] = c.subcommand;
    r["error"] = std::string(to_string(e.code()));
    r["message"] = e.what();
    Json w = Json::array();
    if (!c.model.empty()) {
      const ModelPtr m = parse_model_selector(c.model);
      w = elements_json(e.witness(), *m);
    }
    r["witness"] = w;
    return RunResult{kExitNegative, r};
  }
  throw Error(ErrorCode::ParseError, "unknown subcommand '" + c.subcommand + "'");
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Two-subsemigroup covers and left-orderable quotients", "semicover"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  auto common = [&](CLI::App* sub) {
    sub->add_option("--radius", c.radius, "Ball radius for verification")->check(CLI::PositiveNumber);
    sub->add_option("--output", c.output, "Write the report here instead of stdout");
    sub->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", c.seed, "Seed for randomized suites");
  };
  auto cover_inputs = [&](CLI::App* sub) {
    sub->add_option("--model", c.model, "finite:<path>, fixture:<name>, z^r[xCn...], free:k, heisenberg, klein_bottle")
        ->required();
    sub->add_option("--A,--cone-a", c.cone_a, "Cone file for A")->required();
    sub->add_option("--B,--cone-b", c.cone_b, "Cone file for B")->required();
    sub->add_option("--max-depth", c.max_depth, "Descent step limit")->check(CLI::NonNegativeNumber);
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Abelianization and cover certificate of a presentation");
  analyze->add_option("--presentation,presentation", c.presentation, "Presentation file")->required();
  common(analyze);

  CLI::App* check = app.add_subcommand("check-cover", "Check that two cones form a cover");
  cover_inputs(check);
  check->add_flag("--reduce", c.reduce, "Normalize before checking");
  common(check);

  CLI::App* reduce = app.add_subcommand("reduce", "Normalize a cover");
  cover_inputs(reduce);
  common(reduce);

  CLI::App* descend = app.add_subcommand("descend", "Refine until the B-side subgroup is normal");
  cover_inputs(descend);
  common(descend);

  CLI::App* witness = app.add_subcommand("witness", "Left-order witness from a cover");
  cover_inputs(witness);
  common(witness);

  CLI::App* sigma = app.add_subcommand("sigma", "Covering numbers of a finite group");
  sigma->add_option("--fixture", c.fixture, "Bundled table name");
  sigma->add_option("--table", c.table, "Cayley table file");
  sigma->add_flag("--exhaustive", c.exhaustive, "Recompute sigma_s from the subsemigroup census");
  sigma->add_option("--cap", c.cap, "Exhaustive order cap")->check(CLI::NonNegativeNumber);
  common(sigma);

  CLI::App* verify = app.add_subcommand("verify", "Run a bundled verification suite");
  verify->add_option("--suite", c.suite, "lemmas, roundtrip or finite")->required();
  verify->add_option("--cap", c.cap, "Exhaustive order cap")->check(CLI::NonNegativeNumber);
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "semicover: " << e.what() << "\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitInput;
  }
  c.subcommand = app.get_subcommands().front()->get_name();

  RunResult result;
  try {
    result = run(c);
  } catch (const Error& e) {
    err << "semicover: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "semicover: " << e.what() << "\n";
    return kExitInput;
  }
  const std::string body = c.format == "text" ? render_text(result.report) : result.report.dump(2) + "\n";
  if (c.output.empty()) {
    out << body;
  } else {
    std::ofstream f(c.output);
    if (!f) {
      err << "semicover: --output " << c.output << ": cannot open for writing\n";
      return kExitInput;
    }
    f << body;
  }
  return result.exit_code;
}

}  // namespace semicover
