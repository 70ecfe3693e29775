#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mvl/analysis.hpp"
#include "mvl/terms.hpp"
#include "support/oracle.hpp"

using namespace mvl;

namespace {

std::vector<oracle::Comp> comps_of(const ProductMatrix& m) {
  std::vector<oracle::Comp> out;
  for (const auto& c : m.components()) out.push_back({c.chain.size(), c.filter.threshold});
  return out;
}

// Oracle verdict over every member of a family.
bool oracle_holds(const LogicDescriptor& logic, const FormulaSet& gamma, const Formula& phi) {
  for (const auto& m : logic.family)
    if (oracle::first_counterexample(comps_of(m), gamma, phi)) return false;
  return true;
}

void expect_separation_confirmed(const Separation& s, const LogicDescriptor& first,
                                 const LogicDescriptor& second) {
  EXPECT_TRUE(s.holds.verdict.holds);
  EXPECT_FALSE(s.fails.verdict.holds);
  EXPECT_TRUE(oracle_holds(first, s.holds.gamma, s.holds.phi)) << to_string(s.holds);
  EXPECT_FALSE(oracle_holds(second, s.fails.gamma, s.fails.phi)) << to_string(s.fails);
  EXPECT_TRUE(replay(first, s.holds));
  EXPECT_TRUE(replay(second, s.fails));
}

std::set<std::string> names_where(const std::vector<ClassificationReport>& reports,
                                  std::optional<bool> ClassificationReport::*field) {
  std::set<std::string> out;
  for (const auto& r : reports)
    if ((r.*field).value_or(false)) out.insert(r.logic.name);
  return out;
}

std::set<std::string> saturated_names(const std::vector<ClassificationReport>& reports) {
  return names_where(reports, &ClassificationReport::saturated);
}

std::set<std::string> ideal_names(const std::vector<ClassificationReport>& reports) {
  return names_where(reports, &ClassificationReport::ideal);
}

const Formula p = var("p");
const Formula q = var("q");

}  // namespace

TEST(Paraconsistency, InvolutionVersusGodelNegation) {
  const auto g5 = named("G<=5~");
  const auto inv_result = is_paraconsistent(g5, Op::Inv);
  EXPECT_TRUE(inv_result.paraconsistent);
  ASSERT_TRUE(inv_result.witness.verdict.counterexample);
  EXPECT_TRUE(replay(g5, inv_result.witness));
  EXPECT_FALSE(is_paraconsistent(g5, Op::GNeg).paraconsistent);
  EXPECT_FALSE(is_paraconsistent(named("CPL")).paraconsistent);
}

TEST(Paraconsistency, HalfIsTheWitnessOnTheFullChain) {
  const auto r = is_paraconsistent(resolve_logic("GV5~[>=2]"));
  ASSERT_TRUE(r.witness.verdict.counterexample);
  const auto& cx = *r.witness.verdict.counterexample;
  // p is 1/2 in the least counterexample.
  EXPECT_EQ(cx.assignment.at("p"), (std::vector<Value>{2}));
}

TEST(Paraconsistency, AgreesWithOracleOverGodelCatalog) {
  const auto cat = enumerate_godel_catalog(5);
  for (const auto& e : cat.entries) {
    const auto r = is_paraconsistent(e.logic);
    const bool expected = oracle::first_counterexample(comps_of(e.matrix()), {p, inv(p)}, q).has_value();
    EXPECT_EQ(r.paraconsistent, expected) << e.logic.label();
    // Componentwise: a product is paraconsistent iff every component is.
    ASSERT_EQ(r.components.size(), 1u);
    const bool all = std::all_of(r.components[0].begin(), r.components[0].end(), [](bool b) { return b; });
    EXPECT_EQ(all, r.paraconsistent) << e.logic.label();
  }
}

TEST(Explosion, Landmarks) {
  QueryCertificate cert;
  EXPECT_TRUE(validates_explosion(named("Lexp(5)"), &cert));
  EXPECT_TRUE(replay(named("Lexp(5)"), cert));
  EXPECT_FALSE(validates_explosion(resolve_logic("GV5~[>=1]"), &cert));
  EXPECT_TRUE(replay(resolve_logic("GV5~[>=1]"), cert));
  EXPECT_TRUE(validates_explosion(named("CPL")));
}

TEST(Lfi, GodelConsistencyOnDegreeLogics) {
  for (int n = 3; n <= 7; ++n) {
    const auto logic = named("G<=" + std::to_string(n) + "~");
    const auto w = lfi_witness(logic, godel_consistency);
    EXPECT_TRUE(w.confirmed()) << n;
    for (const auto* c : {&w.paraconsistency, &w.trivialization, &w.positive, &w.negative})
      EXPECT_TRUE(replay(logic, *c)) << to_string(*c);
  }
}

TEST(Lfi, LukasiewiczConsistency) {
  const auto logic = named("L(2,1)");
  const auto w = lfi_witness(logic, [](const Formula& f) { return luk_consistency(2, 1, f); });
  EXPECT_TRUE(w.confirmed());
  for (int n : {4, 6}) {
    const auto l = named("L(" + std::to_string(n) + ",1)");
    EXPECT_TRUE(lfi_witness(l, [n](const Formula& f) { return luk_consistency(n, 1, f); }).confirmed()) << n;
  }
}

TEST(Lfi, ExplosiveLogicFailsPrecondition) {
  const auto w = lfi_witness(named("CPL"), [](const Formula&) { return top(); });
  EXPECT_FALSE(w.confirmed());
  EXPECT_TRUE(w.paraconsistency.verdict.holds);
}

TEST(Separation, J3AndJ4BothWays) {
  const auto j3 = named("J3"), j4 = named("J4");
  const auto a = find_separating_consequence(j3, j4);
  ASSERT_TRUE(a.separation);
  expect_separation_confirmed(*a.separation, j3, j4);
  const auto b = find_separating_consequence(j4, j3);
  ASSERT_TRUE(b.separation);
  expect_separation_confirmed(*b.separation, j4, j3);
}

TEST(Separation, StatedDifferencesOracle) {
  // Theorem of J3 refuted in J4, and the converse direction.
  const Formula e = iff(p, inv(p));
  const Formula j3_thm = disj(delta(e), gneg(e));
  const Formula j4_thm = inv(delta(e));
  const std::vector<oracle::Comp> j3{{3, 1}}, j4{{4, 1}};
  EXPECT_FALSE(oracle::first_counterexample(j3, {}, j3_thm));
  EXPECT_TRUE(oracle::first_counterexample(j4, {}, j3_thm));
  EXPECT_FALSE(oracle::first_counterexample(j4, {}, j4_thm));
  EXPECT_TRUE(oracle::first_counterexample(j3, {}, j4_thm));
  EXPECT_TRUE(entails(named("J3"), {}, j3_thm).holds);
  EXPECT_FALSE(entails(named("J4"), {}, j3_thm).holds);
  EXPECT_TRUE(entails(named("J4"), {}, j4_thm).holds);
  EXPECT_FALSE(entails(named("J3"), {}, j4_thm).holds);
}

TEST(Separation, SameLogicHasNone) {
  SearchBounds small;
  small.max_depth = 3;
  small.max_vars = 2;
  small.pool_cap = 300;
  small.pair_cap = 100;
  const auto j3 = named("J3");
  const auto r = find_separating_consequence(j3, j3, small);
  EXPECT_FALSE(r.separation);
  EXPECT_TRUE(r.exhausted_bounds);
}

TEST(Classification, GodelSaturatedMatchesTheorem) {
  ClassifyOptions opts;
  opts.workers = 4;
  for (int n = 3; n <= 7; ++n) {
    const auto cat = enumerate_godel_catalog(n, 3, 4);
    auto reports = classify_saturated(cat, opts);
    for (const auto& r : reports)
      if (r.paraconsistency.paraconsistent) EXPECT_TRUE(r.saturated.has_value()) << r.logic.label();
    const auto expected = expected_saturated_godel(n);
    EXPECT_EQ(saturated_names(reports), std::set<std::string>(expected.begin(), expected.end())) << n;
    classify_ideal(cat, reports, opts);
    const auto ideal = expected_ideal_godel(n);
    EXPECT_EQ(ideal_names(reports), std::set<std::string>(ideal.begin(), ideal.end())) << n;
  }
}

TEST(Classification, AuditCertificatesReplay) {
  const auto cat = enumerate_godel_catalog(5, 3, 4);
  auto reports = classify_saturated(cat, {.bounds = {}, .workers = 4});
  classify_ideal(cat, reports, {.bounds = {}, .workers = 4});
  for (const auto& r : reports) {
    EXPECT_TRUE(replay(r.logic, r.paraconsistency.witness));
    EXPECT_TRUE(replay(r.logic, r.explosion));
    for (const auto& a : r.audit) {
      if (!a.separation) continue;
      const auto& ext = cat.entries[a.entry].logic;
      expect_separation_confirmed(*a.separation, ext, r.logic);
    }
  }
}

TEST(Classification, NonIdealProductHasIntermediate) {
  const auto cat = enumerate_godel_catalog(5, 3, 4);
  auto reports = classify_saturated(cat, {.bounds = {}, .workers = 4});
  classify_ideal(cat, reports, {.bounds = {}, .workers = 4});
  const auto it = std::find_if(reports.begin(), reports.end(),
                               [](const auto& r) { return r.logic.name == "J3xJ4"; });
  ASSERT_NE(it, reports.end());
  EXPECT_EQ(it->ideal, false);
  ASSERT_TRUE(it->non_maximality);
  const auto& w = *it->non_maximality;
  EXPECT_EQ(w.intermediate, "J2xJ3");
  const auto mid = named(w.intermediate);
  EXPECT_TRUE(verify_certificate(mid.family.front(), it->logic.family.front(), w.lower));
  expect_separation_confirmed(w.above_logic, mid, it->logic);
  expect_separation_confirmed(w.below_cpl, named("CPL"), mid);
}

TEST(Classification, LukasiewiczIdeals) {
  for (int i : {1, 2}) {
    const auto cat = enumerate_luk_catalog(4, i);
    auto reports = classify_saturated(cat);
    classify_ideal(cat, reports);
    EXPECT_EQ(ideal_names(reports), std::set<std::string>{"L(2,1)"}) << i;
    EXPECT_EQ(saturated_names(reports), std::set<std::string>{"L(2,1)"}) << i;
  }
  const auto cat = enumerate_luk_catalog(3, 1);
  auto reports = classify_saturated(cat);
  classify_ideal(cat, reports);
  EXPECT_EQ(ideal_names(reports), std::set<std::string>{"L(3,1)"});
}

TEST(Classification, LukasiewiczFifteenSeven) {
  const auto cat = enumerate_luk_catalog(15, 7);
  const auto entry = cat.find(named("L(15,7)").family.front());
  ASSERT_TRUE(entry);
  const auto r = classify_entry(cat, *entry);
  EXPECT_TRUE(r.paraconsistency.paraconsistent);
  EXPECT_EQ(r.saturated, true);
}

TEST(SaturatedProduct, XProducts) {
  const std::vector<int> six{2}, thirty{2, 3, 5};
  const auto a = verify_saturated_product(6, 3, six);
  EXPECT_EQ(a.saturated, true);
  ASSERT_TRUE(a.lfi);
  EXPECT_TRUE(a.lfi->confirmed());
  const auto b = verify_saturated_product(30, 9, thirty);
  EXPECT_EQ(b.saturated, true);
  ASSERT_TRUE(b.lfi);
  EXPECT_TRUE(b.lfi->confirmed());
}

TEST(SaturatedProduct, RejectsBadPrimeSets) {
  const std::vector<int> none, three{3}, twice{2, 2};
  EXPECT_THROW(verify_saturated_product(6, 3, none), InputError);
  EXPECT_THROW(verify_saturated_product(6, 3, three), InputError);
  EXPECT_THROW(verify_saturated_product(6, 3, twice), InputError);
}

TEST(SaturatedProduct, CorollaryProducts) {
  for (const auto& primes : std::vector<std::vector<int>>{{2}, {2, 3}, {2, 3, 5}}) {
    const auto r = verify_corollary_product(primes);
    EXPECT_TRUE(r.paraconsistency.paraconsistent);
    EXPECT_EQ(r.saturated, true);
  }
}

TEST(Facts, RegressionIncomparabilities) {
  const auto facts = regression_incomparabilities();
  EXPECT_GE(facts.size(), 50u);
  std::set<std::string> ids;
  for (const auto& f : facts) {
    EXPECT_TRUE(f.pass()) << f.id << ": " << f.statement;
    ids.insert(f.id);
  }
  for (const char* id : {"top-vs-pos", "top-vs-half", "pos-vs-half", "pos-vs-above-half", "pos-vs-neg",
                         "neg-vs-half", "zero-half-above", "neg-vs-zero", "filters-1-2", "filters-3-4",
                         "j3-j4-example"})
    EXPECT_TRUE(ids.count(id)) << id;
}

TEST(Report, TextMentionsVerdicts) {
  const auto cat = enumerate_godel_catalog(4);
  auto reports = classify_saturated(cat);
  classify_ideal(cat, reports);
  for (const auto& r : reports) {
    const auto text = to_text(r);
    EXPECT_NE(text.find(r.logic.label()), std::string::npos);
    if (r.logic.name == "J4") {
      EXPECT_NE(text.find("saturated: yes"), std::string::npos);
      EXPECT_NE(text.find("ideal: yes"), std::string::npos);
    }
  }
}
