#include <gtest/gtest.h>

#include "mvl/eval.hpp"
#include "mvl/formula.hpp"
#include "mvl/terms.hpp"
#include "support/oracle.hpp"

using namespace mvl;

TEST(Parse, Examples) {
  EXPECT_EQ(parse_formula("~p -> q"), gimp(inv(var("p")), var("q")));
  EXPECT_EQ(parse_formula("D(p <-> ~p)"), delta(iff(var("p"), inv(var("p")))));
  EXPECT_EQ(parse_formula("!(p & 0)"), gneg(conj(var("p"), bot())));
}

TEST(Parse, PrecedenceAndAssociativity) {
  const Formula p = var("p"), q = var("q"), r = var("r");
  EXPECT_EQ(parse_formula("p & q | r"), disj(conj(p, q), r));
  EXPECT_EQ(parse_formula("p | q & r"), disj(p, conj(q, r)));
  EXPECT_EQ(parse_formula("p -> q -> r"), gimp(p, gimp(q, r)));
  EXPECT_EQ(parse_formula("p & q & r"), conj(conj(p, q), r));
  EXPECT_EQ(parse_formula("p <-> q -> r"), iff(p, gimp(q, r)));
  EXPECT_EQ(parse_formula("p =>L q =>F r"), limp(p, ftimp(q, r)));
  EXPECT_EQ(parse_formula("D D p"), delta(delta(p)));
  EXPECT_EQ(parse_formula("~!p"), inv(gneg(p)));
  EXPECT_EQ(parse_formula("1"), top());
  EXPECT_EQ(parse_formula("Dp"), var("Dp"));
  EXPECT_EQ(parse_formula("~[7/15]p").conn()->name(), "~[7/15]");
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_formula(""), SyntaxError);
  EXPECT_THROW(parse_formula("p &"), SyntaxError);
  EXPECT_THROW(parse_formula("(p"), SyntaxError);
  EXPECT_THROW(parse_formula("p q"), SyntaxError);
  EXPECT_THROW(parse_formula("2"), SyntaxError);
  EXPECT_THROW(parse_formula("~[0/3]p"), InputError);
  try {
    parse_formula("p & $");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Parse, Lists) {
  EXPECT_TRUE(parse_formula_list("").empty());
  EXPECT_TRUE(parse_formula_list("   ").empty());
  EXPECT_EQ(parse_formula_list("p, q & r").size(), 2u);
}

TEST(Print, MinimalParentheses) {
  EXPECT_EQ(to_string(parse_formula("(p & q) | r")), "p & q | r");
  EXPECT_EQ(to_string(parse_formula("(p -> q) -> r")), "(p -> q) -> r");
  EXPECT_EQ(to_string(parse_formula("p -> (q -> r)")), "p -> q -> r");
  EXPECT_EQ(to_string(parse_formula("p & (q & r)")), "p & (q & r)");
  EXPECT_EQ(to_string(parse_formula("D(p -> q)")), "D(p -> q)");
  EXPECT_EQ(to_string(parse_formula("D ~p")), "D ~p");
  EXPECT_EQ(to_string(parse_formula("~(p & q)")), "~(p & q)");
  EXPECT_EQ(to_canonical(parse_formula("D(p -> ~q)")), "(D (-> p (~ q)))");
}

TEST(Print, RoundTripRandom) {
  auto ops = oracle::godel_ops();
  ops.push_back(Op::LukImp);
  ops.push_back(Op::FTImp);
  oracle::Generator gen(11, ops, {"p", "q", "r2", "x_1'"});
  for (int k = 0; k < 2000; ++k) {
    const Formula f = gen.formula(5);
    EXPECT_EQ(parse_formula(to_string(f)), f) << to_string(f);
  }
  const Formula t = tilde(15, 7, conj(var("p"), inv(var("p"))));
  EXPECT_EQ(parse_formula(to_string(t)), t);
}

TEST(Variables, NaturalOrder) {
  const auto vs = variables(parse_formula("p10 & p2 | q & p1 & p2"));
  EXPECT_EQ(vs, (std::vector<std::string>{"p1", "p2", "p10", "q"}));
  EXPECT_TRUE(natural_less("p9", "p10"));
  EXPECT_FALSE(natural_less("p10", "p9"));
}

TEST(ExpandDerived, Examples) {
  EXPECT_EQ(expand_derived(gneg(var("p"))), gimp(var("p"), bot()));
  EXPECT_EQ(expand_derived(delta(var("p"))), gimp(inv(var("p")), bot()));
  EXPECT_EQ(expand_derived(top()), gimp(bot(), bot()));
}

namespace {

bool only_core(const Formula& f) {
  switch (f.op()) {
    case Op::Or:
    case Op::GNeg:
    case Op::Delta:
    case Op::Iff:
    case Op::Top: return false;
    default: break;
  }
  for (const auto& a : f.args())
    if (!only_core(a)) return false;
  return true;
}

}  // namespace

TEST(ExpandDerived, PreservesValues) {
  oracle::Generator gen(5, oracle::godel_ops(), {"p", "q"});
  for (int k = 0; k < 400; ++k) {
    const Formula f = gen.formula(4);
    const Formula g = expand_derived(f);
    EXPECT_TRUE(only_core(g));
    for (int n = 2; n <= 5; ++n) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const std::map<std::string, int> e{{"p", a}, {"q", b}};
          ASSERT_EQ(oracle::value(f, n - 1, e), oracle::value(g, n - 1, e)) << to_string(f);
        }
    }
  }
}

TEST(Formula, Construction) {
  EXPECT_THROW(Formula(Op::And, {var("p")}), InputError);
  EXPECT_THROW(var(""), InputError);
  EXPECT_EQ(parse_formula("p & ~q").size(), 4u);
  EXPECT_EQ(parse_formula("p & ~q").depth(), 2u);
  EXPECT_EQ(conj_all({}), top());
  EXPECT_EQ(disj_all({}), bot());
}

TEST(Eval, SignatureChecks) {
  const Formula f = parse_formula("p =>L q");
  EXPECT_THROW(evaluate(f, Chain::godel(3), {{"p", 0}, {"q", 1}}), InputError);
  EXPECT_EQ(evaluate(f, Chain::mv(3), {{"p", 2}, {"q", 1}}), 1);
  EXPECT_THROW(evaluate(parse_formula("p -> q"), Chain::ft(3), {{"p", 0}, {"q", 1}}), InputError);
  EXPECT_THROW(evaluate(parse_formula("p"), Chain::godel(3), {}), InputError);
  EXPECT_THROW(evaluate(parse_formula("p"), Chain::godel(3), {{"p", 3}}), InputError);
}

TEST(Eval, Examples) {
  const Formula f = parse_formula("D(p <-> ~p)");
  EXPECT_EQ(evaluate(f, Chain::godel(5), {{"p", 2}}), 4);
  EXPECT_EQ(evaluate(f, Chain::godel(5), {{"p", 1}}), oracle::value(f, 4, {{"p", 1}}));
  EXPECT_EQ(evaluate(top(), Chain::godel(6), {}), 5);
  const ProductMatrix m = parse_matrix("GV3~[>=1]xGV4~[>=1]");
  EXPECT_EQ(evaluate(f, m, {{"p", {1, 1}}}), (std::vector<Value>{2, 0}));
}

TEST(Eval, MatchesOracle) {
  oracle::Generator gen(17, oracle::godel_ops(), {"p", "q"});
  for (int k = 0; k < 300; ++k) {
    const Formula f = gen.formula(5);
    for (int n = 2; n <= 6; ++n)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          ASSERT_EQ(evaluate(f, Chain::godel(n), {{"p", a}, {"q", b}}),
                    oracle::value(f, n - 1, {{"p", a}, {"q", b}}));
  }
}
