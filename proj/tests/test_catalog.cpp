#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "mvl/catalog.hpp"
#include "mvl/term_search.hpp"
#include "support/oracle.hpp"

using namespace mvl;

namespace {

// Binomial coefficient, small arguments.
std::size_t choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// Subsets of {0..n-1} containing both bounds and closed under the Gödel
// operations with involution, found by brute force over bitmasks.
std::set<std::size_t> closed_subset_sizes(int n) {
  const int top = n - 1;
  std::set<std::size_t> sizes;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask & 1u) || !(mask & (1u << top))) continue;
    auto in = [&](int x) { return (mask >> x) & 1u; };
    bool closed = true;
    for (int a = 0; a < n && closed; ++a) {
      if (!in(a)) continue;
      if (!in(top - a)) closed = false;
      for (int b = 0; b < n && closed; ++b)
        if (in(b) && !in(a <= b ? top : b)) closed = false;
    }
    if (closed) sizes.insert(static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return sizes;
}

std::size_t godel_entry_count(int n, std::size_t max_components) {
  std::size_t comps = 0;
  for (std::size_t s : closed_subset_sizes(n)) comps += s - 1;
  std::size_t total = 0;
  for (std::size_t k = 1; k <= max_components; ++k) total += choose(comps, k);
  return total;
}

// Independent embedding existence test: every strictly increasing map with
// fixed bounds, checked against integer operation tables.
bool embeds_brute(const Component& from, const Component& to) {
  const int a = from.chain.size(), b = to.chain.size();
  if (from.chain.kind() != to.chain.kind() || a > b) return false;
  const int ta = a - 1, tb = b - 1;
  auto imp = [&](int x, int y, int top) {
    switch (from.chain.kind()) {
      case ChainKind::GodelInv: return x <= y ? top : y;
      case ChainKind::MV: return std::min(top, top - x + y);
      case ChainKind::FT: return x <= y ? std::max(top - x, y) : 0;
    }
    return -1;
  };
  std::vector<int> f(static_cast<std::size_t>(a));
  std::function<bool(int, int)> go = [&](int x, int lo) -> bool {
    if (x == ta) {
      f[static_cast<std::size_t>(x)] = tb;
      for (int u = 0; u < a; ++u) {
        const int fu = f[static_cast<std::size_t>(u)];
        if ((u >= from.filter.threshold) != (fu >= to.filter.threshold)) return false;
        if (f[static_cast<std::size_t>(ta - u)] != tb - fu) return false;
        for (int v = 0; v < a; ++v)
          if (f[static_cast<std::size_t>(imp(u, v, ta))] != imp(fu, f[static_cast<std::size_t>(v)], tb))
            return false;
      }
      return true;
    }
    for (int y = lo; y < tb; ++y) {
      f[static_cast<std::size_t>(x)] = y;
      if (go(x + 1, y + 1)) return true;
    }
    return false;
  };
  f[0] = 0;
  if (a == 1) return false;
  return go(1, 1);
}

}  // namespace

TEST(Named, Landmarks) {
  EXPECT_EQ(to_string(named("J3").family.front()), "GV3~[>=1]");
  EXPECT_EQ(to_string(named("J4").family.front()), "GV4~[>=1]");
  EXPECT_EQ(to_string(named("J3xJ4").family.front()), "GV4~[>=1]xGV3~[>=1]");
  EXPECT_EQ(to_string(named("L(4,2)").family.front()), "LV5[>=2]");
  EXPECT_EQ(to_string(named("FT5").family.front()), "FT5[>=1]");
  EXPECT_EQ(named("L(4,4)").family.front().components().front().filter.threshold,
            named("L(4,4)").family.front().components().front().chain.top());
  const auto g5 = named("G<=5~");
  ASSERT_EQ(g5.family.size(), 4u);
  for (Value t = 1; t <= 4; ++t)
    EXPECT_EQ(g5.family[static_cast<std::size_t>(t - 1)], ProductMatrix(Component(Chain::godel(5), t)));
  EXPECT_THROW(named("J5"), InputError);
  EXPECT_THROW(named("L(3,4)"), InputError);
}

TEST(Named, ResolveFamiliesAndMatrices) {
  const auto fam = resolve_logic("{J3; GV5~[>=2]}");
  ASSERT_EQ(fam.family.size(), 2u);
  EXPECT_EQ(fam.family[1], parse_matrix("GV5~[>=2]"));
  EXPECT_EQ(resolve_logic("GV3~[>=1]xGV4~[>=1]").family.front(), named("J3xJ4").family.front());
  EXPECT_THROW(resolve_logic("{J3; LV3[>=1]}"), InputError);
  EXPECT_THROW(resolve_logic("nonsense"), InputError);
}

TEST(LT, Shape) {
  const auto two = build_LT(5, {2, 1});
  ASSERT_EQ(two.family.size(), 1u);
  EXPECT_EQ(two.family.front().arity(), 2u);
  EXPECT_EQ(to_string(two.family.front()), "GV5~[>=2]xGV5~[>=1]");
  EXPECT_TRUE(build_LT(5, {3}).family.front().is_single());
  EXPECT_THROW(build_LT(5, {}), InputError);
  EXPECT_THROW(build_LT(5, {5}), InputError);
}

TEST(LT, CharacterizationRandom) {
  oracle::Generator gen(5, oracle::godel_ops(), {"p", "q"});
  const std::vector<std::vector<Value>> sets = {{1, 2}, {1, 3}, {2, 4}, {1, 2, 3}, {3}, {1, 2, 3, 4}};
  for (int k = 0; k < 500; ++k) {
    const auto& t = sets[static_cast<std::size_t>(k) % sets.size()];
    const FormulaSet gamma = gen.formulas(static_cast<std::size_t>(gen.uniform(0, 2)), 3);
    const Formula phi = gen.formula(3);
    const auto c = check_LT_characterization(5, t, gamma, phi);
    ASSERT_TRUE(c.agree()) << to_string(gamma) << " |- " << to_string(phi);
  }
}

TEST(LT, CharacterizationOverTermPool) {
  // Formulas in p, q pairwise distinct as functions on GV5.
  TermPool pool({Chain::godel(5)}, {"p", "q"}, 60);
  for (int d = 0; d < 3; ++d) pool.grow({});
  const auto& terms = pool.entries();
  for (const auto& t : std::vector<std::vector<Value>>{{1, 2}, {2, 3}, {1, 4}})
    for (const auto& g : terms)
      for (const auto& f : terms) {
        const FormulaSet gamma{g.formula};
        ASSERT_TRUE(check_LT_characterization(5, t, gamma, f.formula).agree());
      }
}

TEST(LExp, Shape) {
  const auto l5 = build_L_exp(5);
  ASSERT_EQ(l5.family.size(), 2u);
  EXPECT_EQ(to_string(l5.family[0]), "GV5~[>=3]xGV5~[>=2]xGV5~[>=1]");
  EXPECT_EQ(to_string(l5.family[1]), "GV5~[>=4]");
  // First-index oracle: smallest i with 2i > n-1.
  for (int n = 2; n <= 9; ++n) {
    int i = 1;
    while (2 * i <= n - 1) ++i;
    EXPECT_EQ(lexp_index(n), i);
  }
  const auto l4 = build_L_exp(4);
  ASSERT_EQ(l4.family.size(), 2u);
  EXPECT_EQ(to_string(l4.family[0]), "GV4~[>=2]xGV4~[>=1]");
  EXPECT_EQ(to_string(l4.family[1]), "GV4~[>=3]");
  const FormulaSet contradiction = parse_formula_list("p, ~p");
  EXPECT_TRUE(entails(l5, contradiction, bot()).holds);
  EXPECT_TRUE(entails(l4, contradiction, bot()).holds);
}

TEST(LExp, Characterization) {
  oracle::Generator gen(9, oracle::godel_ops(), {"p", "q"});
  for (int k = 0; k < 300; ++k) {
    const int n = 4 + k % 3;
    const FormulaSet gamma = gen.formulas(static_cast<std::size_t>(gen.uniform(0, 2)), 3);
    const Formula phi = gen.formula(3);
    ASSERT_TRUE(check_L_exp_characterization(n, gamma, phi).agree())
        << n << ": " << to_string(gamma) << " |- " << to_string(phi);
  }
}

TEST(Embedding, PaperExamples) {
  const Component j3(Chain::godel(3), 1), j4(Chain::godel(4), 1), g5half(Chain::godel(5), 2);
  const auto e = component_embedding(j3, g5half);
  ASSERT_TRUE(e);
  EXPECT_EQ(*e, (std::vector<Value>{0, 2, 4}));
  EXPECT_FALSE(component_embedding(j3, j4));
  const auto id = submatrix_embedding(named("J3xJ4").family.front(), named("J3xJ4").family.front());
  ASSERT_TRUE(id);
  for (const auto& m : *id) {
    EXPECT_EQ(m.from, m.to);
    for (std::size_t x = 0; x < m.map.size(); ++x) EXPECT_EQ(m.map[x], static_cast<Value>(x));
  }
  EXPECT_FALSE(submatrix_embedding(named("J3").family.front(), named("J4").family.front()));
}

TEST(Embedding, AgreesWithBruteForce) {
  std::vector<Component> comps;
  for (ChainKind kind : {ChainKind::GodelInv, ChainKind::MV, ChainKind::FT})
    for (int size = 2; size <= 7; ++size)
      for (Value t = 1; t < size; ++t) comps.emplace_back(Chain(kind, size), t);
  for (const auto& a : comps)
    for (const auto& b : comps) {
      const auto e = component_embedding(a, b);
      ASSERT_EQ(e.has_value(), embeds_brute(a, b)) << to_string(a) << " into " << to_string(b);
    }
}

TEST(Embedding, LukDivisorChains) {
  // LV_{a+1} embeds into LV_{b+1} exactly when a | b.
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; b <= 12; ++b) {
      const bool e = component_embedding(Component(Chain::mv(a + 1), a), Component(Chain::mv(b + 1), b)).has_value();
      EXPECT_EQ(e, b % a == 0) << a << " " << b;
    }
}

TEST(GodelCatalog, Counts) {
  const auto singles = enumerate_godel_catalog(5, 1);
  EXPECT_EQ(singles.entries.size(), 10u);
  std::map<int, int> per_size;
  for (const auto& e : singles.entries) ++per_size[e.matrix().components().front().chain.size()];
  EXPECT_EQ(per_size, (std::map<int, int>{{2, 1}, {3, 2}, {4, 3}, {5, 4}}));
  for (int n = 3; n <= 7; ++n) {
    const auto cat = enumerate_godel_catalog(n, 3);
    EXPECT_EQ(cat.entries.size(), godel_entry_count(n, 3)) << n;
  }
  EXPECT_EQ(enumerate_godel_catalog(5, 3).entries.size(), 175u);
  EXPECT_EQ(enumerate_godel_catalog(6, 3).entries.size(), 129u);
  EXPECT_EQ(enumerate_godel_catalog(7, 3).entries.size(), 1561u);
  const auto three = enumerate_godel_catalog(3, 1);
  for (const auto& e : three.entries) EXPECT_LE(e.matrix().components().front().chain.size(), 3);
  EXPECT_THROW(enumerate_godel_catalog(5, 0), InputError);
}

TEST(GodelCatalog, EntriesAreNormalizedAndDistinct) {
  const auto cat = enumerate_godel_catalog(5, 3);
  std::set<std::string> seen;
  for (const auto& e : cat.entries) {
    EXPECT_TRUE(e.matrix().is_normalized());
    EXPECT_TRUE(seen.insert(to_string(e.matrix())).second);
  }
  for (const auto& s : cat.carriers) EXPECT_EQ(generate_subuniverse(s.parent, s.members), s);
  for (const char* name : {"J3", "J4", "J3xJ4", "J2xJ3", "CPL"}) {
    const auto idx = cat.find(named(name).family.front());
    ASSERT_TRUE(idx) << name;
    EXPECT_EQ(cat.entries[*idx].logic.name, name);
  }
}

TEST(GodelCatalog, EdgesCarryValidCertificates) {
  const auto cat = enumerate_godel_catalog(5, 3);
  ASSERT_FALSE(cat.edges.empty());
  for (const auto& edge : cat.edges) {
    const auto cert = cat.certificate(edge);
    ASSERT_TRUE(verify_certificate(cat.entries[edge.to].matrix(), cat.entries[edge.from].matrix(), cert));
  }
  const auto j3 = *cat.find(named("J3").family.front());
  const auto g5 = *cat.find(parse_matrix("GV5~[>=2]"));
  EXPECT_TRUE(cat.extends(j3, g5));
  EXPECT_FALSE(cat.extends(g5, j3));
}

TEST(GodelCatalog, EdgesAreSound) {
  const auto cat = enumerate_godel_catalog(5, 3);
  oracle::Generator gen(77, oracle::godel_ops(), {"p", "q"});
  std::size_t stride = cat.edges.size() / 25 + 1;
  for (std::size_t k = 0; k < cat.edges.size(); k += stride) {
    const auto& edge = cat.edges[k];
    for (int q = 0; q < 200; ++q) {
      const FormulaSet gamma = gen.formulas(static_cast<std::size_t>(gen.uniform(0, 2)), 3);
      const Formula phi = gen.formula(3);
      if (entails(cat.entries[edge.from].logic, gamma, phi).holds)
        ASSERT_TRUE(entails(cat.entries[edge.to].logic, gamma, phi).holds);
    }
  }
}

TEST(LukCatalog, Fifteen) {
  const auto cat = enumerate_luk_catalog(15, 7);
  std::set<int> divs;
  for (const auto& c : cat.components) divs.insert(c.chain.top());
  EXPECT_EQ(divs, (std::set<int>{1, 3, 5, 15}));
  EXPECT_EQ(cat.entries.size(), 11u);
  for (const auto& c : cat.components)
    EXPECT_EQ(c.filter.threshold, (7 * c.chain.top() + 14) / 15);
}

TEST(LukCatalog, FourAndPrimes) {
  const auto cat = enumerate_luk_catalog(4, 1);
  std::set<int> divs;
  for (const auto& c : cat.components) divs.insert(c.chain.top());
  EXPECT_EQ(divs, (std::set<int>{1, 2, 4}));
  for (int p : {2, 3, 5, 7}) {
    const auto prime = enumerate_luk_catalog(p, 1);
    std::set<int> singles;
    for (const auto& e : prime.entries)
      if (e.matrix().is_single()) singles.insert(e.matrix().components().front().chain.top());
    EXPECT_EQ(singles, (std::set<int>{1, p}));
  }
}

TEST(ComputeX, DirectCondition) {
  // Least k/p in F_{i/n}, compared with 1/2 by cross multiplication.
  auto oracle_x = [](int n, int i) {
    std::vector<int> out;
    for (int p = 2; p <= n; ++p) {
      bool prime = true;
      for (int d = 2; d * d <= p; ++d) prime &= p % d != 0;
      if (!prime || n % p) continue;
      int k = 0;
      while (k * n < i * p) ++k;
      if (2 * k <= p) out.push_back(p);
    }
    return out;
  };
  EXPECT_EQ(compute_X(6, 3), std::vector<int>{2});
  EXPECT_EQ(compute_X(4, 1), std::vector<int>{2});
  EXPECT_EQ(compute_X(7, 3), std::vector<int>{7});
  EXPECT_TRUE(compute_X(15, 7).empty());
  for (int n = 2; n <= 30; ++n)
    for (int i = 1; i <= n; ++i) EXPECT_EQ(compute_X(n, i), oracle_x(n, i)) << n << "," << i;
}

TEST(Export, TextAndDot) {
  const auto cat = enumerate_godel_catalog(3, 3);
  const std::string text = export_text(cat);
  EXPECT_NE(text.find("entries=7"), std::string::npos);
  const std::string dot = export_dot(cat);
  EXPECT_EQ(dot.rfind("digraph catalog {", 0), 0u);
  EXPECT_NE(dot.find("J3"), std::string::npos);
  const auto empty = build_catalog(Side::GodelInv, 0, 0, {}, {}, {});
  EXPECT_EQ(export_dot(empty), "digraph catalog {\n  rankdir=BT;\n  node [shape=box];\n}\n");
}
