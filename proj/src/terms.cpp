#include "mvl/terms.hpp"

#include <map>
#include <mutex>

#include "mvl/term_search.hpp"

namespace mvl {

Formula luk3_term(const Formula& x, const Formula& y) {
  return disj(gimp(x, y), disj(inv(x), y));
}

Formula luk4_term(const Formula& x, const Formula& y) {
  Formula middle = conj(conj(conj(delta(gimp(inv(x), x)), inv(delta(x))), gneg(gneg(y))), x);
  return disj(disj(inv(x), middle), gimp(x, y));
}

std::pair<Formula, Formula> godel_from_mv_terms(const Formula& x, const Formula& y) {
  return {disj(delta(limp(x, y)), y), delta(inv(x))};
}

Formula discriminator_term(const Formula& x, const Formula& y, const Formula& z) {
  Formula eq = delta(iff(x, y));
  return disj(conj(eq, z), conj(gneg(eq), x));
}

Formula star_translation(int which, const Formula& f) {
  switch (which) {
    case 1: return conj(gimp(inv(f), f), gneg(delta(iff(f, inv(f)))));
    case 2: return gimp(inv(f), f);
    case 3: return gneg(gneg(f));
    default: throw InputError("star translation index must be 1, 2 or 3");
  }
}

FormulaSet star_translation(int which, std::span<const Formula> fs) {
  FormulaSet out;
  for (const auto& f : fs) out.push_back(star_translation(which, f));
  return out;
}

FormulaSet delta_set_translation(std::span<const Formula> fs) {
  FormulaSet out;
  for (const auto& f : fs) out.push_back(delta(f));
  return out;
}

Formula ft_star(const Formula& f) {
  switch (f.op()) {
    case Op::Var:
    case Op::Bot:
    case Op::Top: return f;
    case Op::Inv: return inv(ft_star(f.arg()));
    case Op::And: return conj(ft_star(f.arg(0)), ft_star(f.arg(1)));
    case Op::Or: return disj(ft_star(f.arg(0)), ft_star(f.arg(1)));
    case Op::FTImp: {
      Formula a = ft_star(f.arg(0)), b = ft_star(f.arg(1));
      return conj(delta(gimp(a, b)), disj(inv(a), b));
    }
    default:
      throw InputError("ft-star expects the FT signature, found '" + std::string(to_string(f.op())) + "'");
  }
}

namespace {

// D a := ~0 =>F a
Formula ft_delta(const Formula& a) { return ftimp(inv(bot()), a); }

}  // namespace

Formula ft_hash(const Formula& f) {
  switch (f.op()) {
    case Op::Var:
    case Op::Bot: return f;
    case Op::Top: return inv(bot());
    case Op::Inv: return inv(ft_hash(f.arg()));
    case Op::And: return conj(ft_hash(f.arg(0)), ft_hash(f.arg(1)));
    case Op::Or: return disj(ft_hash(f.arg(0)), ft_hash(f.arg(1)));
    case Op::GImp: {
      Formula a = ft_hash(f.arg(0)), b = ft_hash(f.arg(1));
      return disj(inv(ft_delta(inv(ftimp(a, b)))), b);
    }
    case Op::GNeg: return ft_hash(gimp(f.arg(), bot()));
    case Op::Delta: return ft_hash(gimp(inv(f.arg()), bot()));
    case Op::Iff: return ft_hash(conj(gimp(f.arg(0), f.arg(1)), gimp(f.arg(1), f.arg(0))));
    default:
      throw InputError("ft-hash expects the Gödel signature, found '" + std::string(to_string(f.op())) + "'");
  }
}

Formula tuple_characterizer(int n) {
  if (n < 2) throw InputError("tuple characterizer needs n >= 2");
  auto p = [](int i) { return var("p" + std::to_string(i)); };
  FormulaSet parts{delta(gneg(p(0))), delta(p(n - 1))};
  for (int i = 0; i + 1 < n; ++i) parts.push_back(gneg(delta(gimp(p(i + 1), p(i)))));
  for (int i = 0; i < n; ++i) parts.push_back(delta(iff(p(i), inv(p(n - 1 - i)))));
  return conj_all(parts);
}

std::optional<Formula> synthesize_single_value(int n, Value a, int max_depth) {
  const Chain chain = Chain::godel(n);
  chain.check(a);
  TermPool pool({chain}, {"p"});
  std::optional<Formula> found;
  auto visit = [&](const TermPool::Entry& e) {
    for (Value v = 0; v < chain.size(); ++v)
      if (e.values[static_cast<std::size_t>(v)] != (v == a ? chain.top() : 0)) return false;
    found = e.formula;
    return true;
  };
  for (int level = 0; level <= max_depth; ++level) {
    const auto step = pool.grow(visit);
    if (step == TermPool::Step::Found) return found;
    if (step == TermPool::Step::Saturated || step == TermPool::Step::Capped) break;
  }
  return std::nullopt;
}

Formula single_value_characterizer(int n, Value a) {
  if (n < 3 || n > 5)
    throw InputError("single-variable characterizers are provided for n in {3, 4, 5}");
  const Chain chain = Chain::godel(n);
  chain.check(a);
  if (a == 0) throw InputError("the characterized value must be nonzero");
  if (chain.has_fixpoint() && 2 * a == chain.top()) return delta(iff(var("p"), inv(var("p"))));
  auto f = synthesize_single_value(n, a);
  if (!f) throw InputError("no characterizer found within the synthesis bound");
  return *f;
}

TableConnPtr tilde_table_conn(int n, int i) {
  if (n < 1 || i < 1 || i > n)
    throw InputError("~[i/n] needs 1 <= i <= n, got i=" + std::to_string(i) + ", n=" + std::to_string(n));
  static std::mutex mu;
  static std::map<std::pair<int, int>, TableConnPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, i}];
  if (!slot) {
    slot = std::make_shared<const TableConn>(
        "~[" + std::to_string(i) + "/" + std::to_string(n) + "]", 1,
        [n, i](const Chain& c, std::span<const Value> args) -> Value {
          // a/top >= i/n
          return static_cast<long>(args[0]) * n >= static_cast<long>(i) * c.top() ? 0 : c.top();
        });
  }
  return slot;
}

Formula tilde(int n, int i, const Formula& f) { return apply_table(tilde_table_conn(n, i), {f}); }

Formula tilde_implies(int n, int i, const Formula& f, const Formula& g) {
  return disj(tilde(n, i, f), g);
}

Formula AxiomSchema::instance() const {
  FormulaSet args;
  for (int k = 1; k <= metavariables; ++k) args.push_back(var("p" + std::to_string(k)));
  return build(args);
}

Formula AxiomSchema::instance(std::span<const Formula> args) const {
  if (static_cast<int>(args.size()) != metavariables)
    throw InputError("schema " + name + " takes " + std::to_string(metavariables) + " formulas");
  return build(args);
}

std::vector<AxiomSchema> axiom_schemas() {
  using S = std::span<const Formula>;
  return {
      {"A1", 3, [](S f) { return gimp(gimp(f[0], f[1]), gimp(gimp(f[1], f[2]), gimp(f[0], f[2]))); }},
      {"A2", 2, [](S f) { return gimp(conj(f[0], f[1]), f[0]); }},
      {"A3", 2, [](S f) { return gimp(conj(f[0], f[1]), conj(f[1], f[0])); }},
      {"A4a", 3, [](S f) { return gimp(gimp(f[0], gimp(f[1], f[2])), gimp(conj(f[0], f[1]), f[2])); }},
      {"A4b", 3, [](S f) { return gimp(gimp(conj(f[0], f[1]), f[2]), gimp(f[0], gimp(f[1], f[2]))); }},
      {"A5", 3,
       [](S f) {
         return gimp(gimp(gimp(f[0], f[1]), f[2]), gimp(gimp(gimp(f[1], f[0]), f[2]), f[2]));
       }},
      {"A6", 1, [](S f) { return gimp(bot(), f[0]); }},
      {"A7", 1, [](S f) { return gimp(f[0], conj(f[0], f[0])); }},
      {"~1", 1, [](S f) { return iff(inv(inv(f[0])), f[0]); }},
      {"~2", 1, [](S f) { return gimp(gneg(f[0]), inv(f[0])); }},
      {"~3", 2, [](S f) { return gimp(delta(gimp(f[0], f[1])), delta(gimp(inv(f[1]), inv(f[0])))); }},
      {"D1", 1, [](S f) { return disj(delta(f[0]), gneg(delta(f[0]))); }},
      {"D2", 2, [](S f) { return gimp(delta(disj(f[0], f[1])), disj(delta(f[0]), delta(f[1]))); }},
      {"D5", 2, [](S f) { return gimp(delta(gimp(f[0], f[1])), gimp(delta(f[0]), delta(f[1]))); }},
      {"NFP", 1, [](S f) { return inv(delta(iff(f[0], inv(f[0])))); }},
  };
}

AxiomSchema axiom_gn(int n) {
  if (n < 1) throw InputError("A_Gn needs n >= 1");
  return {"AG" + std::to_string(n), n + 1, [n](std::span<const Formula> f) {
            FormulaSet parts;
            for (int k = 0; k < n; ++k) parts.push_back(gimp(f[k], f[k + 1]));
            return disj_all(parts);
          }};
}

const AxiomSchema& axiom(const std::string& name) {
  static const std::vector<AxiomSchema> all = axiom_schemas();
  for (const auto& s : all)
    if (s.name == name) return s;
  throw InputError("unknown axiom schema " + name);
}

Formula godel_consistency(const Formula& f) { return delta(disj(gneg(f), f)); }

Formula luk_consistency(int n, int i, const Formula& f) { return tilde(n, i, conj(f, inv(f))); }

}  // namespace mvl
