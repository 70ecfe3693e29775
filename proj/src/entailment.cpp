#include "mvl/entailment.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "compiled.hpp"

namespace mvl {

namespace {

using detail::Program;

// One component's evaluation table: every formula at every assignment.
struct CompTable {
  std::size_t count = 0;
  std::vector<std::vector<Value>> values;  // [formula][assignment], conclusion last
  std::vector<std::uint8_t> sat;           // all premises designated
  std::vector<std::uint8_t> fail;          // sat and conclusion undesignated
};

struct Prepared {
  std::vector<std::string> vars;
  std::vector<Program> programs;
  std::size_t program_length = 0;
};

Prepared prepare(const ProductMatrix& m, std::span<const Formula> gamma, const Formula& phi) {
  for (const auto& c : m.components()) {
    for (const auto& g : gamma) check_signature(g, c.chain.kind());
    check_signature(phi, c.chain.kind());
  }
  Prepared p;
  FormulaSet all(gamma.begin(), gamma.end());
  all.push_back(phi);
  p.vars = variables(all);
  for (const auto& f : all) {
    p.programs.emplace_back(f, p.vars);
    p.program_length += p.programs.back().length();
  }
  return p;
}

std::size_t table_steps(const ProductMatrix& m, const Prepared& p) {
  std::size_t total = 0;
  for (const auto& c : m.components()) {
    const std::size_t count = detail::power(static_cast<std::size_t>(c.chain.size()), p.vars.size());
    total = detail::sat_add(total, detail::sat_mul(count, p.program_length));
  }
  return total;
}

std::size_t product_size(const ProductMatrix& m, std::size_t nvars) {
  std::size_t total = 1;
  for (const auto& c : m.components())
    total = detail::sat_mul(total, detail::power(static_cast<std::size_t>(c.chain.size()), nvars));
  return total;
}

void check_budget(std::size_t worst, const EntailOptions& opts) {
  if (worst > opts.budget) {
    throw ResourceError("query needs up to " +
                        (worst == SIZE_MAX ? std::string("more than 2^64") : std::to_string(worst)) +
                        " evaluation steps, budget is " + std::to_string(opts.budget));
  }
}

// Runs fn(chunk_begin, chunk_end) over contiguous chunks of [0, total).
template <typename Fn>
void for_chunks(std::size_t total, unsigned workers, Fn fn) {
  const std::size_t w = std::max<std::size_t>(1, std::min<std::size_t>(workers, total));
  if (w <= 1) {
    fn(std::size_t{0}, std::size_t{0}, total);
    return;
  }
  std::vector<std::thread> threads;
  const std::size_t step = (total + w - 1) / w;
  for (std::size_t k = 0; k < w; ++k) {
    const std::size_t lo = std::min(total, k * step), hi = std::min(total, lo + step);
    threads.emplace_back([=, &fn] { fn(k, lo, hi); });
  }
  for (auto& t : threads) t.join();
}

CompTable tabulate_component(const Component& comp, const Prepared& p, unsigned workers) {
  CompTable t;
  t.count = detail::power(static_cast<std::size_t>(comp.chain.size()), p.vars.size());
  const std::size_t w = std::max<std::size_t>(1, std::min<std::size_t>(workers, t.count));
  std::vector<std::vector<std::vector<Value>>> parts(w);
  for_chunks(t.count, workers, [&](std::size_t k, std::size_t lo, std::size_t hi) {
    parts[k] = detail::tabulate(comp.chain, p.vars.size(), p.programs, lo, hi);
  });
  t.values.assign(p.programs.size(), {});
  for (std::size_t f = 0; f < p.programs.size(); ++f) {
    t.values[f].reserve(t.count);
    for (auto& part : parts)
      if (!part.empty()) t.values[f].insert(t.values[f].end(), part[f].begin(), part[f].end());
  }
  const std::size_t concl = p.programs.size() - 1;
  t.sat.assign(t.count, 1);
  t.fail.assign(t.count, 0);
  for (std::size_t i = 0; i < t.count; ++i) {
    for (std::size_t f = 0; f < concl; ++f)
      if (!comp.designated(t.values[f][i])) {
        t.sat[i] = 0;
        break;
      }
    t.fail[i] = t.sat[i] && !comp.designated(t.values[concl][i]);
  }
  return t;
}

std::vector<CompTable> tabulate_all(const ProductMatrix& m, const Prepared& p, unsigned workers) {
  std::vector<CompTable> out;
  for (const auto& c : m.components()) out.push_back(tabulate_component(c, p, workers));
  return out;
}

Counterexample build_counterexample(const ProductMatrix& m, const Prepared& p,
                                    const std::vector<CompTable>& tables,
                                    const std::vector<std::size_t>& comp_index) {
  Counterexample ce;
  const std::size_t nv = p.vars.size();
  for (std::size_t v = 0; v < nv; ++v) ce.assignment[p.vars[v]] = std::vector<Value>(m.arity(), 0);
  for (std::size_t c = 0; c < m.arity(); ++c) {
    std::size_t rest = comp_index[c];
    const auto size = static_cast<std::size_t>(m.components()[c].chain.size());
    for (std::size_t v = nv; v-- > 0;) {
      ce.assignment[p.vars[v]][c] = static_cast<Value>(rest % size);
      rest /= size;
    }
  }
  const std::size_t concl = p.programs.size() - 1;
  for (std::size_t f = 0; f <= concl; ++f) {
    std::vector<Value> tuple;
    for (std::size_t c = 0; c < m.arity(); ++c) tuple.push_back(tables[c].values[f][comp_index[c]]);
    if (f == concl) {
      ce.conclusion_values = std::move(tuple);
    } else {
      ce.premise_values.push_back(std::move(tuple));
    }
  }
  return ce;
}

std::vector<std::size_t> prefix_counts(const std::vector<std::uint8_t>& flags) {
  std::vector<std::size_t> out(flags.size() + 1, 0);
  for (std::size_t i = 0; i < flags.size(); ++i) out[i + 1] = out[i] + flags[i];
  return out;
}

Verdict decide_tables(const ProductMatrix& m, const Prepared& p, const std::vector<CompTable>& tables) {
  Verdict v;
  const std::size_t arity = m.arity(), nv = p.vars.size();
  std::vector<std::vector<std::size_t>> sat_pre, fail_pre;
  for (const auto& t : tables) {
    sat_pre.push_back(prefix_counts(t.sat));
    fail_pre.push_back(prefix_counts(t.fail));
  }
  // Each component's assignments consistent with its fixed leading digits
  // form the range [lo, hi) of its own lexicographic order.
  std::vector<std::size_t> lo(arity, 0), hi(arity);
  for (std::size_t c = 0; c < arity; ++c) hi[c] = tables[c].count;

  auto feasible = [&] {
    bool some_fail = false;
    for (std::size_t c = 0; c < arity; ++c) {
      if (sat_pre[c][hi[c]] == sat_pre[c][lo[c]]) return false;
      if (fail_pre[c][hi[c]] != fail_pre[c][lo[c]]) some_fail = true;
    }
    return some_fail;
  };

  if (!feasible()) return v;
  for (std::size_t var = 0; var < nv; ++var) {
    for (std::size_t c = 0; c < arity; ++c) {
      const auto size = static_cast<std::size_t>(m.components()[c].chain.size());
      const std::size_t width = (hi[c] - lo[c]) / size;
      const std::size_t base = lo[c];
      bool placed = false;
      for (std::size_t d = 0; d < size && !placed; ++d) {
        lo[c] = base + d * width;
        hi[c] = lo[c] + width;
        placed = feasible();
      }
      if (!placed) throw std::logic_error("counterexample search lost feasibility");
    }
  }
  v.holds = false;
  v.counterexample = build_counterexample(m, p, tables, lo);
  return v;
}

}  // namespace

Verdict entails_matrix(const ProductMatrix& m, std::span<const Formula> gamma, const Formula& phi,
                       const EntailOptions& opts) {
  const Prepared p = prepare(m, gamma, phi);
  const std::size_t steps = table_steps(m, p);
  check_budget(steps, opts);
  const auto tables = tabulate_all(m, p, opts.workers);
  Verdict v = decide_tables(m, p, tables);
  v.steps = steps;
  return v;
}

Verdict entails_family(std::span<const ProductMatrix> family, std::span<const Formula> gamma,
                       const Formula& phi, const EntailOptions& opts) {
  if (family.empty()) throw InputError("a logic needs at least one matrix");
  std::size_t worst = 0;
  for (const auto& m : family) worst = detail::sat_add(worst, table_steps(m, prepare(m, gamma, phi)));
  check_budget(worst, opts);
  Verdict total;
  for (std::size_t k = 0; k < family.size(); ++k) {
    Verdict v = entails_matrix(family[k], gamma, phi, opts);
    total.steps += v.steps;
    if (!v.holds) {
      total.holds = false;
      total.counterexample = std::move(v.counterexample);
      total.counterexample->matrix = k;
      return total;
    }
  }
  return total;
}

Verdict entails_product_def(const ProductMatrix& m, std::span<const Formula> gamma,
                            const Formula& phi, const EntailOptions& opts) {
  const Prepared p = prepare(m, gamma, phi);
  const std::size_t total = product_size(m, p.vars.size());
  const std::size_t steps = detail::sat_add(table_steps(m, p), total);
  check_budget(steps, opts);
  const auto tables = tabulate_all(m, p, opts.workers);
  const std::size_t arity = m.arity(), nv = p.vars.size();

  // Digit positions, most significant first: (variable, component).
  std::vector<std::size_t> radix;
  for (std::size_t var = 0; var < nv; ++var)
    for (std::size_t c = 0; c < arity; ++c) radix.push_back(static_cast<std::size_t>(m.components()[c].chain.size()));

  auto split = [&](std::size_t idx) {
    std::vector<std::size_t> comp(arity, 0), digits(radix.size(), 0);
    for (std::size_t pos = radix.size(); pos-- > 0;) {
      digits[pos] = idx % radix[pos];
      idx /= radix[pos];
    }
    for (std::size_t var = 0; var < nv; ++var)
      for (std::size_t c = 0; c < arity; ++c) comp[c] = comp[c] * radix[var * arity + c] + digits[var * arity + c];
    return comp;
  };

  const std::size_t w = std::max<std::size_t>(1, std::min<std::size_t>(opts.workers, total));
  std::vector<std::optional<std::size_t>> first(w);
  for_chunks(total, opts.workers, [&](std::size_t k, std::size_t lo, std::size_t hi) {
    for (std::size_t idx = lo; idx < hi; ++idx) {
      const auto comp = split(idx);
      bool designated = true, refuted = false;
      for (std::size_t c = 0; c < arity && designated; ++c) {
        designated = tables[c].sat[comp[c]] != 0;
        refuted = refuted || tables[c].fail[comp[c]] != 0;
      }
      if (designated && refuted) {
        first[k] = idx;
        return;
      }
    }
  });

  Verdict v;
  v.steps = steps;
  for (const auto& f : first) {
    if (f) {
      v.holds = false;
      v.counterexample = build_counterexample(m, p, tables, split(*f));
      break;
    }
  }
  return v;
}

Verdict check_valid(const ProductMatrix& m, const Formula& phi, const EntailOptions& opts) {
  return entails_matrix(m, {}, phi, opts);
}

bool certify(std::span<const ProductMatrix> family, std::span<const Formula> gamma,
             const Formula& phi, const Verdict& v) {
  if (v.holds) return true;
  if (!v.counterexample || v.counterexample->matrix >= family.size()) return false;
  const ProductMatrix& m = family[v.counterexample->matrix];
  auto designated = [&](const std::vector<Value>& tuple) {
    for (std::size_t c = 0; c < m.arity(); ++c)
      if (!m.components()[c].designated(tuple[c])) return false;
    return true;
  };
  try {
    for (const auto& g : gamma)
      if (!designated(evaluate(g, m, v.counterexample->assignment))) return false;
    return !designated(evaluate(phi, m, v.counterexample->assignment));
  } catch (const InputError&) {
    return false;
  }
}

bool certify(const ProductMatrix& m, std::span<const Formula> gamma, const Formula& phi,
             const Verdict& v) {
  return certify(std::span<const ProductMatrix>(&m, 1), gamma, phi, v);
}

DegreeVerdict entails_degree_preserving(int n, std::span<const Formula> gamma, const Formula& phi,
                                        const EntailOptions& opts) {
  const Chain chain = Chain::godel(n);
  const ProductMatrix truth(Component(chain, chain.top()));
  DegreeVerdict out;
  out.verdict = check_valid(truth, gimp(conj_all(gamma), phi), opts);
  out.implication_valid = out.verdict.holds;

  const Prepared p = prepare(truth, gamma, phi);
  const std::size_t count = detail::power(static_cast<std::size_t>(n), p.vars.size());
  check_budget(detail::sat_mul(count, p.program_length), opts);
  const auto table = detail::tabulate(chain, p.vars.size(), p.programs, 0, count);
  out.min_preserved = true;
  const std::size_t concl = p.programs.size() - 1;
  for (std::size_t i = 0; i < count && out.min_preserved; ++i) {
    Value lowest = chain.top();
    for (std::size_t f = 0; f < concl; ++f) lowest = std::min(lowest, table[f][i]);
    if (table[concl][i] < lowest) out.min_preserved = false;
  }
  out.verdict.steps += count * p.program_length;
  if (out.implication_valid != out.min_preserved)
    throw std::logic_error("degree-preserving checks disagree");
  return out;
}

std::string_view to_string(StandardClass c) {
  switch (c) {
    case StandardClass::Exact1: return "exact-1";
    case StandardClass::OpenPos: return "open-pos";
    case StandardClass::AtHalf: return "at-half";
    case StandardClass::AboveHalf: return "above-half";
    case StandardClass::OpenNeg: return "open-neg";
    case StandardClass::AboveZero: return "above-zero";
  }
  return "?";
}

StandardClass parse_standard_class(std::string_view text) {
  for (auto c : {StandardClass::Exact1, StandardClass::OpenPos, StandardClass::AtHalf,
                 StandardClass::AboveHalf, StandardClass::OpenNeg, StandardClass::AboveZero})
    if (to_string(c) == text) return c;
  throw InputError("unknown filter class '" + std::string(text) +
                   "' (exact-1, open-pos, at-half, above-half, open-neg, above-zero)");
}

std::vector<ProductMatrix> standard_grid_family(StandardClass c, std::size_t nvars) {
  const int m = 2 * static_cast<int>(nvars) + 5;
  const Chain grid = Chain::godel(m);
  const int h = (m - 1) / 2;
  std::vector<int> thresholds;
  switch (c) {
    case StandardClass::Exact1: thresholds = {m - 1}; break;
    case StandardClass::OpenPos:
      for (int t = h + 1; t <= m - 2; ++t) thresholds.push_back(t);
      break;
    case StandardClass::AtHalf: thresholds = {h}; break;
    case StandardClass::AboveHalf: thresholds = {h + 1}; break;
    case StandardClass::OpenNeg:
      for (int t = 1; t <= h - 1; ++t) thresholds.push_back(t);
      break;
    case StandardClass::AboveZero: thresholds = {1}; break;
  }
  std::vector<ProductMatrix> out;
  for (int t : thresholds) out.emplace_back(Component(grid, t));
  return out;
}

Verdict decide_standard(StandardClass c, std::span<const Formula> gamma, const Formula& phi,
                        const EntailOptions& opts) {
  FormulaSet all(gamma.begin(), gamma.end());
  all.push_back(phi);
  const auto family = standard_grid_family(c, variables(all).size());
  return entails_family(family, gamma, phi, opts);
}

std::string to_string(const Counterexample& ce, const ProductMatrix& m) {
  return to_string(ce.assignment, m);
}

}  // namespace mvl
