#pragma once

// Independent reference implementations for tests. Nothing here calls the
// library's evaluators or deciders; only the Formula data type is shared.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mvl/formula.hpp"

namespace oracle {

// Values are numerators over a common denominator `top`.
inline int value(const mvl::Formula& f, int top, const std::map<std::string, int>& e) {
  using mvl::Op;
  auto v = [&](std::size_t i) { return value(f.args()[i], top, e); };
  switch (f.op()) {
    case Op::Var: return e.at(f.name());
    case Op::Bot: return 0;
    case Op::Top: return top;
    case Op::And: return std::min(v(0), v(1));
    case Op::Or: return std::max(v(0), v(1));
    case Op::GImp: {
      const int a = v(0), b = v(1);
      return a <= b ? top : b;
    }
    case Op::Inv: return top - v(0);
    case Op::GNeg: return v(0) == 0 ? top : 0;
    case Op::Delta: return v(0) == top ? top : 0;
    case Op::Iff: {
      const int a = v(0), b = v(1);
      const int ab = a <= b ? top : b, ba = b <= a ? top : a;
      return std::min(ab, ba);
    }
    case Op::LukImp: return std::min(top, top - v(0) + v(1));
    case Op::FTImp: {
      const int a = v(0), b = v(1);
      return a <= b ? std::max(top - a, b) : 0;
    }
    case Op::Table: {
      const int a = v(0);
      // Only the ~[i/n] connectives appear in tests; parse i and n from the name.
      const std::string& name = f.conn()->name();
      const auto slash = name.find('/');
      const int i = std::stoi(name.substr(2, slash - 2));
      const int n = std::stoi(name.substr(slash + 1));
      return a * n >= i * top ? 0 : top;
    }
  }
  return -1;
}

struct Comp {
  int size;
  int threshold;
};

using Tuple = std::vector<int>;

// Literal product semantics, enumerating product assignments with the first
// variable most significant and, inside a tuple, the first component most
// significant. Returns the first counterexample as var -> tuple.
inline std::optional<std::map<std::string, Tuple>> first_counterexample(
    const std::vector<Comp>& comps, const std::vector<mvl::Formula>& gamma, const mvl::Formula& phi) {
  std::vector<mvl::Formula> all = gamma;
  all.push_back(phi);
  const auto vars = mvl::variables(all);
  std::vector<int> radix;
  for (std::size_t v = 0; v < vars.size(); ++v)
    for (const auto& c : comps) radix.push_back(c.size);
  std::vector<int> digit(radix.size(), 0);
  while (true) {
    bool premises = true, conclusion = true;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      std::map<std::string, int> e;
      for (std::size_t v = 0; v < vars.size(); ++v) e[vars[v]] = digit[v * comps.size() + c];
      const int top = comps[c].size - 1;
      for (const auto& g : gamma)
        if (value(g, top, e) < comps[c].threshold) premises = false;
      if (value(phi, top, e) < comps[c].threshold) conclusion = false;
    }
    if (premises && !conclusion) {
      std::map<std::string, Tuple> out;
      for (std::size_t v = 0; v < vars.size(); ++v)
        for (std::size_t c = 0; c < comps.size(); ++c) out[vars[v]].push_back(digit[v * comps.size() + c]);
      return out;
    }
    std::size_t pos = radix.size();
    while (pos > 0) {
      --pos;
      if (++digit[pos] < radix[pos]) break;
      digit[pos] = 0;
      if (pos == 0) return std::nullopt;
    }
    if (radix.empty()) return std::nullopt;
  }
}

// Random formulas over the given connectives, fixed seeds in callers.
class Generator {
 public:
  Generator(std::uint32_t seed, std::vector<mvl::Op> ops, std::vector<std::string> vars)
      : rng_(seed), ops_(std::move(ops)), vars_(std::move(vars)) {}

  mvl::Formula formula(int depth) {
    using mvl::Op;
    std::uniform_int_distribution<int> coin(0, 3);
    if (depth == 0 || coin(rng_) == 0) {
      std::uniform_int_distribution<std::size_t> pick(0, vars_.size() + 1);
      const std::size_t k = pick(rng_);
      if (k < vars_.size()) return mvl::var(vars_[k]);
      return k == vars_.size() ? mvl::bot() : mvl::top();
    }
    std::uniform_int_distribution<std::size_t> pick(0, ops_.size() - 1);
    const Op op = ops_[pick(rng_)];
    if (mvl::arity(op) == 1) return mvl::Formula(op, {formula(depth - 1)});
    return mvl::Formula(op, {formula(depth - 1), formula(depth - 1)});
  }

  std::vector<mvl::Formula> formulas(std::size_t count, int depth) {
    std::vector<mvl::Formula> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(formula(depth));
    return out;
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
  std::vector<mvl::Op> ops_;
  std::vector<std::string> vars_;
};

inline std::vector<mvl::Op> godel_ops() {
  using mvl::Op;
  return {Op::And, Op::Or, Op::GImp, Op::Inv, Op::GNeg, Op::Delta, Op::Iff};
}

}  // namespace oracle
