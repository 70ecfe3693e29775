#pragma once

// Flat postorder programs for fast repeated evaluation on one chain.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "mvl/algebra.hpp"
#include "mvl/formula.hpp"

namespace mvl::detail {

class Program {
 public:
  Program(const Formula& f, const std::vector<std::string>& vars) { emit(f, vars); }

  std::size_t length() const noexcept { return code_.size(); }

  // `vals[k]` is the value of the k-th variable. `regs` is scratch space.
  Value run(const Chain& c, const Value* vals, std::vector<Value>& regs) const {
    regs.resize(code_.size());
    const Value top = c.top();
    for (std::size_t i = 0; i < code_.size(); ++i) {
      const Instr& in = code_[i];
      const Value a = in.a >= 0 ? regs[static_cast<std::size_t>(in.a)] : 0;
      const Value b = in.b >= 0 ? regs[static_cast<std::size_t>(in.b)] : 0;
      Value r = 0;
      switch (in.op) {
        case Op::Var: r = vals[in.slot]; break;
        case Op::Bot: r = 0; break;
        case Op::Top: r = top; break;
        case Op::And: r = a < b ? a : b; break;
        case Op::Or: r = a < b ? b : a; break;
        case Op::GImp: r = a <= b ? top : b; break;
        case Op::Inv: r = top - a; break;
        case Op::GNeg: r = a == 0 ? top : 0; break;
        case Op::Delta: r = a == top ? top : 0; break;
        case Op::Iff: r = a == b ? top : (a < b ? a : b); break;
        case Op::LukImp: r = top - a + b < top ? top - a + b : top; break;
        case Op::FTImp: r = a <= b ? (top - a > b ? top - a : b) : 0; break;
        case Op::Table: {
          std::array<Value, 1> one{a};
          if (in.conn->arity() == 1) {
            r = in.conn->apply(c, one);
          } else {
            std::vector<Value> args;
            for (int k : in.extra) args.push_back(regs[static_cast<std::size_t>(k)]);
            r = in.conn->apply(c, args);
          }
          break;
        }
      }
      regs[i] = r;
    }
    return regs.back();
  }

 private:
  struct Instr {
    Op op = Op::Bot;
    int a = -1;
    int b = -1;
    int slot = 0;
    const TableConn* conn = nullptr;
    std::vector<int> extra;
  };

  int emit(const Formula& f, const std::vector<std::string>& vars) {
    Instr in;
    in.op = f.op();
    if (f.op() == Op::Var) {
      std::size_t k = 0;
      while (k < vars.size() && vars[k] != f.name()) ++k;
      if (k == vars.size()) throw InputError("variable " + f.name() + " missing from program inputs");
      in.slot = static_cast<int>(k);
    } else if (f.op() == Op::Table) {
      in.conn = f.conn().get();
      for (const auto& arg : f.args()) in.extra.push_back(emit(arg, vars));
      if (!in.extra.empty()) in.a = in.extra[0];
    } else {
      if (!f.args().empty()) in.a = emit(f.arg(0), vars);
      if (f.args().size() > 1) in.b = emit(f.arg(1), vars);
    }
    code_.push_back(std::move(in));
    return static_cast<int>(code_.size()) - 1;
  }

  std::vector<Instr> code_;
};

// Values of `programs` at every assignment of `nvars` variables on `c`, in
// lexicographic order with the first variable most significant.
// Result layout: out[p][assignment].
inline std::vector<std::vector<Value>> tabulate(const Chain& c, std::size_t nvars,
                                                const std::vector<Program>& programs,
                                                std::size_t begin, std::size_t end) {
  std::vector<std::vector<Value>> out(programs.size());
  for (auto& v : out) v.reserve(end - begin);
  std::vector<Value> vals(nvars, 0), regs;
  const auto size = static_cast<std::size_t>(c.size());
  for (std::size_t idx = begin; idx < end; ++idx) {
    std::size_t rest = idx;
    for (std::size_t k = nvars; k-- > 0;) {
      vals[k] = static_cast<Value>(rest % size);
      rest /= size;
    }
    for (std::size_t p = 0; p < programs.size(); ++p)
      out[p].push_back(programs[p].run(c, vals.data(), regs));
  }
  return out;
}

// Saturates at SIZE_MAX.
inline std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > SIZE_MAX / base) return SIZE_MAX;
    r *= base;
  }
  return r;
}

inline std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > SIZE_MAX / a) return SIZE_MAX;
  return a * b;
}

inline std::size_t sat_add(std::size_t a, std::size_t b) {
  return a > SIZE_MAX - b ? SIZE_MAX : a + b;
}

}  // namespace mvl::detail
