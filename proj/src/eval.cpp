#include "mvl/eval.hpp"

namespace mvl {

bool supports(ChainKind kind, Op op) {
  switch (op) {
    case Op::Var:
    case Op::Bot:
    case Op::Top:
    case Op::And:
    case Op::Or:
    case Op::Inv:
    case Op::Delta:
    case Op::Table: return true;
    case Op::GImp:
    case Op::GNeg:
    case Op::Iff: return kind == ChainKind::GodelInv;
    case Op::LukImp: return kind == ChainKind::MV;
    case Op::FTImp: return kind == ChainKind::FT;
  }
  return false;
}

void check_signature(const Formula& f, ChainKind kind) {
  if (!supports(kind, f.op())) {
    throw InputError("connective '" + std::string(to_string(f.op())) +
                     "' is not in the signature of " + std::string(to_string(kind)) + " chains");
  }
  for (const auto& a : f.args()) check_signature(a, kind);
}

namespace {

Value eval_node(const Formula& f, const Chain& c, const Assignment& e) {
  switch (f.op()) {
    case Op::Var: {
      auto it = e.find(f.name());
      if (it == e.end()) throw InputError("assignment has no value for variable " + f.name());
      c.check(it->second);
      return it->second;
    }
    case Op::Bot: return 0;
    case Op::Top: return c.top();
    case Op::And: return c.meet(eval_node(f.arg(0), c, e), eval_node(f.arg(1), c, e));
    case Op::Or: return c.join(eval_node(f.arg(0), c, e), eval_node(f.arg(1), c, e));
    case Op::GImp: return c.godel_implies(eval_node(f.arg(0), c, e), eval_node(f.arg(1), c, e));
    case Op::Inv: return c.involution(eval_node(f.arg(), c, e));
    case Op::GNeg: return c.godel_neg(eval_node(f.arg(), c, e));
    case Op::Delta: return c.delta(eval_node(f.arg(), c, e));
    case Op::Iff: {
      const Value a = eval_node(f.arg(0), c, e), b = eval_node(f.arg(1), c, e);
      return c.meet(c.godel_implies(a, b), c.godel_implies(b, a));
    }
    case Op::LukImp: return c.luk_implies(eval_node(f.arg(0), c, e), eval_node(f.arg(1), c, e));
    case Op::FTImp: return c.ft_implies(eval_node(f.arg(0), c, e), eval_node(f.arg(1), c, e));
    case Op::Table: {
      std::vector<Value> args;
      for (const auto& a : f.args()) args.push_back(eval_node(a, c, e));
      const Value v = f.conn()->apply(c, args);
      c.check(v);
      return v;
    }
  }
  throw InputError("unknown connective");
}

}  // namespace

Value evaluate(const Formula& f, const Chain& chain, const Assignment& e) {
  check_signature(f, chain.kind());
  return eval_node(f, chain, e);
}

std::vector<Value> evaluate(const Formula& f, const ProductMatrix& m, const ProductAssignment& e) {
  std::vector<Value> out;
  for (std::size_t c = 0; c < m.arity(); ++c) {
    Assignment proj;
    for (const auto& [name, tuple] : e) {
      if (tuple.size() != m.arity())
        throw InputError("tuple for " + name + " does not match the product arity");
      proj.emplace(name, tuple[c]);
    }
    out.push_back(evaluate(f, m.components()[c].chain, proj));
  }
  return out;
}

std::string to_string(const Assignment& e, const Chain& chain) {
  std::string out = "{";
  for (const auto& [name, v] : e) {
    if (out.size() > 1) out += ", ";
    out += name + "=" + chain.format(v);
  }
  return out + "}";
}

std::string to_string(const ProductAssignment& e, const ProductMatrix& m) {
  std::string out = "{";
  for (const auto& [name, tuple] : e) {
    if (out.size() > 1) out += ", ";
    out += name + "=";
    if (m.is_single()) {
      out += m.components()[0].chain.format(tuple.at(0));
      continue;
    }
    out += "(";
    for (std::size_t c = 0; c < tuple.size(); ++c) {
      if (c) out += ",";
      out += m.components().at(c).chain.format(tuple[c]);
    }
    out += ")";
  }
  return out + "}";
}

}  // namespace mvl
