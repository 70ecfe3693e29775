#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mvl/algebra.hpp"

namespace mvl {

enum class Op : std::uint8_t {
  Var,
  Bot,
  Top,
  And,
  Or,
  GImp,    // Gödel implication
  Inv,     // involutive negation ~
  GNeg,    // Gödel negation !
  Delta,   // Baaz-Monteiro projection D
  Iff,
  LukImp,  // Łukasiewicz implication =>L
  FTImp,   // =>F
  Table,   // connective given semantically by a value function
};

std::string_view to_string(Op op);
int arity(Op op);

// A connective defined by its values rather than by a term. The function is
// given the chain it is evaluated on, so one definition serves every chain
// of a product.
class TableConn {
 public:
  using Fn = std::function<Value(const Chain&, std::span<const Value>)>;

  TableConn(std::string name, int arity, Fn fn)
      : name_(std::move(name)), arity_(arity), fn_(std::move(fn)) {}

  const std::string& name() const noexcept { return name_; }
  int arity() const noexcept { return arity_; }
  Value apply(const Chain& chain, std::span<const Value> args) const { return fn_(chain, args); }

  // The explicit value table on `chain`, arguments in row-major order.
  std::vector<Value> table(const Chain& chain) const;

 private:
  std::string name_;
  int arity_;
  Fn fn_;
};

using TableConnPtr = std::shared_ptr<const TableConn>;

class Formula {
 public:
  Formula(Op op, std::vector<Formula> args);
  static Formula variable(std::string name);
  static Formula table(TableConnPtr conn, std::vector<Formula> args);

  Op op() const noexcept { return node_->op; }
  const std::string& name() const noexcept { return node_->name; }
  const std::vector<Formula>& args() const noexcept { return node_->args; }
  const Formula& arg(std::size_t i = 0) const { return node_->args.at(i); }
  const TableConnPtr& conn() const noexcept { return node_->conn; }

  bool is_atomic() const noexcept {
    return op() == Op::Var || op() == Op::Bot || op() == Op::Top;
  }
  std::size_t size() const;
  std::size_t depth() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node {
    Op op;
    std::string name;
    std::vector<Formula> args;
    TableConnPtr conn;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

using FormulaSet = std::vector<Formula>;

// Builders.
Formula var(std::string name);
Formula bot();
Formula top();
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula gimp(Formula a, Formula b);
Formula inv(Formula a);
Formula gneg(Formula a);
Formula delta(Formula a);
Formula iff(Formula a, Formula b);
Formula limp(Formula a, Formula b);
Formula ftimp(Formula a, Formula b);
Formula apply_table(TableConnPtr conn, std::vector<Formula> args);

// Left-nested conjunction/disjunction; `top()`/`bot()` on empty input.
Formula conj_all(std::span<const Formula> parts);
Formula disj_all(std::span<const Formula> parts);

// Variable names in natural order (p2 before p10), without duplicates.
std::vector<std::string> variables(const Formula& f);
std::vector<std::string> variables(std::span<const Formula> fs);
bool natural_less(std::string_view a, std::string_view b);

struct NaturalLess {
  bool operator()(std::string_view a, std::string_view b) const { return natural_less(a, b); }
};

// Rewrites Or, GNeg, Delta, Iff and Top into {And, GImp, Inv, Bot, Var};
// LukImp, FTImp and Table nodes stay, with expanded arguments.
Formula expand_derived(const Formula& f);

// Infix text in the input grammar with minimal parentheses.
std::string to_string(const Formula& f);
std::string to_string(std::span<const Formula> fs);  // comma separated
// Fully parenthesized prefix form, stable across printer changes.
std::string to_canonical(const Formula& f);

// Grammar: `~` `!` `D` `~[i/n]` prefix; `&`, `|` left associative;
// `->`, `=>L`, `=>F` right associative; `<->` loosest; `0`, `1` constants.
Formula parse_formula(std::string_view text);
// Comma separated list, possibly empty.
FormulaSet parse_formula_list(std::string_view text);

}  // namespace mvl
