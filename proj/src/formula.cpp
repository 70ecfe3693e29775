#include "mvl/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "mvl/terms.hpp"

namespace mvl {

std::string_view to_string(Op op) {
  switch (op) {
    case Op::Var: return "var";
    case Op::Bot: return "0";
    case Op::Top: return "1";
    case Op::And: return "&";
    case Op::Or: return "|";
    case Op::GImp: return "->";
    case Op::Inv: return "~";
    case Op::GNeg: return "!";
    case Op::Delta: return "D";
    case Op::Iff: return "<->";
    case Op::LukImp: return "=>L";
    case Op::FTImp: return "=>F";
    case Op::Table: return "table";
  }
  return "?";
}

int arity(Op op) {
  switch (op) {
    case Op::Var:
    case Op::Bot:
    case Op::Top: return 0;
    case Op::Inv:
    case Op::GNeg:
    case Op::Delta: return 1;
    case Op::Table: return -1;
    default: return 2;
  }
}

std::vector<Value> TableConn::table(const Chain& chain) const {
  std::size_t rows = 1;
  for (int k = 0; k < arity_; ++k) rows *= static_cast<std::size_t>(chain.size());
  std::vector<Value> out;
  out.reserve(rows);
  std::vector<Value> args(static_cast<std::size_t>(arity_), 0);
  for (std::size_t r = 0; r < rows; ++r) {
    std::size_t rest = r;
    for (int k = arity_ - 1; k >= 0; --k) {
      args[static_cast<std::size_t>(k)] = static_cast<Value>(rest % static_cast<std::size_t>(chain.size()));
      rest /= static_cast<std::size_t>(chain.size());
    }
    out.push_back(apply(chain, args));
  }
  return out;
}

Formula::Formula(Op op, std::vector<Formula> args) {
  if (op == Op::Var || op == Op::Table)
    throw InputError("use Formula::variable or Formula::table for this node kind");
  if (static_cast<int>(args.size()) != arity(op))
    throw InputError("wrong number of arguments for connective " + std::string(to_string(op)));
  node_ = std::make_shared<const Node>(Node{op, {}, std::move(args), nullptr});
}

Formula Formula::variable(std::string name) {
  if (name.empty()) throw InputError("empty variable name");
  return Formula(std::make_shared<const Node>(Node{Op::Var, std::move(name), {}, nullptr}));
}

Formula Formula::table(TableConnPtr conn, std::vector<Formula> args) {
  if (!conn) throw InputError("null table connective");
  if (static_cast<int>(args.size()) != conn->arity())
    throw InputError("wrong number of arguments for " + conn->name());
  return Formula(std::make_shared<const Node>(Node{Op::Table, {}, std::move(args), std::move(conn)}));
}

std::size_t Formula::size() const {
  std::size_t n = 1;
  for (const auto& a : args()) n += a.size();
  return n;
}

std::size_t Formula::depth() const {
  std::size_t d = 0;
  for (const auto& a : args()) d = std::max(d, a.depth() + 1);
  return d;
}

bool operator==(const Formula& a, const Formula& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.op() <=> b.op(); c != 0) return c;
  if (a.op() == Op::Var) return a.name() <=> b.name();
  if (a.op() == Op::Table) {
    if (auto c = a.conn()->name() <=> b.conn()->name(); c != 0) return c;
  }
  if (auto c = a.args().size() <=> b.args().size(); c != 0) return c;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (auto c = a.args()[i] <=> b.args()[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

Formula var(std::string name) { return Formula::variable(std::move(name)); }
Formula bot() { return Formula(Op::Bot, {}); }
Formula top() { return Formula(Op::Top, {}); }
Formula conj(Formula a, Formula b) { return Formula(Op::And, {std::move(a), std::move(b)}); }
Formula disj(Formula a, Formula b) { return Formula(Op::Or, {std::move(a), std::move(b)}); }
Formula gimp(Formula a, Formula b) { return Formula(Op::GImp, {std::move(a), std::move(b)}); }
Formula inv(Formula a) { return Formula(Op::Inv, {std::move(a)}); }
Formula gneg(Formula a) { return Formula(Op::GNeg, {std::move(a)}); }
Formula delta(Formula a) { return Formula(Op::Delta, {std::move(a)}); }
Formula iff(Formula a, Formula b) { return Formula(Op::Iff, {std::move(a), std::move(b)}); }
Formula limp(Formula a, Formula b) { return Formula(Op::LukImp, {std::move(a), std::move(b)}); }
Formula ftimp(Formula a, Formula b) { return Formula(Op::FTImp, {std::move(a), std::move(b)}); }
Formula apply_table(TableConnPtr conn, std::vector<Formula> args) {
  return Formula::table(std::move(conn), std::move(args));
}

Formula conj_all(std::span<const Formula> parts) {
  if (parts.empty()) return top();
  Formula out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = conj(out, parts[i]);
  return out;
}

Formula disj_all(std::span<const Formula> parts) {
  if (parts.empty()) return bot();
  Formula out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = disj(out, parts[i]);
  return out;
}

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      // Compare digit runs by value: strip leading zeros, then length, then text.
      std::string_view ra = a.substr(i, ie - i), rb = b.substr(j, je - j);
      while (ra.size() > 1 && ra.front() == '0') ra.remove_prefix(1);
      while (rb.size() > 1 && rb.front() == '0') rb.remove_prefix(1);
      if (ra.size() != rb.size()) return ra.size() < rb.size();
      if (ra != rb) return ra < rb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

namespace {

void collect_vars(const Formula& f, std::set<std::string>& out) {
  if (f.op() == Op::Var) {
    out.insert(f.name());
    return;
  }
  for (const auto& a : f.args()) collect_vars(a, out);
}

std::vector<std::string> sorted_vars(const std::set<std::string>& names) {
  std::vector<std::string> out(names.begin(), names.end());
  std::sort(out.begin(), out.end(),
            [](const std::string& a, const std::string& b) { return natural_less(a, b); });
  return out;
}

}  // namespace

std::vector<std::string> variables(const Formula& f) {
  std::set<std::string> names;
  collect_vars(f, names);
  return sorted_vars(names);
}

std::vector<std::string> variables(std::span<const Formula> fs) {
  std::set<std::string> names;
  for (const auto& f : fs) collect_vars(f, names);
  return sorted_vars(names);
}

Formula expand_derived(const Formula& f) {
  switch (f.op()) {
    case Op::Var:
    case Op::Bot: return f;
    case Op::Top: return gimp(bot(), bot());
    case Op::Table: {
      std::vector<Formula> args;
      for (const auto& a : f.args()) args.push_back(expand_derived(a));
      return apply_table(f.conn(), std::move(args));
    }
    default: break;
  }
  std::vector<Formula> e;
  for (const auto& a : f.args()) e.push_back(expand_derived(a));
  switch (f.op()) {
    case Op::And: return conj(e[0], e[1]);
    case Op::GImp: return gimp(e[0], e[1]);
    case Op::Inv: return inv(e[0]);
    case Op::LukImp: return limp(e[0], e[1]);
    case Op::FTImp: return ftimp(e[0], e[1]);
    case Op::Or:
      return conj(gimp(gimp(e[0], e[1]), e[1]), gimp(gimp(e[1], e[0]), e[0]));
    case Op::GNeg: return gimp(e[0], bot());
    case Op::Delta: return gimp(inv(e[0]), bot());
    case Op::Iff: return conj(gimp(e[0], e[1]), gimp(e[1], e[0]));
    default: break;
  }
  throw InputError("unexpected connective in expand_derived");
}

// ---------------------------------------------------------------------------
// Printing

namespace {

enum Prec { kIff = 1, kImp = 2, kOr = 3, kAnd = 4, kUnary = 5, kAtom = 6 };

int precedence(const Formula& f) {
  switch (f.op()) {
    case Op::Iff: return kIff;
    case Op::GImp:
    case Op::LukImp:
    case Op::FTImp: return kImp;
    case Op::Or: return kOr;
    case Op::And: return kAnd;
    case Op::Inv:
    case Op::GNeg:
    case Op::Delta:
    case Op::Table: return kUnary;
    default: return kAtom;
  }
}

bool right_assoc(int prec) { return prec == kImp || prec == kIff; }

void print(const Formula& f, std::string& out);

void print_child(const Formula& child, bool parens, std::string& out) {
  if (parens) out += '(';
  print(child, out);
  if (parens) out += ')';
}

void print(const Formula& f, std::string& out) {
  const int prec = precedence(f);
  switch (f.op()) {
    case Op::Var: out += f.name(); return;
    case Op::Bot: out += '0'; return;
    case Op::Top: out += '1'; return;
    case Op::Inv:
    case Op::GNeg:
      out += f.op() == Op::Inv ? '~' : '!';
      print_child(f.arg(), precedence(f.arg()) < kUnary, out);
      return;
    case Op::Delta: {
      out += 'D';
      const bool parens = precedence(f.arg()) < kUnary;
      if (!parens) out += ' ';
      print_child(f.arg(), parens, out);
      return;
    }
    case Op::Table: {
      out += f.conn()->name();
      if (f.args().size() == 1) {
        print_child(f.arg(), precedence(f.arg()) < kUnary, out);
      } else {
        out += '(';
        for (std::size_t i = 0; i < f.args().size(); ++i) {
          if (i) out += ", ";
          print(f.args()[i], out);
        }
        out += ')';
      }
      return;
    }
    default: break;
  }
  const int lp = precedence(f.arg(0));
  const int rp = precedence(f.arg(1));
  print_child(f.arg(0), lp < prec || (lp == prec && right_assoc(prec)), out);
  out += ' ';
  out += to_string(f.op());
  out += ' ';
  print_child(f.arg(1), rp < prec || (rp == prec && !right_assoc(prec)), out);
}

void print_canonical(const Formula& f, std::string& out) {
  switch (f.op()) {
    case Op::Var: out += f.name(); return;
    case Op::Bot:
    case Op::Top: out += to_string(f.op()); return;
    default: break;
  }
  out += '(';
  out += f.op() == Op::Table ? std::string_view(f.conn()->name()) : to_string(f.op());
  for (const auto& a : f.args()) {
    out += ' ';
    print_canonical(a, out);
  }
  out += ')';
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

std::string to_string(std::span<const Formula> fs) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ", ";
    out += to_string(fs[i]);
  }
  return out;
}

std::string to_canonical(const Formula& f) {
  std::string out;
  print_canonical(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse_all() {
    Formula f = parse_iff();
    skip_space();
    if (pos_ < text_.size()) throw SyntaxError("unexpected input", pos_);
    return f;
  }

  FormulaSet parse_list() {
    FormulaSet out;
    skip_space();
    if (pos_ >= text_.size()) return out;
    out.push_back(parse_iff());
    while (accept(",")) out.push_back(parse_iff());
    skip_space();
    if (pos_ < text_.size()) throw SyntaxError("unexpected input", pos_);
    return out;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
  }

  Formula parse_iff() {
    Formula lhs = parse_imp();
    if (accept("<->")) return iff(lhs, parse_iff());
    return lhs;
  }

  Formula parse_imp() {
    Formula lhs = parse_or();
    if (accept("->")) return gimp(lhs, parse_imp());
    if (accept("=>L")) return limp(lhs, parse_imp());
    if (accept("=>F")) return ftimp(lhs, parse_imp());
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (accept("|")) lhs = disj(lhs, parse_and());
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (accept("&")) lhs = conj(lhs, parse_unary());
    return lhs;
  }

  int read_number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError("expected a number", pos_);
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  Formula parse_unary() {
    if (accept("~[")) {
      const int i = read_number();
      if (!accept("/")) throw SyntaxError("expected '/'", pos_);
      const int n = read_number();
      if (!accept("]")) throw SyntaxError("expected ']'", pos_);
      return apply_table(tilde_table_conn(n, i), {parse_unary()});
    }
    if (accept("~")) return inv(parse_unary());
    if (accept("!")) return gneg(parse_unary());
    return parse_atom();
  }

  Formula parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Formula inner = parse_iff();
      if (!accept(")")) throw SyntaxError("expected ')'", pos_);
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "D") return delta(parse_unary());
      return var(std::move(name));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      const std::string_view tok = text_.substr(start, pos_ - start);
      if (tok == "0") return bot();
      if (tok == "1") return top();
      throw SyntaxError("only 0 and 1 are constants", start);
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse_all(); }

FormulaSet parse_formula_list(std::string_view text) { return Parser(text).parse_list(); }

}  // namespace mvl
