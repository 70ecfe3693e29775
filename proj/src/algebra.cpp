#include "mvl/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace mvl {

std::string_view to_string(ChainKind kind) {
  switch (kind) {
    case ChainKind::GodelInv: return "GodelInv";
    case ChainKind::MV: return "MV";
    case ChainKind::FT: return "FT";
  }
  return "?";
}

Rational make_rational(long num, long den) {
  if (den == 0) throw InputError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

std::string to_string(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

Chain::Chain(ChainKind kind, int size) : kind_(kind), size_(size) {
  if (size < 2) throw InputError("chain size must be at least 2, got " + std::to_string(size));
}

void Chain::check(Value a) const {
  if (!contains(a)) {
    throw InputError("index " + std::to_string(a) + " out of range for chain of size " +
                     std::to_string(size_));
  }
}

Value Chain::meet(Value a, Value b) const {
  check(a);
  check(b);
  return std::min(a, b);
}

Value Chain::join(Value a, Value b) const {
  check(a);
  check(b);
  return std::max(a, b);
}

Value Chain::godel_implies(Value a, Value b) const {
  check(a);
  check(b);
  return a <= b ? top() : b;
}

Value Chain::godel_neg(Value a) const {
  check(a);
  return a == 0 ? top() : 0;
}

Value Chain::involution(Value a) const {
  check(a);
  return top() - a;
}

Value Chain::delta(Value a) const {
  check(a);
  return a == top() ? top() : 0;
}

Value Chain::luk_implies(Value a, Value b) const {
  check(a);
  check(b);
  return std::min(top(), top() - a + b);
}

Value Chain::ft_implies(Value a, Value b) const {
  check(a);
  check(b);
  return a <= b ? std::max(top() - a, b) : 0;
}

Rational Chain::rational(Value a) const {
  check(a);
  return make_rational(a, top());
}

std::string Chain::format(Value a) const { return to_string(rational(a)); }

Component::Component(Chain c, Value threshold) : chain(c), filter{threshold} {
  if (threshold <= 0 || threshold > chain.top()) {
    throw InputError("filter threshold " + std::to_string(threshold) +
                     " must lie in 1.." + std::to_string(chain.top()));
  }
}

bool canonical_before(const Component& a, const Component& b) {
  if (a.chain.size() != b.chain.size()) return a.chain.size() > b.chain.size();
  if (a.filter.threshold != b.filter.threshold) return a.filter.threshold > b.filter.threshold;
  return a.chain.kind() < b.chain.kind();
}

ProductMatrix::ProductMatrix(std::vector<Component> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw InputError("a product matrix needs at least one component");
}

ProductMatrix::ProductMatrix(Component single) : components_{single} {}

ProductMatrix ProductMatrix::normalized() const {
  std::vector<Component> sorted = components_;
  std::sort(sorted.begin(), sorted.end(), canonical_before);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return ProductMatrix(std::move(sorted));
}

bool ProductMatrix::is_normalized() const { return normalized() == *this; }

std::string to_string(const Component& c) {
  std::string out;
  switch (c.chain.kind()) {
    case ChainKind::GodelInv: out = "GV" + std::to_string(c.chain.size()) + "~"; break;
    case ChainKind::MV: out = "LV" + std::to_string(c.chain.size()); break;
    case ChainKind::FT: out = "FT" + std::to_string(c.chain.size()); break;
  }
  return out + "[>=" + std::to_string(c.filter.threshold) + "]";
}

std::string to_string(const ProductMatrix& m) {
  std::string out;
  for (const auto& c : m.components()) {
    if (!out.empty()) out += "x";
    out += to_string(c);
  }
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view token) {
    if (!accept(token)) throw SyntaxError("expected '" + std::string(token) + "'", pos_);
  }
  int number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError("expected a number", pos_);
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Component read_component(Cursor& in) {
  ChainKind kind;
  if (in.accept("GV")) {
    kind = ChainKind::GodelInv;
  } else if (in.accept("LV")) {
    kind = ChainKind::MV;
  } else if (in.accept("FT")) {
    kind = ChainKind::FT;
  } else {
    throw SyntaxError("expected GV, LV or FT", in.pos());
  }
  const int size = in.number();
  if (kind == ChainKind::GodelInv) in.expect("~");
  in.expect("[");
  in.expect(">=");
  const int threshold = in.number();
  in.expect("]");
  return Component(Chain(kind, size), threshold);
}

}  // namespace

Component parse_component(std::string_view text) {
  Cursor in(text);
  Component c = read_component(in);
  if (!in.done()) throw SyntaxError("trailing input after component", in.pos());
  return c;
}

ProductMatrix parse_matrix(std::string_view text) {
  Cursor in(text);
  std::vector<Component> parts;
  parts.push_back(read_component(in));
  while (in.accept("x")) parts.push_back(read_component(in));
  if (!in.done()) throw SyntaxError("trailing input after matrix", in.pos());
  return ProductMatrix(std::move(parts));
}

Subuniverse generate_subuniverse(const Chain& chain, const std::vector<Value>& seeds) {
  std::vector<bool> in(static_cast<std::size_t>(chain.size()), false);
  in.front() = true;
  in.back() = true;
  for (Value s : seeds) {
    chain.check(s);
    in[static_cast<std::size_t>(s)] = true;
  }
  // Fixpoint iteration over the operations of the chain's signature.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Value> current;
    for (Value a = 0; a < chain.size(); ++a)
      if (in[static_cast<std::size_t>(a)]) current.push_back(a);
    auto add = [&](Value v) {
      if (!in[static_cast<std::size_t>(v)]) {
        in[static_cast<std::size_t>(v)] = true;
        grew = true;
      }
    };
    for (Value a : current) {
      add(chain.involution(a));
      if (chain.kind() != ChainKind::MV) add(chain.delta(a));
      for (Value b : current) {
        switch (chain.kind()) {
          case ChainKind::GodelInv:
            add(chain.godel_implies(a, b));
            break;
          case ChainKind::MV:
            add(chain.luk_implies(a, b));
            break;
          case ChainKind::FT:
            add(chain.ft_implies(a, b));
            break;
        }
      }
    }
  }
  Subuniverse out{chain, {}};
  for (Value a = 0; a < chain.size(); ++a)
    if (in[static_cast<std::size_t>(a)]) out.members.push_back(a);
  return out;
}

std::vector<Subuniverse> enumerate_subuniverses(const Chain& chain) {
  if (chain.kind() != ChainKind::GodelInv)
    throw InputError("subuniverse enumeration is defined for Gödel chains with involution");
  // Each optional member is a pair {a, ~a} below the midpoint, plus the
  // fixpoint when the chain has one.
  std::vector<std::vector<Value>> optional;
  for (Value a = 1; 2 * a < chain.top(); ++a) optional.push_back({a, chain.top() - a});
  if (chain.has_fixpoint() && chain.size() > 2) optional.push_back({chain.top() / 2});

  std::vector<Subuniverse> out;
  const std::size_t count = std::size_t{1} << optional.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    Subuniverse s{chain, {0, chain.top()}};
    for (std::size_t k = 0; k < optional.size(); ++k)
      if (mask & (std::size_t{1} << k))
        s.members.insert(s.members.end(), optional[k].begin(), optional[k].end());
    std::sort(s.members.begin(), s.members.end());
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Subuniverse& a, const Subuniverse& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

std::vector<int> divisors(int n) {
  if (n < 1) throw InputError("divisors need a positive integer");
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<Chain> enumerate_mv_subchains(int n) {
  std::vector<Chain> out;
  for (int d : divisors(n)) out.push_back(Chain::mv(d + 1));
  return out;
}

}  // namespace mvl
