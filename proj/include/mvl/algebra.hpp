#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mvl/error.hpp"

namespace mvl {

// An element of a finite chain: index i of a chain with n elements denotes
// the rational i/(n-1).
using Value = int;

// Which signature a formula may use against a chain. Every chain carries
// every operation table; the kind only decides what evaluation accepts.
enum class ChainKind : std::uint8_t { GodelInv, MV, FT };

std::string_view to_string(ChainKind kind);

struct Rational {
  long num = 0;
  long den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
  // Exact comparison by cross multiplication (denominators are positive).
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num * b.den <=> b.num * a.den;
  }
};

Rational make_rational(long num, long den);
std::string to_string(const Rational& r);

class Chain {
 public:
  Chain(ChainKind kind, int size);

  static Chain godel(int size) { return Chain(ChainKind::GodelInv, size); }
  static Chain mv(int size) { return Chain(ChainKind::MV, size); }
  static Chain ft(int size) { return Chain(ChainKind::FT, size); }

  ChainKind kind() const noexcept { return kind_; }
  int size() const noexcept { return size_; }
  Value top() const noexcept { return size_ - 1; }
  bool contains(Value a) const noexcept { return a >= 0 && a < size_; }
  bool has_fixpoint() const noexcept { return size_ % 2 == 1; }

  // Throws InputError when `a` is not an index of this chain.
  void check(Value a) const;

  Value meet(Value a, Value b) const;
  Value join(Value a, Value b) const;
  Value godel_implies(Value a, Value b) const;
  Value godel_neg(Value a) const;
  Value involution(Value a) const;
  Value delta(Value a) const;
  Value luk_implies(Value a, Value b) const;
  Value ft_implies(Value a, Value b) const;

  Rational rational(Value a) const;
  // "0", "1", "1/2", ... in lowest terms.
  std::string format(Value a) const;

  friend bool operator==(const Chain&, const Chain&) = default;
  friend auto operator<=>(const Chain&, const Chain&) = default;

 private:
  ChainKind kind_;
  int size_;
};

// Principal order filter {a : a >= threshold} of a finite chain.
struct OrderFilter {
  Value threshold = 1;

  bool contains(Value a) const noexcept { return a >= threshold; }

  friend bool operator==(const OrderFilter&, const OrderFilter&) = default;
  friend auto operator<=>(const OrderFilter&, const OrderFilter&) = default;
};

// A chain paired with one of its order filters: a single-chain matrix.
struct Component {
  Chain chain;
  OrderFilter filter;

  Component(Chain c, Value threshold);

  bool designated(Value a) const noexcept { return filter.contains(a); }

  friend bool operator==(const Component&, const Component&) = default;
};

// Canonical component order: larger chains first, then larger thresholds.
bool canonical_before(const Component& a, const Component& b);

// Finite product of single-chain matrices. A tuple is designated iff each
// coordinate is designated in its component.
class ProductMatrix {
 public:
  explicit ProductMatrix(std::vector<Component> components);
  ProductMatrix(Component single);  // NOLINT(google-explicit-constructor)

  const std::vector<Component>& components() const noexcept { return components_; }
  std::size_t arity() const noexcept { return components_.size(); }
  bool is_single() const noexcept { return components_.size() == 1; }

  // Sorted canonically with repeated components removed. Repetition does
  // not change the induced consequence relation.
  ProductMatrix normalized() const;
  bool is_normalized() const;

  friend bool operator==(const ProductMatrix&, const ProductMatrix&) = default;

 private:
  std::vector<Component> components_;
};

// `GV5~[>=2]`, `LV4[>=1]`, `FT5[>=1]`; products joined by `x`.
std::string to_string(const Component& c);
std::string to_string(const ProductMatrix& m);
Component parse_component(std::string_view text);
ProductMatrix parse_matrix(std::string_view text);

// A subset of a chain closed under the operations of the chain's kind.
struct Subuniverse {
  Chain parent;
  std::vector<Value> members;  // sorted ascending

  // The chain isomorphic to this subuniverse (same kind, |members| elements).
  Chain as_chain() const { return Chain(parent.kind(), static_cast<int>(members.size())); }

  friend bool operator==(const Subuniverse&, const Subuniverse&) = default;
};

// Least subuniverse containing `seeds`, bottom and top.
Subuniverse generate_subuniverse(const Chain& chain, const std::vector<Value>& seeds);

// All subuniverses of a Gödel chain with involution: the involution-symmetric
// subsets containing both bounds. Ordered by size, then lexicographically.
std::vector<Subuniverse> enumerate_subuniverses(const Chain& chain);

// The MV chains LV_{d+1} for every divisor d of n, ascending.
std::vector<Chain> enumerate_mv_subchains(int n);

std::vector<int> divisors(int n);
bool is_prime(int n);

}  // namespace mvl
