#include "mvl/term_search.hpp"

#include <algorithm>

#include "compiled.hpp"

namespace mvl {

namespace {

std::vector<Op> unary_ops(ChainKind kind) {
  if (kind == ChainKind::GodelInv) return {Op::Inv, Op::GNeg, Op::Delta};
  return {Op::Inv, Op::Delta};
}

std::vector<Op> binary_ops(ChainKind kind) {
  switch (kind) {
    case ChainKind::GodelInv: return {Op::And, Op::Or, Op::GImp, Op::Iff};
    case ChainKind::MV: return {Op::And, Op::Or, Op::LukImp};
    case ChainKind::FT: return {Op::And, Op::Or, Op::FTImp};
  }
  return {};
}

bool commutative(Op op) { return op == Op::And || op == Op::Or || op == Op::Iff; }

}  // namespace

std::size_t TermPool::VecHash::operator()(const std::vector<Value>& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Value x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
  return h;
}

TermPool::TermPool(std::vector<Chain> chains, std::vector<std::string> vars, std::size_t cap)
    : chains_(std::move(chains)), vars_(std::move(vars)), cap_(cap) {
  if (chains_.empty()) throw InputError("term search needs at least one chain");
  for (const auto& c : chains_) {
    if (c.kind() != chains_.front().kind())
      throw InputError("term search chains must share one kind");
    offsets_.push_back(points_);
    const std::size_t n = detail::power(static_cast<std::size_t>(c.size()), vars_.size());
    if (n > 50'000'000) throw ResourceError("term search space too large");
    counts_.push_back(n);
    points_ += n;
  }
}

std::vector<Value> TermPool::unary(Op op, const std::vector<Value>& a) const {
  std::vector<Value> out(points_);
  for (std::size_t c = 0; c < chains_.size(); ++c) {
    const Value top = chains_[c].top();
    const std::size_t lo = offsets_[c], hi = lo + counts_[c];
    for (std::size_t i = lo; i < hi; ++i) {
      const Value x = a[i];
      switch (op) {
        case Op::Inv: out[i] = top - x; break;
        case Op::GNeg: out[i] = x == 0 ? top : 0; break;
        default: out[i] = x == top ? top : 0; break;
      }
    }
  }
  return out;
}

std::vector<Value> TermPool::binary(Op op, const std::vector<Value>& a,
                                    const std::vector<Value>& b) const {
  std::vector<Value> out(points_);
  for (std::size_t c = 0; c < chains_.size(); ++c) {
    const Value top = chains_[c].top();
    const std::size_t lo = offsets_[c], hi = lo + counts_[c];
    for (std::size_t i = lo; i < hi; ++i) {
      const Value x = a[i], y = b[i];
      Value r;
      switch (op) {
        case Op::And: r = std::min(x, y); break;
        case Op::Or: r = std::max(x, y); break;
        case Op::GImp: r = x <= y ? top : y; break;
        case Op::Iff: r = x == y ? top : std::min(x, y); break;
        case Op::LukImp: r = std::min(top, top - x + y); break;
        default: r = x <= y ? std::max(top - x, y) : 0; break;
      }
      out[i] = r;
    }
  }
  return out;
}

bool TermPool::add(Formula f, std::vector<Value> values, int depth, const Visit& visit, bool& stop) {
  if (!seen_.insert(values).second) return false;
  entries_.push_back(Entry{std::move(f), std::move(values), depth});
  if (visit && visit(entries_.back())) stop = true;
  return true;
}

TermPool::Step TermPool::grow(const Visit& visit, Clock::time_point deadline) {
  bool stop = false;
  if (depth_ < 0) {
    depth_ = 0;
    for (std::size_t k = 0; k < vars_.size() && !stop; ++k) {
      std::vector<Value> values(points_);
      for (std::size_t c = 0; c < chains_.size(); ++c) {
        const auto size = static_cast<std::size_t>(chains_[c].size());
        const std::size_t stride = detail::power(size, vars_.size() - 1 - k);
        for (std::size_t i = 0; i < counts_[c]; ++i)
          values[offsets_[c] + i] = static_cast<Value>((i / stride) % size);
      }
      add(var(vars_[k]), std::move(values), 0, visit, stop);
    }
    if (!stop) add(bot(), std::vector<Value>(points_, 0), 0, visit, stop);
    return stop ? Step::Found : Step::Grew;
  }

  const int prev = depth_;
  ++depth_;
  const ChainKind kind = chains_.front().kind();
  const std::size_t before = entries_.size();
  bool grew = false;

  for (Op op : unary_ops(kind)) {
    for (std::size_t i = 0; i < before; ++i) {
      if (entries_[i].depth != prev) continue;
      auto values = unary(op, entries_[i].values);
      grew |= add(Formula(op, {entries_[i].formula}), std::move(values), depth_, visit, stop);
      if (stop) return Step::Found;
      if (entries_.size() >= cap_) return Step::Capped;
    }
  }
  std::size_t tick = 0;
  for (Op op : binary_ops(kind)) {
    for (std::size_t i = 0; i < before; ++i) {
      for (std::size_t j = commutative(op) ? i + 1 : 0; j < before; ++j) {
        if (i == j) continue;
        if (entries_[i].depth != prev && entries_[j].depth != prev) continue;
        if ((++tick & 255u) == 0 && Clock::now() > deadline) return Step::TimedOut;
        auto values = binary(op, entries_[i].values, entries_[j].values);
        grew |= add(Formula(op, {entries_[i].formula, entries_[j].formula}), std::move(values),
                    depth_, visit, stop);
        if (stop) return Step::Found;
        if (entries_.size() >= cap_) return Step::Capped;
      }
    }
  }
  return grew ? Step::Grew : Step::Saturated;
}

}  // namespace mvl
