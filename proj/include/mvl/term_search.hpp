#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

#include "mvl/algebra.hpp"
#include "mvl/formula.hpp"

namespace mvl {

// Breadth-first enumeration of terms, deduplicated by their value vectors
// over a joint evaluation space: every assignment of `vars` on every chain.
class TermPool {
 public:
  struct Entry {
    Formula formula;
    std::vector<Value> values;
    int depth;
  };

  enum class Step { Found, Grew, Saturated, Capped, TimedOut };

  using Clock = std::chrono::steady_clock;
  using Visit = std::function<bool(const Entry&)>;

  // All chains must share one kind, which selects the connectives used.
  TermPool(std::vector<Chain> chains, std::vector<std::string> vars, std::size_t cap = 5000);

  const std::vector<Chain>& chains() const noexcept { return chains_; }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  int depth() const noexcept { return depth_; }

  std::size_t points() const noexcept { return points_; }
  std::size_t offset(std::size_t chain) const { return offsets_.at(chain); }
  std::size_t count(std::size_t chain) const { return counts_.at(chain); }

  // Level 0 (variables and bottom) is visited on the first call; later calls
  // add one depth level. `visit` sees each new entry in generation order and
  // may return true to stop.
  Step grow(const Visit& visit, Clock::time_point deadline = Clock::time_point::max());

 private:
  struct VecHash {
    std::size_t operator()(const std::vector<Value>& v) const noexcept;
  };

  bool add(Formula f, std::vector<Value> values, int depth, const Visit& visit, bool& stop);
  std::vector<Value> unary(Op op, const std::vector<Value>& a) const;
  std::vector<Value> binary(Op op, const std::vector<Value>& a, const std::vector<Value>& b) const;

  std::vector<Chain> chains_;
  std::vector<std::string> vars_;
  std::size_t cap_;
  std::size_t points_ = 0;
  std::vector<std::size_t> offsets_, counts_;
  std::vector<Entry> entries_;
  std::unordered_set<std::vector<Value>, VecHash> seen_;
  int depth_ = -1;
};

}  // namespace mvl
