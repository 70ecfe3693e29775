#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mvl/algebra.hpp"
#include "mvl/eval.hpp"
#include "mvl/formula.hpp"

namespace mvl {

struct EntailOptions {
  std::uint64_t budget = 100'000'000;  // evaluation steps
  unsigned workers = 1;
};

struct Counterexample {
  std::size_t matrix = 0;  // position within the family
  ProductAssignment assignment;
  std::vector<std::vector<Value>> premise_values;
  std::vector<Value> conclusion_values;
};

struct Verdict {
  bool holds = true;
  std::optional<Counterexample> counterexample;
  std::uint64_t steps = 0;
  bool complete = true;
};

// Decides Gamma |- phi in the product matrix. Assignments are ordered
// lexicographically, first variable most significant and, within one
// variable's tuple, first component most significant; the least
// counterexample is reported. Throws ResourceError when the worst-case step
// count exceeds the budget.
Verdict entails_matrix(const ProductMatrix& m, std::span<const Formula> gamma, const Formula& phi,
                       const EntailOptions& opts = {});

// Intersection of the member logics; the first failing member reports.
Verdict entails_family(std::span<const ProductMatrix> family, std::span<const Formula> gamma,
                       const Formula& phi, const EntailOptions& opts = {});

// Same relation as entails_matrix, computed by walking every tuple of
// component evaluations. Kept as an independent cross-check.
Verdict entails_product_def(const ProductMatrix& m, std::span<const Formula> gamma,
                            const Formula& phi, const EntailOptions& opts = {});

Verdict check_valid(const ProductMatrix& m, const Formula& phi, const EntailOptions& opts = {});

// Re-evaluates a failing verdict's counterexample with the tree evaluator.
// Holding verdicts certify trivially.
bool certify(std::span<const ProductMatrix> family, std::span<const Formula> gamma,
             const Formula& phi, const Verdict& v);
bool certify(const ProductMatrix& m, std::span<const Formula> gamma, const Formula& phi,
             const Verdict& v);

struct DegreeVerdict {
  Verdict verdict;         // from the implication check
  bool implication_valid;  // |- Gamma^ -> phi on <GV_n~, {1}>
  bool min_preserved;      // e(phi) >= min e(Gamma) for every e
};

// Degree-preserving consequence over GV_n~. Both checks are always run;
// disagreement throws std::logic_error.
DegreeVerdict entails_degree_preserving(int n, std::span<const Formula> gamma, const Formula& phi,
                                        const EntailOptions& opts = {});

// Order filters on the standard algebra, grouped by the relation they induce
// on finite premise sets.
enum class StandardClass { Exact1, OpenPos, AtHalf, AboveHalf, OpenNeg, AboveZero };

std::string_view to_string(StandardClass c);
StandardClass parse_standard_class(std::string_view text);

// The grid family deciding the class for queries in `nvars` variables:
// <GV_m~, F_t> with m = 2*nvars + 5 and t ranging over the class.
std::vector<ProductMatrix> standard_grid_family(StandardClass c, std::size_t nvars);

// Finitary consequence of the class over [0,1] with the involution.
Verdict decide_standard(StandardClass c, std::span<const Formula> gamma, const Formula& phi,
                        const EntailOptions& opts = {});

std::string to_string(const Counterexample& ce, const ProductMatrix& m);

}  // namespace mvl
