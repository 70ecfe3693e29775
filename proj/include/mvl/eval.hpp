#pragma once

#include <map>
#include <string>
#include <vector>

#include "mvl/algebra.hpp"
#include "mvl/formula.hpp"

namespace mvl {

// Variable name to chain index.
using Assignment = std::map<std::string, Value, NaturalLess>;
// Variable name to one index per product component.
using ProductAssignment = std::map<std::string, std::vector<Value>, NaturalLess>;

// Whether formulas built with `op` may be evaluated on chains of `kind`.
bool supports(ChainKind kind, Op op);
// Throws InputError naming the first unsupported connective.
void check_signature(const Formula& f, ChainKind kind);

// Recursive tree evaluation. This is the reference evaluator used to
// certify results of the compiled engine.
Value evaluate(const Formula& f, const Chain& chain, const Assignment& e);
std::vector<Value> evaluate(const Formula& f, const ProductMatrix& m, const ProductAssignment& e);

std::string to_string(const Assignment& e, const Chain& chain);
std::string to_string(const ProductAssignment& e, const ProductMatrix& m);

}  // namespace mvl
