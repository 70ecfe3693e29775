#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvl/formula.hpp"

namespace mvl {

// (x -> y) | (~x | y)
Formula luk3_term(const Formula& x, const Formula& y);
// ~x | (D(~x -> x) & ~D x & !!y & x) | (x -> y)
Formula luk4_term(const Formula& x, const Formula& y);

// Gödel implication and negation in the MV signature:
// (D(x =>L y) | y, D ~x).
std::pair<Formula, Formula> godel_from_mv_terms(const Formula& x, const Formula& y);

// (D(x <-> y) & z) | (!D(x <-> y) & x)
Formula discriminator_term(const Formula& x, const Formula& y, const Formula& z);

// which = 1: (~f -> f) & !D(f <-> ~f); 2: ~f -> f; 3: !!f.
Formula star_translation(int which, const Formula& f);
FormulaSet star_translation(int which, std::span<const Formula> fs);
FormulaSet delta_set_translation(std::span<const Formula> fs);

// FT signature into the Gödel signature, and back.
Formula ft_star(const Formula& f);
Formula ft_hash(const Formula& f);

// Phi(p0, ..., p{n-1}): top exactly when p_i = i/(n-1) for every i.
Formula tuple_characterizer(int n);

// One-variable formula in `p` with value top at index `a` and 0 elsewhere on
// GV_n~. Defined for n in {3, 4, 5}; throws InputError otherwise.
Formula single_value_characterizer(int n, Value a);
// The bounded synthesis behind it, usable for any n. Returns nullopt when
// the term pool saturates or the depth bound is reached without a witness.
std::optional<Formula> synthesize_single_value(int n, Value a, int max_depth = 6);

// The unary connective ~^i_n: top below i/n, 0 from i/n upwards. It is
// evaluated on any chain by comparing the denoted rational with i/n.
TableConnPtr tilde_table_conn(int n, int i);
Formula tilde(int n, int i, const Formula& f);
// ~^i_n f | g
Formula tilde_implies(int n, int i, const Formula& f, const Formula& g);

struct AxiomSchema {
  std::string name;
  int metavariables;
  std::function<Formula(std::span<const Formula>)> build;

  // Instance with metavariables replaced by p1, p2, ...
  Formula instance() const;
  Formula instance(std::span<const Formula> args) const;
};

// A1-A7 (with A4a/A4b), ~1-~3, D1, D2, D5 and NFP.
std::vector<AxiomSchema> axiom_schemas();
// (phi1 -> phi2) | ... | (phi_n -> phi_{n+1})
AxiomSchema axiom_gn(int n);
const AxiomSchema& axiom(const std::string& name);

// D(!f | f)
Formula godel_consistency(const Formula& f);
// ~^i_n(f & ~f), with ~ the involution (the MV negation)
Formula luk_consistency(int n, int i, const Formula& f);

}  // namespace mvl
