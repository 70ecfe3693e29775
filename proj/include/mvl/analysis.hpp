#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mvl/catalog.hpp"
#include "mvl/entailment.hpp"

namespace mvl {

// A query together with the verdict it received in one logic.
struct QueryCertificate {
  std::string logic;
  FormulaSet gamma;
  Formula phi = bot();
  Verdict verdict;
};

std::string to_string(const QueryCertificate& c);

// Re-decides the query in `logic` and checks the stored verdict, including
// the counterexample of a failing one.
bool replay(const LogicDescriptor& logic, const QueryCertificate& c);

struct ParaconsistencyResult {
  bool paraconsistent = false;
  QueryCertificate witness;  // p, neg p |- q
  // Per family member, per component: the component taken alone.
  std::vector<std::vector<bool>> components;
};

// p, neg p does not entail q. For products the componentwise criterion is
// computed as well; disagreement throws std::logic_error.
ParaconsistencyResult is_paraconsistent(const LogicDescriptor& logic, Op negation = Op::Inv);

// p, ~p |- bot.
bool validates_explosion(const LogicDescriptor& logic, QueryCertificate* certificate = nullptr);

using Connective = std::function<Formula(const Formula&)>;

struct LfiWitness {
  QueryCertificate paraconsistency;  // p, ~p |/- q
  QueryCertificate trivialization;   // p, ~p, o p |- q
  QueryCertificate positive;         // q, o q |/- r
  QueryCertificate negative;         // ~q, o q |/- r
  bool confirmed() const;
};

LfiWitness lfi_witness(const LogicDescriptor& logic, const Connective& circ);

struct SearchBounds {
  int max_depth = 6;
  std::size_t max_vars = 4;
  std::chrono::milliseconds time_limit{60'000};
  std::size_t pool_cap = 5000;
  std::size_t pair_cap = 1500;  // formulas considered on each side of a pair
};

struct Separation {
  enum class Kind { Theorem, Inconsistency, Consequence };
  Kind kind = Kind::Theorem;
  QueryCertificate holds;  // in the first logic
  QueryCertificate fails;  // in the second logic
};

std::string_view to_string(Separation::Kind kind);

struct SeparationSearch {
  std::optional<Separation> separation;
  bool exhausted_bounds = false;  // false when the time limit cut the search
};

// Bounded search for a query valid in `first` and refuted in `second`:
// theorems, then premise sets entailing bot, then single-premise pairs.
SeparationSearch find_separating_consequence(const LogicDescriptor& first,
                                             const LogicDescriptor& second,
                                             const SearchBounds& bounds = {});

struct ExtensionAudit {
  std::size_t entry = 0;
  std::string logic;
  bool paraconsistent = false;
  bool equivalent = false;            // each extends the other
  std::optional<bool> proper;         // set when the properness search ran
  std::optional<Separation> separation;
};

struct NonMaximality {
  std::string intermediate;
  ExtensionCertificate lower;  // intermediate extends the logic
  Separation above_logic;      // valid in intermediate, refuted in the logic
  Separation below_cpl;        // valid in CPL, refuted in intermediate
};

struct ClassificationReport {
  LogicDescriptor logic;
  std::size_t entry = 0;
  ParaconsistencyResult paraconsistency;
  bool explosive = false;
  QueryCertificate explosion;
  std::optional<bool> saturated;
  std::vector<ExtensionAudit> audit;
  std::optional<bool> ideal;
  std::string basis;  // how `ideal` was decided
  std::optional<NonMaximality> non_maximality;
  std::optional<LfiWitness> lfi;
};

struct ClassifyOptions {
  SearchBounds bounds;
  unsigned workers = 1;
};

// Every catalog entry, in catalog order. Saturated iff paraconsistent and
// no certified proper extension is paraconsistent.
std::vector<ClassificationReport> classify_saturated(const CatalogIndex& catalog,
                                                     const ClassifyOptions& opts = {});

// Fills `ideal` from the side's characterization and attaches a certified
// intermediate logic for saturated logics that are not ideal.
void classify_ideal(const CatalogIndex& catalog, std::vector<ClassificationReport>& reports,
                    const ClassifyOptions& opts = {});

// Names of the saturated logics the classification theorem predicts for the
// Gödel catalog of GV_n~.
std::vector<std::string> expected_saturated_godel(int n);
std::vector<std::string> expected_ideal_godel(int n);

// Report for one catalog entry.
ClassificationReport classify_entry(const CatalogIndex& catalog, std::size_t entry,
                                    const ClassifyOptions& opts = {});

// The product over `primes` (a nonempty subset of compute_X(n, i)) audited
// against the Łukasiewicz catalog for (n, i).
ClassificationReport verify_saturated_product(int n, int i, std::span<const int> primes,
                                              const ClassifyOptions& opts = {});

// <prod LV_{p+1}, prod F_{1/p}> audited against the products of its own
// components and LV_2.
ClassificationReport verify_corollary_product(std::span<const int> primes,
                                              const ClassifyOptions& opts = {});

struct FactResult {
  std::string id;
  std::string statement;
  bool expected = false;  // whether the query should hold
  FormulaSet gamma;
  Formula phi = bot();
  std::optional<StandardClass> standard;  // set for facts over [0,1]
  std::vector<ProductMatrix> family;      // where the verdict was decided
  Verdict verdict;
  bool pass() const { return verdict.holds == expected; }
};

// Replays the stated witness facts: relations over the standard algebra,
// the characteristic formula facts on GV_5~, and the J3 x J4 example.
std::vector<FactResult> regression_incomparabilities();

std::string to_text(const ClassificationReport& r);

}  // namespace mvl
