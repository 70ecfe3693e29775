#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mvl/algebra.hpp"
#include "mvl/entailment.hpp"
#include "mvl/formula.hpp"

namespace mvl {

enum class Side { GodelInv, Luk, FT };

std::string_view to_string(Side side);

// A logic induced by a family of product matrices (their intersection).
struct LogicDescriptor {
  std::string name;
  std::vector<ProductMatrix> family;  // nonempty, each normalized
  Side side = Side::GodelInv;
  int n = 0;
  int i = 0;
  std::vector<Value> thresholds;

  // The name when present, otherwise the serialized family.
  std::string label() const;
};

std::string serialize_family(std::span<const ProductMatrix> family);

// Landmark logics: J3, J4, J3xJ4, J2xJ3, CPL, `G<=n~`, `Gn~`, `L(n,i)`,
// `FTn`, `Lexp(n)`, `LT(n;t1,...,tk)`.
LogicDescriptor named(std::string_view name);

// A landmark name, a matrix such as `GV5~[>=2]xGV3~[>=1]`, or a family
// `{M; M; ...}` whose members may themselves be names.
LogicDescriptor resolve_logic(std::string_view text);

Verdict entails(const LogicDescriptor& logic, std::span<const Formula> gamma, const Formula& phi,
                const EntailOptions& opts = {});

// <GV_n~^k, F_t1 x ... x F_tk> for T = {t1 < ... < tk} given as indices.
LogicDescriptor build_LT(int n, std::vector<Value> thresholds);

struct CharacterizationCheck {
  bool direct = false;        // the logic's own verdict
  bool characterized = false; // the right-hand side of the characterization
  bool agree() const noexcept { return direct == characterized; }
};

// Gamma |- phi  iff  Gamma |-_{tk} bot  or  Gamma |-_t phi for every t in T.
CharacterizationCheck check_LT_characterization(int n, std::span<const Value> thresholds,
                                                std::span<const Formula> gamma, const Formula& phi,
                                                const EntailOptions& opts = {});

// First index i with i/(n-1) > 1/2.
int lexp_index(int n);

// The family {<GV_n~^i, F_1 x ... x F_i>} + {<GV_n~, F_t> : i < t <= n-1}.
LogicDescriptor build_L_exp(int n);

// Gamma |- phi  iff  Gamma |-_{i} bot  or  Gamma |- phi in G<=n~.
CharacterizationCheck check_L_exp_characterization(int n, std::span<const Formula> gamma,
                                                   const Formula& phi,
                                                   const EntailOptions& opts = {});

// Strictly increasing map from `from` into `to` preserving the operations of
// the chains' kind, with designation preserved and reflected. The first
// such map in lexicographic order of images.
std::optional<std::vector<Value>> component_embedding(const Component& from, const Component& to);

struct ComponentMap {
  std::size_t from = 0;  // component index in the source matrix
  std::size_t to = 0;    // component index in the target matrix
  std::vector<Value> map;
};

// M as a submatrix of N: a bijective matching of components, each matched
// pair carrying a component embedding.
std::optional<std::vector<ComponentMap>> submatrix_embedding(const ProductMatrix& m,
                                                             const ProductMatrix& n);

// Certificate that L(base) is contained in L(ext): every component of ext
// embeds into some component of base, and every component of base receives
// an embedding from some component of ext.
struct ExtensionCertificate {
  std::vector<ComponentMap> inward;    // one per component of ext
  std::vector<ComponentMap> covering;  // one per component of base, from ext
};

std::optional<ExtensionCertificate> extension_certificate(const ProductMatrix& ext,
                                                          const ProductMatrix& base);

// Re-checks every map of the certificate.
bool verify_certificate(const ProductMatrix& ext, const ProductMatrix& base,
                        const ExtensionCertificate& cert);

struct CatalogEntry {
  LogicDescriptor logic;
  std::vector<std::size_t> components;  // indices into CatalogIndex::components
  const ProductMatrix& matrix() const { return logic.family.front(); }
};

// `to` extends `from`. Pairs are catalog component indices; the maps live in
// CatalogIndex::embedding.
struct CatalogEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  // Both lists hold (component of `to`, component of `from`) pairs whose
  // embedding runs from the first into the second.
  std::vector<std::pair<std::size_t, std::size_t>> inward;    // one per component of `to`
  std::vector<std::pair<std::size_t, std::size_t>> covering;  // one per component of `from`
};

struct CatalogIndex {
  Side side = Side::GodelInv;
  int n = 0;
  int i = 0;
  std::vector<Component> components;
  std::vector<Subuniverse> carriers;  // one per component, inside the ambient chain
  std::vector<CatalogEntry> entries;
  std::vector<CatalogEdge> edges;     // sorted by (from, to)
  // embeddings[a * components.size() + b]: component a into component b.
  std::vector<std::optional<std::vector<Value>>> embeddings;
  std::vector<std::size_t> edge_begin;  // per entry, plus a final sentinel

  const std::optional<std::vector<Value>>& embedding(std::size_t a, std::size_t b) const {
    return embeddings[a * components.size() + b];
  }
  // The edge's certificate in terms of the entries' own component positions.
  ExtensionCertificate certificate(const CatalogEdge& edge) const;
  std::optional<std::size_t> find(const ProductMatrix& m) const;
  // Edges leaving `from`, i.e. the certified extensions of that entry.
  std::span<const CatalogEdge> extensions_of(std::size_t from) const;
  bool extends(std::size_t ext, std::size_t base) const;
};

// Builds entries from component index sets and certifies every extension
// pair. Component embeddings are computed once.
CatalogIndex build_catalog(Side side, int n, int i, std::vector<Component> components,
                           std::vector<Subuniverse> carriers,
                           const std::vector<std::vector<std::size_t>>& entries,
                           unsigned workers = 1);

// Products of distinct (subchain, filter) components of GV_n~ with at most
// `max_components` factors.
CatalogIndex enumerate_godel_catalog(int n, int max_components = 3, unsigned workers = 1);

// Products of distinct divisor chains LV_{d+1}, d | n, in which at most one
// member is a multiple of another member, each with the filter F_{i/n}.
CatalogIndex enumerate_luk_catalog(int n, int i, unsigned workers = 1);

// Least index of LV_{d+1} inside the filter F_{i/n}: ceil(i*d/n).
Value luk_threshold(int n, int i, int d);

// Primes p | n with 2*ceil(i*p/n) <= p.
std::vector<int> compute_X(int n, int i);

// <LV_{p1+1} x ... , (F_{i/n})^j restricted>.
ProductMatrix luk_product(int n, int i, std::span<const int> chains);

std::string export_text(const CatalogIndex& catalog);
// Certified edges after transitive reduction; `highlight` entries are drawn
// with a double border.
std::string export_dot(const CatalogIndex& catalog, std::span<const std::size_t> highlight = {});

}  // namespace mvl
