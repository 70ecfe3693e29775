#include "mvl/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "mvl/term_search.hpp"
#include "mvl/terms.hpp"

namespace mvl {

std::string to_string(const QueryCertificate& c) {
  std::string out = to_string(c.gamma) + " |- " + to_string(c.phi) + " @ " + c.logic + ": ";
  out += c.verdict.holds ? "holds" : "fails";
  return out;
}

namespace {

std::string describe(const LogicDescriptor& logic, const QueryCertificate& c) {
  std::string out = to_string(c);
  if (c.verdict.counterexample) {
    const auto& ce = *c.verdict.counterexample;
    out += " at " + to_string(ce.assignment, logic.family.at(ce.matrix));
    if (logic.family.size() > 1) out += " in " + to_string(logic.family[ce.matrix]);
  }
  return out;
}

QueryCertificate ask(const LogicDescriptor& logic, FormulaSet gamma, Formula phi) {
  QueryCertificate c{logic.label(), std::move(gamma), std::move(phi), {}};
  c.verdict = entails(logic, c.gamma, c.phi);
  return c;
}

}  // namespace

bool replay(const LogicDescriptor& logic, const QueryCertificate& c) {
  const Verdict again = entails(logic, c.gamma, c.phi);
  if (again.holds != c.verdict.holds) return false;
  return certify(logic.family, c.gamma, c.phi, c.verdict);
}

ParaconsistencyResult is_paraconsistent(const LogicDescriptor& logic, Op negation) {
  if (negation != Op::Inv && negation != Op::GNeg)
    throw InputError("paraconsistency is checked against ~ or the Gödel negation");
  const Formula p = var("p");
  ParaconsistencyResult out;
  out.witness = ask(logic, {p, Formula(negation, {p})}, var("q"));
  out.paraconsistent = !out.witness.verdict.holds;

  bool componentwise = false;
  for (const auto& m : logic.family) {
    std::vector<bool> flags;
    bool all = true;
    for (const auto& c : m.components()) {
      const bool para = !entails_matrix(ProductMatrix(c), out.witness.gamma, out.witness.phi).holds;
      flags.push_back(para);
      all = all && para;
    }
    componentwise = componentwise || all;
    out.components.push_back(std::move(flags));
  }
  if (componentwise != out.paraconsistent)
    throw std::logic_error("componentwise paraconsistency disagrees for " + logic.label());
  return out;
}

bool validates_explosion(const LogicDescriptor& logic, QueryCertificate* certificate) {
  const Formula p = var("p");
  QueryCertificate c = ask(logic, {p, inv(p)}, bot());
  const bool holds = c.verdict.holds;
  if (certificate) *certificate = std::move(c);
  return holds;
}

bool LfiWitness::confirmed() const {
  return !paraconsistency.verdict.holds && trivialization.verdict.holds && !positive.verdict.holds &&
         !negative.verdict.holds;
}

LfiWitness lfi_witness(const LogicDescriptor& logic, const Connective& circ) {
  const Formula p = var("p"), q = var("q"), r = var("r");
  LfiWitness w;
  w.paraconsistency = ask(logic, {p, inv(p)}, q);
  w.trivialization = ask(logic, {p, inv(p), circ(p)}, q);
  w.positive = ask(logic, {q, circ(q)}, r);
  w.negative = ask(logic, {inv(q), circ(q)}, r);
  return w;
}

std::string_view to_string(Separation::Kind kind) {
  switch (kind) {
    case Separation::Kind::Theorem: return "theorem";
    case Separation::Kind::Inconsistency: return "inconsistency";
    case Separation::Kind::Consequence: return "consequence";
  }
  return "?";
}

namespace {

// Components of both logics over a shared list of chains.
struct JointSpace {
  std::vector<Chain> chains;
  std::vector<std::size_t> comp_chain;
  std::vector<Value> comp_threshold;
  std::vector<std::vector<std::size_t>> first, second;  // members as component lists

  std::size_t add(const Component& c) {
    auto it = std::find(chains.begin(), chains.end(), c.chain);
    const auto chain = static_cast<std::size_t>(it - chains.begin());
    if (it == chains.end()) chains.push_back(c.chain);
    for (std::size_t k = 0; k < comp_chain.size(); ++k)
      if (comp_chain[k] == chain && comp_threshold[k] == c.filter.threshold) return k;
    comp_chain.push_back(chain);
    comp_threshold.push_back(c.filter.threshold);
    return comp_chain.size() - 1;
  }

  std::vector<std::vector<std::size_t>> members(const LogicDescriptor& l) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& m : l.family) {
      std::vector<std::size_t> comps;
      for (const auto& c : m.components()) comps.push_back(add(c));
      out.push_back(std::move(comps));
    }
    return out;
  }
};

// Designation bitsets of one term, one block of words per component.
struct Flags {
  std::vector<std::uint64_t> bits;
  std::vector<bool> valid, satisfiable;
};

class Separator {
 public:
  Separator(const LogicDescriptor& first, const LogicDescriptor& second) {
    first_ = space_.members(first);
    second_ = space_.members(second);
  }

  const std::vector<Chain>& chains() const { return space_.chains; }

  void reset(const TermPool& pool) {
    pool_ = &pool;
    flags_.clear();
    words_.clear();
    word_offset_.clear();
    std::size_t at = 0;
    for (std::size_t c = 0; c < space_.comp_chain.size(); ++c) {
      const std::size_t n = pool.count(space_.comp_chain[c]);
      word_offset_.push_back(at);
      words_.push_back((n + 63) / 64);
      at += words_.back();
    }
    total_words_ = at;
  }

  const Flags& flags(std::size_t entry) {
    while (flags_.size() <= entry) flags_.push_back(compute(pool_->entries()[flags_.size()].values));
    return flags_[entry];
  }

  bool theorem(const std::vector<std::vector<std::size_t>>& members, const Flags& f) const {
    for (const auto& m : members)
      for (std::size_t c : m)
        if (!f.valid[c]) return false;
    return true;
  }

  bool inconsistent(const std::vector<std::vector<std::size_t>>& members, const Flags& f) const {
    for (const auto& m : members)
      if (std::all_of(m.begin(), m.end(), [&](std::size_t c) { return f.satisfiable[c]; })) return false;
    return true;
  }

  bool consequence(const std::vector<std::vector<std::size_t>>& members, const Flags& g,
                   const Flags& f) const {
    for (const auto& m : members) {
      if (!std::all_of(m.begin(), m.end(), [&](std::size_t c) { return g.satisfiable[c]; })) continue;
      for (std::size_t c : m)
        if (refutes(c, g, f)) return false;
    }
    return true;
  }

  const std::vector<std::vector<std::size_t>>& first() const { return first_; }
  const std::vector<std::vector<std::size_t>>& second() const { return second_; }

 private:
  bool refutes(std::size_t c, const Flags& g, const Flags& f) const {
    const std::size_t lo = word_offset_[c], hi = lo + words_[c];
    for (std::size_t w = lo; w < hi; ++w)
      if (g.bits[w] & ~f.bits[w]) return true;
    return false;
  }

  Flags compute(const std::vector<Value>& values) const {
    Flags f;
    f.bits.assign(total_words_, 0);
    for (std::size_t c = 0; c < space_.comp_chain.size(); ++c) {
      const std::size_t chain = space_.comp_chain[c];
      const std::size_t lo = pool_->offset(chain), n = pool_->count(chain);
      const Value t = space_.comp_threshold[c];
      bool all = true, any = false;
      for (std::size_t k = 0; k < n; ++k) {
        const bool d = values[lo + k] >= t;
        all = all && d;
        any = any || d;
        if (d) f.bits[word_offset_[c] + k / 64] |= std::uint64_t{1} << (k % 64);
      }
      f.valid.push_back(all);
      f.satisfiable.push_back(any);
    }
    return f;
  }

  JointSpace space_;
  std::vector<std::vector<std::size_t>> first_, second_;
  const TermPool* pool_ = nullptr;
  std::vector<Flags> flags_;
  std::vector<std::size_t> words_, word_offset_;
  std::size_t total_words_ = 0;
};

Separation certify_separation(const LogicDescriptor& first, const LogicDescriptor& second,
                              Separation::Kind kind, FormulaSet gamma, const Formula& phi) {
  Separation s;
  s.kind = kind;
  s.holds = ask(first, gamma, phi);
  s.fails = ask(second, std::move(gamma), phi);
  if (!s.holds.verdict.holds || s.fails.verdict.holds)
    throw std::logic_error("separating query did not re-verify: " + to_string(s.holds));
  return s;
}

}  // namespace

SeparationSearch find_separating_consequence(const LogicDescriptor& first,
                                             const LogicDescriptor& second,
                                             const SearchBounds& bounds) {
  if (first.side != second.side) throw InputError("separation needs logics over one signature");
  using Clock = TermPool::Clock;
  const auto deadline = Clock::now() + bounds.time_limit;
  static const char* const names[] = {"p", "q", "r", "s", "t", "u"};
  const std::size_t max_vars = std::min<std::size_t>(bounds.max_vars, std::size(names));

  Separator sep(first, second);
  SeparationSearch out;
  bool timed_out = false;
  for (std::size_t k = 1; k <= max_vars && !timed_out; ++k) {
    std::vector<std::string> vars(names, names + k);
    TermPool pool(sep.chains(), vars, bounds.pool_cap);
    sep.reset(pool);
    std::optional<Formula> theorem;
    std::size_t seen = 0;
    auto visit = [&](const TermPool::Entry& e) {
      const Flags& f = sep.flags(seen++);
      if (sep.theorem(sep.first(), f) && !sep.theorem(sep.second(), f)) {
        theorem = e.formula;
        return true;
      }
      return false;
    };
    for (int level = 0; level <= bounds.max_depth; ++level) {
      const auto step = pool.grow(visit, deadline);
      if (step == TermPool::Step::Found) break;
      if (step == TermPool::Step::TimedOut) {
        timed_out = true;
        break;
      }
      if (step != TermPool::Step::Grew) break;
    }
    if (theorem) {
      out.separation = certify_separation(first, second, Separation::Kind::Theorem, {}, *theorem);
      return out;
    }
    const auto& entries = pool.entries();
    if (!entries.empty()) sep.flags(entries.size() - 1);  // no reallocation below
    for (std::size_t g = 0; g < entries.size(); ++g) {
      const Flags& f = sep.flags(g);
      if (sep.inconsistent(sep.first(), f) && !sep.inconsistent(sep.second(), f)) {
        out.separation =
            certify_separation(first, second, Separation::Kind::Inconsistency, {entries[g].formula}, bot());
        return out;
      }
    }
    const std::size_t limit = std::min(entries.size(), bounds.pair_cap);
    std::size_t tick = 0;
    for (std::size_t g = 0; g < limit && !timed_out; ++g) {
      const Flags& fg = sep.flags(g);
      for (std::size_t h = 0; h < limit; ++h) {
        if (g == h) continue;
        if ((++tick & 1023u) == 0 && Clock::now() > deadline) {
          timed_out = true;
          break;
        }
        const Flags& fh = sep.flags(h);
        if (sep.consequence(sep.first(), fg, fh) && !sep.consequence(sep.second(), fg, fh)) {
          out.separation = certify_separation(first, second, Separation::Kind::Consequence,
                                              {entries[g].formula}, entries[h].formula);
          return out;
        }
      }
    }
  }
  out.exhausted_bounds = !timed_out;
  return out;
}

namespace {

std::size_t weight(const ProductMatrix& m) {
  std::size_t w = 0;
  for (const auto& c : m.components()) w += static_cast<std::size_t>(c.chain.size());
  return w;
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) fn(k);
    });
  for (auto& t : pool) t.join();
}

}  // namespace

ClassificationReport classify_entry(const CatalogIndex& catalog, std::size_t entry,
                                    const ClassifyOptions& opts) {
  const CatalogEntry& base = catalog.entries.at(entry);
  ClassificationReport r;
  r.logic = base.logic;
  r.entry = entry;
  r.paraconsistency = is_paraconsistent(r.logic, Op::Inv);
  r.explosive = validates_explosion(r.logic, &r.explosion);
  if (!r.paraconsistency.paraconsistent) {
    r.saturated = false;
    return r;
  }
  for (const auto& edge : catalog.extensions_of(entry)) {
    ExtensionAudit a;
    a.entry = edge.to;
    a.logic = catalog.entries[edge.to].logic.label();
    a.paraconsistent = is_paraconsistent(catalog.entries[edge.to].logic, Op::Inv).paraconsistent;
    a.equivalent = catalog.extends(entry, edge.to);
    if (a.equivalent) a.proper = false;
    r.audit.push_back(std::move(a));
  }
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < r.audit.size(); ++k)
    if (r.audit[k].paraconsistent && !r.audit[k].equivalent) order.push_back(k);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return weight(catalog.entries[r.audit[a].entry].matrix()) <
           weight(catalog.entries[r.audit[b].entry].matrix());
  });
  if (order.empty()) {
    r.saturated = true;
    return r;
  }
  for (std::size_t k : order) {
    auto& a = r.audit[k];
    auto found = find_separating_consequence(catalog.entries[a.entry].logic, r.logic, opts.bounds);
    if (found.separation) {
      a.proper = true;
      a.separation = std::move(found.separation);
      r.saturated = false;
      return r;
    }
  }
  return r;  // paraconsistent extensions whose properness is unknown
}

std::vector<ClassificationReport> classify_saturated(const CatalogIndex& catalog,
                                                     const ClassifyOptions& opts) {
  std::vector<ClassificationReport> out(catalog.entries.size());
  parallel_for(out.size(), opts.workers, [&](std::size_t e) { out[e] = classify_entry(catalog, e, opts); });
  return out;
}

namespace {

bool luk_ideal_shape(const ProductMatrix& m) {
  if (!m.is_single()) return false;
  const Component& c = m.components().front();
  const int q = c.chain.top();
  return is_prime(q) && 2 * c.filter.threshold <= q;
}

std::optional<NonMaximality> find_intermediate(const CatalogIndex& catalog, std::size_t entry,
                                               const ClassifyOptions& opts) {
  const Chain two(catalog.side == Side::Luk ? ChainKind::MV : ChainKind::GodelInv, 2);
  const auto cpl = catalog.find(ProductMatrix(Component(two, 1)));
  if (!cpl) return std::nullopt;
  std::vector<const CatalogEdge*> candidates;
  for (const auto& edge : catalog.extensions_of(entry)) {
    if (edge.to == *cpl || catalog.extends(entry, edge.to) || !catalog.extends(*cpl, edge.to)) continue;
    candidates.push_back(&edge);
  }
  std::stable_sort(candidates.begin(), candidates.end(), [&](const CatalogEdge* a, const CatalogEdge* b) {
    const bool na = catalog.entries[a->to].logic.name == "J2xJ3";
    const bool nb = catalog.entries[b->to].logic.name == "J2xJ3";
    if (na != nb) return na;
    return weight(catalog.entries[a->to].matrix()) < weight(catalog.entries[b->to].matrix());
  });
  const LogicDescriptor& cpl_logic = catalog.entries[*cpl].logic;
  for (const CatalogEdge* edge : candidates) {
    const LogicDescriptor& mid = catalog.entries[edge->to].logic;
    auto up = find_separating_consequence(mid, catalog.entries[entry].logic, opts.bounds);
    if (!up.separation) continue;
    auto top = find_separating_consequence(cpl_logic, mid, opts.bounds);
    if (!top.separation) continue;
    return NonMaximality{mid.label(), catalog.certificate(*edge), std::move(*up.separation),
                         std::move(*top.separation)};
  }
  return std::nullopt;
}

}  // namespace

void classify_ideal(const CatalogIndex& catalog, std::vector<ClassificationReport>& reports,
                    const ClassifyOptions& opts) {
  for (auto& r : reports) {
    if (!r.paraconsistency.paraconsistent) {
      r.ideal = false;
      r.basis = "not paraconsistent";
      continue;
    }
    if (catalog.side == Side::Luk) {
      r.ideal = luk_ideal_shape(r.logic.family.front());
      r.basis =
          "theorem-derived: an extension of L(n,i) with i/n <= 1/2 is ideal exactly when it is "
          "L(q,j) for a prime q dividing n with j/q <= 1/2";
      if (2 * catalog.i > catalog.n) r.basis += " (i/n > 1/2: outside the hypothesis)";
    } else {
      if (!r.saturated) {
        r.ideal.reset();
        r.basis = "saturation undecided";
        continue;
      }
      const std::string& name = r.logic.name;
      r.ideal = *r.saturated && (name == "J3" || name == "J4");
      r.basis = "theorem-derived: on the Gödel side a saturated logic is ideal exactly when it is J3 or J4";
    }
    if (r.saturated == true && r.ideal == false) r.non_maximality = find_intermediate(catalog, r.entry, opts);
  }
}

std::vector<std::string> expected_saturated_godel(int n) {
  if (n < 3) return {};
  if (n == 3) return {"J3"};
  if (n % 2 == 0) return {"J4"};
  return {"J3", "J4", "J3xJ4"};
}

std::vector<std::string> expected_ideal_godel(int n) {
  if (n < 3) return {};
  if (n == 3) return {"J3"};
  if (n % 2 == 0) return {"J4"};
  return {"J3", "J4"};
}

ClassificationReport verify_saturated_product(int n, int i, std::span<const int> primes,
                                              const ClassifyOptions& opts) {
  if (primes.empty()) throw InputError("the product needs at least one prime");
  const auto x = compute_X(n, i);
  std::vector<int> sorted(primes.begin(), primes.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("primes must be distinct");
  for (int p : sorted)
    if (std::find(x.begin(), x.end(), p) == x.end())
      throw InputError(std::to_string(p) + " is not in X(" + std::to_string(n) + "," + std::to_string(i) + ")");
  const auto catalog = enumerate_luk_catalog(n, i, opts.workers);
  const auto entry = catalog.find(luk_product(n, i, sorted));
  if (!entry) throw std::logic_error("X-product missing from the catalog");
  auto r = classify_entry(catalog, *entry, opts);
  r.lfi = lfi_witness(r.logic, [n, i](const Formula& f) { return luk_consistency(n, i, f); });
  return r;
}

ClassificationReport verify_corollary_product(std::span<const int> primes, const ClassifyOptions& opts) {
  if (primes.empty()) throw InputError("the product needs at least one prime");
  std::vector<int> sorted(primes.begin(), primes.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("primes must be distinct");
  long ambient = 1;
  for (int p : sorted) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    ambient *= p;
    if (ambient > 1'000'000) throw ResourceError("product of primes too large");
  }
  std::vector<Component> comps;
  std::vector<Subuniverse> carriers;
  const Chain big = Chain::mv(static_cast<int>(ambient) + 1);
  for (int d : sorted) {
    comps.emplace_back(Chain::mv(d + 1), 1);
    Subuniverse s{big, {}};
    for (long k = 0; k <= d; ++k) s.members.push_back(static_cast<Value>(k * (ambient / d)));
    carriers.push_back(std::move(s));
  }
  comps.emplace_back(Chain::mv(2), 1);
  carriers.push_back(Subuniverse{big, {0, big.top()}});
  std::vector<std::vector<std::size_t>> entries;
  for (std::size_t mask = 1; mask < (std::size_t{1} << comps.size()); ++mask) {
    std::vector<std::size_t> pick;
    for (std::size_t b = 0; b < comps.size(); ++b)
      if (mask & (std::size_t{1} << b)) pick.push_back(b);
    entries.push_back(std::move(pick));
  }
  const auto catalog = build_catalog(Side::Luk, static_cast<int>(ambient), 0, comps, carriers, entries, opts.workers);
  std::vector<Component> parts(comps.begin(), comps.end() - 1);
  auto r = classify_entry(catalog, *catalog.find(ProductMatrix(parts)), opts);
  return r;
}

std::vector<FactResult> regression_incomparabilities() {
  std::vector<FactResult> out;
  auto fact = [&](std::string id, StandardClass c, const std::string& gamma, const std::string& phi,
                  bool expected) {
    FactResult f;
    f.id = std::move(id);
    f.statement = gamma + (expected ? " |- " : " |/- ") + phi + " in " + std::string(to_string(c));
    f.expected = expected;
    f.gamma = parse_formula_list(gamma);
    f.phi = parse_formula(phi);
    f.standard = c;
    FormulaSet all = f.gamma;
    all.push_back(f.phi);
    f.family = standard_grid_family(c, variables(all).size());
    f.verdict = decide_standard(c, f.gamma, f.phi);
    out.push_back(std::move(f));
  };
  using C = StandardClass;
  const std::string fix = "D(p <-> ~p)";
  fact("top-vs-pos", C::Exact1, "p", "D p", true);
  fact("top-vs-pos", C::OpenPos, "p", "D p", false);
  fact("top-vs-half", C::AtHalf, fix, "p", true);
  fact("top-vs-half", C::Exact1, fix, "p", false);
  fact("top-vs-half", C::AtHalf, "p", "D p", false);
  fact("pos-vs-half", C::OpenPos, fix + " & p", "0", true);
  fact("pos-vs-half", C::AtHalf, fix + " & p", "0", false);
  fact("pos-vs-half", C::OpenPos, fix, "p", false);
  fact("pos-vs-above-half", C::AboveHalf, "~D(p -> ~p)", "p", true);
  fact("pos-vs-above-half", C::OpenPos, "~D(p -> ~p)", "p", false);
  fact("pos-vs-neg", C::OpenNeg, fix, "p", true);
  fact("pos-vs-neg", C::OpenPos, "p", "~D(p -> ~p)", true);
  fact("pos-vs-neg", C::OpenNeg, "p", "~D(p -> ~p)", false);
  fact("neg-vs-half", C::AtHalf, "p & ~p", fix, true);
  fact("neg-vs-half", C::OpenNeg, "p & ~p", fix, false);
  fact("zero-half-above", C::AboveHalf, fix, "p", false);
  fact("zero-half-above", C::AboveHalf, "p", "~D(p -> ~p)", true);
  fact("zero-half-above", C::AtHalf, "p", "~D(p -> ~p)", false);
  const std::string low = "p & D(p -> ~p) & !D(~p -> p)";
  fact("zero-half-above", C::AboveHalf, low, "0", true);
  fact("zero-half-above", C::AtHalf, low, "0", true);
  fact("zero-half-above", C::AboveZero, low, "0", false);
  fact("zero-half-above", C::AboveZero, "!!p & !D p", "p & ~p", true);
  fact("zero-half-above", C::AboveHalf, "!!p & !D p", "p & ~p", false);
  fact("zero-half-above", C::AtHalf, "!!p & !D p", "p & ~p", false);
  fact("neg-vs-zero", C::AboveZero, "!!p", "p", true);
  fact("neg-vs-zero", C::OpenNeg, "!!p", "p", false);

  // Characteristic formula of the assignment p_i = i/4 on GV_5~.
  const int n = 5;
  const Formula phi = tuple_characterizer(n);
  auto single = [&](int t) { return ProductMatrix(Component(Chain::godel(n), t)); };
  auto p = [](int k) { return var("p" + std::to_string(k)); };
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto add = [&](const FormulaSet& gamma, const Formula& goal, int t, bool expected) {
        FactResult f;
        f.id = "filters-" + std::to_string(i) + "-" + std::to_string(j);
        f.statement = "Phi & " + to_string(gamma.front().arg(1)) + (expected ? " |- " : " |/- ") +
                      to_string(goal) + " in " + to_string(single(t));
        f.expected = expected;
        f.gamma = gamma;
        f.phi = goal;
        f.family = {single(t)};
        f.verdict = entails_matrix(single(t), gamma, goal);
        out.push_back(std::move(f));
      };
      add({conj(phi, p(i))}, bot(), j, true);
      add({conj(phi, p(i))}, bot(), i, false);
      add({conj(phi, p(j))}, p(i), j, false);
      add({conj(phi, p(j))}, p(i), i, true);
    }

  // J3 x J4 example.
  const Formula alpha = parse_formula("D(p <-> ~p)");
  const Formula beta = parse_formula("~((p1 -> p2) | (p2 -> p3) | (p3 -> p4))");
  auto example = [&](const char* logic, const Formula& premise, bool expected) {
    FactResult f;
    f.id = "j3-j4-example";
    const FormulaSet gamma{premise};
    f.statement = to_string(premise) + (expected ? " |- " : " |/- ") + "0 in " + logic;
    f.expected = expected;
    f.gamma = gamma;
    f.phi = bot();
    f.family = named(logic).family;
    f.verdict = entails(named(logic), gamma, bot());
    out.push_back(std::move(f));
  };
  example("J3", alpha, false);
  example("J4", alpha, true);
  example("J3xJ4", alpha, true);
  example("J4", beta, false);
  example("J3", beta, true);
  example("J3xJ4", beta, true);
  return out;
}

std::string to_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << "logic " << r.logic.label();
  if (!r.logic.name.empty()) out << " = " << serialize_family(r.logic.family);
  out << "\n";
  out << "  paraconsistent: " << (r.paraconsistency.paraconsistent ? "yes" : "no") << "  ["
      << describe(r.logic, r.paraconsistency.witness) << "]\n";
  out << "  explosive: " << (r.explosive ? "yes" : "no") << "\n";
  out << "  saturated: " << (r.saturated ? (*r.saturated ? "yes" : "no") : "unknown") << "\n";
  for (const auto& a : r.audit) {
    out << "    extension " << a.logic << ": " << (a.paraconsistent ? "paraconsistent" : "explosive");
    if (a.equivalent) out << ", same logic";
    if (a.separation)
      out << ", proper by " << to_string(a.separation->kind) << " " << to_string(a.separation->holds.gamma)
          << " |- " << to_string(a.separation->holds.phi);
    else if (a.paraconsistent && !a.equivalent && !a.proper)
      out << ", properness not examined";
    out << "\n";
  }
  if (r.ideal) {
    out << "  ideal: " << (*r.ideal ? "yes" : "no") << " (" << r.basis << ")\n";
    if (r.non_maximality)
      out << "    between it and CPL: " << r.non_maximality->intermediate << " (above by "
          << to_string(r.non_maximality->above_logic.holds.gamma) << " |- "
          << to_string(r.non_maximality->above_logic.holds.phi) << "; below CPL by "
          << to_string(r.non_maximality->below_cpl.holds.gamma) << " |- "
          << to_string(r.non_maximality->below_cpl.holds.phi) << ")\n";
  }
  if (r.lfi) out << "  lfi: " << (r.lfi->confirmed() ? "confirmed" : "not confirmed") << "\n";
  return out.str();
}

}  // namespace mvl
