#include "mvl/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <map>
#include <regex>
#include <sstream>
#include <thread>

namespace mvl {

std::string_view to_string(Side side) {
  switch (side) {
    case Side::GodelInv: return "godel";
    case Side::Luk: return "luk";
    case Side::FT: return "ft";
  }
  return "?";
}

namespace {

Side side_of(ChainKind kind) {
  switch (kind) {
    case ChainKind::GodelInv: return Side::GodelInv;
    case ChainKind::MV: return Side::Luk;
    case ChainKind::FT: return Side::FT;
  }
  return Side::GodelInv;
}

Side side_of(const ProductMatrix& m) {
  const ChainKind kind = m.components().front().chain.kind();
  for (const auto& c : m.components())
    if (c.chain.kind() != kind) throw InputError("matrix " + to_string(m) + " mixes chain kinds");
  return side_of(kind);
}

LogicDescriptor from_family(std::string name, std::vector<ProductMatrix> family) {
  if (family.empty()) throw InputError("a logic needs at least one matrix");
  LogicDescriptor d;
  d.name = std::move(name);
  d.side = side_of(family.front());
  for (auto& m : family) {
    m = m.normalized();
    if (side_of(m) != d.side) throw InputError("family members use different signatures");
    if (std::find(d.family.begin(), d.family.end(), m) == d.family.end()) d.family.push_back(m);
  }
  return d;
}

LogicDescriptor single(std::string name, ChainKind kind, int size, Value threshold) {
  LogicDescriptor d = from_family(std::move(name), {ProductMatrix(Component(Chain(kind, size), threshold))});
  d.n = size;
  d.thresholds = {threshold};
  return d;
}

int to_int(const std::string& s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw InputError("bad number '" + s + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<LogicDescriptor> try_named(std::string_view text) {
  const std::string s(trim(text));
  if (s == "J3") return single("J3", ChainKind::GodelInv, 3, 1);
  if (s == "J4") return single("J4", ChainKind::GodelInv, 4, 1);
  if (s == "CPL") return single("CPL", ChainKind::GodelInv, 2, 1);
  if (s == "J3xJ4") {
    auto d = from_family("J3xJ4", {parse_matrix("GV4~[>=1]xGV3~[>=1]")});
    d.thresholds = {1, 1};
    return d;
  }
  if (s == "J2xJ3") {
    auto d = from_family("J2xJ3", {parse_matrix("GV3~[>=1]xGV2~[>=1]")});
    d.thresholds = {1, 1};
    return d;
  }
  std::smatch m;
  static const std::regex g_le(R"(G<=(\d+)~)"), g_tp(R"(G(\d+)~)"), luk(R"(L\((\d+),(\d+)\))"),
      ft(R"(FT(\d+))"), lexp(R"(Lexp\((\d+)\))"), lt(R"(LT\((\d+);(\d+(?:,\d+)*)\))");
  if (std::regex_match(s, m, g_le)) {
    const int n = to_int(m[1]);
    if (n < 2) throw InputError("G<=n~ needs n >= 2");
    std::vector<ProductMatrix> family;
    LogicDescriptor d;
    for (Value t = 1; t < n; ++t) family.emplace_back(Component(Chain::godel(n), t));
    d = from_family(s, std::move(family));
    d.n = n;
    for (Value t = 1; t < n; ++t) d.thresholds.push_back(t);
    return d;
  }
  if (std::regex_match(s, m, g_tp)) {
    const int n = to_int(m[1]);
    if (n < 2) throw InputError("Gn~ needs n >= 2");
    return single(s, ChainKind::GodelInv, n, n - 1);
  }
  if (std::regex_match(s, m, luk)) {
    const int n = to_int(m[1]), i = to_int(m[2]);
    if (n < 1 || i < 1 || i > n) throw InputError("L(n,i) needs 1 <= i <= n");
    auto d = single(s, ChainKind::MV, n + 1, i);
    d.n = n;
    d.i = i;
    return d;
  }
  if (std::regex_match(s, m, ft)) {
    const int n = to_int(m[1]);
    if (n < 2) throw InputError("FTn needs n >= 2");
    return single(s, ChainKind::FT, n, 1);
  }
  if (std::regex_match(s, m, lexp)) return build_L_exp(to_int(m[1]));
  if (std::regex_match(s, m, lt)) {
    std::vector<Value> ts;
    std::stringstream list(m[2]);
    for (std::string item; std::getline(list, item, ',');) ts.push_back(to_int(item));
    return build_LT(to_int(m[1]), ts);
  }
  return std::nullopt;
}

}  // namespace

std::string serialize_family(std::span<const ProductMatrix> family) {
  if (family.size() == 1) return to_string(family.front());
  std::string out = "{";
  for (std::size_t k = 0; k < family.size(); ++k) {
    if (k) out += "; ";
    out += to_string(family[k]);
  }
  return out + "}";
}

std::string LogicDescriptor::label() const { return name.empty() ? serialize_family(family) : name; }

LogicDescriptor named(std::string_view name) {
  auto d = try_named(name);
  if (!d) throw InputError("unknown logic name '" + std::string(name) + "'");
  return *d;
}

LogicDescriptor resolve_logic(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw InputError("empty logic");
  if (auto d = try_named(s)) return *d;
  if (s.front() == '{') {
    if (s.back() != '}') throw SyntaxError("unterminated family", s.size());
    std::vector<ProductMatrix> family;
    std::string_view body = s.substr(1, s.size() - 2);
    while (true) {
      const auto cut = body.find(';');
      const auto part = trim(body.substr(0, cut));
      if (part.empty()) throw InputError("empty family member");
      auto member = resolve_logic(part);
      family.insert(family.end(), member.family.begin(), member.family.end());
      if (cut == std::string_view::npos) break;
      body.remove_prefix(cut + 1);
    }
    return from_family("", std::move(family));
  }
  return from_family("", {parse_matrix(s)});
}

Verdict entails(const LogicDescriptor& logic, std::span<const Formula> gamma, const Formula& phi,
                const EntailOptions& opts) {
  return entails_family(logic.family, gamma, phi, opts);
}

LogicDescriptor build_LT(int n, std::vector<Value> thresholds) {
  if (n < 2) throw InputError("L(T) needs n >= 2");
  if (thresholds.empty()) throw InputError("L(T) needs a nonempty threshold set");
  std::sort(thresholds.begin(), thresholds.end());
  if (std::adjacent_find(thresholds.begin(), thresholds.end()) != thresholds.end())
    throw InputError("L(T) thresholds must be distinct");
  std::vector<Component> parts;
  std::string name = "LT(" + std::to_string(n) + ";";
  for (std::size_t k = 0; k < thresholds.size(); ++k) {
    const Value t = thresholds[k];
    if (t < 1 || t > n - 1) throw InputError("L(T) thresholds must lie in 1..n-1");
    parts.emplace_back(Chain::godel(n), t);
    name += (k ? "," : "") + std::to_string(t);
  }
  auto d = from_family(name + ")", {ProductMatrix(std::move(parts))});
  d.n = n;
  d.thresholds = std::move(thresholds);
  return d;
}

CharacterizationCheck check_LT_characterization(int n, std::span<const Value> thresholds,
                                                std::span<const Formula> gamma, const Formula& phi,
                                                const EntailOptions& opts) {
  const auto lt = build_LT(n, {thresholds.begin(), thresholds.end()});
  CharacterizationCheck out;
  out.direct = entails(lt, gamma, phi, opts).holds;
  const auto at = [&](Value t) { return ProductMatrix(Component(Chain::godel(n), t)); };
  if (entails_matrix(at(lt.thresholds.back()), gamma, bot(), opts).holds) {
    out.characterized = true;
  } else {
    out.characterized = std::all_of(lt.thresholds.begin(), lt.thresholds.end(), [&](Value t) {
      return entails_matrix(at(t), gamma, phi, opts).holds;
    });
  }
  return out;
}

int lexp_index(int n) {
  if (n < 2) throw InputError("L_exp needs n >= 2");
  return (n - 1) / 2 + 1;
}

LogicDescriptor build_L_exp(int n) {
  const int i = lexp_index(n);
  std::vector<Component> parts;
  for (Value r = 1; r <= i; ++r) parts.emplace_back(Chain::godel(n), r);
  std::vector<ProductMatrix> family{ProductMatrix(std::move(parts))};
  for (Value t = i + 1; t <= n - 1; ++t) family.emplace_back(Component(Chain::godel(n), t));
  auto d = from_family("Lexp(" + std::to_string(n) + ")", std::move(family));
  d.n = n;
  d.i = i;
  return d;
}

CharacterizationCheck check_L_exp_characterization(int n, std::span<const Formula> gamma,
                                                   const Formula& phi, const EntailOptions& opts) {
  const auto lexp = build_L_exp(n);
  CharacterizationCheck out;
  out.direct = entails(lexp, gamma, phi, opts).holds;
  const ProductMatrix at_i(Component(Chain::godel(n), lexp.i));
  out.characterized = entails_matrix(at_i, gamma, bot(), opts).holds ||
                      entails(named("G<=" + std::to_string(n) + "~"), gamma, phi, opts).holds;
  return out;
}

namespace {

bool preserves(const Component& from, const Component& to, const std::vector<Value>& f) {
  const Chain& a = from.chain;
  const Chain& b = to.chain;
  for (Value x = 0; x < a.size(); ++x) {
    const Value fx = f[static_cast<std::size_t>(x)];
    if (from.designated(x) != to.designated(fx)) return false;
    if (f[static_cast<std::size_t>(a.involution(x))] != b.involution(fx)) return false;
    if (f[static_cast<std::size_t>(a.delta(x))] != b.delta(fx)) return false;
    if (a.kind() == ChainKind::GodelInv && f[static_cast<std::size_t>(a.godel_neg(x))] != b.godel_neg(fx))
      return false;
    for (Value y = 0; y < a.size(); ++y) {
      const Value fy = f[static_cast<std::size_t>(y)];
      Value lhs = 0, rhs = 0;
      switch (a.kind()) {
        case ChainKind::GodelInv: lhs = a.godel_implies(x, y), rhs = b.godel_implies(fx, fy); break;
        case ChainKind::MV: lhs = a.luk_implies(x, y), rhs = b.luk_implies(fx, fy); break;
        case ChainKind::FT: lhs = a.ft_implies(x, y), rhs = b.ft_implies(fx, fy); break;
      }
      if (f[static_cast<std::size_t>(lhs)] != rhs) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<std::vector<Value>> component_embedding(const Component& from, const Component& to) {
  const Chain& a = from.chain;
  const Chain& b = to.chain;
  if (a.kind() != b.kind() || a.size() > b.size()) return std::nullopt;
  // The involution forces f(top - x) = top' - f(x) and fixpoint to fixpoint,
  // so only the strict lower half is searched.
  if (a.has_fixpoint() && !b.has_fixpoint()) return std::nullopt;
  std::vector<Value> low_a;
  for (Value x = 1; 2 * x < a.top(); ++x) low_a.push_back(x);
  std::vector<Value> low_b;
  for (Value y = 1; 2 * y < b.top(); ++y) low_b.push_back(y);
  const std::size_t k = low_a.size();
  if (k > low_b.size()) return std::nullopt;

  std::vector<std::size_t> pick(k);
  for (std::size_t j = 0; j < k; ++j) pick[j] = j;
  std::vector<Value> f(static_cast<std::size_t>(a.size()));
  while (true) {
    f.front() = 0;
    f.back() = b.top();
    for (std::size_t j = 0; j < k; ++j) {
      f[static_cast<std::size_t>(low_a[j])] = low_b[pick[j]];
      f[static_cast<std::size_t>(a.top() - low_a[j])] = b.top() - low_b[pick[j]];
    }
    if (a.has_fixpoint()) f[static_cast<std::size_t>(a.top() / 2)] = b.top() / 2;
    if (preserves(from, to, f)) return f;
    // Next combination in lexicographic order.
    std::size_t j = k;
    while (j > 0 && pick[j - 1] == low_b.size() - k + (j - 1)) --j;
    if (j == 0) return std::nullopt;
    ++pick[j - 1];
    for (std::size_t t = j; t < k; ++t) pick[t] = pick[t - 1] + 1;
  }
}

std::optional<std::vector<ComponentMap>> submatrix_embedding(const ProductMatrix& m,
                                                             const ProductMatrix& n) {
  if (m.arity() != n.arity()) return std::nullopt;
  const auto& mc = m.components();
  const auto& nc = n.components();
  std::vector<std::vector<std::optional<std::vector<Value>>>> table(mc.size());
  for (std::size_t i = 0; i < mc.size(); ++i)
    for (std::size_t j = 0; j < nc.size(); ++j) table[i].push_back(component_embedding(mc[i], nc[j]));
  std::vector<ComponentMap> out;
  std::vector<bool> used(nc.size(), false);
  auto match = [&](auto&& self, std::size_t i) -> bool {
    if (i == mc.size()) return true;
    for (std::size_t j = 0; j < nc.size(); ++j) {
      if (used[j] || !table[i][j]) continue;
      used[j] = true;
      out.push_back({i, j, *table[i][j]});
      if (self(self, i + 1)) return true;
      out.pop_back();
      used[j] = false;
    }
    return false;
  };
  if (!match(match, 0)) return std::nullopt;
  return out;
}

std::optional<ExtensionCertificate> extension_certificate(const ProductMatrix& ext,
                                                          const ProductMatrix& base) {
  const auto& ec = ext.components();
  const auto& bc = base.components();
  std::vector<std::vector<std::optional<std::vector<Value>>>> table(ec.size());
  for (std::size_t i = 0; i < ec.size(); ++i)
    for (std::size_t j = 0; j < bc.size(); ++j) table[i].push_back(component_embedding(ec[i], bc[j]));
  ExtensionCertificate cert;
  for (std::size_t i = 0; i < ec.size(); ++i) {
    std::size_t j = 0;
    while (j < bc.size() && !table[i][j]) ++j;
    if (j == bc.size()) return std::nullopt;
    cert.inward.push_back({i, j, *table[i][j]});
  }
  for (std::size_t j = 0; j < bc.size(); ++j) {
    std::size_t i = 0;
    while (i < ec.size() && !table[i][j]) ++i;
    if (i == ec.size()) return std::nullopt;
    cert.covering.push_back({i, j, *table[i][j]});
  }
  return cert;
}

bool verify_certificate(const ProductMatrix& ext, const ProductMatrix& base,
                        const ExtensionCertificate& cert) {
  const auto& ec = ext.components();
  const auto& bc = base.components();
  auto ok = [&](const ComponentMap& m) {
    if (m.from >= ec.size() || m.to >= bc.size()) return false;
    const Component& a = ec[m.from];
    const Component& b = bc[m.to];
    if (a.chain.kind() != b.chain.kind() || m.map.size() != static_cast<std::size_t>(a.chain.size()))
      return false;
    for (std::size_t x = 0; x < m.map.size(); ++x) {
      if (!b.chain.contains(m.map[x])) return false;
      if (x > 0 && m.map[x] <= m.map[x - 1]) return false;
    }
    return preserves(a, b, m.map);
  };
  std::vector<bool> seen_ext(ec.size(), false), seen_base(bc.size(), false);
  for (const auto& m : cert.inward) {
    if (!ok(m)) return false;
    seen_ext[m.from] = true;
  }
  for (const auto& m : cert.covering) {
    if (!ok(m)) return false;
    seen_base[m.to] = true;
  }
  return std::all_of(seen_ext.begin(), seen_ext.end(), [](bool b) { return b; }) &&
         std::all_of(seen_base.begin(), seen_base.end(), [](bool b) { return b; });
}

ExtensionCertificate CatalogIndex::certificate(const CatalogEdge& edge) const {
  const auto& to_c = entries[edge.to].components;
  const auto& from_c = entries[edge.from].components;
  auto pos = [](const std::vector<std::size_t>& v, std::size_t c) {
    return static_cast<std::size_t>(std::find(v.begin(), v.end(), c) - v.begin());
  };
  ExtensionCertificate cert;
  for (auto [a, b] : edge.inward) cert.inward.push_back({pos(to_c, a), pos(from_c, b), *embedding(a, b)});
  for (auto [a, b] : edge.covering)
    cert.covering.push_back({pos(to_c, a), pos(from_c, b), *embedding(a, b)});
  return cert;
}

std::optional<std::size_t> CatalogIndex::find(const ProductMatrix& m) const {
  const ProductMatrix key = m.normalized();
  for (std::size_t e = 0; e < entries.size(); ++e)
    if (entries[e].matrix() == key) return e;
  return std::nullopt;
}

std::span<const CatalogEdge> CatalogIndex::extensions_of(std::size_t from) const {
  return std::span<const CatalogEdge>(edges).subspan(edge_begin.at(from),
                                                      edge_begin.at(from + 1) - edge_begin[from]);
}

bool CatalogIndex::extends(std::size_t ext, std::size_t base) const {
  if (ext == base) return true;
  for (const auto& e : extensions_of(base))
    if (e.to == ext) return true;
  return false;
}

namespace {

std::string landmark_name(Side side, const ProductMatrix& m) {
  static const char* const godel[] = {"J3", "J4", "J3xJ4", "J2xJ3", "CPL"};
  if (side == Side::GodelInv) {
    for (const char* name : godel)
      if (named(name).family.front() == m) return name;
    return "";
  }
  if (side == Side::Luk && m.is_single()) {
    const Component& c = m.components().front();
    return "L(" + std::to_string(c.chain.top()) + "," + std::to_string(c.filter.threshold) + ")";
  }
  return "";
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

CatalogIndex build_catalog(Side side, int n, int i, std::vector<Component> components,
                           std::vector<Subuniverse> carriers,
                           const std::vector<std::vector<std::size_t>>& entries, unsigned workers) {
  CatalogIndex cat;
  cat.side = side;
  cat.n = n;
  cat.i = i;
  cat.components = std::move(components);
  cat.carriers = std::move(carriers);
  const std::size_t nc = cat.components.size();

  cat.embeddings.resize(nc * nc);
  parallel_for(nc * nc, workers, [&](std::size_t k) {
    cat.embeddings[k] = component_embedding(cat.components[k / nc], cat.components[k % nc]);
  });

  std::map<std::string, std::size_t> seen;
  for (const auto& idx : entries) {
    std::vector<std::size_t> sorted = idx;
    std::sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) {
      return canonical_before(cat.components[a], cat.components[b]);
    });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Component> parts;
    for (std::size_t c : sorted) parts.push_back(cat.components.at(c));
    const ProductMatrix m = ProductMatrix(std::move(parts)).normalized();
    if (!seen.emplace(to_string(m), cat.entries.size()).second) continue;
    CatalogEntry entry;
    entry.components = std::move(sorted);
    entry.logic = from_family(landmark_name(side, m), {m});
    entry.logic.n = n;
    entry.logic.i = i;
    for (const auto& c : m.components()) entry.logic.thresholds.push_back(c.filter.threshold);
    cat.entries.push_back(std::move(entry));
  }

  const std::size_t ne = cat.entries.size();
  std::vector<std::vector<CatalogEdge>> out(ne);
  parallel_for(ne, workers, [&](std::size_t from) {
    const auto& base = cat.entries[from].components;
    for (std::size_t to = 0; to < ne; ++to) {
      if (to == from) continue;
      const auto& ext = cat.entries[to].components;
      CatalogEdge edge{from, to, {}, {}};
      bool ok = true;
      for (std::size_t a : ext) {
        auto it = std::find_if(base.begin(), base.end(), [&](std::size_t b) { return cat.embedding(a, b).has_value(); });
        if (it == base.end()) { ok = false; break; }
        edge.inward.emplace_back(a, *it);
      }
      if (!ok) continue;
      for (std::size_t b : base) {
        auto it = std::find_if(ext.begin(), ext.end(), [&](std::size_t a) { return cat.embedding(a, b).has_value(); });
        if (it == ext.end()) { ok = false; break; }
        edge.covering.emplace_back(*it, b);
      }
      if (ok) out[from].push_back(std::move(edge));
    }
  });
  cat.edge_begin.push_back(0);
  for (auto& list : out) {
    for (auto& e : list) cat.edges.push_back(std::move(e));
    cat.edge_begin.push_back(cat.edges.size());
  }
  return cat;
}

CatalogIndex enumerate_godel_catalog(int n, int max_components, unsigned workers) {
  if (n < 2) throw InputError("the Gödel catalog needs n >= 2");
  if (max_components < 1) throw InputError("max components must be at least 1");
  const Chain ambient = Chain::godel(n);
  std::vector<Subuniverse> reps;
  for (const auto& s : enumerate_subuniverses(ambient)) {
    if (generate_subuniverse(ambient, s.members) != s)
      throw std::logic_error("enumerated subuniverse is not closed");
    auto same = [&](const Subuniverse& r) { return r.members.size() == s.members.size(); };
    if (std::none_of(reps.begin(), reps.end(), same)) reps.push_back(s);
  }
  std::sort(reps.begin(), reps.end(),
            [](const Subuniverse& a, const Subuniverse& b) { return a.members.size() > b.members.size(); });
  std::vector<Component> comps;
  std::vector<Subuniverse> carriers;
  for (const auto& r : reps) {
    const Chain c = r.as_chain();
    for (Value t = c.top(); t >= 1; --t) {
      comps.emplace_back(c, t);
      carriers.push_back(r);
    }
  }
  std::vector<std::vector<std::size_t>> entries;
  const std::size_t nc = comps.size();
  const std::size_t kmax = std::min<std::size_t>(static_cast<std::size_t>(max_components), nc);
  for (std::size_t k = 1; k <= kmax; ++k) {
    std::vector<std::size_t> pick(k);
    for (std::size_t j = 0; j < k; ++j) pick[j] = j;
    while (true) {
      entries.push_back(pick);
      std::size_t j = k;
      while (j > 0 && pick[j - 1] == nc - k + (j - 1)) --j;
      if (j == 0) break;
      ++pick[j - 1];
      for (std::size_t t = j; t < k; ++t) pick[t] = pick[t - 1] + 1;
    }
  }
  return build_catalog(Side::GodelInv, n, 0, std::move(comps), std::move(carriers), entries, workers);
}

Value luk_threshold(int n, int i, int d) {
  if (n < 1 || i < 1 || i > n) throw InputError("F_{i/n} needs 1 <= i <= n");
  if (d < 1 || n % d != 0) throw InputError(std::to_string(d) + " does not divide " + std::to_string(n));
  return static_cast<Value>((static_cast<long>(i) * d + n - 1) / n);
}

CatalogIndex enumerate_luk_catalog(int n, int i, unsigned workers) {
  if (n < 1 || i < 1 || i > n) throw InputError("the Łukasiewicz catalog needs 1 <= i <= n");
  std::vector<int> divs = divisors(n);
  std::reverse(divs.begin(), divs.end());
  if (divs.size() > 16) throw ResourceError("too many divisors to enumerate their subsets");
  const Chain ambient = Chain::mv(n + 1);
  std::vector<Component> comps;
  std::vector<Subuniverse> carriers;
  for (int d : divs) {
    comps.emplace_back(Chain::mv(d + 1), luk_threshold(n, i, d));
    Subuniverse s{ambient, {}};
    for (int k = 0; k <= d; ++k) s.members.push_back(k * (n / d));
    if (generate_subuniverse(ambient, s.members) != s)
      throw std::logic_error("divisor chain is not a subuniverse");
    carriers.push_back(std::move(s));
  }
  std::vector<std::vector<std::size_t>> entries;
  const std::size_t count = std::size_t{1} << divs.size();
  for (std::size_t mask = 1; mask < count; ++mask) {
    std::vector<std::size_t> pick;
    for (std::size_t b = 0; b < divs.size(); ++b)
      if (mask & (std::size_t{1} << b)) pick.push_back(b);
    int multiples = 0;
    for (std::size_t a : pick) {
      bool is_multiple = false;
      for (std::size_t b : pick)
        if (a != b && divs[a] % divs[b] == 0) is_multiple = true;
      multiples += is_multiple;
    }
    if (multiples <= 1) entries.push_back(std::move(pick));
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return build_catalog(Side::Luk, n, i, std::move(comps), std::move(carriers), entries, workers);
}

std::vector<int> compute_X(int n, int i) {
  if (n < 1 || i < 1 || i > n) throw InputError("X needs 1 <= i <= n");
  std::vector<int> out;
  for (int p : divisors(n))
    if (is_prime(p) && 2 * luk_threshold(n, i, p) <= p) out.push_back(p);
  return out;
}

ProductMatrix luk_product(int n, int i, std::span<const int> chains) {
  if (chains.empty()) throw InputError("a product needs at least one chain");
  std::vector<Component> parts;
  for (int d : chains) parts.emplace_back(Chain::mv(d + 1), luk_threshold(n, i, d));
  return ProductMatrix(std::move(parts)).normalized();
}

std::string export_text(const CatalogIndex& catalog) {
  std::ostringstream out;
  out << "# catalog side=" << to_string(catalog.side) << " n=" << catalog.n;
  if (catalog.side == Side::Luk) out << " i=" << catalog.i;
  out << " entries=" << catalog.entries.size() << " edges=" << catalog.edges.size() << "\n";
  for (std::size_t e = 0; e < catalog.entries.size(); ++e) {
    const auto& entry = catalog.entries[e];
    out << "entry " << e << " " << to_string(entry.matrix()) << " components=" << entry.components.size();
    if (!entry.logic.name.empty()) out << " name=" << entry.logic.name;
    out << "\n";
  }
  for (const auto& edge : catalog.edges) out << "edge " << edge.from << " -> " << edge.to << "\n";
  return out.str();
}

std::string export_dot(const CatalogIndex& catalog, std::span<const std::size_t> highlight) {
  const std::size_t ne = catalog.entries.size();
  std::vector<std::vector<bool>> up(ne, std::vector<bool>(ne, false));
  for (const auto& e : catalog.edges) up[e.from][e.to] = true;
  auto same = [&](std::size_t a, std::size_t b) { return a == b || (up[a][b] && up[b][a]); };

  std::ostringstream out;
  out << "digraph catalog {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t e = 0; e < ne; ++e) {
    out << "  n" << e << " [label=\"" << catalog.entries[e].logic.label() << "\"";
    if (std::find(highlight.begin(), highlight.end(), e) != highlight.end()) out << ", peripheries=2";
    out << "];\n";
  }
  for (const auto& e : catalog.edges) {
    bool implied = false;
    for (std::size_t w = 0; w < ne && !implied; ++w)
      implied = up[e.from][w] && up[w][e.to] && !same(w, e.from) && !same(w, e.to);
    if (!implied) out << "  n" << e.from << " -> n" << e.to << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace mvl
