#include "mvl/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "mvl/analysis.hpp"
#include "mvl/catalog.hpp"
#include "mvl/entailment.hpp"
#include "mvl/error.hpp"
#include "mvl/eval.hpp"
#include "mvl/terms.hpp"

namespace mvl::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// A resolved target: a logic or a standard class.
struct Target {
  std::string label;
  std::optional<LogicDescriptor> logic;
  std::optional<StandardClass> cls;
};

Target resolve_target(const std::string& logic, const std::string& cls) {
  Target t;
  if (!cls.empty()) {
    t.cls = parse_standard_class(cls);
    // Only the finitary companion of each class is decided.
    t.label = "class:" + std::string(to_string(*t.cls)) + "/finitary";
    return t;
  }
  try {
    t.logic = resolve_logic(logic);
  } catch (const SyntaxError& e) {
    throw InputError("unknown logic '" + logic + "' (" + e.what() + ")");
  }
  t.label = t.logic->label();
  return t;
}

Json counterexample_json(const Counterexample& ce, const ProductMatrix& m) {
  Json assignment = Json::object();
  for (const auto& [name, tuple] : ce.assignment) {
    if (m.is_single()) {
      assignment[name] = m.components()[0].chain.format(tuple.at(0));
      continue;
    }
    Json values = Json::array();
    for (std::size_t c = 0; c < tuple.size(); ++c) values.push_back(m.components().at(c).chain.format(tuple[c]));
    assignment[name] = values;
  }
  Json out;
  out["matrix"] = to_string(m);
  out["assignment"] = assignment;
  return out;
}

struct Decided {
  Verdict verdict;
  std::vector<ProductMatrix> family;  // what the counterexample refers to
};

Decided decide(const Target& t, const Query& q, const EntailOptions& opts) {
  Decided d;
  if (t.cls) {
    d.verdict = decide_standard(*t.cls, q.gamma, q.phi, opts);
    FormulaSet all = q.gamma;
    all.push_back(q.phi);
    d.family = standard_grid_family(*t.cls, variables(all).size());
  } else {
    d.verdict = entails(*t.logic, q.gamma, q.phi, opts);
    d.family = t.logic->family;
  }
  return d;
}

int cmd_entail(const RunConfig& c, std::ostream& out) {
  std::vector<std::string> lines = c.inputs;
  if (!c.file.empty()) {
    std::ifstream in(c.file);
    if (!in) throw InputError("cannot read " + c.file);
    auto more = query_lines(in);
    lines.insert(lines.end(), more.begin(), more.end());
  }
  if (lines.empty()) throw InputError("no queries given");
  if (!c.logic.empty() && !c.standard_class.empty()) throw InputError("--logic and --class are exclusive");

  // Everything is parsed and resolved before any query is decided.
  std::vector<Query> queries;
  std::vector<Target> targets;
  for (const auto& line : lines) {
    Query q = parse_query(line);
    if (!q.logic.empty()) {
      targets.push_back(resolve_target(q.logic, ""));
    } else if (!c.logic.empty() || !c.standard_class.empty()) {
      targets.push_back(resolve_target(c.logic, c.standard_class));
    } else {
      throw InputError("no logic for query '" + q.text + "'");
    }
    queries.push_back(std::move(q));
  }

  EntailOptions opts;
  opts.budget = c.budget;
  opts.workers = c.workers;
  bool all_hold = true;
  for (std::size_t k = 0; k < queries.size(); ++k) {
    const auto& q = queries[k];
    const auto& t = targets[k];
    const Decided d = decide(t, q, opts);
    all_hold = all_hold && d.verdict.holds;
    if (c.format == Format::Records) {
      Json r;
      r["query"] = q.text;
      r["logic"] = t.label;
      r["holds"] = d.verdict.holds;
      r["counterexample"] = nullptr;
      if (d.verdict.counterexample) {
        const auto& ce = *d.verdict.counterexample;
        r["counterexample"] = counterexample_json(ce, d.family.at(ce.matrix));
      }
      r["steps"] = d.verdict.steps;
      r["complete"] = d.verdict.complete;
      out << r.dump() << "\n";
      continue;
    }
    out << (d.verdict.holds ? "holds" : "fails") << "  " << q.text;
    if (q.logic.empty()) out << " @ " << t.label;
    out << "\n";
    if (d.verdict.counterexample) {
      const auto& ce = *d.verdict.counterexample;
      const auto& m = d.family.at(ce.matrix);
      out << "  counterexample in " << to_string(m) << ": " << to_string(ce, m) << "\n";
    }
    if (!d.verdict.complete) out << "  (incomplete)\n";
  }
  return all_hold ? kAllHold : kSomeFail;
}

// Catalog selection shared by classify, dot and catalog.
struct CatalogChoice {
  Side side = Side::GodelInv;
  int n = 0;
  int i = 0;
};

CatalogChoice catalog_choice(const RunConfig& c) {
  if (c.godel && c.luk) throw InputError("--godel and --luk are exclusive");
  CatalogChoice ch;
  if (c.luk) {
    ch.side = Side::Luk;
    ch.n = *c.luk;
  } else if (c.godel) {
    ch.n = *c.godel;
  } else if (c.n) {
    ch.n = *c.n;
    if (c.i) ch.side = Side::Luk;
  } else {
    throw InputError("a catalog needs --godel N, --luk N --i I, or --n");
  }
  if (ch.side == Side::Luk) {
    if (!c.i) throw InputError("the Łukasiewicz catalog needs --i");
    ch.i = *c.i;
    if (ch.n < 1 || ch.i < 1 || ch.i > ch.n) throw InputError("need 1 <= i <= n");
  }
  return ch;
}

CatalogIndex build(const CatalogChoice& ch, const RunConfig& c) {
  if (ch.side == Side::Luk) return enumerate_luk_catalog(ch.n, ch.i, c.workers);
  return enumerate_godel_catalog(ch.n, c.max_components, c.workers);
}

Json report_json(const ClassificationReport& r) {
  auto opt = [](const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); };
  Json j;
  j["logic"] = r.logic.label();
  j["matrix"] = serialize_family(r.logic.family);
  j["paraconsistent"] = r.paraconsistency.paraconsistent;
  j["explosive"] = r.explosive;
  j["saturated"] = opt(r.saturated);
  j["ideal"] = opt(r.ideal);
  j["basis"] = r.basis;
  Json ext = Json::array();
  for (const auto& a : r.audit) {
    Json e;
    e["logic"] = a.logic;
    e["paraconsistent"] = a.paraconsistent;
    e["equivalent"] = a.equivalent;
    e["proper"] = opt(a.proper);
    e["separation"] = a.separation ? Json(to_string(a.separation->holds)) : Json(nullptr);
    ext.push_back(e);
  }
  j["extensions"] = ext;
  if (r.non_maximality) {
    Json w;
    w["intermediate"] = r.non_maximality->intermediate;
    w["above_logic"] = to_string(r.non_maximality->above_logic.holds);
    w["below_cpl"] = to_string(r.non_maximality->below_cpl.holds);
    j["between_cpl"] = w;
  } else {
    j["between_cpl"] = nullptr;
  }
  j["lfi"] = r.lfi ? Json(r.lfi->confirmed()) : Json(nullptr);
  return j;
}

std::vector<std::size_t> saturated_entries(const std::vector<ClassificationReport>& reports) {
  std::vector<std::size_t> out;
  for (const auto& r : reports)
    if (r.saturated == true) out.push_back(r.entry);
  return out;
}

int cmd_classify(const RunConfig& c, std::ostream& out) {
  const CatalogChoice ch = catalog_choice(c);
  ClassifyOptions opts;
  opts.workers = c.workers;

  if (!c.primes.empty()) {
    if (ch.side != Side::Luk) throw InputError("--primes applies to the Łukasiewicz side");
    const auto r = verify_saturated_product(ch.n, ch.i, c.primes, opts);
    if (c.format == Format::Records)
      out << report_json(r).dump() << "\n";
    else
      out << to_text(r);
    return kAllHold;
  }

  const CatalogIndex cat = build(ch, c);
  auto reports = classify_saturated(cat, opts);
  classify_ideal(cat, reports, opts);

  if (c.format == Format::Dot) {
    const auto hl = saturated_entries(reports);
    out << export_dot(cat, hl);
    return kAllHold;
  }
  if (c.format == Format::Records) {
    for (const auto& r : reports) out << report_json(r).dump() << "\n";
    return kAllHold;
  }

  std::vector<std::string> saturated, ideal, unknown;
  std::size_t para = 0;
  for (const auto& r : reports) {
    if (!r.paraconsistency.paraconsistent) continue;
    ++para;
    out << to_text(r);
    if (r.saturated == true) saturated.push_back(r.logic.label());
    if (!r.saturated) unknown.push_back(r.logic.label());
    if (r.ideal == true) ideal.push_back(r.logic.label());
  }
  auto list = [](const std::vector<std::string>& v) {
    std::string s = "{";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k];
    return s + "}";
  };
  out << "# " << to_string(cat.side) << " n=" << cat.n;
  if (cat.side == Side::Luk) out << " i=" << cat.i;
  out << ": " << cat.entries.size() << " logics, " << para << " paraconsistent\n";
  if (para == 0) out << "no paraconsistent logics\n";
  out << "saturated: " << list(saturated) << "\n";
  out << "ideal: " << list(ideal) << "\n";
  if (!unknown.empty()) out << "undecided within bounds: " << list(unknown) << "\n";
  return kAllHold;
}

int cmd_dot(const RunConfig& c, std::ostream& out) {
  const CatalogIndex cat = build(catalog_choice(c), c);
  auto reports = classify_saturated(cat, {.bounds = {}, .workers = c.workers});
  out << export_dot(cat, saturated_entries(reports));
  return kAllHold;
}

int cmd_catalog(const RunConfig& c, std::ostream& out) {
  const CatalogIndex cat = build(catalog_choice(c), c);
  if (c.format == Format::Dot) {
    out << export_dot(cat);
  } else if (c.format == Format::Records) {
    for (std::size_t e = 0; e < cat.entries.size(); ++e) {
      Json j;
      j["entry"] = e;
      j["logic"] = cat.entries[e].logic.label();
      j["matrix"] = to_string(cat.entries[e].matrix());
      Json ext = Json::array();
      for (const auto& edge : cat.extensions_of(e)) ext.push_back(cat.entries[edge.to].logic.label());
      j["extensions"] = ext;
      out << j.dump() << "\n";
    }
  } else {
    out << export_text(cat);
  }
  return kAllHold;
}

// Every assignment of the variables of `a` and `b` over `chain`.
bool equivalent_on(const Formula& a, const Formula& b, const Chain& chain) {
  const auto vars = variables(std::vector<Formula>{a, b});
  std::vector<Value> digits(vars.size(), 0);
  while (true) {
    Assignment e;
    for (std::size_t k = 0; k < vars.size(); ++k) e[vars[k]] = digits[k];
    if (evaluate(a, chain, e) != evaluate(b, chain, e)) return false;
    std::size_t pos = digits.size();
    while (pos > 0 && ++digits[pos - 1] == chain.size()) digits[--pos] = 0;
    if (pos == 0) return true;
  }
}

int cmd_translate(const RunConfig& c, std::ostream& out) {
  if (c.inputs.size() != 2) throw InputError("translate takes a translation name and a formula list");
  const std::string& name = c.inputs[0];
  const FormulaSet fs = parse_formula_list(c.inputs[1]);
  FormulaSet result;
  Connective back;
  ChainKind kind = ChainKind::GodelInv;
  if (name == "star1" || name == "star2" || name == "star3") {
    result = star_translation(name.back() - '0', fs);
  } else if (name == "delta-set") {
    result = delta_set_translation(fs);
  } else if (name == "ft-star") {
    for (const auto& f : fs) result.push_back(ft_star(f));
    back = ft_hash;
    kind = ChainKind::FT;
  } else if (name == "ft-hash") {
    for (const auto& f : fs) result.push_back(ft_hash(f));
    back = ft_star;
  } else {
    throw InputError("unknown translation '" + name + "'");
  }
  out << to_string(result) << "\n";
  if (!c.check) return kAllHold;
  if (!back) throw InputError("--check needs ft-star or ft-hash");
  // The translation composed with its converse is the identity on chains of
  // the source signature.
  bool ok = true;
  const int hi = c.n.value_or(6);
  for (int size = 2; size <= hi; ++size) {
    const Chain chain(kind, size);
    for (std::size_t k = 0; k < fs.size(); ++k) {
      check_signature(fs[k], kind);
      if (!equivalent_on(fs[k], back(result[k]), chain)) {
        out << "round trip differs on " << to_string(fs[k]) << " over size " << size << "\n";
        ok = false;
      }
    }
  }
  if (ok) out << "round trip agrees on chains of size 2.." << hi << "\n";
  return ok ? kAllHold : kSomeFail;
}

}  // namespace

Query parse_query(std::string_view line) {
  Query q;
  q.text = std::string(trim(line));
  std::string_view body = q.text;
  const auto at = body.rfind('@');
  if (at != std::string_view::npos) {
    q.logic = std::string(trim(body.substr(at + 1)));
    if (q.logic.empty()) throw InputError("empty logic after '@'");
    body = body.substr(0, at);
  }
  const auto turnstile = body.find("|-");
  if (turnstile == std::string_view::npos) throw InputError("query needs '|-': " + q.text);
  const auto gamma = trim(body.substr(0, turnstile));
  const auto phi = trim(body.substr(turnstile + 2));
  if (phi.empty()) throw InputError("query has no conclusion: " + q.text);
  if (!gamma.empty()) q.gamma = parse_formula_list(gamma);
  q.phi = parse_formula(phi);
  return q;
}

std::vector<std::string> query_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto t = trim(line);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.budget == 0) throw InputError("--budget must be positive");
    if (config.workers == 0) throw InputError("--workers must be positive");
    if (config.command == "entail") return cmd_entail(config, out);
    if (config.command == "classify") return cmd_classify(config, out);
    if (config.command == "dot") return cmd_dot(config, out);
    if (config.command == "catalog") return cmd_catalog(config, out);
    if (config.command == "translate") return cmd_translate(config, out);
    throw InputError("unknown command '" + config.command + "'");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Finite-valued paraconsistent logics: entailment, catalogs, classification"};
  app.require_subcommand(1);
  std::string format = "human";
  const std::map<std::string, Format> formats{
      {"human", Format::Human}, {"records", Format::Records}, {"dot", Format::Dot}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--budget", c.budget, "evaluation step budget")->capture_default_str();
    sub->add_option("--workers", c.workers, "worker threads")->capture_default_str();
    sub->add_option("--format", format, "human, records or dot")
        ->check(CLI::IsMember({"human", "records", "dot"}))
        ->capture_default_str();
  };
  auto catalog_flags = [&](CLI::App* sub) {
    sub->add_option("--godel", c.godel, "Gödel catalog of GV_n~");
    sub->add_option("--luk", c.luk, "Łukasiewicz catalog of LV_{n+1}");
    sub->add_option("--n", c.n, "chain parameter");
    sub->add_option("--i", c.i, "filter numerator i/n");
    sub->add_option("--max-components", c.max_components, "largest product arity")->capture_default_str();
  };

  auto* entail = app.add_subcommand("entail", "decide queries GAMMA |- PHI [@ LOGIC]");
  entail->add_option("queries", c.inputs, "inline queries");
  entail->add_option("--logic", c.logic, "logic name, matrix or family");
  entail->add_option("--class", c.standard_class, "filter class over [0,1]");
  entail->add_option("--file", c.file, "query file");
  common(entail);

  auto* classify = app.add_subcommand("classify", "saturated and ideal logics of a catalog");
  catalog_flags(classify);
  classify->add_option("--primes", c.primes, "product over primes of X(n,i)")->delimiter(',');
  common(classify);

  auto* dot = app.add_subcommand("dot", "extension graph as DOT");
  catalog_flags(dot);
  common(dot);

  auto* catalog = app.add_subcommand("catalog", "list a catalog and its certified extensions");
  catalog_flags(catalog);
  common(catalog);

  auto* translate = app.add_subcommand("translate", "star1|star2|star3|ft-star|ft-hash|delta-set FORMULAS");
  translate->add_option("args", c.inputs, "translation name and formula list")->expected(2);
  translate->add_flag("--check", c.check, "round-trip check for ft-star and ft-hash");
  translate->add_option("--n", c.n, "largest chain size for --check");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kAllHold : kError;
  }
  c.command = app.get_subcommands().front()->get_name();
  c.format = formats.at(format);
  return run(c, out, err);
}

}  // namespace mvl::cli
