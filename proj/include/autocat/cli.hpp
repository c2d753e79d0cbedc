// Command-line front end. Exit codes: 0 success / property holds,
// 1 checked property is false, 2 usage, input or parse error.
#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "autocat/closure.hpp"
#include "autocat/constructions.hpp"
#include "autocat/core.hpp"
#include "autocat/dsl.hpp"
#include "autocat/functors.hpp"

namespace autocat::cli {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json, Dot };

struct RunConfig {
  std::string subcommand;
  std::string input;
  std::string output;  // empty: standard output
  Format format = Format::Text;
  std::string category;
  std::string diagram;
  std::string functor;
  std::string at;
  std::string arrow;
  std::string mode = "strict";
  std::size_t max_len = 4;
  std::size_t cap = 4096;
  bool allow_self_enabling = false;
  bool weak = false;
  bool terminal = false;
};

/// Malformed input or usage; always exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <class T>
T parsed_or_throw(ParseResult<T> r, const std::string& path) {
  if (!r.ok()) {
    std::string msg;
    for (const auto& e : r.errors) msg += (msg.empty() ? "" : "\n") + format_error(e, path);
    throw InputError(msg);
  }
  return std::move(*r.value);
}

inline std::string plural(std::size_t n, const char* word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

inline std::string names(const std::vector<std::string>& xs) { return autocat::detail::join(xs, ", "); }

template <class Id>
std::vector<std::string> strs(const std::vector<Id>& ids) {
  std::vector<std::string> out;
  for (const auto& i : ids) out.push_back(i.str());
  return out;
}

inline Json table_json(const FiniteCategory& c) {
  Json rows = Json::array();
  for (const auto& e : c.to_raw().composites) rows.push_back({{"outer", e.outer}, {"inner", e.inner}, {"result", e.result}});
  return rows;
}

inline Json category_json(const FiniteCategory& c) {
  Json arrows = Json::array();
  for (FiniteCategory::Index a = 0; a < c.arrow_count(); ++a) {
    arrows.push_back({{"name", c.arrow(a).str()}, {"dom", c.object(c.dom(a)).str()}, {"cod", c.object(c.cod(a)).str()}});
  }
  Json identities = Json::object();
  for (FiniteCategory::Index x = 0; x < c.object_count(); ++x) identities[c.object(x).str()] = c.arrow(c.identity(x)).str();
  return {{"name", c.name()}, {"objects", strs(c.objects())}, {"arrows", arrows}, {"identities", identities},
          {"compose", table_json(c)}};
}

struct Loaded {
  Document doc;
  std::vector<std::pair<std::string, ValidationResult>> checks;  // in document order
  CategoryTable valid;
};

inline Loaded load_document(const std::string& path) {
  Loaded l{parsed_or_throw(parse_document(read_file(path)), path), {}, {}};
  for (const auto& c : l.doc.categories) {
    auto r = validate_category(c);
    if (r.valid()) l.valid.emplace(c.name, *r.category);
    l.checks.emplace_back(c.name, std::move(r));
  }
  return l;
}

inline const FiniteCategory& pick_category(const Loaded& l, const std::string& requested) {
  std::string name = requested;
  if (name.empty()) {
    if (l.doc.categories.size() != 1) {
      throw InputError("file holds " + std::to_string(l.doc.categories.size()) + " categories; select one with --category");
    }
    name = l.doc.categories.front().name;
  }
  if (!l.doc.category(name)) throw InputError("no category named " + name);
  auto it = l.valid.find(name);
  if (it == l.valid.end()) throw InputError("category " + name + " is invalid; run `check` for the violation report");
  return it->second;
}

inline EnablingNetwork load_network(const std::string& path) {
  auto doc = parsed_or_throw(parse_document(read_file(path)), path);
  if (doc.networks.size() != 1) throw InputError(path + ": expected exactly one network block");
  return doc.networks.front();
}

inline void require_format(const RunConfig& cfg, std::initializer_list<Format> allowed) {
  for (auto f : allowed) {
    if (f == cfg.format) return;
  }
  throw InputError("output format not supported by " + cfg.subcommand);
}

struct Output {
  int code = 0;
  std::string text;
};

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// --- subcommands -----------------------------------------------------------

inline Output cmd_check(const RunConfig& cfg) {
  require_format(cfg, {Format::Text, Format::Json});
  auto l = load_document(cfg.input);
  if (l.doc.categories.empty()) throw InputError(cfg.input + ": no category blocks");
  Output out;
  bool structural = false;
  Json cats = Json::array();
  for (const auto& [name, r] : l.checks) {
    if (!cfg.category.empty() && name != cfg.category) continue;
    const auto* raw = l.doc.category(name);
    structural = structural || r.has_structural_errors();
    if (!r.valid()) out.code = 1;
    Json violations = Json::array();
    for (const auto& v : r.violations) {
      violations.push_back({{"kind", to_string(v.kind)}, {"witness", v.witness}, {"message", describe(v)}});
    }
    cats.push_back({{"name", name}, {"valid", r.valid()}, {"objects", raw->objects.size()}, {"arrows", raw->arrows.size()},
                    {"violations", violations}});
    if (r.valid()) {
      out.text += "category " + name + ": valid: " + plural(raw->objects.size(), "object") + ", " +
                  plural(raw->arrows.size(), "arrow") + "\n";
    } else {
      out.text += "category " + name + ": invalid: " + plural(r.violations.size(), "violation") + "\n";
      for (const auto& v : r.violations) out.text += "  " + std::string(to_string(v.kind)) + ": " + describe(v) + "\n";
    }
  }
  if (cats.empty()) throw InputError("no category named " + cfg.category);
  if (cfg.format == Format::Json) out.text = dump({{"categories", cats}});
  if (structural) out.code = 2;
  return out;
}

inline Output cmd_commutes(const RunConfig& cfg) {
  require_format(cfg, {Format::Text, Format::Json});
  auto l = load_document(cfg.input);
  std::string name = cfg.diagram;
  if (name.empty()) {
    if (l.doc.diagrams.size() != 1) throw InputError("select a diagram with --diagram");
    name = l.doc.diagrams.front().name;
  }
  const auto* raw = l.doc.diagram(name);
  if (!raw) throw InputError("no diagram named " + name);
  if (!l.valid.count(raw->category)) throw InputError("category " + raw->category + " is invalid");
  auto d = resolve_diagram(*raw, l.valid);
  auto r = check_commutes(d);
  Output out{r.commutes ? 0 : 1, {}};
  Json j{{"diagram", name}, {"category", raw->category}, {"commutes", r.commutes}};
  if (r.commutes) {
    auto composite = compose_path(d.carrier.get(), d.paths.front().arrows).str();
    j["composite"] = composite;
    out.text = "diagram " + name + " commutes: " + plural(d.paths.size(), "path") + " compose to " + composite + "\n";
  } else {
    const auto& ce = *r.counterexample;
    j["counterexample"] = {{"first_path", ce.first_path}, {"first_composite", ce.first_composite.str()},
                           {"second_path", ce.second_path}, {"second_composite", ce.second_composite.str()}};
    out.text = "diagram " + name + " does not commute: path " + ce.first_path + " = " + ce.first_composite.str() +
               ", path " + ce.second_path + " = " + ce.second_composite.str() + "\n";
  }
  if (cfg.format == Format::Json) out.text = dump(j);
  return out;
}

inline Output emit_category(const RunConfig& cfg, const FiniteCategory& c, Json json) {
  switch (cfg.format) {
    case Format::Text: return {0, serialize(c)};
    case Format::Dot: return {0, category_to_dot(c)};
    case Format::Json: return {0, dump(json)};
  }
  return {};
}

inline Output cmd_coslice(const RunConfig& cfg) {
  auto l = load_document(cfg.input);
  const auto& c = pick_category(l, cfg.category);
  if (cfg.at.empty()) throw InputError("coslice requires --at OBJECT");
  auto cs = coslice(c, ObjectId{cfg.at});
  Json objects = Json::array();
  for (const auto& [x, f] : cs.object_origin) objects.push_back({{"name", x.str()}, {"origin", f.str()}});
  Json arrows = Json::array();
  for (const auto& [a, t] : cs.arrow_origin) {
    arrows.push_back({{"name", a.str()}, {"from", t.from.str()}, {"to", t.to.str()}, {"mediator", t.mediator.str()}});
  }
  Json j = category_json(cs.result);
  j["source"] = c.name();
  j["anchor"] = cfg.at;
  j["object_origin"] = objects;
  j["arrow_origin"] = arrows;
  return emit_category(cfg, cs.result, j);
}

inline Output cmd_initial(const RunConfig& cfg) {
  require_format(cfg, {Format::Text, Format::Json});
  auto l = load_document(cfg.input);
  const auto& c = pick_category(l, cfg.category);
  std::vector<ObjectId> found;
  if (cfg.terminal) {
    found = cfg.weak ? find_weakly_terminal(c) : find_terminal(c);
  } else {
    found = cfg.weak ? find_weakly_initial(c) : find_initial(c);
  }
  std::string kind = std::string(cfg.weak ? "weakly " : "") + (cfg.terminal ? "terminal" : "initial");
  Output out{found.empty() ? 1 : 0, {}};
  if (found.empty()) {
    out.text = "no " + kind + " object in " + c.name() + "\n";
  } else {
    out.text = kind + " objects in " + c.name() + ": " + names(strs(found)) + "\n";
  }
  if (cfg.format == Format::Json) out.text = dump({{"category", c.name()}, {"kind", kind}, {"objects", strs(found)}});
  return out;
}

inline Output cmd_endo(const RunConfig& cfg) {
  auto l = load_document(cfg.input);
  const auto& c = pick_category(l, cfg.category);
  if (cfg.at.empty()) throw InputError("endo requires --at OBJECT");
  auto m = endo_monoid(c, ObjectId{cfg.at});
  Json j = category_json(m.category());
  j["source"] = c.name();
  j["unit"] = m.unit().str();
  return emit_category(cfg, m.category(), j);
}

inline Output cmd_factorize(const RunConfig& cfg) {
  require_format(cfg, {Format::Text, Format::Json});
  auto l = load_document(cfg.input);
  const auto& c = pick_category(l, cfg.category);
  if (cfg.arrow.empty()) throw InputError("factorize requires --arrow ARROW");
  auto m = as_monoid(c);
  auto pairs = factorize(m, ArrowId{cfg.arrow});
  Output out;
  Json list = Json::array();
  for (const auto& [g, f] : pairs) {
    out.text += g.str() + " . " + f.str() + "\n";
    list.push_back({g.str(), f.str()});
  }
  if (cfg.format == Format::Json) out.text = dump({{"monoid", c.name()}, {"target", cfg.arrow}, {"factorizations", list}});
  return out;
}

inline Output cmd_functor_check(const RunConfig& cfg) {
  require_format(cfg, {Format::Text, Format::Json});
  auto l = load_document(cfg.input);
  Output out;
  Json functors = Json::array();
  Json naturals = Json::array();
  std::size_t checked = 0;
  for (const auto& raw : l.doc.functors) {
    if (!cfg.functor.empty() && raw.name != cfg.functor) continue;
    ++checked;
    auto report = check_functor(resolve_functor(raw, l.valid));
    if (!report.valid()) out.code = 1;
    Json violations = Json::array();
    out.text += "functor " + raw.name + ": " + (report.valid() ? "valid" : "invalid") + "\n";
    for (const auto& v : report.violations) {
      violations.push_back({{"kind", to_string(v.kind)}, {"witness", v.witness}, {"message", v.message}});
      out.text += "  " + std::string(to_string(v.kind)) + ": " + v.message + "\n";
    }
    functors.push_back({{"name", raw.name}, {"valid", report.valid()}, {"violations", violations}});
  }
  for (const auto& raw : l.doc.naturals) {
    if (!cfg.functor.empty() && raw.name != cfg.functor) continue;
    ++checked;
    auto r = check_natural(resolve_natural(raw, l.doc, l.valid));
    if (!r.natural) out.code = 1;
    Json j{{"name", raw.name}, {"natural", r.natural}};
    if (r.natural) {
      out.text += "natural " + raw.name + ": natural\n";
    } else {
      const auto& f = *r.failure;
      j["failing_square"] = {{"arrow", f.arrow.str()}, {"lhs", f.lhs.str()}, {"rhs", f.rhs.str()}};
      out.text += "natural " + raw.name + ": not natural at " + f.arrow.str() + ": " + f.lhs.str() + " vs " + f.rhs.str() + "\n";
    }
    naturals.push_back(j);
  }
  if (checked == 0) throw InputError(cfg.functor.empty() ? "no functors in " + cfg.input : "no functor named " + cfg.functor);
  if (cfg.format == Format::Json) out.text = dump({{"functors", functors}, {"naturals", naturals}});
  return out;
}

inline Output cmd_dynsys(const RunConfig& cfg) {
  auto d = parsed_or_throw(parse_dynsys(read_file(cfg.input)), cfg.input);
  auto tm = transformation_monoid(d, cfg.cap);
  auto verdict = verify_action_functor(tm.monoid, tm.action, tm.states.size());
  Output out{verdict.valid ? 0 : 1, {}};
  const auto& c = tm.monoid.category();
  switch (cfg.format) {
    case Format::Dot: out.text = category_to_dot(c); break;
    case Format::Text: {
      out.text = serialize(c);
      out.text += "// states: " + autocat::detail::join(tm.states, " ") + "\n";
      out.text += "// tail " + std::to_string(tm.tail) + ", period " + std::to_string(tm.period) + "\n";
      for (const auto& [a, m] : tm.action) {
        out.text += "// action " + a.str() + ":";
        for (std::size_t s = 0; s < m.size(); ++s) out.text += " " + tm.states[s] + "->" + tm.states[m[s]];
        out.text += "\n";
      }
      out.text += std::string("// action functor: ") + (verdict.valid ? "verified" : "REJECTED") + "\n";
      break;
    }
    case Format::Json: {
      Json action = Json::object();
      for (const auto& [a, m] : tm.action) {
        Json row = Json::object();
        for (std::size_t s = 0; s < m.size(); ++s) row[tm.states[s]] = tm.states[m[s]];
        action[a.str()] = row;
      }
      Json j = category_json(c);
      j["states"] = tm.states;
      j["tail"] = tm.tail;
      j["period"] = tm.period;
      j["action"] = action;
      j["action_functor"] = verdict.valid;
      out.text = dump(j);
      break;
    }
  }
  return out;
}

inline Json closure_json(const EnablingNetwork& n, const ClosureResult& r) {
  Json removed = Json::array();
  for (const auto& rm : r.removed) removed.push_back({{"process", rm.process}, {"reason", to_string(rm.reason)}});
  return {{"network", n.name()}, {"closed", r.closed}, {"removed", removed}};
}

inline Output cmd_closure(const RunConfig& cfg) {
  auto n = load_network(cfg.input);
  auto r = maximal_closure(n, {cfg.allow_self_enabling});
  Output out{r.closed.empty() ? 1 : 0, {}};
  switch (cfg.format) {
    case Format::Dot: out.text = network_to_dot(n, r); break;
    case Format::Json: out.text = dump(closure_json(n, r)); break;
    case Format::Text:
      out.text = "closed: " + (r.closed.empty() ? std::string("(none)") : names(r.closed)) + "\n";
      for (const auto& rm : r.removed) out.text += "removed " + rm.process + ": " + std::string(to_string(rm.reason)) + "\n";
      break;
  }
  return out;
}

inline Output cmd_precarious(const RunConfig& cfg) {
  require_format(cfg, {Format::Text, Format::Json});
  PrecariousMode mode;
  if (cfg.mode == "strict") {
    mode = PrecariousMode::Strict;
  } else if (cfg.mode == "weak") {
    mode = PrecariousMode::Weak;
  } else {
    throw InputError("--mode must be strict or weak");
  }
  auto n = load_network(cfg.input);
  ClosureOptions options{cfg.allow_self_enabling};
  if (maximal_closure(n, options).closed.empty()) {
    std::string msg = "network " + n.name() + ": not precarious: maximal closure is empty\n";
    if (cfg.format == Format::Json) {
      msg = dump({{"network", n.name()}, {"mode", to_string(mode)}, {"precarious", false}, {"closure", Json::array()},
                  {"deletions", Json::array()}});
    }
    return {1, msg};
  }
  auto r = is_precarious(n, mode, options);
  Output out{r.precarious ? 0 : 1, {}};
  Json deletions = Json::array();
  out.text = "network " + n.name() + ": " + (r.precarious ? "precarious" : "not precarious") + " (" +
             std::string(to_string(mode)) + ")\n";
  out.text += "closure: " + names(r.closure) + "\n";
  for (const auto& d : r.deletions) {
    out.text += "delete " + d.enabling.label + " (" + d.enabling.source + " -> " + d.enabling.target + "): survivors {" +
                names(d.survivors) + "}\n";
    deletions.push_back({{"label", d.enabling.label}, {"source", d.enabling.source}, {"target", d.enabling.target},
                         {"survivors", d.survivors}});
  }
  if (cfg.format == Format::Json) {
    out.text = dump({{"network", n.name()}, {"mode", to_string(mode)}, {"precarious", r.precarious},
                     {"closure", r.closure}, {"deletions", deletions}});
  }
  return out;
}

inline Output cmd_cycles(const RunConfig& cfg) {
  require_format(cfg, {Format::Text, Format::Json});
  auto n = load_network(cfg.input);
  if (cfg.at.empty()) throw InputError("cycles requires --at PROCESS");
  auto cycles = self_mediation_cycles(n, cfg.at, cfg.max_len);
  Output out;
  for (const auto& c : cycles) out.text += "[" + names(c) + "]\n";
  if (cfg.format == Format::Json) out.text = dump({{"network", n.name()}, {"anchor", cfg.at}, {"max_len", cfg.max_len}, {"cycles", cycles}});
  return out;
}

inline Output cmd_dot(const RunConfig& cfg) {
  require_format(cfg, {Format::Text, Format::Dot});
  auto doc = parsed_or_throw(parse_document(read_file(cfg.input)), cfg.input);
  bool network = cfg.input.ends_with(".enet") || (doc.categories.empty() && !doc.networks.empty());
  if (network) {
    if (doc.networks.size() != 1) throw InputError(cfg.input + ": expected exactly one network block");
    const auto& n = doc.networks.front();
    return {0, network_to_dot(n, maximal_closure(n, {cfg.allow_self_enabling}))};
  }
  auto l = load_document(cfg.input);
  return {0, category_to_dot(pick_category(l, cfg.category))};
}

}  // namespace detail

/// Runs one subcommand; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite categories, coslices, functors and enabling-network closure", "autocat"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "text";
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"dot", Format::Dot}};

  auto common = [&](CLI::App* sub, const char* what) {
    sub->add_option("file", cfg.input, what)->required();
    sub->add_option("--format", format, "Output encoding")->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("-o,--output", cfg.output, "Write output to this path");
    return sub;
  };
  auto with_category = [&](CLI::App* sub) { sub->add_option("--category", cfg.category, "Category block to use"); };

  auto* check = common(app.add_subcommand("check", "Verify the category axioms"), ".cat file");
  with_category(check);
  auto* commutes = common(app.add_subcommand("commutes", "Check that a diagram commutes"), ".cat file");
  commutes->add_option("--diagram", cfg.diagram, "Diagram block");
  auto* cos = common(app.add_subcommand("coslice", "Build the coslice category under an object"), ".cat file");
  with_category(cos);
  cos->add_option("--at", cfg.at, "Anchor object")->required();
  auto* initial = common(app.add_subcommand("initial", "List initial (or terminal) objects"), ".cat file");
  with_category(initial);
  initial->add_flag("--weak", cfg.weak, "At least one arrow instead of exactly one");
  initial->add_flag("--terminal", cfg.terminal, "Search for terminal objects instead");
  auto* endo = common(app.add_subcommand("endo", "Endomorphism monoid of an object"), ".cat file");
  with_category(endo);
  endo->add_option("--at", cfg.at, "Object")->required();
  auto* fact = common(app.add_subcommand("factorize", "All factorizations of a monoid element"), ".cat file");
  with_category(fact);
  fact->add_option("--arrow", cfg.arrow, "Target arrow")->required();
  auto* fcheck = common(app.add_subcommand("functor-check", "Check functor and naturality laws"), ".cat file");
  fcheck->add_option("--functor", cfg.functor, "Only this functor or natural transformation");
  auto* dyn = common(app.add_subcommand("dynsys", "Transformation monoid of a dynamical system"), ".dyn file");
  dyn->add_option("--cap", cfg.cap, "Maximum number of monoid elements")->check(CLI::PositiveNumber);
  auto* clo = common(app.add_subcommand("closure", "Maximal operationally closed set"), ".enet file");
  clo->add_flag("--allow-self-enabling", cfg.allow_self_enabling, "Count self-loops");
  auto* prec = common(app.add_subcommand("precarious", "Precariousness of the closed set"), ".enet file");
  prec->add_option("--mode", cfg.mode, "strict or weak")->check(CLI::IsMember({"strict", "weak"}));
  prec->add_flag("--allow-self-enabling", cfg.allow_self_enabling, "Count self-loops");
  auto* cyc = common(app.add_subcommand("cycles", "Self-mediation cycles through a process"), ".enet file");
  cyc->add_option("--at", cfg.at, "Anchor process")->required();
  cyc->add_option("--max-len", cfg.max_len, "Maximum cycle length")->check(CLI::PositiveNumber);
  auto* dot = common(app.add_subcommand("dot", "Graphviz rendering"), ".enet or .cat file");
  with_category(dot);
  dot->add_flag("--allow-self-enabling", cfg.allow_self_enabling, "Count self-loops when highlighting");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "autocat: " << e.what() << "\n";
    return 2;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.format = formats.at(format);
  const std::map<std::string, detail::Output (*)(const RunConfig&)> handlers{
      {"check", detail::cmd_check},        {"commutes", detail::cmd_commutes},
      {"coslice", detail::cmd_coslice},    {"initial", detail::cmd_initial},
      {"endo", detail::cmd_endo},          {"factorize", detail::cmd_factorize},
      {"functor-check", detail::cmd_functor_check}, {"dynsys", detail::cmd_dynsys},
      {"closure", detail::cmd_closure},    {"precarious", detail::cmd_precarious},
      {"cycles", detail::cmd_cycles},      {"dot", detail::cmd_dot},
  };

  detail::Output result;
  try {
    result = handlers.at(cfg.subcommand)(cfg);
  } catch (const InputError& e) {
    err << "autocat " << cfg.subcommand << ": " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "autocat " << cfg.subcommand << ": " << e.what() << "\n";
    return 2;
  }

  if (cfg.output.empty()) {
    out << result.text;
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
      err << "autocat: cannot write " << cfg.output << "\n";
      return 2;
    }
    file << result.text;
  }
  if (result.code == 2) err << "autocat " << cfg.subcommand << ": input is structurally malformed\n";
  return result.code;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace autocat::cli
