#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <json.hpp>
#include <optional>

#include "desc/control.hpp"
#include "desc/coordination.hpp"
#include "desc/io.hpp"
#include "desc/language_ops.hpp"
#include "desc/oracle.hpp"
#include "desc/structural.hpp"

namespace desc::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string project;
  std::vector<std::string> generator_files;
  bool json = false;
  std::size_t oracle_bound = 0;  // 0 = off
  bool force = false;
};

struct Workspace {
  std::map<std::string, Generator> generators;
  std::optional<io::CoordinationBlock> coordination;

  const Generator& get(const std::string& name) const {
    auto it = generators.find(name);
    if (it == generators.end()) throw UsageError("unresolved generator name '" + name + "'");
    return it->second;
  }
};

struct Coordination {
  Generator g1, g2, gk, k;
  CoordinationScheme scheme;

  Generator plant() const { return sync_product(g1, g2, gk); }
};

Workspace load(const Options& opt, std::ostream& err) {
  Workspace ws;
  if (!opt.project.empty()) {
    io::Project p = io::read_project_file(opt.project);
    for (const auto& w : p.warnings) err << "warning: " << w << "\n";
    ws.generators = std::move(p.generators);
    ws.coordination = std::move(p.coordination);
  }
  for (const auto& path : opt.generator_files) {
    io::NamedGenerator ng = io::read_generator_file(path);
    for (const auto& w : ng.warnings) err << "warning: " << w << "\n";
    if (ws.generators.count(ng.name)) throw UsageError("duplicate generator name '" + ng.name + "'");
    ws.generators.emplace(ng.name, std::move(ng.generator));
  }
  if (ws.generators.empty()) throw UsageError("no generators given (use -p or -g)");
  return ws;
}

Coordination resolve(const Workspace& ws, std::ostream& err) {
  if (!ws.coordination) throw UsageError("the project has no coordination block");
  const auto& c = *ws.coordination;
  const Generator& g1 = ws.get(c.g1);
  const Generator& g2 = ws.get(c.g2);
  const Generator& k = ws.get(c.spec);

  EventSet ek;
  if (c.gk != io::kAuto) {
    const Generator& gk = ws.get(c.gk);
    if (c.ek) {
      EventSet listed(c.ek->begin(), c.ek->end());
      if (listed != gk.alphabet().events())
        throw UsageError("'ek' " + to_string(listed) + " differs from the events of '" + c.gk + "'");
    }
    ek = gk.alphabet().events();
    return {g1, g2, gk, k, CoordinationScheme::for_plants(g1, g2, ek)};
  }
  if (c.ek) {
    ek = EventSet(c.ek->begin(), c.ek->end());
  } else {
    ek = suggest_coordinator_events(k, g1, g2).events();
    err << "note: suggested coordinator events " << to_string(ek) << "\n";
  }
  auto scheme = CoordinationScheme::for_plants(g1, g2, ek);
  return {g1, g2, default_coordinator(g1, g2, ek), k, std::move(scheme)};
}

json word_json(const std::optional<Word>& w) {
  if (!w) return nullptr;
  return json(*w);
}

class Reporter {
 public:
  Reporter(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  void check(const std::string& name, const PropertyReport& r) {
    if (opt_.json) {
      out_ << json{{"check", name}, {"holds", r.holds}, {"counterexample", word_json(r.counterexample)},
                   {"detail", r.detail}}
                  .dump()
           << "\n";
    } else {
      out_ << name << ": " << r.describe() << "\n";
    }
    ok_ = ok_ && r.holds;
  }

  void oracle(const std::string& name, bool agrees) {
    if (opt_.json) {
      out_ << json{{"oracle", name}, {"bound", opt_.oracle_bound}, {"agrees", agrees}}.dump() << "\n";
    } else {
      out_ << name << ": oracle(n=" << opt_.oracle_bound << ") " << (agrees ? "agrees" : "DISAGREES") << "\n";
    }
    ok_ = ok_ && agrees;
  }

  void generator(const std::string& name, const Generator& g, const std::string& path) {
    if (opt_.json) {
      out_ << json{{"output", name}, {"states", g.num_states()}, {"transitions", g.num_transitions()},
                   {"empty", g.recognizes_empty_language()}, {"file", path}}
                  .dump()
           << "\n";
    } else {
      out_ << name << ": " << g.num_states() << " states, " << g.num_transitions() << " transitions";
      if (g.recognizes_empty_language()) out_ << " (empty language)";
      out_ << " -> " << path << "\n";
    }
  }

  void flag(const std::string& name, bool value) {
    if (opt_.json) {
      out_ << json{{name, value}}.dump() << "\n";
    } else {
      out_ << name << ": " << (value ? "yes" : "no") << "\n";
    }
  }

  bool ok() const { return ok_; }

 private:
  const Options& opt_;
  std::ostream& out_;
  bool ok_ = true;
};

std::string write_output(const fs::path& path, const Generator& g, const std::string& name, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << io::write_generator(g, name);
    return "-";
  }
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  io::save_generator(path, g, name);
  return path.string();
}

// A shortest counterexample of length <= n must be seen by the bounded oracle, and no other.
bool oracle_controllable(const Generator& k, const Generator& l, const PropertyReport& r, std::size_t n) {
  const auto kb = oracle::bounded_language(k, n).words;
  const auto lb = oracle::bounded_language(l, n).words;
  const bool expected = r.holds || r.counterexample->size() > n;
  return oracle::brute_controllable(kb, lb, l.alphabet().uncontrollable()) == expected;
}

int cmd_check(const std::vector<std::string>& which, const Options& opt, std::ostream& out, std::ostream& err) {
  const Workspace ws = load(opt, err);
  const Coordination c = resolve(ws, err);
  Reporter rep(opt, out);
  std::vector<PropertyReport> pre;
  auto preconditions = [&]() -> const std::vector<PropertyReport>& {
    if (pre.empty()) pre = supcc_preconditions(c.k, c.g1, c.g2, c.scheme);
    return pre;
  };

  for (const auto& w : which) {
    if (w == "controllability") {
      const Generator plant = c.plant();
      const auto r = is_controllable(c.k, plant);
      rep.check(w, r);
      if (opt.oracle_bound) rep.oracle(w, oracle_controllable(c.k, plant, r, opt.oracle_bound));
    } else if (w == "conddec") {
      rep.check(w, conditionally_decomposable(c.k, c.scheme));
    } else if (w == "condindep") {
      rep.check(w, conditionally_independent(c.g1, c.g2, c.gk));
    } else if (w == "condctrl") {
      try {
        const auto r = is_conditionally_controllable(c.k, c.g1, c.g2, c.gk, c.scheme);
        rep.check("condctrl(i)", r.condition_i);
        rep.check("condctrl(ii.a)", r.condition_iia);
        rep.check("condctrl(ii.b)", r.condition_iib);
      } catch (const PreconditionError& e) {
        rep.check("condctrl", e.report());
      }
    } else if (w == "observer") {
      rep.check("observer(1+k)", preconditions()[1]);
      rep.check("observer(2+k)", preconditions()[3]);
    } else if (w == "occ") {
      rep.check("occ(1+k)", preconditions()[2]);
      rep.check("occ(2+k)", preconditions()[4]);
    } else if (w == "optimality") {
      rep.check(w, check_optimality_conditions(c.g1, c.g2, c.gk, c.scheme));
    }
  }
  return rep.ok() ? kOk : kCheckFailed;
}

int cmd_synth(const std::string& mode, const fs::path& dir, const Options& opt, std::ostream& out,
              std::ostream& err) {
  const Workspace ws = load(opt, err);
  const Coordination c = resolve(ws, err);
  Reporter rep(opt, out);
  fs::create_directories(dir);
  auto emit = [&](const std::string& name, const Generator& g) {
    rep.generator(name, g, write_output(dir / (name + ".json"), g, name, out));
  };

  if (mode == "supc") {
    const Generator plant = c.plant();
    const Generator s = sup_c(c.k, plant);
    emit("supc", s);
    if (opt.oracle_bound) {
      const std::size_t n = opt.oracle_bound;
      const std::size_t m = n >= 2 ? n - 2 : 0;
      const auto brute = oracle::brute_sup_c(oracle::bounded_language(c.k, n).words,
                                             oracle::bounded_language(plant, n).words,
                                             plant.alphabet().uncontrollable(), n);
      rep.oracle("supc", oracle::truncate(brute, m) == oracle::bounded_language(s, m).words);
    }
  } else if (mode == "supcc") {
    const SynthesisResult r = sup_cc(c.k, c.g1, c.g2, c.gk, c.scheme, SupccOptions{opt.force});
    for (const auto& p : r.preconditions)
      if (!p.holds) err << "warning: hypothesis failed: " << p.describe() << "\n";
    emit("sup_k", r.sup_k);
    emit("sup_1k", r.sup_1k);
    emit("sup_2k", r.sup_2k);
    emit("composed", r.composed);
    rep.flag("certified", r.certified);
  } else {
    const Supervisors s = synthesize_supervisors(c.k, c.g1, c.g2, c.gk, c.scheme);
    emit("S_k", s.k.realization);
    emit("S_1", s.one.realization);
    emit("S_2", s.two.realization);
  }
  return rep.ok() ? kOk : kCheckFailed;
}

int cmd_compose(const std::vector<std::string>& names, const std::string& output, const std::string& name,
                const Options& opt, std::ostream& out, std::ostream& err) {
  const Workspace ws = load(opt, err);
  Generator g = ws.get(names.front());
  for (std::size_t i = 1; i < names.size(); ++i) g = sync_product(g, ws.get(names[i]));
  std::string label = name;
  if (label.empty()) {
    for (std::size_t i = 0; i < names.size(); ++i) label += (i ? "||" : "") + names[i];
  }
  const std::string path = write_output(output, g, label, out);
  Reporter rep(opt, path == "-" ? err : out);
  if (path != "-") rep.generator(label, g, path);
  if (opt.oracle_bound && names.size() >= 2) {
    const std::size_t n = opt.oracle_bound;
    const Generator& first = ws.get(names[0]);
    oracle::WordSet acc = oracle::bounded_language(first, n).words;
    EventSet events = first.alphabet().events();
    for (std::size_t i = 1; i < names.size(); ++i) {
      const Generator& next = ws.get(names[i]);
      acc = oracle::brute_product(acc, events, oracle::bounded_language(next, n).words, next.alphabet().events(), n);
      events = set_union(events, next.alphabet().events());
    }
    rep.oracle("compose", acc == oracle::bounded_language(g, n).words);
  }
  return rep.ok() ? kOk : kCheckFailed;
}

int cmd_project(const std::string& source, const std::vector<std::string>& events, const std::string& output,
                const std::string& name, const Options& opt, std::ostream& out, std::ostream& err) {
  const Workspace ws = load(opt, err);
  const Generator& g = ws.get(source);
  const EventSet target(events.begin(), events.end());
  const Generator p = project(g, ProjectionSpec(g.alphabet(), target));
  const std::string label = name.empty() ? "P(" + source + ")" : name;
  const std::string path = write_output(output, p, label, out);
  Reporter rep(opt, path == "-" ? err : out);
  if (path != "-") rep.generator(label, p, path);
  if (opt.oracle_bound) {
    // Short projected words may come from long source words, so only one inclusion is exact.
    const std::size_t n = opt.oracle_bound;
    const auto image = oracle::brute_project(oracle::bounded_language(g, n).words, target);
    const auto projected = oracle::bounded_language(p, n).words;
    rep.oracle("project", std::includes(projected.begin(), projected.end(), image.begin(), image.end()));
  }
  return rep.ok() ? kOk : kCheckFailed;
}

int cmd_info(const std::string& name, std::size_t samples, const Options& opt, std::ostream& out,
             std::ostream& err) {
  const Workspace ws = load(opt, err);
  const Generator& g = ws.get(name);
  const EventSet er = reachable_events(g);
  const std::size_t minimal = minimize(g).num_states();
  const auto words = shortest_words(g, samples);
  if (opt.json) {
    json ev = json::array();
    for (const auto& [e, c] : g.alphabet()) ev.push_back({{"name", e}, {"controllable", c}});
    json ws_json = json::array();
    for (const auto& w : words) ws_json.push_back(w);
    out << json{{"name", name},
                {"events", ev},
                {"reachable_events", er},
                {"states", g.num_states()},
                {"transitions", g.num_transitions()},
                {"minimal_states", minimal},
                {"empty", g.recognizes_empty_language()},
                {"shortest_words", ws_json}}
               .dump()
        << "\n";
    return kOk;
  }
  out << "name: " << name << "\n";
  out << "controllable: " << to_string(g.alphabet().controllable()) << "\n";
  out << "uncontrollable: " << to_string(g.alphabet().uncontrollable()) << "\n";
  out << "E_r: " << to_string(er) << "\n";
  out << "states: " << g.num_states() << " (minimal " << minimal << ")\n";
  out << "transitions: " << g.num_transitions() << "\n";
  if (g.recognizes_empty_language()) {
    out << "language: empty\n";
    return kOk;
  }
  out << "shortest words:";
  for (const auto& w : words) out << " " << to_string(w);
  out << "\n";
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Supervisory control synthesis for modular discrete-event systems with a coordinator", "desc"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("-p,--project", opt.project, "Project file")->check(CLI::ExistingFile);
  app.add_option("-g,--generator", opt.generator_files, "Generator file (repeatable)")->check(CLI::ExistingFile);
  app.add_flag("--json", opt.json, "Machine-readable output, one JSON object per line");
  app.add_option("--oracle-bound", opt.oracle_bound, "Cross-check against bounded brute-force evaluation")
      ->check(CLI::Range(1, 16));
  app.add_flag("--force", opt.force, "Run supcc even when its hypotheses fail (result is uncertified)");

  std::vector<std::string> which;
  auto* check = app.add_subcommand("check", "Check properties of the project's coordination setup");
  check->add_option("which", which, "controllability|conddec|condindep|condctrl|observer|occ|optimality")
      ->required()
      ->check(CLI::IsMember({"controllability", "conddec", "condindep", "condctrl", "observer", "occ", "optimality"}));

  std::string mode;
  std::string out_dir;
  auto* synth = app.add_subcommand("synth", "Synthesize and write result generators");
  synth->add_option("mode", mode, "supc|supcc|supervisors")
      ->required()
      ->check(CLI::IsMember({"supc", "supcc", "supervisors"}));
  synth->add_option("-o,--output", out_dir, "Output directory")->required();

  std::vector<std::string> names;
  std::string output;
  std::string out_name;
  auto* compose = app.add_subcommand("compose", "Synchronous product of named generators");
  compose->add_option("names", names, "Generator names")->required();
  compose->add_option("-o,--output", output, "Output file (default: stdout)");
  compose->add_option("--name", out_name, "Name of the result");

  std::string source;
  std::vector<std::string> events;
  auto* proj = app.add_subcommand("project", "Natural projection of a named generator");
  proj->add_option("generator", source, "Generator name")->required();
  proj->add_option("events", events, "Events kept by the projection");
  proj->add_option("-o,--output", output, "Output file (default: stdout)");
  proj->add_option("--name", out_name, "Name of the result");

  std::size_t samples = 10;
  auto* info = app.add_subcommand("info", "Summary of a named generator");
  info->add_option("generator", source, "Generator name")->required();
  info->add_option("--words", samples, "Number of shortest words to list");

  for (auto* sub : {check, synth, compose, proj, info}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(which, opt, out, err);
    if (*synth) return cmd_synth(mode, out_dir, opt, out, err);
    if (*compose) return cmd_compose(names, output, out_name, opt, out, err);
    if (*proj) return cmd_project(source, events, output, out_name, opt, out, err);
    return cmd_info(source, samples, opt, out, err);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n  " << e.report().describe() << "\n";
    return kCheckFailed;
  } catch (const io::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace desc::cli
