#include "desc/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace desc::io {
namespace {

using nlohmann::json;

std::string read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(std::string_view text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    if (auto pos = msg.find("parse error"); pos != std::string::npos) msg = msg.substr(pos);
    throw ParseError(origin, msg, line, column);
  }
}

const json& field(const json& obj, const char* key, const std::string& origin) {
  if (!obj.is_object()) throw ParseError(origin, "expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(origin, std::string("missing field '") + key + "'");
  return *it;
}

std::string as_string(const json& v, const std::string& origin, const std::string& what) {
  if (!v.is_string()) throw ParseError(origin, what + " must be a string");
  return v.get<std::string>();
}

using AlphabetTable = std::map<std::string, json>;

NamedGenerator parse_generator(const json& doc, const std::string& origin, const AlphabetTable& alphabets = {}) {
  NamedGenerator out{as_string(field(doc, "name", origin), origin, "'name'"), Generator::empty_generator({}), {}};

  Alphabet alphabet;
  const json* events = &field(doc, "events", origin);
  if (events->is_string()) {
    auto it = alphabets.find(events->get<std::string>());
    if (it == alphabets.end()) throw ParseError(origin, "unresolved alphabet name '" + events->get<std::string>() + "'");
    events = &it->second;
  }
  if (!events->is_array()) throw ParseError(origin, "'events' must be a list or an alphabet name");
  for (const auto& ev : *events) {
    const std::string name = as_string(field(ev, "name", origin), origin, "event name");
    const json& ctrl = field(ev, "controllable", origin);
    if (!ctrl.is_boolean()) throw ParseError(origin, "'controllable' of event '" + name + "' must be a boolean");
    if (alphabet.contains(name)) throw ParseError(origin, "duplicate event '" + name + "'");
    alphabet.add(name, ctrl.get<bool>());
  }

  if (doc.contains("empty_language") && doc["empty_language"].is_boolean() && doc["empty_language"].get<bool>()) {
    out.generator = Generator::empty_generator(std::move(alphabet));
    return out;
  }

  std::vector<std::string> states;
  const json& st = field(doc, "states", origin);
  if (!st.is_array()) throw ParseError(origin, "'states' must be a list");
  for (const auto& s : st) states.push_back(as_string(s, origin, "state name"));

  std::vector<Transition> transitions;
  const json& tr = field(doc, "transitions", origin);
  if (!tr.is_array()) throw ParseError(origin, "'transitions' must be a list");
  for (const auto& t : tr) {
    if (!t.is_array() || t.size() != 3) throw ParseError(origin, "each transition must be [source, event, target]");
    transitions.push_back({as_string(t[0], origin, "transition source"), as_string(t[1], origin, "transition event"),
                           as_string(t[2], origin, "transition target")});
  }

  std::vector<std::string> marked;
  if (auto it = doc.find("marked"); it != doc.end()) {
    if (!it->is_array()) throw ParseError(origin, "'marked' must be a list");
    for (const auto& m : *it) marked.push_back(as_string(m, origin, "marked state"));
    out.warnings.push_back(origin + ": 'marked' is ignored; every reachable state is marked");
  }

  const std::string initial = as_string(field(doc, "initial", origin), origin, "'initial'");
  try {
    out.generator = Generator::make(states, alphabet, transitions, initial, marked);
  } catch (const Error& e) {
    throw ParseError(origin, e.what());
  }
  return out;
}

}  // namespace

ParseError::ParseError(const std::string& origin, const std::string& message, std::size_t line, std::size_t column)
    : Error(origin + (line ? ":" + std::to_string(line) + ":" + std::to_string(column) : std::string()) + ": " +
            message),
      line_(line),
      column_(column) {}

NamedGenerator read_generator_text(std::string_view text, const std::string& origin) {
  return parse_generator(parse_json(text, origin), origin);
}

NamedGenerator read_generator_file(const std::filesystem::path& path) {
  return read_generator_text(read_all(path), path.string());
}

std::string write_generator(const Generator& g, const std::string& name) {
  auto quote = [](const std::string& s) { return json(s).dump(); };
  std::ostringstream out;
  out << "{\n  \"name\": " << quote(name) << ",\n  \"events\": [";
  bool first = true;
  for (const auto& [e, c] : g.alphabet()) {
    out << (first ? "\n" : ",\n") << "    {\"name\": " << quote(e) << ", \"controllable\": " << (c ? "true" : "false")
        << "}";
    first = false;
  }
  out << (first ? "]" : "\n  ]");
  if (g.recognizes_empty_language()) {
    out << ",\n  \"empty_language\": true,\n  \"states\": [\"0\"],\n  \"initial\": \"0\",\n  \"transitions\": []\n}\n";
    return out.str();
  }
  const Generator t = trim_accessible(g);
  out << ",\n  \"states\": [";
  for (StateId q = 0; q < t.num_states(); ++q) out << (q ? ", " : "") << quote(std::to_string(q));
  out << "],\n  \"initial\": \"0\",\n  \"transitions\": [";
  first = true;
  for (StateId q = 0; q < t.num_states(); ++q) {
    for (const auto& [e, dst] : t.out(q)) {
      out << (first ? "\n" : ",\n") << "    [" << quote(std::to_string(q)) << ", " << quote(e) << ", "
          << quote(std::to_string(dst)) << "]";
      first = false;
    }
  }
  out << (first ? "]" : "\n  ]") << "\n}\n";
  return out.str();
}

void save_generator(const std::filesystem::path& path, const Generator& g, const std::string& name) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << write_generator(g, name);
  if (!out) throw Error("write failed for " + path.string());
}

Project read_project_text(std::string_view text, const std::filesystem::path& base, const std::string& origin) {
  const json doc = parse_json(text, origin);
  Project project;
  AlphabetTable alphabets;
  if (auto it = doc.find("alphabets"); doc.is_object() && it != doc.end()) {
    if (!it->is_object()) throw ParseError(origin, "'alphabets' must map names to event lists");
    for (const auto& [name, events] : it->items()) alphabets.emplace(name, events);
  }
  const json& gens = field(doc, "generators", origin);
  if (!gens.is_array() || gens.empty()) throw ParseError(origin, "'generators' must be a nonempty list");
  for (const auto& entry : gens) {
    NamedGenerator ng = entry.is_string() ? read_generator_file(base / entry.get<std::string>())
                                          : parse_generator(entry, origin, alphabets);
    if (project.generators.count(ng.name)) throw ParseError(origin, "duplicate generator name '" + ng.name + "'");
    project.warnings.insert(project.warnings.end(), ng.warnings.begin(), ng.warnings.end());
    project.generators.emplace(ng.name, std::move(ng.generator));
  }
  Alphabet all;
  for (const auto& [name, g] : project.generators) {
    try {
      all = merge(all, g.alphabet());
    } catch (const ControllabilityConflict& e) {
      throw ParseError(origin, "generator '" + name + "': " + e.what());
    }
  }

  if (auto it = doc.find("coordination"); it != doc.end()) {
    const json& c = *it;
    CoordinationBlock block;
    block.g1 = as_string(field(c, "g1", origin), origin, "'g1'");
    block.g2 = as_string(field(c, "g2", origin), origin, "'g2'");
    block.spec = as_string(field(c, "spec", origin), origin, "'spec'");
    if (c.contains("gk")) block.gk = as_string(c["gk"], origin, "'gk'");
    if (c.contains("ek")) {
      const json& ek = c["ek"];
      if (ek.is_string()) {
        if (ek.get<std::string>() != kAuto) throw ParseError(origin, "'ek' must be a list of events or \"auto\"");
      } else if (ek.is_array()) {
        std::vector<std::string> events;
        for (const auto& e : ek) events.push_back(as_string(e, origin, "coordinator event"));
        block.ek = std::move(events);
      } else {
        throw ParseError(origin, "'ek' must be a list of events or \"auto\"");
      }
    }
    for (const auto* name : {&block.g1, &block.g2, &block.spec})
      if (!project.generators.count(*name)) throw ParseError(origin, "unresolved generator name '" + *name + "'");
    if (block.gk != kAuto && !project.generators.count(block.gk))
      throw ParseError(origin, "unresolved generator name '" + block.gk + "'");
    project.coordination = std::move(block);
  }
  return project;
}

Project read_project_file(const std::filesystem::path& path) {
  return read_project_text(read_all(path), path.parent_path(), path.string());
}

}  // namespace desc::io
