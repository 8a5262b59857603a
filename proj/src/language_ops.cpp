#include "desc/language_ops.hpp"

#include <deque>
#include <map>

#include "desc/errors.hpp"

namespace desc {
namespace {

constexpr StateId kDead = static_cast<StateId>(-1);

std::string pair_label(const Generator& g1, StateId p, const Generator& g2, StateId q) {
  auto part = [](const Generator& g, StateId s) { return s == kDead ? std::string("-") : g.label(s); };
  return "(" + part(g1, p) + "," + part(g2, q) + ")";
}

void require_same_events(const Generator& g1, const Generator& g2, const char* op) {
  if (!g1.alphabet().same_events(g2.alphabet())) {
    throw AlphabetMismatch(std::string(op) + ": operands have different event sets " +
                           to_string(g1.alphabet().events()) + " and " + to_string(g2.alphabet().events()));
  }
}

StateId start_of(const Generator& g) { return g.recognizes_empty_language() ? kDead : g.initial(); }

StateId step(const Generator& g, StateId s, const Event& e) {
  if (s == kDead) return kDead;
  auto n = g.next(s, e);
  return n ? *n : kDead;
}

/// Breadth-first walk over pairs of completed automata. `expand(p, q)` says
/// whether successors of a pair are explored, `violates(p, q)` flags a pair whose
/// access word is a witness. Returns the shortlex-least witness.
template <typename Expand, typename Violates>
std::optional<Word> first_violation(const Generator& g1, const Generator& g2, Expand expand, Violates violates) {
  using Pair = std::pair<StateId, StateId>;
  std::map<Pair, std::size_t> seen;
  std::vector<std::pair<Pair, std::size_t>> nodes;  // pair, parent index
  std::vector<const Event*> via;
  const Pair init{start_of(g1), start_of(g2)};
  seen.emplace(init, 0);
  nodes.push_back({init, 0});
  via.push_back(nullptr);

  auto word_of = [&](std::size_t idx) {
    Word w;
    while (idx != 0) {
      w.push_back(*via[idx]);
      idx = nodes[idx].second;
    }
    return Word(w.rbegin(), w.rend());
  };

  if (violates(init.first, init.second)) return Word{};
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    auto [p, q] = nodes[head].first;
    if (!expand(p, q)) continue;
    for (const auto& [e, c] : g1.alphabet()) {
      Pair nxt{step(g1, p, e), step(g2, q, e)};
      if (nxt.first == kDead && nxt.second == kDead) continue;
      if (!seen.emplace(nxt, nodes.size()).second) continue;
      nodes.push_back({nxt, head});
      via.push_back(&e);
      if (violates(nxt.first, nxt.second)) return word_of(nodes.size() - 1);
    }
  }
  return std::nullopt;
}

}  // namespace

ProjectionSpec::ProjectionSpec(Alphabet source, EventSet target) : source_(std::move(source)), target_(std::move(target)) {
  for (const auto& e : target_)
    if (!source_.contains(e)) throw ReferenceError("projection target event '" + e + "' is not in the source alphabet");
}

EventSet ProjectionSpec::hidden() const { return set_difference(source_.events(), target_); }

Generator sync_product(const Generator& g1, const Generator& g2) {
  Alphabet alphabet = merge(g1.alphabet(), g2.alphabet());
  if (g1.recognizes_empty_language() || g2.recognizes_empty_language())
    return Generator::empty_generator(std::move(alphabet));

  using Pair = std::pair<StateId, StateId>;
  std::map<Pair, StateId> index;
  std::vector<Pair> states;
  std::vector<Generator::Row> table;

  auto intern = [&](Pair p) {
    auto [it, inserted] = index.emplace(p, static_cast<StateId>(states.size()));
    if (inserted) {
      states.push_back(p);
      table.emplace_back();
    }
    return it->second;
  };
  intern({g1.initial(), g2.initial()});

  const Alphabet& a1 = g1.alphabet();
  const Alphabet& a2 = g2.alphabet();
  for (std::size_t head = 0; head < states.size(); ++head) {
    auto [p, q] = states[head];
    for (const auto& [e, c] : alphabet) {
      StateId np = p, nq = q;
      if (a1.contains(e)) {
        auto n = g1.next(p, e);
        if (!n) continue;
        np = *n;
      }
      if (a2.contains(e)) {
        auto n = g2.next(q, e);
        if (!n) continue;
        nq = *n;
      }
      StateId dst = intern({np, nq});
      table[head].emplace(e, dst);
    }
  }

  std::vector<std::string> labels;
  labels.reserve(states.size());
  for (auto [p, q] : states) labels.push_back(pair_label(g1, p, g2, q));
  return Generator::from_table(std::move(alphabet), std::move(table), 0, std::move(labels));
}

Generator sync_product(const Generator& g1, const Generator& g2, const Generator& g3) {
  return sync_product(sync_product(g1, g2), g3);
}

Generator project(const Generator& g, const ProjectionSpec& spec) {
  if (!(spec.source() == g.alphabet()))
    throw AlphabetMismatch("projection source alphabet differs from the generator's alphabet");
  Alphabet target = spec.target_alphabet();
  if (g.recognizes_empty_language()) return Generator::empty_generator(std::move(target));

  const EventSet hidden = spec.hidden();
  auto unobservable_closure = [&](std::vector<StateId> seed) {
    std::vector<bool> in(g.num_states(), false);
    std::vector<StateId> stack = seed;
    for (auto s : seed) in[s] = true;
    while (!stack.empty()) {
      StateId s = stack.back();
      stack.pop_back();
      for (const auto& [e, dst] : g.out(s)) {
        if (hidden.count(e) && !in[dst]) {
          in[dst] = true;
          stack.push_back(dst);
        }
      }
    }
    std::vector<StateId> out;
    for (StateId s = 0; s < in.size(); ++s)
      if (in[s]) out.push_back(s);
    return out;
  };

  std::map<std::vector<StateId>, StateId> index;
  std::vector<std::vector<StateId>> subsets;
  std::vector<Generator::Row> table;
  auto intern = [&](std::vector<StateId> set) {
    auto [it, inserted] = index.emplace(set, static_cast<StateId>(subsets.size()));
    if (inserted) {
      subsets.push_back(std::move(set));
      table.emplace_back();
    }
    return it->second;
  };
  intern(unobservable_closure({g.initial()}));

  for (std::size_t head = 0; head < subsets.size(); ++head) {
    for (const auto& e : spec.target()) {
      std::vector<StateId> moved;
      for (StateId s : subsets[head])
        if (auto n = g.next(s, e)) moved.push_back(*n);
      if (moved.empty()) continue;
      StateId dst = intern(unobservable_closure(std::move(moved)));
      table[head].emplace(e, dst);
    }
  }

  std::vector<std::string> labels;
  labels.reserve(subsets.size());
  for (const auto& set : subsets) {
    std::string l = "{";
    for (std::size_t i = 0; i < set.size(); ++i) l += (i ? "," : "") + g.label(set[i]);
    labels.push_back(l + "}");
  }
  return Generator::from_table(std::move(target), std::move(table), 0, std::move(labels));
}

Generator project_onto(const Generator& g, const EventSet& events) {
  return project(g, ProjectionSpec(g.alphabet(), set_intersection(g.alphabet().events(), events)));
}

Generator inverse_project(const Generator& g, const Alphabet& superset) {
  for (const auto& [e, c] : g.alphabet()) {
    if (!superset.contains(e)) throw ReferenceError("event '" + e + "' is missing from the superset alphabet");
    if (superset.is_controllable(e) != c)
      throw ControllabilityConflict("event '" + e + "' has a different controllability status in the superset");
  }
  if (g.recognizes_empty_language()) return Generator::empty_generator(superset);
  const EventSet fresh = set_difference(superset.events(), g.alphabet().events());
  std::vector<Generator::Row> table(g.num_reachable());
  std::vector<std::string> labels(g.num_reachable());
  for (StateId q = 0; q < g.num_reachable(); ++q) {
    table[q] = g.out(q);
    for (const auto& e : fresh) table[q].emplace(e, q);
    labels[q] = g.label(q);
  }
  return Generator::from_table(superset, std::move(table), g.initial(), std::move(labels));
}

PropertyReport language_equal(const Generator& g1, const Generator& g2) {
  require_same_events(g1, g2, "language_equal");
  auto witness = first_violation(
      g1, g2, [](StateId, StateId) { return true; },
      [](StateId p, StateId q) { return (p == kDead) != (q == kDead); });
  if (!witness) return PropertyReport::pass();
  const bool in_first = g1.run(*witness).has_value();
  return PropertyReport::fail(*witness, in_first ? "word in the first language only" : "word in the second language only");
}

PropertyReport language_subset(const Generator& g1, const Generator& g2) {
  require_same_events(g1, g2, "language_subset");
  auto witness = first_violation(
      g1, g2, [](StateId p, StateId) { return p != kDead; },
      [](StateId p, StateId q) { return p != kDead && q == kDead; });
  if (!witness) return PropertyReport::pass();
  return PropertyReport::fail(*witness, "word of the first language missing from the second");
}

Generator language_union(const Generator& g1, const Generator& g2) {
  require_same_events(g1, g2, "language_union");
  if (g1.recognizes_empty_language()) return g2;
  if (g2.recognizes_empty_language()) return g1;

  using Pair = std::pair<StateId, StateId>;
  std::map<Pair, StateId> index;
  std::vector<Pair> states;
  std::vector<Generator::Row> table;
  auto intern = [&](Pair p) {
    auto [it, inserted] = index.emplace(p, static_cast<StateId>(states.size()));
    if (inserted) {
      states.push_back(p);
      table.emplace_back();
    }
    return it->second;
  };
  intern({g1.initial(), g2.initial()});
  for (std::size_t head = 0; head < states.size(); ++head) {
    auto [p, q] = states[head];
    for (const auto& [e, c] : g1.alphabet()) {
      Pair nxt{step(g1, p, e), step(g2, q, e)};
      if (nxt.first == kDead && nxt.second == kDead) continue;
      StateId dst = intern(nxt);
      table[head].emplace(e, dst);
    }
  }
  std::vector<std::string> labels;
  for (auto [p, q] : states) labels.push_back(pair_label(g1, p, g2, q));
  return Generator::from_table(g1.alphabet(), std::move(table), 0, std::move(labels));
}

Generator minimize(const Generator& g) {
  Generator trimmed = trim_accessible(g);
  if (trimmed.recognizes_empty_language()) return trimmed;
  const std::size_t n = trimmed.num_states();
  const EventSet events = trimmed.alphabet().events();

  // Moore refinement; the implicit dump state is class -1.
  std::vector<long> cls(n, 0);
  std::size_t num_classes = 1;
  while (true) {
    std::map<std::pair<long, std::vector<long>>, long> signatures;
    std::vector<long> next(n);
    for (StateId q = 0; q < n; ++q) {
      std::vector<long> sig;
      sig.reserve(events.size());
      for (const auto& e : events) {
        auto d = trimmed.next(q, e);
        sig.push_back(d ? cls[*d] : -1);
      }
      auto key = std::make_pair(cls[q], std::move(sig));
      auto [it, inserted] = signatures.emplace(std::move(key), static_cast<long>(signatures.size()));
      next[q] = it->second;
    }
    cls = std::move(next);
    if (signatures.size() == num_classes) break;
    num_classes = signatures.size();
  }

  std::vector<Generator::Row> table(num_classes);
  for (StateId q = 0; q < n; ++q)
    for (const auto& [e, dst] : trimmed.out(q)) table[cls[q]][e] = static_cast<StateId>(cls[dst]);
  return Generator::from_table(trimmed.alphabet(), std::move(table), static_cast<StateId>(cls[trimmed.initial()]));
}

}  // namespace desc
