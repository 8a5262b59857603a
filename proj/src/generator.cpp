#include "desc/generator.hpp"

#include <deque>
#include <unordered_map>

#include "desc/errors.hpp"

namespace desc {

Generator Generator::make(const std::vector<std::string>& states, const Alphabet& alphabet,
                          const std::vector<Transition>& transitions, const std::string& initial,
                          const std::vector<std::string>& marked) {
  if (states.empty()) throw ReferenceError("a generator needs at least one state");
  std::unordered_map<std::string, StateId> ids;
  for (const auto& name : states) {
    if (!ids.emplace(name, static_cast<StateId>(ids.size())).second)
      throw ReferenceError("duplicate state '" + name + "'");
  }
  auto resolve = [&](const std::string& name) {
    auto it = ids.find(name);
    if (it == ids.end()) throw ReferenceError("unknown state '" + name + "'");
    return it->second;
  };

  std::vector<Row> table(states.size());
  for (const auto& t : transitions) {
    StateId src = resolve(t.source);
    StateId dst = resolve(t.target);
    if (!alphabet.contains(t.event)) throw ReferenceError("unknown event '" + t.event + "'");
    auto [it, inserted] = table[src].emplace(t.event, dst);
    if (!inserted && it->second != dst) {
      throw DeterminismError("state '" + t.source + "' has two transitions on '" + t.event + "'");
    }
  }
  for (const auto& m : marked) resolve(m);
  return from_table(alphabet, std::move(table), resolve(initial), states, /*trim=*/false);
}

Generator Generator::from_table(Alphabet alphabet, std::vector<Row> table, StateId initial,
                                std::vector<std::string> labels, bool trim) {
  if (initial >= table.size()) throw ReferenceError("initial state out of range");
  if (!labels.empty() && labels.size() != table.size())
    throw ReferenceError("label count does not match state count");
  for (const auto& row : table) {
    for (const auto& [e, dst] : row) {
      if (!alphabet.contains(e)) throw ReferenceError("unknown event '" + e + "'");
      if (dst >= table.size()) throw ReferenceError("transition target out of range");
    }
  }

  constexpr StateId kUnset = static_cast<StateId>(-1);
  std::vector<StateId> renumber(table.size(), kUnset);
  std::vector<StateId> order;
  order.reserve(table.size());
  renumber[initial] = 0;
  order.push_back(initial);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& [e, dst] : table[order[head]]) {
      if (renumber[dst] == kUnset) {
        renumber[dst] = static_cast<StateId>(order.size());
        order.push_back(dst);
      }
    }
  }
  const std::size_t reachable = order.size();
  if (!trim) {
    for (StateId q = 0; q < table.size(); ++q) {
      if (renumber[q] == kUnset) {
        renumber[q] = static_cast<StateId>(order.size());
        order.push_back(q);
      }
    }
  }

  Generator g;
  g.alphabet_ = std::move(alphabet);
  g.reachable_ = reachable;
  g.table_.resize(order.size());
  g.labels_.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    Row& row = g.table_[i];
    for (const auto& [e, dst] : table[order[i]]) row.emplace_hint(row.end(), e, renumber[dst]);
    g.labels_[i] = labels.empty() ? std::to_string(i) : std::move(labels[order[i]]);
  }
  return g;
}

Generator Generator::empty_generator(Alphabet alphabet) {
  Generator g;
  g.alphabet_ = std::move(alphabet);
  g.table_.resize(1);
  g.labels_ = {"0"};
  g.reachable_ = 1;
  g.empty_ = true;
  return g;
}

Generator Generator::universal(Alphabet alphabet) {
  std::vector<Row> table(1);
  for (const auto& [e, c] : alphabet) table[0].emplace(e, 0);
  return from_table(std::move(alphabet), std::move(table), 0);
}

Generator Generator::closure(Alphabet alphabet, const std::vector<Word>& words) {
  std::vector<Row> table(1);
  for (const auto& w : words) {
    StateId q = 0;
    for (const auto& e : w) {
      if (!alphabet.contains(e)) throw ReferenceError("unknown event '" + e + "'");
      auto it = table[q].find(e);
      if (it == table[q].end()) {
        auto fresh = static_cast<StateId>(table.size());
        table[q].emplace(e, fresh);
        table.emplace_back();
        q = fresh;
      } else {
        q = it->second;
      }
    }
  }
  return from_table(std::move(alphabet), std::move(table), 0);
}

std::size_t Generator::num_transitions() const noexcept {
  std::size_t n = 0;
  for (const auto& row : table_) n += row.size();
  return n;
}

std::optional<StateId> Generator::next(StateId state, const Event& event) const {
  const auto& row = table_.at(state);
  auto it = row.find(event);
  if (it == row.end()) return std::nullopt;
  return it->second;
}

std::optional<StateId> Generator::run(const Word& word) const {
  if (empty_) return std::nullopt;
  StateId q = initial();
  for (const auto& e : word) {
    auto nxt = next(q, e);
    if (!nxt) return std::nullopt;
    q = *nxt;
  }
  return q;
}

std::vector<StateId> Generator::marked() const {
  std::vector<StateId> out;
  if (empty_) return out;
  for (StateId q = 0; q < reachable_; ++q) out.push_back(q);
  return out;
}

bool membership(const Generator& g, const Word& w) {
  for (const auto& e : w)
    if (!g.alphabet().contains(e)) throw ReferenceError("event '" + e + "' is not in the alphabet");
  return g.run(w).has_value();
}

Generator trim_accessible(const Generator& g) {
  if (g.recognizes_empty_language() || g.num_reachable() == g.num_states()) return g;
  std::vector<Generator::Row> table(g.num_reachable());
  std::vector<std::string> labels(g.num_reachable());
  for (StateId q = 0; q < g.num_reachable(); ++q) {
    table[q] = g.out(q);
    labels[q] = g.label(q);
  }
  return Generator::from_table(g.alphabet(), std::move(table), g.initial(), std::move(labels));
}

EventSet reachable_events(const Generator& g) {
  EventSet out;
  if (g.recognizes_empty_language()) return out;
  for (StateId q = 0; q < g.num_reachable(); ++q)
    for (const auto& [e, dst] : g.out(q)) out.insert(e);
  return out;
}

std::vector<Word> shortest_words(const Generator& g, std::size_t limit, std::size_t max_length) {
  std::vector<Word> out;
  if (g.recognizes_empty_language() || limit == 0) return out;
  std::deque<std::pair<Word, StateId>> queue{{Word{}, g.initial()}};
  while (!queue.empty() && out.size() < limit) {
    auto [w, q] = std::move(queue.front());
    queue.pop_front();
    if (w.size() < max_length) {
      for (const auto& [e, dst] : g.out(q)) {
        Word next = w;
        next.push_back(e);
        queue.emplace_back(std::move(next), dst);
      }
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace desc
