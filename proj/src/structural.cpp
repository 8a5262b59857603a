#include "desc/structural.hpp"

#include <map>

#include "desc/errors.hpp"

namespace desc {
namespace {

void require_source(const Generator& g, const ProjectionSpec& spec, const char* op) {
  if (!(spec.source() == g.alphabet()))
    throw AlphabetMismatch(std::string(op) + ": projection source differs from the generator's alphabet");
}

Word unwind(const std::vector<std::size_t>& parent, const std::vector<const Event*>& via, std::size_t idx) {
  Word w;
  while (idx != 0) {
    w.push_back(*via[idx]);
    idx = parent[idx];
  }
  return Word(w.rbegin(), w.rend());
}

}  // namespace

PropertyReport is_observer(const Generator& g, const ProjectionSpec& spec) {
  require_source(g, spec, "is_observer");
  if (g.recognizes_empty_language() || spec.is_identity()) return PropertyReport::pass();

  const EventSet& target = spec.target();
  const std::size_t n = g.num_states();

  // Observable events enabled somewhere in the unobservable reach of each state.
  std::vector<EventSet> next_observable(n);
  for (StateId q = 0; q < n; ++q) {
    std::vector<bool> in(n, false);
    std::vector<StateId> stack{q};
    in[q] = true;
    while (!stack.empty()) {
      StateId s = stack.back();
      stack.pop_back();
      for (const auto& [e, dst] : g.out(s)) {
        if (target.count(e)) {
          next_observable[q].insert(e);
        } else if (!in[dst]) {
          in[dst] = true;
          stack.push_back(dst);
        }
      }
    }
  }

  const Generator observed = project(g, spec);
  using Pair = std::pair<StateId, StateId>;
  std::map<Pair, std::size_t> index;
  std::vector<Pair> pairs{{g.initial(), observed.initial()}};
  std::vector<std::size_t> parent{0};
  std::vector<const Event*> via{nullptr};
  index.emplace(pairs[0], 0);

  for (std::size_t head = 0; head < pairs.size(); ++head) {
    auto [q, x] = pairs[head];
    for (const auto& [e, dst] : observed.out(x)) {
      if (!next_observable[q].count(e)) {
        Word w = unwind(parent, via, head);
        w.push_back(e);
        return PropertyReport::fail(std::move(w), "projected continuation '" + e + "' cannot be realized");
      }
    }
    for (const auto& [e, q2] : g.out(q)) {
      Pair nxt{q2, target.count(e) ? *observed.next(x, e) : x};
      if (index.emplace(nxt, pairs.size()).second) {
        pairs.push_back(nxt);
        parent.push_back(head);
        via.push_back(&e);
      }
    }
  }
  return PropertyReport::pass();
}

PropertyReport is_occ(const Generator& g, const ProjectionSpec& spec, const EventSet& eu) {
  require_source(g, spec, "is_occ");
  if (g.recognizes_empty_language()) return PropertyReport::pass();

  const EventSet& target = spec.target();
  // Node (q, tainted): tainted means the hidden segment since the last target
  // event (or the start) contains a controllable event.
  const std::size_t n = g.num_states();
  auto node = [n](StateId q, bool tainted) { return static_cast<std::size_t>(q) + (tainted ? n : 0); };
  std::vector<bool> seen(2 * n, false);
  std::vector<std::size_t> order{node(g.initial(), false)};
  std::vector<std::size_t> parent{0};
  std::vector<const Event*> via{nullptr};
  seen[order[0]] = true;

  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::size_t id = order[head];
    const bool tainted = id >= n;
    const StateId q = static_cast<StateId>(tainted ? id - n : id);
    for (const auto& [e, dst] : g.out(q)) {
      const bool observable = target.count(e) != 0;
      const bool uncontrollable = eu.count(e) != 0;
      if (observable && tainted && uncontrollable) {
        Word w = unwind(parent, via, head);
        w.push_back(e);
        return PropertyReport::fail(std::move(w), "uncontrollable '" + e + "' reached through a controllable hidden event");
      }
      const std::size_t nxt = node(dst, observable ? false : (tainted || !uncontrollable));
      if (!seen[nxt]) {
        seen[nxt] = true;
        order.push_back(nxt);
        parent.push_back(head);
        via.push_back(&e);
      }
    }
  }
  return PropertyReport::pass();
}

PropertyReport is_occ(const Generator& g, const ProjectionSpec& spec) {
  return is_occ(g, spec, g.alphabet().uncontrollable());
}

}  // namespace desc
