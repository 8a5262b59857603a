#include "desc/control.hpp"

#include <map>

#include "desc/errors.hpp"
#include "desc/language_ops.hpp"

namespace desc {
namespace {

using Pair = std::pair<StateId, StateId>;

void check_event_set(const Generator& g, const EventSet& eu) {
  for (const auto& e : eu)
    if (!g.alphabet().contains(e)) throw ReferenceError("uncontrollable event '" + e + "' is not in the alphabet");
}

/// Reachable part of the product of two automata over the same alphabet, with
/// parent links for witness reconstruction.
struct PairGraph {
  std::vector<Pair> states;
  std::vector<std::size_t> parent;
  std::vector<const Event*> via;
  std::vector<std::map<Event, StateId>> edges;

  Word word_to(std::size_t idx) const {
    Word w;
    while (idx != 0) {
      w.push_back(*via[idx]);
      idx = parent[idx];
    }
    return Word(w.rbegin(), w.rend());
  }
};

PairGraph explore(const Generator& a, const Generator& b) {
  PairGraph graph;
  std::map<Pair, StateId> index;
  graph.states.push_back({a.initial(), b.initial()});
  graph.parent.push_back(0);
  graph.via.push_back(nullptr);
  graph.edges.emplace_back();
  index.emplace(graph.states[0], 0);
  for (std::size_t head = 0; head < graph.states.size(); ++head) {
    auto [p, q] = graph.states[head];
    for (const auto& [e, np] : a.out(p)) {
      auto nq = b.next(q, e);
      if (!nq) continue;
      auto [it, inserted] = index.emplace(Pair{np, *nq}, static_cast<StateId>(graph.states.size()));
      if (inserted) {
        graph.states.push_back(it->first);
        graph.parent.push_back(head);
        graph.via.push_back(&e);
        graph.edges.emplace_back();
      }
      graph.edges[head].emplace(e, it->second);
    }
  }
  return graph;
}

}  // namespace

PropertyReport is_controllable(const Generator& k, const Generator& l, const EventSet& eu) {
  if (!k.alphabet().same_events(l.alphabet()))
    throw AlphabetMismatch("is_controllable: K and L have different event sets");
  check_event_set(l, eu);
  if (k.recognizes_empty_language() || l.recognizes_empty_language()) return PropertyReport::pass();

  // Breadth-first discovery order is shortlex order of access words, so the first
  // violation found is the least witness.
  PairGraph graph = explore(k, l);
  for (std::size_t i = 0; i < graph.states.size(); ++i) {
    auto [p, q] = graph.states[i];
    for (const auto& e : eu) {
      if (l.next(q, e) && !k.next(p, e)) {
        Word w = graph.word_to(i);
        w.push_back(e);
        return PropertyReport::fail(std::move(w), "uncontrollable event '" + e + "' leaves the specification");
      }
    }
  }
  return PropertyReport::pass();
}

PropertyReport is_controllable(const Generator& k, const Generator& l) {
  return is_controllable(k, l, l.alphabet().uncontrollable());
}

Generator sup_c(const Generator& k, const Generator& l, const EventSet& eu) {
  if (!k.alphabet().same_events(l.alphabet())) throw AlphabetMismatch("sup_c: K and L have different event sets");
  check_event_set(l, eu);
  if (k.recognizes_empty_language() || l.recognizes_empty_language()) return Generator::empty_generator(k.alphabet());

  PairGraph graph = explore(k, l);
  const std::size_t n = graph.states.size();

  // Bad pairs: L enables an uncontrollable event K does not, or an uncontrollable
  // edge leads to a bad pair. Backward closure over uncontrollable edges.
  std::vector<std::vector<StateId>> uncontrollable_preds(n);
  std::vector<bool> bad(n, false);
  std::vector<StateId> work;
  for (StateId i = 0; i < n; ++i) {
    auto [p, q] = graph.states[i];
    for (const auto& e : eu) {
      if (!l.next(q, e)) continue;
      auto it = graph.edges[i].find(e);
      if (it == graph.edges[i].end()) {
        if (!bad[i]) {
          bad[i] = true;
          work.push_back(i);
        }
      } else {
        uncontrollable_preds[it->second].push_back(i);
      }
    }
  }
  while (!work.empty()) {
    StateId s = work.back();
    work.pop_back();
    for (StateId pred : uncontrollable_preds[s]) {
      if (!bad[pred]) {
        bad[pred] = true;
        work.push_back(pred);
      }
    }
  }
  if (bad[0]) return Generator::empty_generator(k.alphabet());

  std::vector<Generator::Row> table(n);
  std::vector<std::string> labels(n);
  for (StateId i = 0; i < n; ++i) {
    labels[i] = "(" + k.label(graph.states[i].first) + "," + l.label(graph.states[i].second) + ")";
    if (bad[i]) continue;
    for (const auto& [e, dst] : graph.edges[i])
      if (!bad[dst]) table[i].emplace(e, dst);
  }
  return Generator::from_table(k.alphabet(), std::move(table), 0, std::move(labels));
}

Generator sup_c(const Generator& k, const Generator& l) { return sup_c(k, l, l.alphabet().uncontrollable()); }

PropertyReport is_admissible(const Supervisor& s, const Generator& g, const EventSet& eu) {
  check_event_set(g, eu);
  const Generator& r = s.realization;
  merge(r.alphabet(), g.alphabet());  // throws on a status conflict
  if (r.recognizes_empty_language() || g.recognizes_empty_language()) return PropertyReport::pass();

  Generator loop = sync_product(r, g);
  // Pair labels are not parsed; walk the loop alongside both components instead.
  std::vector<std::pair<StateId, StateId>> comp(loop.num_states());
  std::vector<bool> seen(loop.num_states(), false);
  std::vector<std::size_t> parent(loop.num_states(), 0);
  std::vector<const Event*> via(loop.num_states(), nullptr);
  std::vector<StateId> order{loop.initial()};
  comp[0] = {r.initial(), g.initial()};
  seen[0] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    StateId x = order[head];
    for (const auto& [e, dst] : loop.out(x)) {
      if (seen[dst]) continue;
      seen[dst] = true;
      auto [p, q] = comp[x];
      comp[dst] = {r.alphabet().contains(e) ? *r.next(p, e) : p, g.alphabet().contains(e) ? *g.next(q, e) : q};
      parent[dst] = x;
      via[dst] = &e;
      order.push_back(dst);
    }
  }
  for (StateId x : order) {
    auto [p, q] = comp[x];
    for (const auto& e : eu) {
      if (!g.next(q, e) || !r.alphabet().contains(e) || r.next(p, e)) continue;
      Word w;
      for (StateId y = x; y != loop.initial(); y = static_cast<StateId>(parent[y])) w.push_back(*via[y]);
      w = Word(w.rbegin(), w.rend());
      w.push_back(e);
      return PropertyReport::fail(std::move(w), "supervisor disables uncontrollable event '" + e + "'");
    }
  }
  return PropertyReport::pass();
}

PropertyReport is_admissible(const Supervisor& s, const Generator& g) {
  return is_admissible(s, g, g.alphabet().uncontrollable());
}

Generator closed_loop(const Supervisor& s, const Generator& g) {
  auto report = is_admissible(s, g);
  if (!report) throw PreconditionError("closed_loop: supervisor is not admissible", report);
  return sync_product(s.realization, g);
}

}  // namespace desc
