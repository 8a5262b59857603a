#pragma once

// Brute-force reference semantics over bounded word sets. Every function here
// evaluates a definition literally on explicit sets of words and shares no code
// with the automaton algorithms it is used to cross-check.

#include <optional>
#include <set>

#include "desc/generator.hpp"
#include "desc/word.hpp"

namespace desc::oracle {

using WordSet = std::set<Word>;

struct BoundedLanguage {
  WordSet words;
  std::size_t bound = 0;
};

/// {w ∈ L(G) : |w| ≤ n} by exhaustive walk of the transition graph.
BoundedLanguage bounded_language(const Generator& g, std::size_t n);

/// Words of `words` no longer than n.
WordSet truncate(const WordSet& words, std::size_t n);

/// Image of a word set under the projection erasing events outside `target`.
WordSet brute_project(const WordSet& words, const EventSet& target);

/// Words over e1 ∪ e2 of length ≤ n whose projections lie in ws1 and ws2.
WordSet brute_product(const WordSet& ws1, const EventSet& e1, const WordSet& ws2, const EventSet& e2, std::size_t n);

/// Words over `events` of length ≤ n whose projection onto `source` lies in ws.
/// Enumerates all of events^{≤n}.
WordSet brute_inverse_project(const WordSet& ws, const EventSet& source, const EventSet& events, std::size_t n);

/// Greatest fixpoint: starting from K ∩ L, delete every word w for which some
/// uncontrollable u has wu ∈ L but wu outside the current set, along with its
/// extensions. Words near the bound n may be kept wrongly (see the tests' guard).
WordSet brute_sup_c(const WordSet& k, const WordSet& l, const EventSet& eu, std::size_t n);

/// K̄E_u ∩ L ⊆ K̄ on explicit (prefix-closed) sets.
bool brute_controllable(const WordSet& k, const WordSet& l, const EventSet& eu);

/// KE_u* ∩ L ⊆ K on explicit sets.
bool brute_controllable_star(const WordSet& k, const WordSet& l, const EventSet& eu);

/// Observer definition evaluated on a complete finite language.
bool brute_observer(const WordSet& language, const EventSet& target);

/// First (shortlex) word of `language` that violates output control consistency.
std::optional<Word> brute_occ_violation(const WordSet& language, const EventSet& target, const EventSet& eu);

bool is_prefix_closed(const WordSet& words);

/// The same words ordered shortlex.
std::vector<Word> shortlex(const WordSet& words);

}  // namespace desc::oracle
