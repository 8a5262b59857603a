#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "desc/alphabet.hpp"
#include "desc/report.hpp"
#include "desc/word.hpp"

namespace desc {

using StateId = std::uint32_t;

/// A labelled transition as written by a user, referring to states by name.
struct Transition {
  std::string source;
  Event event;
  std::string target;
};

/// Deterministic finite-state generator with a partial transition function.
///
/// Languages are prefix-closed: every state reached from the initial state is
/// marked. States carry dense ids in canonical order (breadth-first from the
/// initial state, events in lexicographic order, unreachable states last), so two
/// runs of the same construction produce identical automata. The original state
/// names survive as display labels.
///
/// The empty language cannot be expressed by a state graph (the initial state is
/// always reached by the empty word) and is represented by a one-state generator
/// with the `recognizes_empty_language()` flag set.
class Generator {
 public:
  using Row = std::map<Event, StateId>;

  /// Validating constructor. `marked` is checked for references and then replaced
  /// by the reachable states.
  static Generator make(const std::vector<std::string>& states, const Alphabet& alphabet,
                        const std::vector<Transition>& transitions, const std::string& initial,
                        const std::vector<std::string>& marked = {});

  /// Builds from an id-indexed transition table. Targets and events are validated,
  /// states are renumbered canonically. With `trim`, unreachable states are dropped.
  /// Empty `labels` means "use the ids".
  static Generator from_table(Alphabet alphabet, std::vector<Row> table, StateId initial,
                              std::vector<std::string> labels = {}, bool trim = true);

  /// The generator of the empty language over `alphabet`.
  static Generator empty_generator(Alphabet alphabet);

  /// One state with a self-loop on every event: the language E*.
  static Generator universal(Alphabet alphabet);

  /// Generator of the prefix closure of a finite set of words.
  static Generator closure(Alphabet alphabet, const std::vector<Word>& words);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return table_.size(); }
  std::size_t num_transitions() const noexcept;
  StateId initial() const noexcept { return 0; }
  bool recognizes_empty_language() const noexcept { return empty_; }

  std::optional<StateId> next(StateId state, const Event& event) const;
  const Row& out(StateId state) const { return table_.at(state); }
  const std::string& label(StateId state) const { return labels_.at(state); }

  /// f(q0, w), or nothing when undefined (or the language is empty).
  std::optional<StateId> run(const Word& word) const;

  /// Reachable states (the marked set under the prefix-closed convention).
  std::vector<StateId> marked() const;

  /// Number of states reachable from the initial state.
  std::size_t num_reachable() const noexcept { return reachable_; }

 private:
  Generator() = default;

  Alphabet alphabet_;
  std::vector<Row> table_;
  std::vector<std::string> labels_;
  std::size_t reachable_ = 0;
  bool empty_ = false;
};

/// True iff f(q0, w) is defined. Throws ReferenceError on an event outside the alphabet.
bool membership(const Generator& g, const Word& w);

/// Removes states unreachable from the initial state; the language is unchanged.
Generator trim_accessible(const Generator& g);

/// Events labelling at least one transition between reachable states.
EventSet reachable_events(const Generator& g);

/// Words of L(g) in shortlex order, at most `limit` of them and none longer than `max_length`.
std::vector<Word> shortest_words(const Generator& g, std::size_t limit, std::size_t max_length = 64);

}  // namespace desc
