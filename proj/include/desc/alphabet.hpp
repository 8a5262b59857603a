#pragma once

#include <initializer_list>
#include <map>
#include <utility>

#include "desc/word.hpp"

namespace desc {

/// A finite event set partitioned into controllable and uncontrollable events.
///
/// Control patterns are the supersets of the uncontrollable part; they are never
/// materialized, admissibility is checked instead (see control.hpp).
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(const EventSet& controllable, const EventSet& uncontrollable);
  Alphabet(std::initializer_list<std::pair<Event, bool>> flags);

  /// Adds an event. Re-adding with the same status is a no-op; a different status throws.
  void add(const Event& event, bool controllable);

  bool contains(const Event& event) const { return flags_.count(event) != 0; }
  bool is_controllable(const Event& event) const;
  bool is_uncontrollable(const Event& event) const { return !is_controllable(event); }

  EventSet events() const;
  EventSet controllable() const;
  EventSet uncontrollable() const;

  std::size_t size() const noexcept { return flags_.size(); }
  bool empty() const noexcept { return flags_.empty(); }

  /// Events of this alphabet that also belong to `events`, with their statuses.
  Alphabet restricted_to(const EventSet& events) const;

  const std::map<Event, bool>& flags() const noexcept { return flags_; }
  auto begin() const { return flags_.begin(); }
  auto end() const { return flags_.end(); }

  bool same_events(const Alphabet& other) const;
  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::map<Event, bool> flags_;  // true = controllable
};

/// Union of two alphabets; throws ControllabilityConflict on a shared event with differing status.
Alphabet merge(const Alphabet& a, const Alphabet& b);

}  // namespace desc
