#include "desc/alphabet.hpp"

#include "desc/errors.hpp"

namespace desc {

Alphabet::Alphabet(const EventSet& controllable, const EventSet& uncontrollable) {
  for (const auto& e : controllable) add(e, true);
  for (const auto& e : uncontrollable) add(e, false);
}

Alphabet::Alphabet(std::initializer_list<std::pair<Event, bool>> flags) {
  for (const auto& [e, c] : flags) add(e, c);
}

void Alphabet::add(const Event& event, bool controllable) {
  if (event.empty()) throw ReferenceError("event names must be nonempty");
  auto [it, inserted] = flags_.emplace(event, controllable);
  if (!inserted && it->second != controllable) {
    throw ControllabilityConflict("event '" + event + "' is both controllable and uncontrollable");
  }
}

bool Alphabet::is_controllable(const Event& event) const {
  auto it = flags_.find(event);
  if (it == flags_.end()) throw ReferenceError("unknown event '" + event + "'");
  return it->second;
}

EventSet Alphabet::events() const {
  EventSet out;
  for (const auto& [e, c] : flags_) out.insert(out.end(), e);
  return out;
}

EventSet Alphabet::controllable() const {
  EventSet out;
  for (const auto& [e, c] : flags_)
    if (c) out.insert(out.end(), e);
  return out;
}

EventSet Alphabet::uncontrollable() const {
  EventSet out;
  for (const auto& [e, c] : flags_)
    if (!c) out.insert(out.end(), e);
  return out;
}

Alphabet Alphabet::restricted_to(const EventSet& events) const {
  Alphabet out;
  for (const auto& [e, c] : flags_)
    if (events.count(e)) out.flags_.emplace_hint(out.flags_.end(), e, c);
  return out;
}

bool Alphabet::same_events(const Alphabet& other) const {
  if (flags_.size() != other.flags_.size()) return false;
  auto it = other.flags_.begin();
  for (const auto& [e, c] : flags_) {
    if (e != it->first) return false;
    ++it;
  }
  return true;
}

Alphabet merge(const Alphabet& a, const Alphabet& b) {
  Alphabet out = a;
  for (const auto& [e, c] : b) out.add(e, c);
  return out;
}

}  // namespace desc
