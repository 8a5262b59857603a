#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace desc {

using Event = std::string;
using EventSet = std::set<Event>;

/// A finite sequence of events. The empty vector is the empty word.
using Word = std::vector<Event>;

/// Dotted rendering, e.g. "a1.a2.u"; the empty word renders as "eps".
std::string to_string(const Word& word);

/// Inverse of to_string. Accepts "" or "eps" for the empty word.
Word parse_word(std::string_view text);

/// Shortlex order: shorter words first, ties broken lexicographically.
bool shortlex_less(const Word& lhs, const Word& rhs);

std::string to_string(const EventSet& events);

EventSet set_union(const EventSet& a, const EventSet& b);
EventSet set_intersection(const EventSet& a, const EventSet& b);
EventSet set_difference(const EventSet& a, const EventSet& b);
bool is_subset(const EventSet& a, const EventSet& b);

}  // namespace desc
