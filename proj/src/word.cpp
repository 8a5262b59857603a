#include "desc/word.hpp"

#include <algorithm>

#include "desc/report.hpp"

namespace desc {

std::string to_string(const Word& word) {
  if (word.empty()) return "eps";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += '.';
    out += word[i];
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word word;
  if (text.empty() || text == "eps") return word;
  std::size_t start = 0;
  while (true) {
    auto dot = text.find('.', start);
    word.emplace_back(text.substr(start, dot - start));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return word;
}

bool shortlex_less(const Word& lhs, const Word& rhs) {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  return lhs < rhs;
}

std::string to_string(const EventSet& events) {
  std::string out = "{";
  bool first = true;
  for (const auto& e : events) {
    if (!first) out += ", ";
    out += e;
    first = false;
  }
  return out + "}";
}

EventSet set_union(const EventSet& a, const EventSet& b) {
  EventSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

EventSet set_intersection(const EventSet& a, const EventSet& b) {
  EventSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

EventSet set_difference(const EventSet& a, const EventSet& b) {
  EventSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

bool is_subset(const EventSet& a, const EventSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string PropertyReport::describe() const {
  if (holds) return detail.empty() ? "holds" : "holds (" + detail + ")";
  std::string out = "fails";
  if (counterexample) out += " at " + to_string(*counterexample);
  if (!detail.empty()) out += " (" + detail + ")";
  return out;
}

}  // namespace desc
