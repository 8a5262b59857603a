#include "desc/oracle.hpp"

#include <algorithm>
#include <functional>

namespace desc::oracle {
namespace {

Word erase_outside(const Word& w, const EventSet& keep) {
  Word out;
  for (const auto& e : w)
    if (keep.count(e)) out.push_back(e);
  return out;
}

bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

}  // namespace

BoundedLanguage bounded_language(const Generator& g, std::size_t n) {
  BoundedLanguage out{{}, n};
  if (g.recognizes_empty_language()) return out;
  Word w;
  std::function<void(StateId)> walk = [&](StateId q) {
    out.words.insert(w);
    if (w.size() == n) return;
    for (const auto& [e, dst] : g.out(q)) {
      w.push_back(e);
      walk(dst);
      w.pop_back();
    }
  };
  walk(g.initial());
  return out;
}

WordSet truncate(const WordSet& words, std::size_t n) {
  WordSet out;
  for (const auto& w : words)
    if (w.size() <= n) out.insert(w);
  return out;
}

WordSet brute_project(const WordSet& words, const EventSet& target) {
  WordSet out;
  for (const auto& w : words) out.insert(erase_outside(w, target));
  return out;
}

WordSet brute_product(const WordSet& ws1, const EventSet& e1, const WordSet& ws2, const EventSet& e2, std::size_t n) {
  EventSet all = e1;
  all.insert(e2.begin(), e2.end());
  // Both inverse images are prefix-closed, so growing members one event at a
  // time reaches every member.
  WordSet out;
  std::vector<Word> frontier;
  if (ws1.count(Word{}) && ws2.count(Word{})) {
    out.insert(Word{});
    frontier.push_back(Word{});
  }
  while (!frontier.empty()) {
    Word w = std::move(frontier.back());
    frontier.pop_back();
    if (w.size() == n) continue;
    for (const auto& e : all) {
      Word x = w;
      x.push_back(e);
      if (ws1.count(erase_outside(x, e1)) && ws2.count(erase_outside(x, e2)) && out.insert(x).second)
        frontier.push_back(std::move(x));
    }
  }
  return out;
}

WordSet brute_inverse_project(const WordSet& ws, const EventSet& source, const EventSet& events, std::size_t n) {
  WordSet out;
  Word w;
  std::function<void()> all_words = [&]() {
    if (ws.count(erase_outside(w, source))) out.insert(w);
    if (w.size() == n) return;
    for (const auto& e : events) {
      w.push_back(e);
      all_words();
      w.pop_back();
    }
  };
  all_words();
  return out;
}

WordSet brute_sup_c(const WordSet& k, const WordSet& l, const EventSet& eu, std::size_t n) {
  WordSet current;
  for (const auto& w : k)
    if (w.size() <= n && l.count(w)) current.insert(w);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Word> doomed;
    for (const auto& w : current) {
      for (const auto& u : eu) {
        Word x = w;
        x.push_back(u);
        if (l.count(x) && !current.count(x)) {
          doomed.push_back(w);
          break;
        }
      }
    }
    for (const auto& d : doomed) {
      for (auto it = current.begin(); it != current.end();) {
        if (is_prefix(d, *it)) {
          it = current.erase(it);
          changed = true;
        } else {
          ++it;
        }
      }
    }
  }
  return current;
}

bool brute_controllable(const WordSet& k, const WordSet& l, const EventSet& eu) {
  for (const auto& s : k) {
    for (const auto& u : eu) {
      Word x = s;
      x.push_back(u);
      if (l.count(x) && !k.count(x)) return false;
    }
  }
  return true;
}

bool brute_controllable_star(const WordSet& k, const WordSet& l, const EventSet& eu) {
  // w ∈ L of the form s·x with s ∈ K and x ∈ E_u* must belong to K.
  for (const auto& w : l) {
    if (k.count(w)) continue;
    for (std::size_t cut = w.size(); cut-- > 0;) {
      if (!eu.count(w[cut])) break;
      if (k.count(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut)))) return false;
    }
  }
  return true;
}

bool brute_observer(const WordSet& language, const EventSet& target) {
  const WordSet image = brute_project(language, target);
  for (const auto& s : language) {
    const Word ps = erase_outside(s, target);
    for (const auto& t : image) {
      if (!is_prefix(ps, t)) continue;
      bool found = false;
      for (const auto& w : language) {
        if (is_prefix(s, w) && erase_outside(w, target) == t) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

std::optional<Word> brute_occ_violation(const WordSet& language, const EventSet& target, const EventSet& eu) {
  for (const auto& s : shortlex(language)) {
    if (s.empty()) continue;
    const Event& last = s.back();
    if (!target.count(last) || !eu.count(last)) continue;
    // Interior: the maximal run of hidden events right before the last event,
    // delimited by a target event or the start of the word.
    for (std::size_t i = s.size() - 1; i-- > 0;) {
      if (target.count(s[i])) break;
      if (!eu.count(s[i])) return s;
    }
  }
  return std::nullopt;
}

bool is_prefix_closed(const WordSet& words) {
  for (const auto& w : words)
    for (std::size_t len = 0; len < w.size(); ++len)
      if (!words.count(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len)))) return false;
  return true;
}

std::vector<Word> shortlex(const WordSet& words) {
  std::vector<Word> out(words.begin(), words.end());
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

}  // namespace desc::oracle
