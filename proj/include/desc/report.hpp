#pragma once

#include <optional>
#include <string>

#include "desc/word.hpp"

namespace desc {

/// Verdict of a language-level check. A negative verdict always carries a witness word.
struct PropertyReport {
  bool holds = true;
  std::optional<Word> counterexample;
  std::string detail;

  static PropertyReport pass(std::string detail = {}) { return {true, std::nullopt, std::move(detail)}; }
  static PropertyReport fail(Word witness, std::string detail) {
    return {false, std::move(witness), std::move(detail)};
  }

  explicit operator bool() const noexcept { return holds; }

  /// One-line human rendering: "holds" or "fails at <word> (<detail>)".
  std::string describe() const;
};

}  // namespace desc
