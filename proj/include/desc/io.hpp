#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "desc/errors.hpp"
#include "desc/generator.hpp"

namespace desc::io {

/// Malformed input. Line and column are 1-based; 0 when the position is not known
/// (schema errors in otherwise well-formed JSON).
class ParseError : public Error {
 public:
  ParseError(const std::string& origin, const std::string& message, std::size_t line = 0, std::size_t column = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct NamedGenerator {
  std::string name;
  Generator generator;
  std::vector<std::string> warnings;
};

NamedGenerator read_generator_text(std::string_view text, const std::string& origin = "<input>");
NamedGenerator read_generator_file(const std::filesystem::path& path);

/// Canonical serialization: sorted events, states as canonical ids, transitions
/// sorted by source then event. Equal automata give byte-identical output.
std::string write_generator(const Generator& g, const std::string& name);
void save_generator(const std::filesystem::path& path, const Generator& g, const std::string& name);

inline constexpr std::string_view kAuto = "auto";

struct CoordinationBlock {
  std::string g1;
  std::string g2;
  std::string gk = std::string(kAuto);  // generator name or "auto"
  std::string spec;
  std::optional<std::vector<std::string>> ek;  // nullopt means "auto"
};

struct Project {
  std::map<std::string, Generator> generators;
  std::optional<CoordinationBlock> coordination;
  std::vector<std::string> warnings;
};

/// `base` resolves relative generator paths. Inline generators may name an entry
/// of the optional "alphabets" map instead of listing their events. Shared events
/// must have the same status in every generator.
Project read_project_text(std::string_view text, const std::filesystem::path& base, const std::string& origin = "<project>");
Project read_project_file(const std::filesystem::path& path);

}  // namespace desc::io
