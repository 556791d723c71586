#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcongr/catalog.hpp"

namespace qcongr::cli {

enum class Format { Text, Json };

/// Inclusive integer range written "a..b"; a lone integer means a..a.
struct Range {
  long lo = 0;
  long hi = 0;
  std::string to_string() const;
};

/// Throws std::invalid_argument on malformed or empty ranges.
Range parse_range(std::string_view text);

/// "NAME=INT"
std::pair<std::string, long> parse_binding(std::string_view text);

/// Comma-separated catalog names; throws std::invalid_argument on unknown ones.
std::vector<suite::StatementKind> parse_statement_list(std::string_view text);

struct RunConfig {
  std::string command;
  Range n{2, 10};
  Range r{1, 3};
  std::vector<suite::StatementKind> statements;
  unsigned jobs = 1;
  Format format = Format::Text;
  std::optional<std::filesystem::path> cache_dir;
  long cap = 10;
  std::map<std::string, long> bindings;
  bool timing = false;
  std::string base = "n";
  std::string target;               // check/explore statement or catalog name
  std::vector<std::string> object;  // show arguments
};

}  // namespace qcongr::cli
