#include "qcongr/cli/options.hpp"

#include <charconv>
#include <stdexcept>

namespace qcongr::cli {

namespace {

long parse_long(std::string_view text, std::string_view what) {
  long v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

std::string Range::to_string() const { return std::to_string(lo) + ".." + std::to_string(hi); }

Range parse_range(std::string_view text) {
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string_view::npos) {
    r.lo = r.hi = parse_long(text, "range");
  } else {
    r.lo = parse_long(text.substr(0, dots), "range start");
    r.hi = parse_long(text.substr(dots + 2), "range end");
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range '" + std::string(text) + "'");
  return r;
}

std::pair<std::string, long> parse_binding(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw std::invalid_argument("binding must look like NAME=INT, got '" + std::string(text) + "'");
  }
  return {std::string(text.substr(0, eq)), parse_long(text.substr(eq + 1), "binding value")};
}

std::vector<suite::StatementKind> parse_statement_list(std::string_view text) {
  std::vector<suite::StatementKind> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto name = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (!name.empty()) {
      auto kind = suite::parse_statement_name(name);
      if (!kind) throw std::invalid_argument("unknown statement '" + std::string(name) + "'");
      out.push_back(*kind);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace qcongr::cli
