#include "qcongr/cli/report.hpp"

#include <cstdio>
#include <sstream>

namespace qcongr::cli {

using nlohmann::json;

namespace {

std::string format_name(Format f) { return f == Format::Json ? "json" : "text"; }

json statement_names(const std::vector<suite::StatementKind>& kinds) {
  json names = json::array();
  for (auto k : kinds) names.push_back(std::string(suite::statement_info(k).name));
  return names;
}

void add_witness(json& j, const std::optional<Witness>& w) {
  if (!w) return;
  j["factor"] = w->factor;
  j["required"] = exponent_to_json(w->required);
  j["found"] = exponent_to_json(w->found);
}

std::string millis_text(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f ms", ms);
  return buf;
}

}  // namespace

json exponent_to_json(const Exponent& e) {
  if (e.is_infinite()) return "inf";
  return e.value();
}

// Jobs are left out on purpose: reports must not depend on parallelism.
json run_to_json(const RunConfig& config) {
  json cfg;
  if (config.command == "verify-paper" || config.command == "explore") {
    cfg["n"] = config.n.to_string();
    cfg["r"] = config.r.to_string();
  }
  if (config.command == "verify-paper") cfg["statements"] = statement_names(config.statements);
  if (config.command == "explore") {
    cfg["cap"] = config.cap;
    cfg["base"] = config.base;
  }
  if (config.command == "check" || config.command == "explore") cfg["target"] = config.target;
  if (config.command == "show") cfg["object"] = config.object;
  if (!config.bindings.empty()) cfg["bindings"] = config.bindings;
  cfg["format"] = format_name(config.format);
  cfg["cache"] = config.cache_dir ? json(config.cache_dir->string()) : json(nullptr);
  return {{"command", config.command}, {"config", cfg}};
}

json verdict_to_json(const Verdict& v) {
  json j;
  j["status"] = std::string(to_string(v.status));
  add_witness(j, v.witness);
  j["detail"] = v.detail;
  return j;
}

json grid_to_json(const RunConfig& config, const suite::GridReport& report) {
  json cells = json::array();
  for (const auto& c : report.cells) {
    const auto& info = suite::statement_info(c.id.kind);
    json j;
    j["statement"] = std::string(info.name);
    j["n"] = c.id.n;
    j["r"] = c.id.r ? json(*c.id.r) : json(nullptr);
    if (c.id.aux) j[info.aux == suite::AuxParam::S ? "s" : "k"] = *c.id.aux;
    j["status"] = std::string(suite::to_string(c.status));
    add_witness(j, c.witness);
    if (c.exploratory) j["exploratory"] = true;
    j["detail"] = c.detail;
    if (config.timing) j["millis"] = c.millis;
    cells.push_back(std::move(j));
  }
  const auto s = report.summary();
  return {{"run", run_to_json(config)},
          {"cells", std::move(cells)},
          {"summary", {{"holds", s.holds}, {"fails", s.fails}, {"illformed", s.illformed}, {"skipped", s.skipped}}}};
}

std::string grid_to_text(const RunConfig& config, const suite::GridReport& report) {
  std::ostringstream out;
  for (const auto& c : report.cells) {
    std::string status(suite::to_string(c.status));
    status.resize(10, ' ');
    out << status << c.id.label();
    if (c.exploratory) out << " [exploratory]";
    if (c.witness) {
      out << "  factor=cyc(" << c.witness->factor << ") required=" << c.witness->required.to_string()
          << " found=" << c.witness->found.to_string();
    }
    if (c.status != suite::CellStatus::Holds) out << "  " << c.detail;
    if (config.timing) out << "  " << millis_text(c.millis);
    out << '\n';
  }
  const auto s = report.summary();
  out << "summary: holds=" << s.holds << " fails=" << s.fails << " illformed=" << s.illformed
      << " skipped=" << s.skipped << '\n';
  return out.str();
}

}  // namespace qcongr::cli
