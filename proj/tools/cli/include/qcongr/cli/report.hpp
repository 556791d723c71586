#pragma once

#include <string>

#include <json.hpp>

#include "qcongr/cli/options.hpp"
#include "qcongr/grid.hpp"

namespace qcongr::cli {

nlohmann::json run_to_json(const RunConfig& config);
nlohmann::json verdict_to_json(const Verdict& v);
nlohmann::json exponent_to_json(const Exponent& e);
nlohmann::json grid_to_json(const RunConfig& config, const suite::GridReport& report);
std::string grid_to_text(const RunConfig& config, const suite::GridReport& report);

}  // namespace qcongr::cli
