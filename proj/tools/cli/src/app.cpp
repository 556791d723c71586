#include "qcongr/cli/app.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include <CLI11.hpp>

#include "qcongr/catalog.hpp"
#include "qcongr/cli/disk_cache.hpp"
#include "qcongr/cli/options.hpp"
#include "qcongr/cli/report.hpp"
#include "qcongr/dsl/eval.hpp"
#include "qcongr/dsl/parser.hpp"
#include "qcongr/grid.hpp"
#include "qcongr/serialize.hpp"

namespace qcongr::cli {

using nlohmann::json;

namespace {

// Raised for anything the user can fix by changing the command line.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RawOptions {
  std::string n, r, only, skip, format = "text", cache, base = "n";
  std::vector<std::string> bindings;
};

void print_dsl_error(const dsl::DslError& e, const std::string& src, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  // Echo the offending line with a caret under the reported column.
  std::size_t line_start = 0;
  for (std::size_t line = 1; line < e.pos().line; ++line) {
    const auto nl = src.find('\n', line_start);
    if (nl == std::string::npos) break;
    line_start = nl + 1;
  }
  const auto line_end = src.find('\n', line_start);
  err << "  " << src.substr(line_start, line_end == std::string::npos ? std::string::npos : line_end - line_start)
      << "\n  " << std::string(e.pos().column - 1, ' ') << "^\n";
}

unsigned long positive_n(long v) {
  if (v < 1) throw UsageError("n must be positive");
  return static_cast<unsigned long>(v);
}

void finish_config(RunConfig& config, const RawOptions& raw) {
  try {
    if (!raw.n.empty()) config.n = parse_range(raw.n);
    if (!raw.r.empty()) config.r = parse_range(raw.r);
    for (const auto& b : raw.bindings) {
      auto [name, value] = parse_binding(b);
      config.bindings[name] = value;
    }
    if (config.command == "verify-paper") {
      if (raw.only.empty()) {
        for (const auto& info : suite::statement_catalog()) config.statements.push_back(info.kind);
      } else {
        config.statements = parse_statement_list(raw.only);
      }
      const auto skip = parse_statement_list(raw.skip);
      std::erase_if(config.statements,
                    [&](suite::StatementKind k) { return std::find(skip.begin(), skip.end(), k) != skip.end(); });
      if (config.statements.empty()) throw UsageError("no statements selected");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (config.n.lo < 1) throw UsageError("n range must start at 1 or above");
  if (config.jobs < 1) throw UsageError("--jobs must be at least 1");
  if (config.cap < 1) throw UsageError("--cap must be at least 1");
  config.format = raw.format == "json" ? Format::Json : Format::Text;
  config.base = raw.base;
  if (!raw.cache.empty()) {
    config.cache_dir = raw.cache;
  } else if (const char* env = std::getenv("QCONGR_CACHE"); env && *env) {
    config.cache_dir = env;
  }
}

void sync_cache(const RunConfig& config, unsigned long max_index, std::ostream& err) {
  if (!config.cache_dir) return;
  const DiskCacheStats s = sync_cyclotomic_cache(*config.cache_dir, max_index, QObjectCache::shared());
  if (s.rejected) err << "note: recomputed " << s.rejected << " invalid cache entr" << (s.rejected == 1 ? "y" : "ies") << '\n';
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  suite::GridOptions opts;
  opts.statements = config.statements;
  opts.n_lo = positive_n(config.n.lo);
  opts.n_hi = positive_n(config.n.hi);
  opts.r_lo = config.r.lo;
  opts.r_hi = config.r.hi;
  opts.jobs = config.jobs;
  sync_cache(config, 2 * opts.n_hi + 1, err);
  const suite::GridReport report = suite::run_grid(opts);
  if (config.format == Format::Json) {
    out << grid_to_json(config, report).dump(2) << '\n';
  } else {
    out << grid_to_text(config, report);
  }
  return report.has_gating_failure() ? kMathFailure : kOk;
}

dsl::Statement parse_target(const std::string& src, std::ostream& err) {
  try {
    return dsl::parse_statement(src);
  } catch (const dsl::DslError& e) {
    print_dsl_error(e, src, err);
    throw UsageError("could not parse the statement");
  }
}

void require_bound(const std::set<std::string>& free, const dsl::Binding& binding) {
  for (const auto& v : free) {
    if (!binding.count(v)) throw UsageError("unbound parameter '" + v + "' (bind it with -b " + v + "=INT)");
  }
}

int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const dsl::Statement st = parse_target(config.target, err);
  require_bound(dsl::free_variables(st), config.bindings);
  dsl::ElaboratedStatement e;
  try {
    e = dsl::elaborate(st, config.bindings);
  } catch (const dsl::DslError& ex) {
    print_dsl_error(ex, config.target, err);
    throw UsageError("could not evaluate the statement");
  }
  const Verdict v = congruent(e.lhs, e.rhs, e.modulus);
  if (config.format == Format::Json) {
    json j = {{"run", run_to_json(config)}, {"verdict", verdict_to_json(v)}};
    j["verdict"]["modulus"] = e.modulus.to_string();
    out << j.dump(2) << '\n';
  } else {
    out << to_string(v.status);
    if (v.witness) {
      out << "  factor=cyc(" << v.witness->factor << ") required=" << v.witness->required.to_string()
          << " found=" << v.witness->found.to_string();
    }
    out << "  " << v.detail << '\n';
  }
  return v.is_holds() ? kOk : kMathFailure;
}

struct ExploreRow {
  std::string label;
  std::optional<unsigned long> base;
  Exponent exponent;
  std::string note;
};

unsigned long eval_base(const dsl::Expr& base, const dsl::Binding& binding, const std::string& src, std::ostream& err) {
  try {
    const RatFunc v = dsl::eval(base, binding);
    if (!v.is_constant() || v.constant_value().get_den() != 1 || v.constant_value() < 1) {
      throw UsageError("--base must evaluate to a positive integer");
    }
    return v.constant_value().get_num().get_ui();
  } catch (const dsl::DslError& e) {
    print_dsl_error(e, src, err);
    throw UsageError("could not evaluate --base");
  }
}

int cmd_explore(const RunConfig& config, std::ostream& out, std::ostream& err) {
  dsl::Expr base;
  try {
    base = dsl::parse_expression(config.base);
  } catch (const dsl::DslError& e) {
    print_dsl_error(e, config.base, err);
    throw UsageError("could not parse --base");
  }
  const unsigned long n_lo = positive_n(config.n.lo);
  const unsigned long n_hi = positive_n(config.n.hi);
  sync_cache(config, 2 * n_hi + 1, err);

  std::vector<ExploreRow> rows;
  if (auto kind = suite::parse_statement_name(config.target)) {
    suite::GridOptions opts;
    opts.statements = {*kind};
    opts.n_lo = n_lo;
    opts.n_hi = n_hi;
    opts.r_lo = config.r.lo;
    opts.r_hi = config.r.hi;
    const auto aux = suite::statement_info(*kind).aux;
    for (const auto& id : suite::enumerate_cells(opts)) {
      dsl::Binding b = config.bindings;
      b["n"] = static_cast<long>(id.n);
      if (id.r) b["r"] = *id.r;
      if (id.aux) b[aux == suite::AuxParam::S ? "s" : "k"] = static_cast<long>(*id.aux);
      ExploreRow row{id.label(), std::nullopt, Exponent::finite(0), {}};
      try {
        const suite::StatementSides sides = suite::statement_sides(id);
        row.base = eval_base(base, b, config.base, err);
        row.exponent = max_exponent(sides.lhs, sides.rhs, *row.base, config.cap);
      } catch (const std::invalid_argument& e) {
        row.note = e.what();
      }
      rows.push_back(std::move(row));
    }
  } else {
    const dsl::Statement st = parse_target(config.target, err);
    const auto free = dsl::free_variables(st);
    const bool uses_r = free.count("r") > 0;
    for (unsigned long n = n_lo; n <= n_hi; ++n) {
      for (long r = config.r.lo; r <= (uses_r ? config.r.hi : config.r.lo); ++r) {
        dsl::Binding b = config.bindings;
        b["n"] = static_cast<long>(n);
        if (uses_r) b["r"] = r;
        require_bound(free, b);
        ExploreRow row{"n=" + std::to_string(n) + (uses_r ? ",r=" + std::to_string(r) : ""), std::nullopt,
                       Exponent::finite(0), {}};
        try {
          const RatFunc lhs = dsl::eval(st.lhs, b);
          const RatFunc rhs = dsl::eval(st.rhs, b);
          row.base = eval_base(base, b, config.base, err);
          row.exponent = max_exponent(lhs, rhs, *row.base, config.cap);
        } catch (const dsl::DslError& e) {
          print_dsl_error(e, config.target, err);
          throw UsageError("could not evaluate the statement");
        }
        rows.push_back(std::move(row));
      }
    }
  }

  if (config.format == Format::Json) {
    json arr = json::array();
    for (const auto& row : rows) {
      json j = {{"cell", row.label}};
      j["base"] = row.base ? json(*row.base) : json(nullptr);
      if (row.note.empty()) {
        j["exponent"] = exponent_to_json(row.exponent);
      } else {
        j["exponent"] = nullptr;
        j["note"] = row.note;
      }
      arr.push_back(std::move(j));
    }
    out << json{{"run", run_to_json(config)}, {"rows", arr}}.dump(2) << '\n';
  } else {
    for (const auto& row : rows) {
      out << row.label;
      if (!row.note.empty()) {
        out << "  skipped: " << row.note << '\n';
        continue;
      }
      out << "  base=cyc(" << *row.base << ")  max_exponent=" << row.exponent.to_string() << '\n';
    }
  }
  return kOk;
}

long show_arg(const std::vector<std::string>& obj, std::size_t i) {
  if (obj[i].find("..") == std::string::npos) {
    try {
      return parse_range(obj[i]).lo;
    } catch (const std::invalid_argument&) {
    }
  }
  throw UsageError("show " + obj[0] + ": '" + obj[i] + "' is not an integer");
}

int cmd_show(const RunConfig& config, std::ostream& out) {
  const auto& obj = config.object;
  if (obj.empty()) throw UsageError("show needs an object: cyclotomic N | qbin N K | qint N | lhs N R");
  const std::string& what = obj[0];
  std::size_t arity = (what == "qbin" || what == "lhs") ? 3 : 2;
  if (obj.size() != arity) throw UsageError("show " + what + ": expected " + std::to_string(arity - 1) + " argument(s)");
  std::string result;
  if (what == "cyclotomic") {
    result = to_coeff_list(cyclotomic(positive_n(show_arg(obj, 1))));
  } else if (what == "qint") {
    result = to_coeff_list(q_integer(positive_n(show_arg(obj, 1))));
  } else if (what == "qbin") {
    result = to_coeff_list(q_binomial(show_arg(obj, 1), show_arg(obj, 2)));
  } else if (what == "lhs") {
    result = to_coeff_list(suite::lhs_sum(positive_n(show_arg(obj, 1)), show_arg(obj, 2)));
  } else {
    throw UsageError("unknown object '" + what + "' (cyclotomic, qbin, qint, lhs)");
  }
  if (config.format == Format::Json) {
    out << json{{"run", run_to_json(config)}, {"result", result}}.dump(2) << '\n';
  } else {
    out << result << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of q-congruences between rational functions", "qcongr"};
  app.require_subcommand(1);

  RunConfig config;
  RawOptions raw;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", raw.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--cache", raw.cache, "Directory of cached cyclotomic polynomials (default $QCONGR_CACHE)");
  };
  auto add_ranges = [&](CLI::App* sub) {
    sub->add_option("--n", raw.n, "Range of n, written A..B");
    sub->add_option("--r", raw.r, "Range of r, written A..B");
  };

  auto* verify = app.add_subcommand("verify-paper", "Verify the statement catalog over a grid of n and r");
  add_ranges(verify);
  verify->add_option("--only", raw.only, "Comma-separated statements to run");
  verify->add_option("--skip", raw.skip, "Comma-separated statements to leave out");
  verify->add_option("--jobs", config.jobs, "Worker threads");
  verify->add_flag("--timing", config.timing, "Report wall-clock time per cell");
  add_format(verify);

  auto* check = app.add_subcommand("check", "Check a congruence written in the statement language");
  check->add_option("statement", config.target, "e.g. \"q^2 === 0 mod cyc(2)\"")->required();
  check->add_option("-b,--bind", raw.bindings, "Parameter binding NAME=INT (repeatable)");
  add_format(check);

  auto* explore = app.add_subcommand("explore", "Largest exponent e with the congruence holding mod cyc(base)^e");
  explore->add_option("target", config.target, "Catalog statement name or a statement in the language")->required();
  add_ranges(explore);
  explore->add_option("--cap", config.cap, "Largest exponent to test");
  explore->add_option("--base", raw.base, "Cyclotomic index as an expression in n, r, k, s");
  explore->add_option("-b,--bind", raw.bindings, "Parameter binding NAME=INT (repeatable)");
  add_format(explore);

  auto* show = app.add_subcommand("show", "Print a coefficient list: cyclotomic N | qbin N K | qint N | lhs N R");
  show->add_option("object", config.object, "Object and its integer arguments")->required()->allow_extra_args();
  add_format(show);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsageError;
  }

  try {
    config.command = app.get_subcommands().front()->get_name();
    finish_config(config, raw);
    if (config.command == "verify-paper") return cmd_verify(config, out, err);
    if (config.command == "check") return cmd_check(config, out, err);
    if (config.command == "explore") return cmd_explore(config, out, err);
    return cmd_show(config, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kUsageError;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace qcongr::cli
