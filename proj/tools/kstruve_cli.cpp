// kstruve: evaluate k-Struve, k-gamma and Fox-Wright functions, and verify the
// k-Struve integral identities numerically.
//
// Exit codes: 0 success, 1 usage, 2 domain, 3 convergence, 4 verification failed.

#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <kstruve/kstruve.hpp>

namespace {

using namespace kstruve;

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kConvergence = 3, kVerificationFailed = 4 };

constexpr const char* kConfigEnv = "KSTRUVE_CONFIG";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EvalArgs {
  std::string function;
  std::vector<double> positional;
  std::optional<double> x, z, k, nu, c;
  std::string upper, lower;
  double tol = 1e-12;
  std::size_t max_terms = 0;
  std::string format = "table";
};

struct VerifyArgs {
  std::string identity;
  std::optional<std::string> alpha, beta, mu, nu, c, k, y;
  std::optional<std::string> grid;
  std::optional<std::string> config;
  std::optional<double> tol, threshold, series_tol;
  std::optional<std::string> format, out;
  bool relaxed = false;
  unsigned threads = 0;
};

// "a:alpha,a:alpha" -> parameter pairs; an empty string is an empty list.
std::vector<WrightParam<double>> parse_pairs(const std::string& text) {
  std::vector<WrightParam<double>> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("Wright parameter '" + item + "' must be shift:scale");
    try {
      out.push_back({std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1))});
    } catch (const std::logic_error&) {
      throw UsageError("Wright parameter '" + item + "' is not numeric");
    }
  }
  return out;
}

double take(const std::optional<double>& named, std::vector<double>& positional, std::size_t index,
            const char* name) {
  if (named) return *named;
  if (index < positional.size()) return positional[index];
  throw UsageError(std::string("missing argument --") + name);
}

void print_value(const EvalArgs& a, double value, std::optional<EvaluationResult<double>> series) {
  if (a.format == "json") {
    std::cout << "{\"function\":" << nlohmann::json(a.function).dump() << ",\"value\":" << format_number(value);
    if (series)
      std::cout << ",\"error_bound\":" << format_number(series->error_bound)
                << ",\"terms_used\":" << series->terms_used;
    std::cout << "}\n";
    return;
  }
  std::cout << "value        " << format_number(value) << '\n';
  if (series) {
    std::cout << "error_bound  " << format_number(series->error_bound) << '\n';
    std::cout << "terms_used   " << series->terms_used << '\n';
  }
}

int run_eval(EvalArgs a) {
  if (a.format != "table" && a.format != "json") throw UsageError("eval supports --format table or json");
  SeriesOptions<double> opts;
  opts.tolerance = a.tol;
  if (a.max_terms) opts.max_terms = a.max_terms;
  auto& pos = a.positional;
  const auto arity = [&](std::size_t n) {
    if (pos.size() > n) throw UsageError("too many positional arguments for " + a.function);
  };
  if (a.function == "gamma") {
    arity(1);
    print_value(a, kstruve::gamma(take(a.x, pos, 0, "x")), std::nullopt);
  } else if (a.function == "kgamma") {
    arity(2);
    const double z = take(a.z, pos, 0, "z");
    print_value(a, k_gamma(z, take(a.k, pos, 1, "k")), std::nullopt);
  } else if (a.function == "struve_h" || a.function == "struve_l") {
    arity(2);
    const double nu = take(a.nu, pos, 0, "nu");
    const double x = take(a.x, pos, 1, "x");
    const auto r = a.function == "struve_h" ? struve_h(nu, x, opts) : struve_l(nu, x, opts);
    print_value(a, r.value, r);
  } else if (a.function == "kstruve") {
    arity(4);
    const StruveParams<double> p{take(a.nu, pos, 0, "nu"), take(a.c, pos, 1, "c"), take(a.k, pos, 2, "k")};
    const auto r = k_struve(p, take(a.x, pos, 3, "x"), opts);
    print_value(a, r.value, r);
  } else if (a.function == "wright") {
    arity(1);
    const WrightSpec<double> spec{parse_pairs(a.upper), parse_pairs(a.lower)};
    const auto r = wright_eval(spec, take(a.z, pos, 0, "z"), opts);
    print_value(a, r.value, r);
  } else {
    throw UsageError("unknown function '" + a.function + "'");
  }
  return kOk;
}

// A flag value may be a single number, a comma list or a start:stop:step range.
void set_axis(SectionConfig& s, const char* key, const std::optional<std::string>& value) {
  if (value) s.axes[key] = parse_axis(*value, key);
}

RunConfig config_from_flags(const VerifyArgs& a) {
  RunConfig cfg;
  SectionConfig s{a.identity, false, {}};
  if (a.grid) {
    if (*a.grid != "default") throw UsageError("--grid accepts only 'default'");
    s.default_grid = true;
  } else {
    set_axis(s, "alpha", a.alpha);
    if (a.identity == "lavoie") {
      set_axis(s, "beta", a.beta);
    } else {
      set_axis(s, "mu", a.mu);
      set_axis(s, "nu", a.nu);
      set_axis(s, "c", a.c);
      set_axis(s, "k", a.k);
      set_axis(s, "y", a.y);
    }
  }
  cfg.sections.push_back(std::move(s));
  return cfg;
}

void apply_overrides(RunConfig& cfg, const VerifyArgs& a) {
  if (a.tol) cfg.verify.tol = *a.tol;
  if (a.threshold) cfg.verify.threshold = *a.threshold;
  if (a.series_tol) cfg.verify.series_tol = *a.series_tol;
  if (a.relaxed) cfg.verify.strict = false;
  if (a.threads) cfg.verify.threads = a.threads;
  if (a.format) cfg.format = parse_format(*a.format);
  if (a.out) cfg.out = *a.out;
  if (!(cfg.verify.tol > 0) || !(cfg.verify.threshold > 0) || !(cfg.verify.series_tol > 0))
    throw UsageError("tolerances must be positive");
}

std::vector<IdentityReport> run_section(const SectionConfig& s, const RunConfig& cfg) {
  if (s.identity == "lavoie") {
    std::vector<IdentityReport> reports;
    for (const LavoieParams& p : expand_lavoie_grid(s, cfg.grid_cap)) {
      try {
        reports.push_back(lavoie_trottier_check(p.alpha, p.beta, cfg.verify.tol, cfg.verify.threshold));
      } catch (const std::exception& e) {
        reports.push_back(failed_report("lavoie", p, e.what()));
      }
    }
    return reports;
  }
  return verify_grid(*parse_identity(s.identity), expand_theorem_grid(s, cfg.grid_cap), cfg.verify);
}

int run_verify(const RunConfig& cfg) {
  std::vector<IdentityReport> reports;
  for (const auto& s : cfg.sections) {
    auto part = run_section(s, cfg);
    reports.insert(reports.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  if (cfg.out) {
    std::ofstream file(*cfg.out, std::ios::binary);
    if (!file) throw UsageError("cannot open output file '" + *cfg.out + "'");
    write_records(file, reports, cfg.format);
    std::cout << summary_line(reports) << '\n';
  } else {
    write_records(std::cout, reports, cfg.format);
    std::cerr << summary_line(reports) << '\n';
  }
  for (const auto& r : reports)
    if (!is_success(r.verdict)) return kVerificationFailed;
  return kOk;
}

void add_verify_flags(CLI::App* cmd, VerifyArgs& a) {
  cmd->add_option("--tol", a.tol, "Relative quadrature tolerance (default 1e-10)");
  cmd->add_option("--threshold", a.threshold, "Decision threshold on relative deviations (default 1e-6)");
  cmd->add_option("--series-tol", a.series_tol, "Relative tolerance of the Wright series (default 1e-12)");
  cmd->add_option("--format", a.format, "Output format: json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("--out", a.out, "Write records to this file instead of standard output");
  cmd->add_flag("--relaxed", a.relaxed, "Accept nu > -3k/2 instead of nu > 3k/2");
  cmd->add_option("--threads", a.threads, "Worker threads for grid points (0 = all cores)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-Struve special functions and integral identity verification"};
  app.require_subcommand(1);

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a function");
  eval_cmd->add_option("function", eval.function, "gamma, kgamma, struve_h, struve_l, kstruve or wright")
      ->required();
  eval_cmd->add_option("args", eval.positional, "Positional arguments in signature order");
  eval_cmd->add_option("--x", eval.x);
  eval_cmd->add_option("--z", eval.z);
  eval_cmd->add_option("--k", eval.k);
  eval_cmd->add_option("--nu", eval.nu);
  eval_cmd->add_option("--c", eval.c);
  eval_cmd->add_option("--upper", eval.upper, "Wright upper pairs, shift:scale,...");
  eval_cmd->add_option("--lower", eval.lower, "Wright lower pairs, shift:scale,...");
  eval_cmd->add_option("--tol", eval.tol, "Series tolerance (default 1e-12)");
  eval_cmd->add_option("--max-terms", eval.max_terms, "Series term limit");
  eval_cmd->add_option("--format", eval.format, "table or json");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Verify one identity at a point, a list or the default grid");
  verify_cmd->add_option("identity", verify.identity, "lavoie, theorem1, theorem2, corollary1 or corollary2")
      ->required()
      ->check(CLI::IsMember({"lavoie", "theorem1", "theorem2", "corollary1", "corollary2"}));
  for (auto [name, slot] : {std::pair{"--alpha", &verify.alpha}, {"--beta", &verify.beta}, {"--mu", &verify.mu},
                            {"--nu", &verify.nu}, {"--c", &verify.c}, {"--k", &verify.k}, {"--y", &verify.y}})
    verify_cmd->add_option(name, *slot, "Value, comma list or start:stop:step");
  verify_cmd->add_option("--grid", verify.grid, "Use the built-in grid ('default')");
  add_verify_flags(verify_cmd, verify);

  VerifyArgs grid;
  auto* grid_cmd = app.add_subcommand("grid", "Run the grids described by a config file");
  grid_cmd->add_option("--config", grid.config, std::string("Config path (default: $") + kConfigEnv + ")");
  add_verify_flags(grid_cmd, grid);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval_cmd) return run_eval(eval);
    if (*verify_cmd) {
      RunConfig cfg = config_from_flags(verify);
      apply_overrides(cfg, verify);
      return run_verify(cfg);
    }
    std::string path;
    if (grid.config) {
      path = *grid.config;
    } else if (const char* env = std::getenv(kConfigEnv)) {
      path = env;
    } else {
      throw UsageError(std::string("grid needs --config or $") + kConfigEnv);
    }
    RunConfig cfg = load_config(path);
    apply_overrides(cfg, grid);
    return run_verify(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << '\n';
    return kConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  }
}
