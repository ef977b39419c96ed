#include "stefan/cli/run.hpp"

#include <atomic>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "stefan/cli/report.hpp"
#include "stefan/closed_form.hpp"
#include "stefan/error.hpp"
#include "stefan/format.hpp"
#include "stefan/pde_verifier.hpp"
#include "stefan/reconstruct.hpp"
#include "stefan/solve.hpp"

namespace stefan::cli {

namespace fs = std::filesystem;

namespace {

const char* command_name(Command c) {
  switch (c) {
    case Command::Solve: return "solve";
    case Command::Certify: return "certify";
    case Command::Oracle: return "oracle";
    case Command::Sweep: return "sweep";
    case Command::VerifyPde: return "verify-pde";
  }
  return "unknown";
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw StefanError(ErrorKind::InvalidInput, "output", "cannot write `" + path.string() + "`");
  out << text;
}

void write_json(const fs::path& path, const ordered_json& j) { write_text(path, j.dump(2) + "\n"); }

template <class Fn>
void write_csv(const fs::path& path, Fn&& body) {
  std::ofstream out(path);
  if (!out) throw StefanError(ErrorKind::InvalidInput, "output", "cannot write `" + path.string() + "`");
  body(out);
}

int exit_for(const StefanError& e) {
  return e.kind() == ErrorKind::InvalidInput ? kExitInvalidConfig : kExitNonConvergence;
}

struct Context {
  const RunConfig& config;
  const RunOptions& options;
  fs::path dir;
  std::ostream& out;
  std::ostream& err;

  void say(const std::string& line) const {
    if (!options.quiet) out << line << '\n';
  }
};

OuterSettings settings_of(const RunConfig& c, const RunOptions& o) {
  OuterSettings s = c.outer_settings();
  if (o.grid) s.grid = *o.grid;
  return s;
}

int do_solve(const Context& ctx) {
  const auto& cfg = ctx.config;
  const ThermalModel model = cfg.model();
  const DimensionlessProblem prob = build_dimensionless(model, cfg.bc, cfg.build_options());
  const OuterSettings settings = settings_of(cfg, ctx.options);
  const ExistenceReport existence = certify(prob, settings);

  SolveReport rep;
  try {
    rep = solve_lambda(prob, settings);
  } catch (const StefanError& e) {
    if (e.kind() == ErrorKind::InvalidInput) throw;
    ordered_json j = {{"bc", to_string(prob.kind)},
                      {"status", "failed"},
                      {"error", e.what()},
                      {"dimensionless", to_json(prob)},
                      {"existence", to_json(existence)}};
    write_json(ctx.dir / "report.json", j);
    ctx.err << "error: " << e.what() << '\n';
    if (!existence.certified) {
      ctx.err << "note: existence hypotheses do not hold (" << existence.status << ")\n";
      return kExitHypothesisFailure;
    }
    return kExitNonConvergence;
  }

  PhysicalSolution sol(rep.lambda, model.alpha0(), cfg.bc, rep.profile);
  ordered_json j = to_json(rep);
  j["stefan_condition_residual"] = stefan_condition_residual(sol, model);
  j["dimensionless"] = to_json(prob);
  write_json(ctx.dir / "report.json", j);
  if (cfg.outputs.profile_csv)
    write_csv(ctx.dir / "profile.csv", [&](std::ostream& o) { write_profile_csv(o, rep.profile); });
  if (cfg.outputs.field_csv)
    write_csv(ctx.dir / "field.csv",
              [&](std::ostream& o) { write_field_csv(o, sol, cfg.outputs.times, cfg.outputs.field_points); });
  if (cfg.outputs.front_csv)
    write_csv(ctx.dir / "front.csv", [&](std::ostream& o) { write_front_csv(o, sol, cfg.outputs.times); });

  std::ostringstream line;
  line << std::setprecision(12) << "lambda = " << rep.lambda << "  (existence: " << rep.existence.status << ")";
  ctx.say(line.str());
  return kExitOk;
}

int do_certify(const Context& ctx) {
  const auto& cfg = ctx.config;
  const DimensionlessProblem prob = build_dimensionless(cfg.model(), cfg.bc, cfg.build_options());
  const ExistenceReport rep = certify(prob, settings_of(cfg, ctx.options));
  write_json(ctx.dir / "certificate.json", to_json(rep));
  ctx.say(std::string("existence: ") + rep.status);
  for (const auto& [name, state] : rep.flags)
    if (state != FlagState::NotApplicable) ctx.say("  " + name + ": " + to_string(state));
  return kExitOk;
}

int do_oracle(const Context& ctx) {
  const auto& cfg = ctx.config;
  if (cfg.coefficients.family != "constant")
    throw StefanError(ErrorKind::InvalidInput, "oracle", "closed forms exist only for the constant family");
  const ThermalModel model = cfg.model();
  const DimensionlessProblem prob = build_dimensionless(model, cfg.bc, cfg.build_options());
  const double Pe = cfg.coefficients.peclet;
  const double lambda_max = cfg.numerics.lambda_max;
  ClosedFormSolution sol;
  switch (prob.kind) {
    case BcKind::Dirichlet:
      sol = dirichlet_constant(prob.stefan, Pe, lambda_max);
      break;
    case BcKind::Neumann: {
      const double q = std::get<Neumann>(cfg.bc.face).q;
      const double load = q / (model.rho0 * model.ell * std::sqrt(model.alpha0()));
      sol = neumann_constant(load, Pe, prob.q_star, lambda_max);
      break;
    }
    default:
      throw StefanError(ErrorKind::InvalidInput, "oracle",
                        std::string("no closed form for boundary condition `") + to_string(prob.kind) + "`");
  }
  write_json(ctx.dir / "oracle.json", to_json(sol));
  const std::size_t n = settings_of(cfg, ctx.options).grid;
  write_csv(ctx.dir / "oracle_profile.csv", [&](std::ostream& o) {
    o << "xi,f\n";
    for (std::size_t i = 0; i <= n; ++i) {
      const double xi = i == n ? sol.lambda : sol.lambda * static_cast<double>(i) / static_cast<double>(n);
      o << shortest(xi) << ',' << shortest(sol.profile(xi)) << '\n';
    }
  });
  std::ostringstream line;
  line << std::setprecision(12) << "oracle lambda = " << sol.lambda << (sol.unique ? "" : "  (not unique)");
  ctx.say(line.str());
  return kExitOk;
}

int do_sweep(const Context& ctx) {
  const auto& cfg = ctx.config;
  if (!cfg.sweep) throw StefanError(ErrorKind::InvalidInput, "sweep", "configuration has no `sweep` block");
  const auto& params = cfg.sweep->parameters;

  // Expand the Cartesian product and validate every tuple before solving.
  std::vector<std::vector<double>> tuples{{}};
  for (const auto& [name, values] : params) {
    std::vector<std::vector<double>> next;
    for (const auto& t : tuples)
      for (double v : values) {
        auto e = t;
        e.push_back(v);
        next.push_back(std::move(e));
      }
    tuples = std::move(next);
  }
  std::vector<RunConfig> configs;
  for (const auto& t : tuples) {
    nlohmann::json doc = cfg.source;
    doc.erase("sweep");
    for (std::size_t i = 0; i < params.size(); ++i) doc = with_parameter(doc, params[i].first, t[i]);
    configs.push_back(parse_config(doc, cfg.base_dir));
  }

  std::vector<std::string> names;
  for (const auto& p : params) names.push_back(p.first);
  std::ofstream csv(ctx.dir / "sweep.csv");
  if (!csv) throw StefanError(ErrorKind::InvalidInput, "output", "cannot write sweep.csv");
  csv << sweep_header(names) << std::flush;

  std::mutex write_lock;
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> failures{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < configs.size(); i = next++) {
      SweepRow row;
      row.index = i;
      row.values = tuples[i];
      try {
        const auto& c = configs[i];
        const auto prob = build_dimensionless(c.model(), c.bc, c.build_options());
        row.report = solve_lambda(prob, settings_of(c, ctx.options));
        row.ok = true;
      } catch (const std::exception& e) {
        row.error = e.what();
        ++failures;
      }
      const std::string line = sweep_line(row);
      std::lock_guard lock(write_lock);
      csv << line << std::flush;
    }
  };
  const unsigned n_workers = std::max(1u, std::min<unsigned>(ctx.options.workers, configs.size()));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  ctx.say("sweep: " + std::to_string(configs.size()) + " tuples, " + std::to_string(failures.load()) + " failed");
  return failures ? kExitNonConvergence : kExitOk;
}

int do_verify(const Context& ctx) {
  const auto& cfg = ctx.config;
  const ThermalModel model = cfg.model();
  const DimensionlessProblem prob = build_dimensionless(model, cfg.bc, cfg.build_options());
  const SolveReport rep = solve_lambda(prob, settings_of(cfg, ctx.options));
  PhysicalSolution sol(rep.lambda, model.alpha0(), cfg.bc, rep.profile);
  const PdeDiscrepancy d = verify(sol, model, cfg.bc, cfg.verify);
  ordered_json j = {{"bc", to_string(prob.kind)},
                    {"lambda", rep.lambda},
                    {"t0", cfg.verify.t0},
                    {"t1", cfg.verify.t1},
                    {"safety", cfg.verify.safety},
                    {"discrepancy", to_json(d)}};
  write_json(ctx.dir / "verify.json", j);
  std::ostringstream line;
  line << std::setprecision(6) << "front discrepancy at t1: " << d.s_rel_final << " (relative)";
  ctx.say(line.str());
  return kExitOk;
}

}  // namespace

int run(const RunConfig& config, Command command, const RunOptions& options, std::ostream& out,
        std::ostream& err) {
  if (options.grid && *options.grid < 16) {
    err << "error: config: --grid must be at least 16\n";
    return kExitInvalidConfig;
  }
  const fs::path dir = options.out_dir.value_or(config.outputs.dir);
  const std::string started = utc_now();
  int code = kExitOk;
  try {
    fs::create_directories(dir);
    Context ctx{config, options, dir, out, err};
    switch (command) {
      case Command::Solve: code = do_solve(ctx); break;
      case Command::Certify: code = do_certify(ctx); break;
      case Command::Oracle: code = do_oracle(ctx); break;
      case Command::Sweep: code = do_sweep(ctx); break;
      case Command::VerifyPde: code = do_verify(ctx); break;
    }
  } catch (const StefanError& e) {
    err << "error: " << e.what() << '\n';
    code = exit_for(e);
  } catch (const fs::filesystem_error& e) {
    err << "error: output: " << e.what() << '\n';
    return kExitInvalidConfig;
  }

  ordered_json meta = {{"command", command_name(command)},
                       {"started_utc", started},
                       {"finished_utc", utc_now()},
                       {"exit_code", code},
                       {"workers", options.workers}};
  try {
    write_json(dir / "run_meta.json", meta);
  } catch (const StefanError& e) {
    err << "warning: " << e.what() << '\n';
  }
  return code;
}

int main(int argc, char** argv) {
  CLI::App app{"Similarity solutions of one-phase Stefan problems with temperature-dependent coefficients"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  unsigned workers = 1;
  std::size_t grid = 0;
  bool quiet = false;

  const std::vector<std::pair<const char*, Command>> commands = {
      {"solve", Command::Solve},   {"certify", Command::Certify},      {"oracle", Command::Oracle},
      {"sweep", Command::Sweep},   {"verify-pde", Command::VerifyPde},
  };
  const std::map<std::string, const char*> help = {
      {"solve", "solve for lambda and the profile; write report, profile, field and front files"},
      {"certify", "evaluate the existence hypotheses without solving"},
      {"oracle", "closed-form constant-coefficient solution (Dirichlet or Neumann)"},
      {"sweep", "solve every tuple of the sweep grid, streaming rows to sweep.csv"},
      {"verify-pde", "cross-check the similarity solution with a front-fixed finite-difference run"},
  };
  for (const auto& [name, cmd] : commands) {
    auto* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("--config", config_path, "JSON run configuration")->required();
    sub->add_option("--out", out_dir, "output directory (overrides outputs.dir)");
    sub->add_option("--workers", workers, "concurrent sweep workers")->check(CLI::PositiveNumber);
    sub->add_option("--grid", grid, "profile grid intervals (overrides numerics.grid)");
    sub->add_flag("--quiet", quiet, "suppress the summary on stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidConfig;
  }

  Command command = Command::Solve;
  for (const auto& [name, cmd] : commands)
    if (app.got_subcommand(name)) command = cmd;

  RunConfig config;
  try {
    config = load_config(config_path);
  } catch (const StefanError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  }
  RunOptions options;
  if (!out_dir.empty()) options.out_dir = out_dir;
  options.workers = workers;
  if (grid) options.grid = grid;
  options.quiet = quiet;
  return run(config, command, options, std::cout, std::cerr);
}

}  // namespace stefan::cli
