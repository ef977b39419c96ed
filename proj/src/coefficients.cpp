#include "stefan/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

#include "stefan/error.hpp"

namespace stefan {

namespace {

[[noreturn]] void invalid(const std::string& stage, const std::string& what) {
  throw StefanError(ErrorKind::InvalidInput, stage, what);
}

void require_positive(const std::string& stage, const char* name, double value) {
  if (!(value > 0) || !std::isfinite(value))
    invalid(stage, std::string(name) + " must be a positive finite number, got " +
                       std::to_string(value));
}

// Piecewise-linear in T, constant beyond the end nodes.
double interpolate(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
  if (x <= xs.front()) return ys.front();
  if (x >= xs.back()) return ys.back();
  auto hi = static_cast<std::size_t>(std::upper_bound(xs.begin(), xs.end(), x) - xs.begin());
  std::size_t lo = hi - 1;
  double w = (x - xs[lo]) / (xs[hi] - xs[lo]);
  return (1 - w) * ys[lo] + w * ys[hi];
}

std::pair<double, double> endpoint_range(double a, double b) {
  return {std::min(a, b), std::max(a, b)};
}

}  // namespace

ThermalModel constant_model(double k0, double rho0, double c0, double ell, double peclet) {
  ThermalModel m;
  m.k0 = k0;
  m.rho0 = rho0;
  m.c0 = c0;
  m.ell = ell;
  const double mu = rho0 * c0 * std::sqrt(k0 / (rho0 * c0)) * peclet;
  m.k = [k0](double) { return k0; };
  m.rho_c = [g = rho0 * c0](double) { return g; };
  m.mu = [mu](double) { return mu; };
  m.exact_bounds = [k0, g = rho0 * c0, mu](double, double) {
    return CoefficientBounds{k0, k0, 0, g, g, 0, mu, mu, 0};
  };
  return m;
}

ThermalModel linear_model(double k0, double rho0, double c0, double ell, double alpha,
                          double beta, double peclet, double T_hot, double T_cold) {
  if (T_hot == T_cold) invalid("coefficients", "linear family needs distinct anchor temperatures");
  ThermalModel m;
  m.k0 = k0;
  m.rho0 = rho0;
  m.c0 = c0;
  m.ell = ell;
  const double span = T_cold - T_hot;
  const double mu0 = rho0 * c0 * std::sqrt(k0 / (rho0 * c0)) * peclet;
  auto theta = [T_hot, span](double T) { return (T - T_hot) / span; };
  m.k = [=](double T) { return k0 * (1 + beta * theta(T)); };
  m.rho_c = [=](double T) { return rho0 * c0 * (1 + alpha * theta(T)); };
  m.mu = [=](double T) { return mu0 * (1 + alpha * theta(T)); };
  m.exact_bounds = [=](double lo, double hi) {
    auto [k_lo, k_hi] = endpoint_range(k0 * (1 + beta * theta(lo)), k0 * (1 + beta * theta(hi)));
    auto [g_lo, g_hi] = endpoint_range(rho0 * c0 * (1 + alpha * theta(lo)),
                                       rho0 * c0 * (1 + alpha * theta(hi)));
    auto [v_lo, v_hi] = endpoint_range(mu0 * (1 + alpha * theta(lo)),
                                       mu0 * (1 + alpha * theta(hi)));
    const double inv = 1.0 / std::abs(span);
    return CoefficientBounds{k_lo, k_hi, k0 * std::abs(beta) * inv,
                             g_lo, g_hi, rho0 * c0 * std::abs(alpha) * inv,
                             v_lo, v_hi, std::abs(mu0 * alpha) * inv};
  };
  return m;
}

ThermalModel table_model(CoefficientTable table, double k0, double rho0, double c0, double ell) {
  if (table.T.size() < 2) invalid("coefficients", "coefficient table needs at least two rows");
  ThermalModel m;
  m.k0 = k0;
  m.rho0 = rho0;
  m.c0 = c0;
  m.ell = ell;
  auto shared = std::make_shared<const CoefficientTable>(std::move(table));
  m.k = [shared](double T) { return interpolate(shared->T, shared->k, T); };
  m.rho_c = [shared](double T) { return interpolate(shared->T, shared->rho_c, T); };
  m.mu = [shared](double T) { return interpolate(shared->T, shared->mu, T); };
  m.breakpoints = shared->T;
  return m;
}

CoefficientTable read_coefficient_table(std::istream& in) {
  const std::string stage = "coefficient table";
  std::string line;
  if (!std::getline(in, line)) invalid(stage, "empty table");
  line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }),
             line.end());
  if (line != "T,k,rho_c,mu") invalid(stage, "header must be `T,k,rho_c,mu`, got `" + line + "`");

  CoefficientTable table;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    double T, k, g, mu;
    if (!(fields >> T >> k >> g >> mu))
      invalid(stage, "row " + std::to_string(row) + " does not hold four numbers");
    if (!table.T.empty() && !(T > table.T.back()))
      invalid(stage, "T column must be strictly increasing (row " + std::to_string(row) + ")");
    table.T.push_back(T);
    table.k.push_back(k);
    table.rho_c.push_back(g);
    table.mu.push_back(mu);
  }
  if (table.T.size() < 2) invalid(stage, "table needs at least two data rows");
  return table;
}

CoefficientTable read_coefficient_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) invalid("coefficient table", "cannot open " + path);
  return read_coefficient_table(in);
}

const char* to_string(BcKind kind) {
  switch (kind) {
    case BcKind::Dirichlet: return "dirichlet";
    case BcKind::Neumann: return "neumann";
    case BcKind::Robin: return "robin";
    case BcKind::Radiative: return "radiative";
  }
  return "unknown";
}

BcKind bc_kind_from_string(const std::string& name) {
  if (name == "dirichlet") return BcKind::Dirichlet;
  if (name == "neumann") return BcKind::Neumann;
  if (name == "robin") return BcKind::Robin;
  if (name == "radiative") return BcKind::Radiative;
  invalid("boundary condition", "unknown kind `" + name + "`");
}

BcKind BoundaryCondition::kind() const {
  return static_cast<BcKind>(face.index());
}

std::optional<double> BoundaryCondition::T_star() const {
  return std::visit(
      [](const auto& f) -> std::optional<double> {
        if constexpr (requires { f.T_star; })
          return f.T_star;
        else
          return std::nullopt;
      },
      face);
}

void BoundaryCondition::validate() const {
  const std::string stage = "boundary condition";
  if (!std::isfinite(T_m)) invalid(stage, "T_m must be finite");
  std::visit(
      [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, Neumann>) {
          require_positive(stage, "q", f.q);
        } else {
          if (!(f.T_star > T_m))
            invalid(stage, "T_star must exceed T_m (T_star=" + std::to_string(f.T_star) +
                               ", T_m=" + std::to_string(T_m) + ")");
          if constexpr (std::is_same_v<F, Robin>) {
            if (!(f.h >= 0)) invalid(stage, "h must be non-negative");
          }
          if constexpr (std::is_same_v<F, Radiative>) {
            if (!(f.h >= 0)) invalid(stage, "h must be non-negative");
            require_positive(stage, "sigma", f.sigma);
            if (!(f.epsilon >= 0)) invalid(stage, "epsilon must be non-negative");
          }
        }
      },
      face);
}

std::pair<double, double> default_temperature_range(const BoundaryCondition& bc) {
  if (auto ts = bc.T_star()) return {bc.T_m, *ts};
  return {bc.T_m, 2 * bc.T_m};
}

double temperature_of_profile(const BoundaryCondition& bc, double f) {
  if (auto ts = bc.T_star()) return (bc.T_m - *ts) * f + *ts;
  return bc.T_m * f + bc.T_m;
}

SampledBounds estimate_bounds(const ThermalModel& model, std::pair<double, double> range,
                              std::size_t samples) {
  const std::string stage = "estimate_bounds";
  auto [lo, hi] = range;
  if (!(hi > lo)) invalid(stage, "temperature range is degenerate");
  if (samples < 2) invalid(stage, "need at least two samples");

  std::vector<double> T(samples);
  for (std::size_t i = 0; i < samples; ++i)
    T[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples - 1);
  for (double b : model.breakpoints)
    if (b > lo && b < hi) T.push_back(b);
  std::sort(T.begin(), T.end());
  T.erase(std::unique(T.begin(), T.end()), T.end());

  auto sample = [&](const ScalarFunction& fn, const char* name, bool allow_zero) {
    std::vector<double> v(T.size());
    for (std::size_t i = 0; i < T.size(); ++i) {
      v[i] = fn(T[i]);
      if (!std::isfinite(v[i]) || v[i] < 0 || (!allow_zero && v[i] == 0))
        invalid(stage, std::string(name) + "(" + std::to_string(T[i]) + ") = " +
                           std::to_string(v[i]) + " is not admissible");
    }
    return v;
  };
  auto summarize = [&](const std::vector<double>& v, double& mn, double& mx, double& lip) {
    mn = *std::min_element(v.begin(), v.end());
    mx = *std::max_element(v.begin(), v.end());
    lip = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
      lip = std::max(lip, std::abs(v[i] - v[i - 1]) / (T[i] - T[i - 1]));
  };

  SampledBounds out;
  summarize(sample(model.k, "k", false), out.bounds.k_min, out.bounds.k_max, out.bounds.k_lip);
  summarize(sample(model.rho_c, "rho_c", false), out.bounds.rho_c_min, out.bounds.rho_c_max,
            out.bounds.rho_c_lip);
  summarize(sample(model.mu, "mu", true), out.bounds.mu_min, out.bounds.mu_max, out.bounds.mu_lip);
  out.certified = false;
  return out;
}

std::pair<CoefficientBounds, BoundsSource> resolve_bounds(const ThermalModel& model,
                                                          std::pair<double, double> range,
                                                          const BuildOptions& options) {
  if (model.bounds) return {*model.bounds, BoundsSource::User};
  if (model.exact_bounds) return {model.exact_bounds(range.first, range.second), BoundsSource::Exact};
  if (!options.estimate_bounds)
    invalid("build_dimensionless", "coefficient bounds are missing and estimation is disabled");
  return {estimate_bounds(model, range, options.samples).bounds, BoundsSource::Sampled};
}

DimensionlessProblem build_dimensionless(const ThermalModel& model, const BoundaryCondition& bc,
                                         const BuildOptions& options) {
  const std::string stage = "build_dimensionless";
  bc.validate();
  require_positive(stage, "k0", model.k0);
  require_positive(stage, "rho0", model.rho0);
  require_positive(stage, "c0", model.c0);
  require_positive(stage, "ell", model.ell);
  if (!model.k || !model.rho_c || !model.mu) invalid(stage, "coefficient functions are not set");

  const BcKind kind = bc.kind();
  if (kind == BcKind::Neumann && !(bc.T_m > 0))
    invalid(stage, "Neumann problems need T_m > 0 (q* and M are undefined otherwise)");

  auto range = options.temperature_range.value_or(default_temperature_range(bc));
  auto [b, source] = resolve_bounds(model, range, options);
  if (!(b.k_min > 0) || !(b.rho_c_min > 0) || !(b.mu_min >= 0))
    invalid(stage, "coefficient bounds must satisfy k_min > 0, rho_c_min > 0, mu_min >= 0");

  const double gamma0 = model.rho0 * model.c0;
  const double speed_scale = std::sqrt(gamma0 * model.k0);
  const double alpha0 = model.alpha0();
  // Lipschitz constants in f pick up |dT/df|.
  const double dT = bc.T_star() ? (*bc.T_star() - bc.T_m) : std::abs(bc.T_m);

  DimensionlessProblem p;
  p.kind = kind;
  p.bounds_source = source;
  p.T_m = bc.T_m;
  p.T_star = bc.T_star().value_or(0.0);
  p.L = {b.k_min / model.k0, b.k_max / model.k0, b.k_lip * dT / model.k0};
  p.N = {b.rho_c_min / gamma0, b.rho_c_max / gamma0, b.rho_c_lip * dT / gamma0};
  p.mu = {b.mu_min / speed_scale, b.mu_max / speed_scale, b.mu_lip * dT / speed_scale};

  auto T_of = [bc](double f) { return temperature_of_profile(bc, f); };
  p.conductivity = [k = model.k, k0 = model.k0, T_of](double f) { return k(T_of(f)) / k0; };
  p.capacity = [g = model.rho_c, gamma0, T_of](double f) { return g(T_of(f)) / gamma0; };
  p.speed = [m = model.mu, speed_scale, T_of](double f) { return m(T_of(f)) / speed_scale; };

  std::visit(
      [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, Neumann>) {
          p.q_star = 2 * f.q * std::sqrt(alpha0) / (model.k0 * bc.T_m);
          const double k_front = model.k(bc.T_m);
          require_positive(stage, "k(T_m)", k_front);
          p.M = 2 * model.ell * model.k0 / (bc.T_m * model.c0 * k_front);
        } else {
          p.stefan = (f.T_star - bc.T_m) * model.c0 / model.ell;
          if constexpr (std::is_same_v<F, Robin> || std::is_same_v<F, Radiative>)
            p.biot = f.h * std::sqrt(alpha0) / model.k0;
          if constexpr (std::is_same_v<F, Radiative>) {
            p.r = 2 * f.sigma * f.epsilon * std::sqrt(alpha0) / (model.k0 * (f.T_star - bc.T_m));
            p.D5 = 4 * (f.T_star - bc.T_m) * std::pow(std::abs(f.T_star), 3);
          }
        }
      },
      bc.face);
  return p;
}

}  // namespace stefan
