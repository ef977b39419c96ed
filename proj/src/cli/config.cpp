#include "stefan/cli/config.hpp"

#include <filesystem>
#include <fstream>
#include <set>

#include "stefan/error.hpp"

namespace stefan::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw StefanError(ErrorKind::InvalidInput, "config", what); }

// Reads one JSON object, remembering which keys were consumed so that
// leftovers (typos) can be rejected.
class Block {
 public:
  Block(const json& doc, std::string name) : name_(std::move(name)) {
    if (!doc.is_object()) fail("`" + name_ + "` must be an object");
    obj_ = &doc;
  }

  bool has(const std::string& key) const { return obj_->contains(key); }

  double number(const std::string& key) {
    const json& v = at(key);
    if (!v.is_number()) fail(path(key) + " must be a number");
    return v.get<double>();
  }
  double number(const std::string& key, double fallback) { return has(key) ? number(key) : fallback; }
  std::optional<double> maybe_number(const std::string& key) {
    return has(key) ? std::optional<double>(number(key)) : std::nullopt;
  }

  double positive(const std::string& key) {
    const double v = number(key);
    if (!(v > 0)) fail(path(key) + " must be positive");
    return v;
  }
  double positive(const std::string& key, double fallback) { return has(key) ? positive(key) : fallback; }

  long integer(const std::string& key, long fallback) {
    if (!has(key)) return fallback;
    const json& v = at(key);
    if (!v.is_number_integer()) fail(path(key) + " must be an integer");
    return v.get<long>();
  }

  bool boolean(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    const json& v = at(key);
    if (!v.is_boolean()) fail(path(key) + " must be true or false");
    return v.get<bool>();
  }

  std::string text(const std::string& key) {
    const json& v = at(key);
    if (!v.is_string()) fail(path(key) + " must be a string");
    return v.get<std::string>();
  }
  std::string text(const std::string& key, const std::string& fallback) { return has(key) ? text(key) : fallback; }

  std::vector<double> numbers(const std::string& key, std::vector<double> fallback) {
    if (!has(key)) return fallback;
    const json& v = at(key);
    if (!v.is_array() || v.empty()) fail(path(key) + " must be a non-empty array of numbers");
    std::vector<double> out;
    for (const auto& e : v) {
      if (!e.is_number()) fail(path(key) + " must contain only numbers");
      out.push_back(e.get<double>());
    }
    return out;
  }

  const json& raw(const std::string& key) { return at(key); }

  void finish() const {
    for (const auto& [key, value] : obj_->items())
      if (!used_.count(key)) fail("unknown key " + path(key));
  }

  std::string path(const std::string& key) const { return "`" + name_ + "." + key + "`"; }

 private:
  const json& at(const std::string& key) {
    if (!has(key)) fail("missing key " + path(key));
    used_.insert(key);
    return (*obj_)[key];
  }

  const json* obj_ = nullptr;
  std::string name_;
  std::set<std::string> used_;
};

BoundaryCondition parse_bc(const json& doc, double T_m) {
  Block b(doc, "bc");
  const std::string kind = b.text("kind");
  BoundaryCondition bc;
  bc.T_m = T_m;
  switch (bc_kind_from_string(kind)) {
    case BcKind::Dirichlet:
      bc.face = Dirichlet{b.number("T_star")};
      break;
    case BcKind::Neumann:
      bc.face = Neumann{b.positive("q")};
      break;
    case BcKind::Robin:
      bc.face = Robin{b.positive("h"), b.number("T_star")};
      break;
    case BcKind::Radiative:
      bc.face = Radiative{b.number("h"), b.number("sigma"), b.number("epsilon"), b.number("T_star")};
      break;
  }
  b.finish();
  bc.validate();
  return bc;
}

CoefficientBounds parse_bounds(const json& doc) {
  Block b(doc, "coefficients.bounds");
  CoefficientBounds cb;
  cb.k_min = b.number("k_min");
  cb.k_max = b.number("k_max");
  cb.k_lip = b.number("k_lip");
  cb.rho_c_min = b.number("rho_c_min");
  cb.rho_c_max = b.number("rho_c_max");
  cb.rho_c_lip = b.number("rho_c_lip");
  cb.mu_min = b.number("mu_min");
  cb.mu_max = b.number("mu_max");
  cb.mu_lip = b.number("mu_lip");
  b.finish();
  return cb;
}

CoefficientsConfig parse_coefficients(const json& doc, const std::string& base_dir) {
  Block b(doc, "coefficients");
  CoefficientsConfig c;
  c.family = b.text("family");
  if (c.family == "constant") {
    c.peclet = b.number("Pe", 0.0);
  } else if (c.family == "linear") {
    c.alpha = b.number("alpha", 0.0);
    c.beta = b.number("beta", 0.0);
    c.peclet = b.number("Pe", 0.0);
    c.T_hot = b.maybe_number("T_hot");
    c.T_cold = b.maybe_number("T_cold");
  } else if (c.family == "table") {
    std::filesystem::path p = b.text("path");
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    if (!std::filesystem::exists(p)) fail("coefficient table `" + p.string() + "` does not exist");
    c.table_path = p.string();
  } else {
    fail("`coefficients.family` must be constant, linear or table, got `" + c.family + "`");
  }
  if (c.peclet < 0) fail("`coefficients.Pe` must be non-negative");
  if (b.has("bounds")) c.bounds = parse_bounds(b.raw("bounds"));
  b.finish();
  return c;
}

ReferenceConfig parse_reference(const json& doc) {
  Block b(doc, "reference");
  ReferenceConfig r;
  r.k0 = b.positive("k0");
  r.rho0 = b.positive("rho0");
  r.c0 = b.positive("c0");
  r.ell = b.positive("ell");
  r.T_m = b.number("T_m");
  b.finish();
  return r;
}

NumericsConfig parse_numerics(const json& doc) {
  Block b(doc, "numerics");
  NumericsConfig n;
  const long grid = b.integer("grid", static_cast<long>(n.grid));
  if (grid < 16) fail("`numerics.grid` must be at least 16");
  n.grid = static_cast<std::size_t>(grid);
  n.inner_tol = b.positive("inner_tol", n.inner_tol);
  n.outer_tol = b.positive("outer_tol", n.outer_tol);
  n.max_iter = static_cast<int>(b.integer("max_iter", n.max_iter));
  if (n.max_iter < 1) fail("`numerics.max_iter` must be at least 1");
  n.lambda_max = b.positive("lambda_max", n.lambda_max);
  n.scan_points = static_cast<int>(b.integer("scan_points", n.scan_points));
  if (n.scan_points < 1) fail("`numerics.scan_points` must be at least 1");
  n.estimate_bounds = b.boolean("estimate_bounds", n.estimate_bounds);
  b.finish();
  return n;
}

OutputsConfig parse_outputs(const json& doc) {
  Block b(doc, "outputs");
  OutputsConfig o;
  o.dir = b.text("dir", o.dir);
  o.profile_csv = b.boolean("profile_csv", o.profile_csv);
  o.field_csv = b.boolean("field_csv", o.field_csv);
  o.front_csv = b.boolean("front_csv", o.front_csv);
  o.times = b.numbers("times", o.times);
  for (double t : o.times)
    if (!(t > 0)) fail("`outputs.times` must be positive");
  const long points = b.integer("field_points", static_cast<long>(o.field_points));
  if (points < 2) fail("`outputs.field_points` must be at least 2");
  o.field_points = static_cast<std::size_t>(points);
  b.finish();
  return o;
}

SweepConfig parse_sweep(const json& doc, const json& root) {
  Block b(doc, "sweep");
  const json& params = b.raw("parameters");
  if (!params.is_object() || params.empty()) fail("`sweep.parameters` must be a non-empty object");
  SweepConfig s;
  Block p(params, "sweep.parameters");
  for (const auto& [key, value] : params.items()) {
    s.parameters.emplace_back(key, p.numbers(key, {}));
    with_parameter(root, key, 0.0);  // validates the path
  }
  b.finish();
  return s;
}

FrontFixedScheme parse_verify(const json& doc) {
  Block b(doc, "verify");
  FrontFixedScheme s;
  const long nodes = b.integer("nodes", static_cast<long>(s.nodes));
  if (nodes < 4) fail("`verify.nodes` must be at least 4");
  s.nodes = static_cast<std::size_t>(nodes);
  s.t0 = b.positive("t0", s.t0);
  s.t1 = b.positive("t1", s.t1);
  if (s.t1 < s.t0) fail("`verify.t1` must not precede `verify.t0`");
  s.safety = b.positive("safety", s.safety);
  if (s.safety > 0.5) fail("`verify.safety` must not exceed 0.5");
  b.finish();
  return s;
}

}  // namespace

RunConfig parse_config(const json& doc, const std::string& base_dir) {
  if (!doc.is_object() || doc.empty()) fail("configuration must be a non-empty JSON object");
  Block top(doc, "config");
  RunConfig c;
  c.source = doc;
  c.base_dir = base_dir;
  c.reference = parse_reference(top.raw("reference"));
  c.bc = parse_bc(top.raw("bc"), c.reference.T_m);
  c.coefficients = parse_coefficients(top.raw("coefficients"), base_dir);
  if (top.has("numerics")) c.numerics = parse_numerics(top.raw("numerics"));
  if (top.has("outputs")) c.outputs = parse_outputs(top.raw("outputs"));
  if (top.has("sweep")) c.sweep = parse_sweep(top.raw("sweep"), doc);
  if (top.has("verify")) c.verify = parse_verify(top.raw("verify"));
  top.finish();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open `" + path + "`");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    fail("`" + path + "` is not valid JSON: " + e.what());
  }
  return parse_config(doc, std::filesystem::path(path).parent_path().string());
}

json with_parameter(const json& doc, const std::string& path, double value) {
  json out = doc;
  json* node = &out;
  std::size_t start = 0;
  while (true) {
    const auto dot = path.find('.', start);
    const std::string key = path.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (!node->is_object() || !node->contains(key)) fail("sweep parameter `" + path + "` does not name a config entry");
    node = &(*node)[key];
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  if (!node->is_number()) fail("sweep parameter `" + path + "` is not a scalar number");
  *node = value;
  return out;
}

ThermalModel RunConfig::model() const {
  const auto& r = reference;
  const auto& c = coefficients;
  ThermalModel m;
  if (c.family == "constant") {
    m = constant_model(r.k0, r.rho0, r.c0, r.ell, c.peclet);
  } else if (c.family == "linear") {
    // Default anchors: theta = 0 at the hot face, 1 at the melt front.
    const auto [lo, hi] = default_temperature_range(bc);
    const double T_hot = c.T_hot.value_or(hi);
    const double T_cold = c.T_cold.value_or(lo);
    m = linear_model(r.k0, r.rho0, r.c0, r.ell, c.alpha, c.beta, c.peclet, T_hot, T_cold);
  } else {
    m = table_model(read_coefficient_table(c.table_path), r.k0, r.rho0, r.c0, r.ell);
  }
  if (c.bounds) m.bounds = c.bounds;
  return m;
}

OuterSettings RunConfig::outer_settings() const {
  OuterSettings s;
  s.grid = numerics.grid;
  s.inner.tol = numerics.inner_tol;
  s.inner.max_iter = numerics.max_iter;
  s.tol = numerics.outer_tol;
  s.lambda_max = numerics.lambda_max;
  s.scan_points = numerics.scan_points;
  return s;
}

BuildOptions RunConfig::build_options() const {
  BuildOptions o;
  o.estimate_bounds = numerics.estimate_bounds;
  return o;
}

}  // namespace stefan::cli
