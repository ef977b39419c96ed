#include "stefan/cli/report.hpp"

#include <cmath>
#include <sstream>

#include "stefan/format.hpp"

namespace stefan::cli {

namespace {

// NaN and infinities become null rather than invalid JSON.
ordered_json number(double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); }

ordered_json bounds(const FunctionBounds& b) {
  return {{"min", number(b.min)}, {"max", number(b.max)}, {"lipschitz", number(b.lipschitz)}};
}

const char* to_string(BoundsSource s) {
  switch (s) {
    case BoundsSource::User: return "user";
    case BoundsSource::Exact: return "exact";
    case BoundsSource::Sampled: return "sampled";
  }
  return "unknown";
}

std::string csv_escape(std::string s) {
  for (char& c : s)
    if (c == ',' || c == '\n' || c == '"') c = ';';
  return s;
}

}  // namespace

ordered_json to_json(const Bracket& b) {
  return {{"lower", number(b.lower)}, {"upper", number(b.upper)}, {"provenance", to_string(b.provenance)}};
}

ordered_json to_json(const ExistenceReport& r) {
  ordered_json flags = ordered_json::object();
  for (const auto& [name, state] : r.flags) flags[name] = stefan::to_string(state);
  return {
      {"status", r.status},
      {"certified", r.certified},
      {"bc", stefan::to_string(r.kind)},
      {"bounds_source", to_string(r.bounds_source)},
      {"lambda_bar", r.lambda_bar ? number(*r.lambda_bar) : ordered_json(nullptr)},
      {"lambda_bar_note", r.lambda_bar_note},
      {"bracket", to_json(r.bracket)},
      {"epsilon_at_lambda2", number(r.epsilon_at_lambda2)},
      {"flags", flags},
  };
}

ordered_json to_json(const DimensionlessProblem& p) {
  ordered_json j = {{"bc", stefan::to_string(p.kind)},
                    {"L", bounds(p.L)},
                    {"N", bounds(p.N)},
                    {"mu", bounds(p.mu)},
                    {"bounds_source", to_string(p.bounds_source)}};
  switch (p.kind) {
    case BcKind::Dirichlet:
      j["Ste"] = number(p.stefan);
      break;
    case BcKind::Neumann:
      j["q_star"] = number(p.q_star);
      j["M"] = number(p.M);
      break;
    case BcKind::Robin:
      j["Ste"] = number(p.stefan);
      j["Bi"] = number(p.biot);
      break;
    case BcKind::Radiative:
      j["Ste"] = number(p.stefan);
      j["Bi"] = number(p.biot);
      j["r"] = number(p.r);
      j["D5"] = number(p.D5);
      break;
  }
  return j;
}

ordered_json to_json(const SolveReport& r) {
  ordered_json inner = {
      {"iterations", r.inner_iterations},
      {"residual", number(r.inner_residual)},
      {"contraction_observed",
       r.contraction_observed ? number(*r.contraction_observed) : ordered_json(nullptr)},
      {"contraction_theoretical", number(r.contraction_theoretical)},
      {"clamped", r.clamped},
  };
  return {
      {"bc", stefan::to_string(r.kind)},
      {"lambda", number(r.lambda)},
      {"grid", r.profile.intervals()},
      {"bracket", to_json(r.bracket)},
      {"outer",
       {{"iterations", r.outer_iterations},
        {"residual", number(r.outer_residual)},
        {"additional_sign_changes", r.additional_sign_changes}}},
      {"inner", inner},
      {"max_profile", number(r.max_profile)},
      {"front_flux_residual", number(r.front_flux_residual)},
      {"existence", to_json(r.existence)},
  };
}

ordered_json to_json(const ClosedFormSolution& s) {
  ordered_json roots = ordered_json::array();
  for (double x : s.roots) roots.push_back(number(x));
  return {{"bc", stefan::to_string(s.kind)}, {"lambda", number(s.lambda)}, {"unique", s.unique}, {"roots", roots}};
}

ordered_json to_json(const PdeDiscrepancy& d) {
  return {{"nodes", d.nodes},
          {"steps", d.steps},
          {"final_time", number(d.final_time)},
          {"s_numeric", number(d.s_numeric)},
          {"s_similarity", number(d.s_similarity)},
          {"s_rel_final", number(d.s_rel_final)},
          {"s_rel_max", number(d.s_rel_max)},
          {"T_rel_max", number(d.T_rel_max)}};
}

std::string sweep_header(const std::vector<std::string>& parameters) {
  std::ostringstream os;
  os << "index";
  for (const auto& p : parameters) os << ',' << p;
  os << ",status,lambda,certificate,bracket_lower,bracket_upper,outer_iterations,outer_residual,"
        "inner_iterations,inner_residual,front_flux_residual,error\n";
  return os.str();
}

std::string sweep_line(const SweepRow& row) {
  std::ostringstream os;
  os << row.index;
  for (double v : row.values) os << ',' << shortest(v);
  if (row.ok) {
    const auto& r = row.report;
    os << ",ok," << shortest(r.lambda) << ',' << r.existence.status << ',' << shortest(r.bracket.lower) << ','
       << shortest(r.bracket.upper) << ',' << r.outer_iterations << ',' << shortest(r.outer_residual) << ','
       << r.inner_iterations << ',' << shortest(r.inner_residual) << ',' << shortest(r.front_flux_residual) << ",";
  } else {
    os << ",failed,,,,,,,,,," << csv_escape(row.error);
  }
  os << '\n';
  return os.str();
}

}  // namespace stefan::cli
