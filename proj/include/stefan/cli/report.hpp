#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "stefan/closed_form.hpp"
#include "stefan/existence.hpp"
#include "stefan/pde_verifier.hpp"
#include "stefan/solve.hpp"

namespace stefan::cli {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Bracket& b);
ordered_json to_json(const ExistenceReport& r);
ordered_json to_json(const DimensionlessProblem& p);
ordered_json to_json(const SolveReport& r);
ordered_json to_json(const ClosedFormSolution& s);
ordered_json to_json(const PdeDiscrepancy& d);

/// Header of the sweep CSV: index, the swept parameters, then result columns.
std::string sweep_header(const std::vector<std::string>& parameters);

struct SweepRow {
  std::size_t index = 0;
  std::vector<double> values;
  bool ok = false;
  std::string error;
  SolveReport report;
};

std::string sweep_line(const SweepRow& row);

}  // namespace stefan::cli
