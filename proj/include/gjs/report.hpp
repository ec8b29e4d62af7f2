#pragma once

#include <string>
#include <vector>

namespace gjs {

struct Residual {
  std::string relation;
  double max_abs = 0.0;
};

/// Outcome of a verification: one maximum absolute residual per relation.
/// A failing report is data, never an exception.
struct ResidualReport {
  double tolerance = 0.0;
  std::vector<Residual> residuals;

  void add(std::string relation, double value);
  bool passed() const;
  double max_residual() const;
  const Residual* find(const std::string& relation) const;
};

}  // namespace gjs
