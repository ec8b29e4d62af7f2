#include "gjs/report.hpp"

#include <algorithm>
#include <cmath>

namespace gjs {

void ResidualReport::add(std::string relation, double value) {
  residuals.push_back({std::move(relation), value});
}

bool ResidualReport::passed() const {
  // NaN residuals fail: the comparison below is false for them.
  return std::all_of(residuals.begin(), residuals.end(),
                     [&](const Residual& r) { return r.max_abs <= tolerance; });
}

double ResidualReport::max_residual() const {
  double worst = 0.0;
  for (const auto& r : residuals) {
    if (std::isnan(r.max_abs)) return r.max_abs;
    worst = std::max(worst, r.max_abs);
  }
  return worst;
}

const Residual* ResidualReport::find(const std::string& relation) const {
  auto it = std::find_if(residuals.begin(), residuals.end(),
                         [&](const Residual& r) { return r.relation == relation; });
  return it == residuals.end() ? nullptr : &*it;
}

}  // namespace gjs
