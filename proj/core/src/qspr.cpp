// SPDX-License-Identifier: Apache-2.0

#include "sombor/qspr.hpp"

#include <algorithm>
#include <cmath>

#include "sombor/indices.hpp"

namespace sombor {

RegressionFit linear_fit(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw RegressionError("linear_fit: " + std::to_string(xs.size()) + " predictors but " +
                          std::to_string(ys.size()) + " responses");
  }
  if (xs.size() < 2) throw RegressionError("linear_fit: need at least two points");
  const double count = static_cast<double>(xs.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= count;
  mean_y /= count;

  // Centred sums; two-pass for accuracy.
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mean_x, dy = ys[i] - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0) throw RegressionError("linear_fit: predictor is constant");

  RegressionFit fit;
  fit.sample_size = xs.size();
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  if (syy == 0.0) {
    // Correlation is undefined for a constant response; report zero.
    fit.r = 0.0;
    fit.r_squared = 0.0;
  } else {
    fit.r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
    fit.r_squared = fit.r * fit.r;
  }
  return fit;
}

std::vector<double> column_values(const std::vector<MoleculeRecord>& records,
                                  const std::string& column) {
  const bool is_index = column == "mn" || parse_kernel(column).has_value();
  std::vector<double> values;
  values.reserve(records.size());
  for (const auto& rec : records) {
    if (is_index) {
      values.push_back(compute_index(parse_alkane_smiles(rec.smiles), column).approx);
      continue;
    }
    auto it = rec.properties.find(column);
    if (it == rec.properties.end()) {
      throw std::invalid_argument("molecule \"" + rec.name + "\" has no value for \"" + column +
                                  "\"");
    }
    values.push_back(it->second);
  }
  return values;
}

CorrelationGrid correlation_grid(const std::vector<MoleculeRecord>& records,
                                 const std::vector<std::string>& predictors,
                                 const std::vector<std::string>& targets) {
  CorrelationGrid grid{predictors, targets, {}};
  std::vector<std::vector<double>> target_values;
  for (const auto& t : targets) target_values.push_back(column_values(records, t));
  for (const auto& p : predictors) {
    const std::vector<double> xs = column_values(records, p);
    auto& row = grid.fits.emplace_back();
    for (const auto& ys : target_values) row.push_back(linear_fit(xs, ys));
  }
  return grid;
}

}  // namespace sombor
