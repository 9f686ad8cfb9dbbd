// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sombor/chem_io.hpp"

namespace sombor {

/// Simple least-squares line y = intercept + slope * x.
struct RegressionFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r = 0.0;          // sample (Pearson) correlation
  double r_squared = 0.0;  // r * r
  std::size_t sample_size = 0;

  double predict(double x) const { return intercept + slope * x; }
};

class RegressionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws RegressionError on length mismatch, fewer than two points or a
/// constant predictor.
RegressionFit linear_fit(std::span<const double> xs, std::span<const double> ys);

/// Value of `column` for each record: an index name understood by
/// compute_index ("so2", "m1", "mn", ...) or a property column. Throws
/// std::invalid_argument if neither, or if a record lacks the property.
std::vector<double> column_values(const std::vector<MoleculeRecord>& records,
                                  const std::string& column);

struct CorrelationGrid {
  std::vector<std::string> predictors;
  std::vector<std::string> targets;
  std::vector<std::vector<RegressionFit>> fits;  // [predictor][target]
};

/// One regression of every target on every predictor over the records.
CorrelationGrid correlation_grid(const std::vector<MoleculeRecord>& records,
                                 const std::vector<std::string>& predictors,
                                 const std::vector<std::string>& targets);

}  // namespace sombor
