// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "sombor/graph.hpp"
#include "sombor/rational.hpp"

namespace sombor {

/// Edge kernels F(d(u), d(v)) of vertex-degree-based indices
/// TI(G) = sum over edges uv of F(d(u), d(v)). Every kernel is symmetric.
enum class VdbKernel {
  kSecondSombor,         // SO2: |x^2 - y^2| / (x^2 + y^2)
  kSombor,               // SO:  sqrt(x^2 + y^2)
  kFirstZagreb,          // M1:  x + y
  kSecondZagreb,         // M2:  x * y
  kForgotten,            // F:   x^2 + y^2
  kRandic,               // R:   1 / sqrt(x * y)
  kSumConnectivity,      // SCI: 1 / sqrt(x + y)
  kSymmetricDivision,    // SDD: x / y + y / x
};

/// True for kernels whose value on integer degrees is rational.
bool is_rational_kernel(VdbKernel k);

/// Short lowercase name used on the command line ("so2", "m1", ...).
std::string_view kernel_name(VdbKernel k);
std::optional<VdbKernel> parse_kernel(std::string_view name);

/// Exact kernel value; throws std::domain_error for irrational kernels.
Rational kernel_exact(VdbKernel k, std::size_t x, std::size_t y);
double kernel_approx(VdbKernel k, std::size_t x, std::size_t y);

struct IndexValue {
  std::optional<Rational> exact;
  double approx = 0.0;

  static IndexValue from_exact(Rational r) {
    double d = r.to_double();
    return {std::move(r), d};
  }
  static IndexValue from_approx(double d) { return {std::nullopt, d}; }
};

/// Second Sombor index, summed edge by edge in exact arithmetic.
IndexValue so2(const Graph& g);

/// SO2 from edge-type counts alone: sum of m_ij |i^2 - j^2| / (i^2 + j^2).
Rational so2_from_profile(const EdgeTypeProfile& p);

IndexValue vdb_index(const Graph& g, VdbKernel k);

/// Neighbourhood Zagreb index M_N = sum over v of (sum of neighbour degrees)^2.
IndexValue neighborhood_zagreb(const Graph& g);

/// Dispatch by command-line name: any kernel name, or "mn".
/// Throws std::invalid_argument for an unknown name.
IndexValue compute_index(const Graph& g, std::string_view name);

/// m (Delta^2 - delta^2) / (Delta^2 + delta^2). Requires 1 <= delta <= Delta.
Rational theorem31_upper(std::size_t edges, std::size_t min_deg, std::size_t max_deg);

}  // namespace sombor
