// SPDX-License-Identifier: Apache-2.0

#include "sombor/indices.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace sombor {

namespace {

struct KernelInfo {
  VdbKernel kernel;
  std::string_view name;
  bool rational;
};

constexpr std::array<KernelInfo, 8> kKernels{{
    {VdbKernel::kSecondSombor, "so2", true},
    {VdbKernel::kSombor, "so", false},
    {VdbKernel::kFirstZagreb, "m1", true},
    {VdbKernel::kSecondZagreb, "m2", true},
    {VdbKernel::kForgotten, "f", true},
    {VdbKernel::kRandic, "r", false},
    {VdbKernel::kSumConnectivity, "sci", false},
    {VdbKernel::kSymmetricDivision, "sdd", true},
}};

const KernelInfo& info(VdbKernel k) {
  for (const auto& ki : kKernels) {
    if (ki.kernel == k) return ki;
  }
  throw std::logic_error("unknown kernel");
}

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

bool is_rational_kernel(VdbKernel k) { return info(k).rational; }

std::string_view kernel_name(VdbKernel k) { return info(k).name; }

std::optional<VdbKernel> parse_kernel(std::string_view name) {
  for (const auto& ki : kKernels) {
    if (ki.name == name) return ki.kernel;
  }
  return std::nullopt;
}

Rational kernel_exact(VdbKernel k, std::size_t x, std::size_t y) {
  const std::int64_t a = as_int(x), b = as_int(y);
  switch (k) {
    case VdbKernel::kSecondSombor: {
      const std::int64_t a2 = a * a, b2 = b * b;
      if (a2 + b2 == 0) return Rational(0);
      return Rational(a2 > b2 ? a2 - b2 : b2 - a2, a2 + b2);
    }
    case VdbKernel::kFirstZagreb:
      return Rational(a + b);
    case VdbKernel::kSecondZagreb:
      return Rational(a * b);
    case VdbKernel::kForgotten:
      return Rational(a * a + b * b);
    case VdbKernel::kSymmetricDivision:
      if (a == 0 || b == 0) throw std::domain_error("SDD undefined for degree 0");
      return Rational(a * a + b * b, a * b);
    default:
      throw std::domain_error(std::string("kernel ") + std::string(kernel_name(k)) +
                              " has no exact value");
  }
}

double kernel_approx(VdbKernel k, std::size_t x, std::size_t y) {
  const double a = static_cast<double>(x), b = static_cast<double>(y);
  switch (k) {
    case VdbKernel::kSombor:
      return std::sqrt(a * a + b * b);
    case VdbKernel::kRandic:
      return 1.0 / std::sqrt(a * b);
    case VdbKernel::kSumConnectivity:
      return 1.0 / std::sqrt(a + b);
    default:
      return kernel_exact(k, x, y).to_double();
  }
}

IndexValue so2(const Graph& g) {
  Rational total;
  for (const auto& e : g.edges()) {
    total += kernel_exact(VdbKernel::kSecondSombor, g.degree(e.u), g.degree(e.v));
  }
  return IndexValue::from_exact(std::move(total));
}

Rational so2_from_profile(const EdgeTypeProfile& p) {
  Rational total;
  for (const auto& [pair, count] : p.edge_counts()) {
    total += Rational(as_int(count)) *
             kernel_exact(VdbKernel::kSecondSombor, pair.low, pair.high);
  }
  return total;
}

IndexValue vdb_index(const Graph& g, VdbKernel k) {
  if (is_rational_kernel(k)) {
    Rational total;
    for (const auto& e : g.edges()) total += kernel_exact(k, g.degree(e.u), g.degree(e.v));
    return IndexValue::from_exact(std::move(total));
  }
  double total = 0.0;
  for (const auto& e : g.edges()) total += kernel_approx(k, g.degree(e.u), g.degree(e.v));
  return IndexValue::from_approx(total);
}

IndexValue neighborhood_zagreb(const Graph& g) {
  std::int64_t total = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::int64_t s = 0;
    for (Vertex w : g.neighbors(v)) s += as_int(g.degree(w));
    total += s * s;
  }
  return IndexValue::from_exact(Rational(total));
}

IndexValue compute_index(const Graph& g, std::string_view name) {
  if (name == "mn") return neighborhood_zagreb(g);
  if (auto k = parse_kernel(name)) return vdb_index(g, *k);
  throw std::invalid_argument("unknown index \"" + std::string(name) + "\"");
}

Rational theorem31_upper(std::size_t edges, std::size_t min_deg, std::size_t max_deg) {
  if (min_deg == 0) throw std::invalid_argument("theorem31_upper: minimum degree must be positive");
  if (min_deg > max_deg) throw std::invalid_argument("theorem31_upper: min degree exceeds max degree");
  const std::int64_t lo = as_int(min_deg) * as_int(min_deg);
  const std::int64_t hi = as_int(max_deg) * as_int(max_deg);
  return Rational(as_int(edges)) * Rational(hi - lo, hi + lo);
}

}  // namespace sombor
