#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "step_function.hpp"

namespace dyadic {

/// Off-diagonal kernel K(x, y), defined for x != y.
struct KernelSpec {
  std::string description;
  std::function<double(double, double)> eval;
};

inline KernelSpec hilbert_kernel() {
  return {"hilbert", [](double x, double y) { return 1.0 / (x - y); }};
}

inline KernelSpec gauss_kernel() {
  return {"gauss", [](double x, double y) { return std::exp(-(x - y) * (x - y)); }};
}

inline KernelSpec constant_kernel(double c = 1.0) {
  return {"constant", [c](double, double) { return c; }};
}

inline KernelSpec kernel_by_name(const std::string& name) {
  if (name == "hilbert") return hilbert_kernel();
  if (name == "gauss") return gauss_kernel();
  if (name == "constant") return constant_kernel();
  throw std::invalid_argument("unknown kernel '" + name + "' (valid: hilbert, gauss, constant)");
}

/// Max of |x - y| * |K(x, y)| over distinct points of the dyadic lattice
/// {j * 2^-L : 0 <= j < 2^{m+L}}. A lower bound for the size constant A of
/// the kernel. Lattice differences are exact, so for K = 1/(x-y) the value
/// is exactly 1 (attained at adjacent points, never exceeded in
/// round-to-nearest).
inline double kernel_size_sup(const KernelSpec& K, int m, int L) {
  const std::size_t n = std::size_t{1} << (m + L);
  const double w = pow2(-L);
  double sup = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i) * w;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double y = static_cast<double>(j) * w;
      const double v = std::abs(x - y) * std::abs(K.eval(x, y));
      if (v > sup) sup = v;
    }
  }
  return sup;
}

/// Midpoint quadrature of the smoothness integral
///   integral over { |x - y| >= 2*delta, |x - y| <= radius } of
///   |K(x, y) - K(x, y2)| dx,   delta = |y - y2|,
/// with cells_per_side uniform cells on each of the two sides, aligned so a
/// cell edge sits exactly at distance 2*delta. For K = 1/(x-y) the exact
/// value is ln 2 + ln(3/2) + ln((R-d)/R) + ln(R/(R+d)) -> ln 3 as R grows.
inline double hormander_integral(const KernelSpec& K, double y, double y2, double radius,
                                 int cells_per_side) {
  if (y == y2) throw std::invalid_argument("hormander_integral: y and y2 must differ");
  if (cells_per_side < 1)
    throw std::invalid_argument("hormander_integral: need at least one cell per side");
  const double delta = std::abs(y - y2);
  if (!(radius > 2.0 * delta))
    throw std::invalid_argument("hormander_integral: radius must exceed 2|y - y2|");
  const double span = radius - 2.0 * delta;
  const double h = span / cells_per_side;
  double total = 0.0;
  for (int side = 0; side < 2; ++side) {
    const double sgn = side == 0 ? 1.0 : -1.0;
    double s = 0.0;
    for (int i = 0; i < cells_per_side; ++i) {
      const double x = y + sgn * (2.0 * delta + (i + 0.5) * h);
      s += std::abs(K.eval(x, y) - K.eval(x, y2));
    }
    total += s * h;
  }
  return total;
}

/// Exact value of the integral above for the Hilbert kernel.
inline double hilbert_hormander_exact(double delta, double radius) {
  return std::log(2.0) + std::log(1.5) + std::log((radius - delta) / radius) +
         std::log(radius / (radius + delta));
}

/// K applied to f by midpoint quadrature over cells, skipping the diagonal
/// cell (principal-value surrogate): (Tf)(x_i) = sum_{c != i} K(x_i, y_c)
/// f_c * 2^-L with x, y at cell midpoints.
inline StepFunction apply_kernel(const KernelSpec& K, const StepFunction& f) {
  const std::size_t n = f.cell_count();
  const double w = f.cell_width();
  std::vector<double> mid(n);
  for (std::size_t i = 0; i < n; ++i) mid[i] = (static_cast<double>(i) + 0.5) * w;
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
      if (c == i || f[c] == 0.0) continue;
      s += K.eval(mid[i], mid[c]) * f[c];
    }
    out[i] = s * w;
  }
  return StepFunction(f.m(), f.level(), std::move(out));
}

}  // namespace dyadic
