#pragma once

#include <cstdint>
#include <stdexcept>

#include "step_function.hpp"

namespace dyadic {

/// Dyadic interval [j*2^-k, (j+1)*2^-k). Generation k may be negative
/// (intervals longer than 1); j counts from the origin.
struct DyadicInterval {
  int k;
  std::int64_t j;

  DyadicInterval(int k_, std::int64_t j_) : k(k_), j(j_) {
    if (j < 0) throw std::invalid_argument("DyadicInterval: j must be nonnegative");
  }

  double length() const { return pow2(-k); }
  double left() const { return static_cast<double>(j) * pow2(-k); }
  double right() const { return static_cast<double>(j + 1) * pow2(-k); }

  /// Contained in [0, 2^m)?
  bool fits(int m) const { return k >= -m && j < (std::int64_t{1} << (m + k)); }

  /// Cell span [first, first + count) at resolution level L >= k.
  std::size_t first_cell(int L) const {
    if (L < k) throw std::invalid_argument("DyadicInterval: resolution coarser than interval");
    return static_cast<std::size_t>(j) << (L - k);
  }
  std::size_t cell_span(int L) const {
    if (L < k) throw std::invalid_argument("DyadicInterval: resolution coarser than interval");
    return std::size_t{1} << (L - k);
  }

  DyadicInterval parent() const { return DyadicInterval(k - 1, j / 2); }
  DyadicInterval child(int side) const { return DyadicInterval(k + 1, 2 * j + side); }

  friend bool operator==(const DyadicInterval& a, const DyadicInterval& b) {
    return a.k == b.k && a.j == b.j;
  }
};

/// Indicator step function of the interval within [0, 2^m) at resolution L.
inline StepFunction indicator_of(const DyadicInterval& I, int m, int L) {
  if (!I.fits(m)) throw std::invalid_argument("indicator_of: interval escapes the domain");
  return StepFunction::indicator(m, L, I.first_cell(L), I.cell_span(L));
}

}  // namespace dyadic
