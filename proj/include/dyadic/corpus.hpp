#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dyadic_interval.hpp"
#include "haar.hpp"
#include "rng.hpp"
#include "step_function.hpp"

namespace dyadic {

/// Random function of the simple class sum_{k=kmin}^{kmax} 2^-k chi_{A_k},
/// as a signed combination f1 - f2 of two such draws. Each A_k includes
/// each cell independently with probability 1/2. Cell values carry at most
/// kmax - kmin + 2 mantissa bits, so downstream sums over cells stay exact.
/// Bit-for-bit reproducible for a fixed seed.
inline StepFunction random_s0(std::uint64_t seed, int m, int L, int kmin, int kmax) {
  if (kmin >= kmax) throw std::invalid_argument("random_s0: requires kmin < kmax");
  Rng rng(seed);
  const std::size_t n = std::size_t{1} << (m + L);
  std::vector<double> v(n, 0.0);
  for (int part = 0; part < 2; ++part) {
    const double sgn = part == 0 ? 1.0 : -1.0;
    for (int k = kmin; k <= kmax; ++k) {
      const double a = pow2(-k);
      for (std::size_t i = 0; i < n; ++i)
        if (rng.coin()) v[i] += sgn * a;
    }
  }
  return StepFunction(m, L, std::move(v));
}

inline std::vector<StepFunction> random_s0_corpus(std::uint64_t seed, std::size_t count, int m,
                                                  int L, int kmin, int kmax) {
  std::vector<StepFunction> fs;
  fs.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    fs.push_back(random_s0(seed + i, m, L, kmin, kmax));
  return fs;
}

inline std::vector<std::pair<StepFunction, StepFunction>> random_s0_pairs(
    std::uint64_t seed, std::size_t count, int m, int L, int kmin, int kmax) {
  std::vector<std::pair<StepFunction, StepFunction>> ps;
  ps.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    ps.emplace_back(random_s0(seed + 2 * i, m, L, kmin, kmax),
                    random_s0(seed + 2 * i + 1, m, L, kmin, kmax));
  return ps;
}

/// Unnormalized Haar atom: +1 on the left half of I, -1 on the right half.
/// Equals |I|^{1/2} h_I, so scalar multiples are Haar multiples with exactly
/// representable cell values.
inline StepFunction haar_atom(const DyadicInterval& I, int m, int L) {
  if (L < I.k + 1) throw std::invalid_argument("haar_atom: level too coarse");
  if (!I.fits(m)) throw std::invalid_argument("haar_atom: interval escapes the domain");
  std::vector<double> v(std::size_t{1} << (m + L), 0.0);
  const std::size_t first = I.first_cell(L), span = I.cell_span(L);
  for (std::size_t i = 0; i < span / 2; ++i) {
    v[first + i] = 1.0;
    v[first + span / 2 + i] = -1.0;
  }
  return StepFunction(m, L, std::move(v));
}

inline DyadicInterval random_interval(Rng& rng, int m, int kmin, int kmax) {
  const int k = static_cast<int>(rng.range(kmin, kmax));
  const std::int64_t j = rng.range(0, (std::int64_t{1} << (m + k)) - 1);
  return DyadicInterval(k, j);
}

/// Haar multiple with dyadic coefficient +-2^-r, r in [0, 6].
inline StepFunction random_haar_multiple(Rng& rng, int m, int L) {
  const DyadicInterval I = random_interval(rng, m, -m, L - 1);
  const double c = (rng.coin() ? 1.0 : -1.0) * pow2(-static_cast<int>(rng.range(0, 6)));
  return haar_atom(I, m, L).scaled(c);
}

/// Mean-zero function supported in a random dyadic interval I0: a sum of a
/// few Haar multiples of subintervals of I0. Exact zero integral by
/// construction (atoms cancel cell-pairwise).
struct LocalizedCase {
  StepFunction f;
  DyadicInterval I0;
};

inline LocalizedCase random_localized_case(Rng& rng, int m, int L) {
  const DyadicInterval I0 = random_interval(rng, m, -m, L - 1);
  const int terms = static_cast<int>(rng.range(1, 4));
  std::vector<double> v(std::size_t{1} << (m + L), 0.0);
  for (int t = 0; t < terms; ++t) {
    const int k = static_cast<int>(rng.range(I0.k, L - 1));
    const std::int64_t rel = rng.range(0, (std::int64_t{1} << (k - I0.k)) - 1);
    const DyadicInterval I(k, (I0.j << (k - I0.k)) + rel);
    const double c = (rng.coin() ? 1.0 : -1.0) * pow2(-static_cast<int>(rng.range(0, 4)));
    const std::size_t first = I.first_cell(L), span = I.cell_span(L);
    for (std::size_t i = 0; i < span / 2; ++i) {
      v[first + i] += c;
      v[first + span / 2 + i] -= c;
    }
  }
  return LocalizedCase{StepFunction(m, L, std::move(v)), I0};
}

/// Coefficient table with dyadic entries +-2^-r over scales [kmin, kmax]
/// and the given number of rows; each slot filled with probability 3/4.
inline CoeffMatrix random_coeff_matrix(Rng& rng, int kmin, int kmax, int rows) {
  CoeffMatrix a;
  for (int j = 0; j < rows; ++j)
    for (int k = kmin; k <= kmax; ++k) {
      if (rng.below(4) == 0) continue;
      const double c = (rng.coin() ? 1.0 : -1.0) * pow2(-static_cast<int>(rng.range(0, 3)));
      a.set(k, j, c);
    }
  return a;
}

/// Sparse spike draw: each cell independently carries +-2^r, r in [0, rmax],
/// with probability 2^-density_pow; all other cells vanish. Heavy-tailed
/// relative to its mean, so stopping-time selections fire even at large
/// height multiples, unlike the multiscale sums of random_s0.
inline StepFunction random_spikes(std::uint64_t seed, int m, int L, int density_pow, int rmax) {
  Rng rng(seed);
  const std::size_t n = std::size_t{1} << (m + L);
  std::vector<double> v(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.below(std::uint64_t{1} << density_pow) != 0) continue;
    v[i] = (rng.coin() ? 1.0 : -1.0) * pow2(static_cast<int>(rng.range(0, rmax)));
  }
  return StepFunction(m, L, std::move(v));
}

/// Deterministic family of dyadic-interval indicators: every generation k
/// from -m to L, at most 8 evenly spaced positions each.
inline std::vector<StepFunction> indicator_family(int m, int L) {
  std::vector<StepFunction> fam;
  for (int k = -m; k <= L; ++k) {
    const std::int64_t count = std::int64_t{1} << (m + k);
    const std::int64_t stride = std::max<std::int64_t>(1, count / 8);
    for (std::int64_t j = 0; j < count; j += stride)
      fam.push_back(indicator_of(DyadicInterval(k, j), m, L));
  }
  return fam;
}

/// Fixed spiky family on [0, 16) used for the weak-type stability check:
/// three one-cell spikes of constant mass (1, 1/8, 1/64) at positions 0, 4,
/// 10, plus a +-1/4 oscillation alternating at cell scale on [2, 3). The
/// L^1 norm is 1.390625 at every level, and every martingale difference at
/// scales <= 6 is the same function at every level L >= 8.
inline StepFunction spiky_family(int L) {
  if (L < 8) throw std::invalid_argument("spiky_family: requires L >= 8");
  const int m = 4;
  const std::size_t n = std::size_t{1} << (m + L);
  std::vector<double> v(n, 0.0);
  const auto cell = [L](double x) { return static_cast<std::size_t>(x * pow2(L)); };
  v[cell(0.0)] += pow2(L);
  v[cell(4.0)] -= pow2(L - 3);
  v[cell(10.0)] += pow2(L - 6);
  for (std::size_t i = cell(2.0); i < cell(3.0); ++i) v[i] += (i % 2 == 0 ? 0.25 : -0.25);
  return StepFunction(m, L, std::move(v));
}

/// Coefficient rows paired with spiky_family: four rows over scales
/// [-4, 6], signs alternating in k + j. Scale 6 < L - 1 for all L >= 8, so
/// the induced maximal function is level-independent on the family.
inline CoeffMatrix spiky_coeffs() {
  CoeffMatrix a;
  for (int j = 0; j < 4; ++j)
    for (int k = -4; k <= 6; ++k) a.set(k, j, (k + j) % 2 == 0 ? 1.0 : -1.0);
  return a;
}

}  // namespace dyadic
