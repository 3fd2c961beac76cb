#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dyadic_interval.hpp"
#include "report.hpp"
#include "step_function.hpp"

namespace dyadic {

/// Finitely supported coefficient table a_{k,j}: scale k, output row j.
/// Entries are kept in deterministic (k, j) order; duplicate keys rejected.
class CoeffMatrix {
public:
  CoeffMatrix() = default;

  void set(int k, int j, double a) {
    if (!std::isfinite(a)) throw std::invalid_argument("CoeffMatrix: entries must be finite");
    if (!entries_.emplace(std::make_pair(k, j), a).second)
      throw std::invalid_argument("CoeffMatrix: duplicate (k, j) entry");
  }

  const std::map<std::pair<int, int>, double>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  int max_k() const {
    int mx = std::numeric_limits<int>::min();
    for (const auto& [kj, a] : entries_) mx = std::max(mx, kj.first);
    return mx;
  }
  int min_k() const {
    int mn = std::numeric_limits<int>::max();
    for (const auto& [kj, a] : entries_) mn = std::min(mn, kj.first);
    return mn;
  }

  /// Rows grouped by j: row -> list of (k, a).
  std::map<int, std::vector<std::pair<int, double>>> rows() const {
    std::map<int, std::vector<std::pair<int, double>>> r;
    for (const auto& [kj, a] : entries_) r[kj.second].emplace_back(kj.first, a);
    return r;
  }

private:
  std::map<std::pair<int, int>, double> entries_;
};

/// Haar function of I: +|I|^{-1/2} on the left half, -|I|^{-1/2} on the
/// right half, as a StepFunction on [0, 2^m) at resolution L >= k+1.
inline StepFunction haar(const DyadicInterval& I, int m, int L) {
  if (L < I.k + 1)
    throw std::invalid_argument("haar: level too coarse to resolve the two halves");
  if (!I.fits(m)) throw std::invalid_argument("haar: interval escapes the domain");
  const double h = std::sqrt(pow2(I.k));  // |I|^{-1/2}
  std::vector<double> v(std::size_t{1} << (m + L), 0.0);
  const std::size_t first = I.first_cell(L), span = I.cell_span(L);
  for (std::size_t i = 0; i < span / 2; ++i) {
    v[first + i] = h;
    v[first + span / 2 + i] = -h;
  }
  return StepFunction(m, L, std::move(v));
}

/// Martingale difference D_k(f) = sum over generation-k intervals I of
/// <f, h_I> h_I. On the left half of I the value is (S_l - S_r) * 2^{k-L}
/// with S_l, S_r the raw cell sums of the two halves; negated on the right
/// half. Computed this way (no square roots) the value is exact whenever
/// the cell sums are, which the dyadic corpora guarantee.
inline StepFunction martingale_diff(const StepFunction& f, int k) {
  if (k < -f.m())
    throw std::invalid_argument("martingale_diff: k below the domain's coarsest scale");
  if (f.level() < k + 1)
    throw std::invalid_argument("martingale_diff: level too coarse for scale k");
  const int L = f.level();
  const std::size_t half = std::size_t{1} << (L - k - 1);
  const double scale = pow2(k - L);
  std::vector<double> out(f.cell_count(), 0.0);
  for (std::size_t base = 0; base < f.cell_count(); base += 2 * half) {
    const double sl = detail::block_sum(f.values(), base, half);
    const double sr = detail::block_sum(f.values(), base + half, half);
    const double d = (sl - sr) * scale;
    for (std::size_t i = 0; i < half; ++i) {
      out[base + i] = d;
      out[base + half + i] = -d;
    }
  }
  return StepFunction(f.m(), L, std::move(out));
}

/// Maximal combination S(f) = max over rows j of |sum_k a_{k,j} D_k(f)|,
/// evaluated pointwise. No rows means S(f) = 0.
inline StepFunction maximal_s(const StepFunction& f, const CoeffMatrix& a) {
  if (a.empty()) return StepFunction::zero(f.m(), f.level());
  if (f.level() < a.max_k() + 1)
    throw std::invalid_argument("maximal_s: coefficient scale exceeds the resolution");
  if (a.min_k() < -f.m())
    throw std::invalid_argument("maximal_s: coefficient scale below the coarsest scale");
  std::map<int, StepFunction> diffs;
  for (const auto& [kj, coeff] : a.entries())
    if (!diffs.count(kj.first)) diffs.emplace(kj.first, martingale_diff(f, kj.first));
  std::vector<double> out(f.cell_count(), 0.0);
  std::vector<double> row(f.cell_count());
  for (const auto& [j, terms] : a.rows()) {
    std::fill(row.begin(), row.end(), 0.0);
    for (const auto& [k, coeff] : terms) {
      const StepFunction& d = diffs.at(k);
      for (std::size_t i = 0; i < row.size(); ++i) row[i] += coeff * d[i];
    }
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], std::abs(row[i]));
  }
  return StepFunction(f.m(), f.level(), std::move(out));
}

/// Checks that S(f) is supported in I0 for mean-zero f supported in I0.
///
/// Preconditions (violations throw precondition_error, distinct from a
/// failing check): every cell of f outside I0 is exactly zero, and
/// |integral of f| <= 1e-12 * ||f||_1.
///
/// The report records whether every cell of S(f) outside I0 is exactly
/// zero, and the smallest scale k with D_k(f) != 0, which must be at least
/// I0's generation.
inline VerificationReport zero_locality_check(const StepFunction& f, const CoeffMatrix& a,
                                              const DyadicInterval& I0) {
  if (!I0.fits(f.m()) || f.level() < I0.k)
    throw std::invalid_argument("zero_locality_check: I0 does not fit the domain");
  const std::size_t first = I0.first_cell(f.level());
  const std::size_t span = I0.cell_span(f.level());
  for (std::size_t i = 0; i < f.cell_count(); ++i)
    if ((i < first || i >= first + span) && f[i] != 0.0)
      throw precondition_error("zero_locality_check: f not supported in I0");
  const double l1 = lp_norm(f, 1.0);
  if (std::abs(f.integral()) > 1e-12 * l1)
    throw precondition_error("zero_locality_check: f does not have mean zero");

  const StepFunction s = maximal_s(f, a);
  double max_outside = 0.0;
  for (std::size_t i = 0; i < s.cell_count(); ++i)
    if (i < first || i >= first + span) max_outside = std::max(max_outside, std::abs(s[i]));

  std::optional<int> min_active;
  for (int k = -f.m(); k <= f.level() - 1; ++k) {
    if (!martingale_diff(f, k).is_zero()) {
      min_active = k;
      break;
    }
  }

  VerificationReport r;
  r.check = "zero_locality";
  r.params = {{"k0", I0.k}, {"j0", I0.j}, {"coeff_entries", a.entries().size()}};
  r.observed = {{"max_abs_outside", max_outside},
                {"min_active_scale", min_active ? nlohmann::json(*min_active) : nlohmann::json()}};
  r.bound = {{"max_abs_outside", 0.0}, {"min_active_scale_at_least", I0.k}};
  r.pass = (max_outside == 0.0) && (!min_active || *min_active >= I0.k);
  return r;
}

}  // namespace dyadic
