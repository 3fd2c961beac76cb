#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dyadic {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Thrown when a verification routine's stated precondition fails. Distinct
// from a check that ran and reported a failing result.
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// 2^e as a double, exact.
inline double pow2(int e) { return std::ldexp(1.0, e); }

namespace detail {

/// Balanced pairwise sum of v[first .. first+count). All callers pass
/// power-of-2 counts aligned to dyadic blocks, so sums of Haar-type
/// functions cancel exactly (doubling is exact) and sums of short-mantissa
/// dyadic values stay exact under the regrouping.
inline double block_sum(const std::vector<double>& v, std::size_t first, std::size_t count) {
  if (count == 1) return v[first];
  const std::size_t half = count / 2;
  return block_sum(v, first, half) + block_sum(v, first + half, count - half);
}

}  // namespace detail

/// Dyadic step function on [0, 2^m) with cells of width 2^-level.
///
/// The function equals values[i] on [i*2^-level, (i+1)*2^-level) and vanishes
/// outside the domain. Cell measures and refinements are powers of two, so
/// every measure-theoretic quantity derived from cell counting is exact in
/// binary floating point.
class StepFunction {
public:
  StepFunction(int m, int level, std::vector<double> values)
      : m_(m), level_(level), values_(std::move(values)) {
    if (m_ < 0 || level_ < 0)
      throw std::invalid_argument("StepFunction: m and level must be nonnegative");
    if (m_ + level_ > 30)
      throw std::invalid_argument("StepFunction: m + level too large");
    if (values_.size() != (std::size_t{1} << (m_ + level_)))
      throw std::invalid_argument("StepFunction: values must have 2^(m+level) entries");
    for (double v : values_)
      if (!std::isfinite(v))
        throw std::invalid_argument("StepFunction: values must be finite");
  }

  static StepFunction zero(int m, int level) {
    return StepFunction(m, level, std::vector<double>(std::size_t{1} << (m + level), 0.0));
  }

  /// Indicator of the cell range [first, first+count) at the given resolution.
  static StepFunction indicator(int m, int level, std::size_t first, std::size_t count) {
    std::vector<double> v(std::size_t{1} << (m + level), 0.0);
    if (first + count > v.size())
      throw std::invalid_argument("StepFunction::indicator: cell range out of domain");
    std::fill(v.begin() + static_cast<std::ptrdiff_t>(first),
              v.begin() + static_cast<std::ptrdiff_t>(first + count), 1.0);
    return StepFunction(m, level, std::move(v));
  }

  int m() const { return m_; }
  int level() const { return level_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t cell_count() const { return values_.size(); }
  double cell_width() const { return pow2(-level_); }
  double domain_measure() const { return pow2(m_); }

  double operator[](std::size_t i) const { return values_[i]; }

  /// Point evaluation; 0 outside [0, 2^m).
  double operator()(double x) const {
    if (x < 0.0 || x >= domain_measure()) return 0.0;
    auto i = static_cast<std::size_t>(x * pow2(level_));
    return values_[std::min(i, values_.size() - 1)];
  }

  bool is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
  }

  /// Same function represented on a finer grid / larger domain. Exact.
  StepFunction refined(int new_m, int new_level) const {
    if (new_m < m_ || new_level < level_)
      throw std::invalid_argument("StepFunction::refined: resolution may only increase");
    if (new_m == m_ && new_level == level_) return *this;
    const int shift = new_level - level_;
    std::vector<double> v(std::size_t{1} << (new_m + new_level), 0.0);
    const std::size_t covered = cell_count() << shift;
    for (std::size_t i = 0; i < covered; ++i) v[i] = values_[i >> shift];
    return StepFunction(new_m, new_level, std::move(v));
  }

  /// Integral over the domain: pairwise cell sum times cell width, so
  /// mean-zero dyadic blocks cancel exactly.
  double integral() const { return detail::block_sum(values_, 0, values_.size()) * cell_width(); }

  StepFunction abs() const {
    std::vector<double> v(values_);
    for (double& x : v) x = std::abs(x);
    return StepFunction(m_, level_, std::move(v));
  }

  StepFunction scaled(double c) const {
    std::vector<double> v(values_);
    for (double& x : v) x *= c;
    return StepFunction(m_, level_, std::move(v));
  }

  friend bool operator==(const StepFunction& a, const StepFunction& b) {
    return a.m_ == b.m_ && a.level_ == b.level_ && a.values_ == b.values_;
  }

private:
  int m_;
  int level_;
  std::vector<double> values_;
};

/// Sum of coeffs[i] * fs[i], refined to the common resolution
/// (max level, max m). Exact for dyadic data.
inline StepFunction combine(const std::vector<double>& coeffs,
                            const std::vector<StepFunction>& fs) {
  if (fs.empty()) throw std::invalid_argument("combine: empty function list");
  if (coeffs.size() != fs.size())
    throw std::invalid_argument("combine: coefficient/function length mismatch");
  int m = 0, level = 0;
  for (const auto& f : fs) {
    m = std::max(m, f.m());
    level = std::max(level, f.level());
  }
  std::vector<double> acc(std::size_t{1} << (m + level), 0.0);
  for (std::size_t t = 0; t < fs.size(); ++t) {
    const StepFunction r = fs[t].refined(m, level);
    const double c = coeffs[t];
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * r[i];
  }
  return StepFunction(m, level, std::move(acc));
}

inline StepFunction operator+(const StepFunction& a, const StepFunction& b) {
  return combine({1.0, 1.0}, {a, b});
}

inline StepFunction operator-(const StepFunction& a, const StepFunction& b) {
  return combine({1.0, -1.0}, {a, b});
}

inline StepFunction operator*(double c, const StepFunction& f) { return f.scaled(c); }

/// Distribution function: Lebesgue measure of {x : |f(x)| > s}. Exact.
inline double distribution(const StepFunction& f, double s) {
  if (s < 0.0) throw std::invalid_argument("distribution: s must be nonnegative");
  std::size_t count = 0;
  for (double v : f.values())
    if (std::abs(v) > s) ++count;
  return static_cast<double>(count) * f.cell_width();
}

/// Decreasing rearrangement f* as a right-continuous decreasing step profile.
///
/// Equals values[i] on [breakpoints[i], breakpoints[i+1]) and 0 on
/// [breakpoints.back(), inf). Values are strictly decreasing and positive;
/// zero cells of f contribute nothing.
class DecreasingProfile {
public:
  DecreasingProfile() : breakpoints_{0.0} {}

  DecreasingProfile(std::vector<double> breakpoints, std::vector<double> values)
      : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (breakpoints_.empty() || breakpoints_.front() != 0.0)
      throw std::invalid_argument("DecreasingProfile: breakpoints must start at 0");
    if (breakpoints_.size() != values_.size() + 1)
      throw std::invalid_argument("DecreasingProfile: need one more breakpoint than value");
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
      if (!(breakpoints_[i] < breakpoints_[i + 1]))
        throw std::invalid_argument("DecreasingProfile: breakpoints must increase");
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!(values_[i] > 0.0))
        throw std::invalid_argument("DecreasingProfile: values must be positive");
      if (i > 0 && !(values_[i] < values_[i - 1]))
        throw std::invalid_argument("DecreasingProfile: values must strictly decrease");
    }
  }

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t steps() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  /// Measure of the support of f*, i.e. the last breakpoint.
  double support_measure() const { return breakpoints_.back(); }

  /// f*(t), right-continuous; 0 for t >= support_measure().
  double value(double t) const {
    if (t < 0.0) throw std::invalid_argument("DecreasingProfile::value: t must be >= 0");
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
    auto idx = static_cast<std::size_t>(it - breakpoints_.begin());
    return idx > values_.size() ? 0.0 : values_[idx - 1];
  }

  /// Measure of {t : f*(t) > s}; equals distribution(f, s) by equimeasurability.
  double measure_above(double s) const {
    std::size_t i = 0;
    while (i < values_.size() && values_[i] > s) ++i;
    return breakpoints_[i];
  }

private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

/// Decreasing rearrangement of f: sort |cell values| in decreasing order with
/// their cell measures, merging equal values into one step.
inline DecreasingProfile rearrange(const StepFunction& f) {
  std::vector<double> mags;
  mags.reserve(f.cell_count());
  for (double v : f.values())
    if (v != 0.0) mags.push_back(std::abs(v));
  std::sort(mags.begin(), mags.end(), std::greater<>());
  std::vector<double> breakpoints{0.0};
  std::vector<double> values;
  const double w = f.cell_width();
  std::size_t i = 0, total = 0;
  while (i < mags.size()) {
    std::size_t j = i;
    while (j < mags.size() && mags[j] == mags[i]) ++j;
    total += j - i;
    values.push_back(mags[i]);
    breakpoints.push_back(static_cast<double>(total) * w);
    i = j;
  }
  return DecreasingProfile(std::move(breakpoints), std::move(values));
}

/// L^p quasi-norm of the profile: (sum v_i^p (t_{i+1}-t_i))^{1/p}, max for p=inf.
inline double lp_norm(const DecreasingProfile& prof, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("lp_norm: p must be positive");
  if (prof.empty()) return 0.0;
  if (p == kInf) return prof.values().front();
  double s = 0.0;
  for (std::size_t i = 0; i < prof.steps(); ++i) {
    const double dt = prof.breakpoints()[i + 1] - prof.breakpoints()[i];
    s += std::pow(prof.values()[i], p) * dt;
  }
  return p == 1.0 ? s : std::pow(s, 1.0 / p);
}

/// L^p quasi-norm of f, 0 < p <= inf.
inline double lp_norm(const StepFunction& f, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("lp_norm: p must be positive");
  if (p == kInf) {
    double mx = 0.0;
    for (double v : f.values()) mx = std::max(mx, std::abs(v));
    return mx;
  }
  double s = 0.0;
  for (double v : f.values())
    if (v != 0.0) s += std::pow(std::abs(v), p);
  s *= f.cell_width();
  return p == 1.0 ? s : std::pow(s, 1.0 / p);
}

}  // namespace dyadic
