#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "report.hpp"
#include "step_function.hpp"

namespace dyadic {

/// Index pair (p, q) for the Lorentz space L^{p,q}. Either entry may be
/// infinite; p = inf with finite q is rejected where it is degenerate.
struct LorentzIndex {
  double p;
  double q;

  LorentzIndex(double p_, double q_) : p(p_), q(q_) {
    if (!(p > 0.0) || !(q > 0.0))
      throw std::invalid_argument("LorentzIndex: p and q must be positive");
  }
};

/// Lorentz quasi-norm of a decreasing profile.
///
/// For finite p, q this is the exact integral of (t^{1/p} f*(t))^q dt/t over
/// the step profile:
///   ( sum_i v_i^q (p/q) (t_{i+1}^{q/p} - t_i^{q/p}) )^{1/q}.
/// For q = inf it is max_i v_i t_{i+1}^{1/p} (the weak-L^p functional), and
/// L^{inf,inf} is the sup norm. L^{inf,q} with finite q contains only the
/// zero function, so that index pair is rejected.
inline double lorentz_norm(const DecreasingProfile& prof, LorentzIndex idx) {
  const double p = idx.p, q = idx.q;
  if (p == kInf && q != kInf)
    throw std::domain_error("lorentz_norm: L^{inf,q} with finite q is degenerate");
  if (prof.empty()) return 0.0;
  if (p == kInf) return prof.values().front();
  const auto& t = prof.breakpoints();
  const auto& v = prof.values();
  if (q == kInf) {
    double mx = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
      mx = std::max(mx, v[i] * std::pow(t[i + 1], 1.0 / p));
    return mx;
  }
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += std::pow(v[i], q) * (p / q) * (std::pow(t[i + 1], q / p) - std::pow(t[i], q / p));
  return std::pow(s, 1.0 / q);
}

inline double lorentz_norm(const StepFunction& f, LorentzIndex idx) {
  return lorentz_norm(rearrange(f), idx);
}

/// Closed form of the quasi-norm of an indicator of measure mu:
/// (p/q)^{1/q} mu^{1/p}, with the natural limits at infinite indices.
inline double indicator_lorentz_norm(LorentzIndex idx, double mu) {
  if (!(mu >= 0.0)) throw std::invalid_argument("indicator_lorentz_norm: mu must be >= 0");
  if (idx.p == kInf && idx.q != kInf)
    throw std::domain_error("indicator_lorentz_norm: L^{inf,q} with finite q is degenerate");
  if (mu == 0.0) return 0.0;
  if (idx.p == kInf) return 1.0;
  const double base = std::pow(mu, 1.0 / idx.p);
  if (idx.q == kInf) return base;
  return std::pow(idx.p / idx.q, 1.0 / idx.q) * base;
}

/// ||f||_{p,r} / ||f||_{p,q} for q < r, the direction in which the norm can
/// only shrink (L^{p,q} embeds into L^{p,r}). Indicators maximize this
/// ratio, where it equals (p/r)^{1/r} / (p/q)^{1/q}.
inline double nesting_ratio(const StepFunction& f, double p, double q, double r) {
  if (!(q > 0.0) || !(q < r)) throw std::invalid_argument("nesting_ratio: requires 0 < q < r");
  if (f.is_zero())
    throw std::invalid_argument("nesting_ratio: undefined for the zero function");
  const DecreasingProfile prof = rearrange(f);
  return lorentz_norm(prof, LorentzIndex(p, r)) / lorentz_norm(prof, LorentzIndex(p, q));
}

/// Value of the nesting ratio on indicators; the measure cancels since p is
/// shared between numerator and denominator.
inline double indicator_nesting_ratio(double p, double q, double r) {
  if (!(q > 0.0) || !(q < r)) throw std::invalid_argument("indicator_nesting_ratio: requires 0 < q < r");
  const double num = (r == kInf) ? 1.0 : std::pow(p / r, 1.0 / r);
  return num / std::pow(p / q, 1.0 / q);
}

/// Split of f at the height f*(1).
///
/// `large` keeps the cells where |f| exceeds f*(1) and `flat` is the
/// remainder, so large + flat = f cell by cell. Construction guarantees
/// (and the constructor path re-checks) the profile dominations
///   large*(t) <= f*(t) for t < 1,  large*(t) = 0 for t >= 1,
///   flat*(t)  <= min(f*(1), f*(t)),
/// exactly at every profile breakpoint.
struct HuntSplit {
  StepFunction large;
  StepFunction flat;
  double cut;  // f*(1)
};

/// Evaluates the two dominations above on the union of breakpoints of all
/// three profiles plus t = 1. Returns {large_ok, flat_ok}.
inline std::pair<bool, bool> hunt_dominations(const StepFunction& f, const HuntSplit& s) {
  const DecreasingProfile pf = rearrange(f);
  const DecreasingProfile p0 = rearrange(s.large);
  const DecreasingProfile p1 = rearrange(s.flat);
  std::vector<double> grid{1.0};
  for (const auto* prof : {&pf, &p0, &p1})
    grid.insert(grid.end(), prof->breakpoints().begin(), prof->breakpoints().end());
  bool large_ok = true, flat_ok = true;
  for (double t : grid) {
    const double fs = pf.value(t);
    if (!(p0.value(t) <= (t < 1.0 ? fs : 0.0))) large_ok = false;
    if (!(p1.value(t) <= std::min(s.cut, fs))) flat_ok = false;
  }
  return {large_ok, flat_ok};
}

inline HuntSplit hunt_split(const StepFunction& f) {
  const double cut = rearrange(f).value(1.0);
  std::vector<double> big(f.cell_count(), 0.0), rest(f.cell_count(), 0.0);
  for (std::size_t i = 0; i < f.cell_count(); ++i) {
    if (std::abs(f[i]) > cut)
      big[i] = f[i];
    else
      rest[i] = f[i];
  }
  HuntSplit s{StepFunction(f.m(), f.level(), std::move(big)),
              StepFunction(f.m(), f.level(), std::move(rest)), cut};
  const auto [large_ok, flat_ok] = hunt_dominations(f, s);
  if (!large_ok || !flat_ok)
    throw std::logic_error("hunt_split: profile domination violated");
  return s;
}

/// Exponent alpha = log 2 / log(2K) for which a quasi-norm with constant K
/// becomes alpha-subadditive, i.e. (2K)^alpha = 2.
inline double alpha_for(double K) {
  if (!(K >= 1.0)) throw std::invalid_argument("alpha_for: K must be >= 1");
  return std::log(2.0) / std::log(2.0 * K);
}

/// A quasi-norm index with its quasi-triangle constant K and the matching
/// subadditivity exponent alpha, (2K)^alpha = 2.
struct QuasiNormProfile {
  LorentzIndex index;
  double K;
  double alpha;

  QuasiNormProfile(LorentzIndex idx, double K_) : index(idx), K(K_), alpha(alpha_for(K_)) {
    if (!(alpha > 0.0) || !(alpha <= 1.0))
      throw std::invalid_argument("QuasiNormProfile: alpha out of (0,1]");
    if (std::abs(std::pow(2.0 * K, alpha) - 2.0) > 1e-12 * 2.0)
      throw std::invalid_argument("QuasiNormProfile: (2K)^alpha != 2");
  }
};

/// Largest observed ||f+g||_{p,q} / (||f||_{p,q} + ||g||_{p,q}) over the
/// sample pairs, clamped below by 1 so the result is always a usable
/// quasi-triangle constant for the sampled pairs.
inline double estimate_quasi_constant(
    const std::vector<std::pair<StepFunction, StepFunction>>& corpus, LorentzIndex idx) {
  if (corpus.empty()) throw std::invalid_argument("estimate_quasi_constant: empty corpus");
  double K = 1.0;
  for (const auto& [f, g] : corpus) {
    const double denom = lorentz_norm(f, idx) + lorentz_norm(g, idx);
    if (denom == 0.0)
      throw std::invalid_argument("estimate_quasi_constant: pair with both norms zero");
    K = std::max(K, lorentz_norm(f + g, idx) / denom);
  }
  return K;
}

/// Power-sum comparison with alpha = log 2 / log(2K):
/// ||sum_j f_j||^alpha <= 4 sum_j ||f_j||^alpha, at relative slack 1e-9.
inline VerificationReport series_quasi_check(const std::vector<StepFunction>& fs,
                                             LorentzIndex idx, double K) {
  if (fs.empty()) throw std::invalid_argument("series_quasi_check: empty series");
  const double alpha = alpha_for(K);
  const std::vector<double> ones(fs.size(), 1.0);
  const double lhs = std::pow(lorentz_norm(combine(ones, fs), idx), alpha);
  double rhs = 0.0;
  for (const auto& f : fs) rhs += std::pow(lorentz_norm(f, idx), alpha);
  rhs *= 4.0;
  VerificationReport r;
  r.check = "series_quasi_check";
  r.params = {{"p", json_num(idx.p)}, {"q", json_num(idx.q)}, {"K", K},
              {"alpha", alpha}, {"terms", fs.size()}};
  r.observed = {{"lhs", lhs}, {"rhs", rhs}};
  r.bound = {{"rel_tol", 1e-9}};
  r.pass = lhs <= rhs * (1.0 + 1e-9);
  return r;
}

}  // namespace dyadic
