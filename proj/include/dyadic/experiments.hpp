#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "corpus.hpp"
#include "cz.hpp"
#include "haar.hpp"
#include "lorentz.hpp"
#include "report.hpp"
#include "rng.hpp"
#include "step_function.hpp"

namespace dyadic {

/// T(f) = min{1, limsup_n n * integral of |f| over [0, 1/n]}. For a step
/// function the limsup is the value of |f| on the first cell, so T is exact
/// and subadditive but fails countable subadditivity (mass can escape to 0).
inline double limsup_functional(const StepFunction& f) {
  return std::min(1.0, std::abs(f[0]));
}

/// The escaping-mass counterexample: annuli f_j = chi_{[2^-j-1, 2^-j)} for
/// j = 0..N-1 sum to chi_{[2^-N, 1)}, whose L^1 limit is chi_{[0,1)}. The
/// report certifies tail = 2^-N exactly, T(limit) = 1, sum_j T(f_j) = 0,
/// while pairwise subadditivity T(f+g) <= T(f) + T(g) holds on 100 seeded
/// pairs. T is evaluated on the canonical step representative of the
/// limit; the whole point is that T does not respect L^1 classes.
inline VerificationReport counterexample_demo(int N, int L) {
  if (N < 0) throw std::invalid_argument("counterexample_demo: N must be nonnegative");
  if (L < N + 1)
    throw std::invalid_argument("counterexample_demo: requires L >= N + 1 to resolve the annuli");
  const int m = 0;
  const std::size_t cells = std::size_t{1} << L;
  const StepFunction limit = StepFunction::indicator(m, L, 0, cells);

  double sum_T = 0.0;
  std::vector<double> partial(cells, 0.0);
  for (int j = 0; j < N; ++j) {
    const std::size_t lo = cells >> (j + 1), hi = cells >> j;
    StepFunction fj = StepFunction::indicator(m, L, lo, hi - lo);
    sum_T += limsup_functional(fj);
    for (std::size_t i = lo; i < hi; ++i) partial[i] += 1.0;
  }
  const double tail = lp_norm(limit - StepFunction(m, L, std::move(partial)), 1.0);

  Rng rng(0x5eedULL + static_cast<std::uint64_t>(N));
  bool pairwise_ok = true;
  for (int t = 0; t < 100; ++t) {
    const StepFunction f = random_s0(rng.next(), m, L, 0, 4);
    const StepFunction g = random_s0(rng.next(), m, L, 0, 4);
    if (!(limsup_functional(f + g) <= limsup_functional(f) + limsup_functional(g)))
      pairwise_ok = false;
  }

  const double T_limit = limsup_functional(limit);
  VerificationReport r;
  r.check = "counterexample";
  r.params = {{"N", N}, {"L", L}, {"note", "annuli adapted to dyadic scales; same escape to 0"}};
  r.observed = {{"tail_l1", tail},
                {"T_limit", T_limit},
                {"sum_T_terms", sum_T},
                {"pairwise_subadditive", pairwise_ok},
                {"countably_subadditive_here", !(T_limit > sum_T)}};
  r.bound = {{"tail_l1", pow2(-N)}, {"T_limit", 1.0}, {"sum_T_terms", 0.0}};
  r.pass = tail == pow2(-N) && T_limit == 1.0 && sum_T == 0.0 && pairwise_ok;
  return r;
}

/// Dyadic level sets: S_0 = {|f| < 2}, S_k = {2^k <= |f| < 2^{k+1}} for
/// k >= 1. The S_0 piece is always present; higher pieces only when the
/// level set is nonempty. Pieces sum to f exactly.
struct LevelSetDecomposition {
  std::vector<std::pair<int, StepFunction>> pieces;
};

/// Bucket of |v|: 0 when |v| < 2, else k with 2^k <= |v| < 2^{k+1}.
inline int level_bucket(double v) {
  const double a = std::abs(v);
  if (a < 2.0) return 0;
  int e;
  std::frexp(a, &e);  // a = mant * 2^e, mant in [1/2, 1)
  return e - 1;
}

inline LevelSetDecomposition level_sets(const StepFunction& f) {
  std::vector<int> buckets(f.cell_count());
  int kmax = 0;
  for (std::size_t i = 0; i < f.cell_count(); ++i) {
    buckets[i] = level_bucket(f[i]);
    kmax = std::max(kmax, buckets[i]);
  }
  LevelSetDecomposition dec;
  for (int k = 0; k <= kmax; ++k) {
    std::vector<double> v(f.cell_count(), 0.0);
    bool any = k == 0;
    for (std::size_t i = 0; i < f.cell_count(); ++i)
      if (buckets[i] == k) {
        v[i] = f[i];
        any = true;
      }
    if (any) dec.pieces.emplace_back(k, StepFunction(f.m(), f.level(), std::move(v)));
  }
  return dec;
}

/// Measure of S_k. For k = 0 the set {|f| < 2} includes cells where f
/// vanishes; for k >= 1 it is the support of the k-th piece.
inline double level_set_measure(const StepFunction& f, int k) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < f.cell_count(); ++i)
    if (level_bucket(f[i]) == k) ++count;
  return static_cast<double>(count) * f.cell_width();
}

/// Exact cell sum of |v| * (max{0, log2 |v|})^alpha * 2^-L.
inline double llog_functional(const StepFunction& f, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("llog_functional: alpha must be positive");
  double s = 0.0;
  for (double v : f.values()) {
    if (v == 0.0) continue;
    const double lg = std::max(0.0, std::log2(std::abs(v)));
    s += std::abs(v) * std::pow(lg, alpha);
  }
  return s * f.cell_width();
}

/// Tail constant C_alpha = sum_{k>=1} 2^{k+1} k^alpha 4^-k, truncated once
/// terms drop below 1e-14 (geometric decay makes the truncation error far
/// smaller than the 1e-10 comparison tolerance).
inline double yano_tail_constant(double alpha) {
  double c = 0.0;
  for (int k = 1; k < 400; ++k) {
    const double term = pow2(k + 1) * std::pow(k, alpha) * std::pow(4.0, -k);
    c += term;
    if (term < 1e-14) break;
  }
  return c;
}

/// Per-level Young inequality mu(S_k)^{k/(k+1)} <= 4 mu(S_k) + 4^-k for
/// every nonempty level set, and the summed chain
///   sum_{k>=1} 2^{k+1} k^alpha mu(S_k)^{k/(k+1)}
///     <= 8 * llog_functional(f, alpha) + C_alpha + 1e-10.
/// The per-level inequality has genuine arithmetic-geometric slack, so it
/// is compared exactly.
inline VerificationReport yano_chain_check(const StepFunction& f, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("yano_chain_check: alpha must be positive");
  const LevelSetDecomposition dec = level_sets(f);
  bool young_ok = true;
  double chain_lhs = 0.0;
  nlohmann::json per_k = nlohmann::json::array();
  for (const auto& [k, piece] : dec.pieces) {
    if (k == 0) continue;
    const double mu = level_set_measure(f, k);
    const double lhs = std::pow(mu, static_cast<double>(k) / (k + 1));
    const double rhs = 4.0 * mu + std::pow(4.0, -k);
    if (!(lhs <= rhs)) young_ok = false;
    per_k.push_back({{"k", k}, {"mu", mu}, {"young_lhs", lhs}, {"young_rhs", rhs}});
    chain_lhs += pow2(k + 1) * std::pow(k, alpha) * lhs;
  }
  const double c_alpha = yano_tail_constant(alpha);
  const double chain_rhs = 8.0 * llog_functional(f, alpha) + c_alpha;
  const bool chain_ok = chain_lhs <= chain_rhs + 1e-10;

  VerificationReport r;
  r.check = "yano_chain";
  r.params = {{"alpha", alpha}, {"levels", per_k.size()}};
  r.observed = {{"per_k", per_k},
                {"chain_lhs", chain_lhs},
                {"chain_rhs", chain_rhs},
                {"young_all", young_ok}};
  r.bound = {{"chain_abs_tol", 1e-10}, {"C_alpha", c_alpha}};
  r.pass = young_ok && chain_ok;
  return r;
}

/// Pointwise countable subadditivity of the maximal combination:
/// S(sum f_j) <= sum S(f_j) on every cell, exactly. Reports the largest
/// margin by which the right side exceeds the left and the largest
/// violation (0 when none).
inline VerificationReport countable_subadd_check(const CoeffMatrix& a,
                                                 const std::vector<StepFunction>& fs) {
  if (fs.empty()) throw std::invalid_argument("countable_subadd_check: empty sequence");
  const std::vector<double> ones(fs.size(), 1.0);
  const StepFunction total = combine(ones, fs);
  const StepFunction lhs = maximal_s(total, a);
  std::vector<double> rhs(lhs.cell_count(), 0.0);
  for (const auto& f : fs) {
    const StepFunction sf = maximal_s(f.refined(total.m(), total.level()), a);
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += sf[i];
  }
  double max_violation = 0.0, max_slack = 0.0;
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    max_violation = std::max(max_violation, lhs[i] - rhs[i]);
    max_slack = std::max(max_slack, rhs[i] - lhs[i]);
  }
  VerificationReport r;
  r.check = "countable_subadditivity";
  r.params = {{"terms", fs.size()}, {"coeff_entries", a.entries().size()}};
  r.observed = {{"max_violation", max_violation}, {"max_slack", max_slack}};
  r.bound = {{"max_violation", 0.0}};
  r.pass = max_violation <= 0.0;
  return r;
}

/// Weak-(1,1) certificate pipeline for S at one threshold lambda:
///   K_S  = empirical restricted (r,r) weak-type constant of S over the
///          deterministic indicator family of f's resolution;
///   gamma = 1 / K_S; decompose f at height gamma * lambda;
///   (a) ||S(g)||_{r,inf} <= K_S ||g||_{r,1} (rel. slack 1e-9);
///   (b) each S(b_j) vanishes outside Q_j exactly;
///   (c) certificate c = lambda |{S(f) > lambda}| / (K_S ||f||_1),
///       reported, not asserted.
inline VerificationReport weak11_demo(const CoeffMatrix& a, const StepFunction& f, double lambda,
                                      double r) {
  if (!(lambda > 0.0)) throw std::invalid_argument("weak11_demo: lambda must be positive");
  if (!(r > 1.0) || r == kInf) throw std::invalid_argument("weak11_demo: r must lie in (1, inf)");
  const Operator S = [&a](const StepFunction& g) { return maximal_s(g, a); };

  const VerificationReport wt =
      empirical_weak_type(S, indicator_family(f.m(), f.level()), r, r, WeakTypeMode::restricted);
  const double K_S = wt.observed.at("max_ratio").get<double>();
  const double gamma = 1.0 / K_S;

  const CZDecomposition dec = cz_decompose(f, gamma * lambda);

  const StepFunction Sg = maximal_s(dec.good, a);
  const double sg_weak = lorentz_norm(Sg, LorentzIndex(r, kInf));
  const double g_r1 = lorentz_norm(dec.good, LorentzIndex(r, 1.0));
  const bool good_ok = sg_weak <= K_S * g_r1 * (1.0 + 1e-9);

  bool bad_ok = true;
  const int L = f.level();
  for (const auto& [Q, b] : dec.bad) {
    const StepFunction Sb = maximal_s(b, a);
    const std::size_t first = Q.first_cell(L), span = Q.cell_span(L);
    for (std::size_t i = 0; i < Sb.cell_count(); ++i)
      if ((i < first || i >= first + span) && Sb[i] != 0.0) bad_ok = false;
  }

  const double f_l1 = lp_norm(f, 1.0);
  const double level_measure = distribution(maximal_s(f, a), lambda);
  const double certificate = f_l1 > 0.0 ? lambda * level_measure / (K_S * f_l1) : 0.0;

  VerificationReport rep;
  rep.check = "weak11";
  rep.params = {{"lambda", lambda}, {"r", r}, {"m", f.m()}, {"level", L},
                {"cubes", dec.bad.size()}};
  rep.observed = {{"K_S", K_S},
                  {"gamma", gamma},
                  {"S_good_weak", sg_weak},
                  {"good_r1", g_r1},
                  {"good_bound_ok", good_ok},
                  {"bad_local_ok", bad_ok},
                  {"level_set_measure", level_measure},
                  {"certificate", certificate}};
  rep.bound = {{"S_good_weak", K_S * g_r1}, {"rel_tol", 1e-9}};
  rep.pass = good_ok && bad_ok;
  return rep;
}

}  // namespace dyadic
