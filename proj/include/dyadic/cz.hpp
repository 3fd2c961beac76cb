#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dyadic_interval.hpp"
#include "kernels.hpp"
#include "lorentz.hpp"
#include "report.hpp"
#include "step_function.hpp"

namespace dyadic {

/// Stopping-time decomposition f = good + sum of bad parts. Each bad part
/// b_j is supported in its cube Q_j and has mean zero; good equals f off
/// the cubes and the cube average on each cube.
struct CZDecomposition {
  StepFunction good;
  std::vector<std::pair<DyadicInterval, StepFunction>> bad;
  double height;
  int n = 1;  // dimension marker; all 2^n constants instantiated at n = 1
};

/// Average of f over the cube, via raw cell sums: sum * 2^{k-L}. Exact for
/// dyadic corpora; used consistently by decomposition and verification.
inline double cube_average(const StepFunction& f, const DyadicInterval& Q, bool absolute) {
  const std::size_t first = Q.first_cell(f.level());
  const std::size_t span = Q.cell_span(f.level());
  double s = 0.0;
  if (absolute) {
    for (std::size_t i = first; i < first + span; ++i) s += std::abs(f[i]);
  } else {
    s = detail::block_sum(f.values(), first, span);
  }
  return s * pow2(Q.k - f.level());
}

/// Maximal dyadic cubes Q with average of |f| over Q exceeding height,
/// found by descending from the root [0, 2^m). The root itself must have
/// average <= height.
inline CZDecomposition cz_decompose(const StepFunction& f, double height) {
  if (!(height > 0.0)) throw std::invalid_argument("cz_decompose: height must be positive");
  const DyadicInterval root(-f.m(), 0);
  if (cube_average(f, root, true) > height)
    throw std::invalid_argument(
        "cz_decompose: average of |f| over the whole domain exceeds the height; "
        "increase the domain exponent m");
  std::vector<DyadicInterval> cubes;
  std::vector<DyadicInterval> stack{root};
  while (!stack.empty()) {
    const DyadicInterval Q = stack.back();
    stack.pop_back();
    if (Q.k >= f.level()) continue;  // cells cannot be subdivided further
    for (int side = 1; side >= 0; --side) {
      const DyadicInterval C = Q.child(side);
      if (cube_average(f, C, true) > height)
        cubes.push_back(C);
      else
        stack.push_back(C);
    }
  }
  // Deterministic order: by position.
  std::sort(cubes.begin(), cubes.end(), [](const DyadicInterval& a, const DyadicInterval& b) {
    return a.left() < b.left();
  });

  std::vector<double> g(f.values());
  std::vector<std::pair<DyadicInterval, StepFunction>> bad;
  bad.reserve(cubes.size());
  for (const DyadicInterval& Q : cubes) {
    const double avg = cube_average(f, Q, false);
    const std::size_t first = Q.first_cell(f.level());
    const std::size_t span = Q.cell_span(f.level());
    std::vector<double> b(f.cell_count(), 0.0);
    for (std::size_t i = first; i < first + span; ++i) {
      b[i] = f[i] - avg;
      g[i] = avg;
    }
    bad.emplace_back(Q, StepFunction(f.m(), f.level(), std::move(b)));
  }
  return CZDecomposition{StepFunction(f.m(), f.level(), std::move(g)), std::move(bad), height};
}

/// One line per decomposition inequality:
///   sup |g| <= 2^n * height              (exact)
///   ||g||_1 <= ||f||_1                   (exact)
///   |integral of b_j| <= 1e-12 ||f||_1   (per cube)
///   ||b_j||_1 <= 2^{n+1} height |Q_j|    (exact, per cube)
///   sum |Q_j| <= ||f||_1 / height        (exact)
inline VerificationReport verify_cz(const StepFunction& f, const CZDecomposition& dec) {
  if (dec.good.m() != f.m() || dec.good.level() != f.level())
    throw std::invalid_argument("verify_cz: decomposition shape does not match f");
  const double h = dec.height;
  const double f_l1 = lp_norm(f, 1.0);
  const double mean_tol = 1e-12 * f_l1;
  const double two_n = pow2(dec.n);

  const double g_sup = lp_norm(dec.good, kInf);
  const double g_l1 = lp_norm(dec.good, 1.0);
  double b_mean_max = 0.0;
  bool b_l1_ok = true;
  double b_l1_worst = 0.0;  // largest ||b_j||_1 / (2^{n+1} h |Q_j|)
  double cube_measure = 0.0;
  for (const auto& [Q, b] : dec.bad) {
    b_mean_max = std::max(b_mean_max, std::abs(b.integral()));
    const double cap = 2.0 * two_n * h * Q.length();
    const double bl1 = lp_norm(b, 1.0);
    if (bl1 > cap) b_l1_ok = false;
    b_l1_worst = std::max(b_l1_worst, bl1 / cap);
    cube_measure += Q.length();
  }

  const bool g_sup_ok = g_sup <= two_n * h;
  const bool g_l1_ok = g_l1 <= f_l1;
  const bool b_mean_ok = b_mean_max <= mean_tol;
  const bool cubes_ok = cube_measure <= f_l1 / h;

  VerificationReport r;
  r.check = "cz_inequalities";
  r.params = {{"height", h}, {"n", dec.n}, {"cubes", dec.bad.size()}};
  r.observed = {{"g_sup", g_sup},
                {"g_l1", g_l1},
                {"b_mean_max", b_mean_max},
                {"b_l1_worst_ratio", b_l1_worst},
                {"cube_measure", cube_measure},
                {"lines",
                 {{"g_sup_le", g_sup_ok},
                  {"g_l1_le", g_l1_ok},
                  {"b_mean_zero", b_mean_ok},
                  {"b_l1_le", b_l1_ok},
                  {"cube_measure_le", cubes_ok}}}};
  r.bound = {{"g_sup", two_n * h},
             {"g_l1", f_l1},
             {"b_mean_max", mean_tol},
             {"b_l1_worst_ratio", 1.0},
             {"cube_measure", h > 0.0 ? f_l1 / h : 0.0}};
  r.pass = g_sup_ok && g_l1_ok && b_mean_ok && b_l1_ok && cubes_ok;
  return r;
}

/// Structural checks beyond the displayed inequalities: exact
/// reconstruction, pairwise disjoint cubes, per-cube support, stopping-time
/// maximality (parent average <= height < cube average) and the height
/// bracket (cube average <= 2 * height).
inline VerificationReport cz_structure_check(const StepFunction& f, const CZDecomposition& dec) {
  if (dec.good.m() != f.m() || dec.good.level() != f.level())
    throw std::invalid_argument("cz_structure_check: decomposition shape does not match f");
  const int L = f.level();

  std::vector<double> acc(dec.good.values());
  for (const auto& [Q, b] : dec.bad)
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += b[i];
  bool reconstruct_ok = true;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (acc[i] != f[i]) reconstruct_ok = false;

  bool disjoint_ok = true;
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  for (const auto& [Q, b] : dec.bad)
    spans.emplace_back(Q.first_cell(L), Q.first_cell(L) + Q.cell_span(L));
  std::sort(spans.begin(), spans.end());
  for (std::size_t i = 1; i < spans.size(); ++i)
    if (spans[i].first < spans[i - 1].second) disjoint_ok = false;

  bool support_ok = true;
  for (const auto& [Q, b] : dec.bad) {
    const std::size_t first = Q.first_cell(L), span = Q.cell_span(L);
    for (std::size_t i = 0; i < b.cell_count(); ++i)
      if ((i < first || i >= first + span) && b[i] != 0.0) support_ok = false;
  }

  bool maximal_ok = true, bracket_ok = true;
  for (const auto& [Q, b] : dec.bad) {
    const double avg = cube_average(f, Q, true);
    if (!(avg > dec.height)) maximal_ok = false;
    if (!(avg <= 2.0 * dec.height)) bracket_ok = false;
    if (Q.k > -f.m() && !(cube_average(f, Q.parent(), true) <= dec.height)) maximal_ok = false;
  }

  VerificationReport r;
  r.check = "cz_structure";
  r.params = {{"height", dec.height}, {"cubes", dec.bad.size()}};
  r.observed = {{"reconstruction_exact", reconstruct_ok},
                {"cubes_disjoint", disjoint_ok},
                {"bad_supported", support_ok},
                {"cubes_maximal", maximal_ok},
                {"height_bracket", bracket_ok}};
  r.bound = {{"all", true}};
  r.pass = reconstruct_ok && disjoint_ok && support_ok && maximal_ok && bracket_ok;
  return r;
}

/// L^1 mass of h outside the concentric dilate of Q (side factor * side(Q)).
inline double l1_outside_dilate(const StepFunction& h, const DyadicInterval& Q, double factor) {
  const double c = 0.5 * (Q.left() + Q.right());
  const double half = 0.5 * factor * Q.length();
  const double w = h.cell_width();
  double s = 0.0;
  for (std::size_t i = 0; i < h.cell_count(); ++i) {
    const double mid = (static_cast<double>(i) + 0.5) * w;
    if (mid < c - half || mid > c + half) s += std::abs(h[i]);
  }
  return s * w;
}

/// L^1 mass, over the cells outside the dilate of Q, of the kernel applied
/// to b (midpoint quadrature; b is supported in Q, so the diagonal never
/// occurs). Equals l1_outside_dilate(apply_kernel(K, b), Q, factor) but
/// only touches the cells where b is nonzero.
inline double kernel_l1_outside(const KernelSpec& K, const StepFunction& b,
                                const DyadicInterval& Q, double factor) {
  const double c = 0.5 * (Q.left() + Q.right());
  const double half = 0.5 * factor * Q.length();
  const double w = b.cell_width();
  const std::size_t first = Q.first_cell(b.level()), span = Q.cell_span(b.level());
  double total = 0.0;
  for (std::size_t i = 0; i < b.cell_count(); ++i) {
    const double x = (static_cast<double>(i) + 0.5) * w;
    if (x >= c - half && x <= c + half) continue;
    double s = 0.0;
    for (std::size_t y = first; y < first + span; ++y) {
      if (b[y] == 0.0) continue;
      s += K.eval(x, (static_cast<double>(y) + 0.5) * w) * b[y];
    }
    total += std::abs(s) * w;
  }
  return total * w;
}

enum class WeakTypeMode { full, restricted };

using Operator = std::function<StepFunction(const StepFunction&)>;

/// Largest observed weak-type ratio of the operator over the inputs:
///   full mode:        ||op(f)||_{q,inf} / ||f||_p
///   restricted mode:  ||op(chi_A)||_{q,inf} / mu(A)^{1/p}, inputs must be
///                     indicator functions.
/// The report records the ratio and which input attained it; it is an
/// estimate, not a pass/fail check, so pass is always true.
inline VerificationReport empirical_weak_type(const Operator& op,
                                              const std::vector<StepFunction>& inputs, double p,
                                              double q, WeakTypeMode mode) {
  if (inputs.empty()) throw std::invalid_argument("empirical_weak_type: empty corpus");
  double max_ratio = 0.0;
  std::size_t argmax = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const StepFunction& f = inputs[i];
    double denom;
    if (mode == WeakTypeMode::restricted) {
      for (double v : f.values())
        if (v != 0.0 && v != 1.0)
          throw std::invalid_argument("empirical_weak_type: restricted mode needs indicators");
      const double mu = f.integral();
      if (mu == 0.0) throw std::invalid_argument("empirical_weak_type: zero corpus element");
      denom = std::pow(mu, 1.0 / p);
    } else {
      denom = lp_norm(f, p);
      if (denom == 0.0) throw std::invalid_argument("empirical_weak_type: zero corpus element");
    }
    const double ratio = lorentz_norm(op(f), LorentzIndex(q, kInf)) / denom;
    if (ratio > max_ratio) {
      max_ratio = ratio;
      argmax = i;
    }
  }
  VerificationReport r;
  r.check = "empirical_weak_type";
  r.params = {{"p", json_num(p)},
              {"q", json_num(q)},
              {"mode", mode == WeakTypeMode::full ? "full" : "restricted"},
              {"corpus_size", inputs.size()}};
  r.observed = {{"max_ratio", max_ratio}, {"argmax_index", argmax}};
  r.bound = nlohmann::json::object();
  r.pass = true;
  return r;
}

}  // namespace dyadic
