#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

#include "dyadic/corpus.hpp"
#include "dyadic/experiments.hpp"

using namespace dyadic;

TEST_CASE("limsup functional on simple inputs") {
  CHECK(limsup_functional(StepFunction::indicator(0, 2, 0, 4)) == 1.0);
  CHECK(limsup_functional(StepFunction(0, 1, {0.5, 0.0})) == 0.5);
  CHECK(limsup_functional(StepFunction(0, 1, {-3.0, 1.0})) == 1.0);
  CHECK(limsup_functional(StepFunction::zero(0, 2)) == 0.0);
}

TEST_CASE("escaping-mass counterexample") {
  const auto r = counterexample_demo(3, 4);
  CHECK(r.pass);
  CHECK(r.observed.at("tail_l1").get<double>() == 0.125);
  CHECK(r.observed.at("T_limit").get<double>() == 1.0);
  CHECK(r.observed.at("sum_T_terms").get<double>() == 0.0);
  CHECK(r.observed.at("pairwise_subadditive").get<bool>());
  CHECK_FALSE(r.observed.at("countably_subadditive_here").get<bool>());

  CHECK(counterexample_demo(1, 2).observed.at("tail_l1").get<double>() == 0.5);
  // N = 0: no annuli at all, the whole unit of mass is unaccounted for.
  CHECK(counterexample_demo(0, 1).observed.at("tail_l1").get<double>() == 1.0);

  CHECK_THROWS_AS(counterexample_demo(-1, 4), std::invalid_argument);
  CHECK_THROWS_AS(counterexample_demo(3, 3), std::invalid_argument);
}

TEST_CASE("level buckets") {
  CHECK(level_bucket(0.0) == 0);
  CHECK(level_bucket(1.9) == 0);
  CHECK(level_bucket(2.0) == 1);
  CHECK(level_bucket(3.99) == 1);
  CHECK(level_bucket(4.0) == 2);
  CHECK(level_bucket(-4.0) == 2);
  CHECK(level_bucket(1023.5) == 9);
}

TEST_CASE("level set decomposition") {
  const StepFunction chi = StepFunction::indicator(0, 2, 0, 4);
  const auto d1 = level_sets(chi);
  REQUIRE(d1.pieces.size() == 1);
  CHECK(d1.pieces[0].first == 0);
  CHECK(d1.pieces[0].second.values() == chi.values());

  // 5 lands in the bucket [4, 8); the small bucket is present but empty.
  const StepFunction f(0, 2, {5.0, 0.0, 0.0, 0.0});
  const auto d2 = level_sets(f);
  REQUIRE(d2.pieces.size() == 2);
  CHECK(d2.pieces[0].first == 0);
  CHECK(lp_norm(d2.pieces[0].second, 1.0) == 0.0);
  CHECK(d2.pieces[1].first == 2);
  CHECK(d2.pieces[1].second.values() == f.values());
  CHECK(level_set_measure(f, 2) == 0.25);
  CHECK(level_set_measure(f, 0) == 0.75);
  CHECK(level_set_measure(f, 1) == 0.0);

  const auto d3 = level_sets(StepFunction::zero(1, 1));
  REQUIRE(d3.pieces.size() == 1);
  CHECK(d3.pieces[0].first == 0);

  // Pieces reconstruct f exactly on a random corpus.
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const StepFunction g = random_s0(seed, 1, 5, -4, 1);
    const auto dec = level_sets(g);
    std::vector<double> acc(g.cell_count(), 0.0);
    for (const auto& [k, piece] : dec.pieces)
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += piece[i];
    CHECK(acc == g.values());
  }
}

TEST_CASE("entropy-weighted mass") {
  CHECK(llog_functional(StepFunction::indicator(0, 3, 0, 8), 1.0) == 0.0);
  const StepFunction f(0, 1, {4.0, 0.0});
  CHECK(llog_functional(f, 1.0) == 4.0);
  CHECK(llog_functional(f, 2.0) == 8.0);
  CHECK_THROWS_AS(llog_functional(f, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(llog_functional(f, -1.0), std::invalid_argument);
}

TEST_CASE("tail constant closed forms") {
  // sum k 2^-k = 2 and sum k^2 2^-k = 6 give exact values 4 and 12.
  CHECK(std::abs(yano_tail_constant(1.0) - 4.0) < 1e-10);
  CHECK(std::abs(yano_tail_constant(2.0) - 12.0) < 1e-10);
}

TEST_CASE("summed level-set chain") {
  // Single level set of measure 1/2 in bucket 2: the chain left side is
  // 2^3 * 2 * (1/2)^{2/3}.
  const StepFunction f(0, 3, {4, 4, 4, 4, 0, 0, 0, 0});
  const auto r = yano_chain_check(f, 1.0);
  CHECK(r.pass);
  const double lhs = r.observed.at("chain_lhs").get<double>();
  const double oracle = 16.0 * std::pow(0.5, 2.0 / 3.0);
  CHECK(std::abs(lhs - oracle) <= 1e-12 * oracle);
  CHECK(std::abs(lhs - 10.0794) < 1e-3);
  CHECK(r.observed.at("young_all").get<bool>());

  // Values below 2 contribute nothing on the left.
  const auto small = yano_chain_check(StepFunction::indicator(0, 3, 2, 3), 1.0);
  CHECK(small.pass);
  CHECK(small.observed.at("chain_lhs").get<double>() == 0.0);

  CHECK_THROWS_AS(yano_chain_check(f, 0.0), std::invalid_argument);

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const StepFunction g = random_s0(seed, 1, 5, -5, 0);
    for (double alpha : {0.5, 1.0, 2.0}) {
      INFO("seed " << seed << " alpha " << alpha);
      CHECK(yano_chain_check(g, alpha).pass);
    }
  }
}

TEST_CASE("pointwise countable subadditivity") {
  Rng rng(99);
  const CoeffMatrix a = random_coeff_matrix(rng, -1, 3, 3);
  const StepFunction f = random_s0(11, 1, 5, 0, 3);

  const auto single = countable_subadd_check(a, {f});
  CHECK(single.pass);
  CHECK(single.observed.at("max_violation").get<double>() == 0.0);
  CHECK(single.observed.at("max_slack").get<double>() == 0.0);

  // f + (-f) = 0, so the left side vanishes while the right side is
  // nonnegative.
  const auto cancel = countable_subadd_check(a, {f, f.scaled(-1.0)});
  CHECK(cancel.pass);
  CHECK(cancel.observed.at("max_violation").get<double>() == 0.0);

  CHECK_THROWS_AS(countable_subadd_check(a, {}), std::invalid_argument);
}

namespace {
CoeffMatrix telescope_rows(int kmax) {
  CoeffMatrix a;
  for (int k = 0; k < kmax; ++k) a.set(k, 0, 1.0);
  return a;
}
}  // namespace

TEST_CASE("weak type certificate pipeline") {
  const CoeffMatrix a = telescope_rows(4);

  // Single row 1,1,1,1 telescopes to the difference of the finest and
  // coarsest conditional expectations, so S(f) = |f - mean| here.
  const StepFunction f(0, 4, [] {
    std::vector<double> v(16, 0.0);
    for (int i = 0; i < 4; ++i) v[static_cast<std::size_t>(i)] = 4.0;
    return v;
  }());
  const auto rep = weak11_demo(a, f, 1.0, 2.0);
  CHECK(rep.pass);
  CHECK(rep.observed.at("K_S").get<double>() == 0.9375);
  CHECK(rep.observed.at("level_set_measure").get<double>() == 0.25);
  CHECK(rep.observed.at("good_bound_ok").get<bool>());
  CHECK(rep.observed.at("bad_local_ok").get<bool>());

  // Zero input: every quantity degenerates to zero and the run passes.
  const auto zero = weak11_demo(a, StepFunction::zero(0, 4), 1.0, 2.0);
  CHECK(zero.pass);
  CHECK(zero.observed.at("certificate").get<double>() == 0.0);

  // Threshold far above the operator sup: empty level set.
  const StepFunction h = haar_atom(DyadicInterval(1, 0), 0, 4).scaled(0.5);
  const auto high = weak11_demo(a, h, 100.0, 2.0);
  CHECK(high.pass);
  CHECK(high.observed.at("level_set_measure").get<double>() == 0.0);
  CHECK(high.observed.at("certificate").get<double>() == 0.0);

  CHECK_THROWS_AS(weak11_demo(a, f, 0.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(weak11_demo(a, f, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(weak11_demo(a, f, 1.0, kInf), std::invalid_argument);
}

TEST_CASE("spiky stability family") {
  for (int L : {8, 10, 12})
    CHECK(lp_norm(spiky_family(L), 1.0) == 1.390625);
  CHECK_THROWS_AS(spiky_family(7), std::invalid_argument);

  // Every scale the coefficients touch is coarser than the cells of the
  // L = 8 member, so the maximal function does not depend on L.
  const CoeffMatrix a = spiky_coeffs();
  const StepFunction s8 = maximal_s(spiky_family(8), a);
  const StepFunction s12 = maximal_s(spiky_family(12), a);
  CHECK(s8.refined(4, 12).values() == s12.values());
}
