#include <catch2/catch_amalgamated.hpp>

#include "dyadic.hpp"

using namespace dyadic;

namespace {

// 3 on [0,1/4), 1 on [1/4,1/2), 0 on [1/2,1).
StepFunction two_step() { return StepFunction(0, 2, {3.0, 1.0, 0.0, 0.0}); }

}  // namespace

TEST_CASE("construction validates shape and values") {
  CHECK_NOTHROW(StepFunction(0, 0, {1.0}));
  CHECK_THROWS_AS(StepFunction(-1, 0, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(StepFunction(0, -1, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(StepFunction(0, 1, {1.0}), std::invalid_argument);  // needs 2 cells
  CHECK_THROWS_AS(StepFunction(0, 0, {kInf}), std::invalid_argument);
  CHECK_THROWS_AS(StepFunction(20, 20, std::vector<double>(4, 0.0)), std::invalid_argument);
}

TEST_CASE("indicator factory and point evaluation") {
  const StepFunction f = StepFunction::indicator(1, 2, 1, 3);  // [1/4, 1) within [0, 2)
  CHECK(f.cell_count() == 8);
  CHECK(f(0.3) == 1.0);
  CHECK(f(0.1) == 0.0);
  CHECK(f(1.0) == 0.0);
  CHECK(f(-0.5) == 0.0);
  CHECK(f(2.5) == 0.0);
  CHECK(f.integral() == 0.75);
}

TEST_CASE("combine: cancellation, partition, refine-then-add") {
  const StepFunction f = two_step();
  CHECK(combine({1.0, -1.0}, {f, f}).is_zero());

  const StepFunction left = StepFunction::indicator(0, 1, 0, 1);
  const StepFunction right = StepFunction::indicator(0, 1, 1, 1);
  CHECK(combine({1.0, 1.0}, {left, right}) == StepFunction(0, 1, {1.0, 1.0}));

  const StepFunction quarter = StepFunction::indicator(0, 2, 0, 1);
  const StepFunction half = StepFunction::indicator(0, 1, 0, 1);
  CHECK(combine({2.0, 1.0}, {quarter, half}) == StepFunction(0, 2, {3.0, 1.0, 0.0, 0.0}));

  CHECK_THROWS_AS(combine({1.0}, {f, f}), std::invalid_argument);
  CHECK_THROWS_AS(combine({}, {}), std::invalid_argument);
}

TEST_CASE("combine with identity coefficients reproduces the input") {
  const StepFunction f = random_s0(7, 1, 6, 0, 4);
  CHECK(combine({1.0}, {f}) == f);
  CHECK(f.refined(f.m(), f.level() + 2).refined(f.m(), f.level() + 2) ==
        f.refined(f.m(), f.level() + 2));
}

TEST_CASE("distribution counts cells exactly") {
  const StepFunction f = two_step();
  CHECK(distribution(f, 0.5) == 0.5);
  CHECK(distribution(f, 2.0) == 0.25);
  CHECK(distribution(f, 3.0) == 0.0);
  CHECK(distribution(f, 0.0) == 0.5);
  CHECK_THROWS_AS(distribution(f, -1.0), std::invalid_argument);
}

TEST_CASE("rearrange: sort, zero case, translation invariance") {
  const DecreasingProfile p = rearrange(two_step());
  REQUIRE(p.breakpoints() == std::vector<double>{0.0, 0.25, 0.5});
  REQUIRE(p.values() == std::vector<double>{3.0, 1.0});
  CHECK(p.value(0.0) == 3.0);
  CHECK(p.value(0.25) == 1.0);  // right-continuous at the breakpoint
  CHECK(p.value(0.5) == 0.0);

  CHECK(rearrange(StepFunction::zero(0, 2)).empty());

  const DecreasingProfile q = rearrange(StepFunction::indicator(0, 1, 1, 1));
  REQUIRE(q.values() == std::vector<double>{1.0});
  REQUIRE(q.breakpoints() == std::vector<double>{0.0, 0.5});
}

TEST_CASE("profile validation") {
  CHECK_THROWS_AS(DecreasingProfile({0.0, 1.0}, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(DecreasingProfile({0.0, 1.0, 0.5}, {2.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(DecreasingProfile({0.0, 1.0}, {-1.0}), std::invalid_argument);
  CHECK_THROWS_AS(DecreasingProfile({0.5, 1.0}, {1.0}), std::invalid_argument);
}

TEST_CASE("lp_norm closed forms") {
  CHECK(lp_norm(StepFunction(0, 0, {1.0}), 2.0) == 1.0);
  CHECK(lp_norm(StepFunction(0, 2, {3.0, 0.0, 0.0, 0.0}), 1.0) == 0.75);
  CHECK(lp_norm(two_step(), kInf) == 3.0);
  CHECK(lp_norm(StepFunction::zero(1, 1), 0.5) == 0.0);
  CHECK_THROWS_AS(lp_norm(two_step(), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(lp_norm(two_step(), -2.0), std::invalid_argument);
}

TEST_CASE("equimeasurability and norm preservation over a corpus") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const StepFunction f = random_s0(seed, 1, 6, 0, 5);
    const DecreasingProfile prof = rearrange(f);

    std::vector<double> grid{0.0};
    for (double v : prof.values()) grid.push_back(v);
    for (std::size_t i = 1; i < prof.values().size(); ++i)
      grid.push_back(0.5 * (prof.values()[i - 1] + prof.values()[i]));
    std::sort(grid.begin(), grid.end());

    double prev = kInf;
    for (double s : grid) {
      const double d = distribution(f, s);
      REQUIRE(d == prof.measure_above(s));
      REQUIRE(d <= prev);
      prev = d;
    }
    for (double p : {0.5, 1.0, 2.0, kInf}) {
      const double a = lp_norm(f, p), b = lp_norm(prof, p);
      REQUIRE(std::abs(a - b) <= 1e-12 * std::max(a, b));
    }
    REQUIRE(prof.support_measure() <= f.domain_measure());
  }
}

TEST_CASE("rearrange merges equal magnitudes") {
  const StepFunction f(0, 2, {-1.0, 2.0, 1.0, 0.0});
  const DecreasingProfile p = rearrange(f);
  REQUIRE(p.values() == std::vector<double>{2.0, 1.0});
  REQUIRE(p.breakpoints() == std::vector<double>{0.0, 0.25, 0.75});
}

TEST_CASE("f*(t) matches the inf definition on a grid") {
  const StepFunction f = random_s0(42, 0, 5, 0, 4);
  const DecreasingProfile prof = rearrange(f);
  for (double t : {0.0, 0.125, 0.25, 0.5, 0.75, 0.9375, 1.0, 2.0}) {
    // inf{s : distribution(f, s) <= t} over the candidate set {values, 0}.
    double inf_s = 0.0;
    std::vector<double> cands = prof.values();
    std::sort(cands.begin(), cands.end());
    for (double s : cands)
      if (distribution(f, s) <= t) {
        inf_s = s;
        break;
      }
    if (distribution(f, 0.0) <= t) inf_s = 0.0;
    REQUIRE(prof.value(t) == inf_s);
  }
}
