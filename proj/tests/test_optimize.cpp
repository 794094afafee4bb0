#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hardy/optimize.hpp"
#include "oracles.hpp"

#include <cstring>

using namespace hardy;
using std::numbers::pi;

TEST_CASE("sweep samples")
{
  const auto s = sweep_samples(8);
  CHECK(s.size() == 8);
  CHECK(s[0] > 0);
  CHECK(s[7] < pi / 2);
  for (Eigen::Index i = 1; i < s.size(); ++i)
    CHECK(s[i] > s[i - 1]);
  CHECK_THROWS_AS(sweep_samples(1), std::invalid_argument);
  CHECK_THROWS_AS(sweep(1), std::invalid_argument);
}

TEST_CASE("sweep grid values")
{
  const auto grid = sweep(33, VerifyMode::Sampled, 2);
  REQUIRE(grid.values.rows() == 33);
  REQUIRE(grid.values.cols() == 33);
  for (Eigen::Index i = 0; i < 33; ++i) {
    for (Eigen::Index j = 0; j < 33; ++j) {
      CHECK(grid.values(i, j) >= 0);
      CHECK(grid.values(i, j) < 1);
      // theta -> pi/2 - theta mirrors the grid
      CHECK(std::abs(grid.values(i, j) - grid.values(32 - i, 32 - j)) <= 1e-14);
      // anti-diagonal is the S1 S2 = C1 C2 line
      if (i + j == 32)
        CHECK(grid.values(i, j) <= 1e-12);
    }
  }
  // chain verified on every 16th point, and it holds there
  std::size_t checked = 0;
  for (std::size_t k = 0; k < grid.chain_flags.size(); ++k) {
    if (k % kVerifyStride == 0) {
      CHECK(grid.chain_flags[k] == ChainCheck::Holds);
      ++checked;
    } else {
      CHECK(grid.chain_flags[k] == ChainCheck::Unchecked);
    }
  }
  CHECK(checked == (33 * 33 + 15) / 16);
}

TEST_CASE("sweep near (pi/3, pi/3)")
{
  // Nearest sample to pi/3 is 0.008 rad away at this resolution.
  const auto grid = sweep(31, VerifyMode::None, 1);
  Eigen::Index best = 0;
  for (Eigen::Index i = 0; i < grid.theta1_samples.size(); ++i)
    if (std::abs(grid.theta1_samples[i] - pi / 3) < std::abs(grid.theta1_samples[best] - pi / 3))
      best = i;
  const double t = grid.theta1_samples[best];
  CHECK(std::abs(grid.values(best, best) - oracle::hardy_p(t, t)) <= 1e-15);
  CHECK(grid.values(best, best) == doctest::Approx(9.0 / 196.0).epsilon(0.05));
  for (auto flag : grid.chain_flags)
    CHECK(flag == ChainCheck::Unchecked);
}

TEST_CASE("sweep is independent of worker count")
{
  const auto one = sweep(20, VerifyMode::All, 1);
  const auto many = sweep(20, VerifyMode::All, 3);
  CHECK(one.values == many.values);
  CHECK(one.chain_flags == many.chain_flags);
  for (auto flag : one.chain_flags)
    CHECK(flag == ChainCheck::Holds);
}

TEST_CASE("golden section on a parabola")
{
  const auto r = golden_section_maximize([](double x) { return -(x - 0.3) * (x - 0.3); }, -1.0, 2.0, 1e-10);
  CHECK(std::abs(r.x - 0.3) < 1e-8);
  CHECK(r.evaluations > 10);
  CHECK_THROWS_AS(golden_section_maximize([](double) { return 0.0; }, 1.0, 1.0, 1e-6), std::invalid_argument);
}

TEST_CASE("diagonal reduction agrees with the closed form")
{
  for (double th = 0.05; th < pi / 2; th += 0.05) {
    const double p = std::pow(std::sin(th) * std::cos(th), 2);
    CHECK(std::abs(closed_form_P({th, th}) - oracle::diagonal_reduced(p)) <= 1e-12);
  }
}

TEST_CASE("optimize")
{
  const auto r = optimize(64, 1e-10);
  CHECK(r.grid_resolution == 64);
  CHECK(r.iterations >= 1);
  CHECK(r.p_star >= r.grid_best);
  CHECK(std::abs(r.p_star - closed_form_P({r.theta1_star, r.theta2_star})) <= 1e-12);
  CHECK(std::abs(r.theta1_star - r.theta2_star) <= 1e-6);

  // One-dimensional problem in p = sin^2 cos^2 on (0, 1/4).
  const auto line = golden_section_maximize(oracle::diagonal_reduced, 0.0, 0.25, 1e-12);
  CHECK(std::abs(r.p_star - line.value) <= 1e-8);

  const auto again = optimize(64, 1e-10);
  CHECK(std::memcmp(&r.theta1_star, &again.theta1_star, sizeof(double)) == 0);
  CHECK(std::memcmp(&r.theta2_star, &again.theta2_star, sizeof(double)) == 0);
  CHECK(std::memcmp(&r.p_star, &again.p_star, sizeof(double)) == 0);
  CHECK(r.iterations == again.iterations);

  CHECK_THROWS_AS(optimize(64, 1e-13), std::invalid_argument);
  CHECK_THROWS_AS(optimize(1, 1e-6), std::invalid_argument);
}
