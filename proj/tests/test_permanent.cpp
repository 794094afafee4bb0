#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hardy/permanent.hpp"
#include "oracles.hpp"

using Complex = std::complex<double>;

TEST_CASE("small permanents")
{
  CHECK(std::abs(hardy::permanent(Eigen::Matrix2cd::Identity()) - Complex(1)) < 1e-15);
  CHECK(std::abs(hardy::permanent(Eigen::MatrixXcd::Ones(2, 2)) - Complex(2)) < 1e-15);
  CHECK(std::abs(hardy::permanent(Eigen::MatrixXcd::Ones(3, 3)) - Complex(6)) < 1e-14);
  CHECK(std::abs(hardy::permanent(Eigen::MatrixXd::Ones(4, 4)) - 24.0) < 1e-13);
  CHECK(hardy::permanent(Eigen::MatrixXcd(0, 0)) == Complex(1));
  Eigen::Matrix2d m;
  m << 1, 2, 3, 4;
  CHECK(hardy::permanent(m) == doctest::Approx(10.0));
}

TEST_CASE("non-square input is rejected")
{
  CHECK_THROWS_AS(hardy::permanent(Eigen::MatrixXcd::Ones(2, 3)), std::invalid_argument);
}

TEST_CASE("Ryser agrees with the permutation sum")
{
  std::mt19937_64 rng(2024);
  for (int n = 1; n <= 6; ++n) {
    for (int t = 0; t < 20; ++t) {
      const auto m = oracle::random_matrix(rng, n);
      const Complex fast = hardy::permanent(m);
      const Complex slow = oracle::naive_permanent(m);
      CHECK(std::abs(fast - slow) <= 1e-10 * std::max(1.0, std::abs(slow)));
    }
  }
}

TEST_CASE("permanent accepts Eigen expressions")
{
  Eigen::Matrix3cd a = Eigen::Matrix3cd::Identity();
  const Complex p = hardy::permanent(2.0 * a);
  CHECK(std::abs(p - Complex(8)) < 1e-14);
  const Complex block = hardy::permanent(Eigen::MatrixXcd::Ones(4, 4).topLeftCorner(2, 2));
  CHECK(std::abs(block - Complex(2)) < 1e-15);
}
