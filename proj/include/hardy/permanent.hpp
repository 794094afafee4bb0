#pragma once

#include <Eigen/Core>

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace hardy {

/// Matrix permanent via Ryser's inclusion-exclusion formula, visiting column
/// subsets in Gray-code order so each step updates the row sums by a single
/// column. O(2^n n). The 0x0 permanent is 1.
template <typename Derived>
typename Derived::Scalar permanent(const Eigen::MatrixBase<Derived>& matrix)
{
  using Scalar = typename Derived::Scalar;
  if (matrix.rows() != matrix.cols())
    throw std::invalid_argument("permanent: matrix must be square");
  const Eigen::Index n = matrix.rows();
  if (n == 0)
    return Scalar(1);
  if (n > 62)
    throw std::invalid_argument("permanent: dimension too large");

  const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = matrix;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> row_sums = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(n);
  std::uint64_t subset = 0;
  Scalar total(0);
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < count; ++k) {
    const int flip = std::countr_zero(k);
    const std::uint64_t bit = std::uint64_t{1} << flip;
    subset ^= bit;
    if (subset & bit)
      row_sums += a.col(flip);
    else
      row_sums -= a.col(flip);
    const Scalar term = row_sums.prod();
    // (-1)^{|S|}
    if (std::popcount(subset) & 1)
      total -= term;
    else
      total += term;
  }
  return (n & 1) ? -total : total;
}

}  // namespace hardy
