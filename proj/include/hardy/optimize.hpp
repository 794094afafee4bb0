#pragma once

// Grid sweeps and maximization of the case-D Hardy probability over the
// source angles (theta1, theta2).

#include "hardy/experiment.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace hardy {

/// Grid samples stay this far from 0 and pi/2, where the conditionals become undefined.
inline constexpr double kBoundaryInset = 1e-6;

enum class VerifyMode { All, Sampled, None };

/// With VerifyMode::Sampled, every this-many-th grid point (row-major) is checked.
inline constexpr std::size_t kVerifyStride = 16;

std::optional<VerifyMode> parse_verify_mode(std::string_view text);
std::string_view to_string(VerifyMode mode);

enum class ChainCheck : std::int8_t { Unchecked, Holds, Fails };

/// `resolution` cell-centred samples of (kBoundaryInset, pi/2 - kBoundaryInset).
Eigen::VectorXd sweep_samples(std::size_t resolution);

struct SweepGrid {
  Eigen::VectorXd theta1_samples;
  Eigen::VectorXd theta2_samples;
  /// values(i, j) = closed_form_P(theta1_samples[i], theta2_samples[j])
  Eigen::MatrixXd values;
  /// Row-major, same shape as `values`.
  std::vector<ChainCheck> chain_flags;

  ChainCheck chain(Eigen::Index i, Eigen::Index j) const
  {
    return chain_flags[static_cast<std::size_t>(i * values.cols() + j)];
  }
};

/// Evaluates P on a resolution x resolution grid, verifying the full Hardy
/// chain at the points selected by `verify`. `jobs` = 0 uses every hardware thread.
SweepGrid sweep(std::size_t resolution, VerifyMode verify = VerifyMode::Sampled, unsigned jobs = 0);

struct LineMaximum {
  double x = 0.0;
  double value = 0.0;
  std::size_t evaluations = 0;
};

/// Golden-section search for a maximum of `f` on [lo, hi]; stops once the
/// bracket is narrower than `tolerance`. Returns the best point evaluated.
LineMaximum golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                                    double tolerance);

struct OptimumResult {
  double theta1_star = 0.0;
  double theta2_star = 0.0;
  double p_star = 0.0;
  /// Coordinate sweeps performed after the coarse grid.
  std::size_t iterations = 0;
  std::size_t grid_resolution = 0;
  /// Best value on the coarse grid; p_star never falls below it.
  double grid_best = 0.0;
};

/// Coarse grid scan followed by alternating golden-section refinement of
/// theta1 and theta2 until a full sweep moves neither coordinate by more
/// than `tolerance`. Deterministic.
OptimumResult optimize(std::size_t initial_resolution, double tolerance);

}  // namespace hardy
