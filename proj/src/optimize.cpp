#include "hardy/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace hardy {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
constexpr std::size_t kMaxSweeps = 10000;

}  // namespace

std::optional<VerifyMode> parse_verify_mode(std::string_view text)
{
  if (text == "all") return VerifyMode::All;
  if (text == "sampled") return VerifyMode::Sampled;
  if (text == "none") return VerifyMode::None;
  return std::nullopt;
}

std::string_view to_string(VerifyMode mode)
{
  switch (mode) {
  case VerifyMode::All: return "all";
  case VerifyMode::Sampled: return "sampled";
  case VerifyMode::None: return "none";
  }
  return "?";
}

Eigen::VectorXd sweep_samples(std::size_t resolution)
{
  if (resolution < 2)
    throw std::invalid_argument("sweep: resolution must be at least 2");
  const double lo = kBoundaryInset;
  const double width = kHalfPi - 2 * kBoundaryInset;
  Eigen::VectorXd out(static_cast<Eigen::Index>(resolution));
  for (std::size_t i = 0; i < resolution; ++i)
    out[static_cast<Eigen::Index>(i)] = lo + (double(i) + 0.5) * width / double(resolution);
  return out;
}

SweepGrid sweep(std::size_t resolution, VerifyMode verify, unsigned jobs)
{
  SweepGrid grid;
  grid.theta1_samples = sweep_samples(resolution);
  grid.theta2_samples = grid.theta1_samples;
  const auto n = static_cast<Eigen::Index>(resolution);
  grid.values.resize(n, n);
  grid.chain_flags.assign(resolution * resolution, ChainCheck::Unchecked);

  auto fill_rows = [&](Eigen::Index first, Eigen::Index stride) {
    for (Eigen::Index i = first; i < n; i += stride) {
      for (Eigen::Index j = 0; j < n; ++j) {
        const HardyAngles angles{grid.theta1_samples[i], grid.theta2_samples[j]};
        grid.values(i, j) = closed_form_P(angles);
        const auto k = static_cast<std::size_t>(i * n + j);
        const bool check = verify == VerifyMode::All ||
                           (verify == VerifyMode::Sampled && k % kVerifyStride == 0);
        if (check)
          grid.chain_flags[k] = hardy_report(angles).chain_holds ? ChainCheck::Holds : ChainCheck::Fails;
      }
    }
  };

  if (jobs == 0)
    jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, resolution));
  if (jobs <= 1) {
    fill_rows(0, 1);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w)
      workers.emplace_back(fill_rows, Eigen::Index(w), Eigen::Index(jobs));
  }
  return grid;
}

LineMaximum golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                                    double tolerance)
{
  if (!(hi > lo))
    throw std::invalid_argument("golden_section_maximize: empty interval");
  if (!(tolerance > 0))
    throw std::invalid_argument("golden_section_maximize: tolerance must be positive");

  const double inv_phi = (std::sqrt(5.0) - 1) / 2;
  LineMaximum best;
  best.value = -std::numeric_limits<double>::infinity();
  auto eval = [&](double x) {
    const double v = f(x);
    ++best.evaluations;
    if (v > best.value) {
      best.value = v;
      best.x = x;
    }
    return v;
  };

  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = eval(c);
  double fd = eval(d);
  while (hi - lo > tolerance) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = eval(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = eval(d);
    }
  }
  eval(0.5 * (lo + hi));
  return best;
}

OptimumResult optimize(std::size_t initial_resolution, double tolerance)
{
  if (!(tolerance >= 1e-12))
    throw std::invalid_argument("optimize: tolerance must be at least 1e-12");
  const Eigen::VectorXd samples = sweep_samples(initial_resolution);
  const auto n = samples.size();

  OptimumResult r;
  r.grid_resolution = initial_resolution;
  r.p_star = -1.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double p = closed_form_P({samples[i], samples[j]});
      if (p > r.p_star) {
        r.p_star = p;
        r.theta1_star = samples[i];
        r.theta2_star = samples[j];
      }
    }
  }
  r.grid_best = r.p_star;

  const double lo = kBoundaryInset;
  const double hi = kHalfPi - kBoundaryInset;
  const double half_width = (hi - lo) / double(initial_resolution);

  for (r.iterations = 0; r.iterations < kMaxSweeps;) {
    ++r.iterations;
    double moved = 0.0;
    for (int coord = 0; coord < 2; ++coord) {
      double& x = coord == 0 ? r.theta1_star : r.theta2_star;
      const double other = coord == 0 ? r.theta2_star : r.theta1_star;
      auto objective = [&](double t) {
        return coord == 0 ? closed_form_P({t, other}) : closed_form_P({other, t});
      };
      const auto line = golden_section_maximize(objective, std::max(lo, x - half_width),
                                                std::min(hi, x + half_width), tolerance);
      // Only strict improvements move the point.
      if (line.value > r.p_star) {
        moved = std::max(moved, std::abs(line.x - x));
        x = line.x;
        r.p_star = line.value;
      }
    }
    if (moved < tolerance)
      break;
  }
  return r;
}

}  // namespace hardy
