#pragma once

// Deterministic local hidden-variable strategies for the Hardy chain.
//
// Each detector has two settings: the "tau" setting (amplitude tau, phase
// pi/2) and the "tau'" setting (tau', 3pi/2). A deterministic local strategy
// fixes, for each setting, whether the detector's post-selected event (F_bar
// at detector 1, G_bar at detector 2) occurs. Any stochastic local model is a
// convex mixture of these 16 strategies, so the largest case-D coincidence
// rate over the deterministic ones bounds every local model.

#include "hardy/experiment.hpp"

#include <string>
#include <vector>

namespace hardy {

struct LocalStrategy {
  bool f_at_tau = false;
  bool f_at_tau_prime = false;
  bool g_at_tau = false;
  bool g_at_tau_prime = false;

  /// Index 0..15 with f_at_tau as the most significant bit.
  unsigned index() const;
  static LocalStrategy from_index(unsigned index);

  bool operator==(const LocalStrategy&) const = default;
};

/// Logical constraints imposed by the quantum predictions:
///  (i)   not (F_bar at tau and G_bar at tau)        -- case A joint is 0
///  (ii)  G_bar at tau' implies F_bar at tau         -- case B conditional is 1
///  (iii) F_bar at tau' implies G_bar at tau         -- case C conditional is 1
struct ChainConstraints {
  bool forbid_joint_a = true;
  bool implication_b = true;
  bool implication_c = true;

  static ChainConstraints full() { return {true, true, true}; }
  static ChainConstraints none() { return {false, false, false}; }
  /// Enables each constraint whose quantum prediction holds in `report`.
  static ChainConstraints from_report(const HardyReport& report);
};

bool satisfies(const LocalStrategy& strategy, const ChainConstraints& constraints);

/// All 16 strategies that satisfy `constraints`, in increasing index order.
std::vector<LocalStrategy> enumerate_satisfying(const ChainConstraints& constraints);

/// Maximum of [F_bar at tau' and G_bar at tau'] over satisfying strategies (0 or 1).
int lhv_max_case_d(const ChainConstraints& constraints);

std::string to_string(const LocalStrategy& s);

}  // namespace hardy
