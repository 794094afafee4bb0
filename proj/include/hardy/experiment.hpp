#pragma once

// Two independent single-photon sources feeding the four-beam-splitter
// Hardy interferometer.
//
// Mode map: inputs a, b, c, d are modes 0..3. Photons enter at a and c with
// vacuum at b and d. Element order is B1(a,b), B2(c,d), phase phi3 on b',
// B3(b',c'), phase phi4 on d', B4(a',d'). Outputs: g = 0, e = 1, f = 2, h = 3.
// Detector 1 is counters (E, F); detector 2 is counters (G, H).

#include "hardy/fock_state.hpp"
#include "hardy/linear_optics.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>

namespace hardy {

namespace mode {
inline constexpr std::size_t a = 0, b = 1, c = 2, d = 3;
inline constexpr std::size_t g = 0, e = 1, f = 2, h = 3;
}  // namespace mode

inline constexpr std::size_t kHardyModes = 4;

/// Source beam-splitter angles theta1 (B1) and theta2 (B2).
struct HardyAngles {
  double theta1 = 0.0;
  double theta2 = 0.0;

  /// S1 S2
  double sin_product() const;
  /// C1 C2
  double cos_product() const;
};

/// Detector-side beam-splitter angles and phases. S3 = sin(theta3), S4 = sin(theta4).
struct DetectorSetting {
  double theta3 = 0.0;
  double phi3 = 0.0;
  double theta4 = 0.0;
  double phi4 = 0.0;
};

enum class CanonicalCase { A, B, C, D };

std::string_view to_string(CanonicalCase c);
std::optional<CanonicalCase> parse_case(std::string_view text);

/// Single-counter post-selection events: one counter fires once, its partner stays dark.
enum class Event { EBar, FBar, GBar, HBar };

std::string_view to_string(Event e);
/// 1 for E/F, 2 for G/H.
int detector_of(Event e);
bool event_occurs(Event e, const OccupationVector& occ);

InterferometerNetwork build_network(const HardyAngles& angles, const DetectorSetting& setting);

/// S3 = S4 choice that cancels the F-G coincidence at phases (pi/2, pi/2).
/// Throws std::domain_error when S1 S2 + C1 C2 is not positive.
double tau(const HardyAngles& angles);
/// Detector amplitude that cancels the E-G (resp. F-H) term when paired with tau.
/// Throws std::domain_error when (S1 S2)^3 + (C1 C2)^3 is not positive.
double tau_prime(const HardyAngles& angles);

DetectorSetting canonical_setting(CanonicalCase c, const HardyAngles& angles);

/// a^dagger c^dagger |0> on the four input modes.
FockState hardy_input_state();

/// Output state of the full network for the given angles and detector setting.
FockState evolve_hardy(const HardyAngles& angles, const DetectorSetting& setting);

double event_probability(const FockState& state, Event event);
/// Joint probability of one detector-1 event and one detector-2 event.
double event_probability(const FockState& state, Event detector1, Event detector2);

/// Below this, a conditioning event is treated as null.
inline constexpr double kNullEventThreshold = 1e-14;

/// P(target | given), or nullopt when P(given) < kNullEventThreshold.
std::optional<double> conditional_probability(const FockState& state, Event target, Event given);

/// Coincidence part (one photon per detector) and everything else.
struct PsiSplit {
  FockState psi1;
  FockState psi2;
};

PsiSplit psi_split(const FockState& state);

/// Closed-form probability of the F-G coincidence at case D:
/// (xy)^2 (x - y)^2 / (x^2 + y^2 - xy)^2 with x = S1 S2, y = C1 C2.
double closed_form_P(const HardyAngles& angles);

/// Tolerance on each link of the Hardy chain.
inline constexpr double kChainTolerance = 1e-10;
/// At or below this closed-form P the chain carries no contradiction.
inline constexpr double kDegenerateThreshold = 1e-12;

struct HardyReport {
  HardyAngles angles;
  double p_joint_a = 0.0;
  std::optional<double> p_f_given_g_b;
  std::optional<double> p_g_given_f_c;
  double p_joint_d = 0.0;
  double p_closed_form = 0.0;
  bool chain_holds = false;

  /// Chain holds but the case-D probability vanishes (S1 S2 = C1 C2).
  bool degenerate() const { return p_closed_form <= kDegenerateThreshold; }
  bool has_undefined_conditional() const { return !p_f_given_g_b || !p_g_given_f_c; }
};

HardyReport hardy_report(const HardyAngles& angles);

}  // namespace hardy
