#include "hardy/experiment.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hardy {

double HardyAngles::sin_product() const { return std::sin(theta1) * std::sin(theta2); }
double HardyAngles::cos_product() const { return std::cos(theta1) * std::cos(theta2); }

std::string_view to_string(CanonicalCase c)
{
  switch (c) {
  case CanonicalCase::A: return "A";
  case CanonicalCase::B: return "B";
  case CanonicalCase::C: return "C";
  case CanonicalCase::D: return "D";
  }
  return "?";
}

std::optional<CanonicalCase> parse_case(std::string_view text)
{
  if (text == "A" || text == "a") return CanonicalCase::A;
  if (text == "B" || text == "b") return CanonicalCase::B;
  if (text == "C" || text == "c") return CanonicalCase::C;
  if (text == "D" || text == "d") return CanonicalCase::D;
  return std::nullopt;
}

std::string_view to_string(Event e)
{
  switch (e) {
  case Event::EBar: return "E_bar";
  case Event::FBar: return "F_bar";
  case Event::GBar: return "G_bar";
  case Event::HBar: return "H_bar";
  }
  return "?";
}

int detector_of(Event e) { return (e == Event::EBar || e == Event::FBar) ? 1 : 2; }

bool event_occurs(Event e, const OccupationVector& occ)
{
  if (occ.n_modes() != kHardyModes)
    throw std::invalid_argument("event_occurs: expected a 4-mode occupation");
  switch (e) {
  case Event::EBar: return occ[mode::e] == 1 && occ[mode::f] == 0;
  case Event::FBar: return occ[mode::f] == 1 && occ[mode::e] == 0;
  case Event::GBar: return occ[mode::g] == 1 && occ[mode::h] == 0;
  case Event::HBar: return occ[mode::h] == 1 && occ[mode::g] == 0;
  }
  return false;
}

InterferometerNetwork build_network(const HardyAngles& angles, const DetectorSetting& setting)
{
  InterferometerNetwork net(kHardyModes);
  net.add(BeamSplitter{mode::a, mode::b, angles.theta1})
      .add(BeamSplitter{mode::c, mode::d, angles.theta2})
      .add(PhaseShifter{mode::b, setting.phi3})
      .add(BeamSplitter{mode::b, mode::c, setting.theta3})  // -> (e, f)
      .add(PhaseShifter{mode::d, setting.phi4})
      .add(BeamSplitter{mode::a, mode::d, setting.theta4});  // -> (g, h)
  return net;
}

double tau(const HardyAngles& angles)
{
  const double x = angles.sin_product();
  const double y = angles.cos_product();
  if (!(x + y > 0))
    throw std::domain_error("tau: S1 S2 + C1 C2 vanishes");
  return std::sqrt(y / (y + x));
}

double tau_prime(const HardyAngles& angles)
{
  const double x = angles.sin_product();
  const double y = angles.cos_product();
  const double denom = x * x * x + y * y * y;
  if (!(denom > 0))
    throw std::domain_error("tau_prime: (S1 S2)^3 + (C1 C2)^3 vanishes");
  return std::sqrt(y * y * y / denom);
}

DetectorSetting canonical_setting(CanonicalCase c, const HardyAngles& angles)
{
  constexpr double half_pi = std::numbers::pi / 2;
  constexpr double three_half_pi = 3 * std::numbers::pi / 2;
  // (S, phi) per detector: "tau" side uses pi/2, "tau'" side uses 3pi/2.
  const double t = std::asin(tau(angles));
  const double tp = std::asin(tau_prime(angles));
  switch (c) {
  case CanonicalCase::A: return {t, half_pi, t, half_pi};
  case CanonicalCase::B: return {t, half_pi, tp, three_half_pi};
  case CanonicalCase::C: return {tp, three_half_pi, t, half_pi};
  case CanonicalCase::D: return {tp, three_half_pi, tp, three_half_pi};
  }
  throw std::invalid_argument("canonical_setting: unknown case");
}

FockState hardy_input_state()
{
  return apply_creation(apply_creation(vacuum(kHardyModes), mode::c), mode::a);
}

FockState evolve_hardy(const HardyAngles& angles, const DetectorSetting& setting)
{
  return evolve(compose(build_network(angles, setting)), hardy_input_state());
}

double event_probability(const FockState& state, Event event)
{
  double p = 0.0;
  for (const auto& [occ, amp] : state.terms())
    if (event_occurs(event, occ))
      p += std::norm(amp);
  return p;
}

double event_probability(const FockState& state, Event detector1, Event detector2)
{
  if (detector_of(detector1) != 1 || detector_of(detector2) != 2)
    throw std::invalid_argument("event_probability: need one detector-1 and one detector-2 event");
  double p = 0.0;
  for (const auto& [occ, amp] : state.terms())
    if (event_occurs(detector1, occ) && event_occurs(detector2, occ))
      p += std::norm(amp);
  return p;
}

std::optional<double> conditional_probability(const FockState& state, Event target, Event given)
{
  if (detector_of(target) == detector_of(given))
    throw std::invalid_argument("conditional_probability: events must be on different detectors");
  const double p_given = event_probability(state, given);
  if (p_given < kNullEventThreshold)
    return std::nullopt;
  const double joint = detector_of(target) == 1 ? event_probability(state, target, given)
                                                : event_probability(state, given, target);
  return joint / p_given;
}

PsiSplit psi_split(const FockState& state)
{
  if (state.n_modes() != kHardyModes)
    throw std::invalid_argument("psi_split: expected a 4-mode state");
  PsiSplit split{FockState(kHardyModes), FockState(kHardyModes)};
  for (const auto& [occ, amp] : state.terms()) {
    const bool coincidence = occ[mode::e] + occ[mode::f] == 1 && occ[mode::g] + occ[mode::h] == 1;
    (coincidence ? split.psi1 : split.psi2).add(occ, amp);
  }
  return split;
}

double closed_form_P(const HardyAngles& angles)
{
  const double x = angles.sin_product();
  const double y = angles.cos_product();
  const double xy = x * y;
  const double diff = x - y;
  const double denom = x * x + y * y - xy;
  return xy * xy * diff * diff / (denom * denom);
}

HardyReport hardy_report(const HardyAngles& angles)
{
  HardyReport r;
  r.angles = angles;

  const auto state_a = evolve_hardy(angles, canonical_setting(CanonicalCase::A, angles));
  r.p_joint_a = event_probability(state_a, Event::FBar, Event::GBar);

  const auto state_b = evolve_hardy(angles, canonical_setting(CanonicalCase::B, angles));
  r.p_f_given_g_b = conditional_probability(state_b, Event::FBar, Event::GBar);

  const auto state_c = evolve_hardy(angles, canonical_setting(CanonicalCase::C, angles));
  r.p_g_given_f_c = conditional_probability(state_c, Event::GBar, Event::FBar);

  const auto state_d = evolve_hardy(angles, canonical_setting(CanonicalCase::D, angles));
  r.p_joint_d = event_probability(state_d, Event::FBar, Event::GBar);

  r.p_closed_form = closed_form_P(angles);
  r.chain_holds = r.p_joint_a <= kChainTolerance &&
                  r.p_f_given_g_b && *r.p_f_given_g_b >= 1 - kChainTolerance &&
                  r.p_g_given_f_c && *r.p_g_given_f_c >= 1 - kChainTolerance &&
                  std::abs(r.p_joint_d - r.p_closed_form) <= kChainTolerance;
  return r;
}

}  // namespace hardy
