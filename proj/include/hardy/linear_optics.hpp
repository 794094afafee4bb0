#pragma once

// Passive linear optics on bosonic modes.
//
// Conventions, used everywhere in the library:
//   * A beam splitter on modes (p, q) with angle theta has transmission
//     amplitude S = sin(theta) and reflection amplitude iC = i cos(theta);
//     its 2x2 block is [[S, iC], [iC, S]].
//   * A phase shifter multiplies its mode by e^{-i phi}.
//   * A single-particle unitary V sends one photon in input mode j to
//     sum_k V(k, j) |1_k>, i.e. a_j^dagger -> sum_k V(k, j) a_k^dagger.
//   * Elements of a network act in listed order: V = V_last * ... * V_first.

#include "hardy/fock_state.hpp"
#include "hardy/permanent.hpp"

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace hardy {

template <typename Real = double>
using SingleParticleUnitary = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

struct BeamSplitter {
  std::size_t p = 0;
  std::size_t q = 1;
  double theta = 0.0;

  double transmission_amplitude() const { return std::sin(theta); }
  double reflection_amplitude() const { return std::cos(theta); }
  double transmittance() const { return std::sin(theta) * std::sin(theta); }
  double reflectivity() const { return std::cos(theta) * std::cos(theta); }
};

struct PhaseShifter {
  std::size_t mode = 0;
  double phi = 0.0;
};

using OpticalElement = std::variant<BeamSplitter, PhaseShifter>;

inline void validate_element(const OpticalElement& element, std::size_t n_modes)
{
  if (const auto* bs = std::get_if<BeamSplitter>(&element)) {
    if (bs->p == bs->q)
      throw std::invalid_argument("BeamSplitter: modes must be distinct");
    if (bs->p >= n_modes || bs->q >= n_modes)
      throw std::invalid_argument("BeamSplitter: mode index out of range");
  } else if (std::get<PhaseShifter>(element).mode >= n_modes) {
    throw std::invalid_argument("PhaseShifter: mode index out of range");
  }
}

/// Ordered list of optical elements acting on `n_modes` modes.
class InterferometerNetwork {
public:
  explicit InterferometerNetwork(std::size_t n_modes) : n_modes_(n_modes)
  {
    if (n_modes == 0)
      throw std::invalid_argument("InterferometerNetwork: n_modes must be positive");
  }

  InterferometerNetwork& add(OpticalElement element)
  {
    validate_element(element, n_modes_);
    elements_.push_back(std::move(element));
    return *this;
  }

  std::size_t n_modes() const { return n_modes_; }
  const std::vector<OpticalElement>& elements() const { return elements_; }

private:
  std::size_t n_modes_;
  std::vector<OpticalElement> elements_;
};

template <typename Real = double>
SingleParticleUnitary<Real> element_unitary(const OpticalElement& element, std::size_t n_modes)
{
  using Complex = std::complex<Real>;
  if (n_modes == 0)
    throw std::invalid_argument("element_unitary: n_modes must be positive");
  validate_element(element, n_modes);
  const auto n = static_cast<Eigen::Index>(n_modes);
  SingleParticleUnitary<Real> u = SingleParticleUnitary<Real>::Identity(n, n);
  if (const auto* bs = std::get_if<BeamSplitter>(&element)) {
    const Real s = std::sin(Real(bs->theta));
    const Real c = std::cos(Real(bs->theta));
    const auto p = static_cast<Eigen::Index>(bs->p);
    const auto q = static_cast<Eigen::Index>(bs->q);
    u(p, p) = s;
    u(q, q) = s;
    u(p, q) = Complex(0, c);
    u(q, p) = Complex(0, c);
  } else {
    const auto& ps = std::get<PhaseShifter>(element);
    const auto m = static_cast<Eigen::Index>(ps.mode);
    u(m, m) = std::polar(Real(1), -Real(ps.phi));
  }
  return u;
}

template <typename Real = double>
SingleParticleUnitary<Real> compose(const InterferometerNetwork& network)
{
  if (network.elements().empty())
    throw std::invalid_argument("compose: network has no elements");
  const auto n = static_cast<Eigen::Index>(network.n_modes());
  SingleParticleUnitary<Real> v = SingleParticleUnitary<Real>::Identity(n, n);
  for (const auto& element : network.elements())
    v = element_unitary<Real>(element, network.n_modes()) * v;
  return v;
}

/// Largest entrywise deviation of V V^dagger from the identity.
template <typename Derived>
typename Derived::RealScalar unitarity_defect(const Eigen::MatrixBase<Derived>& v)
{
  if (v.rows() != v.cols())
    throw std::invalid_argument("unitarity_defect: matrix must be square");
  using Plain = typename Derived::PlainObject;
  return (v * v.adjoint() - Plain::Identity(v.rows(), v.cols())).cwiseAbs().maxCoeff();
}

namespace detail {

// Mode index repeated once per photon, e.g. (2,0,1) -> {0,0,2}.
inline std::vector<Eigen::Index> repeated_modes(const OccupationVector& occ)
{
  std::vector<Eigen::Index> out;
  for (std::size_t m = 0; m < occ.n_modes(); ++m)
    for (unsigned k = 0; k < occ[m]; ++k)
      out.push_back(static_cast<Eigen::Index>(m));
  return out;
}

inline double factorial_product(const OccupationVector& occ)
{
  double f = 1.0;
  for (std::size_t m = 0; m < occ.n_modes(); ++m)
    for (unsigned k = 2; k <= occ[m]; ++k)
      f *= k;
  return f;
}

}  // namespace detail

/// Evolves a Fock state through the single-particle unitary `v`.
///
/// The transition amplitude <m|U|n> is perm(V[m, n]) / sqrt(prod n_j! prod m_k!),
/// where V[m, n] repeats column j n_j times and row k m_k times.
template <typename Derived, typename Real>
BasicFockState<Real> evolve(const Eigen::MatrixBase<Derived>& v, const BasicFockState<Real>& input)
{
  using Complex = std::complex<Real>;
  static_assert(std::is_same_v<typename Derived::Scalar, Complex>,
                "evolve: unitary scalar must match the state's amplitude type");
  if (v.rows() != v.cols() || static_cast<std::size_t>(v.rows()) != input.n_modes())
    throw std::invalid_argument("evolve: unitary dimension does not match state");

  const SingleParticleUnitary<Real> u = v;
  BasicFockState<Real> out(input.n_modes());
  for (const auto& [in_occ, in_amp] : input.terms()) {
    const auto cols = detail::repeated_modes(in_occ);
    const auto n_photons = static_cast<Eigen::Index>(cols.size());
    const Real in_norm = std::sqrt(Real(detail::factorial_product(in_occ)));
    for_each_occupation(input.n_modes(), in_occ.total(), [&](const OccupationVector& out_occ) {
      const auto rows = detail::repeated_modes(out_occ);
      SingleParticleUnitary<Real> sub(n_photons, n_photons);
      for (Eigen::Index r = 0; r < n_photons; ++r)
        for (Eigen::Index c = 0; c < n_photons; ++c)
          sub(r, c) = u(rows[r], cols[c]);
      const Real norm = in_norm * std::sqrt(Real(detail::factorial_product(out_occ)));
      out.add(out_occ, in_amp * permanent(sub) / norm);
    });
  }
  return out.pruned();
}

/// Expands (sum_k V(k,p) a_k^dagger)(sum_l V(l,q) a_l^dagger)|0> term by term.
///
/// This is the operator form of a_p^dagger a_q^dagger |0> after the network, so
/// for p == q the result carries the sqrt(2) of (a^dagger)^2|0> = sqrt(2)|2>.
template <typename Derived>
BasicFockState<typename Derived::RealScalar> evolve_two_photon_direct(
    const Eigen::MatrixBase<Derived>& v, std::pair<std::size_t, std::size_t> input_modes)
{
  using Real = typename Derived::RealScalar;
  if (v.rows() != v.cols() || v.rows() == 0)
    throw std::invalid_argument("evolve_two_photon_direct: unitary must be square");
  const auto n_modes = static_cast<std::size_t>(v.rows());
  const auto [p, q] = input_modes;
  if (p >= n_modes || q >= n_modes)
    throw std::invalid_argument("evolve_two_photon_direct: input mode out of range");

  const auto vac = vacuum<Real>(n_modes);
  BasicFockState<Real> out(n_modes);
  for (std::size_t l = 0; l < n_modes; ++l) {
    const auto one = apply_creation(vac, l);
    for (std::size_t k = 0; k < n_modes; ++k) {
      auto two = apply_creation(one, k);
      two *= v(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(p)) *
             v(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(q));
      out += two;
    }
  }
  return out.pruned();
}

}  // namespace hardy
