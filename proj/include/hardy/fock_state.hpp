#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hardy {

/// Amplitudes with modulus below this are dropped by `pruned()` and by evolution.
inline constexpr double kPruneThreshold = 1e-15;

/// Photon count per optical mode; labels one Fock basis state.
class OccupationVector {
public:
  explicit OccupationVector(std::size_t n_modes) : counts_(n_modes, 0u)
  {
    if (n_modes == 0)
      throw std::invalid_argument("OccupationVector: n_modes must be positive");
  }

  OccupationVector(std::initializer_list<unsigned> counts) : counts_(counts)
  {
    if (counts_.empty())
      throw std::invalid_argument("OccupationVector: n_modes must be positive");
  }

  explicit OccupationVector(std::vector<unsigned> counts) : counts_(std::move(counts))
  {
    if (counts_.empty())
      throw std::invalid_argument("OccupationVector: n_modes must be positive");
  }

  std::size_t n_modes() const { return counts_.size(); }

  unsigned operator[](std::size_t mode) const { return counts_[mode]; }

  unsigned at(std::size_t mode) const
  {
    if (mode >= counts_.size())
      throw std::invalid_argument("OccupationVector: mode index out of range");
    return counts_[mode];
  }

  std::span<const unsigned> counts() const { return counts_; }

  unsigned total() const { return std::accumulate(counts_.begin(), counts_.end(), 0u); }

  /// Copy with one extra photon in `mode`.
  OccupationVector incremented(std::size_t mode) const
  {
    OccupationVector out = *this;
    ++out.counts_.at(mode);
    return out;
  }

  auto operator<=>(const OccupationVector&) const = default;
  bool operator==(const OccupationVector&) const = default;

private:
  std::vector<unsigned> counts_;
};

inline std::string to_string(const OccupationVector& occ)
{
  std::string s = "(";
  for (std::size_t i = 0; i < occ.n_modes(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(occ[i]);
  }
  return s + ")";
}

/// Calls `fn` for every occupation of `n_modes` modes holding `total` photons,
/// in lexicographically increasing order.
inline void for_each_occupation(std::size_t n_modes, unsigned total,
                                const std::function<void(const OccupationVector&)>& fn)
{
  std::vector<unsigned> counts(n_modes, 0u);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t mode, unsigned left) {
    if (mode + 1 == n_modes) {
      counts[mode] = left;
      fn(OccupationVector(counts));
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      counts[mode] = k;
      rec(mode + 1, left - k);
    }
  };
  rec(0, total);
}

/// Sparse superposition of Fock basis states with complex amplitudes.
///
/// Terms are kept in an ordered map so iteration (and anything serialized
/// from it) is deterministic. A state with no terms is the zero vector.
template <typename Real = double>
class BasicFockState {
public:
  using RealScalar = Real;
  using Scalar = std::complex<Real>;
  using TermMap = std::map<OccupationVector, Scalar>;

  explicit BasicFockState(std::size_t n_modes) : n_modes_(n_modes)
  {
    if (n_modes == 0)
      throw std::invalid_argument("FockState: n_modes must be positive");
  }

  std::size_t n_modes() const { return n_modes_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  Scalar amplitude(const OccupationVector& occ) const
  {
    auto it = terms_.find(occ);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// Accumulates `amp` onto the term `occ`.
  void add(const OccupationVector& occ, Scalar amp)
  {
    if (occ.n_modes() != n_modes_)
      throw std::invalid_argument("FockState: occupation length does not match n_modes");
    terms_[occ] += amp;
  }

  BasicFockState pruned(Real threshold = Real(kPruneThreshold)) const
  {
    BasicFockState out(n_modes_);
    for (const auto& [occ, amp] : terms_)
      if (std::abs(amp) >= threshold)
        out.terms_.emplace(occ, amp);
    return out;
  }

  BasicFockState& operator+=(const BasicFockState& rhs)
  {
    if (rhs.n_modes_ != n_modes_)
      throw std::invalid_argument("FockState: mode-count mismatch");
    for (const auto& [occ, amp] : rhs.terms_)
      terms_[occ] += amp;
    return *this;
  }

  BasicFockState& operator*=(Scalar factor)
  {
    for (auto& term : terms_)
      term.second *= factor;
    return *this;
  }

  friend BasicFockState operator+(BasicFockState lhs, const BasicFockState& rhs) { return lhs += rhs; }
  friend BasicFockState operator*(Scalar factor, BasicFockState s) { return s *= factor; }

private:
  std::size_t n_modes_;
  TermMap terms_;
};

using FockState = BasicFockState<double>;

template <typename Real = double>
BasicFockState<Real> vacuum(std::size_t n_modes)
{
  if (n_modes == 0)
    throw std::invalid_argument("vacuum: n_modes must be positive");
  BasicFockState<Real> s(n_modes);
  s.add(OccupationVector(n_modes), Real(1));
  return s;
}

/// Single basis state |occ> with unit amplitude.
template <typename Real = double>
BasicFockState<Real> basis_state(const OccupationVector& occ)
{
  BasicFockState<Real> s(occ.n_modes());
  s.add(occ, Real(1));
  return s;
}

/// Applies the bosonic creation operator: |n> -> sqrt(n_mode + 1) |n + e_mode>.
template <typename Real>
BasicFockState<Real> apply_creation(const BasicFockState<Real>& state, std::size_t mode)
{
  if (mode >= state.n_modes())
    throw std::invalid_argument("apply_creation: mode index out of range");
  BasicFockState<Real> out(state.n_modes());
  for (const auto& [occ, amp] : state.terms())
    out.add(occ.incremented(mode), amp * std::sqrt(Real(occ[mode] + 1)));
  return out;
}

template <typename Real>
Real norm_sq(const BasicFockState<Real>& state)
{
  Real acc = 0;
  for (const auto& term : state.terms())
    acc += std::norm(term.second);
  return acc;
}

/// <lhs|rhs>, conjugate-linear in `lhs`.
template <typename Real>
std::complex<Real> inner_product(const BasicFockState<Real>& lhs, const BasicFockState<Real>& rhs)
{
  if (lhs.n_modes() != rhs.n_modes())
    throw std::invalid_argument("inner_product: mode-count mismatch");
  std::complex<Real> acc = 0;
  for (const auto& [occ, amp] : lhs.terms()) {
    auto it = rhs.terms().find(occ);
    if (it != rhs.terms().end())
      acc += std::conj(amp) * it->second;
  }
  return acc;
}

}  // namespace hardy
