#include "hardy/lhv.hpp"

#include <algorithm>
#include <stdexcept>

namespace hardy {

unsigned LocalStrategy::index() const
{
  return (unsigned(f_at_tau) << 3) | (unsigned(f_at_tau_prime) << 2) |
         (unsigned(g_at_tau) << 1) | unsigned(g_at_tau_prime);
}

LocalStrategy LocalStrategy::from_index(unsigned index)
{
  if (index > 15)
    throw std::invalid_argument("LocalStrategy: index out of range");
  return {bool(index & 8u), bool(index & 4u), bool(index & 2u), bool(index & 1u)};
}

ChainConstraints ChainConstraints::from_report(const HardyReport& report)
{
  ChainConstraints c;
  c.forbid_joint_a = report.p_joint_a <= kChainTolerance;
  c.implication_b = report.p_f_given_g_b && *report.p_f_given_g_b >= 1 - kChainTolerance;
  c.implication_c = report.p_g_given_f_c && *report.p_g_given_f_c >= 1 - kChainTolerance;
  return c;
}

bool satisfies(const LocalStrategy& s, const ChainConstraints& c)
{
  if (c.forbid_joint_a && s.f_at_tau && s.g_at_tau)
    return false;
  if (c.implication_b && s.g_at_tau_prime && !s.f_at_tau)
    return false;
  if (c.implication_c && s.f_at_tau_prime && !s.g_at_tau)
    return false;
  return true;
}

std::vector<LocalStrategy> enumerate_satisfying(const ChainConstraints& constraints)
{
  std::vector<LocalStrategy> out;
  for (unsigned i = 0; i < 16; ++i) {
    const auto s = LocalStrategy::from_index(i);
    if (satisfies(s, constraints))
      out.push_back(s);
  }
  return out;
}

int lhv_max_case_d(const ChainConstraints& constraints)
{
  int best = 0;
  for (const auto& s : enumerate_satisfying(constraints))
    best = std::max(best, int(s.f_at_tau_prime && s.g_at_tau_prime));
  return best;
}

std::string to_string(const LocalStrategy& s)
{
  std::string out = "(";
  out += s.f_at_tau ? '1' : '0';
  out += ',';
  out += s.f_at_tau_prime ? '1' : '0';
  out += ',';
  out += s.g_at_tau ? '1' : '0';
  out += ',';
  out += s.g_at_tau_prime ? '1' : '0';
  return out + ")";
}

}  // namespace hardy
