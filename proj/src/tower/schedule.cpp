#include "freezelab/errors.hpp"
#include "freezelab/tower.hpp"

namespace freezelab::tower {

namespace {

BigInt ceil_div(const BigInt& a, const BigInt& b) { return (a + b - 1) / b; }

}  // namespace

std::vector<ScheduleLevel> paper_schedule(int depth, const ScheduleLimits& lim) {
  if (depth < 0) throw std::invalid_argument("depth must be non-negative");
  std::vector<ScheduleLevel> out;
  ScheduleLevel s0;
  s0.ell = 2;
  s0.beta = 0;
  s0.rho_A = 1;
  s0.rho_B = 1;
  out.push_back(s0);
  for (int k = 1; k <= depth; ++k) {
    const ScheduleLevel& p = out.back();
    ScheduleLevel s;
    s.k = k;
    // Even levels stretch A and repeat B; odd levels do the opposite.
    const bool even = k % 2 == 0;
    const BigInt& grow = even ? p.rho_A : p.rho_B;  // doubled
    const BigInt& rep = even ? p.rho_B : p.rho_A;   // multiplied by N_k
    s.Nprime = ceil_div(BigInt(k) * grow, rep);
    s.ell_prime = s.Nprime * p.ell;
    const BigInt exponent = BigInt(k) * s.ell_prime;
    if (exponent > BigInt(lim.max_exponent))
      throw ResourceError("level " + std::to_string(k) + ": exponent k*l'_k = " +
                          (exponent.str().size() > 40 ? exponent.str().substr(0, 40) + "..." : exponent.str()) +
                          " exceeds the limit");
    BigInt pow2 = BigInt(1) << exponent.convert_to<unsigned>();
    s.beta = ceil_div(p.ell * p.ell * pow2, rep * rep);
    s.N = s.Nprime * ceil_div(BigInt(k) * s.beta, s.Nprime * rep);
    s.ell = s.N * p.ell;
    if (even) {
      s.rho_A = 2 * p.rho_A;
      s.rho_B = s.N * p.rho_B;
    } else {
      s.rho_B = 2 * p.rho_B;
      s.rho_A = s.N * p.rho_A;
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace freezelab::tower
