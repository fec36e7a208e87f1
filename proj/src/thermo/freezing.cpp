#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "freezelab/thermo.hpp"

namespace freezelab::thermo {

bool FreezingReport::holds() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.holds; });
}

namespace {

// 0 = none given, 1 = all given, -1 = partial.
int group(std::initializer_list<bool> present) {
  const auto n = std::count(present.begin(), present.end(), true);
  if (n == 0) return 0;
  return n == static_cast<long>(present.size()) ? 1 : -1;
}

}  // namespace

FreezingReport freezing_bound_check(const FreezingInputs& in) {
  FreezingReport rep;
  const int g1 = group({in.mu_outside.has_value(), in.R.has_value(), in.beta.has_value(), in.alphabet_size.has_value()});
  const int g2 = group({in.nu_F.has_value(), in.D.has_value(), in.ell.has_value()});
  const int g3 = group({in.entropy.has_value(), in.f_B.has_value()});
  if (g1 < 0) throw std::invalid_argument("missing constant: mass bound needs mu, R, beta and |A|");
  if (g2 < 0) throw std::invalid_argument("missing constant: boundary bound needs nu(F), D and l");
  if (g3 < 0) throw std::invalid_argument("missing constant: entropy bound needs h and f^B");
  if (g1 == 0 && g2 == 0 && g3 == 0) throw std::invalid_argument("missing constants: nothing to check");
  if (g1 > 0) {
    BoundCheck c{"mass"};
    c.lhs = *in.mu_outside;
    c.rhs = *in.beta > 0 ? (*in.R) * (*in.R) * std::log(static_cast<double>(*in.alphabet_size)) / *in.beta
                         : std::numeric_limits<double>::infinity();
    c.holds = c.lhs <= c.rhs + 1e-12;
    rep.checks.push_back(c);
  }
  if (g2 > 0) {
    BoundCheck c{"boundary"};
    c.lhs = *in.nu_F;
    c.rhs = 2.0 * *in.D / *in.ell;
    c.holds = c.lhs <= c.rhs + 1e-12;
    rep.checks.push_back(c);
  }
  if (g3 > 0) {
    BoundCheck c{"entropy"};
    c.lhs = std::log(2.0) * *in.f_B;
    c.rhs = *in.entropy;
    c.holds = c.lhs <= c.rhs + 1e-12;
    rep.checks.push_back(c);
  }
  return rep;
}

FreezingReport freezing_bound_check(const TransferResult& r, long alphabet_size) {
  FreezingInputs in;
  in.mu_outside = r.mu_forbidden;
  in.R = static_cast<double>(r.R);
  in.beta = r.beta;
  in.alphabet_size = alphabet_size;
  return freezing_bound_check(in);
}

FreezingReport freezing_bound_check(const TorusResult& r, long alphabet_size) {
  FreezingInputs in;
  in.mu_outside = r.mu_forbidden;
  in.R = 1.0;
  in.beta = r.beta;
  in.alphabet_size = alphabet_size;
  return freezing_bound_check(in);
}

tower::Rational concatenated_measure_frequency(const std::vector<std::string>& dict,
                                                 const std::vector<std::string>& forbidden) {
  if (dict.empty()) throw std::invalid_argument("empty dictionary");
  const long l = static_cast<long>(dict.front().size());
  long D = 1;
  for (const auto& f : forbidden) D = std::max(D, static_cast<long>(f.size()));
  const long blocks = (l - 1 + D + l - 1) / l;  // blocks touched by a window starting in the first
  const long nd = static_cast<long>(dict.size());
  long seqs = 1;
  for (long i = 0; i < blocks; ++i) seqs *= nd;
  tower::BigInt hits = 0;
  for (long s = 0; s < seqs; ++s) {
    std::string text;
    long v = s;
    for (long i = 0; i < blocks; ++i) {
      text += dict[static_cast<std::size_t>(v % nd)];
      v /= nd;
    }
    for (long j = 0; j < l; ++j)
      for (const auto& f : forbidden)
        if (text.compare(static_cast<std::size_t>(j), f.size(), f) == 0) {
          ++hits;
          break;
        }
  }
  return tower::Rational(hits, tower::BigInt(seqs) * l);
}

}  // namespace freezelab::thermo
