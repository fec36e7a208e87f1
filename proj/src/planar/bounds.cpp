#include <cmath>
#include <numeric>
#include <stdexcept>

#include "freezelab/planar.hpp"

namespace freezelab::planar {

double big_log(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log of a non-positive integer");
  const std::size_t bits = boost::multiprecision::msb(x);
  if (bits < 900) return std::log(x.convert_to<double>());
  const std::size_t shift = bits - 60;
  BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

CoveringBound covering_entropy_bound(long n, long ell, double eps, const BigInt& card_E, long card_A_tilde,
                                     long card_A_hat, const BigInt& C) {
  if (!(n > 2 * ell && 2 * ell > 2)) throw std::invalid_argument("need n > 2l > 2");
  if (!(eps > 0 && eps <= 1)) throw std::invalid_argument("need eps in (0,1]");
  if (card_A_tilde < 1 || card_A_hat < 1 || C < 1) throw std::invalid_argument("cardinalities must be positive");
  CoveringBound b;
  const double nn = static_cast<double>(n) * static_cast<double>(n);
  const double l = static_cast<double>(ell);
  b.lhs = big_log(card_E) / nn;
  b.rhs = std::log(static_cast<double>(card_A_tilde)) / l + big_log(C) / (l * l) +
          eps * std::log(static_cast<double>(card_A_hat));
  b.holds = b.lhs <= b.rhs + 1e-12;
  return b;
}

BigInt count_aligned_covering(long n, long ell, const std::set<Point>& S, long q) {
  if (n < 1 || ell < 1 || q < 1) throw std::invalid_argument("bad covering instance");
  std::vector<long> parent(static_cast<std::size_t>(n * n));
  std::iota(parent.begin(), parent.end(), 0L);
  auto find = [&](long a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  const long m = 2 * ell;
  for (const auto& u : S) {
    if (u.x < 0 || u.y < 0 || u.x + m > n || u.y + m > n) throw std::invalid_argument("offset outside [0, n-2l]^2");
    for (long x = u.x; x < u.x + m; ++x)
      for (long y = u.y; y + 1 < u.y + m; ++y) {
        long a = find(y * n + x), b = find((y + 1) * n + x);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
      }
  }
  long comps = 0;
  for (long i = 0; i < n * n; ++i)
    if (find(i) == i) ++comps;
  BigInt out = 1;
  for (long i = 0; i < comps; ++i) out *= q;
  return out;
}

}  // namespace freezelab::planar
