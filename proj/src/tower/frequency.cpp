#include <stdexcept>

#include "freezelab/tower.hpp"

namespace freezelab::tower {

Rational closed_form_frequency(const Tower& t, int k, Family f) {
  if (k < 0 || k > t.depth()) throw std::out_of_range("level out of range");
  Rational r(1, 2);
  auto factor = [&](int j) { return Rational(2, t.N(j)); };
  if (k % 2 == 1) {
    const int m = (k + 1) / 2;
    for (int i = 1; i <= m; ++i) r *= factor(f == Family::A ? 2 * i - 2 : 2 * i - 1);
  } else {
    const int m = k / 2;
    for (int i = 1; i <= m; ++i) r *= factor(f == Family::A ? 2 * i : 2 * i - 1);
  }
  return r;
}

Rational recursive_frequency(const Tower& t, int k, Family f) {
  if (k < 1 || k > t.depth()) throw std::out_of_range("level out of range");
  const Level& prev = t.level(k - 1);
  const Rational before = f == Family::A ? prev.fA : prev.fB;
  // The family that is stretched by a marker at this parity loses density.
  const bool stretched = (k % 2 == 1) == (f == Family::B);
  return stretched ? before * Rational(2, t.N(k)) : before;
}

Rational recursive_primed_frequency(const Tower& t, int k, Family f) {
  if (k < 1 || k > t.depth()) throw std::out_of_range("level out of range");
  const Level& prev = t.level(k - 1);
  const Rational before = f == Family::A ? prev.fA : prev.fB;
  const bool stretched = (k % 2 == 1) == (f == Family::B);
  return stretched ? before / t.level(k).Nprime : before;
}

std::vector<FrequencyRow> verify_frequencies(const Tower& t) {
  std::vector<FrequencyRow> rows;
  for (const auto& L : t.levels()) {
    FrequencyRow r{};
    r.k = L.k;
    r.fA = L.fA;
    r.fB = L.fB;
    r.fA_closed = closed_form_frequency(t, L.k, Family::A);
    r.fB_closed = closed_form_frequency(t, L.k, Family::B);
    r.ok = r.fA == r.fA_closed && r.fB == r.fB_closed;
    if (L.k >= 1) {
      r.fA_prime = L.fA_prime;
      r.fB_prime = L.fB_prime;
      r.fA_prime_rec = recursive_primed_frequency(t, L.k, Family::A);
      r.fB_prime_rec = recursive_primed_frequency(t, L.k, Family::B);
      r.ok = r.ok && r.fA_prime == r.fA_prime_rec && r.fB_prime == r.fB_prime_rec &&
             r.fA == recursive_frequency(t, L.k, Family::A) && r.fB == recursive_frequency(t, L.k, Family::B);
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace freezelab::tower
