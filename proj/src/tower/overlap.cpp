#include <algorithm>
#include <stdexcept>

#include "freezelab/tower.hpp"

namespace freezelab::tower {

std::vector<long> overlaps(const std::string& u, const std::string& v) {
  if (u.size() != v.size()) throw std::invalid_argument("overlaps needs words of equal length");
  std::vector<long> out;
  for (std::size_t t = 1; t < u.size(); ++t)
    if (u.compare(u.size() - t, t, v, 0, t) == 0) out.push_back(static_cast<long>(t));
  return out;
}

bool OverlapReport::all_hold() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.holds; });
}

namespace {

std::string show(const std::string& name_u, const std::string& name_v, long t) {
  return "overlaps(" + name_u + ", " + name_v + ") contains " + std::to_string(t);
}

// Every overlap length of (u, v) must satisfy ok(t).
template <class Pred>
void require(Claim& c, const std::string& nu, const std::string& u, const std::string& nv, const std::string& v,
             Pred ok) {
  for (long t : overlaps(u, v))
    if (!ok(t)) {
      c.holds = false;
      c.counterexamples.push_back(show(nu, nv, t));
    }
}

}  // namespace

OverlapReport verify_overlap_lemmas(const Tower& tw, int k) {
  if (k < 0 || k > tw.depth()) throw std::out_of_range("level out of range");
  OverlapReport r;
  r.k = k;
  const Level& L = tw.level(k);
  const std::string ks = std::to_string(k);
  auto never = [](long) { return false; };

  Claim cross{"cross-family", true, {}};
  const std::vector<std::pair<std::string, std::string>> A = {{"a_" + ks, L.a}, {"1_" + ks, L.one}};
  const std::vector<std::pair<std::string, std::string>> B = {{"b_" + ks, L.b}, {"2_" + ks, L.two}};
  for (const auto& [nu, u] : A)
    for (const auto& [nv, v] : B) {
      require(cross, nu, u, nv, v, never);
      require(cross, nv, v, nu, u, never);
    }
  r.claims.push_back(cross);
  if (k == 0) return r;

  const Level& P = tw.level(k - 1);
  const long lp = static_cast<long>(P.ell);
  const long lpp = k >= 2 ? static_cast<long>(tw.level(k - 2).ell) : 0;
  const bool even = k % 2 == 0;

  Claim cross_p{"cross-family-primed", true, {}};
  std::vector<std::pair<std::string, std::string>> Ap, Bp;
  if (even) {
    Ap = {{"a'_" + ks, L.a_prime}, {"a''_" + ks, L.a_second}, {"1'_" + ks, L.A_prime.back()}};
    Bp = {{"b'_" + ks, L.b_prime}, {"2'_" + ks, L.B_prime.back()}};
  } else {
    Ap = {{"a'_" + ks, L.a_prime}, {"1'_" + ks, L.A_prime.back()}};
    Bp = {{"b'_" + ks, L.b_prime}, {"b''_" + ks, L.b_second}, {"2'_" + ks, L.B_prime.back()}};
  }
  for (const auto& [nu, u] : Ap)
    for (const auto& [nv, v] : Bp) {
      require(cross_p, nu, u, nv, v, never);
      require(cross_p, nv, v, nu, u, never);
    }
  r.claims.push_back(cross_p);

  // Marker-stretched word (a_k for even k, b_k for odd k).
  const std::string sn = (even ? "a_" : "b_") + ks;
  const std::string& sw = even ? L.a : L.b;
  Claim structured{"structured-self", true, {}};
  require(structured, sn, sw, sn, sw, [&](long t) { return t <= lp; });
  r.claims.push_back(structured);

  // Repeated word (b_k for even k, a_k for odd k).
  const std::string pn = (even ? "b_" : "a_") + ks;
  const std::string& pw = even ? L.b : L.a;
  Claim periodic{"periodic-self", true, {}};
  require(periodic, pn, pw, pn, pw, [&](long t) { return t % lp == 0 || (k >= 2 && t <= lpp); });
  r.claims.push_back(periodic);

  // Primed marker words.
  const std::string c = even ? "a" : "b";
  const std::string& w1 = even ? L.a_prime : L.b_prime;
  const std::string& w2 = even ? L.a_second : L.b_second;
  const std::string& base = even ? P.a : P.b;
  const std::string n1 = c + "'_" + ks, n2 = c + "''_" + ks;
  const long marker = (L.Nprime - 1) * lp;

  Claim p1{"primed-self", true, {}};
  require(p1, n1, w1, n1, w1, never);
  r.claims.push_back(p1);

  Claim p2{"double-primed-self", true, {}};
  require(p2, n2, w2, n2, w2, never);
  r.claims.push_back(p2);

  Claim p3{"primed-then-double-primed", true, {}};
  require(p3, n1, w1, n2, w2, [&](long t) { return t >= 1 && t <= marker; });
  r.claims.push_back(p3);

  Claim p4{"double-primed-then-primed", true, {}};
  const auto base_ov = overlaps(base, base);
  require(p4, n2, w2, n1, w1, [&](long t) {
    return t == lp || std::find(base_ov.begin(), base_ov.end(), t) != base_ov.end();
  });
  r.claims.push_back(p4);
  return r;
}

}  // namespace freezelab::tower
