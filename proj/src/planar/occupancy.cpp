#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "freezelab/planar.hpp"

namespace freezelab::planar {

namespace {

struct Grid {
  long n;
  Point origin;
  std::vector<std::string> rows;  // rows[y][x], zero based, y upwards
  std::vector<std::vector<long>> run;  // equal symbols upwards from (x, y)

  char at(long x, long y) const { return rows[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)]; }

  // Window of side m at zero-based corner (x, y): aligned and its row.
  bool aligned(long x, long y, long m) const {
    for (long i = 0; i < m; ++i)
      if (run[static_cast<std::size_t>(x + i)][static_cast<std::size_t>(y)] < m) return false;
    return true;
  }
  std::string row(long x, long y, long m) const {
    return rows[static_cast<std::size_t>(y)].substr(static_cast<std::size_t>(x), static_cast<std::size_t>(m));
  }
};

Grid to_grid(const Pattern& p) {
  if (p.dimension() != 2 || !p.is_box() || p.width() != p.height())
    throw std::invalid_argument("occupancy needs a square 2D box");
  Grid g;
  g.n = p.width();
  g.origin = p.min_corner();
  g.rows.assign(static_cast<std::size_t>(g.n), std::string(static_cast<std::size_t>(g.n), '?'));
  for (const auto& [pt, s] : p.cells()) {
    if (s != "0" && s != "1" && s != "2") throw std::invalid_argument("occupancy needs symbols in {0,1,2}");
    g.rows[static_cast<std::size_t>(pt.y - g.origin.y)][static_cast<std::size_t>(pt.x - g.origin.x)] = s[0];
  }
  g.run.assign(static_cast<std::size_t>(g.n), std::vector<long>(static_cast<std::size_t>(g.n), 1));
  for (long x = 0; x < g.n; ++x)
    for (long y = g.n - 2; y >= 0; --y)
      if (g.at(x, y) == g.at(x, y + 1))
        g.run[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
            g.run[static_cast<std::size_t>(x)][static_cast<std::size_t>(y + 1)] + 1;
  return g;
}

}  // namespace

OccupancyReport occupancy(const Pattern& p, const tower::Tower& t, int k) {
  if (k < 1 || k > t.depth()) throw std::out_of_range("level out of range");
  const tower::Level& L = t.level(k);
  const long lp = static_cast<long>(L.ell_prime);
  Grid g = to_grid(p);
  if (g.n <= 2 * lp) throw std::invalid_argument("pattern side must exceed 2 l'_k");
  OccupancyReport r;
  r.k = k;
  r.n = g.n;
  r.ell_prime = lp;
  r.origin = g.origin;
  const Point base{g.origin.x - 1, g.origin.y - 1};

  const auto lang = core::concat_language_words(L.L(), 2 * lp);
  for (long y = 0; y + 2 * lp <= g.n; ++y)
    for (long x = 0; x + 2 * lp <= g.n; ++x)
      if (g.aligned(x, y, 2 * lp) && lang.count(g.row(x, y, 2 * lp))) r.I.insert(base + Point{x, y});

  const std::set<std::string> A(L.A_prime.begin(), L.A_prime.end()), B(L.B_prime.begin(), L.B_prime.end());
  for (long y = 0; y + lp <= g.n; ++y)
    for (long x = 0; x + lp <= g.n; ++x) {
      if (!g.aligned(x, y, lp)) continue;
      const std::string w = g.row(x, y, lp);
      const bool inA = A.count(w) != 0, inB = B.count(w) != 0;
      if (!inA && !inB) continue;
      (inA ? r.I_A : r.I_B).insert(base + Point{x, y});
      auto& J = inA ? r.J_A : r.J_B;
      auto& K = inA ? r.K_A : r.K_B;
      for (long dy = 0; dy < lp; ++dy)
        for (long dx = 0; dx < lp; ++dx) {
          Point c = g.origin + Point{x + dx, y + dy};
          J.insert(c);
          if (g.at(x + dx, y + dy) == '0') K.insert(c);
        }
    }
  return r;
}

std::string to_json(const OccupancyReport& r, int indent) {
  auto pts = [](const std::set<Point>& s) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& p : s) a.push_back({p.x, p.y});
    return a;
  };
  nlohmann::json j;
  j["k"] = r.k;
  j["n"] = r.n;
  j["ell_prime"] = r.ell_prime;
  j["I"] = pts(r.I);
  j["I_A"] = pts(r.I_A);
  j["I_B"] = pts(r.I_B);
  j["card"] = {{"I", r.I.size()},     {"I_A", r.I_A.size()}, {"I_B", r.I_B.size()}, {"J_A", r.J_A.size()},
               {"J_B", r.J_B.size()}, {"K_A", r.K_A.size()}, {"K_B", r.K_B.size()}};
  return j.dump(indent);
}

ZeroBoundReport check_zero_bounds(const OccupancyReport& r, const tower::Tower& t, int k, const Pattern* p) {
  if (k < 1 || k > t.depth()) throw std::out_of_range("level out of range");
  const bool even = k % 2 == 0;
  const tower::Level& prev = t.level(k - 1);
  const long Nkm1 = t.N(k - 1);
  const long Np = t.level(k).Nprime;
  // "rep" is the family repeated at this parity, "str" the stretched one.
  const auto& K_rep = even ? r.K_B : r.K_A;
  const auto& J_rep = even ? r.J_B : r.J_A;
  const auto& K_str = even ? r.K_A : r.K_B;
  const auto& J_str = even ? r.J_A : r.J_B;
  const Rational f_rep = even ? prev.fB : prev.fA;
  const Rational f_str = even ? prev.fA : prev.fB;

  ZeroBoundReport out;
  out.first.name = even ? "K^B" : "K^A";
  out.first.lhs = Rational(static_cast<long>(K_rep.size()));
  out.first.rhs = Rational(Nkm1, Nkm1 - 1) * Rational(static_cast<long>(J_rep.size())) * f_rep;
  out.first.holds = out.first.lhs <= out.first.rhs;
  out.second.name = even ? "K^A" : "K^B";
  out.second.lhs = Rational(static_cast<long>(K_str.size()));
  out.second.rhs = Rational(2, Np) * Rational(static_cast<long>(J_str.size())) * f_str;
  out.second.holds = out.second.lhs <= out.second.rhs;
  if (!out.holds() && p) out.witness = *p;
  return out;
}

}  // namespace freezelab::planar
