#include <cmath>
#include <stdexcept>

#include "freezelab/errors.hpp"
#include "freezelab/thermo.hpp"

namespace freezelab::thermo {

namespace {

struct Compiled {
  std::vector<long> dx, dy;
  std::vector<int> sym;
};

std::vector<Compiled> compile(const core::Alphabet& a, const core::ForbiddenSet& f) {
  if (f.dimension() != 2) throw std::invalid_argument("torus needs a 2D forbidden set");
  std::vector<Compiled> out;
  for (const auto& p : f.patterns()) {
    Compiled c;
    const core::Point lo = p.min_corner();
    bool ok = true;
    for (const auto& [pt, s] : p.cells()) {
      auto idx = a.index(s);
      if (!idx) {
        ok = false;
        break;
      }
      c.dx.push_back(pt.x - lo.x);
      c.dy.push_back(pt.y - lo.y);
      c.sym.push_back(*idx);
    }
    if (ok) out.push_back(std::move(c));
  }
  return out;
}

long energy(const std::vector<int>& cfg, long n, const std::vector<Compiled>& pats) {
  long e = 0;
  for (long y = 0; y < n; ++y)
    for (long x = 0; x < n; ++x) {
      for (const auto& p : pats) {
        bool m = true;
        for (std::size_t i = 0; i < p.sym.size() && m; ++i)
          m = cfg[static_cast<std::size_t>(((y + p.dy[i]) % n) * n + (x + p.dx[i]) % n)] == p.sym[i];
        e += m;
      }
    }
  return e;
}

}  // namespace

long torus_energy(const std::vector<std::vector<int>>& cfg, const core::Alphabet& a, const core::ForbiddenSet& f) {
  const long n = static_cast<long>(cfg.size());
  std::vector<int> flat;
  for (const auto& row : cfg) {
    if (static_cast<long>(row.size()) != n) throw std::invalid_argument("torus configuration must be square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return energy(flat, n, compile(a, f));
}

TorusHistogram torus_histogram(const core::Alphabet& a, const core::ForbiddenSet& f, long n) {
  if (n < 1) throw std::invalid_argument("torus side must be positive");
  const long q = static_cast<long>(a.size());
  const long cells = n * n;
  double total = std::pow(static_cast<double>(q), static_cast<double>(cells));
  if (total > 1e6) throw ResourceError("torus state space exceeds 1e6 configurations");
  const auto pats = compile(a, f);
  TorusHistogram h;
  h.n = n;
  h.q = q;
  const std::size_t levels = static_cast<std::size_t>(cells) * pats.size() + 1;
  h.count.assign(levels, 0);
  h.symbol_sum.assign(levels, std::vector<std::uint64_t>(static_cast<std::size_t>(q), 0));
  std::vector<int> cfg(static_cast<std::size_t>(cells), 0);
  while (true) {
    const long e = energy(cfg, n, pats);
    ++h.count[static_cast<std::size_t>(e)];
    for (int c : cfg) ++h.symbol_sum[static_cast<std::size_t>(e)][static_cast<std::size_t>(c)];
    long i = 0;
    while (i < cells && ++cfg[static_cast<std::size_t>(i)] == q) cfg[static_cast<std::size_t>(i++)] = 0;
    if (i == cells) break;
  }
  return h;
}

TorusResult evaluate_torus(const TorusHistogram& h, double beta) {
  if (!(beta >= 0)) throw std::invalid_argument("beta must be non-negative");
  TorusResult r;
  r.n = h.n;
  r.beta = beta;
  r.min_energy = -1;
  for (std::size_t e = 0; e < h.count.size(); ++e)
    if (h.count[e]) {
      r.min_energy = static_cast<long>(e);
      break;
    }
  r.ground_states = h.count[static_cast<std::size_t>(r.min_energy)];
  // Weights relative to the ground energy keep the sums finite for large beta.
  double z = 0, ez = 0;
  std::vector<double> sym(static_cast<std::size_t>(h.q), 0.0);
  for (std::size_t e = 0; e < h.count.size(); ++e) {
    if (!h.count[e]) continue;
    const double w = std::exp(-beta * static_cast<double>(static_cast<long>(e) - r.min_energy));
    z += static_cast<double>(h.count[e]) * w;
    ez += static_cast<double>(h.count[e]) * w * static_cast<double>(e);
    for (long a = 0; a < h.q; ++a) sym[static_cast<std::size_t>(a)] += static_cast<double>(h.symbol_sum[e][static_cast<std::size_t>(a)]) * w;
  }
  const double cells = static_cast<double>(h.n * h.n);
  r.log_Z = std::log(z) - beta * static_cast<double>(r.min_energy);
  r.Z = std::exp(r.log_Z);
  r.mean_energy = ez / z;
  r.mu_forbidden = r.mean_energy / cells;
  for (double s : sym) r.marginals.push_back(s / (z * cells));
  return r;
}

TorusResult exact_gibbs_torus_2d(const core::Alphabet& a, const core::ForbiddenSet& f, double beta, long n) {
  return evaluate_torus(torus_histogram(a, f, n), beta);
}

}  // namespace freezelab::thermo
