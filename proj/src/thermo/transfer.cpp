#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "freezelab/errors.hpp"
#include "freezelab/thermo.hpp"

namespace freezelab::thermo {

PotentialSpec PotentialSpec::from_words(const std::string& alphabet, const std::vector<std::string>& words) {
  PotentialSpec s;
  for (char c : alphabet) s.symbols.emplace_back(1, c);
  if (s.symbols.empty()) throw std::invalid_argument("empty alphabet");
  long longest = 0;
  for (const auto& w : words) {
    if (w.empty()) throw std::invalid_argument("empty forbidden word");
    std::vector<int> v;
    for (char c : w) {
      auto pos = alphabet.find(c);
      if (pos == std::string::npos) throw std::invalid_argument(std::string("symbol not in alphabet: ") + c);
      v.push_back(static_cast<int>(pos));
    }
    longest = std::max(longest, static_cast<long>(v.size()));
    s.forbidden.push_back(std::move(v));
  }
  s.range = std::max(2L, longest);
  return s;
}

namespace {

struct Graph {
  long q = 0, K = 0, nstates = 0;
  std::vector<char> phi;  // per edge s * q + c
};

Graph build_graph(const PotentialSpec& spec, const TransferOptions& opts) {
  Graph g;
  g.q = static_cast<long>(spec.symbols.size());
  g.K = std::max(2L, spec.range) - 1;
  long n = 1;
  for (long i = 0; i < g.K; ++i) {
    n *= g.q;
    if (static_cast<std::size_t>(n) > opts.max_states) throw ResourceError("transfer matrix has too many states");
  }
  g.nstates = n;
  g.phi.assign(static_cast<std::size_t>(n * g.q), 0);
  for (const auto& f : spec.forbidden) {
    const long L = static_cast<long>(f.size());
    if (L > g.K + 1) throw std::invalid_argument("forbidden word longer than the range");
    long code = 0;
    for (long i = 0; i < std::min(L, g.K); ++i) code = code * g.q + f[static_cast<std::size_t>(i)];
    if (L <= g.K) {
      long span = 1;
      for (long i = L; i < g.K; ++i) span *= g.q;
      for (long s = code * span; s < (code + 1) * span; ++s)
        for (long c = 0; c < g.q; ++c) g.phi[static_cast<std::size_t>(s * g.q + c)] = 1;
    } else {
      g.phi[static_cast<std::size_t>(code * g.q + f.back())] = 1;
    }
  }
  return g;
}

// Strong connectivity and period of the positive-weight graph.
void structure(const Graph& g, const std::vector<double>& w, TransferResult& r) {
  const long n = g.nstates;
  std::vector<long> level(static_cast<std::size_t>(n), -1);
  std::queue<long> bfs;
  level[0] = 0;
  bfs.push(0);
  while (!bfs.empty()) {
    long s = bfs.front();
    bfs.pop();
    for (long c = 0; c < g.q; ++c) {
      if (w[static_cast<std::size_t>(s * g.q + c)] <= 0) continue;
      long t = (s * g.q + c) % n;
      if (level[static_cast<std::size_t>(t)] < 0) {
        level[static_cast<std::size_t>(t)] = level[static_cast<std::size_t>(s)] + 1;
        bfs.push(t);
      }
    }
  }
  std::vector<char> back(static_cast<std::size_t>(n), 0);
  back[0] = 1;
  bfs.push(0);
  while (!bfs.empty()) {
    long t = bfs.front();
    bfs.pop();
    // Predecessors of t: d * q^(K-1) + t / q, reading t % q.
    const long hi = n / g.q;
    for (long d = 0; d < g.q; ++d) {
      long s = d * hi + t / g.q;
      if (w[static_cast<std::size_t>(s * g.q + t % g.q)] <= 0 || back[static_cast<std::size_t>(s)]) continue;
      back[static_cast<std::size_t>(s)] = 1;
      bfs.push(s);
    }
  }
  r.irreducible = true;
  for (long s = 0; s < n; ++s)
    if (level[static_cast<std::size_t>(s)] < 0 || !back[static_cast<std::size_t>(s)]) r.irreducible = false;
  long p = 0;
  for (long s = 0; s < n; ++s) {
    if (level[static_cast<std::size_t>(s)] < 0) continue;
    for (long c = 0; c < g.q; ++c) {
      if (w[static_cast<std::size_t>(s * g.q + c)] <= 0) continue;
      long t = (s * g.q + c) % n;
      if (level[static_cast<std::size_t>(t)] < 0) continue;
      p = std::gcd(p, std::abs(level[static_cast<std::size_t>(s)] + 1 - level[static_cast<std::size_t>(t)]));
    }
  }
  r.period = p == 0 ? 1 : p;
}

// Power iteration for the Perron vectors of W + shift * I.
bool iterate(const Graph& g, const std::vector<double>& w, double shift, const TransferOptions& opts,
             std::vector<double>& left, std::vector<double>& right, double& lambda, long& iters) {
  const long n = g.nstates, q = g.q;
  left.assign(static_cast<std::size_t>(n), 1.0 / static_cast<double>(n));
  right.assign(static_cast<std::size_t>(n), 1.0 / static_cast<double>(n));
  std::vector<double> nl(static_cast<std::size_t>(n)), nr(static_cast<std::size_t>(n));
  lambda = 0;
  for (iters = 1; iters <= opts.max_iterations; ++iters) {
    std::fill(nl.begin(), nl.end(), 0.0);
    for (long s = 0; s < n; ++s) {
      double acc = shift * right[static_cast<std::size_t>(s)];
      const double ls = left[static_cast<std::size_t>(s)];
      nl[static_cast<std::size_t>(s)] += shift * ls;
      for (long c = 0; c < q; ++c) {
        const long e = s * q + c;
        const long t = e % n;
        const double we = w[static_cast<std::size_t>(e)];
        acc += we * right[static_cast<std::size_t>(t)];
        nl[static_cast<std::size_t>(t)] += ls * we;
      }
      nr[static_cast<std::size_t>(s)] = acc;
    }
    const double sr = std::accumulate(nr.begin(), nr.end(), 0.0);
    const double sl = std::accumulate(nl.begin(), nl.end(), 0.0);
    if (!(sr > 0) || !(sl > 0)) return false;
    double dr = 0, dl = 0, mr = 0, ml = 0;
    for (long s = 0; s < n; ++s) {
      nr[static_cast<std::size_t>(s)] /= sr;
      nl[static_cast<std::size_t>(s)] /= sl;
      dr = std::max(dr, std::abs(nr[static_cast<std::size_t>(s)] - right[static_cast<std::size_t>(s)]));
      dl = std::max(dl, std::abs(nl[static_cast<std::size_t>(s)] - left[static_cast<std::size_t>(s)]));
      mr = std::max(mr, nr[static_cast<std::size_t>(s)]);
      ml = std::max(ml, nl[static_cast<std::size_t>(s)]);
    }
    const double dlam = std::abs(sr - lambda);
    lambda = sr;
    right.swap(nr);
    left.swap(nl);
    if (dlam <= opts.tolerance * lambda && dr <= opts.tolerance * mr && dl <= opts.tolerance * ml) return true;
  }
  return false;
}

}  // namespace

TransferResult transfer_pressure(const PotentialSpec& spec, double beta, const TransferOptions& opts) {
  if (!(beta >= 0)) throw std::invalid_argument("beta must be non-negative");
  Graph g = build_graph(spec, opts);
  const long n = g.nstates, q = g.q;
  const double heavy = std::exp(-beta);
  std::vector<double> w(g.phi.size());
  for (std::size_t e = 0; e < w.size(); ++e) w[e] = g.phi[e] ? heavy : 1.0;

  TransferResult r;
  r.beta = beta;
  r.states = n;
  structure(g, w, r);
  std::vector<double> left, right;
  double lam = 0;
  long iters = 0;
  const bool need_shift = r.period > 1;
  r.converged = !need_shift && iterate(g, w, 0.0, opts, left, right, lam, iters);
  r.iterations = iters;
  if (!r.converged) {
    r.shifted = true;
    r.converged = iterate(g, w, 1.0, opts, left, right, lam, iters);
    r.iterations += iters;
    lam -= 1.0;
  }
  r.lambda = lam;
  r.pressure = std::log(lam);

  // pi(s) proportional to l(s) r(s).
  r.stationary.assign(static_cast<std::size_t>(n), 0.0);
  double z = 0;
  for (long s = 0; s < n; ++s) z += left[static_cast<std::size_t>(s)] * right[static_cast<std::size_t>(s)];
  for (long s = 0; s < n; ++s)
    r.stationary[static_cast<std::size_t>(s)] = left[static_cast<std::size_t>(s)] * right[static_cast<std::size_t>(s)] / z;
  r.right = right;
  r.weights = w;
  r.marginals.assign(static_cast<std::size_t>(q), 0.0);
  const long hi = n / q;
  for (long s = 0; s < n; ++s) r.marginals[static_cast<std::size_t>(s / hi)] += r.stationary[static_cast<std::size_t>(s)];
  double muF = 0;
  for (long s = 0; s < n; ++s) {
    const double rs = right[static_cast<std::size_t>(s)];
    if (rs <= 0) continue;
    for (long c = 0; c < q; ++c) {
      const long e = s * q + c;
      if (!g.phi[static_cast<std::size_t>(e)]) continue;
      muF += r.stationary[static_cast<std::size_t>(s)] * w[static_cast<std::size_t>(e)] *
             right[static_cast<std::size_t>(e % n)] / (lam * rs);
    }
  }
  r.mu_forbidden = std::clamp(muF, 0.0, 1.0);
  r.R = 1;
  r.eps = beta > 0 ? static_cast<double>(r.R * r.R) * std::log(static_cast<double>(q)) / beta
                   : std::numeric_limits<double>::infinity();
  return r;
}

double transition_probability(const TransferResult& r, long s, int c) {
  const long q = static_cast<long>(r.marginals.size());
  const long e = s * q + c;
  return r.weights.at(static_cast<std::size_t>(e)) * r.right.at(static_cast<std::size_t>(e % r.states)) /
         (r.lambda * r.right.at(static_cast<std::size_t>(s)));
}

}  // namespace freezelab::thermo
