#include <algorithm>
#include <stdexcept>

#include "freezelab/errors.hpp"
#include "freezelab/tower.hpp"

namespace freezelab::tower {

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

TowerParams TowerParams::toy(int depth, std::vector<long> N, std::vector<long> Nprime) {
  TowerParams p;
  p.mode = Mode::Toy;
  p.depth = depth;
  p.N = std::move(N);
  p.Nprime = std::move(Nprime);
  return p;
}

TowerParams TowerParams::paper(int depth) {
  TowerParams p;
  p.mode = Mode::PaperSchedule;
  p.depth = depth;
  return p;
}

std::vector<std::string> Level::L_prime() const {
  std::vector<std::string> out(A_prime);
  out.insert(out.end(), B_prime.begin(), B_prime.end());
  return out;
}

namespace {

std::string repeat(const std::string& w, std::size_t n) {
  std::string out;
  out.reserve(w.size() * n);
  for (std::size_t i = 0; i < n; ++i) out += w;
  return out;
}

BigInt zeros(const std::string& w) { return static_cast<long>(std::count(w.begin(), w.end(), '0')); }

Rational max_frequency(const std::vector<std::string>& ws) {
  Rational best = 0;
  for (const auto& w : ws) best = std::max(best, counted_frequency(w));
  return best;
}

}  // namespace

Rational counted_frequency(const std::string& w) {
  if (w.empty()) throw std::invalid_argument("frequency of the empty word");
  return Rational(zeros(w), BigInt(w.size()));
}

Tower Tower::build(const TowerParams& p) {
  if (p.depth < 0) throw std::invalid_argument("depth must be non-negative");
  Tower t;
  t.params_ = p;
  std::vector<long> N, Np;
  if (p.mode == Mode::Toy) {
    if (static_cast<int>(p.N.size()) != p.depth || static_cast<int>(p.Nprime.size()) != p.depth)
      throw std::invalid_argument("toy mode needs one N_k and one N'_k per level");
    N = p.N;
    Np = p.Nprime;
  } else {
    auto sched = paper_schedule(p.depth);
    std::size_t ell = 2;
    for (int k = 1; k <= p.depth; ++k) {
      const auto& s = sched[static_cast<std::size_t>(k)];
      if (s.ell > BigInt(p.max_length))
        throw ResourceError("level " + std::to_string(k) + ": word length " + s.ell.str() + " exceeds the cap");
      N.push_back(s.N.convert_to<long>());
      Np.push_back(s.Nprime.convert_to<long>());
      ell *= static_cast<std::size_t>(N.back());
    }
  }

  Level l0;
  l0.a = "01";
  l0.b = "02";
  l0.one = "11";
  l0.two = "22";
  l0.ell = 2;
  l0.rho_A = 1;
  l0.rho_B = 1;
  l0.fA = l0.fB = Rational(1, 2);
  t.levels_.push_back(l0);

  for (int k = 1; k <= p.depth; ++k) {
    const long n = N[static_cast<std::size_t>(k - 1)], np = Np[static_cast<std::size_t>(k - 1)];
    if (n < 2) throw std::invalid_argument("N_" + std::to_string(k) + " must be at least 2");
    if (np < 1) throw std::invalid_argument("N'_" + std::to_string(k) + " must be at least 1");
    if (np < 4) t.warnings_.push_back("N'_" + std::to_string(k) + " = " + std::to_string(np) + " < 4");
    if (n < 3) t.warnings_.push_back("N_" + std::to_string(k) + " = " + std::to_string(n) + " < 3");
    const Level& prev = t.levels_.back();
    const std::size_t lp = prev.ell;
    if (lp > p.max_length / static_cast<std::size_t>(n))
      throw ResourceError("level " + std::to_string(k) + ": word length exceeds the cap");
    Level L;
    L.k = k;
    L.N = n;
    L.Nprime = np;
    L.ell = lp * static_cast<std::size_t>(n);
    L.ell_prime = lp * static_cast<std::size_t>(np);
    const std::size_t pad = static_cast<std::size_t>(n - 2) * lp, mark = static_cast<std::size_t>(np - 1) * lp;
    if (k % 2 == 1) {
      L.a = repeat(prev.a, static_cast<std::size_t>(n));
      L.b = prev.b + std::string(pad, '2') + prev.b;
      L.a_prime = repeat(prev.a, static_cast<std::size_t>(np));
      L.b_prime = prev.b + std::string(mark, '2');
      L.b_second = std::string(mark, '2') + prev.b;
      L.A_prime = {L.a_prime, std::string(L.ell_prime, '1')};
      L.B_prime = {L.b_prime, L.b_second, std::string(L.ell_prime, '2')};
    } else {
      L.a = prev.a + std::string(pad, '1') + prev.a;
      L.b = repeat(prev.b, static_cast<std::size_t>(n));
      L.a_prime = prev.a + std::string(mark, '1');
      L.a_second = std::string(mark, '1') + prev.a;
      L.b_prime = repeat(prev.b, static_cast<std::size_t>(np));
      L.A_prime = {L.a_prime, L.a_second, std::string(L.ell_prime, '1')};
      L.B_prime = {L.b_prime, std::string(L.ell_prime, '2')};
    }
    L.one = std::string(L.ell, '1');
    L.two = std::string(L.ell, '2');
    L.rho_A = zeros(L.a);
    L.rho_B = zeros(L.b);
    L.fA = counted_frequency(L.a);
    L.fB = counted_frequency(L.b);
    L.fA_prime = max_frequency(L.A_prime);
    L.fB_prime = max_frequency(L.B_prime);
    t.levels_.push_back(std::move(L));
  }
  return t;
}

int Tower::level_for_length(long n) const {
  for (const auto& l : levels_)
    if (static_cast<long>(l.ell) >= n) return l.k;
  throw ResourceError("tower depth " + std::to_string(depth()) + " too small for length " + std::to_string(n));
}

}  // namespace freezelab::tower
