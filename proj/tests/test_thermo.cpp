#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <sstream>

#include "freezelab/errors.hpp"
#include "freezelab/planar.hpp"
#include "freezelab/thermo.hpp"

using namespace freezelab;
using namespace freezelab::thermo;
using doctest::Approx;

namespace {

struct Dense {
  double pressure;
  std::vector<double> marginals;
};

// Builds the de Bruijn matrix from scratch and diagonalises it with Eigen.
Dense dense_oracle(const std::string& alpha, const std::vector<std::string>& F, double beta) {
  const long q = static_cast<long>(alpha.size());
  std::size_t longest = 2;
  for (const auto& f : F) longest = std::max(longest, f.size());
  const long K = static_cast<long>(longest) - 1;
  std::vector<std::string> states{""};
  for (long i = 0; i < K; ++i) {
    std::vector<std::string> next;
    for (const auto& s : states)
      for (char c : alpha) next.push_back(s + c);
    states.swap(next);
  }
  const long n = static_cast<long>(states.size());
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (long i = 0; i < n; ++i)
    for (char c : alpha) {
      const std::string win = states[static_cast<std::size_t>(i)] + c;
      bool hit = false;
      for (const auto& f : F) hit = hit || win.compare(0, f.size(), f) == 0;
      const std::string to = win.substr(1);
      const long j = std::find(states.begin(), states.end(), to) - states.begin();
      M(i, j) += std::exp(-beta * (hit ? 1.0 : 0.0));
    }
  Eigen::EigenSolver<Eigen::MatrixXd> right(M), left(M.transpose());
  auto top = [](const Eigen::EigenSolver<Eigen::MatrixXd>& es) {
    long best = 0;
    for (long i = 1; i < es.eigenvalues().size(); ++i)
      if (es.eigenvalues()[i].real() > es.eigenvalues()[best].real()) best = i;
    Eigen::VectorXd v = es.eigenvectors().col(best).real();
    if (v.sum() < 0) v = -v;
    return std::make_pair(es.eigenvalues()[best].real(), v);
  };
  auto [lam, r] = top(right);
  auto [lam2, l] = top(left);
  (void)lam2;
  Dense d{std::log(lam), std::vector<double>(static_cast<std::size_t>(q), 0.0)};
  const double z = l.dot(r);
  for (long i = 0; i < n; ++i)
    d.marginals[static_cast<std::size_t>(alpha.find(states[static_cast<std::size_t>(i)][0]))] += l(i) * r(i) / z;
  return d;
}

std::vector<std::vector<double>> random_joint(std::mt19937_64& rng, int a, int b) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<double>> j(static_cast<std::size_t>(a), std::vector<double>(static_cast<std::size_t>(b)));
  double s = 0;
  for (auto& r : j)
    for (auto& x : r) s += (x = u(rng));
  for (auto& r : j)
    for (auto& x : r) x /= s;
  return j;
}

core::ForbiddenSet vertical() {
  return core::ForbiddenSet(2, {core::Pattern::from_rows({{"0"}, {"1"}}), core::Pattern::from_rows({{"1"}, {"0"}})});
}

}  // namespace

TEST_CASE("entropy of simple partitions") {
  for (int n = 1; n <= 6; ++n) CHECK(partition_entropy(std::vector<double>(static_cast<std::size_t>(n), 1.0 / n)) == Approx(std::log(n)));
  CHECK_THROWS(partition_entropy({0.5, 0.6}));
  CHECK_THROWS(partition_entropy({1.2, -0.2}));
  // Q refines P: every column has a single non-zero row
  std::vector<std::vector<double>> refine{{0.2, 0.3, 0.0}, {0.0, 0.0, 0.5}};
  CHECK(conditional_entropy(refine) == Approx(0.0));
}

TEST_CASE("entropy identities on random partitions") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    auto j = random_joint(rng, 4, 4);
    std::vector<std::vector<double>> jt(4, std::vector<double>(4));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) jt[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = j[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    const double hp = partition_entropy(row_marginal(j)), hq = partition_entropy(column_marginal(j));
    const double hpq = joint_entropy(j), hp_q = conditional_entropy(j), hq_p = conditional_entropy(jt);
    CHECK(std::abs(hpq - (hp + hq_p)) < 1e-10);
    CHECK(std::abs(hpq - (hq + hp_q)) < 1e-10);
    CHECK(hp_q <= hp + 1e-10);
    CHECK(hpq <= hp + hq + 1e-10);
    CHECK(hp_q >= -1e-12);
  }
}

TEST_CASE("pressure reference values") {
  auto none = PotentialSpec::from_words("01", {});
  for (double beta : {0.0, 1.0, 50.0}) CHECK(std::abs(transfer_pressure(none, beta).pressure - std::log(2.0)) < 1e-9);
  auto golden = PotentialSpec::from_words("01", {"11"});
  CHECK(std::abs(transfer_pressure(golden, 0.0).pressure - std::log(2.0)) < 1e-9);
  auto r = transfer_pressure(golden, 50.0);
  CHECK(std::abs(r.pressure - std::log((1 + std::sqrt(5.0)) / 2)) < 1e-6);
  CHECK(r.converged);
  CHECK(r.irreducible);
}

TEST_CASE("pressure and marginals against a dense eigensolver") {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases{
      {"01", {"11"}}, {"012", {"00"}}, {"012", {"00", "121", "2"}}, {"01", {"0110", "111"}}, {"012", {"01", "10", "22"}}};
  for (const auto& [alpha, F] : cases)
    for (double beta : {0.0, 0.5, 2.0, 7.0}) {
      auto r = transfer_pressure(PotentialSpec::from_words(alpha, F), beta);
      auto d = dense_oracle(alpha, F, beta);
      CHECK(r.pressure == Approx(d.pressure).epsilon(1e-9));
      for (std::size_t a = 0; a < alpha.size(); ++a) CHECK(std::abs(r.marginals[a] - d.marginals[a]) < 1e-8);
    }
}

TEST_CASE("equilibrium chain is stationary") {
  auto spec = PotentialSpec::from_words("012", {"00", "121", "20"});
  for (double beta : {0.0, 1.0, 4.0}) {
    auto r = transfer_pressure(spec, beta);
    const long n = r.states, q = 3;
    std::vector<double> next(static_cast<std::size_t>(n), 0.0);
    for (long s = 0; s < n; ++s) {
      double row = 0;
      for (int c = 0; c < q; ++c) {
        const double p = transition_probability(r, s, c);
        row += p;
        next[static_cast<std::size_t>((s * q + c) % n)] += r.stationary[static_cast<std::size_t>(s)] * p;
      }
      CHECK(std::abs(row - 1.0) < 1e-10);
    }
    for (long s = 0; s < n; ++s) CHECK(std::abs(next[static_cast<std::size_t>(s)] - r.stationary[static_cast<std::size_t>(s)]) < 1e-10);
  }
}

TEST_CASE("periodic positive-weight graph is flagged") {
  // exp(-1e4) underflows, leaving the 2-cycle 0 -> 1 -> 0
  auto r = transfer_pressure(PotentialSpec::from_words("01", {"00", "11"}), 1e4);
  CHECK(r.period == 2);
  CHECK(r.shifted);
  CHECK(r.converged);
  CHECK(std::abs(r.pressure) < 1e-9);
  CHECK(r.marginals[0] == Approx(0.5));
}

TEST_CASE("oversized state space is refused") {
  TransferOptions o;
  o.max_states = 100;
  CHECK_THROWS_AS(transfer_pressure(PotentialSpec::from_words("012", {"000000"}), 1.0, o), ResourceError);
}

TEST_CASE("tower sweep") {
  const auto t = tower::Tower::build(tower::TowerParams::toy(3, {4, 4, 4}, {4, 4, 4}));
  std::vector<double> betas;
  for (int i = 0; i <= 50; ++i) betas.push_back(i);
  auto sw = beta_sweep(t, betas, 8);
  REQUIRE(sw.rows.size() == betas.size());
  for (double m : sw.rows.front().result.marginals) CHECK(m == Approx(1.0 / 3).epsilon(1e-12));
  for (std::size_t i = 0; i < sw.rows.size(); ++i) {
    const auto& r = sw.rows[i];
    CHECK(r.result.beta == betas[i]);
    CHECK(r.bound_ok());
    CHECK(r.result.converged);
    CHECK(r.result.mu_forbidden * r.result.beta <= std::log(3.0) + 1e-9);
    if (i > 0) {
      CHECK(r.result.pressure <= sw.rows[i - 1].result.pressure + 1e-12);
      const double hi = r.result.marginals[1] + r.result.marginals[2];
      const double lo = sw.rows[i - 1].result.marginals[1] + sw.rows[i - 1].result.marginals[2];
      CHECK(hi >= lo - 1e-9);
    }
    if (i > 0 && i + 1 < sw.rows.size())
      CHECK(sw.rows[i + 1].result.pressure - 2 * r.result.pressure + sw.rows[i - 1].result.pressure >= -1e-8);
  }
  std::ostringstream csv;
  write_sweep_csv(csv, sw);
  std::istringstream in(csv.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "beta,pressure,mu0,mu1,mu2,muF,bound_ok");
  std::getline(in, line);
  CHECK(line.rfind("0,1.09861228867,0.333333333333,", 0) == 0);
  CHECK(line.back() == '1');
}

TEST_CASE("single forbidden pair freezes") {
  const auto t = tower::Tower::build(tower::TowerParams::toy(3, {4, 4, 4}, {4, 4, 4}));
  auto sw = beta_sweep(t, {1, 2, 5, 10, 20, 40}, 2);
  REQUIRE(sw.forbidden == std::vector<std::string>{"00"});
  double prev = 1;
  for (const auto& r : sw.rows) {
    CHECK(r.result.mu_forbidden <= std::log(3.0) / r.result.beta);
    CHECK(r.result.mu_forbidden < prev);
    prev = r.result.mu_forbidden;
  }
  CHECK(prev < 1e-8);
}

TEST_CASE("torus energy against direct occurrence counting") {
  const auto a = core::Alphabet::from_chars("01");
  // two patterns that can match at the same anchor
  core::ForbiddenSet F(2, {core::Pattern::from_rows({{"1"}, {"1"}}), core::Pattern::from_rows({{"1", "1"}}),
                           core::Pattern::from_rows({{"1", "0"}, {"0", "1"}})});
  const long n = 3;
  auto h = torus_histogram(a, F, n);
  std::vector<std::uint64_t> count(h.count.size(), 0);
  for (long bits = 0; bits < 512; ++bits) {
    std::vector<std::vector<int>> cfg(3, std::vector<int>(3));
    for (long i = 0; i < 9; ++i) cfg[static_cast<std::size_t>(i / 3)][static_cast<std::size_t>(i % 3)] = (bits >> i) & 1;
    auto c = [&](long x, long y) { return cfg[static_cast<std::size_t>(((y % n) + n) % n)][static_cast<std::size_t>(((x % n) + n) % n)]; };
    long e = 0;
    for (long y = 0; y < n; ++y)
      for (long x = 0; x < n; ++x) {
        // rows[y] with y growing upwards: vertical domino of two 1s
        e += c(x, y) == 1 && c(x, y + 1) == 1;
        e += c(x, y) == 1 && c(x + 1, y) == 1;
        // top row "1 0" over bottom row "0 1"
        e += c(x, y) == 0 && c(x + 1, y) == 1 && c(x, y + 1) == 1 && c(x + 1, y + 1) == 0;
      }
    CHECK(torus_energy(cfg, a, F) == e);
    ++count[static_cast<std::size_t>(e)];
  }
  CHECK(count == h.count);
}

TEST_CASE("exact torus Gibbs measure") {
  const auto a = core::Alphabet::from_chars("01");
  auto r0 = exact_gibbs_torus_2d(a, vertical(), 0.0, 3);
  for (double m : r0.marginals) CHECK(std::abs(m - 0.5) < 1e-12);
  CHECK(r0.log_Z == Approx(9 * std::log(2.0)));
  double prev = r0.mean_energy;
  for (double beta : {0.5, 1.0, 2.0, 5.0, 10.0, 50.0}) {
    auto r = exact_gibbs_torus_2d(a, vertical(), beta, 3);
    CHECK(r.mean_energy <= prev + 1e-12);
    prev = r.mean_energy;
    CHECK(r.ground_states == 8);
    CHECK(r.min_energy == 0);
    CHECK(std::abs(r.marginals[0] - 0.5) < 1e-12);
  }
  CHECK(prev < 1e-15);
  auto three = exact_gibbs_torus_2d(core::Alphabet::from_chars("012"), vertical(), 0.0, 3);
  for (double m : three.marginals) CHECK(std::abs(m - 1.0 / 3) < 1e-12);
  CHECK_THROWS_AS(torus_histogram(a, vertical(), 5), ResourceError);
}

TEST_CASE("freezing bound checks") {
  FreezingInputs none;
  CHECK_THROWS_AS(freezing_bound_check(none), std::invalid_argument);
  FreezingInputs partial;
  partial.mu_outside = 0.1;
  partial.beta = 2;
  CHECK_THROWS_AS(freezing_bound_check(partial), std::invalid_argument);

  auto r0 = transfer_pressure(PotentialSpec::from_words("012", {"00"}), 0.0);
  auto rep0 = freezing_bound_check(r0, 3);
  CHECK(rep0.holds());
  CHECK(std::isinf(rep0.checks.front().rhs));
  auto a = core::Alphabet::from_chars("01");
  CHECK(freezing_bound_check(exact_gibbs_torus_2d(a, vertical(), 3.0, 3), 2).holds());

  FreezingInputs bad;
  bad.nu_F = 0.5;
  bad.D = 1;
  bad.ell = 8;
  auto rb = freezing_bound_check(bad);
  CHECK_FALSE(rb.holds());
  CHECK(rb.checks.front().margin() == Approx(-0.25));
}

TEST_CASE("concatenated measure frequency") {
  CHECK(concatenated_measure_frequency({"01", "10"}, {"11"}) == tower::Rational(1, 8));
  CHECK(concatenated_measure_frequency({"0000"}, {"1"}) == 0);
  CHECK(concatenated_measure_frequency({"ab"}, {"a"}) == tower::Rational(1, 2));
}

TEST_CASE("boundary and entropy bounds on B-family concatenations") {
  const auto t = tower::Tower::build(tower::TowerParams::toy(3, {4, 4, 4}, {4, 4, 4}));
  for (int k = 1; k <= 3; ++k) {
    const auto& L = t.level(k);
    const long m = 4;
    const auto F = tower::forbidden_words(t, m).up_to(m);
    FreezingInputs in;
    in.nu_F = static_cast<double>(concatenated_measure_frequency(L.B(), F));
    in.D = static_cast<double>(m);
    in.ell = static_cast<double>(L.ell);
    tower::BigInt lifted = 0;
    for (const auto& w : L.B()) lifted += planar::lift_count(planar::duplicate_extension(w, 1));
    in.entropy = planar::big_log(lifted) / static_cast<double>(L.ell);
    in.f_B = static_cast<double>(L.fB);
    auto rep = freezing_bound_check(in);
    CHECK(rep.checks.size() == 2);
    CHECK(rep.holds());
  }
}
