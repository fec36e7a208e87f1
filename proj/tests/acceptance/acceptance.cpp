// One line per acceptance criterion; exits non-zero if any line fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "freezelab/core.hpp"
#include "freezelab/planar.hpp"
#include "freezelab/thermo.hpp"
#include "freezelab/tower.hpp"
#include "freezelab/turing.hpp"

using namespace freezelab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) note << "; ";
      note << what;
      ok = false;
    }
  }
};

int failures = 0;

void report(int id, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.note << "exception: " << e.what();
  }
  std::printf("[%s] %2d %s: %s\n", o.ok ? "PASS" : "FAIL", id, title, o.note.str().c_str());
  std::fflush(stdout);
  if (!o.ok) ++failures;
}

tower::Tower toy(int depth, long n) {
  return tower::Tower::build(tower::TowerParams::toy(depth, std::vector<long>(static_cast<std::size_t>(depth), n),
                                                     std::vector<long>(static_cast<std::size_t>(depth), n)));
}

}  // namespace

int main() {
  report(1, "oracle equivalence n<=12", [](Outcome& o) {
    const auto t = toy(3, 4);
    const auto t0 = Clock::now();
    const auto fw = tower::forbidden_words(t, 12);
    const double secs = seconds_since(t0);
    long total = 0;
    for (long n = 1; n <= 12; ++n) {
      o.require(fw.of_length(n) == tower::forbidden_oracle(t, n), "mismatch at n=" + std::to_string(n));
      total += static_cast<long>(fw.of_length(n).size());
    }
    o.require(fw.of_length(2) == std::vector<std::string>{"00"}, "F(2) != {00}");
    o.require(secs < 60.0, "runtime >= 60 s");
    if (o.ok) o.note << total << " words, enumeration " << secs << " s";
  });

  report(2, "overlap lemma suite k<=3", [](Outcome& o) {
    const auto t = toy(3, 4);
    long claims = 0, bad = 0;
    for (int k = 1; k <= 3; ++k)
      for (const auto& c : tower::verify_overlap_lemmas(t, k).claims) {
        ++claims;
        if (!c.holds) {
          ++bad;
          o.require(false, "k=" + std::to_string(k) + " " + c.name + ": " + c.counterexamples.front() +
                               (c.counterexamples.size() > 1 ? " (+" + std::to_string(c.counterexamples.size() - 1) + " more)" : ""));
        }
      }
    if (o.ok) o.note << claims << " claims, zero counterexamples";
    else o.note << " [" << bad << " of " << claims << " claims fail]";
  });

  report(3, "frequency recursion", [](Outcome& o) {
    long rows = 0;
    for (const auto& N : std::vector<std::vector<long>>{{4, 4, 4, 4}, {3, 5, 4, 6}, {6, 3, 5, 4}}) {
      const auto t = tower::Tower::build(tower::TowerParams::toy(4, N, {4, 4, 4, 4}));
      for (const auto& r : tower::verify_frequencies(t)) {
        ++rows;
        o.require(r.ok, "level " + std::to_string(r.k));
        for (auto f : {tower::Family::A, tower::Family::B}) {
          const auto& w = f == tower::Family::A ? t.level(r.k).a : t.level(r.k).b;
          o.require(tower::closed_form_frequency(t, r.k, f) == tower::counted_frequency(w), "closed form at level " + std::to_string(r.k));
        }
      }
    }
    if (o.ok) o.note << rows << " levels over 3 parameter sets, exact rationals";
  });

  report(4, "schedule reproduction", [](Outcome& o) {
    const auto s = tower::paper_schedule(2);
    const auto& l = s.at(1);
    o.require(s[0].ell == 2 && s[0].beta == 0 && s[0].rho_A == 1 && s[0].rho_B == 1, "seed (2,0,1,1)");
    o.require(l.Nprime == 1 && l.ell_prime == 2 && l.beta == 16 && l.N == 16 && l.ell == 32 && l.rho_A == 16 && l.rho_B == 2,
              "level 1 tuple");
    const auto t = tower::Tower::build(tower::TowerParams::paper(1));
    bool flagged = false;
    for (const auto& w : t.warnings()) flagged = flagged || w.find("N'_1") != std::string::npos;
    o.require(flagged, "N'_1 < 4 conflict not flagged");
    const tower::BigInt num = tower::BigInt(1024) << 1024;
    o.require(s.at(2).beta == (num + 3) / 4, "beta_2");
    if (o.ok) o.note << "level 1 = (1,2,16,16,32,16,2), beta_2 has " << s[2].beta.str().size() << " digits";
  });

  report(5, "Turing corpus", [](Outcome& o) {
    const auto t0 = Clock::now();
    const auto dec = turing::builtin_machine("anbn_dec");
    long accepted = 0, words = 0;
    for (int len = 0; len <= 12; ++len)
      for (long bits = 0; bits < (1L << len); ++bits) {
        std::string w;
        for (int i = 0; i < len; ++i) w += (bits >> i) & 1 ? 'b' : 'a';
        const auto r = turing::run_bounded(dec, core::split_code_points(w), 100000);
        const bool acc = r.status == turing::RunStatus::Accept;
        const std::size_t h = w.size() / 2;
        const bool want = !w.empty() && w.size() % 2 == 0 && w == std::string(h, 'a') + std::string(h, 'b');
        if (acc != want) o.require(false, "decider wrong on '" + w + "'");
        accepted += acc;
        ++words;
      }
    o.require(accepted == 6, "accepted count");

    const auto en = turing::builtin_machine("anbn_enum");
    const auto e = turing::enumerate(en, 500);
    o.require(e.words.size() >= 3 && e.words[0] == "ab" && e.words[1] == "aabb" && e.words[2] == "aaabbb", "first prints");

    const auto d = turing::space_time_diagram(en, {}, 24, -2, 14);
    o.require(d.at({0, 0}) == "(q0,♯)" && d.at({1, 0}) == "♯", "row 0");
    o.require(d.at({0, 1}) == "a" && d.at({1, 1}) == "(qb+,♯)", "row 1");

    long diagrams = 0, mutations = 0, missed = 0;
    for (const auto& name : turing::builtin_names()) {
      const auto m = turing::builtin_machine(name);
      const auto ts = turing::compile_tileset(m);
      for (const std::string w : {"", "ab", "aabb", "aab", "ba", "abab", "aaabbb", "aaaabbbb"}) {
        const long lo = -2, hi = static_cast<long>(w.size()) + 14;
        const auto g = turing::space_time_diagram(m, core::split_code_points(w), 24, lo, hi);
        // a run stuck at step 0 yields one row, which holds no window
        if (g.height() < 2) continue;
        ++diagrams;
        o.require(turing::check_diagram(ts, g).ok, name + " diagram on '" + w + "' rejected");
        // boundary columns have no right or left neighbour inside the grid
        for (const auto& [p, s] : g.cells()) {
          if (p.x == lo || p.x == hi) continue;
          for (const auto& alt : ts.cell_alphabet) {
            if (alt == s) continue;
            ++mutations;
            if (turing::check_diagram(ts, g.with(p, alt)).ok) ++missed;
          }
        }
      }
    }
    o.require(missed == 0, std::to_string(missed) + " mutations accepted");
    const double secs = seconds_since(t0);
    o.require(secs < 30.0, "runtime >= 30 s");
    if (o.ok)
      o.note << words << " words, " << diagrams << " diagrams, " << mutations << " interior mutations rejected, " << secs << " s";
  });

  report(6, "transfer-matrix numerics", [](Outcome& o) {
    const double p0 = thermo::transfer_pressure(thermo::PotentialSpec::from_words("01", {}), 1.0).pressure;
    o.require(std::abs(p0 - std::log(2.0)) <= 1e-9, "phi=0 pressure");
    const double pg = thermo::transfer_pressure(thermo::PotentialSpec::from_words("01", {"11"}), 50.0).pressure;
    o.require(std::abs(pg - std::log((1 + std::sqrt(5.0)) / 2)) <= 1e-6, "golden-mean pressure at beta=50");
    std::vector<double> betas;
    for (int i = 0; i <= 50; ++i) betas.push_back(i);
    const auto sw = thermo::beta_sweep(toy(3, 4), betas, 8);
    double worst = 0;
    for (std::size_t i = 0; i < sw.rows.size(); ++i) {
      const auto& r = sw.rows[i].result;
      o.require(r.mu_forbidden * r.beta <= std::log(3.0), "mu(F) beta > ln 3 at beta=" + std::to_string(r.beta));
      // 1e-12 is the power-iteration tolerance; the plateau carries rounding noise
      if (i > 0) o.require(r.pressure <= sw.rows[i - 1].result.pressure + 1e-12, "pressure increases at beta=" + std::to_string(r.beta));
      if (i > 0 && i + 1 < sw.rows.size()) {
        const double d2 = sw.rows[i + 1].result.pressure - 2 * r.pressure + sw.rows[i - 1].result.pressure;
        worst = std::min(worst, d2);
        o.require(d2 >= -1e-8, "second difference < -1e-8 at beta=" + std::to_string(r.beta));
      }
    }
    if (o.ok) o.note << "|P-ln2|=" << std::abs(p0 - std::log(2.0)) << ", |P-ln phi|=" << std::abs(pg - std::log((1 + std::sqrt(5.0)) / 2))
                     << ", min second difference " << worst;
  });

  report(7, "exact 2D torus", [](Outcome& o) {
    const auto a = core::Alphabet::from_chars("01");
    const auto V = planar::vertical_constraint(a);
    const auto h = thermo::torus_histogram(a, V, 3);
    std::uint64_t total = 0;
    for (auto c : h.count) total += c;
    o.require(total == 512, "configurations enumerated");
    const auto r0 = thermo::evaluate_torus(h, 0.0);
    for (double m : r0.marginals) o.require(std::abs(m - 0.5) <= 1e-12, "beta=0 marginals");
    const auto a3 = thermo::exact_gibbs_torus_2d(core::Alphabet::from_chars("012"), V, 0.0, 3);
    for (double m : a3.marginals) o.require(std::abs(m - 1.0 / 3) <= 1e-12, "beta=0 marginals, 3 symbols");
    double prev = r0.mean_energy;
    for (double beta : {1.0, 5.0, 10.0, 20.0, 50.0}) {
      const auto r = thermo::evaluate_torus(h, beta);
      o.require(r.mean_energy <= prev, "energy increases at beta=" + std::to_string(beta));
      prev = r.mean_energy;
    }
    o.require(prev < 1e-12, "energy at beta=50 not near 0");
    o.require(r0.ground_states == 8 && r0.min_energy == 0, "ground states");
    if (o.ok) o.note << "512 configurations, 8 ground states, E(beta=50)=" << prev;
  });

  report(8, "occupancy and zero bounds", [](Outcome& o) {
    const auto t = tower::Tower::build(tower::TowerParams::toy(2, {4, 8}, {4, 4}));
    long with_I = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      planar::MosaicOptions mo;
      mo.block_height = 72;
      const auto p = planar::sample_mosaic(t, 2, 72, seed, mo);
      const auto r = planar::occupancy(p, t, 2);
      for (const auto& c : r.J_A) o.require(!r.J_B.count(c), "J^A and J^B meet, seed " + std::to_string(seed));
      for (const auto& u : r.I) {
        const planar::Point c = u + planar::Point{r.ell_prime, r.ell_prime};
        o.require(r.J_A.count(c) + r.J_B.count(c) == 1, "u + tau' outside J, seed " + std::to_string(seed));
      }
      const auto zb = planar::check_zero_bounds(r, t, 2, &p);
      o.require(zb.first.holds, "first bound, seed " + std::to_string(seed));
      o.require(zb.second.holds, "second bound, seed " + std::to_string(seed));
      with_I += !r.I.empty();
    }
    if (o.ok) o.note << "20 mosaics, " << with_I << " with non-empty I";
  });

  report(9, "lift counting", [](Outcome& o) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> sym(0, 2), len(1, 16);
    long lifts = 0;
    for (int i = 0; i < 200; ++i) {
      std::string w;
      const int n = len(rng);
      for (int j = 0; j < n; ++j) w += static_cast<char>('0' + sym(rng));
      const auto p = planar::duplicate_extension(w, 1);
      std::set<core::Pattern> seen;
      planar::for_each_lift(p, [&](const core::Pattern& l) { seen.insert(l); });
      const long z = std::count(w.begin(), w.end(), '0');
      o.require(seen.size() == (std::size_t{1} << z), "enumerated count for " + w);
      o.require(planar::lift_count(p) == (tower::BigInt(1) << z), "formula for " + w);
      lifts += static_cast<long>(seen.size());
    }
    if (o.ok) o.note << "200 words, " << lifts << " lifts enumerated";
  });

  report(10, "enumeration cost growth", [](Outcome& o) {
    const auto fw = tower::forbidden_words(toy(3, 4), 12);
    const double c = tower::fitted_cost_constant(fw.cost);
    for (const auto& r : fw.cost) {
      const double n = static_cast<double>(r.n);
      // c is the maximum ratio itself, so allow for its rounding
      o.require(static_cast<double>(r.cumulative) <= c * n * n * n * std::pow(3.0, n) * (1 + 1e-12), "bound at n=" + std::to_string(r.n));
    }
    o.note << "fitted c = " << c << ", tau(12) = " << fw.cost.back().cumulative;
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
