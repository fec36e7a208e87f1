#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace freezelab::tower {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& r);  // "p/q"

enum class Mode { Toy, PaperSchedule };
enum class Family { A, B };

struct TowerParams {
  Mode mode = Mode::Toy;
  int depth = 0;
  // Toy mode: N[k-1] = N_k and Nprime[k-1] = N'_k for k = 1..depth.
  std::vector<long> N, Nprime;
  // Words longer than this are refused.
  std::size_t max_length = std::size_t{1} << 26;

  static TowerParams toy(int depth, std::vector<long> N, std::vector<long> Nprime);
  static TowerParams paper(int depth);
};

struct Level {
  int k = 0;
  long N = 0, Nprime = 0;  // 0 at k = 0
  std::size_t ell = 0, ell_prime = 0;
  std::string a, b, one, two;
  // a_second exists for even k, b_second for odd k (empty otherwise).
  std::string a_prime, a_second, b_prime, b_second;
  std::vector<std::string> A_prime, B_prime;  // the primed dictionaries
  BigInt rho_A, rho_B;                        // zeros in a_k and b_k
  Rational fA, fB, fA_prime, fB_prime;        // counted

  std::vector<std::string> L() const { return {a, b, one, two}; }
  std::vector<std::string> A() const { return {a, one}; }
  std::vector<std::string> B() const { return {b, two}; }
  std::vector<std::string> L_prime() const;
};

class Tower {
 public:
  static Tower build(const TowerParams& p);

  const TowerParams& params() const { return params_; }
  int depth() const { return static_cast<int>(levels_.size()) - 1; }
  const Level& level(int k) const { return levels_.at(static_cast<std::size_t>(k)); }
  const std::vector<Level>& levels() const { return levels_; }
  // N_k with N_0 = 2.
  long N(int k) const { return k == 0 ? 2 : level(k).N; }
  // Hypotheses of the construction that the parameters violate.
  const std::vector<std::string>& warnings() const { return warnings_; }
  // Smallest k with ell_k >= n.
  int level_for_length(long n) const;

 private:
  TowerParams params_;
  std::vector<Level> levels_;
  std::vector<std::string> warnings_;
};

Rational counted_frequency(const std::string& w);
// Closed-form products with N_0 = 2 and f_0 = 1/2.
Rational closed_form_frequency(const Tower& t, int k, Family f);
// One-step recursions from level k - 1.
Rational recursive_frequency(const Tower& t, int k, Family f);
Rational recursive_primed_frequency(const Tower& t, int k, Family f);

struct FrequencyRow {
  int k;
  Rational fA, fB, fA_closed, fB_closed, fA_prime, fB_prime, fA_prime_rec, fB_prime_rec;
  bool ok;
};
std::vector<FrequencyRow> verify_frequencies(const Tower& t);

struct ScheduleLevel {
  int k = 0;
  BigInt Nprime, ell_prime, beta, N, ell, rho_A, rho_B;
};

struct ScheduleLimits {
  // Largest admissible exponent k * ell'_k in 2^(k ell'_k).
  std::uint64_t max_exponent = std::uint64_t{1} << 24;
};

// Levels 0..depth of the (N', beta, N) recursion. Throws ResourceError
// naming the first level whose numbers exceed the limits.
std::vector<ScheduleLevel> paper_schedule(int depth, const ScheduleLimits& lim = {});

enum class PairSet { All, CrossFamily };

struct ForbiddenOptions {
  bool minimal_only = false;
  PairSet pairs = PairSet::All;
  std::uint64_t max_candidates = 200'000'000;
};

struct ForbiddenCost {
  long n = 0;
  std::uint64_t candidates = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t cumulative = 0;  // tau(n)
};

struct ForbiddenWords {
  std::vector<std::vector<std::string>> by_length;  // index n - 1
  std::vector<ForbiddenCost> cost;
  const std::vector<std::string>& of_length(long n) const { return by_length.at(static_cast<std::size_t>(n - 1)); }
  std::vector<std::string> up_to(long n) const;
};

// Candidates of length n in base-3 counter order over {0,1,2}, kept when they
// are not a subword of any concatenation of two segments of level k words.
ForbiddenWords forbidden_words(const Tower& t, long n_max, const ForbiddenOptions& opts = {});

// Brute force: complement of all length-n subwords of w1 w2, w1, w2 in L_k.
std::vector<std::string> forbidden_oracle(const Tower& t, long n);

// max tau(n) / (n^3 3^n).
double fitted_cost_constant(const std::vector<ForbiddenCost>& cost);

// Lengths t in (0, |u|) with suffix_t(u) == prefix_t(v).
std::vector<long> overlaps(const std::string& u, const std::string& v);

struct Claim {
  std::string name;
  bool holds = true;
  std::vector<std::string> counterexamples;
};

struct OverlapReport {
  int k = 0;
  std::vector<Claim> claims;
  bool all_hold() const;
};

OverlapReport verify_overlap_lemmas(const Tower& t, int k);

// Frequencies as "p/q", big integers as decimal strings.
std::string to_json(const Tower& t, int indent = 2);
std::string to_json(const std::vector<ScheduleLevel>& s, int indent = 2);

}  // namespace freezelab::tower
