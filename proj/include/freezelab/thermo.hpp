#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "freezelab/core.hpp"
#include "freezelab/tower.hpp"

namespace freezelab::thermo {

// Shannon entropies in nats. Inputs must be non-negative and sum to 1
// within 1e-12, otherwise std::invalid_argument.
double partition_entropy(const std::vector<double>& p);
// joint[i][j] = mu(P_i and Q_j).
double joint_entropy(const std::vector<std::vector<double>>& joint);
// H(P | Q) for joint[i][j] = mu(P_i and Q_j).
double conditional_entropy(const std::vector<std::vector<double>>& joint);
std::vector<double> row_marginal(const std::vector<std::vector<double>>& joint);
std::vector<double> column_marginal(const std::vector<std::vector<double>>& joint);

// 1D potential: indicator of the cylinder of configurations that start with
// one of the forbidden words.
struct PotentialSpec {
  std::vector<std::string> symbols;           // single characters
  std::vector<std::vector<int>> forbidden;    // symbol indices
  long range = 2;                             // m = max(2, longest word)

  static PotentialSpec from_words(const std::string& alphabet, const std::vector<std::string>& words);
};

struct TransferOptions {
  double tolerance = 1e-12;
  long max_iterations = 100000;
  std::size_t max_states = std::size_t{1} << 22;
};

struct TransferResult {
  double beta = 0;
  double lambda = 0;
  double pressure = 0;                 // ln lambda
  std::vector<double> marginals;       // mu([a]) per symbol
  double mu_forbidden = 0;             // mu(F)
  long R = 1;
  double eps = 0;                      // R^2 ln|A| / beta (inf at beta = 0)
  long states = 0;
  long iterations = 0;
  bool converged = false;
  bool irreducible = true;
  long period = 1;
  bool shifted = false;                // the M + I fallback was used
  // Stationary distribution over states and the right eigenvector, kept for
  // consistency checks.
  std::vector<double> stationary, right, weights;
};

TransferResult transfer_pressure(const PotentialSpec& spec, double beta, const TransferOptions& opts = {});

// Probability of moving from state s with next symbol c, from a result.
double transition_probability(const TransferResult& r, long s, int c);

struct SweepRow {
  TransferResult result;
  double lower_bound = 0;     // max_j ln|L_j| / l_j - beta min(1, m / l_j)
  bool mu_bound_ok = false;   // mu(F) beta <= ln |A|
  bool pressure_bound_ok = false;
  bool bound_ok() const { return mu_bound_ok && pressure_bound_ok; }
};

struct Sweep {
  long m = 0;
  std::vector<std::string> forbidden;
  std::vector<SweepRow> rows;
};

// Potential = indicator of the forbidden words of length <= m of the tower,
// over {0,1,2}. Rows follow the order of betas.
Sweep beta_sweep(const tower::Tower& t, const std::vector<double>& betas, long m, const TransferOptions& opts = {});

void write_sweep_csv(std::ostream& os, const Sweep& s);

struct TorusHistogram {
  long n = 0;
  long q = 0;
  std::vector<std::uint64_t> count;                   // configurations by energy
  std::vector<std::vector<std::uint64_t>> symbol_sum;  // [energy][a] = sum of a-cell counts
};

// Energy = number of occurrences of forbidden patterns, with periodic
// boundary. Requires q^(n^2) <= 1e6.
TorusHistogram torus_histogram(const core::Alphabet& a, const core::ForbiddenSet& f, long n);

struct TorusResult {
  long n = 0;
  double beta = 0;
  double log_Z = 0;
  double Z = 0;
  std::vector<double> marginals;
  double mean_energy = 0;
  double mu_forbidden = 0;  // mean energy per site
  long min_energy = 0;
  std::uint64_t ground_states = 0;
};

TorusResult evaluate_torus(const TorusHistogram& h, double beta);
TorusResult exact_gibbs_torus_2d(const core::Alphabet& a, const core::ForbiddenSet& f, double beta, long n);
// Energy of one configuration given as rows[y][x] of symbol indices.
long torus_energy(const std::vector<std::vector<int>>& cfg, const core::Alphabet& a, const core::ForbiddenSet& f);

struct BoundCheck {
  std::string name;
  double lhs = 0, rhs = 0;
  bool holds = false;
  double margin() const { return rhs - lhs; }
};

struct FreezingInputs {
  // mu(outside) <= R^2 ln|A| / beta
  std::optional<double> mu_outside, R, beta;
  std::optional<long> alphabet_size;
  // nu(F) <= 2 D / l
  std::optional<double> nu_F, D, ell;
  // ln 2 f^B <= h
  std::optional<double> entropy, f_B;
};

struct FreezingReport {
  std::vector<BoundCheck> checks;
  bool holds() const;
};

// Evaluates every inequality whose constants are all present. A partially
// specified inequality, or none at all, is rejected.
FreezingReport freezing_bound_check(const FreezingInputs& in);
FreezingReport freezing_bound_check(const TransferResult& r, long alphabet_size);
FreezingReport freezing_bound_check(const TorusResult& r, long alphabet_size);

// Exact mass of the cylinder of forbidden words under the measure that
// concatenates i.i.d. uniform dictionary blocks with a uniform phase.
tower::Rational concatenated_measure_frequency(const std::vector<std::string>& dict,
                                          const std::vector<std::string>& forbidden);

}  // namespace freezelab::thermo
