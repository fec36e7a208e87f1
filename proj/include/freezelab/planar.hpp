#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "freezelab/core.hpp"
#include "freezelab/tower.hpp"

namespace freezelab::planar {

using core::Pattern;
using core::Point;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// {0, 1, 2}
core::Alphabet base_alphabet();
// {0', 0'', 1, 2}: the symbol 0 split in two colours.
core::Alphabet lift_alphabet();

// h rows, each a copy of w, on [1,|w|] x [1,h].
Pattern duplicate_extension(const std::string& w, long h);
// Every column is constant.
bool is_aligned(const Pattern& p);
// The common row of an aligned box pattern.
std::string base_word(const Pattern& p);

// Vertical dominoes with different symbols.
core::ForbiddenSet vertical_constraint(const core::Alphabet& a);

// Number of lifts of p: 2^(number of cells holding 0).
BigInt lift_count(const Pattern& p);
// Calls fn on every lift, in binary counter order over the zero cells.
void for_each_lift(const Pattern& p, const std::function<void(const Pattern&)>& fn);
// 0' and 0'' back to 0.
Pattern collapse(const Pattern& lifted);

struct OccupancyReport {
  int k = 0;
  long n = 0;
  long ell_prime = 0;
  Point origin;  // min corner of the analysed pattern
  std::set<Point> I, I_A, I_B;  // window offsets
  std::set<Point> J_A, J_B;     // covered cells
  std::set<Point> K_A, K_B;     // zero cells of J_A, J_B
};

// Offsets u range over origin - (1,1) + [0, n - m]^2 for window side m.
// Requires a square box over {0,1,2} of side n > 2 l'_k.
OccupancyReport occupancy(const Pattern& p, const tower::Tower& t, int k);

std::string to_json(const OccupancyReport& r, int indent = 2);

struct Inequality {
  std::string name;
  Rational lhs, rhs;
  bool holds = false;
};

struct ZeroBoundReport {
  Inequality first, second;
  std::optional<Pattern> witness;  // set when an inequality fails
  bool holds() const { return first.holds && second.holds; }
};

// For even k: |K^B| <= (1 - 1/N_{k-1})^-1 |J^B| f^B_{k-1} and
// |K^A| <= (2/N'_k) |J^A| f^A_{k-1}. Odd k swaps A and B.
ZeroBoundReport check_zero_bounds(const OccupancyReport& r, const tower::Tower& t, int k,
                                  const Pattern* p = nullptr);

struct MosaicOptions {
  long block_height = 0;  // 0 means l_k
  std::vector<std::string> dictionary;  // empty means L_k
};

// n x n pattern: a grid of blocks, each a word of the dictionary duplicated
// vertically, drawn i.i.d. with a uniform random phase on both axes.
Pattern sample_mosaic(const tower::Tower& t, int k, long n, std::uint64_t seed, const MosaicOptions& opts = {});

// ln of a big integer.
double big_log(const BigInt& x);

struct CoveringBound {
  double lhs = 0, rhs = 0;
  bool holds = false;
};

CoveringBound covering_entropy_bound(long n, long ell, double eps, const BigInt& card_E, long card_A_tilde,
                                     long card_A_hat, const BigInt& C);

// Patterns in q^([1,n]^2) whose 2l-windows at offsets S are vertically
// aligned, counted exactly with a union-find over the forced equalities.
BigInt count_aligned_covering(long n, long ell, const std::set<Point>& S, long q);

}  // namespace freezelab::planar
