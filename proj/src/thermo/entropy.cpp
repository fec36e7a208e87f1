#include <cmath>
#include <stdexcept>

#include "freezelab/thermo.hpp"

namespace freezelab::thermo {

namespace {

constexpr double kTol = 1e-12;

double psi(double x) { return x > 0 ? -x * std::log(x) : 0.0; }

void check(const std::vector<double>& p) {
  double s = 0;
  for (double x : p) {
    if (!(x >= 0)) throw std::invalid_argument("negative or NaN probability");
    s += x;
  }
  if (std::abs(s - 1.0) > kTol) throw std::invalid_argument("probabilities do not sum to 1");
}

void check(const std::vector<std::vector<double>>& j) {
  std::vector<double> flat;
  for (const auto& row : j) {
    if (row.size() != j.front().size()) throw std::invalid_argument("ragged joint distribution");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  check(flat);
}

}  // namespace

double partition_entropy(const std::vector<double>& p) {
  check(p);
  double h = 0;
  for (double x : p) h += psi(x);
  return h;
}

std::vector<double> row_marginal(const std::vector<std::vector<double>>& joint) {
  std::vector<double> out;
  for (const auto& row : joint) {
    double s = 0;
    for (double x : row) s += x;
    out.push_back(s);
  }
  return out;
}

std::vector<double> column_marginal(const std::vector<std::vector<double>>& joint) {
  std::vector<double> out(joint.empty() ? 0 : joint.front().size(), 0.0);
  for (const auto& row : joint)
    for (std::size_t j = 0; j < row.size(); ++j) out[j] += row[j];
  return out;
}

double joint_entropy(const std::vector<std::vector<double>>& joint) {
  check(joint);
  double h = 0;
  for (const auto& row : joint)
    for (double x : row) h += psi(x);
  return h;
}

double conditional_entropy(const std::vector<std::vector<double>>& joint) {
  check(joint);
  const auto q = column_marginal(joint);
  double h = 0;
  for (const auto& row : joint)
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] > 0) h -= row[j] * std::log(row[j] / q[j]);
  return h;
}

}  // namespace freezelab::thermo
