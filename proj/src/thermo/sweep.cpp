#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <thread>

#include "freezelab/thermo.hpp"

namespace freezelab::thermo {

Sweep beta_sweep(const tower::Tower& t, const std::vector<double>& betas, long m, const TransferOptions& opts) {
  if (m < 1) throw std::invalid_argument("truncation must be positive");
  Sweep sw;
  sw.m = m;
  sw.forbidden = tower::forbidden_words(t, m).up_to(m);
  const PotentialSpec spec = PotentialSpec::from_words("012", sw.forbidden);
  const double lnA = std::log(3.0);

  auto row_for = [&](double beta) {
    SweepRow row;
    row.result = transfer_pressure(spec, beta, opts);
    double lb = -std::numeric_limits<double>::infinity();
    for (const auto& L : t.levels()) {
      const double l = static_cast<double>(L.ell);
      lb = std::max(lb, std::log(4.0) / l - beta * std::min(1.0, static_cast<double>(m) / l));
    }
    row.lower_bound = lb;
    row.mu_bound_ok = row.result.mu_forbidden * beta <= lnA + 1e-9;
    row.pressure_bound_ok = row.result.pressure >= lb - 1e-9;
    return row;
  };

  sw.rows.resize(betas.size());
  const std::size_t workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8u));
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < betas.size(); i += workers) sw.rows[i] = row_for(betas[i]);
    }));
  for (auto& j : jobs) j.get();
  return sw;
}

void write_sweep_csv(std::ostream& os, const Sweep& s) {
  os << "beta,pressure,mu0,mu1,mu2,muF,bound_ok\n";
  char buf[64];
  auto num = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::string(buf);
  };
  for (const auto& r : s.rows) {
    const auto& t = r.result;
    os << num(t.beta) << ',' << num(t.pressure) << ',' << num(t.marginals.at(0)) << ',' << num(t.marginals.at(1)) << ','
       << num(t.marginals.at(2)) << ',' << num(t.mu_forbidden) << ',' << (r.bound_ok() ? 1 : 0) << '\n';
  }
}

}  // namespace freezelab::thermo
