#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "freezelab/core.hpp"
#include "freezelab/errors.hpp"
#include "freezelab/planar.hpp"
#include "freezelab/thermo.hpp"
#include "freezelab/tower.hpp"
#include "freezelab/turing.hpp"

namespace py = pybind11;
using namespace freezelab;

namespace {

py::object to_py(const tower::BigInt& x) { return py::module_::import("builtins").attr("int")(x.str()); }

py::object to_py(const tower::Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(to_py(numerator(r)), to_py(denominator(r)));
}

tower::Tower build_tower(int depth, std::vector<long> N, std::vector<long> Nprime, const std::string& mode) {
  if (mode == "paper") return tower::Tower::build(tower::TowerParams::paper(depth));
  if (mode != "toy") throw std::invalid_argument("mode must be 'toy' or 'paper'");
  if (N.empty()) N.assign(static_cast<std::size_t>(depth), 4);
  if (Nprime.empty()) Nprime = N;
  return tower::Tower::build(tower::TowerParams::toy(depth, N, Nprime));
}

py::dict level_dict(const tower::Level& l) {
  py::dict d;
  d["k"] = l.k;
  d["N"] = l.N;
  d["Nprime"] = l.Nprime;
  d["ell"] = l.ell;
  d["ell_prime"] = l.ell_prime;
  d["a"] = l.a;
  d["b"] = l.b;
  d["a_prime"] = l.a_prime;
  d["a_second"] = l.a_second;
  d["b_prime"] = l.b_prime;
  d["b_second"] = l.b_second;
  d["A_prime"] = l.A_prime;
  d["B_prime"] = l.B_prime;
  d["rho_A"] = to_py(l.rho_A);
  d["rho_B"] = to_py(l.rho_B);
  d["fA"] = to_py(l.fA);
  d["fB"] = to_py(l.fB);
  return d;
}

turing::Machine machine(const std::string& name_or_path) {
  for (const auto& n : turing::builtin_names())
    if (n == name_or_path) return turing::builtin_machine(n);
  return turing::read_machine_file(name_or_path);
}

py::dict transfer_dict(const thermo::TransferResult& r) {
  py::dict d;
  d["beta"] = r.beta;
  d["pressure"] = r.pressure;
  d["lambda"] = r.lambda;
  d["marginals"] = r.marginals;
  d["mu_forbidden"] = r.mu_forbidden;
  d["converged"] = r.converged;
  d["irreducible"] = r.irreducible;
  d["period"] = r.period;
  d["shifted"] = r.shifted;
  d["states"] = r.states;
  d["iterations"] = r.iterations;
  return d;
}

py::dict torus_dict(const thermo::TorusResult& r) {
  py::dict d;
  d["n"] = r.n;
  d["beta"] = r.beta;
  d["log_Z"] = r.log_Z;
  d["marginals"] = r.marginals;
  d["mean_energy"] = r.mean_energy;
  d["min_energy"] = r.min_energy;
  d["ground_states"] = r.ground_states;
  return d;
}

core::ForbiddenSet forbidden_2d(const std::vector<std::vector<std::vector<std::string>>>& patterns) {
  std::vector<core::Pattern> ps;
  for (const auto& rows : patterns) ps.push_back(core::Pattern::from_rows(rows));
  return core::ForbiddenSet(2, std::move(ps));
}

}  // namespace

PYBIND11_MODULE(_freezelab, m) {
  m.doc() = "Word towers, Turing machine tiles, occupancy counts and transfer matrices";
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  // tower
  py::class_<tower::Tower>(m, "Tower")
      .def_property_readonly("depth", &tower::Tower::depth)
      .def_property_readonly("warnings", &tower::Tower::warnings)
      .def("level", [](const tower::Tower& t, int k) { return level_dict(t.level(k)); }, py::arg("k"))
      .def("to_json", [](const tower::Tower& t) { return tower::to_json(t); });

  m.def("build_tower", &build_tower, py::arg("depth") = 3, py::arg("N") = std::vector<long>{},
        py::arg("Nprime") = std::vector<long>{}, py::arg("mode") = "toy");

  m.def(
      "forbidden_words",
      [](const tower::Tower& t, long n, bool minimal, const std::string& pairs) {
        tower::ForbiddenOptions o;
        o.minimal_only = minimal;
        if (pairs != "all" && pairs != "cross") throw std::invalid_argument("pairs must be 'all' or 'cross'");
        o.pairs = pairs == "all" ? tower::PairSet::All : tower::PairSet::CrossFamily;
        tower::ForbiddenWords fw;
        {
          py::gil_scoped_release release;
          fw = tower::forbidden_words(t, n, o);
        }
        py::list cost;
        for (const auto& c : fw.cost)
          cost.append(py::dict(py::arg("n") = c.n, py::arg("candidates") = c.candidates,
                               py::arg("comparisons") = c.comparisons, py::arg("tau") = c.cumulative));
        py::dict d;
        d["by_length"] = fw.by_length;
        d["cost"] = cost;
        d["fitted_c"] = tower::fitted_cost_constant(fw.cost);
        return d;
      },
      py::arg("tower"), py::arg("n"), py::arg("minimal") = false, py::arg("pairs") = "all");
  m.def("forbidden_oracle", &tower::forbidden_oracle, py::arg("tower"), py::arg("n"));

  m.def(
      "paper_schedule",
      [](int depth) {
        py::list out;
        for (const auto& l : tower::paper_schedule(depth))
          out.append(py::dict(py::arg("k") = l.k, py::arg("Nprime") = to_py(l.Nprime), py::arg("ell_prime") = to_py(l.ell_prime),
                              py::arg("beta") = to_py(l.beta), py::arg("N") = to_py(l.N), py::arg("ell") = to_py(l.ell),
                              py::arg("rho_A") = to_py(l.rho_A), py::arg("rho_B") = to_py(l.rho_B)));
        return out;
      },
      py::arg("depth"));

  m.def(
      "verify_frequencies",
      [](const tower::Tower& t) {
        py::list out;
        for (const auto& r : tower::verify_frequencies(t))
          out.append(py::dict(py::arg("k") = r.k, py::arg("fA") = to_py(r.fA), py::arg("fB") = to_py(r.fB),
                              py::arg("fA_closed") = to_py(r.fA_closed), py::arg("fB_closed") = to_py(r.fB_closed),
                              py::arg("ok") = r.ok));
        return out;
      },
      py::arg("tower"));

  m.def("overlaps", &tower::overlaps, py::arg("u"), py::arg("v"));
  m.def(
      "verify_overlap_lemmas",
      [](const tower::Tower& t, int k) {
        py::list out;
        for (const auto& c : tower::verify_overlap_lemmas(t, k).claims)
          out.append(py::dict(py::arg("name") = c.name, py::arg("holds") = c.holds,
                              py::arg("counterexamples") = c.counterexamples));
        return out;
      },
      py::arg("tower"), py::arg("k"));

  // turing
  m.def("builtin_machines", &turing::builtin_names);
  m.def(
      "tm_run",
      [](const std::string& name, const std::string& input, long fuel) {
        auto r = turing::run_bounded(machine(name), core::split_code_points(input), fuel);
        return py::dict(py::arg("status") = turing::to_string(r.status), py::arg("steps") = r.config.steps,
                        py::arg("state") = r.config.state);
      },
      py::arg("machine"), py::arg("input"), py::arg("fuel") = 10000);
  m.def(
      "tm_enumerate", [](const std::string& name, long fuel) { return turing::enumerate(machine(name), fuel).words; },
      py::arg("machine") = "anbn_enum", py::arg("fuel") = 500);
  m.def(
      "tm_diagram",
      [](const std::string& name, const std::string& input, long steps, long lo, long hi) {
        return turing::space_time_diagram(machine(name), core::split_code_points(input), steps, lo, hi).to_rows();
      },
      py::arg("machine"), py::arg("input"), py::arg("steps"), py::arg("lo"), py::arg("hi"));
  m.def(
      "tm_check",
      [](const std::string& name, const std::vector<std::vector<std::string>>& rows) {
        auto r = turing::check_diagram(turing::compile_tileset(machine(name)), core::Pattern::from_rows(rows));
        std::vector<std::pair<long, long>> v;
        for (const auto& p : r.violations) v.emplace_back(p.x, p.y);
        return py::make_tuple(r.ok, v);
      },
      py::arg("machine"), py::arg("rows"));

  // core
  m.def(
      "language_1d",
      [](const std::string& alphabet, const std::vector<std::string>& forbidden, long n) {
        return core::language_1d(core::Alphabet::from_chars(alphabet), core::ForbiddenSet::from_words(forbidden), n);
      },
      py::arg("alphabet"), py::arg("forbidden"), py::arg("n"));
  m.def(
      "reconstruction_radius",
      [](const std::string& alphabet, const std::vector<std::string>& forbidden, long n, long r_max) {
        core::ReconstructionOptions o;
        o.r_max = r_max;
        return core::reconstruction_radius(core::Alphabet::from_chars(alphabet), core::ForbiddenSet::from_words(forbidden), n, o);
      },
      py::arg("alphabet"), py::arg("forbidden"), py::arg("n"), py::arg("r_max") = 16);

  // planar
  m.def(
      "lift_count", [](const std::string& w, long h) { return to_py(planar::lift_count(planar::duplicate_extension(w, h))); },
      py::arg("word"), py::arg("height") = 1);
  m.def(
      "occupancy",
      [](const tower::Tower& t, int k, long size, std::uint64_t seed, long block_height) {
        planar::MosaicOptions mo;
        mo.block_height = block_height;
        const auto p = planar::sample_mosaic(t, k, size, seed, mo);
        const auto r = planar::occupancy(p, t, k);
        const auto zb = planar::check_zero_bounds(r, t, k);
        py::dict d;
        d["I"] = r.I.size();
        d["I_A"] = r.I_A.size();
        d["I_B"] = r.I_B.size();
        d["J_A"] = r.J_A.size();
        d["J_B"] = r.J_B.size();
        d["K_A"] = r.K_A.size();
        d["K_B"] = r.K_B.size();
        d["bounds"] = py::make_tuple(zb.first.holds, zb.second.holds);
        d["rows"] = p.to_rows();
        return d;
      },
      py::arg("tower"), py::arg("k"), py::arg("size"), py::arg("seed") = 1, py::arg("block_height") = 0);

  // thermo
  m.def("partition_entropy", &thermo::partition_entropy, py::arg("p"));
  m.def("joint_entropy", &thermo::joint_entropy, py::arg("joint"));
  m.def("conditional_entropy", &thermo::conditional_entropy, py::arg("joint"));
  m.def(
      "transfer_pressure",
      [](const std::string& alphabet, const std::vector<std::string>& forbidden, double beta) {
        return transfer_dict(thermo::transfer_pressure(thermo::PotentialSpec::from_words(alphabet, forbidden), beta));
      },
      py::arg("alphabet"), py::arg("forbidden"), py::arg("beta"));
  m.def(
      "beta_sweep",
      [](const tower::Tower& t, const std::vector<double>& betas, long m_trunc) {
        thermo::Sweep sw;
        {
          py::gil_scoped_release release;
          sw = thermo::beta_sweep(t, betas, m_trunc);
        }
        py::list out;
        for (const auto& r : sw.rows) {
          auto d = transfer_dict(r.result);
          d["lower_bound"] = r.lower_bound;
          d["bound_ok"] = r.bound_ok();
          out.append(d);
        }
        return out;
      },
      py::arg("tower"), py::arg("betas"), py::arg("m"));
  m.def(
      "torus",
      [](const std::string& alphabet, const std::vector<std::vector<std::vector<std::string>>>& forbidden, double beta, long n) {
        return torus_dict(thermo::exact_gibbs_torus_2d(core::Alphabet::from_chars(alphabet), forbidden_2d(forbidden), beta, n));
      },
      py::arg("alphabet"), py::arg("forbidden"), py::arg("beta"), py::arg("n"));
  m.def(
      "torus_vertical",
      [](const std::string& alphabet, double beta, long n) {
        const auto a = core::Alphabet::from_chars(alphabet);
        return torus_dict(thermo::exact_gibbs_torus_2d(a, planar::vertical_constraint(a), beta, n));
      },
      py::arg("alphabet"), py::arg("beta"), py::arg("n"));
}
