#include "freezelab/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <sstream>

#include "freezelab/core.hpp"
#include "freezelab/errors.hpp"
#include "freezelab/io.hpp"
#include "freezelab/planar.hpp"
#include "freezelab/thermo.hpp"
#include "freezelab/tower.hpp"
#include "freezelab/turing.hpp"

namespace freezelab::cli {

namespace {

// Raised by handlers for input that parsed but makes no sense.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TowerArgs {
  int depth;
  std::vector<long> N, Nprime;
  std::string mode = "toy";
};

void add_tower_opts(CLI::App* s, TowerArgs& a) {
  s->add_option("--depth", a.depth, "tower depth K")->capture_default_str();
  s->add_option("--N", a.N, "N_1,...,N_K")->delimiter(',');
  s->add_option("--Nprime", a.Nprime, "N'_1,...,N'_K")->delimiter(',');
  s->add_option("--mode", a.mode, "toy or paper")->check(CLI::IsMember({"toy", "paper"}))->capture_default_str();
}

tower::Tower make_tower(TowerArgs a) {
  if (a.mode == "paper") return tower::Tower::build(tower::TowerParams::paper(a.depth));
  if (a.N.empty()) a.N.assign(static_cast<std::size_t>(a.depth), 4);
  if (a.Nprime.empty()) a.Nprime = a.N;
  if (static_cast<int>(a.N.size()) != a.depth || static_cast<int>(a.Nprime.size()) != a.depth)
    throw UsageError("--N and --Nprime need exactly --depth values");
  return tower::Tower::build(tower::TowerParams::toy(a.depth, a.N, a.Nprime));
}

// Writes to --out when given, otherwise to the main stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot write " + path);
      os_ = file_.get();
    }
  }
  std::ostream& operator()() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

turing::Machine load_machine(const std::string& name) {
  for (const auto& b : turing::builtin_names())
    if (b == name) return turing::builtin_machine(name);
  return turing::read_machine_file(name);
}

std::vector<double> parse_betas(const std::string& spec) {
  std::vector<double> out;
  if (spec.find(':') != std::string::npos) {
    std::vector<double> v;
    std::stringstream ss(spec);
    for (std::string tok; std::getline(ss, tok, ':');) v.push_back(std::stod(tok));
    if (v.size() != 3 || !(v[2] > 0) || v[1] < v[0]) throw UsageError("--betas expects start:stop:step");
    const long n = static_cast<long>(std::floor((v[1] - v[0]) / v[2] + 1e-9));
    for (long i = 0; i <= n; ++i) out.push_back(v[0] + static_cast<double>(i) * v[2]);
  } else {
    std::stringstream ss(spec);
    for (std::string tok; std::getline(ss, tok, ',');) out.push_back(std::stod(tok));
  }
  if (out.empty()) throw UsageError("no beta values");
  return out;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) out.push_back(std::stod(tok));
  return out;
}

core::ForbiddenSet load_forbidden(const std::string& file, const std::vector<std::string>& inline_words) {
  if (!file.empty()) {
    auto ps = core::read_patterns_file(file);
    const int dim = ps.empty() ? 1 : ps.front().dimension();
    return core::ForbiddenSet(dim, std::move(ps));
  }
  return core::ForbiddenSet::from_words(inline_words);
}

int status(std::ostream& out, bool ok) {
  out << "STATUS: " << (ok ? "OK" : "FAIL") << "\n";
  return ok ? kOk : kVerification;
}

std::string join(const std::vector<std::string>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic dynamics toolkit: word towers, Turing machines, occupancy and transfer matrices", "freezelab"};
  app.require_subcommand(1);
  std::function<int()> action;

  // tower ------------------------------------------------------------------
  auto* tw = app.add_subcommand("tower", "hierarchical word construction");
  tw->require_subcommand(1);

  TowerArgs tb{3, {}, {}};
  std::string tb_out;
  auto* tw_build = tw->add_subcommand("build", "build the words and print JSON");
  add_tower_opts(tw_build, tb);
  tw_build->add_option("--out", tb_out);
  tw_build->callback([&] {
    action = [&] {
      auto t = make_tower(tb);
      for (const auto& w : t.warnings()) err << "warning: " << w << "\n";
      Sink sink(tb_out, out);
      sink() << tower::to_json(t) << "\n";
      return status(out, true);
    };
  });

  TowerArgs tf{3, {}, {}};
  long tf_n = 8;
  bool tf_check = false, tf_minimal = false, tf_counts = false;
  std::string tf_pairs = "all", tf_out;
  auto* tw_forb = tw->add_subcommand("forbidden", "enumerate forbidden words by length");
  add_tower_opts(tw_forb, tf);
  tw_forb->add_option("--n", tf_n, "largest length")->capture_default_str();
  tw_forb->add_flag("--check-oracle", tf_check, "compare with brute force");
  tw_forb->add_flag("--minimal", tf_minimal, "drop words containing a shorter forbidden word");
  tw_forb->add_flag("--counts-only", tf_counts, "print only the number of words per length");
  tw_forb->add_option("--pairs", tf_pairs, "all or cross")->check(CLI::IsMember({"all", "cross"}));
  tw_forb->add_option("--out", tf_out);
  tw_forb->callback([&] {
    action = [&] {
      auto t = make_tower(tf);
      tower::ForbiddenOptions o;
      o.minimal_only = tf_minimal;
      o.pairs = tf_pairs == "all" ? tower::PairSet::All : tower::PairSet::CrossFamily;
      auto fw = tower::forbidden_words(t, tf_n, o);
      Sink sink(tf_out, out);
      bool ok = true;
      for (long m = 1; m <= tf_n; ++m) {
        const auto& ws = fw.of_length(m);
        sink() << "F(" << m << ") [" << ws.size() << "]";
        if (!tf_counts) sink() << ": " << join(ws);
        sink() << "\n";
      }
      for (const auto& c : fw.cost)
        sink() << "cost n=" << c.n << " candidates=" << c.candidates << " comparisons=" << c.comparisons
               << " tau=" << c.cumulative << "\n";
      sink() << "fitted c = " << std::setprecision(6) << tower::fitted_cost_constant(fw.cost) << "\n";
      if (tf_check) {
        if (tf_minimal) throw UsageError("--check-oracle compares the full sets; drop --minimal");
        for (long m = 1; m <= tf_n; ++m) {
          const bool same = tower::forbidden_oracle(t, m) == fw.of_length(m);
          if (!same) {
            ok = false;
            out << "oracle mismatch at n=" << m << "\n";
          }
        }
        out << "oracle: " << (ok ? "match" : "mismatch") << " for n <= " << tf_n << "\n";
      }
      return status(out, ok);
    };
  });

  TowerArgs tq{3, {}, {}};
  auto* tw_freq = tw->add_subcommand("freq", "compare counted and closed-form frequencies");
  add_tower_opts(tw_freq, tq);
  tw_freq->callback([&] {
    action = [&] {
      auto t = make_tower(tq);
      bool ok = true;
      for (const auto& r : tower::verify_frequencies(t)) {
        out << "k=" << r.k << " fA=" << tower::to_string(r.fA) << " closed=" << tower::to_string(r.fA_closed)
            << " fB=" << tower::to_string(r.fB) << " closed=" << tower::to_string(r.fB_closed);
        if (r.k >= 1)
          out << " fA'=" << tower::to_string(r.fA_prime) << " rec=" << tower::to_string(r.fA_prime_rec)
              << " fB'=" << tower::to_string(r.fB_prime) << " rec=" << tower::to_string(r.fB_prime_rec);
        out << (r.ok ? " ok" : " MISMATCH") << "\n";
        ok = ok && r.ok;
      }
      return status(out, ok);
    };
  });

  TowerArgs to{3, {}, {}};
  int to_k = -1;
  auto* tw_ov = tw->add_subcommand("overlaps", "check the overlap classification");
  add_tower_opts(tw_ov, to);
  tw_ov->add_option("--k", to_k, "single level (default: all)");
  tw_ov->callback([&] {
    action = [&] {
      auto t = make_tower(to);
      bool ok = true;
      const int lo = to_k >= 0 ? to_k : 0, hi = to_k >= 0 ? to_k : t.depth();
      for (int k = lo; k <= hi; ++k) {
        auto rep = tower::verify_overlap_lemmas(t, k);
        for (const auto& c : rep.claims) {
          out << "k=" << k << " " << c.name << ": " << (c.holds ? "holds" : "FAILS") << "\n";
          for (const auto& ce : c.counterexamples) out << "  " << ce << "\n";
        }
        ok = ok && rep.all_hold();
      }
      return status(out, ok);
    };
  });

  int ts_depth = 2;
  std::string ts_out;
  auto* tw_sched = tw->add_subcommand("schedule", "exact big-integer parameter schedule");
  tw_sched->add_option("--depth", ts_depth)->capture_default_str();
  tw_sched->add_option("--out", ts_out);
  tw_sched->callback([&] {
    action = [&] {
      auto s = tower::paper_schedule(ts_depth);
      for (const auto& l : s)
        if (l.k >= 1 && l.Nprime < 4) err << "conflict: N'_" << l.k << " = " << l.Nprime.str() << " < 4\n";
      Sink sink(ts_out, out);
      sink() << tower::to_json(s) << "\n";
      return status(out, true);
    };
  });

  // tm ---------------------------------------------------------------------
  auto* tm = app.add_subcommand("tm", "Turing machines");
  tm->require_subcommand(1);

  std::string tr_machine = "anbn_dec", tr_input;
  long tr_fuel = 10000;
  auto* tm_run = tm->add_subcommand("run", "run on an input with bounded fuel");
  tm_run->add_option("--machine", tr_machine, "built-in name or machine file")->capture_default_str();
  tm_run->add_option("--input", tr_input);
  tm_run->add_option("--fuel", tr_fuel)->capture_default_str();
  tm_run->callback([&] {
    action = [&] {
      auto m = load_machine(tr_machine);
      auto r = turing::run_bounded(m, core::split_code_points(tr_input), tr_fuel);
      out << "result: " << turing::to_string(r.status) << "\nsteps: " << r.config.steps << "\nstate: " << r.config.state
          << "\n";
      return status(out, true);
    };
  });

  std::string td_machine = "anbn_enum", td_input, td_window, td_out;
  long td_steps = 8;
  auto* tm_diag = tm->add_subcommand("diagram", "space-time diagram, top row first");
  tm_diag->add_option("--machine", td_machine)->capture_default_str();
  tm_diag->add_option("--input", td_input);
  tm_diag->add_option("--steps", td_steps)->capture_default_str();
  tm_diag->add_option("--window", td_window, "lo:hi (default: head range plus one cell)");
  tm_diag->add_option("--out", td_out);
  tm_diag->callback([&] {
    action = [&] {
      auto m = load_machine(td_machine);
      const auto input = core::split_code_points(td_input);
      long lo, hi;
      if (!td_window.empty()) {
        auto c = td_window.find(':');
        if (c == std::string::npos) throw UsageError("--window expects lo:hi");
        lo = std::stol(td_window.substr(0, c));
        hi = std::stol(td_window.substr(c + 1));
      } else {
        lo = 0;
        hi = std::max<long>(0, static_cast<long>(input.size()) - 1);
        turing::Config c = turing::initial_config(m, input);
        for (long t = 0; t < td_steps && !m.halting(c.state); ++t) {
          auto r = turing::step(m, c);
          if (r.status == turing::StepStatus::Stuck) break;
          c = r.config;
          lo = std::min(lo, c.head);
          hi = std::max(hi, c.head);
        }
        --lo;
        ++hi;
      }
      auto d = turing::space_time_diagram(m, input, td_steps, lo, hi);
      Sink sink(td_out, out);
      sink() << core::format_pattern(d) << "\n";
      return status(out, true);
    };
  });

  std::string te_machine = "anbn_enum";
  long te_fuel = 500;
  auto* tm_enum = tm->add_subcommand("enumerate", "run an enumerator from the blank tape");
  tm_enum->add_option("--machine", te_machine)->capture_default_str();
  tm_enum->add_option("--fuel", te_fuel)->capture_default_str();
  tm_enum->callback([&] {
    action = [&] {
      auto e = turing::enumerate(load_machine(te_machine), te_fuel);
      for (const auto& w : e.words) out << w << "\n";
      err << "steps: " << e.steps << (e.fuel_exhausted ? " (fuel exhausted)" : "") << "\n";
      return status(out, true);
    };
  });

  std::string tt_machine = "anbn_enum";
  bool tt_list = false;
  auto* tm_tiles = tm->add_subcommand("tiles", "compile 3x2 windows");
  tm_tiles->add_option("--machine", tt_machine)->capture_default_str();
  tm_tiles->add_flag("--list", tt_list, "print every allowed window");
  tm_tiles->callback([&] {
    action = [&] {
      auto m = load_machine(tt_machine);
      auto ts = turing::compile_tileset(m);
      out << "cells: " << ts.cell_alphabet.size() << "\nallowed: " << ts.allowed.size()
          << "\nforbidden: " << ts.forbidden_count().str() << "\n";
      for (const auto& r : m.rules())
        for (const auto& f : turing::rule_templates(m, r))
          out << "rule (" << r.state << "," << r.read << ") " << f.name << ": [" << join({f.shape.top.begin(), f.shape.top.end()})
              << " / " << join({f.shape.bottom.begin(), f.shape.bottom.end()}) << "] x" << f.instances << "\n";
      if (tt_list)
        for (const auto& t : ts.allowed)
          out << join({t.top.begin(), t.top.end()}) << " / " << join({t.bottom.begin(), t.bottom.end()}) << "\n";
      return status(out, true);
    };
  });

  std::string tc_machine = "anbn_enum", tc_diagram, tc_input;
  long tc_steps = 24;
  auto* tm_check = tm->add_subcommand("check", "verify a diagram against the compiled windows");
  tm_check->add_option("--machine", tc_machine)->capture_default_str();
  tm_check->add_option("--diagram", tc_diagram, "2D pattern file; default: generate one");
  tm_check->add_option("--input", tc_input);
  tm_check->add_option("--steps", tc_steps)->capture_default_str();
  tm_check->callback([&] {
    action = [&] {
      auto m = load_machine(tc_machine);
      core::Pattern d;
      if (!tc_diagram.empty()) {
        auto ps = core::read_patterns_file(tc_diagram);
        if (ps.size() != 1) throw UsageError("diagram file must hold exactly one pattern");
        d = ps.front();
      } else {
        const auto input = core::split_code_points(tc_input);
        d = turing::space_time_diagram(m, input, tc_steps, -2, static_cast<long>(input.size()) + tc_steps + 1);
      }
      auto r = turing::check_diagram(turing::compile_tileset(m), d);
      for (const auto& v : r.violations) out << "violation at x=" << v.x << " t=" << v.y << "\n";
      out << "windows rejected: " << r.violations.size() << "\n";
      return status(out, r.ok);
    };
  });

  // core -------------------------------------------------------------------
  auto* co = app.add_subcommand("core", "patterns, admissibility and languages");
  co->require_subcommand(1);

  std::string cl_alpha = "01", cl_file;
  std::vector<std::string> cl_words;
  long cl_n = 3, cl_R = 0;
  auto* co_lang = co->add_subcommand("language", "patterns of side n admissible within radius R");
  co_lang->add_option("--alphabet", cl_alpha)->capture_default_str();
  co_lang->add_option("--forbidden", cl_file, "pattern file");
  co_lang->add_option("--forbid", cl_words, "inline 1D words")->delimiter(',');
  co_lang->add_option("--n", cl_n)->capture_default_str();
  co_lang->add_option("--radius", cl_R, "default n");
  co_lang->callback([&] {
    action = [&] {
      auto f = load_forbidden(cl_file, cl_words);
      core::SubshiftSpec spec{core::Alphabet::from_chars(cl_alpha), f.dimension(), f};
      auto L = core::language(spec, cl_n, cl_R > 0 ? cl_R : cl_n);
      for (const auto& p : L) out << core::format_pattern(p) << "\n";
      out << "count: " << L.size() << "\n";
      return status(out, true);
    };
  });

  std::string cr_alpha = "01", cr_file;
  std::vector<std::string> cr_words;
  long cr_n = 3, cr_rmax = 16, cr_cert = 0;
  auto* co_rec = co->add_subcommand("reconstruct", "reconstruction radius R(n)");
  co_rec->add_option("--alphabet", cr_alpha)->capture_default_str();
  co_rec->add_option("--forbidden", cr_file);
  co_rec->add_option("--forbid", cr_words)->delimiter(',');
  co_rec->add_option("--n", cr_n)->capture_default_str();
  co_rec->add_option("--rmax", cr_rmax)->capture_default_str();
  co_rec->add_option("--certify-radius", cr_cert, "2D only");
  co_rec->callback([&] {
    action = [&] {
      auto f = load_forbidden(cr_file, cr_words);
      core::ReconstructionOptions o;
      o.r_max = cr_rmax;
      o.certify_radius = cr_cert;
      auto R = core::reconstruction_radius(core::Alphabet::from_chars(cr_alpha), f, cr_n, o);
      if (!R) throw ResourceError("no radius up to " + std::to_string(cr_rmax));
      out << "R(" << cr_n << ") = " << *R << "\n";
      return status(out, true);
    };
  });

  // planar -----------------------------------------------------------------
  auto* pl = app.add_subcommand("planar", "two-dimensional counting");
  pl->require_subcommand(1);

  TowerArgs po{2, {4, 8}, {4, 4}};
  int po_k = 2, po_samples = 1;
  long po_size = 96, po_height = 0;
  std::uint64_t po_seed = 1;
  std::string po_pattern, po_out;
  auto* pl_occ = pl->add_subcommand("occupancy", "occupancy sets and zero-frequency bounds");
  add_tower_opts(pl_occ, po);
  pl_occ->add_option("--k", po_k)->capture_default_str();
  pl_occ->add_option("--size", po_size)->capture_default_str();
  pl_occ->add_option("--seed", po_seed)->capture_default_str();
  pl_occ->add_option("--samples", po_samples)->capture_default_str();
  pl_occ->add_option("--block-height", po_height, "mosaic block height (default l_k)");
  pl_occ->add_option("--pattern", po_pattern, "analyse this 2D pattern file instead of mosaics");
  pl_occ->add_option("--out", po_out, "JSON report of the first sample");
  pl_occ->callback([&] {
    action = [&] {
      auto t = make_tower(po);
      bool ok = true;
      const int samples = po_pattern.empty() ? po_samples : 1;
      for (int i = 0; i < samples; ++i) {
        core::Pattern p;
        if (!po_pattern.empty()) {
          auto ps = core::read_patterns_file(po_pattern);
          if (ps.size() != 1) throw UsageError("pattern file must hold exactly one pattern");
          p = ps.front();
        } else {
          planar::MosaicOptions mo;
          mo.block_height = po_height;
          p = planar::sample_mosaic(t, po_k, po_size, po_seed + static_cast<std::uint64_t>(i), mo);
        }
        auto r = planar::occupancy(p, t, po_k);
        bool disjoint = true;
        for (const auto& c : r.J_A)
          if (r.J_B.count(c)) disjoint = false;
        bool covered = true;
        for (const auto& u : r.I) {
          planar::Point c = u + planar::Point{r.ell_prime, r.ell_prime};
          if (!r.J_A.count(c) && !r.J_B.count(c)) covered = false;
        }
        auto zb = planar::check_zero_bounds(r, t, po_k, &p);
        out << "sample " << i << ": |I|=" << r.I.size() << " |J^A|=" << r.J_A.size() << " |J^B|=" << r.J_B.size()
            << " |K^A|=" << r.K_A.size() << " |K^B|=" << r.K_B.size() << " disjoint=" << disjoint
            << " covered=" << covered << " " << zb.first.name << ":" << (zb.first.holds ? "ok" : "FAIL") << " "
            << zb.second.name << ":" << (zb.second.holds ? "ok" : "FAIL") << "\n";
        if (i == 0 && !po_out.empty()) {
          Sink sink(po_out, out);
          sink() << planar::to_json(r) << "\n";
        }
        ok = ok && disjoint && covered && zb.holds();
      }
      return status(out, ok);
    };
  });

  std::string pf_word;
  long pf_height = 1;
  bool pf_list = false;
  auto* pl_lifts = pl->add_subcommand("lifts", "recolourings of the zeros of a duplicated word");
  pl_lifts->add_option("--word", pf_word)->required();
  pl_lifts->add_option("--height", pf_height)->capture_default_str();
  pl_lifts->add_flag("--list", pf_list);
  pl_lifts->callback([&] {
    action = [&] {
      auto p = planar::duplicate_extension(pf_word, pf_height);
      const auto count = planar::lift_count(p);
      out << "lifts: " << count.str() << "\n";
      bool ok = true;
      if (pf_list) {
        std::uint64_t seen = 0;
        planar::for_each_lift(p, [&](const core::Pattern& l) {
          ++seen;
          out << core::format_pattern(l) << "\n";
          ok = ok && planar::collapse(l) == p;
        });
        ok = ok && planar::BigInt(seen) == count;
      }
      return status(out, ok);
    };
  });

  // thermo -----------------------------------------------------------------
  auto* th = app.add_subcommand("thermo", "pressure, equilibrium marginals and entropies");
  th->require_subcommand(1);

  TowerArgs ws{3, {}, {}};
  long ws_m = 8;
  std::string ws_betas = "0:10:1", ws_out;
  auto* th_sweep = th->add_subcommand("sweep", "beta sweep for the tower potential");
  add_tower_opts(th_sweep, ws);
  th_sweep->add_option("--forbidden-from-tower", ws_m, "truncation m")->capture_default_str();
  th_sweep->add_option("--betas", ws_betas, "start:stop:step or a comma list")->capture_default_str();
  th_sweep->add_option("--out", ws_out);
  th_sweep->callback([&] {
    action = [&] {
      auto t = make_tower(ws);
      auto sw = thermo::beta_sweep(t, parse_betas(ws_betas), ws_m);
      Sink sink(ws_out, out);
      thermo::write_sweep_csv(sink(), sw);
      bool ok = true;
      for (const auto& r : sw.rows) ok = ok && r.bound_ok() && r.result.converged;
      return status(out, ok);
    };
  });

  std::string to_alpha = "01", to_file, to_betas = "0,1,5,50";
  bool to_vertical = false;
  long to_n = 3;
  auto* th_torus = th->add_subcommand("torus", "exact Gibbs measure on an n x n torus");
  th_torus->add_option("--alphabet", to_alpha)->capture_default_str();
  th_torus->add_option("--forbidden", to_file, "2D pattern file");
  th_torus->add_flag("--vertical", to_vertical, "forbid unequal vertical pairs");
  th_torus->add_option("--betas", to_betas)->capture_default_str();
  th_torus->add_option("--n", to_n)->capture_default_str();
  th_torus->callback([&] {
    action = [&] {
      const auto A = core::Alphabet::from_chars(to_alpha);
      core::ForbiddenSet f;
      if (to_vertical)
        f = planar::vertical_constraint(A);
      else if (!to_file.empty())
        f = core::ForbiddenSet(2, core::read_patterns_file(to_file));
      else
        throw UsageError("give --vertical or --forbidden");
      auto h = thermo::torus_histogram(A, f, to_n);
      bool ok = true;
      out << std::setprecision(12);
      for (double b : parse_betas(to_betas)) {
        auto r = thermo::evaluate_torus(h, b);
        out << "beta=" << b << " logZ=" << r.log_Z << " mean_energy=" << r.mean_energy << " ground_states=" << r.ground_states
            << " marginals=";
        for (std::size_t i = 0; i < r.marginals.size(); ++i) out << (i ? "," : "") << r.marginals[i];
        auto fb = thermo::freezing_bound_check(r, static_cast<long>(A.size()));
        out << " mass_bound=" << (fb.holds() ? "ok" : "FAIL") << "\n";
        ok = ok && fb.holds();
      }
      return status(out, ok);
    };
  });

  std::string te_p, te_joint;
  auto* th_ent = th->add_subcommand("entropy", "partition entropies in nats");
  th_ent->add_option("--p", te_p, "probability vector");
  th_ent->add_option("--joint", te_joint, "rows separated by ';'");
  th_ent->callback([&] {
    action = [&] {
      out << std::setprecision(12);
      if (!te_p.empty()) out << "H(P) = " << thermo::partition_entropy(parse_list(te_p)) << "\n";
      if (!te_joint.empty()) {
        std::vector<std::vector<double>> j;
        std::stringstream ss(te_joint);
        for (std::string row; std::getline(ss, row, ';');) j.push_back(parse_list(row));
        std::vector<std::vector<double>> jt(j.front().size(), std::vector<double>(j.size()));
        for (std::size_t a = 0; a < j.size(); ++a)
          for (std::size_t b = 0; b < j[a].size(); ++b) jt[b][a] = j[a][b];
        out << "H(P) = " << thermo::partition_entropy(thermo::row_marginal(j)) << "\n"
            << "H(Q) = " << thermo::partition_entropy(thermo::column_marginal(j)) << "\n"
            << "H(P v Q) = " << thermo::joint_entropy(j) << "\n"
            << "H(P|Q) = " << thermo::conditional_entropy(j) << "\n"
            << "H(Q|P) = " << thermo::conditional_entropy(jt) << "\n";
      }
      if (te_p.empty() && te_joint.empty()) throw UsageError("give --p or --joint");
      return status(out, true);
    };
  });

  std::vector<std::string> argv_store{"freezelab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    out << "STATUS: FAIL\n";
    return kUsage;
  }
  try {
    return action ? action() : kUsage;
  } catch (const ResourceError& e) {
    err << "resource bound: " << e.what() << "\n";
    out << "STATUS: FAIL\n";
    return kResource;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    out << "STATUS: FAIL\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    out << "STATUS: FAIL\n";
    return kUsage;
  }
}

}  // namespace freezelab::cli
