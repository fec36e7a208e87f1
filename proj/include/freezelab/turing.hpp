#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "freezelab/core.hpp"

namespace freezelab::turing {

using core::Symbol;
using State = std::string;

enum class Move : int { Left = -1, Right = 1 };

struct Transition {
  State next;
  Symbol write;
  Move move = Move::Right;
  bool operator==(const Transition&) const = default;
};

struct Rule {
  State state;
  Symbol read;
  Transition to;
};

struct Machine {
  std::vector<State> states;
  std::vector<Symbol> input_alphabet;
  std::vector<Symbol> tape_alphabet;
  Symbol blank;
  State start, accept, reject;
  std::map<std::pair<State, Symbol>, Transition> delta;
  // (state, symbol under the head) pairs that trigger output.
  std::set<std::pair<State, Symbol>> print_events;

  // Throws std::invalid_argument on an inconsistent tuple.
  void validate() const;
  std::optional<Transition> transition(const State& q, const Symbol& s) const;
  std::vector<Rule> rules() const;
  bool halting(const State& q) const { return q == accept || q == reject; }
};

struct Config {
  // Non-blank cells only.
  std::map<long, Symbol> tape;
  long head = 0;
  State state;
  long steps = 0;

  Symbol read(long pos, const Symbol& blank) const;
};

Config initial_config(const Machine& m, const std::vector<Symbol>& input);

enum class StepStatus { Running, Accept, Reject, Stuck };

struct StepResult {
  Config config;
  StepStatus status = StepStatus::Running;
};

// Requires a non-halting state. A missing transition yields Stuck and
// leaves the configuration unchanged.
StepResult step(const Machine& m, const Config& c);

enum class RunStatus { Accept, Reject, Stuck, Timeout };
std::string to_string(RunStatus s);

struct RunResult {
  RunStatus status = RunStatus::Timeout;
  Config config;
};

RunResult run_bounded(const Machine& m, const std::vector<Symbol>& input, long fuel);

struct Enumeration {
  std::vector<std::string> words;
  bool fuel_exhausted = false;
  long steps = 0;
};

// Runs from the empty tape; at every step that enters a print event the
// maximal non-blank segment at the head is emitted with symbols outside the
// input alphabet removed.
Enumeration enumerate(const Machine& m, long fuel);

// Composite cell "(q,s)".
Symbol cell_symbol(const State& q, const Symbol& s);

// Rows t = 0 .. min(T, halting step), columns [lo, hi]; cell (x, t).
core::Pattern space_time_diagram(const Machine& m, const std::vector<Symbol>& input, long T, long lo, long hi);

struct Tile {
  std::array<Symbol, 3> bottom;  // time t
  std::array<Symbol, 3> top;     // time t + 1
  auto operator<=>(const Tile&) const = default;
};

struct TemplateFamily {
  std::string name;
  Tile shape;  // free positions hold "s1", "s2", "s3"
  std::size_t instances = 0;
};

// The four window families generated by one transition.
std::vector<TemplateFamily> rule_templates(const Machine& m, const Rule& r);

struct Tileset {
  std::vector<Symbol> cell_alphabet;
  std::set<Tile> allowed;
  boost::multiprecision::cpp_int total_windows;
  // Packed form of `allowed` filled by compile_tileset; ids start at 1 in
  // cell_alphabet order. Rebuilt on the fly when out of date.
  std::vector<std::uint64_t> packed;

  bool forbids(const Tile& t) const { return allowed.count(t) == 0; }
  boost::multiprecision::cpp_int forbidden_count() const { return total_windows - allowed.size(); }
};

// Allowed 3 x 2 windows; the forbidden set is their complement and is kept
// implicit.
Tileset compile_tileset(const Machine& m);

struct DiagramCheck {
  bool ok = true;
  // Lower-left corners (x, t) of rejected windows.
  std::vector<core::Point> violations;
};

// Throws std::invalid_argument for grids smaller than 3 x 2.
DiagramCheck check_diagram(const Tileset& tiles, const core::Pattern& grid);

Machine parse_machine(std::istream& in);
Machine read_machine_file(const std::string& path);
std::string format_machine(const Machine& m);

std::vector<std::string> builtin_names();
Machine builtin_machine(const std::string& name);

}  // namespace freezelab::turing
