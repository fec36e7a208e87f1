#include <stdexcept>

#include "freezelab/turing.hpp"

namespace freezelab::turing {

Symbol cell_symbol(const State& q, const Symbol& s) { return "(" + q + "," + s + ")"; }

core::Pattern space_time_diagram(const Machine& m, const std::vector<Symbol>& input, long T, long lo, long hi) {
  if (T < 0 || lo > hi) throw std::invalid_argument("empty diagram window");
  std::map<core::Point, Symbol> cells;
  Config c = initial_config(m, input);
  auto emit_row = [&](long t) {
    for (long x = lo; x <= hi; ++x) {
      Symbol s = c.read(x, m.blank);
      cells.emplace(core::Point{x, t}, x == c.head ? cell_symbol(c.state, s) : s);
    }
  };
  emit_row(0);
  for (long t = 1; t <= T && !m.halting(c.state); ++t) {
    auto r = step(m, c);
    if (r.status == StepStatus::Stuck) break;
    c = std::move(r.config);
    emit_row(t);
  }
  return core::Pattern(2, std::move(cells));
}

}  // namespace freezelab::turing
