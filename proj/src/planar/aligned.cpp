#include <stdexcept>

#include "freezelab/planar.hpp"

namespace freezelab::planar {

core::Alphabet base_alphabet() { return core::Alphabet({"0", "1", "2"}); }
core::Alphabet lift_alphabet() { return core::Alphabet({"0'", "0''", "1", "2"}); }

Pattern duplicate_extension(const std::string& w, long h) {
  if (h < 1) throw std::invalid_argument("height must be at least 1");
  const auto syms = core::split_code_points(w);
  std::map<Point, core::Symbol> cells;
  for (long y = 1; y <= h; ++y)
    for (std::size_t i = 0; i < syms.size(); ++i) cells.emplace(Point{static_cast<long>(i) + 1, y}, syms[i]);
  return Pattern(2, std::move(cells));
}

bool is_aligned(const Pattern& p) {
  for (const auto& [pt, s] : p.cells()) {
    auto above = p.at({pt.x, pt.y + 1});
    if (above && *above != s) return false;
  }
  return true;
}

std::string base_word(const Pattern& p) {
  if (!p.is_box() || !is_aligned(p)) throw std::invalid_argument("base_word needs an aligned box");
  auto rows = p.to_rows();
  std::string out;
  if (!rows.empty())
    for (const auto& s : rows.front()) out += s;
  return out;
}

core::ForbiddenSet vertical_constraint(const core::Alphabet& a) {
  std::vector<Pattern> ps;
  for (const auto& lo : a.symbols())
    for (const auto& hi : a.symbols())
      if (lo != hi) ps.push_back(Pattern(2, {{Point{1, 1}, lo}, {Point{1, 2}, hi}}));
  return core::ForbiddenSet(2, std::move(ps));
}

BigInt lift_count(const Pattern& p) {
  BigInt one = 1;
  long zeros = 0;
  for (const auto& [pt, s] : p.cells())
    if (s == "0") ++zeros;
  return one << zeros;
}

void for_each_lift(const Pattern& p, const std::function<void(const Pattern&)>& fn) {
  std::vector<Point> zeros;
  for (const auto& [pt, s] : p.cells())
    if (s == "0") zeros.push_back(pt);
  if (zeros.size() > 30) throw std::invalid_argument("too many lifts to enumerate");
  const unsigned long total = 1UL << zeros.size();
  for (unsigned long mask = 0; mask < total; ++mask) {
    auto cells = p.cells();
    for (std::size_t i = 0; i < zeros.size(); ++i) cells[zeros[i]] = (mask >> i) & 1UL ? "0''" : "0'";
    fn(Pattern(p.dimension(), std::move(cells)));
  }
}

Pattern collapse(const Pattern& lifted) {
  auto cells = lifted.cells();
  for (auto& [pt, s] : cells)
    if (s == "0'" || s == "0''") s = "0";
  return Pattern(lifted.dimension(), std::move(cells));
}

}  // namespace freezelab::planar
