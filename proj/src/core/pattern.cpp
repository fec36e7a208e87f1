#include <algorithm>
#include <limits>
#include <stdexcept>

#include "freezelab/core.hpp"

namespace freezelab::core {

Pattern::Pattern(int dimension, std::map<Point, Symbol> cells) : dim_(dimension), cells_(std::move(cells)) {
  if (dim_ != 1 && dim_ != 2) throw std::invalid_argument("dimension must be 1 or 2");
  if (dim_ == 1) {
    for (const auto& [p, s] : cells_)
      if (p.y != 0) throw std::invalid_argument("1D pattern with non-zero y");
  }
}

Pattern Pattern::word(std::string_view text, long start) { return word(split_code_points(text), start); }

Pattern Pattern::word(const std::vector<Symbol>& symbols, long start) {
  std::map<Point, Symbol> cells;
  for (std::size_t i = 0; i < symbols.size(); ++i) cells.emplace(Point{start + static_cast<long>(i), 0}, symbols[i]);
  return Pattern(1, std::move(cells));
}

Pattern Pattern::from_rows(const std::vector<std::vector<Symbol>>& rows) {
  std::map<Point, Symbol> cells;
  const long r = static_cast<long>(rows.size());
  for (long i = 0; i < r; ++i) {
    if (!rows.empty() && rows[i].size() != rows[0].size()) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < rows[i].size(); ++j) cells.emplace(Point{static_cast<long>(j) + 1, r - i}, rows[i][j]);
  }
  return Pattern(2, std::move(cells));
}

std::set<Point> Pattern::support() const {
  std::set<Point> out;
  for (const auto& [p, s] : cells_) out.insert(p);
  return out;
}

std::optional<Symbol> Pattern::at(const Point& p) const {
  auto it = cells_.find(p);
  if (it == cells_.end()) return std::nullopt;
  return it->second;
}

Point Pattern::min_corner() const {
  if (cells_.empty()) return {0, 0};
  Point m{std::numeric_limits<long>::max(), std::numeric_limits<long>::max()};
  for (const auto& [p, s] : cells_) {
    m.x = std::min(m.x, p.x);
    m.y = std::min(m.y, p.y);
  }
  return m;
}

Point Pattern::max_corner() const {
  if (cells_.empty()) return {-1, -1};
  Point m{std::numeric_limits<long>::min(), std::numeric_limits<long>::min()};
  for (const auto& [p, s] : cells_) {
    m.x = std::max(m.x, p.x);
    m.y = std::max(m.y, p.y);
  }
  return m;
}

long Pattern::width() const { return cells_.empty() ? 0 : max_corner().x - min_corner().x + 1; }
long Pattern::height() const { return cells_.empty() ? 0 : max_corner().y - min_corner().y + 1; }

bool Pattern::is_box() const { return static_cast<long>(cells_.size()) == width() * height(); }

Pattern Pattern::shifted(const Point& u) const {
  std::map<Point, Symbol> cells;
  for (const auto& [p, s] : cells_) cells.emplace(p - u, s);
  return Pattern(dim_, std::move(cells));
}

Pattern Pattern::normalized() const {
  if (cells_.empty()) return *this;
  Point m = min_corner();
  Point u{m.x - 1, dim_ == 1 ? 0 : m.y - 1};
  return shifted(u);
}

Pattern Pattern::restricted(const Point& lo, const Point& hi) const {
  std::map<Point, Symbol> cells;
  for (const auto& [p, s] : cells_)
    if (p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y) cells.emplace(p, s);
  return Pattern(dim_, std::move(cells));
}

Pattern Pattern::with(const Point& p, const Symbol& s) const {
  Pattern out = *this;
  out.cells_[p] = s;
  return out;
}

std::string Pattern::to_word() const {
  if (dim_ != 1) throw std::logic_error("to_word on a 2D pattern");
  std::string out;
  for (const auto& [p, s] : cells_) out += s;
  return out;
}

std::vector<std::vector<Symbol>> Pattern::to_rows() const {
  if (!is_box()) throw std::logic_error("to_rows needs a box support");
  std::vector<std::vector<Symbol>> rows;
  if (cells_.empty()) return rows;
  Point lo = min_corner(), hi = max_corner();
  for (long y = hi.y; y >= lo.y; --y) {
    std::vector<Symbol> row;
    for (long x = lo.x; x <= hi.x; ++x) row.push_back(cells_.at({x, y}));
    rows.push_back(std::move(row));
  }
  return rows;
}

bool Pattern::operator<(const Pattern& o) const {
  if (dim_ != o.dim_) return dim_ < o.dim_;
  return cells_ < o.cells_;
}

std::set<Point> occurrences(const Pattern& p, const Pattern& q) {
  std::set<Point> out;
  if (p.empty()) return out;
  if (p.dimension() != q.dimension()) throw std::invalid_argument("dimension mismatch");
  const Point anchor = p.cells().begin()->first;
  // Every valid t maps the anchor onto some cell of q.
  for (const auto& [qp, qs] : q.cells()) {
    if (qs != p.cells().begin()->second) continue;
    Point t = qp - anchor;
    bool ok = true;
    for (const auto& [pp, ps] : p.cells()) {
      auto v = q.at(pp + t);
      if (!v || *v != ps) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(t);
  }
  return out;
}

}  // namespace freezelab::core
