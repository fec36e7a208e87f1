#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "freezelab/turing.hpp"

namespace freezelab::turing {

static void index_tileset(Tileset& ts);

namespace {

// Shapes use placeholders s1, s2, s3 for the free tape symbols. "H" marks the
// reading head (q,x), "W" the written symbol y and "N" the head (q',s) that
// appears after the move.
struct Shape {
  const char* name;
  std::array<const char*, 3> bottom, top;
};

constexpr Shape kRight[] = {
    {"head-mid", {"s1", "H", "s3"}, {"s1", "W", "N3"}},
    {"head-left", {"H", "s2", "s3"}, {"W", "N2", "s3"}},
    {"head-enters", {"s1", "s2", "s3"}, {"N1", "s2", "s3"}},
    {"head-leaves", {"s1", "s2", "H"}, {"s1", "s2", "W"}},
};

constexpr Shape kLeft[] = {
    {"head-mid", {"s1", "H", "s3"}, {"N1", "W", "s3"}},
    {"head-right", {"s1", "s2", "H"}, {"s1", "N2", "W"}},
    {"head-enters", {"s1", "s2", "s3"}, {"s1", "s2", "N3"}},
    {"head-leaves", {"H", "s2", "s3"}, {"W", "s2", "s3"}},
};

std::size_t free_slots(const Shape& sh) {
  std::set<std::string> used;
  for (const char* c : sh.bottom)
    if (c[0] == 's') used.insert(c);
  for (const char* c : sh.top)
    if (c[0] == 's' || c[0] == 'N') used.insert(std::string("s") + c[1]);
  return used.size();
}

Symbol resolve(const char* slot, const Rule& r, const std::array<Symbol, 3>& s) {
  std::string k(slot);
  if (k == "H") return cell_symbol(r.state, r.read);
  if (k == "W") return r.to.write;
  if (k[0] == 'N') return cell_symbol(r.to.next, s[static_cast<std::size_t>(k[1] - '1')]);
  return s[static_cast<std::size_t>(k[1] - '1')];
}

const Shape* shapes_for(const Rule& r) { return r.to.move == Move::Right ? kRight : kLeft; }

}  // namespace

std::vector<TemplateFamily> rule_templates(const Machine& m, const Rule& r) {
  std::vector<TemplateFamily> out;
  const Shape* sh = shapes_for(r);
  for (int i = 0; i < 4; ++i) {
    TemplateFamily f;
    f.name = sh[i].name;
    std::array<Symbol, 3> ph{"s1", "s2", "s3"};
    for (int j = 0; j < 3; ++j) {
      f.shape.bottom[j] = resolve(sh[i].bottom[j], r, ph);
      f.shape.top[j] = resolve(sh[i].top[j], r, ph);
    }
    std::size_t n = 1;
    for (std::size_t k = 0; k < free_slots(sh[i]); ++k) n *= m.tape_alphabet.size();
    f.instances = n;
    out.push_back(std::move(f));
  }
  return out;
}

Tileset compile_tileset(const Machine& m) {
  m.validate();
  Tileset ts;
  ts.cell_alphabet = m.tape_alphabet;
  for (const auto& q : m.states)
    for (const auto& s : m.tape_alphabet) ts.cell_alphabet.push_back(cell_symbol(q, s));
  ts.total_windows = 1;
  for (int i = 0; i < 6; ++i) ts.total_windows *= ts.cell_alphabet.size();

  const auto& T = m.tape_alphabet;
  auto each_triple = [&](auto&& fn) {
    for (const auto& a : T)
      for (const auto& b : T)
        for (const auto& c : T) fn(std::array<Symbol, 3>{a, b, c});
  };
  // No head in the window: nothing changes.
  each_triple([&](const std::array<Symbol, 3>& s) { ts.allowed.insert(Tile{s, s}); });
  for (const auto& r : m.rules()) {
    const Shape* sh = shapes_for(r);
    for (int i = 0; i < 4; ++i) {
      each_triple([&](const std::array<Symbol, 3>& s) {
        Tile t;
        for (int j = 0; j < 3; ++j) {
          t.bottom[j] = resolve(sh[i].bottom[j], r, s);
          t.top[j] = resolve(sh[i].top[j], r, s);
        }
        ts.allowed.insert(std::move(t));
      });
    }
  }
  index_tileset(ts);
  return ts;
}

namespace {

constexpr std::uint64_t kMaxRadix = 1600;  // six packed ids stay below 2^64

std::uint64_t pack(const std::array<std::uint64_t, 6>& v, std::uint64_t radix) {
  std::uint64_t key = 0;
  for (auto x : v) key = key * radix + x;
  return key;
}

std::vector<std::uint64_t> pack_allowed(const Tileset& ts) {
  std::unordered_map<Symbol, std::uint64_t> id;
  for (const auto& s : ts.cell_alphabet) id.emplace(s, id.size() + 1);
  const std::uint64_t radix = id.size() + 1;
  std::vector<std::uint64_t> out;
  for (const auto& t : ts.allowed)
    out.push_back(pack({id.at(t.bottom[0]), id.at(t.bottom[1]), id.at(t.bottom[2]), id.at(t.top[0]), id.at(t.top[1]), id.at(t.top[2])},
                       radix));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

static void index_tileset(Tileset& ts) {
  ts.packed.clear();
  if (ts.cell_alphabet.size() + 1 <= kMaxRadix) ts.packed = pack_allowed(ts);
}

DiagramCheck check_diagram(const Tileset& tiles, const core::Pattern& grid) {
  if (grid.dimension() != 2 || !grid.is_box()) throw std::invalid_argument("diagram must be a full 2D box");
  if (grid.width() < 3 || grid.height() < 2) throw std::invalid_argument("diagram must be at least 3 wide and 2 tall");
  DiagramCheck out;
  const core::Point lo = grid.min_corner();
  const std::uint64_t radix = tiles.cell_alphabet.size() + 1;
  if (radix > kMaxRadix) {
    const core::Point hi = grid.max_corner();
    for (long t = lo.y; t < hi.y; ++t)
      for (long x = lo.x; x + 2 <= hi.x; ++x) {
        Tile w;
        for (std::size_t j = 0; j < 3; ++j) {
          w.bottom[j] = *grid.at({x + static_cast<long>(j), t});
          w.top[j] = *grid.at({x + static_cast<long>(j), t + 1});
        }
        if (tiles.forbids(w)) out.violations.push_back({x, t});
      }
    out.ok = out.violations.empty();
    return out;
  }
  // Id 0 marks a cell outside the alphabet, which no allowed window contains.
  std::unordered_map<Symbol, std::uint64_t> id;
  for (const auto& s : tiles.cell_alphabet) id.emplace(s, id.size() + 1);
  std::vector<std::uint64_t> local;
  const auto* allowed = &tiles.packed;
  if (tiles.packed.size() != tiles.allowed.size()) {
    local = pack_allowed(tiles);
    allowed = &local;
  }
  const long w = grid.width(), h = grid.height();
  std::vector<std::uint64_t> cell(static_cast<std::size_t>(w * h));
  for (const auto& [p, s] : grid.cells()) {
    auto it = id.find(s);
    cell[static_cast<std::size_t>((p.y - lo.y) * w + (p.x - lo.x))] = it == id.end() ? 0 : it->second;
  }
  for (long t = 0; t + 1 < h; ++t)
    for (long x = 0; x + 2 < w; ++x) {
      const std::size_t b = static_cast<std::size_t>(t * w + x), u = b + static_cast<std::size_t>(w);
      const std::array<std::uint64_t, 6> v{cell[b], cell[b + 1], cell[b + 2], cell[u], cell[u + 1], cell[u + 2]};
      const bool unknown = std::find(v.begin(), v.end(), 0) != v.end();
      if (unknown || !std::binary_search(allowed->begin(), allowed->end(), pack(v, radix)))
        out.violations.push_back({lo.x + x, lo.y + t});
    }
  out.ok = out.violations.empty();
  return out;
}

}  // namespace freezelab::turing
