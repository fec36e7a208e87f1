#include <random>
#include <stdexcept>

#include "freezelab/planar.hpp"

namespace freezelab::planar {

Pattern sample_mosaic(const tower::Tower& t, int k, long n, std::uint64_t seed, const MosaicOptions& opts) {
  if (n < 1) throw std::invalid_argument("side must be positive");
  const tower::Level& L = t.level(k);
  const std::vector<std::string> dict = opts.dictionary.empty() ? L.L() : opts.dictionary;
  const long w = static_cast<long>(dict.front().size());
  for (const auto& d : dict)
    if (static_cast<long>(d.size()) != w) throw std::invalid_argument("dictionary words must share one length");
  const long h = opts.block_height > 0 ? opts.block_height : w;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> phase_x(0, w - 1), phase_y(0, h - 1);
  std::uniform_int_distribution<std::size_t> pick(0, dict.size() - 1);
  const long px = phase_x(rng), py = phase_y(rng);
  const long bx = (n + px + w - 1) / w, by = (n + py + h - 1) / h;
  std::vector<std::size_t> choice(static_cast<std::size_t>(bx * by));
  for (auto& c : choice) c = pick(rng);

  std::map<Point, core::Symbol> cells;
  for (long y = 0; y < n; ++y)
    for (long x = 0; x < n; ++x) {
      const long gx = x + px, gy = y + py;
      const std::string& word = dict[choice[static_cast<std::size_t>((gy / h) * bx + gx / w)]];
      cells.emplace(Point{x + 1, y + 1}, std::string(1, word[static_cast<std::size_t>(gx % w)]));
    }
  return Pattern(2, std::move(cells));
}

}  // namespace freezelab::planar
