#include <map>
#include <stdexcept>

#include "freezelab/errors.hpp"
#include "search_engine.hpp"

namespace freezelab::core {

namespace {

Pattern grid_to_pattern(const std::vector<int>& g, long w, long h, const Alphabet& a, int dim) {
  std::map<Point, Symbol> cells;
  for (long y = 0; y < h; ++y)
    for (long x = 0; x < w; ++x)
      cells.emplace(Point{x + 1, dim == 1 ? 0 : y + 1}, a.symbol(static_cast<std::size_t>(g[y * w + x])));
  return Pattern(dim, std::move(cells));
}

std::set<Pattern> language_box(const SubshiftSpec& spec, long cols, long rows, long R, const SearchOptions& opts) {
  if (R < std::max(cols, rows)) throw std::invalid_argument("radius must be at least the block side");
  const int dim = spec.dimension;
  ForbiddenSet f = spec.truncated(2 * R);
  std::set<Pattern> out;
  detail::BoxSearch box(cols, dim == 1 ? 1 : rows, f, spec.alphabet);
  box.run(UINT64_MAX, [&](const std::vector<int>& g) {
    Pattern w = grid_to_pattern(g, cols, dim == 1 ? 1 : rows, spec.alphabet, dim);
    auto r = globally_admissible_within(w, f, spec.alphabet, R, opts);
    if (r == Admissibility::BudgetExceeded) throw ResourceError("admissibility search exceeded its node budget");
    if (r == Admissibility::Admissible) out.insert(std::move(w));
    return true;
  });
  return out;
}

}  // namespace

std::set<Pattern> language(const SubshiftSpec& spec, long n, long R, const SearchOptions& opts) {
  return language_box(spec, n, n, R, opts);
}

std::set<Pattern> language_rect(const SubshiftSpec& spec, long cols, long rows, long R, const SearchOptions& opts) {
  if (spec.dimension != 2) throw std::invalid_argument("language_rect is 2D only");
  return language_box(spec, cols, rows, R, opts);
}

std::set<std::string> language_1d(const Alphabet& alphabet, const ForbiddenSet& f, long n) {
  std::set<std::string> out;
  detail::BoxSearch box(n, 1, f, alphabet);
  box.run(UINT64_MAX, [&](const std::vector<int>& g) {
    Pattern w = grid_to_pattern(g, n, 1, alphabet, 1);
    if (globally_admissible_1d(w, f, alphabet)) out.insert(w.to_word());
    return true;
  });
  return out;
}

Dictionary::Dictionary(std::vector<Pattern> members) : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("empty dictionary");
  dim_ = members_.front().dimension();
  side_ = members_.front().width();
  for (auto& m : members_) {
    if (m.dimension() != dim_) throw std::invalid_argument("dictionary dimension mismatch");
    if (!m.is_box() || m.width() != side_ || (dim_ == 2 && m.height() != side_))
      throw std::invalid_argument("dictionary members must share one square side");
    m = m.normalized();
  }
}

Dictionary Dictionary::from_words(const std::vector<std::string>& words) {
  std::vector<Pattern> ps;
  for (const auto& w : words) ps.push_back(Pattern::word(w));
  return Dictionary(std::move(ps));
}

std::set<std::string> concat_language_words(const std::vector<std::string>& words, long n) {
  if (words.empty()) throw std::invalid_argument("empty dictionary");
  const long l = static_cast<long>(words.front().size());
  for (const auto& w : words)
    if (static_cast<long>(w.size()) != l) throw std::invalid_argument("dictionary words must share one length");
  if (n < 1 || n > 2 * l) throw std::invalid_argument("need 1 <= n <= 2l");
  std::set<std::string> out;
  for (const auto& a : words)
    for (const auto& b : words) {
      std::string ab = a + b;
      for (long i = 0; i + n <= 2 * l; ++i) out.insert(ab.substr(static_cast<std::size_t>(i), static_cast<std::size_t>(n)));
    }
  return out;
}

std::set<Pattern> concat_language(const Dictionary& dict, long n) {
  const long l = dict.side();
  if (n < 1 || n > 2 * l) throw std::invalid_argument("need 1 <= n <= 2l");
  std::set<Pattern> out;
  const auto& m = dict.members();
  if (dict.dimension() == 1) {
    for (const auto& a : m)
      for (const auto& b : m) {
        std::map<Point, Symbol> cells(a.cells());
        for (const auto& [p, s] : b.cells()) cells.emplace(Point{p.x + l, 0}, s);
        Pattern ab(1, std::move(cells));
        for (long i = 0; i + n <= 2 * l; ++i) out.insert(ab.restricted({i + 1, 0}, {i + n, 0}).normalized());
      }
    return out;
  }
  // 2 x 2 mosaics: bl, br, tl, tr.
  for (const auto& bl : m)
    for (const auto& br : m)
      for (const auto& tl : m)
        for (const auto& tr : m) {
          std::map<Point, Symbol> cells;
          auto put = [&](const Pattern& p, long ox, long oy) {
            for (const auto& [pt, s] : p.cells()) cells.emplace(Point{pt.x + ox, pt.y + oy}, s);
          };
          put(bl, 0, 0);
          put(br, l, 0);
          put(tl, 0, l);
          put(tr, l, l);
          Pattern mosaic(2, std::move(cells));
          for (long y = 0; y + n <= 2 * l; ++y)
            for (long x = 0; x + n <= 2 * l; ++x)
              out.insert(mosaic.restricted({x + 1, y + 1}, {x + n, y + n}).normalized());
        }
  return out;
}

std::optional<long> reconstruction_radius(const Alphabet& alphabet, const ForbiddenSet& f, long n,
                                          const ReconstructionOptions& opts) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const int dim = f.dimension();
  std::map<Pattern, bool> cache;
  for (long R = n; R <= opts.r_max; ++R) {
    const long side = 2 * R;
    const long t = central_offset(n, R);
    bool ok = true;
    detail::BoxSearch box(side, dim == 1 ? 1 : side, f, alphabet);
    box.run(UINT64_MAX, [&](const std::vector<int>& g) {
      Pattern big = grid_to_pattern(g, side, dim == 1 ? 1 : side, alphabet, dim);
      Pattern block = dim == 1 ? big.restricted({t + 1, 0}, {t + n, 0}).normalized()
                               : big.restricted({t + 1, t + 1}, {t + n, t + n}).normalized();
      auto it = cache.find(block);
      bool good;
      if (it != cache.end()) {
        good = it->second;
      } else {
        if (dim == 1) {
          good = globally_admissible_1d(block, f, alphabet);
        } else {
          long cr = std::max(opts.certify_radius, n);
          auto r = globally_admissible_within(block, f, alphabet, cr, opts.search);
          if (r == Admissibility::BudgetExceeded) throw ResourceError("certification exceeded its node budget");
          good = r == Admissibility::Admissible;
        }
        cache.emplace(block, good);
      }
      if (!good) ok = false;
      return ok;
    });
    if (ok) return R;
  }
  return std::nullopt;
}

}  // namespace freezelab::core
