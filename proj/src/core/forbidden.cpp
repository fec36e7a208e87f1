#include <stdexcept>

#include "freezelab/core.hpp"

namespace freezelab::core {

ForbiddenSet::ForbiddenSet(int dimension, std::vector<Pattern> patterns) : dim_(dimension), patterns_(std::move(patterns)) {
  for (const auto& p : patterns_) {
    if (p.empty()) throw std::invalid_argument("empty forbidden pattern");
    if (p.dimension() != dim_) throw std::invalid_argument("forbidden pattern dimension mismatch");
    max_extent_ = std::max({max_extent_, p.width(), p.height()});
  }
}

ForbiddenSet ForbiddenSet::from_words(const std::vector<std::string>& words) {
  std::vector<Pattern> ps;
  ps.reserve(words.size());
  for (const auto& w : words) ps.push_back(Pattern::word(w));
  return ForbiddenSet(1, std::move(ps));
}

ForbiddenSet SubshiftSpec::truncated(long max_extent) const {
  if (const auto* f = std::get_if<ForbiddenSet>(&forbidden)) {
    std::vector<Pattern> keep;
    for (const auto& p : f->patterns())
      if (std::max(p.width(), p.height()) <= max_extent) keep.push_back(p);
    return ForbiddenSet(dimension, std::move(keep));
  }
  const auto& gen = std::get<ForbiddenGenerator>(forbidden);
  return ForbiddenSet(dimension, gen(max_extent));
}

bool locally_admissible(const Pattern& w, const ForbiddenSet& f) {
  for (const auto& p : f.patterns())
    if (!occurrences(p, w).empty()) return false;
  return true;
}

}  // namespace freezelab::core
