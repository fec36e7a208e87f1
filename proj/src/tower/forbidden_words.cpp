#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "freezelab/errors.hpp"
#include "freezelab/tower.hpp"

namespace freezelab::tower {

namespace {

// Indices into {a, b, 1, 2}.
enum Slot { kA = 0, kB = 1, kOne = 2, kTwo = 3 };

std::vector<int> block_sequence(int k, long N, int word) {
  std::vector<int> seq(static_cast<std::size_t>(N), word);
  const bool odd = k % 2 == 1;
  if (odd && word == kB) std::fill(seq.begin() + 1, seq.end() - 1, kTwo);
  if (!odd && word == kA) std::fill(seq.begin() + 1, seq.end() - 1, kOne);
  return seq;
}

std::vector<std::pair<int, int>> pairs_for(PairSet ps) {
  std::vector<std::pair<int, int>> out;
  if (ps == PairSet::All) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out.emplace_back(i, j);
  } else {
    for (int a : {kA, kOne})
      for (int b : {kB, kTwo}) {
        out.emplace_back(a, b);
        out.emplace_back(b, a);
      }
  }
  return out;
}

// Naive search with early exit; counts character comparisons.
bool contains(const std::string& hay, const std::string& needle, std::uint64_t& cmp) {
  const std::size_t n = needle.size();
  if (n > hay.size()) return false;
  for (std::size_t i = 0; i + n <= hay.size(); ++i) {
    std::size_t j = 0;
    while (j < n) {
      ++cmp;
      if (hay[i + j] != needle[j]) break;
      ++j;
    }
    if (j == n) return true;
  }
  return false;
}

bool increment(std::string& w) {
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] < '2') {
      ++w[i];
      return true;
    }
    w[i] = '0';
  }
  return false;
}

}  // namespace

std::vector<std::string> ForbiddenWords::up_to(long n) const {
  std::vector<std::string> out;
  for (long m = 1; m <= n && m <= static_cast<long>(by_length.size()); ++m)
    out.insert(out.end(), by_length[static_cast<std::size_t>(m - 1)].begin(),
               by_length[static_cast<std::size_t>(m - 1)].end());
  return out;
}

ForbiddenWords forbidden_words(const Tower& t, long n_max, const ForbiddenOptions& opts) {
  if (n_max < 1) throw std::invalid_argument("n must be positive");
  t.level_for_length(n_max);
  ForbiddenWords out;
  const auto pairs = pairs_for(opts.pairs);

  int k = -1;
  long p = 0;
  std::size_t blocks = 0;
  std::vector<std::vector<int>> seq(4);
  std::vector<std::string> init(4), term(4);
  std::vector<std::string> W;
  std::uint64_t total = 0, cumulative = 0;
  std::set<std::string> shorter;

  for (long n = 1; n <= n_max; ++n) {
    const int kn = t.level_for_length(n);
    bool rebuild = false;
    if (kn != k) {
      k = kn;
      p = 0;
      blocks = 0;
      if (k >= 1) {
        for (int w = 0; w < 4; ++w) seq[static_cast<std::size_t>(w)] = block_sequence(k, t.level(k).N, w);
        for (auto& s : init) s.clear();
        for (auto& s : term) s.clear();
      }
      rebuild = true;
    }
    if (k == 0) {
      if (rebuild) {
        const auto L = t.level(0).L();
        W.clear();
        for (auto [i, j] : pairs) W.push_back(L[static_cast<std::size_t>(i)] + L[static_cast<std::size_t>(j)]);
      }
    } else {
      const Level& prev = t.level(k - 1);
      const long lp = static_cast<long>(prev.ell);
      const long want_p = (n + lp - 1) / lp;
      if (want_p != p) {
        p = want_p;
        const std::size_t want_blocks = std::min<std::size_t>(static_cast<std::size_t>(p + 1), static_cast<std::size_t>(t.level(k).N));
        const auto Lprev = prev.L();
        // Extend initial segments to the right and terminal ones to the left.
        while (blocks < want_blocks) {
          for (int w = 0; w < 4; ++w) {
            const auto& s = seq[static_cast<std::size_t>(w)];
            init[static_cast<std::size_t>(w)] += Lprev[static_cast<std::size_t>(s[blocks])];
            term[static_cast<std::size_t>(w)] =
                Lprev[static_cast<std::size_t>(s[s.size() - 1 - blocks])] + term[static_cast<std::size_t>(w)];
          }
          ++blocks;
        }
        W.clear();
        for (auto [i, j] : pairs) W.push_back(term[static_cast<std::size_t>(i)] + init[static_cast<std::size_t>(j)]);
      }
    }

    ForbiddenCost c;
    c.n = n;
    std::vector<std::string> found;
    std::string cand(static_cast<std::size_t>(n), '0');
    do {
      if (++total > opts.max_candidates) throw ResourceError("candidate budget exceeded at length " + std::to_string(n));
      ++c.candidates;
      bool seen = false;
      for (const auto& w : W)
        if (contains(w, cand, c.comparisons)) {
          seen = true;
          break;
        }
      if (seen) continue;
      if (opts.minimal_only) {
        bool has_shorter = false;
        for (const auto& f : shorter)
          if (contains(cand, f, c.comparisons)) {
            has_shorter = true;
            break;
          }
        if (has_shorter) continue;
      }
      found.push_back(cand);
    } while (increment(cand));
    if (opts.minimal_only) shorter.insert(found.begin(), found.end());
    cumulative += c.candidates + c.comparisons;
    c.cumulative = cumulative;
    out.cost.push_back(c);
    out.by_length.push_back(std::move(found));
  }
  return out;
}

std::vector<std::string> forbidden_oracle(const Tower& t, long n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const int k = t.level_for_length(n);
  const auto L = t.level(k).L();
  std::set<std::string> seen;
  for (const auto& a : L)
    for (const auto& b : L) {
      const std::string ab = a + b;
      for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= ab.size(); ++i)
        seen.insert(ab.substr(i, static_cast<std::size_t>(n)));
    }
  std::vector<std::string> out;
  std::string cand(static_cast<std::size_t>(n), '0');
  do {
    if (!seen.count(cand)) out.push_back(cand);
  } while (increment(cand));
  return out;
}

double fitted_cost_constant(const std::vector<ForbiddenCost>& cost) {
  double c = 0;
  for (const auto& r : cost) {
    const double n = static_cast<double>(r.n);
    c = std::max(c, static_cast<double>(r.cumulative) / (n * n * n * std::pow(3.0, n)));
  }
  return c;
}

}  // namespace freezelab::tower
