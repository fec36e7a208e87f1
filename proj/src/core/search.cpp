#include <algorithm>
#include <stdexcept>

#include "freezelab/errors.hpp"
#include "search_engine.hpp"

namespace freezelab::core {
namespace detail {

BoxSearch::BoxSearch(long width, long height, const ForbiddenSet& f, const Alphabet& alphabet)
    : w_(width), h_(height), q_(static_cast<int>(alphabet.size())), grid_(static_cast<std::size_t>(width * height), -1) {
  if (width < 0 || height < 0) throw std::invalid_argument("negative box");
  for (const auto& p : f.patterns()) {
    Compiled c;
    Point lo = p.min_corner();
    c.pw = p.width();
    c.ph = p.height();
    bool usable = true;
    for (const auto& [pt, s] : p.cells()) {
      auto idx = alphabet.index(s);
      // A pattern using a foreign symbol can never occur.
      if (!idx) {
        usable = false;
        break;
      }
      c.dx.push_back(pt.x - lo.x);
      c.dy.push_back(pt.y - lo.y);
      c.sym.push_back(*idx);
    }
    if (usable) pats_.push_back(std::move(c));
  }
}

void BoxSearch::fix(long x, long y, int symbol) { grid_.at(static_cast<std::size_t>(y * w_ + x)) = symbol; }

Admissibility BoxSearch::run(std::uint64_t budget, const std::function<bool(const std::vector<int>&)>& on_solution) {
  const long n = w_ * h_;
  std::vector<long> order;
  order.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i)
    if (grid_[i] >= 0) order.push_back(i);
  const long nfixed = static_cast<long>(order.size());
  for (long i = 0; i < n; ++i)
    if (grid_[i] < 0) order.push_back(i);
  std::vector<long> rank(static_cast<std::size_t>(n));
  for (long r = 0; r < n; ++r) rank[order[r]] = r;

  // Each placement is checked once, when its last cell in fill order is set.
  std::vector<long> cells;
  std::vector<int> syms;
  std::vector<std::pair<long, long>> spans;
  std::vector<std::vector<long>> trigger(static_cast<std::size_t>(n));
  for (const auto& c : pats_) {
    for (long oy = 0; oy + c.ph <= h_; ++oy) {
      for (long ox = 0; ox + c.pw <= w_; ++ox) {
        long start = static_cast<long>(cells.size());
        long last = -1;
        for (std::size_t k = 0; k < c.sym.size(); ++k) {
          long cell = (oy + c.dy[k]) * w_ + (ox + c.dx[k]);
          cells.push_back(cell);
          syms.push_back(c.sym[k]);
          last = std::max(last, rank[cell]);
        }
        trigger[last].push_back(static_cast<long>(spans.size()));
        spans.emplace_back(start, static_cast<long>(cells.size()));
      }
    }
  }

  auto violated = [&](long pid) {
    auto [a, b] = spans[pid];
    for (long i = a; i < b; ++i)
      if (grid_[cells[i]] != syms[i]) return false;
    return true;
  };
  auto clean = [&](long r) {
    for (long pid : trigger[r])
      if (violated(pid)) return false;
    return true;
  };

  for (long r = 0; r < nfixed; ++r)
    if (!clean(r)) return Admissibility::NotAdmissible;

  bool found = false;
  if (nfixed == n) {
    if (on_solution) on_solution(grid_);
    return Admissibility::Admissible;
  }

  std::uint64_t nodes = 0;
  std::vector<int> choice(static_cast<std::size_t>(n), -1);
  long pos = nfixed;
  while (pos >= nfixed) {
    if (pos == n) {
      found = true;
      if (!on_solution || !on_solution(grid_)) break;
      --pos;
      continue;
    }
    const long cell = order[pos];
    if (++choice[pos] == q_) {
      choice[pos] = -1;
      grid_[cell] = -1;
      --pos;
      continue;
    }
    grid_[cell] = choice[pos];
    if (++nodes > budget) {
      for (long r = nfixed; r < n; ++r) grid_[order[r]] = -1;
      return Admissibility::BudgetExceeded;
    }
    if (clean(pos)) {
      ++pos;
      if (pos < n) choice[pos] = -1;
    }
  }
  for (long r = nfixed; r < n; ++r) grid_[order[r]] = -1;
  return found ? Admissibility::Admissible : Admissibility::NotAdmissible;
}

}  // namespace detail

long central_offset(long n, long R) { return (2 * R - n) / 2; }

namespace {

void place(detail::BoxSearch& box, const Pattern& w, const Alphabet& alphabet, long ox, long oy) {
  Point lo = w.min_corner();
  for (const auto& [p, s] : w.cells()) {
    auto idx = alphabet.index(s);
    if (!idx) throw std::invalid_argument("symbol not in alphabet: " + s);
    box.fix(ox + p.x - lo.x, w.dimension() == 1 ? 0 : oy + p.y - lo.y, *idx);
  }
}

}  // namespace

Admissibility globally_admissible_within(const Pattern& w, const ForbiddenSet& f, const Alphabet& alphabet, long R,
                                         const SearchOptions& opts) {
  const long wx = w.width(), wy = w.dimension() == 1 ? 1 : w.height();
  if (R < std::max(wx, w.dimension() == 1 ? 0L : wy))
    throw std::invalid_argument("radius must be at least the pattern extent");
  const bool two_d = w.dimension() == 2;
  detail::BoxSearch box(2 * R, two_d ? 2 * R : 1, f, alphabet);
  place(box, w, alphabet, central_offset(wx, R), two_d ? central_offset(wy, R) : 0);
  return box.run(opts.node_budget);
}

bool globally_admissible_1d(const Pattern& w, const ForbiddenSet& f, const Alphabet& alphabet) {
  if (w.dimension() != 1) throw std::invalid_argument("globally_admissible_1d needs a 1D pattern");
  const long q = static_cast<long>(alphabet.size());
  const long k = std::max(1L, f.max_extent() - 1);
  long nstates = 1;
  for (long i = 0; i < k; ++i) {
    nstates *= q;
    if (nstates > 4'000'000) throw ResourceError("de Bruijn graph too large");
  }
  std::vector<std::vector<int>> forb;
  for (const auto& p : f.patterns()) {
    std::vector<int> v;
    bool ok = true;
    for (const auto& [pt, s] : p.cells()) {
      auto idx = alphabet.index(s);
      if (!idx) {
        ok = false;
        break;
      }
      v.push_back(*idx);
    }
    if (ok) forb.push_back(std::move(v));
  }
  // Edge (s, c) is the window s.c of length k + 1.
  auto decode = [&](long s, std::vector<int>& out) {
    for (long i = k - 1; i >= 0; --i) {
      out[i] = static_cast<int>(s % q);
      s /= q;
    }
  };
  std::vector<char> edge(static_cast<std::size_t>(nstates * q), 0);
  std::vector<int> win(static_cast<std::size_t>(k + 1));
  for (long s = 0; s < nstates; ++s) {
    decode(s, win);
    for (long c = 0; c < q; ++c) {
      win[k] = static_cast<int>(c);
      bool bad = false;
      for (const auto& fw : forb) {
        const long L = static_cast<long>(fw.size());
        for (long i = 0; i + L <= k + 1 && !bad; ++i) {
          bool m = true;
          for (long j = 0; j < L; ++j)
            if (win[i + j] != fw[j]) {
              m = false;
              break;
            }
          bad = m;
        }
        if (bad) break;
      }
      edge[s * q + c] = bad ? 0 : 1;
    }
  }
  auto succ = [&](long s, long c) { return (s * q + c) % nstates; };
  // Keep states lying on a bi-infinite path.
  std::vector<char> alive(static_cast<std::size_t>(nstates), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<long> indeg(static_cast<std::size_t>(nstates), 0), outdeg(static_cast<std::size_t>(nstates), 0);
    for (long s = 0; s < nstates; ++s) {
      if (!alive[s]) continue;
      for (long c = 0; c < q; ++c) {
        long t = succ(s, c);
        if (edge[s * q + c] && alive[t]) {
          ++outdeg[s];
          ++indeg[t];
        }
      }
    }
    for (long s = 0; s < nstates; ++s)
      if (alive[s] && (indeg[s] == 0 || outdeg[s] == 0)) {
        alive[s] = 0;
        changed = true;
      }
  }
  std::vector<char> cur(alive), next(static_cast<std::size_t>(nstates));
  for (const auto& [pt, sym] : w.cells()) {
    auto idx = alphabet.index(sym);
    if (!idx) throw std::invalid_argument("symbol not in alphabet: " + sym);
    std::fill(next.begin(), next.end(), 0);
    bool any = false;
    for (long s = 0; s < nstates; ++s) {
      if (!cur[s] || !edge[s * q + *idx]) continue;
      long t = succ(s, *idx);
      if (alive[t]) {
        next[t] = 1;
        any = true;
      }
    }
    if (!any) return false;
    cur.swap(next);
  }
  for (long s = 0; s < nstates; ++s)
    if (cur[s]) return true;
  return false;
}

std::vector<std::string> locally_admissible_words(const Alphabet& alphabet, const ForbiddenSet& f, long n) {
  std::vector<std::string> out;
  detail::BoxSearch box(n, 1, f, alphabet);
  box.run(UINT64_MAX, [&](const std::vector<int>& g) {
    std::string s;
    for (int c : g) s += alphabet.symbol(static_cast<std::size_t>(c));
    out.push_back(std::move(s));
    return true;
  });
  return out;
}

}  // namespace freezelab::core
