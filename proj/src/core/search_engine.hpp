#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "freezelab/core.hpp"

namespace freezelab::core::detail {

// Backtracking fill of a W x H box (H == 1 in 1D) avoiding every placement of
// the forbidden patterns. Cells are indexed y * W + x, zero based.
class BoxSearch {
 public:
  BoxSearch(long width, long height, const ForbiddenSet& f, const Alphabet& alphabet);

  void fix(long x, long y, int symbol);

  // Stops at the first solution unless on_solution returns true.
  Admissibility run(std::uint64_t budget, const std::function<bool(const std::vector<int>&)>& on_solution = {});

  long width() const { return w_; }
  long height() const { return h_; }

 private:
  struct Compiled {
    long pw, ph;
    std::vector<long> dx, dy;
    std::vector<int> sym;
  };

  long w_, h_;
  int q_;
  std::vector<Compiled> pats_;
  std::vector<int> grid_;
};

}  // namespace freezelab::core::detail
