#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace freezelab::core {

using Symbol = std::string;

// x is the horizontal coordinate, y the vertical one. One-dimensional
// patterns keep y == 0.
struct Point {
  long x = 0;
  long y = 0;
  auto operator<=>(const Point&) const = default;
  Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
};

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Symbol> symbols);
  // Splits a string into one symbol per UTF-8 code point.
  static Alphabet from_chars(std::string_view chars);

  std::size_t size() const { return symbols_.size(); }
  const Symbol& symbol(std::size_t i) const { return symbols_.at(i); }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::optional<int> index(const Symbol& s) const;
  bool contains(const Symbol& s) const { return index_.count(s) != 0; }

 private:
  std::vector<Symbol> symbols_;
  std::map<Symbol, int> index_;
};

// Splits UTF-8 text into code points.
std::vector<Symbol> split_code_points(std::string_view text);

class Pattern {
 public:
  Pattern() = default;
  Pattern(int dimension, std::map<Point, Symbol> cells);

  // 1D word on [start, start + n - 1], one symbol per code point.
  static Pattern word(std::string_view text, long start = 1);
  static Pattern word(const std::vector<Symbol>& symbols, long start = 1);
  // 2D block on [1, cols] x [1, rows]; rows are given top row first.
  static Pattern from_rows(const std::vector<std::vector<Symbol>>& rows_top_first);

  int dimension() const { return dim_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  const std::map<Point, Symbol>& cells() const { return cells_; }
  std::set<Point> support() const;
  std::optional<Symbol> at(const Point& p) const;

  Point min_corner() const;
  Point max_corner() const;
  long width() const;
  long height() const;
  // True when the support is a full axis-aligned box.
  bool is_box() const;

  // Support S - u with w_v = p_{v+u}.
  Pattern shifted(const Point& u) const;
  // Translate so the minimum corner becomes (1,1) (or 1 in 1D).
  Pattern normalized() const;
  Pattern restricted(const Point& lo, const Point& hi) const;
  Pattern with(const Point& p, const Symbol& s) const;

  // Concatenated symbols in x order (1D only).
  std::string to_word() const;
  // Rows top first (2D box only).
  std::vector<std::vector<Symbol>> to_rows() const;

  bool operator==(const Pattern& o) const = default;
  bool operator<(const Pattern& o) const;

 private:
  int dim_ = 1;
  std::map<Point, Symbol> cells_;
};

// Offsets t such that p placed at supp(p) + t agrees with q.
std::set<Point> occurrences(const Pattern& p, const Pattern& q);

class ForbiddenSet {
 public:
  ForbiddenSet() = default;
  ForbiddenSet(int dimension, std::vector<Pattern> patterns);
  static ForbiddenSet from_words(const std::vector<std::string>& words);

  int dimension() const { return dim_; }
  const std::vector<Pattern>& patterns() const { return patterns_; }
  bool empty() const { return patterns_.empty(); }
  // Largest extent along any axis.
  long max_extent() const { return max_extent_; }

 private:
  int dim_ = 1;
  std::vector<Pattern> patterns_;
  long max_extent_ = 0;
};

// Yields every forbidden pattern whose extent is at most the argument.
using ForbiddenGenerator = std::function<std::vector<Pattern>(long)>;

struct SubshiftSpec {
  Alphabet alphabet;
  int dimension = 1;
  std::variant<ForbiddenSet, ForbiddenGenerator> forbidden;

  // Forbidden patterns with extent at most max_extent.
  ForbiddenSet truncated(long max_extent) const;
};

bool locally_admissible(const Pattern& w, const ForbiddenSet& f);

enum class Admissibility { Admissible, NotAdmissible, BudgetExceeded };

struct SearchOptions {
  std::uint64_t node_budget = 10'000'000;
};

// Searches for a locally admissible extension of w to the box of side 2R
// (length 2R in 1D) with w placed at the centre. Requires R >= extent of w.
Admissibility globally_admissible_within(const Pattern& w, const ForbiddenSet& f,
                                         const Alphabet& alphabet, long R,
                                         const SearchOptions& opts = {});

// Exact global admissibility in 1D, via a padding long enough to force a
// cycle in the de Bruijn graph on both sides.
bool globally_admissible_1d(const Pattern& w, const ForbiddenSet& f, const Alphabet& alphabet);

// Offset of the central block of side n inside a box of side 2R.
long central_offset(long n, long R);

// Patterns of side n admitted by globally_admissible_within at radius R.
std::set<Pattern> language(const SubshiftSpec& spec, long n, long R, const SearchOptions& opts = {});
// Rectangular variant; 2D only.
std::set<Pattern> language_rect(const SubshiftSpec& spec, long cols, long rows, long R,
                                 const SearchOptions& opts = {});

// Exact 1D language of length n.
std::set<std::string> language_1d(const Alphabet& alphabet, const ForbiddenSet& f, long n);

// All locally admissible words of length n (1D).
std::vector<std::string> locally_admissible_words(const Alphabet& alphabet, const ForbiddenSet& f,
                                                  long n);

// Dictionary of square words of a common side.
class Dictionary {
 public:
  Dictionary() = default;
  explicit Dictionary(std::vector<Pattern> members);
  static Dictionary from_words(const std::vector<std::string>& words);

  int dimension() const { return dim_; }
  long side() const { return side_; }
  const std::vector<Pattern>& members() const { return members_; }

 private:
  int dim_ = 1;
  long side_ = 0;
  std::vector<Pattern> members_;
};

// Length-n subwords of w1 w2 for w1, w2 in the dictionary (1 <= n <= 2 side).
std::set<std::string> concat_language_words(const std::vector<std::string>& words, long n);
// Same for patterns; in 2D, n x n subpatterns of 2 x 2 block mosaics.
std::set<Pattern> concat_language(const Dictionary& dict, long n);

struct ReconstructionOptions {
  long r_max = 16;
  // 2D only: radius used to certify central blocks.
  long certify_radius = 0;
  SearchOptions search;
};

// Smallest R >= n such that every locally admissible pattern of side 2R has
// a globally admissible central block of side n. nullopt if none <= r_max.
std::optional<long> reconstruction_radius(const Alphabet& alphabet, const ForbiddenSet& f, long n,
                                          const ReconstructionOptions& opts = {});

}  // namespace freezelab::core
