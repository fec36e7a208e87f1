#include <doctest.h>

#include <random>
#include <sstream>

#include "freezelab/core.hpp"
#include "freezelab/io.hpp"

using namespace freezelab::core;

namespace {

std::vector<std::string> all_words(const std::string& alpha, long n) {
  std::vector<std::string> out{""};
  for (long i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& w : out)
      for (char c : alpha) next.push_back(w + c);
    out.swap(next);
  }
  return out;
}

bool naive_local(const std::string& w, const std::vector<std::string>& F) {
  for (const auto& f : F)
    if (w.find(f) != std::string::npos) return false;
  return true;
}

// Extends w by brute force on both sides; pad exceeds the number of de Bruijn
// states, so a surviving extension contains a cycle on each side.
bool naive_global(const std::string& w, const std::string& alpha, const std::vector<std::string>& F, long pad) {
  if (!naive_local(w, F)) return false;
  std::vector<std::string> left{w};
  for (long i = 0; i < pad; ++i) {
    std::vector<std::string> next;
    for (const auto& x : left)
      for (char c : alpha)
        if (naive_local(c + x, F)) next.push_back(c + x);
    left.swap(next);
    if (left.empty()) return false;
  }
  for (const auto& x : left) {
    std::vector<std::string> cur{x};
    for (long i = 0; i < pad && !cur.empty(); ++i) {
      std::vector<std::string> next;
      for (const auto& y : cur)
        for (char c : alpha)
          if (naive_local(y + c, F)) next.push_back(y + c);
      cur.swap(next);
    }
    if (!cur.empty()) return true;
  }
  return false;
}

long naive_radius(const std::string& alpha, const std::vector<std::string>& F, long n, long pad, long rmax) {
  for (long R = n; R <= rmax; ++R) {
    bool ok = true;
    const long t = (2 * R - n) / 2;
    for (const auto& w : all_words(alpha, 2 * R))
      if (naive_local(w, F) && !naive_global(w.substr(static_cast<std::size_t>(t), static_cast<std::size_t>(n)), alpha, F, pad)) {
        ok = false;
        break;
      }
    if (ok) return R;
  }
  return -1;
}

std::set<std::string> words_of(const std::set<Pattern>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(p.to_word());
  return out;
}

}  // namespace

TEST_CASE("alphabet splits code points") {
  auto a = Alphabet::from_chars("0♯1");
  CHECK(a.size() == 3);
  CHECK(a.index("♯") == 1);
  CHECK_FALSE(a.contains("2"));
}

TEST_CASE("shift composes additively") {
  Pattern p = Pattern::from_rows({{"0", "1", "2"}, {"2", "1", "0"}});
  for (long ux = -2; ux <= 2; ++ux)
    for (long vy = -2; vy <= 2; ++vy) {
      Point u{ux, 1}, v{1, vy};
      CHECK(p.shifted(u).shifted(v) == p.shifted(u + v));
    }
  CHECK(p.shifted({3, 0}).at({-2, 1}) == p.at({1, 1}));
}

TEST_CASE("occurrences") {
  CHECK(occurrences(Pattern::word("00"), Pattern::word("0101")).empty());
  CHECK(occurrences(Pattern::word("01"), Pattern::word("0101")) == std::set<Point>{{0, 0}, {2, 0}});
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::string p, q;
    for (int i = 0; i < 3; ++i) p += static_cast<char>('0' + bit(rng));
    for (int i = 0; i < 10; ++i) q += static_cast<char>('0' + bit(rng));
    std::set<Point> naive;
    for (std::size_t i = 0; i + 3 <= q.size(); ++i)
      if (q.compare(i, 3, p) == 0) naive.insert({static_cast<long>(i), 0});
    CHECK(occurrences(Pattern::word(p), Pattern::word(q)) == naive);
  }
}

TEST_CASE("local admissibility") {
  auto F = ForbiddenSet::from_words({"00"});
  CHECK(locally_admissible(Pattern::word("0101"), F));
  CHECK_FALSE(locally_admissible(Pattern::word("1001"), F));
  std::vector<std::string> Fw{"011", "10"};
  auto F2 = ForbiddenSet::from_words(Fw);
  for (const auto& w : all_words("01", 6)) CHECK(locally_admissible(Pattern::word(w), F2) == naive_local(w, Fw));
  // adding a pattern never turns false into true
  auto F3 = ForbiddenSet::from_words({"011", "10", "111"});
  for (const auto& w : all_words("01", 6))
    if (!locally_admissible(Pattern::word(w), F2)) CHECK_FALSE(locally_admissible(Pattern::word(w), F3));
}

TEST_CASE("2D local admissibility counts vertical dominoes") {
  Pattern dom = Pattern::from_rows({{"0"}, {"1"}});
  ForbiddenSet F(2, {dom});
  CHECK(locally_admissible(Pattern::from_rows({{"1", "1"}, {"0", "0"}}), F));
  CHECK_FALSE(locally_admissible(Pattern::from_rows({{"0", "1"}, {"1", "1"}}), F));
}

TEST_CASE("globally admissible within a radius") {
  auto a = Alphabet::from_chars("01");
  auto F = ForbiddenSet::from_words({"11"});
  for (long n = 1; n <= 8; ++n)
    for (const auto& w : all_words("01", n))
      if (naive_local(w, {"11"})) CHECK(globally_admissible_within(Pattern::word(w), F, a, n) == Admissibility::Admissible);
  CHECK(globally_admissible_within(Pattern::word("11"), F, a, 2) == Admissibility::NotAdmissible);
  CHECK(globally_admissible_within(Pattern::word("0110"), ForbiddenSet{}, a, 4) == Admissibility::Admissible);

  SearchOptions tiny;
  tiny.node_budget = 3;
  auto dead = ForbiddenSet::from_words({"10", "11"});
  CHECK(globally_admissible_within(Pattern::word("0"), dead, a, 20, tiny) == Admissibility::BudgetExceeded);
  CHECK_THROWS(globally_admissible_within(Pattern::word("0101"), F, a, 2));
}

TEST_CASE("global admissibility implies local admissibility") {
  auto a = Alphabet::from_chars("012");
  std::vector<std::string> Fw{"12", "11", "10", "020"};
  auto F = ForbiddenSet::from_words(Fw);
  for (long n = 1; n <= 4; ++n)
    for (const auto& w : all_words("012", n)) {
      auto r = globally_admissible_within(Pattern::word(w), F, a, n + 2);
      if (r == Admissibility::Admissible) CHECK(naive_local(w, Fw));
    }
}

TEST_CASE("exact 1D admissibility against padded brute force") {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases{
      {"01", {"11"}}, {"012", {"12", "11", "10"}}, {"01", {"0110", "111", "000"}}, {"012", {"00", "21"}}};
  for (const auto& [alpha, Fw] : cases) {
    auto F = ForbiddenSet::from_words(Fw);
    auto a = Alphabet::from_chars(alpha);
    for (long n = 1; n <= 4; ++n)
      for (const auto& w : all_words(alpha, n)) CHECK(globally_admissible_1d(Pattern::word(w), F, a) == naive_global(w, alpha, Fw, 10));
  }
}

TEST_CASE("languages") {
  SubshiftSpec golden{Alphabet::from_chars("01"), 1, ForbiddenSet::from_words({"11"})};
  const std::size_t fib[] = {2, 3, 5, 8};
  for (long n = 1; n <= 4; ++n) CHECK(language(golden, n, n).size() == fib[n - 1]);

  SubshiftSpec full{Alphabet::from_chars("01"), 1, ForbiddenSet{}};
  for (long n = 1; n <= 6; ++n) CHECK(language(full, n, n).size() == (std::size_t{1} << n));

  SubshiftSpec s3{Alphabet::from_chars("012"), 1, ForbiddenSet::from_words({"00"})};
  auto L2 = words_of(language(s3, 2, 2));
  CHECK(L2.size() == 8);
  CHECK_FALSE(L2.count("00"));
  CHECK(language_1d(s3.alphabet, ForbiddenSet::from_words({"00"}), 2) == L2);
}

TEST_CASE("language is non-increasing in R and closed under subwords") {
  SubshiftSpec s{Alphabet::from_chars("012"), 1, ForbiddenSet::from_words({"12", "11", "10", "020"})};
  for (long n = 1; n <= 3; ++n) {
    auto small = words_of(language(s, n, n)), large = words_of(language(s, n, n + 3));
    for (const auto& w : large) CHECK(small.count(w));
  }
  auto L3 = words_of(language(s, 3, 5)), L2 = words_of(language(s, 2, 5));
  for (const auto& w : L3) {
    CHECK(L2.count(w.substr(0, 2)));
    CHECK(L2.count(w.substr(1, 2)));
  }
}

TEST_CASE("generated forbidden sets are truncated by extent") {
  SubshiftSpec s{Alphabet::from_chars("01"), 1, ForbiddenGenerator([](long m) {
                   std::vector<Pattern> out;
                   for (long j = 1; j + 2 <= m; j += 2) out.push_back(Pattern::word("1" + std::string(static_cast<std::size_t>(j), '0') + "1"));
                   return out;
                 })};
  CHECK(s.truncated(5).patterns().size() == 2);
  auto L = words_of(language(s, 4, 4));
  CHECK_FALSE(L.count("1010"));
  CHECK(L.count("1001"));
}

TEST_CASE("2D language of the vertical-alignment SFT") {
  ForbiddenSet V(2, {Pattern::from_rows({{"0"}, {"1"}}), Pattern::from_rows({{"1"}, {"0"}})});
  SubshiftSpec s{Alphabet::from_chars("01"), 2, V};
  CHECK(language(s, 2, 2).size() == 4);
  CHECK(language_rect(s, 3, 2, 3).size() == 8);
}

TEST_CASE("concatenation languages") {
  auto got = concat_language_words({"01", "11", "02", "22"}, 2);
  CHECK(got == std::set<std::string>{"01", "10", "11", "02", "12", "22", "20", "21"});
  CHECK(concat_language_words({"ab"}, 2) == std::set<std::string>{"ab", "ba"});
  CHECK_THROWS(concat_language_words({"ab"}, 5));

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> sym(0, 2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::string> dict;
    for (int i = 0; i < 4; ++i) {
      std::string w;
      for (int j = 0; j < 4; ++j) w += static_cast<char>('0' + sym(rng));
      dict.push_back(w);
    }
    for (long n = 1; n <= 8; ++n) {
      std::set<std::string> naive;
      for (const auto& u : dict)
        for (const auto& v : dict) {
          std::string c = u + v;
          for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= c.size(); ++i) naive.insert(c.substr(i, static_cast<std::size_t>(n)));
        }
      CHECK(concat_language_words(dict, n) == naive);
      CHECK(words_of(concat_language(Dictionary::from_words(dict), n)) == naive);
    }
    std::set<std::string> full;
    for (const auto& u : dict)
      for (const auto& v : dict) full.insert(u + v);
    CHECK(concat_language_words(dict, 8) == full);
  }
}

TEST_CASE("2D concatenation language of a single block") {
  Dictionary d({Pattern::from_rows({{"0", "1"}, {"1", "0"}})});
  auto L = concat_language(d, 2);
  // a 2-periodic checkerboard has two 2x2 windows
  CHECK(L.size() == 2);
}

TEST_CASE("reconstruction radius") {
  auto a = Alphabet::from_chars("01");
  for (long n = 1; n <= 6; ++n) CHECK(reconstruction_radius(a, ForbiddenSet::from_words({"11"}), n) == n);
  for (long n = 1; n <= 4; ++n) CHECK(reconstruction_radius(a, ForbiddenSet{}, n) == n);

  const std::vector<std::pair<std::string, std::vector<std::string>>> cases{
      {"01", {"101", "111"}}, {"01", {"0110", "111", "000"}}, {"012", {"12", "11", "10"}}};
  for (const auto& [alpha, Fw] : cases) {
    const long nmax = alpha.size() == 2 ? 5 : 3;
    for (long n = 1; n <= nmax; ++n) {
      ReconstructionOptions o;
      o.r_max = alpha.size() == 2 ? 7 : 4;
      auto got = reconstruction_radius(Alphabet::from_chars(alpha), ForbiddenSet::from_words(Fw), n, o);
      const long want = naive_radius(alpha, Fw, n, 10, o.r_max);
      CHECK(got.value_or(-1) == want);
    }
  }
}

TEST_CASE("pattern file round trip") {
  std::istringstream in("# comment\n0110\nrows=2;cols=3;\na b c\nd e f\n");
  auto ps = parse_patterns(in);
  REQUIRE(ps.size() == 2);
  CHECK(ps[0].to_word() == "0110");
  CHECK(ps[1].to_rows() == std::vector<std::vector<Symbol>>{{"a", "b", "c"}, {"d", "e", "f"}});
  std::istringstream again(format_pattern(ps[1]) + "\n");
  CHECK(parse_patterns(again).front() == ps[1]);
  std::istringstream bad("rows=2;cols=3;\na b\n");
  CHECK_THROWS(parse_patterns(bad));
}
