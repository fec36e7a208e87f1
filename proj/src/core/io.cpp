#include <fstream>
#include <regex>
#include <sstream>

#include "freezelab/errors.hpp"
#include "freezelab/io.hpp"

namespace freezelab::core {

namespace {

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool skip(const std::string& line) {
  std::string t = trim(line);
  return t.empty() || t[0] == '#';
}

}  // namespace

std::vector<Pattern> parse_patterns(std::istream& in) {
  static const std::regex header(R"(rows\s*=\s*(\d+)\s*;\s*cols\s*=\s*(\d+)\s*;?)");
  std::vector<Pattern> out;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip(line)) continue;
    std::string t = trim(line);
    std::smatch m;
    if (std::regex_match(t, m, header)) {
      long r = std::stol(m[1]), c = std::stol(m[2]);
      std::vector<std::vector<Symbol>> rows;
      while (static_cast<long>(rows.size()) < r) {
        if (!std::getline(in, line)) throw ParseError("unexpected end of file in 2D pattern");
        ++lineno;
        if (skip(line)) continue;
        std::istringstream ss(line);
        std::vector<Symbol> row;
        for (std::string tok; ss >> tok;) row.push_back(tok);
        if (static_cast<long>(row.size()) != c)
          throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(c) + " symbols");
        rows.push_back(std::move(row));
      }
      out.push_back(Pattern::from_rows(rows));
    } else {
      out.push_back(Pattern::word(t));
    }
  }
  return out;
}

std::vector<Pattern> read_patterns_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_patterns(in);
}

std::string format_pattern(const Pattern& p) {
  if (p.dimension() == 1) return p.to_word();
  std::ostringstream os;
  os << "rows=" << p.height() << ";cols=" << p.width() << ";";
  for (const auto& row : p.to_rows()) {
    os << "\n";
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
  }
  return os.str();
}

}  // namespace freezelab::core
