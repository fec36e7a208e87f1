#pragma once

#include <istream>
#include <string>
#include <vector>

#include "freezelab/core.hpp"

namespace freezelab::core {

// One pattern per line. A 1D pattern is a run of symbols, one per code point.
// A 2D pattern starts with "rows=r;cols=c;" and is followed by r lines of c
// whitespace separated symbols, top row first. Lines starting with '#' are
// comments.
std::vector<Pattern> parse_patterns(std::istream& in);
std::vector<Pattern> read_patterns_file(const std::string& path);
std::string format_pattern(const Pattern& p);

}  // namespace freezelab::core
