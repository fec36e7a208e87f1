#include <sstream>
#include <stdexcept>

#include "freezelab/turing.hpp"

namespace freezelab::turing {

namespace {

// Decider for { a^n b^n : n >= 1 }. Moves into q_a / q_r rewrite the read
// symbol and step right; the direction is irrelevant once halted.
constexpr const char* kAnbnDecider = R"(
states: q0 q1 q2 q3 q4 q5 q6 qa qr
input: a b
tape: a b ♯
blank: ♯
start: q0
accept: qa
reject: qr
delta: q0 a -> q1 ♯ +1
delta: q0 b -> qr b +1
delta: q1 a -> q1 a +1
delta: q1 b -> q2 b +1
delta: q1 ♯ -> qr ♯ +1
delta: q2 b -> q2 b +1
delta: q2 ♯ -> q3 ♯ -1
delta: q2 a -> qr a +1
delta: q3 b -> q4 ♯ -1
delta: q4 b -> q5 b -1
delta: q4 ♯ -> qa ♯ +1
delta: q4 a -> qr a +1
delta: q5 b -> q5 b -1
delta: q5 a -> q6 a -1
delta: q5 ♯ -> qr ♯ +1
delta: q6 a -> q6 a -1
delta: q6 ♯ -> q0 ♯ +1
)";

// Enumerator printing ab, aabb, aaabbb, ... It never halts; qa and qr are
// unreachable placeholders.
constexpr const char* kAnbnEnumerator = R"(
states: q0 qb+ q|| qa+ qb++ qa qr
input: a b
tape: a b ♯ ||
blank: ♯
start: q0
accept: qa
reject: qr
print: q|| ♯
delta: q0 ♯ -> qb+ a +1
delta: qb+ ♯ -> q|| b +1
delta: q|| ♯ -> q|| || -1
delta: q|| b -> q|| b -1
delta: q|| a -> qa+ a +1
delta: qa+ b -> qb++ a +1
delta: qb++ b -> qb++ b +1
delta: qb++ || -> qb+ b +1
)";

}  // namespace

std::vector<std::string> builtin_names() { return {"anbn_dec", "anbn_enum"}; }

Machine builtin_machine(const std::string& name) {
  if (name != "anbn_dec" && name != "anbn_enum") throw std::invalid_argument("unknown built-in machine: " + name);
  std::istringstream in(name == "anbn_dec" ? kAnbnDecider : kAnbnEnumerator);
  return parse_machine(in);
}

}  // namespace freezelab::turing
