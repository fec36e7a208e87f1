#include <fstream>
#include <sstream>

#include "freezelab/errors.hpp"
#include "freezelab/turing.hpp"

namespace freezelab::turing {

namespace {

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream ss(s);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

}  // namespace

Machine parse_machine(std::istream& in) {
  Machine m;
  std::string line;
  long lineno = 0;
  auto fail = [&](const std::string& msg) { throw ParseError("machine line " + std::to_string(lineno) + ": " + msg); };
  auto single = [&](const std::vector<std::string>& v) {
    if (v.size() != 1) fail("expected one value");
    return v[0];
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) fail("missing ':'");
    std::string key = line.substr(first, colon - first);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    auto vals = tokens(line.substr(colon + 1));
    if (key == "states") {
      m.states = vals;
    } else if (key == "input") {
      m.input_alphabet = vals;
    } else if (key == "tape") {
      m.tape_alphabet = vals;
    } else if (key == "blank") {
      m.blank = single(vals);
    } else if (key == "start") {
      m.start = single(vals);
    } else if (key == "accept") {
      m.accept = single(vals);
    } else if (key == "reject") {
      m.reject = single(vals);
    } else if (key == "print") {
      if (vals.size() != 2) fail("print needs a state and a symbol");
      m.print_events.insert({vals[0], vals[1]});
    } else if (key == "delta") {
      if (vals.size() != 6 || vals[2] != "->") fail("delta must read 'q s -> q' s' +1|-1'");
      Move mv;
      if (vals[5] == "+1" || vals[5] == "1")
        mv = Move::Right;
      else if (vals[5] == "-1")
        mv = Move::Left;
      else
        fail("move must be +1 or -1");
      if (!m.delta.emplace(std::make_pair(vals[0], vals[1]), Transition{vals[3], vals[4], mv}).second)
        fail("duplicate transition for (" + vals[0] + "," + vals[1] + ")");
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  try {
    m.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return m;
}

Machine read_machine_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_machine(in);
}

std::string format_machine(const Machine& m) {
  std::ostringstream os;
  auto list = [&](const char* k, const std::vector<std::string>& v) {
    os << k << ":";
    for (const auto& s : v) os << " " << s;
    os << "\n";
  };
  list("states", m.states);
  list("input", m.input_alphabet);
  list("tape", m.tape_alphabet);
  os << "blank: " << m.blank << "\nstart: " << m.start << "\naccept: " << m.accept << "\nreject: " << m.reject << "\n";
  for (const auto& [q, s] : m.print_events) os << "print: " << q << " " << s << "\n";
  for (const auto& [k, t] : m.delta)
    os << "delta: " << k.first << " " << k.second << " -> " << t.next << " " << t.write << " "
       << (t.move == Move::Right ? "+1" : "-1") << "\n";
  return os.str();
}

}  // namespace freezelab::turing
