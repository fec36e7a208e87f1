#include <algorithm>
#include <stdexcept>

#include "freezelab/turing.hpp"

namespace freezelab::turing {

namespace {

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

}  // namespace

void Machine::validate() const {
  auto fail = [](const std::string& m) { throw std::invalid_argument("invalid machine: " + m); };
  if (!has(states, start)) fail("start state not in Q");
  if (!has(states, accept)) fail("accept state not in Q");
  if (!has(states, reject)) fail("reject state not in Q");
  if (accept == reject) fail("accept and reject coincide");
  if (!has(tape_alphabet, blank)) fail("blank not in tape alphabet");
  for (const auto& a : input_alphabet) {
    if (!has(tape_alphabet, a)) fail("input symbol " + a + " not in tape alphabet");
    if (a == blank) fail("blank in input alphabet");
  }
  for (const auto& [key, t] : delta) {
    if (!has(states, key.first)) fail("unknown state " + key.first);
    if (halting(key.first)) fail("transition out of halting state " + key.first);
    if (!has(tape_alphabet, key.second)) fail("unknown symbol " + key.second);
    if (!has(states, t.next)) fail("unknown state " + t.next);
    if (!has(tape_alphabet, t.write)) fail("unknown symbol " + t.write);
  }
  for (const auto& [q, s] : print_events)
    if (!has(states, q) || !has(tape_alphabet, s)) fail("print event outside Q x T");
}

std::optional<Transition> Machine::transition(const State& q, const Symbol& s) const {
  auto it = delta.find({q, s});
  if (it == delta.end()) return std::nullopt;
  return it->second;
}

std::vector<Rule> Machine::rules() const {
  std::vector<Rule> out;
  for (const auto& [key, t] : delta) out.push_back({key.first, key.second, t});
  return out;
}

Symbol Config::read(long pos, const Symbol& blank) const {
  auto it = tape.find(pos);
  return it == tape.end() ? blank : it->second;
}

Config initial_config(const Machine& m, const std::vector<Symbol>& input) {
  Config c;
  c.state = m.start;
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (std::find(m.input_alphabet.begin(), m.input_alphabet.end(), input[i]) == m.input_alphabet.end())
      throw std::invalid_argument("input symbol not in input alphabet: " + input[i]);
    c.tape[static_cast<long>(i)] = input[i];
  }
  return c;
}

StepResult step(const Machine& m, const Config& c) {
  if (m.halting(c.state)) throw std::invalid_argument("step from a halting state");
  auto t = m.transition(c.state, c.read(c.head, m.blank));
  if (!t) return {c, StepStatus::Stuck};
  StepResult r{c, StepStatus::Running};
  if (t->write == m.blank)
    r.config.tape.erase(c.head);
  else
    r.config.tape[c.head] = t->write;
  r.config.head += static_cast<int>(t->move);
  r.config.state = t->next;
  r.config.steps += 1;
  if (t->next == m.accept) r.status = StepStatus::Accept;
  if (t->next == m.reject) r.status = StepStatus::Reject;
  return r;
}

std::string to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Accept:
      return "Accept";
    case RunStatus::Reject:
      return "Reject";
    case RunStatus::Stuck:
      return "Stuck";
    case RunStatus::Timeout:
      return "Timeout";
  }
  return "?";
}

RunResult run_bounded(const Machine& m, const std::vector<Symbol>& input, long fuel) {
  Config c = initial_config(m, input);
  if (c.state == m.accept) return {RunStatus::Accept, c};
  if (c.state == m.reject) return {RunStatus::Reject, c};
  while (c.steps < fuel) {
    auto r = step(m, c);
    switch (r.status) {
      case StepStatus::Accept:
        return {RunStatus::Accept, r.config};
      case StepStatus::Reject:
        return {RunStatus::Reject, r.config};
      case StepStatus::Stuck:
        return {RunStatus::Stuck, r.config};
      case StepStatus::Running:
        c = std::move(r.config);
    }
  }
  return {RunStatus::Timeout, c};
}

Enumeration enumerate(const Machine& m, long fuel) {
  Enumeration out;
  Config c = initial_config(m, {});
  auto emit = [&] {
    auto nonblank = [&](long p) { return c.tape.count(p) != 0; };
    long lo, hi;
    if (nonblank(c.head)) {
      lo = hi = c.head;
    } else if (nonblank(c.head - 1)) {
      lo = hi = c.head - 1;
    } else if (nonblank(c.head + 1)) {
      lo = hi = c.head + 1;
    } else {
      out.words.emplace_back();
      return;
    }
    while (nonblank(lo - 1)) --lo;
    while (nonblank(hi + 1)) ++hi;
    std::string w;
    for (long p = lo; p <= hi; ++p) {
      const auto& s = c.tape.at(p);
      if (std::find(m.input_alphabet.begin(), m.input_alphabet.end(), s) != m.input_alphabet.end()) w += s;
    }
    out.words.push_back(std::move(w));
  };
  while (!m.halting(c.state)) {
    if (c.steps >= fuel) {
      out.fuel_exhausted = true;
      break;
    }
    auto r = step(m, c);
    if (r.status == StepStatus::Stuck) break;
    c = std::move(r.config);
    if (m.print_events.count({c.state, c.read(c.head, m.blank)})) emit();
  }
  out.steps = c.steps;
  return out;
}

}  // namespace freezelab::turing
