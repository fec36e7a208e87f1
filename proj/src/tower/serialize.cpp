#include <json.hpp>

#include "freezelab/tower.hpp"

namespace freezelab::tower {

std::string to_json(const Tower& t, int indent) {
  nlohmann::json j;
  j["mode"] = t.params().mode == Mode::Toy ? "toy" : "paper-schedule";
  j["depth"] = t.depth();
  j["warnings"] = t.warnings();
  auto& levels = j["levels"] = nlohmann::json::array();
  for (const auto& L : t.levels()) {
    nlohmann::json l;
    l["k"] = L.k;
    l["N"] = L.N;
    l["Nprime"] = L.Nprime;
    l["ell"] = L.ell;
    l["ell_prime"] = L.ell_prime;
    l["words"] = {{"a", L.a}, {"b", L.b}, {"1", L.one}, {"2", L.two}};
    if (L.k >= 1) {
      l["primed"] = {{"a_prime", L.a_prime}, {"b_prime", L.b_prime}};
      if (!L.a_second.empty()) l["primed"]["a_second"] = L.a_second;
      if (!L.b_second.empty()) l["primed"]["b_second"] = L.b_second;
      l["freq"]["A_prime"] = to_string(L.fA_prime);
      l["freq"]["B_prime"] = to_string(L.fB_prime);
    }
    l["rho_A"] = L.rho_A.str();
    l["rho_B"] = L.rho_B.str();
    l["freq"]["A"] = to_string(L.fA);
    l["freq"]["B"] = to_string(L.fB);
    levels.push_back(std::move(l));
  }
  return j.dump(indent);
}

std::string to_json(const std::vector<ScheduleLevel>& s, int indent) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& l : s) {
    j.push_back({{"k", l.k},
                 {"Nprime", l.Nprime.str()},
                 {"ell_prime", l.ell_prime.str()},
                 {"beta", l.beta.str()},
                 {"N", l.N.str()},
                 {"ell", l.ell.str()},
                 {"rho_A", l.rho_A.str()},
                 {"rho_B", l.rho_B.str()}});
  }
  return j.dump(indent);
}

}  // namespace freezelab::tower
