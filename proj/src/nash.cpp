#include "hiersl/sli.hpp"

namespace hiersl {

Sli build_nash_formula(const std::vector<std::string>& agents, const std::vector<Sli>& goals,
                       const std::vector<std::string>& obs,
                       const std::vector<std::string>& deviation_obs) {
  const std::size_t n = agents.size();
  if (goals.size() != n || obs.size() != n || deviation_obs.size() != n)
    throw Error("Nash formula needs one goal and two observations per agent");
  if (n == 0) throw Error("Nash formula needs at least one agent");
  auto x = [](std::size_t i) { return "x" + std::to_string(i + 1); };
  auto y = [](std::size_t i) { return "y" + std::to_string(i + 1); };
  Sli body;
  for (std::size_t i = 0; i < n; ++i) {
    Sli dev = sli_exists(y(i), deviation_obs[i], sli_bind(agents[i], y(i), goals[i]));
    Sli c = sli_implies(dev, goals[i]);
    body = body ? sli_and(body, c) : c;
  }
  for (std::size_t i = n; i-- > 0;) body = sli_bind(agents[i], x(i), body);
  for (std::size_t i = n; i-- > 0;) body = sli_exists(x(i), obs[i], body);
  return body;
}

}  // namespace hiersl
