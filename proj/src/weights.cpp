#include "carterlink/weights.hpp"

#include <algorithm>
#include <stdexcept>

namespace carterlink {

std::set<std::vector<int>> fundamental_orbit(const CarterId& dynkin, int i) {
  if (!dynkin.is_dynkin()) throw std::invalid_argument("fundamental_orbit: Dynkin ids only");
  const CarterDiagram& d = diagram(dynkin);
  auto gram = d.gram();
  std::vector<int> seed(d.size(), 0);
  seed[i] = 1;
  std::set<std::vector<int>> orbit{seed};
  std::vector<std::vector<int>> frontier{seed};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& v : frontier)
      for (int t = 0; t < d.size(); ++t) {
        auto w = dual_reflect_unbounded(v, t, gram);
        if (orbit.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return orbit;
}

std::vector<int> dominant_representative(const std::set<std::vector<int>>& orbit) {
  const std::vector<int>* dom = nullptr;
  for (const auto& v : orbit) {
    if (std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; })) {
      if (dom) throw std::runtime_error("orbit has multiple dominant members");
      dom = &v;
    }
  }
  if (!dom) throw std::runtime_error("orbit has no dominant member");
  int nonzero = 0;
  for (int x : *dom) nonzero += x != 0;
  if (nonzero != 1) throw std::runtime_error("dominant member is not a unit vector");
  return *dom;
}

CoincidenceReport coincidence_check(const CarterId& dynkin) {
  CoincidenceReport rep;
  const CarterDiagram& d = diagram(dynkin);
  const LinkageSystem& sys = linkage_system(dynkin);

  std::vector<std::set<std::vector<int>>> orbits(d.size());
  for (int i = 0; i < d.size(); ++i) orbits[i] = fundamental_orbit(dynkin, i);

  for (size_t pi = 0; pi < sys.parts.size(); ++pi) {
    std::set<std::vector<int>> part_set;
    for (int m : sys.parts[pi].members) part_set.insert(sys.vertices[m]);
    int match = -1;
    for (int i = 0; i < d.size(); ++i) {
      if (orbits[i] == part_set) {
        if (match >= 0) {
          rep.ok = false;
          rep.detail = "part matches two fundamental orbits";
          return rep;
        }
        match = i;
      }
    }
    if (match < 0) {
      rep.ok = false;
      rep.detail = "part " + std::to_string(pi) + " of " + dynkin.name() +
                   " matches no fundamental orbit";
      return rep;
    }
    rep.matches.push_back({pi, match, part_set.size()});
  }
  return rep;
}

} // namespace carterlink
