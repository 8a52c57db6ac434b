#pragma once

#include "carterlink/linkage.hpp"

#include <set>
#include <vector>

namespace carterlink {

// Orbit of the unit label vector e_i under the dual reflections of the
// Cartan matrix (closure in label space; entries are unbounded integers).
std::set<std::vector<int>> fundamental_orbit(const CarterId& dynkin, int i);

// The unique member with all labels >= 0 (must be a unit vector for
// fundamental orbits). Throws if absent or not unique.
std::vector<int> dominant_representative(const std::set<std::vector<int>>& orbit);

struct CoincidenceEntry {
  size_t part_index = 0;
  int fundamental_index = -1; // 0-based vertex whose orbit equals the part
  size_t size = 0;
};

struct CoincidenceReport {
  bool ok = true;
  std::string detail;
  std::vector<CoincidenceEntry> matches;
};

// Every connected part of L(dynkin) equals the orbit of exactly one unit
// vector; reports the discovered index per part.
CoincidenceReport coincidence_check(const CarterId& dynkin);

} // namespace carterlink
