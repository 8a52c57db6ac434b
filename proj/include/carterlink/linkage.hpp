#pragma once

#include "carterlink/carter.hpp"
#include "carterlink/matrix.hpp"

#include <array>
#include <map>
#include <set>
#include <vector>

namespace carterlink {

// Length-l vector of labels in {-1, 0, +1}, bicolored coordinate order
// (alpha_1..alpha_k, beta_1..beta_h).
using Label = std::vector<int>;

bool is_zero(const Label& v);
Label negate_label(const Label& v);

// Coordinate i = (gamma, root_i). Throws when a product leaves {-1,0,1}.
Label label_vector(const Coord& gamma, const AssociatedSubset& s);

// Strict inequality B^vee(v) < 2 (exact rational arithmetic).
bool is_linkage_candidate(const Label& v, const RatMatrix& binv);

// s*_t: negate coordinate t, adjust neighbours by +-v[t] with the edge sign
// (add across solid edges, subtract across dotted ones). Throws when a
// resulting entry leaves {-1,0,1}.
Label dual_reflect(const Label& v, int vertex, const CarterDiagram& d);

// Same reflection without the {-1,0,1} range restriction (weight orbits).
std::vector<int> dual_reflect_unbounded(const std::vector<int>& v, int vertex,
                                        const std::vector<std::vector<int>>& gram);

// All nonzero sign vectors satisfying the inequality.
std::vector<Label> inequality_solutions(const CarterDiagram& d);

// gamma^nabla(8) solutions for loctet type L_{ij}: +1 at the complementary
// alpha position, 0 at alpha_i, alpha_j and beta_1, remaining coordinates free.
std::vector<Label> solve_gamma8(const CarterDiagram& d, int i, int j);

// Solutions with alpha_1 = alpha_2 = alpha_3 = 0 and beta_1 = 0.
std::vector<Label> solve_beta_unicolored(const CarterDiagram& d);

struct Loctet {
  int i = 0, j = 0;             // type L_{ij}, 1-based
  std::array<Label, 8> cells;   // gamma(1..8) in the spindle order
  std::string type_name() const { return "L" + std::to_string(i) + std::to_string(j); }
};

struct LinkagePart {
  std::vector<int> members; // vertex indices into LinkageSystem::vertices
  Rat p;                    // constant value of B^vee on the part
  char type = '?';          // 'A', 'D', 'E' extension tag
};

struct LinkageSystem {
  CarterId diagram;
  std::vector<Label> vertices; // sorted
  struct Edge {
    int u, v;
    int vertex; // reflecting diagram vertex
  };
  std::vector<Edge> edges;
  std::vector<LinkagePart> parts;

  // reconciliation of the two routes
  std::vector<Label> inequality_only; // inequality solutions not realized
  std::vector<Label> realized_only;   // realized vectors missing the inequality (must stay empty)
  int zero_vectors_excluded = 0;
  std::map<std::string, std::set<Label>> per_extension; // "A8" -> stratum labels

  int index_of(const Label& v) const;
};

// Orbit/stratum construction: vertices seeded from the Dynkin-extension
// strata, closed under dual reflections, cross-checked against the
// inequality solution set. jobs > 1 parallelizes the candidate scan.
LinkageSystem enumerate_system(const CarterDiagram& d, int jobs = 1);

// Memoized per-diagram systems (enumeration is deterministic).
const LinkageSystem& linkage_system(const CarterId& id, int jobs = 1);

struct LoctetDecomposition {
  std::vector<Loctet> loctets;
  std::vector<Label> beta_unicolored;
};

// Partition of a branch-point system into loctets plus beta-unicolored
// leftovers. Throws if some vector violates the decomposition.
LoctetDecomposition detect_loctets(const CarterDiagram& d, const LinkageSystem& sys);

} // namespace carterlink
