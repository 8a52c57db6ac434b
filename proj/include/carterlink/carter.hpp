#pragma once

#include "carterlink/root_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace carterlink {

enum class Family { A, D, Dak, E, Eak };

struct CarterId {
  Family fam = Family::A;
  int l = 1; // rank (number of vertices)
  int k = 0; // cycle index, 0 for plain Dynkin

  std::string name() const;                              // "A7", "D6a2", "E7a3"
  static std::optional<CarterId> parse(const std::string& s);
  bool valid(int max_rank = 10) const;
  bool is_dynkin() const { return fam == Family::A || fam == Family::D || fam == Family::E; }

  bool operator==(const CarterId& o) const { return fam == o.fam && l == o.l && k == o.k; }
  bool operator<(const CarterId& o) const;
};

struct DiagramEdge {
  int u = 0, v = 0; // vertex indices, alpha block first
  int sign = -1;    // -1 solid, +1 dotted
};

// Bicolored Carter diagram with the vertex order alpha_1..alpha_k, beta_1..beta_h.
// When a branch point exists it is beta_1 and its first three alpha neighbours
// are alpha_1, alpha_2, alpha_3 (starlike numbering).
struct CarterDiagram {
  CarterId id;
  int n_alpha = 0;
  int n_beta = 0;
  std::vector<DiagramEdge> edges;

  int size() const { return n_alpha + n_beta; }
  bool is_alpha(int v) const { return v < n_alpha; }
  std::string vertex_name(int v) const; // "a1".."b4"
  int vertex_index(const std::string& name) const;

  // Signed adjacency: entry over {-1,0,+1}, diagonal 2 (the Gram matrix B_Gamma).
  std::vector<std::vector<int>> gram() const;
  std::vector<int> neighbors(int v) const;
  int edge_sign(int u, int v) const; // 0 when not adjacent

  // true when beta_1 exists with alpha_1..alpha_3 among its neighbours
  bool has_branch_point() const;
  bool is_tree() const;
};

// All catalog diagrams with l <= max_rank: A_l (l>=1), D_l (l>=4),
// D_l(a_k) (1 <= k <= (l-2)/2), E_6/7/8, E_6(a_1..2), E_7(a_1..4), E_8(a_1..8).
std::vector<CarterDiagram> catalog(int max_rank);
const CarterDiagram& diagram(const CarterId& id); // cached, throws on invalid id

struct AssociatedSubset {
  CarterId diagram;
  RootSystemId primary;
  std::vector<Coord> roots; // aligned with the diagram's vertex order
};

struct ValidationIssue {
  std::string check;   // "independence", "gram", "cycle-even", "cycle-signs", "tree-dynkin"
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationIssue> issues;
};

// Checks linear independence, Gram/edge agreement, chordless-cycle parity and
// solid/dotted mixing, and (for trees) that the shape is a Dynkin diagram.
ValidationReport validate(const CarterDiagram& d, const AssociatedSubset& s);

// Backtracking search over the primary root system. Vertices are filled in
// diagram order, candidate roots in lexicographic order; the first complete
// solution is returned. `count` > 1 collects further solutions (for
// embedding-independence tests). existence_only fixes the first vertex to a
// single representative root (sound by transitivity of the Weyl group), which
// speeds up exhaustive not-found proofs.
std::vector<AssociatedSubset> embeddings(const CarterDiagram& d, RootSystemId primary,
                                         size_t count, bool existence_only = false);
std::optional<AssociatedSubset> embed(const CarterDiagram& d, RootSystemId primary);
bool embeddable(const CarterDiagram& d, RootSystemId primary);

// Sign-flip canonicalization: trees become all-solid; for diagrams with
// cycles, picks the flip pattern minimizing the edge-sign vector
// lexicographically (edges ordered by vertex pair).
AssociatedSubset similarity_normalize(const AssociatedSubset& s);

// Diagram read off a root subset: edge (i, j) with sign (r_i, r_j).
// Fails (nullopt) when some product falls outside {-1, 0, 1}.
std::optional<CarterDiagram> diagram_of_subset(const std::vector<Coord>& roots,
                                               const RootSystem& sys);


} // namespace carterlink
