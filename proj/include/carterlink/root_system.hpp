#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace carterlink {

// Hard cap on buildable rank. Catalog diagrams stop at rank 10; rank 11
// ambient systems are still needed as extension targets for rank-10 diagrams.
inline constexpr int kMaxBuildRank = 11;

struct RootSystemId {
  char family = 'A'; // 'A', 'D', 'E'
  int rank = 1;

  bool valid() const;
  std::string name() const; // "A7", "D10", "E8"
  bool operator==(const RootSystemId& o) const { return family == o.family && rank == o.rank; }
  bool operator<(const RootSystemId& o) const {
    return family != o.family ? family < o.family : rank < o.rank;
  }
};

// Integer coordinates over the simple roots tau_1..tau_l (Bourbaki numbering).
using Coord = std::vector<int>;

Coord negate(const Coord& c);

// Immutable after construction; use get_root_system() for shared instances.
class RootSystem {
 public:
  explicit RootSystem(RootSystemId id);

  const RootSystemId& id() const { return id_; }
  int rank() const { return id_.rank; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<Coord>& roots() const { return roots_; } // lex sorted, +/- included
  const std::vector<Coord>& positive_roots() const { return positive_; }
  Coord simple_root(int i) const; // 0-based

  // Doubled symmetric bilinear form: (r, r) = 2 for every root.
  long long inner(const Coord& a, const Coord& b) const;
  Coord reflect(const Coord& v, const Coord& mirror) const;

  bool contains(const Coord& c) const;
  const Coord& maximal_root() const { return maximal_; }

  // Conversion from orthonormal e-coordinates (classical presentations of
  // A_l inside R^{l+1} and D_l inside R^l). Only A and D are supported.
  Coord from_euclidean(const std::vector<int>& e) const;

 private:
  RootSystemId id_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Coord> roots_;
  std::vector<Coord> positive_;
  Coord maximal_;
  std::unordered_map<std::string, int> index_;

  static std::string key(const Coord& c);
};

// Cached registry (thread-safe construction).
const RootSystem& get_root_system(RootSystemId id);

// Classical root counts: A_l: l(l+1), D_l: 2l(l-1), E6/7/8: 72/126/240.
long long classical_root_count(RootSystemId id);

std::vector<std::vector<int>> cartan_matrix(RootSystemId id);

} // namespace carterlink
