#pragma once

#include "carterlink/linkage.hpp"

#include <string>
#include <vector>

namespace carterlink {

// Integral change of basis between a partial root system P (spanned by a
// non-Dynkin Carter diagram realization) and the root system R of its
// covalent Dynkin diagram. M maps the i-th basis root of the tilde
// presentation to the root given by row i of `M` over that same basis.
struct CovalentPair {
  CarterId tilde;  // D_l(a_k), E_6(a_1..2), E_7(a_1..4)
  CarterId dynkin; // D_l, E_6, E_7
  std::vector<std::string> vertex_names;  // tilde presentation, row/col order
  std::vector<std::vector<int>> gram;     // Gram of the tilde presentation
  std::vector<std::vector<int>> M;        // row i: dynkin basis root i over tilde basis
  std::vector<std::vector<int>> Minv;     // row i: tilde basis root i over dynkin basis
  int changed_vertices = 0;               // rows of M that are not unit vectors
};

// Pairs supported: (D_l(a_k), D_l) for any catalog l, (E_6(a_k), E_6),
// (E_7(a_k), E_7). Throws for anything else.
CovalentPair transition_map(const CarterId& tilde);

struct BijectionReport {
  bool ok = true;
  std::string detail;
  long long size_p = 0, size_r = 0;
};

// Realizes the pair inside `primary`, maps every root of P through M and
// every root of R through M^{-1}, asserting both land on roots, and
// |P| = |R|.
BijectionReport verify_bijection(const CovalentPair& pair, RootSystemId primary);

struct TransportReport {
  bool ok = true;
  long long tilde_size = 0, dynkin_size = 0;
  std::vector<size_t> tilde_parts, dynkin_parts; // sorted part sizes
};

// |L(tilde)| = |L(dynkin)| with matching part-size multisets.
TransportReport transport_linkage(const CovalentPair& pair);

// Chain presentation of D_l(a_k) in the e-coordinates of an ambient D_m:
// tau_i = e_i - e_{i+1} (i = 1..l-1) plus taubar_{k+1} = e_{k+1} + e_{k+2}.
AssociatedSubset dlak_chain_subset(int l, int k, RootSystemId ambient);

} // namespace carterlink
