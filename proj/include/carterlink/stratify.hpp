#pragma once

#include "carterlink/linkage.hpp"

#include <map>
#include <string>
#include <vector>

namespace carterlink {

struct DynkinExtension {
  CarterId base;
  RootSystemId ext;       // rank(base) + 1
  AssociatedSubset subset; // base embedded in Phi(ext)
};

// All Dynkin diagrams of rank l+1 whose root system admits the diagram;
// subsets are the lexicographically first embeddings.
std::vector<DynkinExtension> dynkin_extensions(const CarterDiagram& d, int max_rank);

// Canonical simple-root realization for Dynkin bases (the base subset is a
// set of simple roots of Phi(ext), the missing simple root being the
// extension vertex). Supports A_m < A/D/E_{m+1}, D_l < D_{l+1}/E_{l+1},
// E_l < E_{l+1}.
DynkinExtension standard_extension(const CarterId& base, RootSystemId ext);
// The simple root of Phi(ext) not used by the standard subset.
Coord standard_extension_new_root(const DynkinExtension& e);

// Roots of Phi(ext) rationally dependent on the subset.
std::vector<Coord> partial_root_system(const DynkinExtension& e);

struct StratumLabels {
  std::vector<Coord> stratum;                   // Phi(ext) \ Phi(S)
  std::map<Label, std::vector<Coord>> by_label; // distinct nonzero labels -> preimage roots
  std::map<Label, Rat> pval;                    // B^vee per distinct label
  int zero_label_roots = 0;                     // roots whose label vector vanishes
};
StratumLabels component_from_stratum(const DynkinExtension& e);

struct PairingReport {
  bool ok = true;
  std::string detail;
  // unordered pairs of positive stratum roots
  std::vector<std::pair<Coord, Coord>> positive_pairs;
  int distinct_labels = 0;
};

// The mu_max pairing lemmas on standard extensions:
//   D_l < D_{l+1}:  delta = mu_max - phi + tau_new,  delta^nabla = -phi^nabla
//   E_7 < E_8, A_5 < E_6:  delta = mu_max - phi,     delta^nabla = -phi^nabla
PairingReport verify_pairings(const DynkinExtension& e);

// All unordered pairs {eta, lambda} of positive stratum roots of `e`
// with eta^nabla = -lambda^nabla (the negated-label coincidences of a
// single stratum, e.g. D_7 < E_8).
PairingReport negated_label_pairs(const DynkinExtension& e);

// Cross-stratum coincidences between two extensions of one diagram:
// pairs of positive roots with equal (or negated) label vectors.
struct CrossPair {
  Coord in_a, in_b;
  Label label;
};
std::vector<CrossPair> cross_stratum_pairs(const DynkinExtension& a, const DynkinExtension& b,
                                           bool negated);

struct AssembledSystem {
  CarterId diagram;
  std::map<std::string, StratumLabels> by_extension; // key: ext name "D8"
  std::set<Label> all_labels;
  int zero_vectors_excluded = 0;
  // inclusion facts discovered between extension label sets (a subset of b)
  std::vector<std::pair<std::string, std::string>> inclusions;
};

// Union of the stratum label sets over all Dynkin extensions; the
// realization oracle for module linkage.
AssembledSystem assemble_system(const CarterDiagram& d, int max_rank = kMaxBuildRank);

} // namespace carterlink
