#pragma once

#include "carterlink/carter.hpp"
#include "carterlink/matrix.hpp"

namespace carterlink {

// B_Gamma straight from the catalog edges (diagonal 2, signed adjacency).
RatMatrix partial_cartan(const CarterDiagram& d);

// B_Gamma from a realized subset: entry (i,j) = (root_i, root_j).
RatMatrix partial_cartan(const AssociatedSubset& s);

// Cached exact inverse of the catalog B_Gamma.
const RatMatrix& partial_cartan_inverse(const CarterId& id);

// b^vee_{vertex,vertex} < 2 (Dynkin-extension criterion at a single vertex).
bool simply_extendable(const CarterDiagram& d, int vertex);

// Closed-form diagonal element of B_Gamma^{-1} for A_l, D_l and D_l(a_k):
// A_l: d - d^2/(l+1) with d the linear position of the vertex;
// D-family: l/4 on the two cycle/fork vertices, otherwise the product of the
// determinants of the components left after deleting the vertex, divided by 4.
// Throws for unsupported diagrams (E family).
Rat diag_closed_form(const CarterDiagram& d, int vertex);

// d - d^2/(l+1): the linear position of a vertex of the A_l chain.
int linear_position(const CarterDiagram& a_diagram, int vertex);

} // namespace carterlink
