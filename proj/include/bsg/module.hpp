#ifndef BSG_MODULE_HPP
#define BSG_MODULE_HPP

#include <vector>

#include "bsg/algebra.hpp"
#include "bsg/repgraph.hpp"
#include "bsg/report.hpp"

namespace bsg {

// w.p: the range of the lift of p at w, or zero. Throws UnknownVertex, or
// MalformedWalk if p is not a walk of the base graph.
ModuleVector act_vertex(const RepGraph& r, VertexId w, const Walk& p);

// x.a, the bilinear extension of act_vertex. Throws UnknownVertex for vertices
// outside the shape and BaseMismatch for walks outside the base graph.
ModuleVector act(const RepGraph& r, const ModuleVector& x, const AlgebraElement& a);

// The relations of the algebra annihilate V(F, phi) at every vertex w whose
// one-letter neighbourhood avoids `frontier`, and the vertex and edge
// operators satisfy the idempotent and unit conditions there.
ValidationReport verify_family(const RepGraph& r, const VertexSet& frontier = {});

bool is_simple(const RepGraph& r);

struct Reduction {
  std::vector<Walk> walks;
  Scalar k;
  VertexId v{};
};

// Walks p1..pm with x.p1...pm = k v. Each step applies a distinguishing walk
// to the two name-least support vertices. Throws ZeroVector, NotIrreducible.
Reduction reduce_to_vertex(const RepGraph& r, const ModuleVector& x);

// V(alpha): u -> alpha(u), extended linearly. Throws BaseMismatch when x uses
// a vertex outside the domain of alpha.
ModuleVector induced_hom(const RGMorphism& alpha, const ModuleVector& x);

// The sum of the vertices in the class of class_rep. Throws NotAdmissible,
// UnknownVertex.
ModuleVector section_hom(const RepGraph& r, const Partition& approx, VertexId class_rep);

}  // namespace bsg

#endif  // BSG_MODULE_HPP
