#ifndef BSG_REPGRAPH_HPP
#define BSG_REPGRAPH_HPP

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "bsg/bisep.hpp"
#include "bsg/graph.hpp"
#include "bsg/report.hpp"

namespace bsg {

using BasePtr = std::shared_ptr<const BiSepGraph>;

// Label-preserving graph homomorphism between representation graphs over the
// same base: psi o alpha = phi.
using RGMorphism = GraphHom;

// A representation graph (F, phi) for a bi-separated graph.
//
// The constructor only requires phi to be a graph homomorphism into the base
// graph (InvalidRepGraph otherwise); the star conditions and connectivity are
// checked by validate_repgraph so that invalid inputs remain reportable.
class RepGraph {
public:
  RepGraph(BasePtr base, Graph shape, GraphHom labeling);

  const BiSepGraph& base() const noexcept { return *base_; }
  const BasePtr& base_ptr() const noexcept { return base_; }
  const Graph& base_graph() const noexcept { return base_->graph(); }
  const Graph& shape() const noexcept { return shape_; }
  const GraphHom& labeling() const noexcept { return labeling_; }

  VertexId label(VertexId w) const { return labeling_(w); }
  EdgeId label(EdgeId f) const { return labeling_(f); }

  // The shape edge leaving (entering) w with label e, if any.
  std::optional<EdgeId> out_edge_labeled(VertexId w, EdgeId e) const;
  std::optional<EdgeId> in_edge_labeled(VertexId w, EdgeId e) const;

  // w.x for a single base letter; nullopt when x does not lift at w.
  std::optional<VertexId> step(VertexId w, Letter x) const;

  // Base letters that lift at w, ordered by (edge id, direction).
  std::vector<Letter> enabled_letters(VertexId w) const;

private:
  using LabelIndex = std::vector<std::pair<EdgeId, EdgeId>>;  // (label, shape edge)

  BasePtr base_;
  Graph shape_;
  GraphHom labeling_;
  std::vector<LabelIndex> out_by_label_;
  std::vector<LabelIndex> in_by_label_;
};

// Both representation graphs use the same (or an equal) base.
bool same_base(const RepGraph& r, const RepGraph& t);

enum class Connectivity { required, per_component };

// Star conditions at every vertex outside `frontier`, plus connectivity of the
// shape unless `per_component` is requested.
ValidationReport validate_repgraph(const RepGraph& r, const VertexSet& frontier = {},
                                   Connectivity mode = Connectivity::required);

// The unique q with s(q) = w and phi(q) = p, if it exists. Throws
// UnknownVertex, or MalformedWalk when p is not a walk of the base graph.
std::optional<Walk> lift_walk(const RepGraph& r, VertexId w, const Walk& p);

// A set partition of the shape vertices. Blocks are numbered in order of
// their smallest vertex id.
class Partition {
public:
  Partition() = default;

  static Partition discrete(std::size_t n);
  // Throws PartitionMismatch if the assignment is empty.
  static Partition from_assignment(const std::vector<std::size_t>& block_of);
  // Throws PartitionMismatch unless blocks are disjoint and cover 0..n-1.
  static Partition from_blocks(std::size_t n, const std::vector<std::vector<VertexId>>& blocks);

  std::size_t num_vertices() const noexcept { return block_of_.size(); }
  std::size_t num_blocks() const noexcept { return num_blocks_; }
  std::size_t block_of(VertexId v) const { return block_of_.at(index(v)); }
  bool same(VertexId u, VertexId v) const { return block_of(u) == block_of(v); }
  bool is_discrete() const noexcept { return num_blocks_ == block_of_.size(); }

  std::vector<std::vector<VertexId>> blocks() const;

  // Every block of *this lies inside a block of coarser.
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition&, const Partition&) = default;

private:
  std::vector<std::size_t> block_of_;
  std::size_t num_blocks_ = 0;
};

// u ~ v iff the walks from u and v have the same label sets. Computed by
// Moore refinement of the deterministic letter-transition system.
Partition compute_sim(const RepGraph& r);

bool is_irreducible(const RepGraph& r);

// approx <= ~ and closed under one-letter transport. Throws PartitionMismatch
// when approx is not a partition of the shape vertices.
bool check_admissible(const RepGraph& r, const Partition& approx);

struct QuotientResult {
  RepGraph rep;
  RGMorphism projection;
};

// (F_approx, phi_approx) and the canonical projection. Quotient vertices and
// edges are named after the lexicographically smallest member of their class.
// Throws NotAdmissible.
QuotientResult quotient(const RepGraph& r, const Partition& approx);

// quotient(r, compute_sim(r)): the irreducible attracting object of r's
// component.
QuotientResult attracting_quotient(const RepGraph& r);

// Label-preserving graph homomorphism r -> t.
bool is_rg_morphism(const RepGraph& r, const RepGraph& t, const RGMorphism& alpha);

// Seeds one vertex per component of r and propagates along letters; by
// unique lifting the seed determines the whole map. Throws BaseMismatch.
std::optional<RGMorphism> find_morphism(const RepGraph& r, const RepGraph& t);

// A bijective morphism, if one exists. Throws BaseMismatch.
std::optional<RGMorphism> find_isomorphism(const RepGraph& r, const RepGraph& t);
bool are_isomorphic(const RepGraph& r, const RepGraph& t);

// attracting quotients are isomorphic. Throws BaseMismatch.
bool same_component(const RepGraph& r, const RepGraph& t);

// A shortest base walk lifting at exactly one of u, v (the trivial walk at
// phi(u) when labels differ); nullopt iff u ~ v. Throws UnknownVertex.
std::optional<Walk> distinguishing_walk(const RepGraph& r, VertexId u, VertexId v);

struct CoverRep {
  RepGraph rep;
  VertexSet frontier;
  RGMorphism projection;  // cover -> r
};

// The universal cover of the shape at u truncated at `depth`, labeled by
// phi o tau. Throws UnknownVertex.
CoverRep universal_cover_rep(const RepGraph& r, VertexId u, std::size_t depth);

// (shape, psi o alpha) for a covering alpha: shape -> target.shape().
RepGraph pullback(const RepGraph& target, Graph shape, const GraphHom& alpha);

}  // namespace bsg

#endif  // BSG_REPGRAPH_HPP
