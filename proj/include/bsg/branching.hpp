#ifndef BSG_BRANCHING_HPP
#define BSG_BRANCHING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bsg/algebra.hpp"
#include "bsg/repgraph.hpp"
#include "bsg/report.hpp"

namespace bsg {

enum class PointId : std::uint32_t {};
constexpr std::size_t index(PointId q) noexcept { return static_cast<std::size_t>(q); }
constexpr PointId point_at(std::size_t i) noexcept { return static_cast<PointId>(i); }

using PointSet = std::set<PointId>;
using PointVector = SparseVector<PointId>;

// Algebraic branching system (Q, Q_v, S_e, R_e, rho_e) over a bi-separated
// graph, with finite Q. Nothing is enforced on insertion; validate_bs reports.
class BranchingSystem {
public:
  explicit BranchingSystem(BasePtr base);

  const BiSepGraph& base() const noexcept { return *base_; }
  const BasePtr& base_ptr() const noexcept { return base_; }

  // Throws DuplicateName.
  PointId add_point(const std::string& name);
  // q in Q_v. Throws UnknownPoint, UnknownVertex.
  void assign(PointId q, VertexId v);
  // rho_e(from) = to; also records from in S_e and to in R_e.
  // Throws UnknownPoint, UnknownEdge.
  void add_map(EdgeId e, PointId from, PointId to);
  // Extra members of S_e or R_e outside the graph of rho_e.
  void add_source(EdgeId e, PointId q);
  void add_range(EdgeId e, PointId q);

  std::size_t num_points() const noexcept { return names_.size(); }
  std::vector<PointId> points() const;
  const std::string& name(PointId q) const;
  std::optional<PointId> find_point(const std::string& name) const;
  PointId point(const std::string& name) const;  // throws UnknownPoint

  const PointSet& qv(VertexId v) const { return qv_.at(index(v)); }
  const PointSet& se(EdgeId e) const { return se_.at(index(e)); }
  const PointSet& re(EdgeId e) const { return re_.at(index(e)); }
  const std::multimap<PointId, PointId>& rho(EdgeId e) const { return rho_.at(index(e)); }

  // The vertex of q when q lies in exactly one Q_v.
  std::optional<VertexId> vertex_of(PointId q) const;
  std::optional<PointId> apply(EdgeId e, PointId q) const;
  std::optional<PointId> apply_inverse(EdgeId e, PointId q) const;

  friend bool operator==(const BranchingSystem& a, const BranchingSystem& b) {
    return *a.base_ == *b.base_ && a.names_ == b.names_ && a.qv_ == b.qv_ && a.se_ == b.se_ &&
           a.re_ == b.re_ && a.rho_ == b.rho_;
  }

private:
  void check_point(PointId q) const;
  void check_edge(EdgeId e) const;

  BasePtr base_;
  std::vector<std::string> names_;
  std::map<std::string, PointId> by_name_;
  std::vector<PointSet> qv_;
  std::vector<PointSet> se_;
  std::vector<PointSet> re_;
  std::vector<std::multimap<PointId, PointId>> rho_;
};

ValidationReport validate_bs(const BranchingSystem& s);

// Vertices are the points (same ids and names); one edge "q/e" per point q
// and C-block X at its vertex, where e is the member of X with q in S_e.
// Throws InvalidSystem.
RepGraph eta(const BranchingSystem& s);

// Points are the shape vertices; S_e, R_e and rho_e are read off the
// e-labelled edges. Throws InvalidRepGraph.
BranchingSystem theta(const RepGraph& r);

// The W(S) action. Throws InvalidSystem, UnknownPoint, BaseMismatch.
PointVector act_bs(const BranchingSystem& s, const PointVector& x, const AlgebraElement& a);

// theta(eta(s)) == s.
bool roundtrip_theta_eta(const BranchingSystem& s);

// An isomorphism r -> eta(theta(r)). Throws InvalidRepGraph.
RGMorphism roundtrip_eta_theta(const RepGraph& r);

PointVector parse_point_vector(const BranchingSystem& s, std::string_view text);
std::string format_point_vector(const BranchingSystem& s, const PointVector& x);

}  // namespace bsg

#endif  // BSG_BRANCHING_HPP
