#include "bsg/branching.hpp"

#include "bsg/error.hpp"

namespace bsg {

BranchingSystem::BranchingSystem(BasePtr base) : base_(std::move(base)) {
  const Graph& g = base_->graph();
  qv_.resize(g.num_vertices());
  se_.resize(g.num_edges());
  re_.resize(g.num_edges());
  rho_.resize(g.num_edges());
}

PointId BranchingSystem::add_point(const std::string& name) {
  if (by_name_.count(name)) throw Error(ErrorKind::DuplicateName, "point '" + name + "'");
  const PointId q = point_at(names_.size());
  names_.push_back(name);
  by_name_.emplace(name, q);
  return q;
}

void BranchingSystem::check_point(PointId q) const {
  if (index(q) >= names_.size()) throw Error(ErrorKind::UnknownPoint, "point id");
}

void BranchingSystem::check_edge(EdgeId e) const {
  if (!base_->graph().has_edge(e)) throw Error(ErrorKind::UnknownEdge, "branching map");
}

void BranchingSystem::assign(PointId q, VertexId v) {
  check_point(q);
  if (!base_->graph().has_vertex(v)) throw Error(ErrorKind::UnknownVertex, "point vertex");
  qv_[index(v)].insert(q);
}

void BranchingSystem::add_map(EdgeId e, PointId from, PointId to) {
  check_edge(e);
  check_point(from);
  check_point(to);
  se_[index(e)].insert(from);
  re_[index(e)].insert(to);
  rho_[index(e)].emplace(from, to);
}

void BranchingSystem::add_source(EdgeId e, PointId q) {
  check_edge(e);
  check_point(q);
  se_[index(e)].insert(q);
}

void BranchingSystem::add_range(EdgeId e, PointId q) {
  check_edge(e);
  check_point(q);
  re_[index(e)].insert(q);
}

std::vector<PointId> BranchingSystem::points() const {
  std::vector<PointId> out;
  for (std::size_t i = 0; i < names_.size(); ++i) out.push_back(point_at(i));
  return out;
}

const std::string& BranchingSystem::name(PointId q) const {
  check_point(q);
  return names_[index(q)];
}

std::optional<PointId> BranchingSystem::find_point(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

PointId BranchingSystem::point(const std::string& name) const {
  if (auto q = find_point(name)) return *q;
  throw Error(ErrorKind::UnknownPoint, "'" + name + "'");
}

std::optional<VertexId> BranchingSystem::vertex_of(PointId q) const {
  std::optional<VertexId> out;
  for (VertexId v : base_->graph().vertices()) {
    if (!qv_[index(v)].count(q)) continue;
    if (out) return std::nullopt;
    out = v;
  }
  return out;
}

std::optional<PointId> BranchingSystem::apply(EdgeId e, PointId q) const {
  const auto& m = rho_.at(index(e));
  auto it = m.find(q);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

std::optional<PointId> BranchingSystem::apply_inverse(EdgeId e, PointId q) const {
  for (const auto& [from, to] : rho_.at(index(e))) {
    if (to == q) return from;
  }
  return std::nullopt;
}

namespace {

// Q_v must be the disjoint union of part(e) over the edges of each block.
void check_blocks(const BranchingSystem& s, const Block& blk, const std::string& label,
                  const PointSet& (BranchingSystem::*part)(EdgeId) const, const char* part_name,
                  ValidationReport& report) {
  const Graph& g = s.base().graph();
  const std::string where = label + " " + format_block(g, blk) + " at '" + g.name(blk.owner) + "'";
  std::map<PointId, std::size_t> hits;
  for (EdgeId e : blk.edges) {
    for (PointId q : (s.*part)(e)) ++hits[q];
  }
  for (const auto& [q, n] : hits) {
    if (n > 1) {
      report.add(where + ": point '" + s.name(q) + "' lies in " + std::to_string(n) + " " +
                 part_name + " sets");
    }
    if (!s.qv(blk.owner).count(q)) {
      report.add(where + ": point '" + s.name(q) + "' lies in a " + part_name +
                 " set but not in Q_" + g.name(blk.owner));
    }
  }
  for (PointId q : s.qv(blk.owner)) {
    if (!hits.count(q)) {
      report.add(where + ": point '" + s.name(q) + "' is in no " + part_name + " set of the block");
    }
  }
}

}  // namespace

ValidationReport validate_bs(const BranchingSystem& s) {
  ValidationReport report = validate_bisep(s.base());
  if (!report.ok()) return report;
  const BiSepGraph& b = s.base();
  const Graph& g = b.graph();

  for (PointId q : s.points()) {
    std::size_t n = 0;
    for (VertexId v : g.vertices()) n += s.qv(v).count(q);
    if (n == 0) report.add("point '" + s.name(q) + "' lies in no vertex set");
    if (n > 1) report.add("point '" + s.name(q) + "' lies in " + std::to_string(n) + " vertex sets");
  }

  for (CBlockId x : b.cblocks()) check_blocks(s, b.cblock(x), "C-block", &BranchingSystem::se, "S", report);
  for (DBlockId y : b.dblocks()) check_blocks(s, b.dblock(y), "D-block", &BranchingSystem::re, "R", report);

  for (EdgeId e : g.edges()) {
    const std::string where = "rho_" + g.name(e);
    std::map<PointId, std::size_t> images;
    for (PointId q : s.se(e)) {
      const std::size_t n = s.rho(e).count(q);
      if (n == 0) report.add(where + " is undefined at '" + s.name(q) + "'");
      if (n > 1) report.add(where + " has " + std::to_string(n) + " values at '" + s.name(q) + "'");
    }
    for (const auto& [from, to] : s.rho(e)) ++images[to];
    for (const auto& [q, n] : images) {
      if (n > 1) report.add(where + " is not injective: '" + s.name(q) + "' is hit " + std::to_string(n) + " times");
    }
    for (PointId q : s.re(e)) {
      if (!images.count(q)) report.add(where + " is not onto R_" + g.name(e) + ": misses '" + s.name(q) + "'");
    }
  }
  return report;
}

RepGraph eta(const BranchingSystem& s) {
  if (ValidationReport report = validate_bs(s); !report.ok()) {
    throw Error(ErrorKind::InvalidSystem, report.issues.front());
  }
  const BiSepGraph& b = s.base();
  const Graph& g = b.graph();

  Graph shape;
  GraphHom labeling;
  for (PointId q : s.points()) {
    shape.add_vertex(s.name(q));
    labeling.vmap.push_back(*s.vertex_of(q));
  }
  for (PointId q : s.points()) {
    const VertexId v = *s.vertex_of(q);
    for (CBlockId x : b.cblocks_at(v)) {
      for (EdgeId e : b.cblock(x).edges) {
        if (!s.se(e).count(q)) continue;
        const PointId to = *s.apply(e, q);
        shape.add_edge(s.name(q) + "/" + g.name(e), vertex_at(index(q)), vertex_at(index(to)));
        labeling.emap.push_back(e);
      }
    }
  }
  return RepGraph(s.base_ptr(), std::move(shape), std::move(labeling));
}

BranchingSystem theta(const RepGraph& r) {
  if (ValidationReport report = validate_repgraph(r, {}, Connectivity::per_component);
      !report.ok()) {
    throw Error(ErrorKind::InvalidRepGraph, report.issues.front());
  }
  const Graph& f = r.shape();
  BranchingSystem s(r.base_ptr());
  for (VertexId w : f.vertices()) s.assign(s.add_point(f.name(w)), r.label(w));
  for (EdgeId x : f.edges()) {
    s.add_map(r.label(x), point_at(index(f.src(x))), point_at(index(f.dst(x))));
  }
  return s;
}

PointVector act_bs(const BranchingSystem& s, const PointVector& x, const AlgebraElement& a) {
  if (ValidationReport report = validate_bs(s); !report.ok()) {
    throw Error(ErrorKind::InvalidSystem, report.issues.front());
  }
  const Graph& g = s.base().graph();
  for (const auto& [p, k] : a.terms()) {
    if (!is_walk(g, p)) throw Error(ErrorKind::BaseMismatch, "act_bs: walk not in base");
  }
  PointVector out;
  for (const auto& [q, c] : x.terms()) {
    if (index(q) >= s.num_points()) throw Error(ErrorKind::UnknownPoint, "act_bs");
    for (const auto& [p, k] : a.terms()) {
      if (s.vertex_of(q) != p.base) continue;
      std::optional<PointId> at = q;
      for (Letter l : p.letters) {
        at = l.reversed() ? s.apply_inverse(l.edge, *at) : s.apply(l.edge, *at);
        if (!at) break;
      }
      if (at) out.add(*at, c * k);
    }
  }
  return out;
}

bool roundtrip_theta_eta(const BranchingSystem& s) { return theta(eta(s)) == s; }

RGMorphism roundtrip_eta_theta(const RepGraph& r) {
  const RepGraph t = eta(theta(r));
  const Graph& f = r.shape();
  RGMorphism alpha;
  for (VertexId w : f.vertices()) alpha.vmap.push_back(w);
  for (EdgeId x : f.edges()) {
    std::optional<EdgeId> y = t.out_edge_labeled(f.src(x), r.label(x));
    if (!y) throw Error(ErrorKind::InvalidRepGraph, "eta(theta(r)) lost edge '" + f.name(x) + "'");
    alpha.emap.push_back(*y);
  }
  if (!is_rg_morphism(r, t, alpha) || t.shape().num_edges() != f.num_edges()) {
    throw Error(ErrorKind::InvalidRepGraph, "eta(theta(r)) is not isomorphic to r");
  }
  return alpha;
}

PointVector parse_point_vector(const BranchingSystem& s, std::string_view text) {
  PointVector out;
  for (auto& [c, name] : parse_combination(text)) out.add(s.point(name), c);
  return out;
}

std::string format_point_vector(const BranchingSystem& s, const PointVector& x) {
  std::vector<std::pair<std::string, Scalar>> rows;
  for (const auto& [q, c] : x.terms()) rows.emplace_back(s.name(q), c);
  return format_combination(std::move(rows));
}

}  // namespace bsg
