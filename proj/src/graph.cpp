#include "bsg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "bsg/error.hpp"

namespace bsg {

VertexId Graph::add_vertex(std::string name) {
  if (vertex_index_.contains(name)) {
    throw Error(ErrorKind::DuplicateName, "vertex '" + name + "'");
  }
  const VertexId v = vertex_at(vertex_names_.size());
  vertex_index_.emplace(name, v);
  vertex_names_.push_back(std::move(name));
  out_.emplace_back();
  in_.emplace_back();
  return v;
}

EdgeId Graph::add_edge(std::string name, VertexId src, VertexId dst) {
  if (edge_index_.contains(name)) {
    throw Error(ErrorKind::DuplicateName, "edge '" + name + "'");
  }
  const EdgeId e = edge_at(edge_names_.size());
  edge_index_.emplace(name, e);
  edge_names_.push_back(std::move(name));
  src_.push_back(src);
  dst_.push_back(dst);
  if (has_vertex(src)) out_[index(src)].push_back(e);
  if (has_vertex(dst)) in_[index(dst)].push_back(e);
  return e;
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(name);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw Error(ErrorKind::UnknownVertex, "'" + std::string(name) + "'");
}

EdgeId Graph::edge(std::string_view name) const {
  if (auto e = find_edge(name)) return *e;
  throw Error(ErrorKind::UnknownEdge, "'" + std::string(name) + "'");
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out(num_vertices());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = vertex_at(i);
  return out;
}

std::vector<EdgeId> Graph::edges() const {
  std::vector<EdgeId> out(num_edges());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = edge_at(i);
  return out;
}

std::vector<VertexId> Graph::vertices_by_name() const {
  std::vector<VertexId> out;
  out.reserve(num_vertices());
  for (const auto& [name, v] : vertex_index_) out.push_back(v);
  return out;
}

std::vector<EdgeId> Graph::edges_by_name() const {
  std::vector<EdgeId> out;
  out.reserve(num_edges());
  for (const auto& [name, e] : edge_index_) out.push_back(e);
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.vertex_names_ == b.vertex_names_ && a.edge_names_ == b.edge_names_ &&
         a.src_ == b.src_ && a.dst_ == b.dst_;
}

ValidationReport validate_graph(const Graph& g) {
  ValidationReport report;
  if (g.num_vertices() == 0) report.add("graph has no vertices");
  for (EdgeId e : g.edges()) {
    if (!g.has_vertex(g.src(e))) {
      report.add("edge '" + g.name(e) + "' has a dangling source");
    }
    if (!g.has_vertex(g.dst(e))) {
      report.add("edge '" + g.name(e) + "' has a dangling range");
    }
  }
  return report;
}

std::vector<std::size_t> connected_components(const Graph& g) {
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> comp(g.num_vertices(), unset);
  std::size_t next = 0;
  for (VertexId start : g.vertices()) {
    if (comp[index(start)] != unset) continue;
    std::queue<VertexId> todo;
    todo.push(start);
    comp[index(start)] = next;
    while (!todo.empty()) {
      VertexId v = todo.front();
      todo.pop();
      auto visit = [&](VertexId w) {
        if (g.has_vertex(w) && comp[index(w)] == unset) {
          comp[index(w)] = next;
          todo.push(w);
        }
      };
      for (EdgeId e : g.out_edges(v)) visit(g.dst(e));
      for (EdgeId e : g.in_edges(v)) visit(g.src(e));
    }
    ++next;
  }
  return comp;
}

bool is_connected(const Graph& g) {
  auto comp = connected_components(g);
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

bool is_tree(const Graph& g) {
  return g.num_vertices() > 0 && g.num_edges() + 1 == g.num_vertices() && is_connected(g);
}

GraphHom identity_hom(const Graph& g) {
  return GraphHom{g.vertices(), g.edges()};
}

GraphHom compose_homs(const GraphHom& second, const GraphHom& first) {
  GraphHom out;
  out.vmap.reserve(first.vmap.size());
  out.emap.reserve(first.emap.size());
  for (VertexId v : first.vmap) out.vmap.push_back(second(v));
  for (EdgeId e : first.emap) out.emap.push_back(second(e));
  return out;
}

bool is_homomorphism(const Graph& f, const GraphHom& phi, const Graph& e) {
  if (phi.vmap.size() != f.num_vertices() || phi.emap.size() != f.num_edges()) {
    return false;
  }
  for (VertexId v : phi.vmap) {
    if (!e.has_vertex(v)) return false;
  }
  for (EdgeId x : f.edges()) {
    const EdgeId y = phi(x);
    if (!e.has_edge(y)) return false;
    if (!f.has_vertex(f.src(x)) || !f.has_vertex(f.dst(x))) return false;
    if (e.src(y) != phi(f.src(x)) || e.dst(y) != phi(f.dst(x))) return false;
  }
  return true;
}

namespace {

bool star_bijective(const std::vector<EdgeId>& star, const std::vector<EdgeId>& target,
                    const GraphHom& phi) {
  if (star.size() != target.size()) return false;
  std::vector<EdgeId> image;
  image.reserve(star.size());
  for (EdgeId x : star) image.push_back(phi(x));
  std::vector<EdgeId> expected = target;
  std::sort(image.begin(), image.end());
  std::sort(expected.begin(), expected.end());
  return image == expected;
}

}  // namespace

bool check_covering(const Graph& f, const GraphHom& phi, const Graph& e) {
  return check_covering(f, phi, e, VertexSet{});
}

bool check_covering(const Graph& f, const GraphHom& phi, const Graph& e,
                    const VertexSet& exempt) {
  if (!is_homomorphism(f, phi, e)) return false;
  for (VertexId v : f.vertices()) {
    if (exempt.contains(v)) continue;
    if (!star_bijective(f.out_edges(v), e.out_edges(phi(v)), phi)) return false;
    if (!star_bijective(f.in_edges(v), e.in_edges(phi(v)), phi)) return false;
  }
  return true;
}

Walk map_walk(const GraphHom& phi, const Walk& p) {
  Walk out{phi(p.base), {}};
  out.letters.reserve(p.letters.size());
  for (Letter x : p.letters) out.letters.push_back(phi(x));
  return out;
}

}  // namespace bsg
