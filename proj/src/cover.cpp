#include <algorithm>
#include <map>
#include <queue>

#include "bsg/error.hpp"
#include "bsg/graph.hpp"

namespace bsg {

namespace {

// Letters leaving v ordered by (edge name, forward before reverse).
std::vector<Letter> letters_at(const Graph& g, VertexId v) {
  std::vector<Letter> out;
  for (EdgeId e : g.out_edges(v)) out.push_back(fwd(e));
  for (EdgeId e : g.in_edges(v)) out.push_back(rev(e));
  std::sort(out.begin(), out.end(), [&](Letter a, Letter b) {
    if (a.edge != b.edge) return g.name(a.edge) < g.name(b.edge);
    return a.direction < b.direction;
  });
  return out;
}

}  // namespace

UniversalCover universal_cover(const Graph& e, VertexId v, std::size_t depth) {
  if (!e.has_vertex(v)) throw Error(ErrorKind::UnknownVertex, "universal_cover");

  UniversalCover out;
  std::map<Walk, VertexId> node_of;
  std::vector<Walk> walks;

  auto add_node = [&](Walk p) {
    VertexId id = out.tree.add_vertex(format_walk(e, p));
    out.projection.vmap.push_back(range(e, p));
    node_of.emplace(p, id);
    walks.push_back(std::move(p));
  };

  // Reduced walks from v, breadth first; walks[] ends up sorted by length.
  add_node(Walk::trivial(v));
  for (std::size_t i = 0; i < walks.size(); ++i) {
    if (walks[i].length() == depth) continue;
    const Walk p = walks[i];
    for (Letter x : letters_at(e, range(e, p))) {
      if (!p.is_trivial() && p.letters.back() == x.inverse()) continue;
      Walk child = p;
      child.letters.push_back(x);
      add_node(std::move(child));
    }
  }

  // Edges (p, f) with r(p) = s(f) whose range p * f is still in the ball.
  for (std::size_t i = 0; i < walks.size(); ++i) {
    const Walk& p = walks[i];
    std::vector<EdgeId> star = e.out_edges(range(e, p));
    std::sort(star.begin(), star.end(),
              [&](EdgeId a, EdgeId b) { return e.name(a) < e.name(b); });
    for (EdgeId f : star) {
      Walk target = star_compose(e, p, Walk{range(e, p), {fwd(f)}});
      auto it = node_of.find(target);
      if (it == node_of.end()) continue;
      out.tree.add_edge("(" + format_walk(e, p) + "," + e.name(f) + ")", vertex_at(i),
                        it->second);
      out.projection.emap.push_back(f);
    }
    if (p.length() == depth) out.frontier.insert(vertex_at(i));
  }
  return out;
}

std::vector<Walk> fundamental_group_basis(const Graph& e, VertexId v) {
  if (!e.has_vertex(v)) throw Error(ErrorKind::UnknownVertex, "fundamental_group_basis");

  std::vector<std::optional<Walk>> tree_walk(e.num_vertices());
  std::vector<bool> tree_edge(e.num_edges(), false);
  tree_walk[index(v)] = Walk::trivial(v);
  std::queue<VertexId> todo;
  todo.push(v);
  while (!todo.empty()) {
    VertexId u = todo.front();
    todo.pop();
    for (Letter x : letters_at(e, u)) {
      VertexId w = letter_range(e, x);
      if (tree_walk[index(w)]) continue;
      Walk t = *tree_walk[index(u)];
      t.letters.push_back(x);
      tree_walk[index(w)] = std::move(t);
      tree_edge[index(x.edge)] = true;
      todo.push(w);
    }
  }

  std::vector<Walk> basis;
  for (EdgeId f : e.edges_by_name()) {
    if (tree_edge[index(f)]) continue;
    const auto& to_src = tree_walk[index(e.src(f))];
    const auto& to_dst = tree_walk[index(e.dst(f))];
    if (!to_src || !to_dst) continue;  // outside the component of v
    Walk loop = compose_walks(e, *to_src, Walk{e.src(f), {fwd(f)}});
    loop = compose_walks(e, loop, reverse_walk(e, *to_dst));
    basis.push_back(reduce_walk(loop));
  }
  return basis;
}

}  // namespace bsg
