#include "fixtures.hpp"

#include <memory>

namespace bsg::test {

BasePtr make_base(const std::vector<std::string>& vertices, const std::vector<NamedEdge>& edges,
                  const std::vector<NamedBlock>& cblocks, const std::vector<NamedBlock>& dblocks) {
  Graph g;
  for (const auto& v : vertices) g.add_vertex(v);
  for (const auto& [name, s, d] : edges) g.add_edge(name, g.vertex(s), g.vertex(d));
  BiSepGraph b(std::move(g));
  auto ids = [&](const std::vector<std::string>& names) {
    std::vector<EdgeId> out;
    for (const auto& n : names) out.push_back(b.graph().edge(n));
    return out;
  };
  for (const auto& [owner, names] : cblocks) b.add_cblock(b.graph().vertex(owner), ids(names));
  for (const auto& [owner, names] : dblocks) b.add_dblock(b.graph().vertex(owner), ids(names));
  return std::make_shared<const BiSepGraph>(std::move(b));
}

RepGraph make_rep(const BasePtr& base, const std::vector<LabeledVertex>& vertices,
                  const std::vector<LabeledEdge>& edges) {
  const Graph& e = base->graph();
  Graph f;
  GraphHom phi;
  for (const auto& [name, label] : vertices) {
    f.add_vertex(name);
    phi.vmap.push_back(e.vertex(label));
  }
  for (const auto& [name, s, d, label] : edges) {
    f.add_edge(name, f.vertex(s), f.vertex(d));
    phi.emap.push_back(e.edge(label));
  }
  return RepGraph(base, std::move(f), std::move(phi));
}

BasePtr four_loop_base() {
  static const BasePtr base = make_base(
      {"v"}, {{"e1", "v", "v"}, {"e2", "v", "v"}, {"f1", "v", "v"}, {"f2", "v", "v"}},
      {{"v", {"e1", "f1"}}, {"v", {"e2", "f2"}}}, {{"v", {"e1", "e2"}}, {"v", {"f1", "f2"}}});
  return base;
}

BasePtr six_loop_base() {
  static const BasePtr base = make_base(
      {"v"},
      {{"e1", "v", "v"}, {"e2", "v", "v"}, {"f1", "v", "v"},
       {"g2", "v", "v"}, {"h1", "v", "v"}, {"h2", "v", "v"}},
      {{"v", {"e1", "f1"}}, {"v", {"e2"}}, {"v", {"h1"}}, {"v", {"g2", "h2"}}},
      {{"v", {"e1", "e2"}}, {"v", {"f1"}}, {"v", {"g2"}}, {"v", {"h1", "h2"}}});
  return base;
}

BasePtr ck_rose_base() {
  static const BasePtr base = make_base({"v"}, {{"e", "v", "v"}, {"f", "v", "v"}},
                                        {{"v", {"e", "f"}}}, {{"v", {"e"}}, {"v", {"f"}}});
  return base;
}

RepGraph f5() {
  return make_rep(four_loop_base(), {{"w1", "v"}, {"w2", "v"}},
                  {{"a", "w1", "w2", "e1"}, {"b", "w2", "w1", "e1"},
                   {"c", "w1", "w1", "f2"}, {"d", "w2", "w2", "f2"}});
}

RepGraph f6() {
  return make_rep(four_loop_base(), {{"w1", "v"}, {"w2", "v"}},
                  {{"a", "w1", "w2", "f2"}, {"b", "w2", "w1", "f2"},
                   {"c", "w1", "w1", "e1"}, {"d", "w2", "w2", "e1"}});
}

RepGraph f7() {
  return make_rep(four_loop_base(), {{"w", "v"}}, {{"a", "w", "w", "e1"}, {"b", "w", "w", "f2"}});
}

RepGraph fixture_d() {
  return make_rep(four_loop_base(), {{"w1", "v"}, {"w2", "v"}},
                  {{"a", "w1", "w2", "e1"}, {"b", "w2", "w1", "e2"},
                   {"c", "w1", "w1", "f2"}, {"d", "w2", "w2", "f1"}});
}

RepGraph six_loop_rep() {
  return make_rep(six_loop_base(), {{"w", "v"}},
                  {{"a", "w", "w", "f1"}, {"b", "w", "w", "g2"},
                   {"c", "w", "w", "e2"}, {"d", "w", "w", "h1"}});
}

Truncated ck_line() {
  RepGraph r = make_rep(ck_rose_base(), {{"x0", "v"}, {"x1", "v"}, {"x2", "v"}, {"y1", "v"}},
                        {{"a", "x0", "x1", "e"}, {"b", "x1", "x2", "e"}, {"c", "y1", "x1", "f"}});
  VertexSet frontier{r.shape().vertex("x0"), r.shape().vertex("x2"), r.shape().vertex("y1")};
  return {std::move(r), std::move(frontier)};
}

Truncated ck_loop() {
  RepGraph r = make_rep(ck_rose_base(), {{"a", "v"}, {"b", "v"}, {"c", "v"}, {"d", "v"}},
                        {{"l", "a", "a", "e"}, {"m", "b", "a", "f"},
                         {"n", "c", "b", "e"}, {"o", "d", "b", "f"}});
  VertexSet frontier{r.shape().vertex("c"), r.shape().vertex("d")};
  return {std::move(r), std::move(frontier)};
}

std::vector<Named> finite_fixtures() {
  return {{"f5", f5()}, {"f6", f6()}, {"f7", f7()}, {"fixture_d", fixture_d()},
          {"six_loop", six_loop_rep()}};
}

}  // namespace bsg::test
