#include <algorithm>
#include <map>
#include <limits>
#include <set>

#include "bsg/error.hpp"
#include "bsg/repgraph.hpp"

namespace bsg {

Partition Partition::discrete(std::size_t n) {
  Partition p;
  p.block_of_.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.block_of_[i] = i;
  p.num_blocks_ = n;
  return p;
}

Partition Partition::from_assignment(const std::vector<std::size_t>& block_of) {
  if (block_of.empty()) throw Error(ErrorKind::PartitionMismatch, "empty assignment");
  // Renumber by first occurrence.
  std::map<std::size_t, std::size_t> renumber;
  Partition p;
  p.block_of_.reserve(block_of.size());
  for (std::size_t label : block_of) {
    auto [it, inserted] = renumber.try_emplace(label, renumber.size());
    p.block_of_.push_back(it->second);
  }
  p.num_blocks_ = renumber.size();
  return p;
}

Partition Partition::from_blocks(std::size_t n, const std::vector<std::vector<VertexId>>& blocks) {
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> assignment(n, unset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error(ErrorKind::PartitionMismatch, "empty block");
    for (VertexId v : blocks[b]) {
      if (index(v) >= n) throw Error(ErrorKind::PartitionMismatch, "vertex outside the shape");
      if (assignment[index(v)] != unset) {
        throw Error(ErrorKind::PartitionMismatch, "blocks are not disjoint");
      }
      assignment[index(v)] = b;
    }
  }
  if (std::find(assignment.begin(), assignment.end(), unset) != assignment.end()) {
    throw Error(ErrorKind::PartitionMismatch, "blocks do not cover the vertex set");
  }
  return from_assignment(assignment);
}

std::vector<std::vector<VertexId>> Partition::blocks() const {
  std::vector<std::vector<VertexId>> out(num_blocks_);
  for (std::size_t i = 0; i < block_of_.size(); ++i) out[block_of_[i]].push_back(vertex_at(i));
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.num_vertices() != num_vertices()) return false;
  std::vector<std::optional<std::size_t>> image(num_blocks_);
  for (std::size_t i = 0; i < block_of_.size(); ++i) {
    auto& slot = image[block_of_[i]];
    if (!slot) {
      slot = coarser.block_of_[i];
    } else if (*slot != coarser.block_of_[i]) {
      return false;
    }
  }
  return true;
}

namespace {

std::uint64_t encode(Letter x) {
  return 2 * static_cast<std::uint64_t>(index(x.edge)) + (x.reversed() ? 1 : 0);
}

}  // namespace

Partition compute_sim(const RepGraph& r) {
  const Graph& f = r.shape();
  const std::size_t n = f.num_vertices();
  if (n == 0) return Partition::discrete(0);

  std::vector<std::vector<Letter>> letters(n);
  for (VertexId w : f.vertices()) letters[index(w)] = r.enabled_letters(w);

  // Signature: (current block, [letter, successor block]...). The first round
  // uses the label in place of a block, which splits by (label, enabled set).
  std::vector<std::size_t> block(n);
  for (VertexId w : f.vertices()) block[index(w)] = index(r.label(w));
  std::size_t count = 0;
  bool first = true;
  while (true) {
    std::map<std::vector<std::uint64_t>, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (VertexId w : f.vertices()) {
      std::vector<std::uint64_t> sig{block[index(w)]};
      for (Letter x : letters[index(w)]) {
        sig.push_back(encode(x));
        sig.push_back(first ? 0 : block[index(*r.step(w, x))]);
      }
      auto [it, inserted] = ids.try_emplace(std::move(sig), ids.size());
      next[index(w)] = it->second;
    }
    block = std::move(next);
    if (!first && ids.size() == count) break;
    count = ids.size();
    first = false;
  }
  return Partition::from_assignment(block);
}

bool is_irreducible(const RepGraph& r) { return compute_sim(r).is_discrete(); }

bool check_admissible(const RepGraph& r, const Partition& approx) {
  const Graph& f = r.shape();
  if (approx.num_vertices() != f.num_vertices()) {
    throw Error(ErrorKind::PartitionMismatch, "partition does not cover the shape vertices");
  }
  if (!approx.refines(compute_sim(r))) return false;

  // Within a block, every letter must lead into a single block.
  std::map<std::pair<std::size_t, Letter>, std::size_t> target;
  for (VertexId w : f.vertices()) {
    for (Letter x : r.enabled_letters(w)) {
      const std::size_t to = approx.block_of(*r.step(w, x));
      auto [it, inserted] = target.try_emplace({approx.block_of(w), x}, to);
      if (!inserted && it->second != to) return false;
    }
  }
  return true;
}

QuotientResult quotient(const RepGraph& r, const Partition& approx) {
  if (!check_admissible(r, approx)) throw Error(ErrorKind::NotAdmissible, "quotient");
  const Graph& f = r.shape();

  // Vertex classes, each named after its smallest member.
  std::vector<std::optional<VertexId>> rep_of_block(approx.num_blocks());
  for (VertexId w : f.vertices_by_name()) {
    auto& slot = rep_of_block[approx.block_of(w)];
    if (!slot) slot = w;
  }
  std::vector<std::size_t> block_order(approx.num_blocks());
  for (std::size_t i = 0; i < block_order.size(); ++i) block_order[i] = i;
  std::sort(block_order.begin(), block_order.end(), [&](std::size_t a, std::size_t b) {
    return f.name(*rep_of_block[a]) < f.name(*rep_of_block[b]);
  });

  Graph g;
  GraphHom labeling;
  std::vector<VertexId> class_vertex(approx.num_blocks());
  for (std::size_t b : block_order) {
    class_vertex[b] = g.add_vertex(f.name(*rep_of_block[b]));
    labeling.vmap.push_back(r.label(*rep_of_block[b]));
  }

  // Edge classes: f ~ g iff same source class and same label.
  std::map<std::pair<std::size_t, EdgeId>, EdgeId> class_rep;
  for (EdgeId x : f.edges_by_name()) {
    class_rep.try_emplace({approx.block_of(f.src(x)), r.label(x)}, x);
  }
  std::vector<EdgeId> reps;
  for (const auto& [key, x] : class_rep) reps.push_back(x);
  std::sort(reps.begin(), reps.end(), [&](EdgeId a, EdgeId b) { return f.name(a) < f.name(b); });

  std::map<std::pair<std::size_t, EdgeId>, EdgeId> class_edge;
  for (EdgeId x : reps) {
    EdgeId y = g.add_edge(f.name(x), class_vertex[approx.block_of(f.src(x))],
                          class_vertex[approx.block_of(f.dst(x))]);
    labeling.emap.push_back(r.label(x));
    class_edge.emplace(std::make_pair(approx.block_of(f.src(x)), r.label(x)), y);
  }

  RGMorphism projection;
  for (VertexId w : f.vertices()) projection.vmap.push_back(class_vertex[approx.block_of(w)]);
  for (EdgeId x : f.edges()) {
    projection.emap.push_back(class_edge.at({approx.block_of(f.src(x)), r.label(x)}));
  }
  return QuotientResult{RepGraph(r.base_ptr(), std::move(g), std::move(labeling)),
                        std::move(projection)};
}

QuotientResult attracting_quotient(const RepGraph& r) { return quotient(r, compute_sim(r)); }

std::optional<Walk> distinguishing_walk(const RepGraph& r, VertexId u, VertexId v) {
  const Graph& f = r.shape();
  const Graph& e = r.base_graph();
  if (!f.has_vertex(u) || !f.has_vertex(v)) {
    throw Error(ErrorKind::UnknownVertex, "distinguishing_walk");
  }
  if (u == v) return std::nullopt;
  if (r.label(u) != r.label(v)) return Walk::trivial(r.label(u));

  auto by_name = [&](Letter a, Letter b) {
    if (a.edge != b.edge) return e.name(a.edge) < e.name(b.edge);
    return a.direction < b.direction;
  };

  // Breadth-first over unordered pairs; parent links rebuild the walk.
  struct Node {
    VertexId a, b;
    std::size_t parent;
    Letter via;
  };
  std::vector<Node> nodes{{u, v, 0, {}}};
  std::set<std::pair<VertexId, VertexId>> seen{std::minmax(u, v)};

  auto rebuild = [&](std::size_t i, Letter last) {
    std::vector<Letter> letters{last};
    for (; i != 0; i = nodes[i].parent) letters.push_back(nodes[i].via);
    std::reverse(letters.begin(), letters.end());
    return Walk{r.label(u), std::move(letters)};
  };

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node cur = nodes[i];
    std::vector<Letter> options = r.enabled_letters(cur.a);
    for (Letter x : r.enabled_letters(cur.b)) options.push_back(x);
    std::sort(options.begin(), options.end(), by_name);
    options.erase(std::unique(options.begin(), options.end()), options.end());
    for (Letter x : options) {
      auto na = r.step(cur.a, x);
      auto nb = r.step(cur.b, x);
      if (na.has_value() != nb.has_value()) return rebuild(i, x);
      if (*na == *nb) continue;
      if (seen.insert(std::minmax(*na, *nb)).second) nodes.push_back({*na, *nb, i, x});
    }
  }
  return std::nullopt;
}

}  // namespace bsg
