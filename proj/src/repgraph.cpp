#include "bsg/repgraph.hpp"

#include <algorithm>
#include <queue>

#include "bsg/error.hpp"

namespace bsg {

RepGraph::RepGraph(BasePtr base, Graph shape, GraphHom labeling)
    : base_(std::move(base)), shape_(std::move(shape)), labeling_(std::move(labeling)) {
  if (!base_) throw Error(ErrorKind::InvalidRepGraph, "missing base");
  if (!is_homomorphism(shape_, labeling_, base_->graph())) {
    throw Error(ErrorKind::InvalidRepGraph, "labeling is not a graph homomorphism");
  }
  out_by_label_.resize(shape_.num_vertices());
  in_by_label_.resize(shape_.num_vertices());
  for (VertexId w : shape_.vertices()) {
    for (EdgeId f : shape_.out_edges(w)) out_by_label_[index(w)].emplace_back(labeling_(f), f);
    for (EdgeId f : shape_.in_edges(w)) in_by_label_[index(w)].emplace_back(labeling_(f), f);
    // Stable so that the first edge wins on (invalid) duplicate labels.
    std::stable_sort(out_by_label_[index(w)].begin(), out_by_label_[index(w)].end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::stable_sort(in_by_label_[index(w)].begin(), in_by_label_[index(w)].end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
  }
}

namespace {

std::optional<EdgeId> lookup(const std::vector<std::pair<EdgeId, EdgeId>>& table, EdgeId e) {
  auto it = std::lower_bound(table.begin(), table.end(), e,
                             [](const auto& entry, EdgeId key) { return entry.first < key; });
  if (it == table.end() || it->first != e) return std::nullopt;
  return it->second;
}

}  // namespace

std::optional<EdgeId> RepGraph::out_edge_labeled(VertexId w, EdgeId e) const {
  return lookup(out_by_label_.at(index(w)), e);
}

std::optional<EdgeId> RepGraph::in_edge_labeled(VertexId w, EdgeId e) const {
  return lookup(in_by_label_.at(index(w)), e);
}

std::optional<VertexId> RepGraph::step(VertexId w, Letter x) const {
  if (x.reversed()) {
    if (auto f = in_edge_labeled(w, x.edge)) return shape_.src(*f);
  } else {
    if (auto f = out_edge_labeled(w, x.edge)) return shape_.dst(*f);
  }
  return std::nullopt;
}

std::vector<Letter> RepGraph::enabled_letters(VertexId w) const {
  std::vector<Letter> out;
  for (const auto& [e, f] : out_by_label_.at(index(w))) out.push_back(fwd(e));
  for (const auto& [e, f] : in_by_label_.at(index(w))) out.push_back(rev(e));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool same_base(const RepGraph& r, const RepGraph& t) {
  return r.base_ptr() == t.base_ptr() || r.base() == t.base();
}

ValidationReport validate_repgraph(const RepGraph& r, const VertexSet& frontier,
                                   Connectivity mode) {
  const Graph& f = r.shape();
  const BiSepGraph& b = r.base();
  const Graph& e = b.graph();
  ValidationReport report = validate_graph(f);
  if (!report.ok()) return report;

  for (VertexId w : frontier) {
    if (!f.has_vertex(w)) report.add("frontier vertex outside the shape");
  }
  if (mode == Connectivity::required && !is_connected(f)) {
    report.add("shape is not connected");
  }

  auto count_in_block = [&](const std::vector<EdgeId>& star, const Block& blk) {
    std::size_t n = 0;
    for (EdgeId x : star) {
      if (std::find(blk.edges.begin(), blk.edges.end(), r.label(x)) != blk.edges.end()) ++n;
    }
    return n;
  };

  for (VertexId w : f.vertices()) {
    if (frontier.contains(w)) continue;
    const VertexId v = r.label(w);
    for (CBlockId x : b.cblocks_at(v)) {
      const Block& blk = b.cblock(x);
      if (std::size_t n = count_in_block(f.out_edges(w), blk); n != 1) {
        report.add("vertex '" + f.name(w) + "' has " + std::to_string(n) +
                   " out-edges labeled in C-block " + format_block(e, blk));
      }
    }
    for (DBlockId y : b.dblocks_at(v)) {
      const Block& blk = b.dblock(y);
      if (std::size_t n = count_in_block(f.in_edges(w), blk); n != 1) {
        report.add("vertex '" + f.name(w) + "' has " + std::to_string(n) +
                   " in-edges labeled in D-block " + format_block(e, blk));
      }
    }
  }
  return report;
}

std::optional<Walk> lift_walk(const RepGraph& r, VertexId w, const Walk& p) {
  if (!r.shape().has_vertex(w)) throw Error(ErrorKind::UnknownVertex, "lift_walk");
  if (!is_walk(r.base_graph(), p)) throw Error(ErrorKind::MalformedWalk, "lift_walk");
  if (p.base != r.label(w)) return std::nullopt;

  Walk q = Walk::trivial(w);
  VertexId at = w;
  for (Letter x : p.letters) {
    std::optional<EdgeId> f =
        x.reversed() ? r.in_edge_labeled(at, x.edge) : r.out_edge_labeled(at, x.edge);
    if (!f) return std::nullopt;
    q.letters.push_back({*f, x.direction});
    at = x.reversed() ? r.shape().src(*f) : r.shape().dst(*f);
  }
  return q;
}

bool is_rg_morphism(const RepGraph& r, const RepGraph& t, const RGMorphism& alpha) {
  if (!is_homomorphism(r.shape(), alpha, t.shape())) return false;
  return compose_homs(t.labeling(), alpha) == r.labeling();
}

namespace {

// Extends alpha from `seed` -> `image` over seed's component. Returns false
// on the first inconsistency.
bool propagate(const RepGraph& r, const RepGraph& t, VertexId seed, VertexId image,
               std::vector<std::optional<VertexId>>& vmap,
               std::vector<std::optional<EdgeId>>& emap) {
  if (r.label(seed) != t.label(image)) return false;
  const Graph& f = r.shape();
  const Graph& g = t.shape();
  vmap[index(seed)] = image;
  std::queue<VertexId> todo;
  todo.push(seed);

  auto assign = [&](EdgeId x, EdgeId y, VertexId next_r, VertexId next_t) {
    if (emap[index(x)] && *emap[index(x)] != y) return false;
    emap[index(x)] = y;
    auto& slot = vmap[index(next_r)];
    if (!slot) {
      slot = next_t;
      todo.push(next_r);
    } else if (*slot != next_t) {
      return false;
    }
    return true;
  };

  while (!todo.empty()) {
    VertexId x = todo.front();
    todo.pop();
    const VertexId at = *vmap[index(x)];
    for (EdgeId a : f.out_edges(x)) {
      auto b = t.out_edge_labeled(at, r.label(a));
      if (!b || !assign(a, *b, f.dst(a), g.dst(*b))) return false;
    }
    for (EdgeId a : f.in_edges(x)) {
      auto b = t.in_edge_labeled(at, r.label(a));
      if (!b || !assign(a, *b, f.src(a), g.src(*b))) return false;
    }
  }
  return true;
}

struct Component {
  VertexId seed;
  std::vector<VertexId> members;
};

std::vector<Component> components_by_seed(const Graph& f) {
  auto comp = connected_components(f);
  std::size_t n = 0;
  for (std::size_t c : comp) n = std::max(n, c + 1);
  std::vector<Component> out(n);
  std::vector<bool> seeded(n, false);
  for (VertexId v : f.vertices_by_name()) {
    auto& c = out[comp[index(v)]];
    if (!seeded[comp[index(v)]]) {
      c.seed = v;
      seeded[comp[index(v)]] = true;
    }
  }
  for (VertexId v : f.vertices()) out[comp[index(v)]].members.push_back(v);
  std::sort(out.begin(), out.end(), [&](const Component& a, const Component& b) {
    return f.name(a.seed) < f.name(b.seed);
  });
  return out;
}

struct Search {
  const RepGraph& r;
  const RepGraph& t;
  bool injective;
  std::vector<Component> components;
  std::vector<VertexId> candidates;  // t's vertices in name order
  std::vector<std::optional<VertexId>> vmap;
  std::vector<std::optional<EdgeId>> emap;
  std::vector<bool> used_v;
  std::vector<bool> used_e;

  bool run(std::size_t k) {
    if (k == components.size()) return true;
    const Component& comp = components[k];
    for (VertexId image : candidates) {
      if (injective && used_v[index(image)]) continue;
      auto saved_v = vmap;
      auto saved_e = emap;
      if (propagate(r, t, comp.seed, image, vmap, emap) && claim(comp) && run(k + 1)) {
        return true;
      }
      release(saved_v, saved_e);
    }
    return false;
  }

  // Marks the component's image as used; fails on a collision. On failure
  // the caller restores the maps and recomputes the used sets.
  bool claim(const Component& comp) {
    if (!injective) return true;
    for (VertexId v : comp.members) {
      VertexId img = *vmap[index(v)];
      if (used_v[index(img)]) return false;
      used_v[index(img)] = true;
      for (EdgeId x : r.shape().out_edges(v)) {
        EdgeId y = *emap[index(x)];
        if (used_e[index(y)]) return false;
        used_e[index(y)] = true;
      }
    }
    return true;
  }

  void release(std::vector<std::optional<VertexId>>& saved_v,
               std::vector<std::optional<EdgeId>>& saved_e) {
    vmap = std::move(saved_v);
    emap = std::move(saved_e);
    if (injective) recompute_used();
  }

  void recompute_used() {
    std::fill(used_v.begin(), used_v.end(), false);
    std::fill(used_e.begin(), used_e.end(), false);
    for (const auto& v : vmap) {
      if (v) used_v[index(*v)] = true;
    }
    for (const auto& e : emap) {
      if (e) used_e[index(*e)] = true;
    }
  }
};

std::optional<RGMorphism> search(const RepGraph& r, const RepGraph& t, bool injective) {
  if (!same_base(r, t)) throw Error(ErrorKind::BaseMismatch, "representation graphs");
  const Graph& f = r.shape();
  const Graph& g = t.shape();
  if (injective && (f.num_vertices() != g.num_vertices() || f.num_edges() != g.num_edges())) {
    return std::nullopt;
  }
  Search s{r,
           t,
           injective,
           components_by_seed(f),
           g.vertices_by_name(),
           std::vector<std::optional<VertexId>>(f.num_vertices()),
           std::vector<std::optional<EdgeId>>(f.num_edges()),
           std::vector<bool>(g.num_vertices(), false),
           std::vector<bool>(g.num_edges(), false)};
  if (!s.run(0)) return std::nullopt;

  RGMorphism alpha;
  for (const auto& v : s.vmap) alpha.vmap.push_back(*v);
  for (const auto& e : s.emap) alpha.emap.push_back(*e);
  return alpha;
}

}  // namespace

std::optional<RGMorphism> find_morphism(const RepGraph& r, const RepGraph& t) {
  return search(r, t, false);
}

std::optional<RGMorphism> find_isomorphism(const RepGraph& r, const RepGraph& t) {
  return search(r, t, true);
}

bool are_isomorphic(const RepGraph& r, const RepGraph& t) {
  return find_isomorphism(r, t).has_value();
}

bool same_component(const RepGraph& r, const RepGraph& t) {
  if (!same_base(r, t)) throw Error(ErrorKind::BaseMismatch, "same_component");
  return are_isomorphic(attracting_quotient(r).rep, attracting_quotient(t).rep);
}

CoverRep universal_cover_rep(const RepGraph& r, VertexId u, std::size_t depth) {
  if (!r.shape().has_vertex(u)) throw Error(ErrorKind::UnknownVertex, "universal_cover_rep");
  UniversalCover cover = universal_cover(r.shape(), u, depth);
  GraphHom labeling = compose_homs(r.labeling(), cover.projection);
  return CoverRep{RepGraph(r.base_ptr(), std::move(cover.tree), std::move(labeling)),
                  std::move(cover.frontier), std::move(cover.projection)};
}

RepGraph pullback(const RepGraph& target, Graph shape, const GraphHom& alpha) {
  return RepGraph(target.base_ptr(), std::move(shape), compose_homs(target.labeling(), alpha));
}

}  // namespace bsg
