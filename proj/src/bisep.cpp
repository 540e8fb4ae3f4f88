#include "bsg/bisep.hpp"

#include <algorithm>

#include "bsg/error.hpp"

namespace bsg {

namespace {

void check_block(const Graph& g, VertexId owner, const std::vector<EdgeId>& edges) {
  if (!g.has_vertex(owner)) throw Error(ErrorKind::UnknownVertex, "block owner");
  for (EdgeId e : edges) {
    if (!g.has_edge(e)) throw Error(ErrorKind::UnknownEdge, "block member");
  }
}

}  // namespace

void BiSepGraph::ensure_indices() {
  c_at_.resize(graph_.num_vertices());
  d_at_.resize(graph_.num_vertices());
  c_of_.resize(graph_.num_edges());
  d_of_.resize(graph_.num_edges());
}

CBlockId BiSepGraph::add_cblock(VertexId owner, std::vector<EdgeId> edges) {
  ensure_indices();
  check_block(graph_, owner, edges);
  const auto id = static_cast<CBlockId>(cblocks_.size());
  for (EdgeId e : edges) {
    if (!c_of_[index(e)]) c_of_[index(e)] = id;
  }
  c_at_[index(owner)].push_back(id);
  cblocks_.push_back(Block{owner, std::move(edges)});
  return id;
}

DBlockId BiSepGraph::add_dblock(VertexId owner, std::vector<EdgeId> edges) {
  ensure_indices();
  check_block(graph_, owner, edges);
  const auto id = static_cast<DBlockId>(dblocks_.size());
  for (EdgeId e : edges) {
    if (!d_of_[index(e)]) d_of_[index(e)] = id;
  }
  d_at_[index(owner)].push_back(id);
  dblocks_.push_back(Block{owner, std::move(edges)});
  return id;
}

const Block& BiSepGraph::cblock(CBlockId x) const {
  if (index(x) >= cblocks_.size()) throw Error(ErrorKind::UnknownBlock, "C-block");
  return cblocks_[index(x)];
}

const Block& BiSepGraph::dblock(DBlockId y) const {
  if (index(y) >= dblocks_.size()) throw Error(ErrorKind::UnknownBlock, "D-block");
  return dblocks_[index(y)];
}

std::vector<CBlockId> BiSepGraph::cblocks() const {
  std::vector<CBlockId> out;
  for (std::size_t i = 0; i < cblocks_.size(); ++i) out.push_back(static_cast<CBlockId>(i));
  return out;
}

std::vector<DBlockId> BiSepGraph::dblocks() const {
  std::vector<DBlockId> out;
  for (std::size_t i = 0; i < dblocks_.size(); ++i) out.push_back(static_cast<DBlockId>(i));
  return out;
}

std::string format_block(const Graph& g, const Block& b) {
  std::string out = "{";
  for (std::size_t i = 0; i < b.edges.size(); ++i) {
    if (i > 0) out += ',';
    out += g.name(b.edges[i]);
  }
  return out + "}";
}

namespace {

// `side` is "C" or "D"; `star` gives s^{-1} or r^{-1}; `end` gives s or r.
void validate_side(const Graph& g, const std::vector<Block>& blocks, const char* side,
                   const std::vector<EdgeId>& (Graph::*star)(VertexId) const,
                   VertexId (Graph::*end)(EdgeId) const, ValidationReport& report) {
  std::vector<std::size_t> hits(g.num_edges(), 0);
  for (const Block& blk : blocks) {
    const std::string name = std::string(side) + "-block " + format_block(g, blk);
    if (blk.edges.empty()) report.add(name + " at '" + g.name(blk.owner) + "' is empty");
    for (EdgeId e : blk.edges) {
      ++hits[index(e)];
      if ((g.*end)(e) != blk.owner) {
        report.add(name + " at '" + g.name(blk.owner) + "' contains edge '" + g.name(e) +
                   "' from another star");
      }
    }
  }
  for (VertexId v : g.vertices()) {
    for (EdgeId e : (g.*star)(v)) {
      if (hits[index(e)] == 0) {
        report.add(std::string(side) + "-blocks at '" + g.name(v) + "' miss edge '" +
                   g.name(e) + "'");
      } else if (hits[index(e)] > 1) {
        report.add(std::string(side) + "-blocks at '" + g.name(v) + "' are not a partition: '" +
                   g.name(e) + "' occurs " + std::to_string(hits[index(e)]) + " times");
      }
    }
  }
}

std::size_t intersection_size(const Block& x, const Block& y) {
  std::size_t n = 0;
  for (EdgeId e : x.edges) n += static_cast<std::size_t>(std::count(y.edges.begin(), y.edges.end(), e));
  return n;
}

}  // namespace

ValidationReport validate_bisep(const BiSepGraph& b) {
  const Graph& g = b.graph();
  ValidationReport report = validate_graph(g);
  if (!report.ok()) return report;

  std::vector<Block> cs, ds;
  for (CBlockId x : b.cblocks()) cs.push_back(b.cblock(x));
  for (DBlockId y : b.dblocks()) ds.push_back(b.dblock(y));
  validate_side(g, cs, "C", &Graph::out_edges, &Graph::src, report);
  validate_side(g, ds, "D", &Graph::in_edges, &Graph::dst, report);

  for (const Block& x : cs) {
    for (const Block& y : ds) {
      if (std::size_t n = intersection_size(x, y); n > 1) {
        report.add("C-block " + format_block(g, x) + " meets D-block " + format_block(g, y) +
                   " in " + std::to_string(n) + " edges");
      }
    }
  }
  return report;
}

std::optional<EdgeId> block_pair(const BiSepGraph& b, CBlockId x, DBlockId y) {
  const Block& cx = b.cblock(x);
  const Block& dy = b.dblock(y);
  for (EdgeId e : cx.edges) {
    if (std::find(dy.edges.begin(), dy.edges.end(), e) != dy.edges.end()) return e;
  }
  return std::nullopt;
}

BiSepGraph ck_biseparation(const Graph& e) {
  BiSepGraph out(e);
  for (VertexId v : e.vertices()) {
    if (!e.out_edges(v).empty()) out.add_cblock(v, e.out_edges(v));
  }
  for (VertexId v : e.vertices()) {
    for (EdgeId f : e.in_edges(v)) out.add_dblock(v, {f});
  }
  return out;
}

std::vector<Relation> relation_elements(const BiSepGraph& b) {
  const Graph& g = b.graph();
  std::vector<Relation> out;

  for (CBlockId x : b.cblocks()) {
    for (CBlockId x2 : b.cblocks()) {
      Relation rel{Relation::Kind::L1, static_cast<std::uint32_t>(x),
                   static_cast<std::uint32_t>(x2), {}};
      for (DBlockId y : b.dblocks()) {
        auto e = block_pair(b, x, y);
        auto e2 = block_pair(b, x2, y);
        if (!e || !e2) continue;
        rel.element.add(Walk{g.src(*e), {fwd(*e), rev(*e2)}}, 1);
      }
      if (x == x2) rel.element.add(Walk::trivial(b.cblock(x).owner), -1);
      out.push_back(std::move(rel));
    }
  }

  for (DBlockId y : b.dblocks()) {
    for (DBlockId y2 : b.dblocks()) {
      Relation rel{Relation::Kind::L2, static_cast<std::uint32_t>(y),
                   static_cast<std::uint32_t>(y2), {}};
      for (CBlockId x : b.cblocks()) {
        auto e = block_pair(b, x, y);
        auto e2 = block_pair(b, x, y2);
        if (!e || !e2) continue;
        rel.element.add(Walk{g.dst(*e), {rev(*e), fwd(*e2)}}, 1);
      }
      if (y == y2) rel.element.add(Walk::trivial(b.dblock(y).owner), -1);
      out.push_back(std::move(rel));
    }
  }
  return out;
}

std::string describe(const BiSepGraph& b, const Relation& rel) {
  const Graph& g = b.graph();
  if (rel.kind == Relation::Kind::L1) {
    return "L1(" + format_block(g, b.cblock(static_cast<CBlockId>(rel.first))) + "," +
           format_block(g, b.cblock(static_cast<CBlockId>(rel.second))) + ")";
  }
  return "L2(" + format_block(g, b.dblock(static_cast<DBlockId>(rel.first))) + "," +
         format_block(g, b.dblock(static_cast<DBlockId>(rel.second))) + ")";
}

}  // namespace bsg
