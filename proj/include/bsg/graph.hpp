#ifndef BSG_GRAPH_HPP
#define BSG_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bsg/report.hpp"

namespace bsg {

// Dense indices into a Graph. Names are kept by the graph itself.
enum class VertexId : std::uint32_t {};
enum class EdgeId : std::uint32_t {};

inline constexpr VertexId kNoVertex{std::numeric_limits<std::uint32_t>::max()};

constexpr std::size_t index(VertexId v) noexcept { return static_cast<std::size_t>(v); }
constexpr std::size_t index(EdgeId e) noexcept { return static_cast<std::size_t>(e); }
constexpr VertexId vertex_at(std::size_t i) noexcept { return static_cast<VertexId>(i); }
constexpr EdgeId edge_at(std::size_t i) noexcept { return static_cast<EdgeId>(i); }

using VertexSet = std::set<VertexId>;

// Finite directed multigraph E = (E0, E1, s, r).
//
// Built incrementally, then treated as an immutable value. An edge may be
// added with an endpoint that is not a vertex (kNoVertex or out of range) so
// that malformed input can still be represented and reported by
// validate_graph; such endpoints are left out of the star indices.
class Graph {
public:
  Graph() = default;

  VertexId add_vertex(std::string name);
  EdgeId add_edge(std::string name, VertexId src, VertexId dst);

  std::size_t num_vertices() const noexcept { return vertex_names_.size(); }
  std::size_t num_edges() const noexcept { return edge_names_.size(); }

  bool has_vertex(VertexId v) const noexcept { return index(v) < num_vertices(); }
  bool has_edge(EdgeId e) const noexcept { return index(e) < num_edges(); }

  VertexId src(EdgeId e) const { return src_.at(index(e)); }
  VertexId dst(EdgeId e) const { return dst_.at(index(e)); }

  const std::string& name(VertexId v) const { return vertex_names_.at(index(v)); }
  const std::string& name(EdgeId e) const { return edge_names_.at(index(e)); }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;
  // Throwing lookups (UnknownVertex / UnknownEdge).
  VertexId vertex(std::string_view name) const;
  EdgeId edge(std::string_view name) const;

  // s^{-1}(v) and r^{-1}(v), in insertion order.
  const std::vector<EdgeId>& out_edges(VertexId v) const { return out_.at(index(v)); }
  const std::vector<EdgeId>& in_edges(VertexId v) const { return in_.at(index(v)); }

  std::vector<VertexId> vertices() const;
  std::vector<EdgeId> edges() const;
  std::vector<VertexId> vertices_by_name() const;
  std::vector<EdgeId> edges_by_name() const;

  // Structural equality on names and incidences.
  friend bool operator==(const Graph& a, const Graph& b);

private:
  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::vector<VertexId> src_;
  std::vector<VertexId> dst_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  std::map<std::string, VertexId, std::less<>> vertex_index_;
  std::map<std::string, EdgeId, std::less<>> edge_index_;
};

ValidationReport validate_graph(const Graph& g);

bool is_connected(const Graph& g);

// Component number per vertex; components are numbered by smallest vertex id.
std::vector<std::size_t> connected_components(const Graph& g);

// Connected and |E1| = |E0| - 1.
bool is_tree(const Graph& g);

//
// Walks in the double graph
//

enum class Direction : std::uint8_t { forward, reverse };

// An edge of the double graph: e (forward) or e* (reverse).
struct Letter {
  EdgeId edge{};
  Direction direction = Direction::forward;

  bool reversed() const noexcept { return direction == Direction::reverse; }
  Letter inverse() const noexcept {
    return {edge, reversed() ? Direction::forward : Direction::reverse};
  }
  auto operator<=>(const Letter&) const = default;
};

inline Letter fwd(EdgeId e) { return {e, Direction::forward}; }
inline Letter rev(EdgeId e) { return {e, Direction::reverse}; }

VertexId letter_source(const Graph& g, Letter x);
VertexId letter_range(const Graph& g, Letter x);

// A path in the double graph. The base vertex is stored even for nonempty
// walks so that source() is total; the empty letter list is the trivial walk.
struct Walk {
  VertexId base{};
  std::vector<Letter> letters;

  static Walk trivial(VertexId v) { return Walk{v, {}}; }

  bool is_trivial() const noexcept { return letters.empty(); }
  std::size_t length() const noexcept { return letters.size(); }

  auto operator<=>(const Walk&) const = default;
};

inline VertexId source(const Walk& p) { return p.base; }
VertexId range(const Graph& g, const Walk& p);

// Letters exist in g and are composable starting from base.
bool is_walk(const Graph& g, const Walk& p);

// Concatenation; throws NonComposable when range(p) != source(q).
Walk compose_walks(const Graph& g, const Walk& p, const Walk& q);

// p* = x_n* ... x_1*, based at range(p).
Walk reverse_walk(const Graph& g, const Walk& p);

bool is_reduced(const Walk& p);

// Removes spurs ee* and e*e until none remain.
Walk reduce_walk(const Walk& p);

// p * q = reduce(pq); throws NonComposable.
Walk star_compose(const Graph& g, const Walk& p, const Walk& q);

// All walks from u of length <= maxlen, each exactly once, in depth-first
// order with letters tried in (edge id, direction) order.
std::vector<Walk> enumerate_walks(const Graph& g, VertexId u, std::size_t maxlen);

// Walk literals: "@v" for the trivial walk, otherwise "e1.e2*.f1".
std::string format_walk(const Graph& g, const Walk& p);
Walk parse_walk(const Graph& g, std::string_view text);

//
// Homomorphisms and coverings
//

struct GraphHom {
  std::vector<VertexId> vmap;
  std::vector<EdgeId> emap;

  VertexId operator()(VertexId v) const { return vmap.at(index(v)); }
  EdgeId operator()(EdgeId e) const { return emap.at(index(e)); }
  Letter operator()(Letter x) const { return {(*this)(x.edge), x.direction}; }

  friend bool operator==(const GraphHom&, const GraphHom&) = default;
};

GraphHom identity_hom(const Graph& g);

// second o first
GraphHom compose_homs(const GraphHom& second, const GraphHom& first);

// Total maps f -> e compatible with source and range.
bool is_homomorphism(const Graph& f, const GraphHom& phi, const Graph& e);

Walk map_walk(const GraphHom& phi, const Walk& p);

// phi restricted to every out-star and in-star of f is a bijection onto the
// corresponding star in e. Vertices in `exempt` are not checked.
bool check_covering(const Graph& f, const GraphHom& phi, const Graph& e);
bool check_covering(const Graph& f, const GraphHom& phi, const Graph& e,
                    const VertexSet& exempt);

struct UniversalCover {
  Graph tree;
  GraphHom projection;  // tau: tree -> e
  VertexSet frontier;   // reduced walks of length exactly depth
};

// Full subgraph of T(E, v) on reduced walks of length <= depth. Vertices are
// named by their walk literal, edges (p, e) by "(p,e)".
UniversalCover universal_cover(const Graph& e, VertexId v, std::size_t depth);

// Free basis of pi(E, v) read off a breadth-first spanning tree.
std::vector<Walk> fundamental_group_basis(const Graph& e, VertexId v);

}  // namespace bsg

#endif  // BSG_GRAPH_HPP
