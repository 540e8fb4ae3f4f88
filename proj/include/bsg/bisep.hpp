#ifndef BSG_BISEP_HPP
#define BSG_BISEP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bsg/algebra.hpp"
#include "bsg/graph.hpp"
#include "bsg/report.hpp"

namespace bsg {

enum class CBlockId : std::uint32_t {};
enum class DBlockId : std::uint32_t {};

constexpr std::size_t index(CBlockId x) noexcept { return static_cast<std::size_t>(x); }
constexpr std::size_t index(DBlockId y) noexcept { return static_cast<std::size_t>(y); }

struct Block {
  VertexId owner{};
  std::vector<EdgeId> edges;

  friend bool operator==(const Block&, const Block&) = default;
};

// Bi-separated graph (E, C, D): C-blocks partition out-stars, D-blocks
// partition in-stars, and a C-block meets a D-block in at most one edge.
// Block ids follow insertion (file) order. The invariants are not enforced on
// insertion; validate_bisep reports them.
class BiSepGraph {
public:
  BiSepGraph() = default;
  explicit BiSepGraph(Graph g) : graph_(std::move(g)) { ensure_indices(); }

  const Graph& graph() const noexcept { return graph_; }

  // Throws UnknownVertex / UnknownEdge for ids outside the graph.
  CBlockId add_cblock(VertexId owner, std::vector<EdgeId> edges);
  DBlockId add_dblock(VertexId owner, std::vector<EdgeId> edges);

  std::size_t num_cblocks() const noexcept { return cblocks_.size(); }
  std::size_t num_dblocks() const noexcept { return dblocks_.size(); }
  bool has_blocks() const noexcept { return !cblocks_.empty() || !dblocks_.empty(); }

  // Throw UnknownBlock.
  const Block& cblock(CBlockId x) const;
  const Block& dblock(DBlockId y) const;

  std::vector<CBlockId> cblocks() const;
  std::vector<DBlockId> dblocks() const;
  const std::vector<CBlockId>& cblocks_at(VertexId v) const { return c_at_.at(index(v)); }
  const std::vector<DBlockId>& dblocks_at(VertexId v) const { return d_at_.at(index(v)); }

  // First registered block containing e.
  std::optional<CBlockId> cblock_of(EdgeId e) const { return c_of_.at(index(e)); }
  std::optional<DBlockId> dblock_of(EdgeId e) const { return d_of_.at(index(e)); }

  friend bool operator==(const BiSepGraph& a, const BiSepGraph& b) {
    return a.graph_ == b.graph_ && a.cblocks_ == b.cblocks_ && a.dblocks_ == b.dblocks_;
  }

private:
  void ensure_indices();

  Graph graph_;
  std::vector<Block> cblocks_;
  std::vector<Block> dblocks_;
  std::vector<std::vector<CBlockId>> c_at_;
  std::vector<std::vector<DBlockId>> d_at_;
  std::vector<std::optional<CBlockId>> c_of_;
  std::vector<std::optional<DBlockId>> d_of_;
};

// "{e1,f1}"
std::string format_block(const Graph& g, const Block& b);

ValidationReport validate_bisep(const BiSepGraph& b);

// XY = YX: the common edge, or nullopt for the zero marker. Throws UnknownBlock.
std::optional<EdgeId> block_pair(const BiSepGraph& b, CBlockId x, DBlockId y);

// C_v = {s^{-1}(v)} for every non-sink, D_v = {{f} : f in r^{-1}(v)}.
BiSepGraph ck_biseparation(const Graph& e);

struct Relation {
  enum class Kind { L1, L2 };
  Kind kind{};
  std::uint32_t first = 0;   // X (L1) or Y (L2)
  std::uint32_t second = 0;  // X' (L1) or Y' (L2)
  AlgebraElement element;    // lhs - rhs; annihilated in L(E, C, D)
};

// (L1) for every ordered pair (X, X') of C-blocks, then (L2) for every
// ordered pair (Y, Y') of D-blocks, in block-id order:
//   sum_Y (XY)(YX')* - delta_{XX'} s(X)
//   sum_X (YX)*(XY') - delta_{YY'} r(Y)
std::vector<Relation> relation_elements(const BiSepGraph& b);

std::string describe(const BiSepGraph& b, const Relation& rel);

}  // namespace bsg

#endif  // BSG_BISEP_HPP
