#ifndef BSG_IO_HPP
#define BSG_IO_HPP

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>

#include "bsg/bisep.hpp"
#include "bsg/branching.hpp"
#include "bsg/repgraph.hpp"

namespace bsg {

// Text formats are line oriented; '#' starts a comment. Parse errors carry
// "<origin>:<line>: " prefixes and ErrorKind::Parse; unreadable files give
// ErrorKind::Io.

// GRAPH / VERTEX / EDGE / CBLOCK / DBLOCK / END. A plain graph file is a
// bi-separated graph without blocks. EDGE endpoints that are not vertices are
// kept dangling for validate_graph to report.
BiSepGraph parse_bisep(std::string_view text, const std::string& origin = "<input>");
std::string format_bisep(const BiSepGraph& b);

// Resolves the base=<ref> of REPGRAPH and BRANCHING headers.
using BaseLoader = std::function<BasePtr(const std::string& ref)>;

struct RepFile {
  RepGraph rep;
  VertexSet frontier;
  std::string base_ref;
};

// REPGRAPH base=<ref> / RVERTEX n -> v / REDGE n s d -> e / FRONTIER n... / END
RepFile parse_repgraph(std::string_view text, const std::string& origin, const BaseLoader& load);
std::string format_repgraph(const RepGraph& r, const VertexSet& frontier,
                            const std::string& base_ref);

struct BranchingFile {
  BranchingSystem system;
  std::string base_ref;
};

// BRANCHING base=<ref> / POINT q in v / MAP e q -> q' / END
BranchingFile parse_branching(std::string_view text, const std::string& origin,
                              const BaseLoader& load);
std::string format_branching(const BranchingSystem& s, const std::string& base_ref);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

// Base references are resolved relative to the referring file.
BiSepGraph read_bisep(const std::filesystem::path& path);
RepFile read_repgraph(const std::filesystem::path& path);
BranchingFile read_branching(const std::filesystem::path& path);

std::string to_dot(const Graph& g);
// Nodes and edges labelled "name:phi(name)"; frontier nodes are dashed.
std::string to_dot(const RepGraph& r, const VertexSet& frontier = {});
// Nodes "q:v", one edge q -> rho_e(q) labelled e per map entry.
std::string to_dot(const BranchingSystem& s);

}  // namespace bsg

#endif  // BSG_IO_HPP
