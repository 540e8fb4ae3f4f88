#include "bsg/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bsg/error.hpp"

namespace bsg {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> lex(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t n = 1; std::getline(in, raw); ++n) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{n, {}};
    for (std::string w; words >> w;) line.tokens.push_back(std::move(w));
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

class Parser {
public:
  Parser(std::string_view text, std::string origin) : lines_(lex(text)), origin_(std::move(origin)) {}

  [[noreturn]] void fail(const Line& line, const std::string& msg) const {
    throw Error(ErrorKind::Parse, origin_ + ":" + std::to_string(line.number) + ": " + msg);
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, origin_ + ": " + msg);
  }

  // The header keyword, optionally followed by a single "base=<ref>".
  std::string header(const std::string& keyword, bool with_base) {
    if (lines_.empty()) fail("empty input, expected " + keyword);
    const Line& first = lines_.front();
    if (first.tokens[0] != keyword) fail(first, "expected " + keyword + ", found '" + first.tokens[0] + "'");
    std::string ref;
    if (with_base) {
      if (first.tokens.size() != 2 || first.tokens[1].rfind("base=", 0) != 0 ||
          first.tokens[1].size() == 5) {
        fail(first, keyword + " needs a single base=<file> argument");
      }
      ref = first.tokens[1].substr(5);
    } else if (first.tokens.size() != 1) {
      fail(first, keyword + " takes no arguments");
    }
    const Line& last = lines_.back();
    if (lines_.size() < 2 || last.tokens[0] != "END") fail("missing END");
    if (last.tokens.size() != 1) fail(last, "END takes no arguments");
    for (std::size_t i = 1; i + 1 < lines_.size(); ++i) {
      if (lines_[i].tokens[0] == "END") fail(lines_[i], "content after END");
    }
    return ref;
  }

  // Body lines with the given keyword.
  std::vector<const Line*> body(const std::string& keyword) const {
    std::vector<const Line*> out;
    for (std::size_t i = 1; i + 1 < lines_.size(); ++i) {
      if (lines_[i].tokens[0] == keyword) out.push_back(&lines_[i]);
    }
    return out;
  }

  void check_keywords(std::initializer_list<std::string_view> allowed) const {
    for (std::size_t i = 1; i + 1 < lines_.size(); ++i) {
      const std::string& k = lines_[i].tokens[0];
      if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
        fail(lines_[i], "unknown keyword '" + k + "'");
      }
    }
  }

  void arity(const Line& line, std::size_t n, const char* usage) const {
    if (line.tokens.size() != n) fail(line, std::string("expected '") + usage + "'");
  }

  void arrow(const Line& line, std::size_t at, const char* usage) const {
    if (line.tokens[at] != "->") fail(line, std::string("expected '") + usage + "'");
  }

  VertexId vertex(const Line& line, const Graph& g, const std::string& name, const char* what) const {
    if (auto v = g.find_vertex(name)) return *v;
    fail(line, std::string("unknown ") + what + " '" + name + "'");
  }

  EdgeId edge(const Line& line, const Graph& g, const std::string& name, const char* what) const {
    if (auto e = g.find_edge(name)) return *e;
    fail(line, std::string("unknown ") + what + " '" + name + "'");
  }

private:
  std::vector<Line> lines_;
  std::string origin_;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

BiSepGraph parse_bisep(std::string_view text, const std::string& origin) {
  Parser p(text, origin);
  p.header("GRAPH", false);
  p.check_keywords({"VERTEX", "EDGE", "CBLOCK", "DBLOCK"});

  Graph g;
  for (const Line* line : p.body("VERTEX")) {
    p.arity(*line, 2, "VERTEX <name>");
    if (g.find_vertex(line->tokens[1])) p.fail(*line, "duplicate vertex '" + line->tokens[1] + "'");
    g.add_vertex(line->tokens[1]);
  }
  for (const Line* line : p.body("EDGE")) {
    p.arity(*line, 4, "EDGE <name> <src> <dst>");
    if (g.find_edge(line->tokens[1])) p.fail(*line, "duplicate edge '" + line->tokens[1] + "'");
    g.add_edge(line->tokens[1], g.find_vertex(line->tokens[2]).value_or(kNoVertex),
               g.find_vertex(line->tokens[3]).value_or(kNoVertex));
  }

  BiSepGraph b(std::move(g));
  for (const char* kind : {"CBLOCK", "DBLOCK"}) {
    for (const Line* line : p.body(kind)) {
      if (line->tokens.size() < 2) p.fail(*line, std::string("expected '") + kind + " <vertex> <edge>...'");
      const Graph& bg = b.graph();
      VertexId owner = p.vertex(*line, bg, line->tokens[1], "vertex");
      std::vector<EdgeId> edges;
      for (std::size_t i = 2; i < line->tokens.size(); ++i) {
        edges.push_back(p.edge(*line, bg, line->tokens[i], "edge"));
      }
      if (kind[0] == 'C') {
        b.add_cblock(owner, std::move(edges));
      } else {
        b.add_dblock(owner, std::move(edges));
      }
    }
  }
  return b;
}

std::string format_bisep(const BiSepGraph& b) {
  const Graph& g = b.graph();
  auto vname = [&](VertexId v) { return g.has_vertex(v) ? g.name(v) : std::string("?"); };
  std::string out = "GRAPH\n";
  for (VertexId v : g.vertices()) out += "VERTEX " + g.name(v) + "\n";
  for (EdgeId e : g.edges()) {
    out += "EDGE " + g.name(e) + " " + vname(g.src(e)) + " " + vname(g.dst(e)) + "\n";
  }
  auto block_line = [&](const char* kind, const Block& blk) {
    std::string line = std::string(kind) + " " + g.name(blk.owner);
    for (EdgeId e : blk.edges) line += " " + g.name(e);
    return line + "\n";
  };
  for (CBlockId x : b.cblocks()) out += block_line("CBLOCK", b.cblock(x));
  for (DBlockId y : b.dblocks()) out += block_line("DBLOCK", b.dblock(y));
  return out + "END\n";
}

RepFile parse_repgraph(std::string_view text, const std::string& origin, const BaseLoader& load) {
  Parser p(text, origin);
  std::string ref = p.header("REPGRAPH", true);
  p.check_keywords({"RVERTEX", "REDGE", "FRONTIER"});
  BasePtr base = load(ref);
  const Graph& e = base->graph();

  Graph shape;
  GraphHom labeling;
  for (const Line* line : p.body("RVERTEX")) {
    p.arity(*line, 4, "RVERTEX <name> -> <base-vertex>");
    p.arrow(*line, 2, "RVERTEX <name> -> <base-vertex>");
    if (shape.find_vertex(line->tokens[1])) p.fail(*line, "duplicate vertex '" + line->tokens[1] + "'");
    labeling.vmap.push_back(p.vertex(*line, e, line->tokens[3], "base vertex"));
    shape.add_vertex(line->tokens[1]);
  }
  for (const Line* line : p.body("REDGE")) {
    p.arity(*line, 6, "REDGE <name> <src> <dst> -> <base-edge>");
    p.arrow(*line, 4, "REDGE <name> <src> <dst> -> <base-edge>");
    if (shape.find_edge(line->tokens[1])) p.fail(*line, "duplicate edge '" + line->tokens[1] + "'");
    VertexId s = p.vertex(*line, shape, line->tokens[2], "vertex");
    VertexId d = p.vertex(*line, shape, line->tokens[3], "vertex");
    labeling.emap.push_back(p.edge(*line, e, line->tokens[5], "base edge"));
    shape.add_edge(line->tokens[1], s, d);
  }
  VertexSet frontier;
  for (const Line* line : p.body("FRONTIER")) {
    for (std::size_t i = 1; i < line->tokens.size(); ++i) {
      frontier.insert(p.vertex(*line, shape, line->tokens[i], "vertex"));
    }
  }
  return RepFile{RepGraph(std::move(base), std::move(shape), std::move(labeling)),
                 std::move(frontier), std::move(ref)};
}

std::string format_repgraph(const RepGraph& r, const VertexSet& frontier,
                            const std::string& base_ref) {
  const Graph& f = r.shape();
  const Graph& e = r.base_graph();
  std::string out = "REPGRAPH base=" + base_ref + "\n";
  for (VertexId w : f.vertices()) out += "RVERTEX " + f.name(w) + " -> " + e.name(r.label(w)) + "\n";
  for (EdgeId x : f.edges()) {
    out += "REDGE " + f.name(x) + " " + f.name(f.src(x)) + " " + f.name(f.dst(x)) + " -> " +
           e.name(r.label(x)) + "\n";
  }
  if (!frontier.empty()) {
    out += "FRONTIER";
    for (VertexId w : frontier) out += " " + f.name(w);
    out += "\n";
  }
  return out + "END\n";
}

BranchingFile parse_branching(std::string_view text, const std::string& origin,
                              const BaseLoader& load) {
  Parser p(text, origin);
  std::string ref = p.header("BRANCHING", true);
  p.check_keywords({"POINT", "MAP"});
  BasePtr base = load(ref);
  const Graph& e = base->graph();

  BranchingSystem s(base);
  for (const Line* line : p.body("POINT")) {
    p.arity(*line, 4, "POINT <name> in <vertex>");
    if (line->tokens[2] != "in") p.fail(*line, "expected 'POINT <name> in <vertex>'");
    VertexId v = p.vertex(*line, e, line->tokens[3], "base vertex");
    PointId q = s.find_point(line->tokens[1]).value_or(point_at(s.num_points()));
    if (index(q) == s.num_points()) s.add_point(line->tokens[1]);
    s.assign(q, v);
  }
  for (const Line* line : p.body("MAP")) {
    p.arity(*line, 5, "MAP <edge> <point> -> <point>");
    p.arrow(*line, 3, "MAP <edge> <point> -> <point>");
    EdgeId x = p.edge(*line, e, line->tokens[1], "base edge");
    auto from = s.find_point(line->tokens[2]);
    auto to = s.find_point(line->tokens[4]);
    if (!from) p.fail(*line, "unknown point '" + line->tokens[2] + "'");
    if (!to) p.fail(*line, "unknown point '" + line->tokens[4] + "'");
    s.add_map(x, *from, *to);
  }
  return BranchingFile{std::move(s), std::move(ref)};
}

std::string format_branching(const BranchingSystem& s, const std::string& base_ref) {
  const Graph& e = s.base().graph();
  std::string out = "BRANCHING base=" + base_ref + "\n";
  for (PointId q : s.points()) {
    for (VertexId v : e.vertices()) {
      if (s.qv(v).count(q)) out += "POINT " + s.name(q) + " in " + e.name(v) + "\n";
    }
  }
  for (EdgeId x : e.edges()) {
    for (const auto& [from, to] : s.rho(x)) {
      out += "MAP " + e.name(x) + " " + s.name(from) + " -> " + s.name(to) + "\n";
    }
  }
  return out + "END\n";
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error(ErrorKind::Io, "write failed for '" + path.string() + "'");
}

namespace {

BaseLoader relative_to(const std::filesystem::path& file) {
  return [dir = file.parent_path()](const std::string& ref) -> BasePtr {
    return std::make_shared<const BiSepGraph>(read_bisep(dir / ref));
  };
}

}  // namespace

BiSepGraph read_bisep(const std::filesystem::path& path) {
  return parse_bisep(read_text(path), path.string());
}

RepFile read_repgraph(const std::filesystem::path& path) {
  return parse_repgraph(read_text(path), path.string(), relative_to(path));
}

BranchingFile read_branching(const std::filesystem::path& path) {
  return parse_branching(read_text(path), path.string(), relative_to(path));
}

std::string to_dot(const Graph& g) {
  std::string out = "digraph G {\n";
  for (VertexId v : g.vertices()) out += "  " + quote(g.name(v)) + ";\n";
  for (EdgeId e : g.edges()) {
    if (!g.has_vertex(g.src(e)) || !g.has_vertex(g.dst(e))) continue;
    out += "  " + quote(g.name(g.src(e))) + " -> " + quote(g.name(g.dst(e))) +
           " [label=" + quote(g.name(e)) + "];\n";
  }
  return out + "}\n";
}

std::string to_dot(const RepGraph& r, const VertexSet& frontier) {
  const Graph& f = r.shape();
  const Graph& e = r.base_graph();
  std::string out = "digraph F {\n";
  for (VertexId w : f.vertices()) {
    out += "  " + quote(f.name(w)) + " [label=" + quote(f.name(w) + ":" + e.name(r.label(w)));
    if (frontier.count(w)) out += ", style=dashed";
    out += "];\n";
  }
  for (EdgeId x : f.edges()) {
    out += "  " + quote(f.name(f.src(x))) + " -> " + quote(f.name(f.dst(x))) +
           " [label=" + quote(f.name(x) + ":" + e.name(r.label(x))) + "];\n";
  }
  return out + "}\n";
}

std::string to_dot(const BranchingSystem& s) {
  const Graph& e = s.base().graph();
  std::string out = "digraph S {\n";
  for (PointId q : s.points()) {
    std::string label = s.name(q);
    if (auto v = s.vertex_of(q)) label += ":" + e.name(*v);
    out += "  " + quote(s.name(q)) + " [label=" + quote(label) + "];\n";
  }
  for (EdgeId x : e.edges()) {
    for (const auto& [from, to] : s.rho(x)) {
      out += "  " + quote(s.name(from)) + " -> " + quote(s.name(to)) +
             " [label=" + quote(e.name(x)) + "];\n";
    }
  }
  return out + "}\n";
}

}  // namespace bsg
