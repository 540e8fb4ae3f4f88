#include "bsg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "bsg/error.hpp"
#include "bsg/io.hpp"
#include "bsg/module.hpp"

namespace bsg::cli {

namespace fs = std::filesystem;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> files;
  std::string rep;
  std::optional<std::size_t> depth;
  std::string at;
  std::string vector;
  std::string element;
  std::string format = "text";
  std::string out;
};

class Command {
public:
  Command(const std::string& name, const Options& o) : name_(name), o_(o) {}

  int dispatch();
  const std::string& output() const { return result_; }

private:
  bool machine() const { return o_.format == "machine"; }
  bool dot() const { return o_.format == "dot"; }

  void line(const std::string& s) { result_ += s + "\n"; }
  void kv(const std::string& key, const std::string& value) { line(key + "=" + value); }
  void kv(const std::string& key, std::size_t value) { kv(key, std::to_string(value)); }
  void kv(const std::string& key, bool value) { kv(key, std::string(value ? "true" : "false")); }

  fs::path file_arg(std::size_t i) const {
    if (o_.files.size() <= i) throw Usage(name_ + ": missing input file");
    return o_.files[i];
  }
  fs::path rep_path() const { return o_.rep.empty() ? file_arg(0) : fs::path(o_.rep); }

  // Base reference as seen from where the output will live.
  std::string rebase(const fs::path& input, const std::string& ref) const {
    const fs::path base = fs::absolute(input.parent_path() / ref).lexically_normal();
    const fs::path dir = o_.out.empty() ? fs::current_path()
                                        : fs::absolute(fs::path(o_.out)).parent_path();
    return base.lexically_relative(dir).generic_string();
  }

  bool report(const ValidationReport& r) {
    for (const std::string& issue : r.issues) {
      if (machine()) {
        kv("issue", issue);
      } else {
        line("error: " + issue);
      }
    }
    return r.ok();
  }

  // Base and representation graph pass validation; issues go to the output.
  bool valid(const RepFile& f) {
    if (!report(validate_bisep(f.rep.base()))) return false;
    return report(validate_repgraph(f.rep, f.frontier));
  }

  void emit_rep(const RepGraph& r, const VertexSet& frontier, const std::string& ref) {
    if (dot()) {
      result_ += to_dot(r, frontier);
    } else if (machine()) {
      kv("vertices", r.shape().num_vertices());
      kv("edges", r.shape().num_edges());
      kv("frontier", frontier.size());
    } else {
      result_ += format_repgraph(r, frontier, ref);
    }
  }

  void emit_map(const RepGraph& r, const RepGraph& t, const RGMorphism& alpha) {
    const Graph& f = r.shape();
    const Graph& g = t.shape();
    for (VertexId w : f.vertices_by_name()) kv("vertex", f.name(w) + "->" + g.name(alpha(w)));
    for (EdgeId x : f.edges_by_name()) kv("edge", f.name(x) + "->" + g.name(alpha(x)));
  }

  int validate();
  int check_rep();
  int sim();
  int quotient();
  int verdict(const std::string& key);
  int cover();
  int morphism();
  int same_component();
  int act();
  int relations_check();
  int reduce();
  int to_branching();
  int from_branching();
  int roundtrip();
  int dot_export();

  std::string name_;
  const Options& o_;
  std::string result_;
};

std::string first_keyword(const std::string& text) {
  std::istringstream in(text);
  for (std::string raw; std::getline(in, raw);) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    if (std::string w; words >> w) return w;
  }
  return {};
}

std::string join_names(const Graph& g, std::vector<VertexId> vs) {
  std::vector<std::string> names;
  for (VertexId v : vs) names.push_back(g.name(v));
  std::sort(names.begin(), names.end());
  std::string out;
  for (const std::string& n : names) out += (out.empty() ? "" : ",") + n;
  return out;
}

// Blocks as sorted member-name lists, ordered by their first member.
std::vector<std::string> named_blocks(const Graph& g, const Partition& p) {
  std::vector<std::string> out;
  for (const auto& blk : p.blocks()) out.push_back(join_names(g, blk));
  std::sort(out.begin(), out.end());
  return out;
}

int Command::validate() {
  const fs::path path = file_arg(0);
  const std::string text = read_text(path);
  const std::string kind = first_keyword(text);
  bool ok = false;
  if (kind == "REPGRAPH") {
    return check_rep();
  } else if (kind == "BRANCHING") {
    const BranchingFile f = read_branching(path);
    ok = report(validate_bs(f.system));
    if (ok) kv("points", f.system.num_points());
  } else {
    const BiSepGraph b = parse_bisep(text, path.string());
    ok = report(validate_bisep(b));
    if (ok) {
      kv("vertices", b.graph().num_vertices());
      kv("edges", b.graph().num_edges());
      kv("cblocks", b.num_cblocks());
      kv("dblocks", b.num_dblocks());
    }
  }
  kv("valid", ok);
  return ok ? kOk : kInvalid;
}

int Command::check_rep() {
  const RepFile f = read_repgraph(rep_path());
  const bool ok = valid(f);
  if (ok) {
    kv("vertices", f.rep.shape().num_vertices());
    kv("edges", f.rep.shape().num_edges());
    kv("frontier", f.frontier.size());
  }
  kv("valid", ok);
  return ok ? kOk : kInvalid;
}

int Command::sim() {
  const RepFile f = read_repgraph(rep_path());
  if (!valid(f)) return kInvalid;
  const Partition p = compute_sim(f.rep);
  kv("blocks", p.num_blocks());
  for (const std::string& blk : named_blocks(f.rep.shape(), p)) {
    if (machine()) {
      kv("block", blk);
    } else {
      line("{" + blk + "}");
    }
  }
  return kOk;
}

int Command::quotient() {
  const fs::path path = rep_path();
  const RepFile f = read_repgraph(path);
  if (!valid(f)) return kInvalid;
  const QuotientResult q = attracting_quotient(f.rep);
  emit_rep(q.rep, {}, rebase(path, f.base_ref));
  if (machine()) {
    const Partition p = compute_sim(f.rep);
    for (const std::string& blk : named_blocks(f.rep.shape(), p)) kv("class", blk);
  }
  return kOk;
}

int Command::verdict(const std::string& key) {
  const RepFile f = read_repgraph(rep_path());
  if (!valid(f)) return kInvalid;
  const bool yes = key == "simple" ? is_simple(f.rep) : is_irreducible(f.rep);
  kv(key, yes);
  return yes ? kOk : kFalse;
}

int Command::cover() {
  const fs::path path = rep_path();
  const RepFile f = read_repgraph(path);
  if (!valid(f)) return kInvalid;
  if (!o_.depth) throw Usage("cover: --depth is required");
  if (o_.at.empty()) throw Usage("cover: --at is required");
  const VertexId at = f.rep.shape().vertex(o_.at);
  const CoverRep c = universal_cover_rep(f.rep, at, *o_.depth);
  emit_rep(c.rep, c.frontier, rebase(path, f.base_ref));
  if (machine()) kv("tree", is_tree(c.rep.shape()));
  return kOk;
}

int Command::morphism() {
  const RepFile r = read_repgraph(o_.rep.empty() ? file_arg(0) : fs::path(o_.rep));
  const RepFile t = read_repgraph(file_arg(o_.rep.empty() ? 1 : 0));
  if (!valid(r) || !valid(t)) return kInvalid;
  const std::optional<RGMorphism> alpha = find_morphism(r.rep, t.rep);
  kv("morphism", alpha.has_value());
  if (!alpha) return kFalse;
  kv("covering", check_covering(r.rep.shape(), *alpha, t.rep.shape()));
  emit_map(r.rep, t.rep, *alpha);
  return kOk;
}

int Command::same_component() {
  const RepFile r = read_repgraph(o_.rep.empty() ? file_arg(0) : fs::path(o_.rep));
  const RepFile t = read_repgraph(file_arg(o_.rep.empty() ? 1 : 0));
  if (!valid(r) || !valid(t)) return kInvalid;
  const bool yes = bsg::same_component(r.rep, t.rep);
  kv("same_component", yes);
  return yes ? kOk : kFalse;
}

int Command::act() {
  const RepFile f = read_repgraph(rep_path());
  if (!valid(f)) return kInvalid;
  if (o_.vector.empty() || o_.element.empty()) throw Usage("act: --vector and --element are required");
  const ModuleVector x = parse_vector(f.rep.shape(), o_.vector);
  const AlgebraElement a = parse_element(f.rep.base_graph(), o_.element);
  const std::string y = format_vector(f.rep.shape(), bsg::act(f.rep, x, a));
  if (machine()) {
    kv("result", y);
  } else {
    line(y);
  }
  return kOk;
}

int Command::relations_check() {
  const RepFile f = read_repgraph(rep_path());
  if (!report(validate_bisep(f.rep.base()))) return kInvalid;
  const ValidationReport r = verify_family(f.rep, f.frontier);
  kv("relations", relation_elements(f.rep.base()).size());
  for (const std::string& issue : r.issues) kv("violation", issue);
  kv("pass", r.ok());
  return r.ok() ? kOk : kFalse;
}

int Command::reduce() {
  const RepFile f = read_repgraph(rep_path());
  if (!valid(f)) return kInvalid;
  if (o_.vector.empty()) throw Usage("reduce: --vector is required");
  const ModuleVector x = parse_vector(f.rep.shape(), o_.vector);
  if (!is_irreducible(f.rep)) {
    kv("irreducible", false);
    return kFalse;
  }
  const Reduction red = reduce_to_vertex(f.rep, x);
  kv("walks", red.walks.size());
  for (const Walk& p : red.walks) kv("walk", format_walk(f.rep.base_graph(), p));
  kv("k", format_scalar(red.k));
  kv("vertex", f.rep.shape().name(red.v));
  return kOk;
}

int Command::to_branching() {
  const fs::path path = rep_path();
  const RepFile f = read_repgraph(path);
  if (!report(validate_bisep(f.rep.base()))) return kInvalid;
  if (!report(validate_repgraph(f.rep, {}, Connectivity::per_component))) return kInvalid;
  const BranchingSystem s = theta(f.rep);
  if (dot()) {
    result_ += to_dot(s);
  } else if (machine()) {
    kv("points", s.num_points());
  } else {
    result_ += format_branching(s, rebase(path, f.base_ref));
  }
  return kOk;
}

int Command::from_branching() {
  const fs::path path = file_arg(0);
  const BranchingFile f = read_branching(path);
  if (!report(validate_bs(f.system))) return kInvalid;
  const RepGraph r = eta(f.system);
  emit_rep(r, {}, rebase(path, f.base_ref));
  if (machine()) {
    const auto comp = connected_components(r.shape());
    kv("components", comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1);
  }
  return kOk;
}

int Command::roundtrip() {
  if (!o_.rep.empty()) {
    const RepFile f = read_repgraph(o_.rep);
    if (!report(validate_bisep(f.rep.base()))) return kInvalid;
    if (!report(validate_repgraph(f.rep, {}, Connectivity::per_component))) return kInvalid;
    const RGMorphism alpha = roundtrip_eta_theta(f.rep);
    kv("eta_theta", true);
    emit_map(f.rep, eta(theta(f.rep)), alpha);
    return kOk;
  }
  const BranchingFile f = read_branching(file_arg(0));
  if (!report(validate_bs(f.system))) return kInvalid;
  const bool same = roundtrip_theta_eta(f.system);
  kv("theta_eta", same);
  return same ? kOk : kFalse;
}

int Command::dot_export() {
  const fs::path path = rep_path();
  const std::string text = read_text(path);
  const std::string kind = first_keyword(text);
  if (kind == "REPGRAPH") {
    const RepFile f = read_repgraph(path);
    result_ += to_dot(f.rep, f.frontier);
  } else if (kind == "BRANCHING") {
    result_ += to_dot(read_branching(path).system);
  } else {
    result_ += to_dot(parse_bisep(text, path.string()).graph());
  }
  return kOk;
}

int Command::dispatch() {
  if (name_ == "validate") return validate();
  if (name_ == "check-rep") return check_rep();
  if (name_ == "sim") return sim();
  if (name_ == "quotient") return quotient();
  if (name_ == "irreducible") return verdict("irreducible");
  if (name_ == "simple") return verdict("simple");
  if (name_ == "cover") return cover();
  if (name_ == "morphism") return morphism();
  if (name_ == "same-component") return same_component();
  if (name_ == "act") return act();
  if (name_ == "relations-check") return relations_check();
  if (name_ == "reduce") return reduce();
  if (name_ == "to-branching") return to_branching();
  if (name_ == "from-branching") return from_branching();
  if (name_ == "roundtrip") return roundtrip();
  return dot_export();
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotIrreducible:
      return kFalse;
    case ErrorKind::NotAdmissible:
    case ErrorKind::BaseMismatch:
    case ErrorKind::InvalidSystem:
    case ErrorKind::InvalidRepGraph:
      return kInvalid;
    default:
      return kUsage;
  }
}

const std::vector<std::pair<std::string, std::string>> kCommands = {
    {"validate", "Validate a graph, bi-separated graph, representation graph or branching file"},
    {"check-rep", "Validate a representation graph"},
    {"sim", "List the classes of the canonical equivalence"},
    {"quotient", "Print the attracting (irreducible) quotient"},
    {"irreducible", "Decide irreducibility"},
    {"simple", "Decide simplicity of the module V(F, phi)"},
    {"cover", "Truncated universal cover at a vertex"},
    {"morphism", "Find a morphism between two representation graphs"},
    {"same-component", "Decide whether two representation graphs are connected by morphisms"},
    {"act", "Act on a module vector by an algebra element"},
    {"relations-check", "Check that the relations annihilate V(F, phi)"},
    {"reduce", "Reduce a nonzero vector to a multiple of a basis vertex"},
    {"to-branching", "Convert a representation graph to a branching system"},
    {"from-branching", "Convert a branching system to a representation graph"},
    {"roundtrip", "Check the branching-system round trips"},
    {"dot", "Export DOT"},
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Representation graphs of bi-separated graphs", "bsg"};
  app.require_subcommand(1);
  Options o;
  for (const auto& [name, help] : kCommands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("files", o.files, "Input files");
    sub->add_option("--rep", o.rep, "Representation graph file");
    sub->add_option("--depth", o.depth, "Cover depth");
    sub->add_option("--at", o.at, "Shape vertex");
    sub->add_option("--vector", o.vector, "Module vector, e.g. \"2*w1 - 1/3*w2\"");
    sub->add_option("--element", o.element, "Algebra element, e.g. \"1*e1.e1* - 1*@v\"");
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "machine", "dot"}));
    sub->add_option("--out", o.out, "Write the output to a file");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    Command cmd(name, o);
    const int code = cmd.dispatch();
    if (o.out.empty()) {
      out << cmd.output();
    } else {
      write_text(o.out, cmd.output());
    }
    return code;
  } catch (const Usage& e) {
    err << "bsg " << name << ": " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "bsg " << name << ": " << e.what() << "\n";
    return exit_code(e.kind());
  }
}

}  // namespace bsg::cli
