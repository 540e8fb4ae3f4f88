#include <catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>

#include "bsg/cli.hpp"
#include "bsg/io.hpp"
#include "fixtures.hpp"

using namespace bsg;

namespace {

const std::filesystem::path kData = BSG_TEST_DATA;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result bsg_run(std::vector<std::string> args) {
  for (std::string& a : args) {
    if (a.rfind("@", 0) == 0) a = (kData / a.substr(1)).string();
  }
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "bsg_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("verdicts use exit codes") {
  Result r = bsg_run({"irreducible", "--rep", "@f7.rep"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "irreducible=true"));

  r = bsg_run({"irreducible", "--rep", "@f5.rep"});
  CHECK(r.code == 1);
  CHECK(has_line(r.out, "irreducible=false"));

  CHECK(bsg_run({"simple", "--rep", "@fixture_d.rep"}).code == 0);
  CHECK(bsg_run({"simple", "--rep", "@f6.rep"}).code == 1);
  CHECK(bsg_run({"same-component", "@f5.rep", "@f6.rep"}).code == 0);
  CHECK(bsg_run({"same-component", "@f7.rep", "@fixture_d.rep"}).code == 1);
}

TEST_CASE("validate") {
  Result ok = bsg_run({"validate", "@ex35.bisep", "--format", "machine"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "vertices=1\nedges=4\ncblocks=2\ndblocks=2\nvalid=true\n");

  Result bad = bsg_run({"validate", "@bad_partition.bisep"});
  CHECK(bad.code == 2);
  CHECK(bad.out.find("error: ") != std::string::npos);

  Result missing = bsg_run({"validate", "@missing.bisep"});
  CHECK(missing.code == 3);
  CHECK(missing.err.find("missing.bisep") != std::string::npos);

  Result syntax = bsg_run({"validate", "@syntax_error.bisep"});
  CHECK(syntax.code == 3);
  CHECK(syntax.err.find("syntax_error.bisep:3:") != std::string::npos);

  CHECK(bsg_run({"validate", "@overlap.branching"}).code == 2);
  CHECK(bsg_run({"validate", "@f7.branching"}).code == 0);
  CHECK(bsg_run({"validate", "@f7.rep"}).code == 0);
}

TEST_CASE("check-rep") {
  CHECK(bsg_run({"check-rep", "--rep", "@ex36.rep"}).code == 0);
  CHECK(bsg_run({"check-rep", "--rep", "@rose2_line.rep"}).code == 0);
  Result broken = bsg_run({"check-rep", "--rep", "@f7_broken.rep", "--format", "machine"});
  CHECK(broken.code == 2);
  CHECK(broken.out.find("issue=") != std::string::npos);
  CHECK(has_line(broken.out, "valid=false"));
}

TEST_CASE("sim and quotient") {
  Result sim = bsg_run({"sim", "--rep", "@f5.rep", "--format", "machine"});
  CHECK(sim.code == 0);
  CHECK(sim.out == "blocks=1\nblock=w1,w2\n");
  CHECK(bsg_run({"sim", "--rep", "@fixture_d.rep"}).out == "blocks=2\n{w1}\n{w2}\n");

  const auto out = scratch() / "q.rep";
  Result q = bsg_run({"quotient", "--rep", "@f5.rep", "--out", out.string()});
  CHECK(q.code == 0);
  const RepFile back = read_repgraph(out);
  CHECK(are_isomorphic(back.rep, test::f7()));

  Result qm = bsg_run({"quotient", "--rep", "@f6.rep", "--format", "machine"});
  CHECK(has_line(qm.out, "vertices=1"));
  CHECK(has_line(qm.out, "class=w1,w2"));
}

TEST_CASE("cover") {
  Result c = bsg_run({"cover", "--rep", "@f7.rep", "--depth", "2", "--at", "w", "--format", "machine"});
  CHECK(c.code == 0);
  CHECK(has_line(c.out, "vertices=17"));
  CHECK(has_line(c.out, "edges=16"));
  CHECK(has_line(c.out, "frontier=12"));
  CHECK(has_line(c.out, "tree=true"));

  Result d = bsg_run({"cover", "--rep", "@f7.rep", "--depth", "0", "--at", "w", "--format", "dot"});
  CHECK(d.out.find("->") == std::string::npos);

  CHECK(bsg_run({"cover", "--rep", "@f7.rep", "--at", "w"}).code == 3);
  CHECK(bsg_run({"cover", "--rep", "@f7.rep", "--depth", "1", "--at", "nope"}).code == 3);
}

TEST_CASE("morphism") {
  Result m = bsg_run({"morphism", "@f5.rep", "@f7.rep"});
  CHECK(m.code == 0);
  CHECK(has_line(m.out, "morphism=true"));
  CHECK(has_line(m.out, "covering=true"));
  CHECK(has_line(m.out, "vertex=w1->w"));
  CHECK(bsg_run({"morphism", "@f7.rep", "@f5.rep"}).code == 1);
  CHECK(bsg_run({"morphism", "@f7.rep", "@ex36.rep"}).code == 2);
}

TEST_CASE("act and reduce") {
  Result a = bsg_run({"act", "--rep", "@fixture_d.rep", "--vector", "w1 - 3*w2", "--element", "e1"});
  CHECK(a.code == 0);
  CHECK(a.out == "1*w2\n");

  Result r = bsg_run({"reduce", "--rep", "@fixture_d.rep", "--vector", "w1 - 3*w2"});
  CHECK(r.code == 0);
  CHECK(r.out == "walks=1\nwalk=e1\nk=1\nvertex=w2\n");

  CHECK(bsg_run({"reduce", "--rep", "@f5.rep", "--vector", "w1"}).code == 1);
  CHECK(bsg_run({"reduce", "--rep", "@f7.rep", "--vector", "0"}).code == 3);
  CHECK(bsg_run({"act", "--rep", "@f7.rep", "--vector", "w +", "--element", "e1"}).code == 3);
  CHECK(bsg_run({"act", "--rep", "@f7.rep", "--vector", "w"}).code == 3);
}

TEST_CASE("relations-check") {
  Result ok = bsg_run({"relations-check", "--rep", "@ex36.rep"});
  CHECK(ok.code == 0);
  CHECK(has_line(ok.out, "relations=32"));
  CHECK(has_line(ok.out, "pass=true"));
  CHECK(bsg_run({"relations-check", "--rep", "@rose2_loop.rep"}).code == 0);

  Result bad = bsg_run({"relations-check", "--rep", "@f7_broken.rep"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("violation=") != std::string::npos);
}

TEST_CASE("branching conversions") {
  const auto dir = scratch();
  Result to = bsg_run({"to-branching", "--rep", "@fixture_d.rep", "--out", (dir / "d.branching").string()});
  CHECK(to.code == 0);
  // The base reference is rewritten relative to the output location.
  const BranchingFile bf = read_branching(dir / "d.branching");
  CHECK(bf.system == theta(test::fixture_d()));

  Result from = bsg_run({"from-branching", (dir / "d.branching").string(), "--out", (dir / "d.rep").string()});
  CHECK(from.code == 0);
  CHECK(are_isomorphic(read_repgraph(dir / "d.rep").rep, test::fixture_d()));

  Result rt = bsg_run({"roundtrip", "@f7.branching"});
  CHECK(rt.code == 0);
  CHECK(has_line(rt.out, "theta_eta=true"));

  Result rr = bsg_run({"roundtrip", "--rep", "@f5.rep"});
  CHECK(rr.code == 0);
  CHECK(has_line(rr.out, "eta_theta=true"));

  CHECK(bsg_run({"from-branching", "@overlap.branching"}).code == 2);
}

TEST_CASE("dot") {
  Result d = bsg_run({"dot", "@f7.rep"});
  CHECK(d.code == 0);
  CHECK(d.out.rfind("digraph F {", 0) == 0);
  CHECK(bsg_run({"dot", "@f7.rep"}).out == d.out);
  CHECK(bsg_run({"dot", "@ex35.bisep"}).out.rfind("digraph G {", 0) == 0);
  CHECK(bsg_run({"dot", "@f7.branching"}).out.rfind("digraph S {", 0) == 0);
}

TEST_CASE("usage errors") {
  CHECK(bsg_run({}).code == 3);
  CHECK(bsg_run({"frobnicate"}).code == 3);
  CHECK(bsg_run({"sim"}).code == 3);
  CHECK(bsg_run({"sim", "--rep", "@f5.rep", "--format", "xml"}).code == 3);
  CHECK(bsg_run({"--help"}).code == 0);
}
