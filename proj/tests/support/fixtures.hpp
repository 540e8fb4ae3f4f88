#ifndef BSG_TEST_FIXTURES_HPP
#define BSG_TEST_FIXTURES_HPP

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bsg/repgraph.hpp"

namespace bsg::test {

// Builds a bi-separated graph from names. Blocks are (owner, edges).
using NamedEdge = std::tuple<std::string, std::string, std::string>;
using NamedBlock = std::pair<std::string, std::vector<std::string>>;
BasePtr make_base(const std::vector<std::string>& vertices, const std::vector<NamedEdge>& edges,
                  const std::vector<NamedBlock>& cblocks, const std::vector<NamedBlock>& dblocks);

// Shape vertices (name, label) and edges (name, src, dst, label).
using LabeledVertex = std::pair<std::string, std::string>;
using LabeledEdge = std::tuple<std::string, std::string, std::string, std::string>;
RepGraph make_rep(const BasePtr& base, const std::vector<LabeledVertex>& vertices,
                  const std::vector<LabeledEdge>& edges);

// One vertex v, loops e1 e2 f1 f2, C = {{e1,f1},{e2,f2}}, D = {{e1,e2},{f1,f2}}.
BasePtr four_loop_base();
// One vertex v, loops e1 e2 f1 g2 h1 h2 with the six-loop block data.
BasePtr six_loop_base();
// Two loops e, f with the Cuntz-Krieger bi-separation.
BasePtr ck_rose_base();

RepGraph f5();
RepGraph f6();
RepGraph f7();
RepGraph fixture_d();
RepGraph six_loop_rep();

struct Truncated {
  RepGraph rep;
  VertexSet frontier;
};

// Finite pieces of the two infinite CK rose representation graphs.
Truncated ck_line();
Truncated ck_loop();

struct Named {
  std::string name;
  RepGraph rep;
};

// Finite valid fixtures: f5, f6, f7, fixture_d, six_loop.
std::vector<Named> finite_fixtures();

}  // namespace bsg::test

#endif  // BSG_TEST_FIXTURES_HPP
