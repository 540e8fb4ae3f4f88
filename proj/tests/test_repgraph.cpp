#include <catch_amalgamated.hpp>

#include "bsg/error.hpp"
#include "bsg/repgraph.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bsg;
using namespace bsg::test;

namespace {

VertexId V(const RepGraph& r, const char* name) { return r.shape().vertex(name); }
Walk BW(const RepGraph& r, const char* text) { return parse_walk(r.base_graph(), text); }

bool has_kind(const std::function<void()>& f, ErrorKind kind) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("validate_repgraph on the fixtures") {
  for (const auto& [name, r] : finite_fixtures()) {
    INFO(name);
    CHECK(validate_repgraph(r).ok());
  }
  Truncated line = ck_line();
  CHECK(validate_repgraph(line.rep, line.frontier).ok());
  CHECK_FALSE(validate_repgraph(line.rep).ok());
  Truncated loop = ck_loop();
  CHECK(validate_repgraph(loop.rep, loop.frontier).ok());
}

TEST_CASE("validate_repgraph reports the blocks a missing edge breaks") {
  RepGraph broken = make_rep(four_loop_base(), {{"w", "v"}}, {{"a", "w", "w", "e1"}});
  ValidationReport r = validate_repgraph(broken);
  REQUIRE(r.issues.size() == 2);
  CHECK(r.issues[0].find("{e2,f2}") != std::string::npos);
  CHECK(r.issues[1].find("{f1,f2}") != std::string::npos);
}

TEST_CASE("validate_repgraph connectivity modes") {
  RepGraph two = make_rep(four_loop_base(), {{"p", "v"}, {"q", "v"}},
                          {{"a", "p", "p", "e1"}, {"b", "p", "p", "f2"},
                           {"c", "q", "q", "e1"}, {"d", "q", "q", "f2"}});
  CHECK_FALSE(validate_repgraph(two).ok());
  CHECK(validate_repgraph(two, {}, Connectivity::per_component).ok());
}

TEST_CASE("the constructor rejects non-homomorphic labelings") {
  Graph f;
  f.add_vertex("w");
  f.add_edge("a", vertex_at(0), vertex_at(0));
  GraphHom bad{{vertex_at(0)}, {edge_at(9)}};
  CHECK(has_kind([&] { RepGraph(four_loop_base(), f, bad); }, ErrorKind::InvalidRepGraph));
}

TEST_CASE("lift_walk") {
  const RepGraph r = f7();
  const VertexId w = V(r, "w");
  auto q = lift_walk(r, w, BW(r, "e1.f2.e1"));
  REQUIRE(q);
  CHECK(q->length() == 3);
  CHECK(range(r.shape(), *q) == w);
  CHECK_FALSE(lift_walk(r, w, BW(r, "e2")));
  CHECK(lift_walk(r, w, BW(r, "@v")) == Walk::trivial(w));
  CHECK(has_kind([&] { lift_walk(r, vertex_at(5), BW(r, "e1")); }, ErrorKind::UnknownVertex));

  const RepGraph d = fixture_d();
  auto back = lift_walk(d, V(d, "w2"), BW(d, "e1*"));
  REQUIRE(back);
  CHECK(range(d.shape(), *back) == V(d, "w1"));
}

TEST_CASE("compute_sim") {
  const RepGraph r5 = f5();
  Partition p5 = compute_sim(r5);
  CHECK(p5.num_blocks() == 1);
  CHECK(p5.same(V(r5, "w1"), V(r5, "w2")));
  CHECK(compute_sim(f7()).num_blocks() == 1);
  CHECK(compute_sim(fixture_d()).is_discrete());
  CHECK(compute_sim(f6()).num_blocks() == 1);
}

TEST_CASE("is_irreducible") {
  CHECK(is_irreducible(f7()));
  CHECK_FALSE(is_irreducible(f5()));
  CHECK_FALSE(is_irreducible(f6()));
  CHECK(is_irreducible(fixture_d()));
  CHECK(is_irreducible(six_loop_rep()));
}

TEST_CASE("partition helpers") {
  Partition p = Partition::from_assignment({4, 4, 1, 4});
  CHECK(p.num_blocks() == 2);
  CHECK(p.block_of(vertex_at(0)) == 0);
  CHECK(p.block_of(vertex_at(2)) == 1);
  CHECK(Partition::discrete(4).refines(p));
  CHECK_FALSE(p.refines(Partition::discrete(4)));
  CHECK(p == Partition::from_blocks(4, {{vertex_at(0), vertex_at(1), vertex_at(3)}, {vertex_at(2)}}));
  CHECK(has_kind([] { Partition::from_blocks(3, {{vertex_at(0)}, {vertex_at(0), vertex_at(1), vertex_at(2)}}); },
                 ErrorKind::PartitionMismatch));
  CHECK(has_kind([] { Partition::from_blocks(3, {{vertex_at(0)}}); }, ErrorKind::PartitionMismatch));
}

TEST_CASE("check_admissible") {
  const RepGraph d = fixture_d();
  CHECK(check_admissible(d, Partition::discrete(2)));
  CHECK(check_admissible(d, compute_sim(d)));
  CHECK_FALSE(check_admissible(d, Partition::from_assignment({0, 0})));
  const RepGraph r5 = f5();
  CHECK(check_admissible(r5, compute_sim(r5)));
  CHECK(has_kind([&] { check_admissible(d, Partition::discrete(3)); }, ErrorKind::PartitionMismatch));
}

TEST_CASE("admissible but not closed partitions are rejected") {
  // Two disjoint copies of F5 glued by nothing would be disconnected, so use
  // F5 doubled: a 4-cycle on e1 with f2 loops. Pairing 0~1 is below ~ but not
  // closed under e1 (their e1-successors 1, 2 are in different classes).
  RepGraph c4 = make_rep(four_loop_base(), {{"a", "v"}, {"b", "v"}, {"c", "v"}, {"d", "v"}},
                         {{"ab", "a", "b", "e1"}, {"bc", "b", "c", "e1"}, {"cd", "c", "d", "e1"},
                          {"da", "d", "a", "e1"}, {"la", "a", "a", "f2"}, {"lb", "b", "b", "f2"},
                          {"lc", "c", "c", "f2"}, {"ld", "d", "d", "f2"}});
  REQUIRE(validate_repgraph(c4).ok());
  CHECK(compute_sim(c4).num_blocks() == 1);
  CHECK_FALSE(check_admissible(c4, Partition::from_assignment({0, 0, 1, 2})));
  CHECK(check_admissible(c4, Partition::from_assignment({0, 1, 0, 1})));
  QuotientResult q = quotient(c4, Partition::from_assignment({0, 1, 0, 1}));
  CHECK(are_isomorphic(q.rep, f5()));
}

TEST_CASE("quotient") {
  const RepGraph r5 = f5();
  QuotientResult q = quotient(r5, compute_sim(r5));
  CHECK(validate_repgraph(q.rep).ok());
  CHECK(are_isomorphic(q.rep, f7()));
  CHECK(q.rep.shape().name(vertex_at(0)) == "w1");
  CHECK(is_rg_morphism(r5, q.rep, q.projection));

  QuotientResult same = quotient(r5, Partition::discrete(2));
  CHECK(are_isomorphic(same.rep, r5));

  const RepGraph r6 = f6();
  CHECK(are_isomorphic(quotient(r6, compute_sim(r6)).rep, f7()));

  const RepGraph d = fixture_d();
  CHECK(has_kind([&] { quotient(d, Partition::from_assignment({0, 0})); }, ErrorKind::NotAdmissible));
}

TEST_CASE("attracting_quotient") {
  CHECK(are_isomorphic(attracting_quotient(f5()).rep, f7()));
  CHECK(are_isomorphic(attracting_quotient(f7()).rep, f7()));
  CHECK(are_isomorphic(attracting_quotient(fixture_d()).rep, fixture_d()));
  CHECK(are_isomorphic(attracting_quotient(f6()).rep, attracting_quotient(f5()).rep));
}

TEST_CASE("find_morphism") {
  auto m = find_morphism(f5(), f7());
  REQUIRE(m);
  CHECK(is_rg_morphism(f5(), f7(), *m));
  CHECK(check_covering(f5().shape(), *m, f7().shape()));
  CHECK_FALSE(find_morphism(f7(), f5()));
  const RepGraph d = fixture_d();
  auto id = find_morphism(d, d);
  REQUIRE(id);
  CHECK(*id == identity_hom(d.shape()));
  CHECK(has_kind([&] { find_morphism(f7(), six_loop_rep()); }, ErrorKind::BaseMismatch));
}

TEST_CASE("are_isomorphic") {
  RepGraph copy = make_rep(four_loop_base(), {{"z", "v"}}, {{"q", "z", "z", "f2"}, {"p", "z", "z", "e1"}});
  CHECK(are_isomorphic(f7(), copy));
  CHECK_FALSE(are_isomorphic(f5(), f6()));
  CHECK_FALSE(are_isomorphic(f5(), f7()));
  auto iso = find_isomorphism(f7(), copy);
  REQUIRE(iso);
  CHECK(iso->emap == std::vector<EdgeId>{edge_at(1), edge_at(0)});
}

TEST_CASE("same_component") {
  CHECK(same_component(f5(), f6()));
  CHECK_FALSE(same_component(f7(), fixture_d()));
  CHECK(same_component(fixture_d(), fixture_d()));
}

TEST_CASE("distinguishing_walk") {
  const RepGraph r5 = f5();
  CHECK_FALSE(distinguishing_walk(r5, V(r5, "w1"), V(r5, "w2")));
  const RepGraph d = fixture_d();
  auto p = distinguishing_walk(d, V(d, "w1"), V(d, "w2"));
  REQUIRE(p);
  CHECK(p->length() == 1);
  CHECK(format_walk(d.base_graph(), *p) == "e1");
  CHECK(lift_walk(d, V(d, "w1"), *p).has_value() != lift_walk(d, V(d, "w2"), *p).has_value());
  CHECK_FALSE(distinguishing_walk(d, V(d, "w1"), V(d, "w1")));
}

TEST_CASE("universal_cover_rep") {
  const RepGraph r = f7();
  CoverRep c0 = universal_cover_rep(r, V(r, "w"), 0);
  CHECK(c0.rep.shape().num_vertices() == 1);
  CHECK(c0.frontier.size() == 1);

  for (std::size_t d = 0; d <= 4; ++d) {
    CoverRep c = universal_cover_rep(r, V(r, "w"), d);
    CHECK(is_tree(c.rep.shape()));
    CHECK(validate_repgraph(c.rep, c.frontier).ok());
    CHECK(compose_homs(r.labeling(), c.projection) == c.rep.labeling());
    CHECK(is_rg_morphism(c.rep, r, c.projection));
    Ball ball = free_group_ball(d);
    CHECK(are_isomorphic(c.rep, ball.rep));
  }
  CHECK(has_kind([&] { universal_cover_rep(r, vertex_at(3), 1); }, ErrorKind::UnknownVertex));
}

TEST_CASE("pullback along a covering") {
  const RepGraph r7 = f7();
  const RepGraph r5 = f5();
  auto alpha = find_morphism(r5, r7);
  REQUIRE(alpha);
  RepGraph back = pullback(r7, r5.shape(), *alpha);
  CHECK(back.labeling() == r5.labeling());
}
