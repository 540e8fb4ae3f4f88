#include <catch_amalgamated.hpp>

#include "bsg/error.hpp"
#include "bsg/module.hpp"
#include "corpus.hpp"
#include "fixtures.hpp"

using namespace bsg;
using namespace bsg::test;

namespace {

ModuleVector X(const RepGraph& r, const char* text) { return parse_vector(r.shape(), text); }
AlgebraElement A(const RepGraph& r, const char* text) { return parse_element(r.base_graph(), text); }
Walk BW(const RepGraph& r, const char* text) { return parse_walk(r.base_graph(), text); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Io;
}

}  // namespace

TEST_CASE("act_vertex") {
  const RepGraph r = f7();
  const VertexId w = r.shape().vertex("w");
  CHECK(act_vertex(r, w, BW(r, "e1")) == X(r, "w"));
  CHECK(act_vertex(r, w, BW(r, "e2")).is_zero());
  for (const auto& [name, fx] : finite_fixtures()) {
    for (VertexId u : fx.shape().vertices()) {
      CHECK(act_vertex(fx, u, Walk::trivial(fx.label(u))) == ModuleVector::unit(u));
    }
  }
  CHECK(kind_of([&] { act_vertex(r, vertex_at(4), BW(r, "e1")); }) == ErrorKind::UnknownVertex);
}

TEST_CASE("act") {
  const RepGraph r = f7();
  CHECK(act(r, ModuleVector{}, A(r, "e1")).is_zero());
  CHECK(act(r, X(r, "w"), A(r, "0")).is_zero());
  CHECK(act(r, X(r, "2*w"), A(r, "e1.f2")) == X(r, "2*w"));

  const RepGraph d = fixture_d();
  CHECK(act(d, X(d, "w1 - 3*w2"), A(d, "e1")) == X(d, "w2"));
  CHECK(act(d, X(d, "w1 + w2"), A(d, "e1 + f1")) == X(d, "2*w2"));

  AlgebraElement foreign = AlgebraElement::unit(Walk{vertex_at(0), {fwd(edge_at(7))}});
  CHECK(kind_of([&] { act(r, X(r, "w"), foreign); }) == ErrorKind::BaseMismatch);
}

TEST_CASE("verify_family") {
  for (const auto& [name, r] : finite_fixtures()) {
    INFO(name);
    CHECK(verify_family(r).ok());
  }
  const RepGraph r = f7();
  CHECK(act(r, X(r, "w"), A(r, "e1.e1* + f1.f1* - @v")).is_zero());

  RepGraph broken = make_rep(four_loop_base(), {{"w", "v"}}, {{"a", "w", "w", "e1"}});
  CHECK_FALSE(verify_family(broken).ok());

  Truncated line = ck_line();
  CHECK(verify_family(line.rep, line.frontier).ok());
  Truncated loop = ck_loop();
  CHECK(verify_family(loop.rep, loop.frontier).ok());
}

TEST_CASE("is_simple") {
  CHECK(is_simple(f7()));
  CHECK_FALSE(is_simple(f5()));
  CHECK(is_simple(fixture_d()));
  CHECK(is_simple(six_loop_rep()));
}

TEST_CASE("reduce_to_vertex") {
  const RepGraph r = f7();
  Reduction single = reduce_to_vertex(r, X(r, "5*w"));
  CHECK(single.walks.empty());
  CHECK(single.k == 5);
  CHECK(single.v == r.shape().vertex("w"));

  const RepGraph d = fixture_d();
  Reduction red = reduce_to_vertex(d, X(d, "w1 - 3*w2"));
  REQUIRE(red.walks.size() == 1);
  CHECK(format_walk(d.base_graph(), red.walks[0]) == "e1");
  CHECK(red.k == 1);
  CHECK(red.v == d.shape().vertex("w2"));

  Reduction sum = reduce_to_vertex(d, X(d, "w1 + w2"));
  CHECK(sum.walks.size() == 1);
  CHECK(sum.walks[0].length() == 1);
  CHECK(sum.k == 1);

  CHECK(kind_of([&] { reduce_to_vertex(d, ModuleVector{}); }) == ErrorKind::ZeroVector);
  const RepGraph r5 = f5();
  CHECK(kind_of([&] { reduce_to_vertex(r5, X(r5, "w1")); }) == ErrorKind::NotIrreducible);
}

TEST_CASE("reduce_to_vertex replays through act") {
  Rng rng(11);
  for (const auto& [name, r] : finite_fixtures()) {
    if (!is_irreducible(r)) continue;
    for (int i = 0; i < 20; ++i) {
      const ModuleVector x = random_vector(r, rng);
      const Reduction red = reduce_to_vertex(r, x);
      ModuleVector y = x;
      for (const Walk& p : red.walks) y = act(r, y, AlgebraElement::unit(p));
      CHECK(y == ModuleVector::unit(red.v, red.k));
    }
  }
}

TEST_CASE("induced_hom") {
  const RepGraph r5 = f5();
  const RepGraph r7 = f7();
  auto alpha = find_morphism(r5, r7);
  REQUIRE(alpha);
  CHECK(induced_hom(*alpha, X(r5, "w1")) == X(r7, "w"));
  CHECK(induced_hom(*alpha, X(r5, "w1 - w2")).is_zero());
  CHECK(induced_hom(*alpha, X(r5, "w1 + w2")) == X(r7, "2*w"));

  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    const ModuleVector x = random_vector(r5, rng);
    const AlgebraElement a = random_element(r5, rng, 4, 4);
    CHECK(act(r7, induced_hom(*alpha, x), a) == induced_hom(*alpha, act(r5, x, a)));
  }
  CHECK(kind_of([&] { induced_hom(*alpha, ModuleVector::unit(vertex_at(9))); }) == ErrorKind::BaseMismatch);
}

TEST_CASE("section_hom") {
  const RepGraph d = fixture_d();
  CHECK(section_hom(d, Partition::discrete(2), d.shape().vertex("w2")) == X(d, "w2"));

  const RepGraph r5 = f5();
  const Partition sim = compute_sim(r5);
  const VertexId w1 = r5.shape().vertex("w1");
  const ModuleVector s = section_hom(r5, sim, w1);
  CHECK(s == X(r5, "w1 + w2"));
  CHECK(act(r5, s, A(r5, "e1")) == X(r5, "w2 + w1"));

  // The section is a module map out of the quotient.
  QuotientResult q = quotient(r5, sim);
  Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    const AlgebraElement a = random_element(r5, rng, 4, 4);
    const ModuleVector image = act(q.rep, ModuleVector::unit(q.projection(w1)), a);
    ModuleVector lifted;
    for (const auto& [u, c] : image.terms()) {
      for (VertexId v : r5.shape().vertices()) {
        if (q.projection(v) == u) {
          lifted += section_hom(r5, sim, v) * c;
          break;
        }
      }
    }
    CHECK(act(r5, s, a) == lifted);
  }

  CHECK(induced_hom(q.projection, s) == ModuleVector::unit(q.projection(w1), 2));
  CHECK(kind_of([&] { section_hom(d, Partition::from_assignment({0, 0}), vertex_at(0)); }) ==
        ErrorKind::NotAdmissible);
}
