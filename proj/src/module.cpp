#include "bsg/module.hpp"

#include <algorithm>

#include "bsg/error.hpp"

namespace bsg {

ModuleVector act_vertex(const RepGraph& r, VertexId w, const Walk& p) {
  std::optional<Walk> q = lift_walk(r, w, p);
  if (!q) return {};
  return ModuleVector::unit(range(r.shape(), *q));
}

ModuleVector act(const RepGraph& r, const ModuleVector& x, const AlgebraElement& a) {
  for (const auto& [p, k] : a.terms()) {
    if (!is_walk(r.base_graph(), p)) throw Error(ErrorKind::BaseMismatch, "act: walk not in base");
  }
  ModuleVector out;
  for (const auto& [w, c] : x.terms()) {
    if (!r.shape().has_vertex(w)) throw Error(ErrorKind::UnknownVertex, "act");
    for (const auto& [p, k] : a.terms()) {
      if (std::optional<Walk> q = lift_walk(r, w, p)) out.add(range(r.shape(), *q), c * k);
    }
  }
  return out;
}

namespace {

bool near_frontier(const RepGraph& r, VertexId w, const VertexSet& frontier) {
  if (frontier.count(w)) return true;
  for (Letter x : r.enabled_letters(w)) {
    if (frontier.count(*r.step(w, x))) return true;
  }
  return false;
}

}  // namespace

ValidationReport verify_family(const RepGraph& r, const VertexSet& frontier) {
  ValidationReport report;
  const BiSepGraph& b = r.base();
  const Graph& e = r.base_graph();
  const Graph& f = r.shape();
  const std::vector<Relation> relations = relation_elements(b);

  auto unit = [](Walk p) { return AlgebraElement::unit(std::move(p)); };

  for (VertexId w : f.vertices_by_name()) {
    if (near_frontier(r, w, frontier)) continue;
    const ModuleVector x = ModuleVector::unit(w);
    const std::string at = " at '" + f.name(w) + "'";

    for (const Relation& rel : relations) {
      const ModuleVector y = act(r, x, rel.element);
      if (!y.is_zero()) {
        report.add(describe(b, rel) + at + " gives " + format_vector(f, y));
      }
    }

    for (VertexId v : e.vertices()) {
      const ModuleVector xv = act(r, x, unit(Walk::trivial(v)));
      for (VertexId v2 : e.vertices()) {
        const ModuleVector expected = v == v2 ? xv : ModuleVector{};
        if (act(r, xv, unit(Walk::trivial(v2))) != expected) {
          report.add("vertex operators '" + e.name(v) + "', '" + e.name(v2) + "'" + at +
                     " are not orthogonal idempotents");
        }
      }
    }

    for (EdgeId g : e.edges()) {
      for (Letter l : {fwd(g), rev(g)}) {
        const Walk p{letter_source(e, l), {l}};
        const ModuleVector direct = act(r, x, unit(p));
        ModuleVector framed = act(r, x, unit(Walk::trivial(letter_source(e, l))));
        framed = act(r, framed, unit(p));
        framed = act(r, framed, unit(Walk::trivial(letter_range(e, l))));
        if (direct != framed) {
          report.add("edge operator '" + format_walk(e, p) + "'" + at +
                     " does not respect its source and range");
        }
      }
    }
  }
  return report;
}

bool is_simple(const RepGraph& r) { return is_irreducible(r); }

Reduction reduce_to_vertex(const RepGraph& r, const ModuleVector& x) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroVector, "reduce_to_vertex");
  for (const auto& [w, c] : x.terms()) {
    if (!r.shape().has_vertex(w)) throw Error(ErrorKind::UnknownVertex, "reduce_to_vertex");
  }
  if (!is_irreducible(r)) throw Error(ErrorKind::NotIrreducible, "reduce_to_vertex");

  const Graph& f = r.shape();
  auto by_name = [&](VertexId a, VertexId b) { return f.name(a) < f.name(b); };

  Reduction out;
  ModuleVector y = x;
  while (y.size() > 1) {
    std::vector<VertexId> support;
    for (const auto& [w, c] : y.terms()) support.push_back(w);
    std::partial_sort(support.begin(), support.begin() + 2, support.end(), by_name);
    std::optional<Walk> p = distinguishing_walk(r, support[0], support[1]);
    if (!p) throw Error(ErrorKind::NotIrreducible, "reduce_to_vertex");
    y = act(r, y, AlgebraElement::unit(*p));
    out.walks.push_back(std::move(*p));
  }
  const auto& [v, k] = *y.terms().begin();
  out.k = k;
  out.v = v;
  return out;
}

ModuleVector induced_hom(const RGMorphism& alpha, const ModuleVector& x) {
  ModuleVector out;
  for (const auto& [w, c] : x.terms()) {
    if (index(w) >= alpha.vmap.size()) {
      throw Error(ErrorKind::BaseMismatch, "induced_hom: vertex outside the domain");
    }
    out.add(alpha(w), c);
  }
  return out;
}

ModuleVector section_hom(const RepGraph& r, const Partition& approx, VertexId class_rep) {
  if (!r.shape().has_vertex(class_rep)) throw Error(ErrorKind::UnknownVertex, "section_hom");
  if (!check_admissible(r, approx)) throw Error(ErrorKind::NotAdmissible, "section_hom");
  ModuleVector out;
  for (VertexId v : r.shape().vertices()) {
    if (approx.same(v, class_rep)) out.add(v, 1);
  }
  return out;
}

}  // namespace bsg
