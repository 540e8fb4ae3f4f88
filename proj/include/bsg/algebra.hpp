#ifndef BSG_ALGEBRA_HPP
#define BSG_ALGEBRA_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bsg/graph.hpp"

namespace bsg {

// Exact rationals in canonical form (reduced, positive denominator).
using Scalar = mpq_class;

Scalar parse_scalar(std::string_view text);
std::string format_scalar(const Scalar& k);

// Finite linear combination with no stored zero coefficients.
template <class Key>
class SparseVector {
public:
  using Terms = std::map<Key, Scalar>;

  SparseVector() = default;

  static SparseVector unit(Key k, Scalar c = 1) {
    SparseVector v;
    v.add(std::move(k), c);
    return v;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Scalar coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add(Key k, const Scalar& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(k), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SparseVector& operator+=(const SparseVector& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  SparseVector& operator-=(const SparseVector& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  SparseVector& operator*=(const Scalar& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(SparseVector a, const Scalar& s) { return a *= s; }
  friend SparseVector operator*(const Scalar& s, SparseVector a) { return a *= s; }
  friend bool operator==(const SparseVector&, const SparseVector&) = default;

private:
  Terms terms_;
};

// Element of the path algebra of the double graph: combination of walks.
// Stored as free walks; no Leavitt relations are applied.
using AlgebraElement = SparseVector<Walk>;

// Vector of V(F, phi) over the shape's vertex basis.
using ModuleVector = SparseVector<VertexId>;

// Bilinear concatenation in P(E^): composable pairs concatenate without spur
// reduction, other pairs vanish. Throws BaseMismatch if a walk is not a walk
// of g.
AlgebraElement multiply(const Graph& g, const AlgebraElement& a, const AlgebraElement& b);

// Literal syntax "<rat>*<term> (+|- <rat>*<term>)*", e.g. "1*e1.e1* - 1*@v".
// The coefficient may be omitted (meaning 1); "0" is the zero combination.
// Binary +/- must be separated by whitespace.
std::vector<std::pair<Scalar, std::string>> parse_combination(std::string_view text);

AlgebraElement parse_element(const Graph& g, std::string_view text);
ModuleVector parse_vector(const Graph& shape, std::string_view text);

// Terms ordered by their printed name; "0" when empty.
std::string format_combination(std::vector<std::pair<std::string, Scalar>> rows);
std::string format_element(const Graph& g, const AlgebraElement& a);
std::string format_vector(const Graph& shape, const ModuleVector& x);

}  // namespace bsg

#endif  // BSG_ALGEBRA_HPP
