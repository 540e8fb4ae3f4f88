#include "bsg/algebra.hpp"

#include <algorithm>
#include <cctype>

#include "bsg/error.hpp"

namespace bsg {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

bool is_rational_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return all_digits(s);
  return all_digits(s.substr(0, slash)) && all_digits(s.substr(slash + 1));
}

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  if (!is_rational_literal(text)) {
    throw Error(ErrorKind::Parse, "not a rational: '" + std::string(text) + "'");
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  auto slash = s.find('/');
  if (slash != std::string::npos && mpz_class(s.substr(slash + 1)) == 0) {
    throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
  }
  Scalar k(s, 10);
  k.canonicalize();
  return k;
}

std::string format_scalar(const Scalar& k) { return k.get_str(); }

AlgebraElement multiply(const Graph& g, const AlgebraElement& a, const AlgebraElement& b) {
  for (const auto* side : {&a, &b}) {
    for (const auto& [p, c] : side->terms()) {
      if (!is_walk(g, p)) throw Error(ErrorKind::BaseMismatch, "walk not in base graph");
    }
  }
  AlgebraElement out;
  for (const auto& [p, c] : a.terms()) {
    const VertexId end = range(g, p);
    for (const auto& [q, d] : b.terms()) {
      if (q.base != end) continue;
      Walk pq = p;
      pq.letters.insert(pq.letters.end(), q.letters.begin(), q.letters.end());
      out.add(std::move(pq), c * d);
    }
  }
  return out;
}

std::vector<std::pair<Scalar, std::string>> parse_combination(std::string_view text) {
  auto tokens = split_ws(text);
  if (tokens.empty()) throw Error(ErrorKind::Parse, "empty expression");
  if (tokens.size() == 1 && tokens[0] == "0") return {};

  std::vector<std::pair<Scalar, std::string>> out;
  int sign = 1;
  bool expect_term = true;
  for (std::string_view tok : tokens) {
    if (!expect_term) {
      if (tok != "+" && tok != "-") {
        throw Error(ErrorKind::Parse, "expected '+' or '-' before '" + std::string(tok) + "'");
      }
      sign = tok == "-" ? -1 : 1;
      expect_term = true;
      continue;
    }
    if (tok == "+" || tok == "-") {
      throw Error(ErrorKind::Parse, "dangling operator in '" + std::string(text) + "'");
    }
    Scalar coeff = 1;
    std::string_view name = tok;
    auto star = tok.find('*');
    if (star != std::string_view::npos && is_rational_literal(tok.substr(0, star))) {
      coeff = parse_scalar(tok.substr(0, star));
      name = tok.substr(star + 1);
    } else if (tok.size() > 1 && tok.front() == '-') {
      coeff = -1;
      name = tok.substr(1);
    }
    if (name.empty()) throw Error(ErrorKind::Parse, "missing term after '" + std::string(tok) + "'");
    out.emplace_back(coeff * sign, std::string(name));
    expect_term = false;
    sign = 1;
  }
  if (expect_term) throw Error(ErrorKind::Parse, "expression ends with an operator");
  return out;
}

AlgebraElement parse_element(const Graph& g, std::string_view text) {
  AlgebraElement out;
  for (auto& [c, literal] : parse_combination(text)) out.add(parse_walk(g, literal), c);
  return out;
}

ModuleVector parse_vector(const Graph& shape, std::string_view text) {
  ModuleVector out;
  for (auto& [c, name] : parse_combination(text)) out.add(shape.vertex(name), c);
  return out;
}

std::string format_combination(std::vector<std::pair<std::string, Scalar>> rows) {
  if (rows.empty()) return "0";
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Scalar c = rows[i].second;
    if (i == 0) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    out += format_scalar(c) + "*" + rows[i].first;
  }
  return out;
}

std::string format_element(const Graph& g, const AlgebraElement& a) {
  std::vector<std::pair<std::string, Scalar>> rows;
  for (const auto& [p, c] : a.terms()) rows.emplace_back(format_walk(g, p), c);
  return format_combination(std::move(rows));
}

std::string format_vector(const Graph& shape, const ModuleVector& x) {
  std::vector<std::pair<std::string, Scalar>> rows;
  for (const auto& [v, c] : x.terms()) rows.emplace_back(shape.name(v), c);
  return format_combination(std::move(rows));
}

}  // namespace bsg
