#include <algorithm>

#include "bsg/error.hpp"
#include "bsg/graph.hpp"

namespace bsg {

VertexId letter_source(const Graph& g, Letter x) {
  return x.reversed() ? g.dst(x.edge) : g.src(x.edge);
}

VertexId letter_range(const Graph& g, Letter x) {
  return x.reversed() ? g.src(x.edge) : g.dst(x.edge);
}

VertexId range(const Graph& g, const Walk& p) {
  return p.letters.empty() ? p.base : letter_range(g, p.letters.back());
}

bool is_walk(const Graph& g, const Walk& p) {
  if (!g.has_vertex(p.base)) return false;
  VertexId at = p.base;
  for (Letter x : p.letters) {
    if (!g.has_edge(x.edge) || letter_source(g, x) != at) return false;
    at = letter_range(g, x);
  }
  return true;
}

Walk compose_walks(const Graph& g, const Walk& p, const Walk& q) {
  if (range(g, p) != q.base) {
    throw Error(ErrorKind::NonComposable,
                format_walk(g, p) + " then " + format_walk(g, q));
  }
  Walk out = p;
  out.letters.insert(out.letters.end(), q.letters.begin(), q.letters.end());
  return out;
}

Walk reverse_walk(const Graph& g, const Walk& p) {
  Walk out{range(g, p), {}};
  out.letters.reserve(p.letters.size());
  for (auto it = p.letters.rbegin(); it != p.letters.rend(); ++it) {
    out.letters.push_back(it->inverse());
  }
  return out;
}

bool is_reduced(const Walk& p) {
  return std::adjacent_find(p.letters.begin(), p.letters.end(),
                            [](Letter a, Letter b) { return b == a.inverse(); }) ==
         p.letters.end();
}

// Free reduction with a stack; the result is independent of the order in
// which spurs are cancelled.
Walk reduce_walk(const Walk& p) {
  Walk out{p.base, {}};
  out.letters.reserve(p.letters.size());
  for (Letter x : p.letters) {
    if (!out.letters.empty() && out.letters.back() == x.inverse()) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(x);
    }
  }
  return out;
}

Walk star_compose(const Graph& g, const Walk& p, const Walk& q) {
  return reduce_walk(compose_walks(g, p, q));
}

namespace {

void extend_walks(const Graph& g, Walk& current, VertexId at, std::size_t remaining,
                  std::vector<Walk>& out) {
  out.push_back(current);
  if (remaining == 0) return;
  // Letters leaving `at`, in (edge id, direction) order.
  std::vector<Letter> options;
  for (EdgeId e : g.out_edges(at)) options.push_back(fwd(e));
  for (EdgeId e : g.in_edges(at)) options.push_back(rev(e));
  std::sort(options.begin(), options.end());
  for (Letter x : options) {
    current.letters.push_back(x);
    extend_walks(g, current, letter_range(g, x), remaining - 1, out);
    current.letters.pop_back();
  }
}

}  // namespace

std::vector<Walk> enumerate_walks(const Graph& g, VertexId u, std::size_t maxlen) {
  if (!g.has_vertex(u)) throw Error(ErrorKind::UnknownVertex, "enumerate_walks");
  std::vector<Walk> out;
  Walk current = Walk::trivial(u);
  extend_walks(g, current, u, maxlen, out);
  return out;
}

std::string format_walk(const Graph& g, const Walk& p) {
  if (p.is_trivial()) return "@" + g.name(p.base);
  std::string out;
  for (std::size_t i = 0; i < p.letters.size(); ++i) {
    if (i > 0) out += '.';
    out += g.name(p.letters[i].edge);
    if (p.letters[i].reversed()) out += '*';
  }
  return out;
}

Walk parse_walk(const Graph& g, std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::MalformedWalk, "empty walk literal");
  if (text.front() == '@') {
    auto v = g.find_vertex(text.substr(1));
    if (!v) throw Error(ErrorKind::UnknownVertex, "'" + std::string(text.substr(1)) + "'");
    return Walk::trivial(*v);
  }
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t dot = text.find('.', pos);
    if (dot == std::string_view::npos) dot = text.size();
    std::string_view token = text.substr(pos, dot - pos);
    Direction dir = Direction::forward;
    if (!token.empty() && token.back() == '*') {
      dir = Direction::reverse;
      token.remove_suffix(1);
    }
    if (token.empty()) {
      throw Error(ErrorKind::MalformedWalk, "empty letter in '" + std::string(text) + "'");
    }
    auto e = g.find_edge(token);
    if (!e) {
      throw Error(ErrorKind::MalformedWalk, "unknown edge '" + std::string(token) + "'");
    }
    letters.push_back({*e, dir});
    pos = dot + 1;
  }
  Walk out{letter_source(g, letters.front()), std::move(letters)};
  if (!is_walk(g, out)) {
    throw Error(ErrorKind::MalformedWalk, "letters not composable in '" + std::string(text) + "'");
  }
  return out;
}

}  // namespace bsg
