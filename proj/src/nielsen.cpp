#include "cogrowth/nielsen.hpp"

#include <algorithm>
#include <deque>

namespace cogrowth {

SpanningTree geodesic_spanning_tree(const CoreGraph& c) {
  SpanningTree t;
  const std::int32_t n = c.vertex_count();
  t.parent.assign(n, SpanningTree::kNoParent);
  t.entering.assign(n, Letter{});
  t.depth.assign(n, -1);
  t.depth[c.root()] = 0;
  std::deque<std::int32_t> queue{c.root()};
  while (!queue.empty()) {
    std::int32_t v = queue.front();
    queue.pop_front();
    for (int s = 0; s < 2 * c.rank(); ++s) {
      Letter x = Letter::from_sigma_index(s);
      std::int32_t u = c.step(v, x);
      if (u == CoreGraph::kNone || t.depth[u] != -1) continue;
      t.parent[u] = v;
      t.entering[u] = x;
      t.depth[u] = t.depth[v] + 1;
      queue.push_back(u);
    }
  }
  return t;
}

namespace {

Word root_path(const SpanningTree& t, std::int32_t v) {
  Word path;
  while (t.parent[v] != SpanningTree::kNoParent) {
    path.push_back(t.entering[v]);
    v = t.parent[v];
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

NielsenSystem schreier_generators(const CoreGraph& c, const SpanningTree& t) {
  NielsenSystem s;
  for (std::int32_t v = 0; v < c.vertex_count(); ++v) {
    for (std::int32_t base = 1; base <= c.rank(); ++base) {
      std::int32_t u = c.forward(v, base);
      if (u == CoreGraph::kNone) continue;
      Letter x{base, 1};
      bool in_tree = (t.parent[u] == v && t.entering[u] == x) ||
                     (t.parent[v] == u && t.entering[v] == x.inverse());
      if (in_tree) continue;
      Word w = root_path(t, v);
      w.push_back(x);
      Word back = root_path(t, u);
      for (auto it = back.rbegin(); it != back.rend(); ++it) w.push_back(it->inverse());
      s.generators.push_back(free_reduce(w, c.rank()));
    }
  }
  return s;
}

NielsenSystem schreier_generators(const CoreGraph& c) {
  return schreier_generators(c, geodesic_spanning_tree(c));
}

bool check_nielsen(const std::vector<ReducedWord>& s) {
  std::vector<ReducedWord> closure;
  for (const ReducedWord& w : s) {
    if (w.empty()) throw DomainError("Nielsen check requires nonempty words");
    closure.push_back(w);
    closure.push_back(invert(w));
  }
  auto are_inverse = [](const ReducedWord& u, const ReducedWord& v) {
    return u == invert(v);
  };
  for (const ReducedWord& u : closure) {
    for (const ReducedWord& v : closure) {
      if (are_inverse(u, v)) continue;
      if (concat_reduce(u, v).length() < std::max(u.length(), v.length())) return false;
    }
  }
  for (const ReducedWord& u : closure) {
    for (const ReducedWord& v : closure) {
      if (are_inverse(u, v)) continue;
      ReducedWord uv = concat_reduce(u, v);
      for (const ReducedWord& w : closure) {
        if (are_inverse(v, w)) continue;
        auto total = static_cast<std::ptrdiff_t>(u.length() + w.length()) -
                     static_cast<std::ptrdiff_t>(v.length());
        if (static_cast<std::ptrdiff_t>(concat_reduce(uv, w).length()) <= total) return false;
      }
    }
  }
  return true;
}

namespace {

std::vector<ReducedWord> signed_generators(const NielsenSystem& s) {
  std::vector<ReducedWord> out;
  out.reserve(2 * s.generators.size());
  for (const ReducedWord& w : s.generators) {
    out.push_back(w);
    out.push_back(invert(w));
  }
  return out;
}

}  // namespace

PolyMatrix nielsen_matrix(const NielsenSystem& s) {
  std::vector<ReducedWord> sg = signed_generators(s);
  const int n = static_cast<int>(sg.size());
  PolyMatrix b(n);
  for (int r = 0; r < n; ++r) {
    const ReducedWord& wr = sg[r];
    for (int c = 0; c < n; ++c) {
      const ReducedWord& wc = sg[c];
      IntPolynomial entry = r == c ? 1 : 0;
      if (wc != invert(wr)) {
        int exponent = static_cast<int>(wr.length()) - beta(wc, wr);
        if (exponent < 0) throw DomainError("cancellation too strong for the counting system");
        entry -= IntPolynomial::monomial(1, exponent);
      }
      b.at(r, c) = entry;
    }
  }
  return b;
}

std::vector<IntPolynomial> nielsen_rhs(const NielsenSystem& s) {
  std::vector<ReducedWord> sg = signed_generators(s);
  std::vector<IntPolynomial> z;
  z.reserve(sg.size());
  for (const ReducedWord& w : sg) {
    z.push_back(IntPolynomial::monomial(1, static_cast<int>(w.length())));
  }
  return z;
}

RationalFunction nielsen_cogrowth(const NielsenSystem& s) {
  if (!check_nielsen(s.generators)) {
    throw DomainError("generating set fails the Nielsen cancellation conditions");
  }
  if (s.generators.empty()) return RationalFunction(1, 1);
  std::vector<RationalFunction> y = solve_linear_system(nielsen_matrix(s), nielsen_rhs(s));
  RationalFunction h(1, 1);
  for (const RationalFunction& part : y) h = h + part;
  return h;
}

}  // namespace cogrowth
