#include "cogrowth/core.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace cogrowth {

CoreGraph::CoreGraph(int rank, std::int32_t vertex_count, std::vector<std::int32_t> fwd,
                     std::vector<std::int32_t> bwd)
    : rank_(rank), vertex_count_(vertex_count), fwd_(std::move(fwd)), bwd_(std::move(bwd)) {
  if (fwd_.size() != static_cast<std::size_t>(vertex_count_) * rank_ ||
      bwd_.size() != fwd_.size()) {
    throw DomainError("core graph table sizes do not match vertex count");
  }
}

std::int32_t CoreGraph::positive_edge_count() const {
  return static_cast<std::int32_t>(
      std::count_if(fwd_.begin(), fwd_.end(), [](std::int32_t t) { return t != kNone; }));
}

PreGraph build_bouquet(int rank, const std::vector<ReducedWord>& generators) {
  if (rank < 1) throw DomainError("rank must be at least 1");
  PreGraph g;
  g.rank = rank;
  for (const ReducedWord& w : generators) {
    validate_rank(w.letters(), rank);
    if (w.empty()) continue;  // trivial generator
    std::int32_t prev = g.root;
    for (const Letter& x : w.letters()) {
      std::int32_t next = g.vertex_count++;
      if (x.sign > 0) {
        g.edges.push_back({prev, x.base, next});
      } else {
        g.edges.push_back({next, x.base, prev});
      }
      prev = next;
    }
    g.identifications.push_back({prev, g.root});
  }
  return g;
}

namespace {

struct Dsu {
  std::vector<std::int32_t> parent;
  explicit Dsu(std::int32_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::int32_t find(std::int32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
};

// Letter-indexed neighbor maps of one folding class.
using EdgeMap = std::map<std::int32_t, std::int32_t>;

// Canonical renumbering: BFS from root following a_1, a_1^-1, a_2, ... over
// adjacency given as callables; returns the CoreGraph or throws if some live
// vertex is unreachable.
template <typename ForwardFn, typename BackwardFn>
CoreGraph canonicalize(int rank, std::int32_t root, std::int32_t live_count,
                       ForwardFn fwd_of, BackwardFn bwd_of) {
  std::vector<std::int32_t> order;
  std::map<std::int32_t, std::int32_t> id;
  order.reserve(live_count);
  id[root] = 0;
  order.push_back(root);
  for (std::size_t head = 0; head < order.size(); ++head) {
    std::int32_t v = order[head];
    for (int s = 0; s < 2 * rank; ++s) {
      int base = s / 2 + 1;
      std::int32_t t = s % 2 == 0 ? fwd_of(v, base) : bwd_of(v, base);
      if (t == CoreGraph::kNone || id.count(t)) continue;
      id[t] = static_cast<std::int32_t>(order.size());
      order.push_back(t);
    }
  }
  if (static_cast<std::int32_t>(order.size()) != live_count) {
    throw DomainError("graph is not connected to the root");
  }
  std::size_t table = static_cast<std::size_t>(live_count) * rank;
  std::vector<std::int32_t> fwd(table, CoreGraph::kNone), bwd(table, CoreGraph::kNone);
  for (std::int32_t v_new = 0; v_new < live_count; ++v_new) {
    std::int32_t v = order[static_cast<std::size_t>(v_new)];
    for (int base = 1; base <= rank; ++base) {
      std::int32_t f = fwd_of(v, base);
      if (f != CoreGraph::kNone) fwd[static_cast<std::size_t>(v_new) * rank + base - 1] = id[f];
      std::int32_t b = bwd_of(v, base);
      if (b != CoreGraph::kNone) bwd[static_cast<std::size_t>(v_new) * rank + base - 1] = id[b];
    }
  }
  return CoreGraph(rank, live_count, std::move(fwd), std::move(bwd));
}

}  // namespace

CoreGraph fold(const PreGraph& g) {
  Dsu dsu(g.vertex_count);
  std::vector<EdgeMap> out(g.vertex_count), in(g.vertex_count);
  std::deque<std::pair<std::int32_t, std::int32_t>> pending(g.identifications.begin(),
                                                            g.identifications.end());

  // Inserting an edge into a class map either records it or, on a label
  // clash, queues the two endpoints for identification (a fold).
  auto add_out = [&](std::int32_t rep, std::int32_t letter, std::int32_t target) {
    auto [it, fresh] = out[rep].try_emplace(letter, target);
    if (!fresh && dsu.find(it->second) != dsu.find(target)) {
      pending.emplace_back(it->second, target);
    }
  };
  auto add_in = [&](std::int32_t rep, std::int32_t letter, std::int32_t origin) {
    auto [it, fresh] = in[rep].try_emplace(letter, origin);
    if (!fresh && dsu.find(it->second) != dsu.find(origin)) {
      pending.emplace_back(it->second, origin);
    }
  };

  for (const PreGraph::Edge& e : g.edges) {
    if (e.letter < 1 || e.letter > g.rank) throw AlphabetError("edge letter outside rank");
    add_out(dsu.find(e.origin), e.letter, e.target);
    add_in(dsu.find(e.target), e.letter, e.origin);
  }

  while (!pending.empty()) {
    auto [a, b] = pending.front();
    pending.pop_front();
    std::int32_t ra = dsu.find(a), rb = dsu.find(b);
    if (ra == rb) continue;
    // Merge the smaller class's maps into the larger's.
    if (out[ra].size() + in[ra].size() < out[rb].size() + in[rb].size()) std::swap(ra, rb);
    dsu.parent[rb] = ra;
    EdgeMap rb_out = std::move(out[rb]), rb_in = std::move(in[rb]);
    out[rb].clear();
    in[rb].clear();
    for (const auto& [letter, target] : rb_out) add_out(ra, letter, target);
    for (const auto& [letter, origin] : rb_in) add_in(ra, letter, origin);
  }

  // Normalize stored endpoints to representatives.
  std::int32_t root = dsu.find(g.root);
  std::vector<std::int32_t> reps;
  for (std::int32_t v = 0; v < g.vertex_count; ++v) {
    if (dsu.find(v) != v) continue;
    reps.push_back(v);
    for (auto& [letter, t] : out[v]) t = dsu.find(t);
    for (auto& [letter, o] : in[v]) o = dsu.find(o);
  }

  // Trim: non-root vertices of extended degree <= 1 lie on no reduced closed
  // path through the root.
  std::vector<bool> dead(g.vertex_count, false);
  auto degree = [&](std::int32_t v) { return out[v].size() + in[v].size(); };
  std::deque<std::int32_t> trim;
  for (std::int32_t v : reps) {
    if (v != root && degree(v) <= 1) trim.push_back(v);
  }
  std::int32_t live = static_cast<std::int32_t>(reps.size());
  while (!trim.empty()) {
    std::int32_t v = trim.front();
    trim.pop_front();
    if (dead[v] || v == root || degree(v) > 1) continue;
    dead[v] = true;
    --live;
    if (degree(v) == 1) {
      std::int32_t neighbor;
      if (!out[v].empty()) {
        auto [letter, t] = *out[v].begin();
        neighbor = t;
        in[neighbor].erase(letter);
        out[v].clear();
      } else {
        auto [letter, o] = *in[v].begin();
        neighbor = o;
        out[neighbor].erase(letter);
        in[v].clear();
      }
      if (neighbor != root && !dead[neighbor] && degree(neighbor) <= 1) {
        trim.push_back(neighbor);
      }
    }
  }

  auto fwd_of = [&](std::int32_t v, int base) {
    auto it = out[v].find(base);
    return it == out[v].end() ? CoreGraph::kNone : it->second;
  };
  auto bwd_of = [&](std::int32_t v, int base) {
    auto it = in[v].find(base);
    return it == in[v].end() ? CoreGraph::kNone : it->second;
  };
  return canonicalize(g.rank, root, live, fwd_of, bwd_of);
}

CoreGraph core_of(int rank, const std::vector<ReducedWord>& generators) {
  return fold(build_bouquet(rank, generators));
}

bool membership(const CoreGraph& c, const ReducedWord& w) {
  validate_rank(w.letters(), c.rank());
  std::int32_t v = c.root();
  for (const Letter& x : w.letters()) {
    v = c.step(v, x);
    if (v == CoreGraph::kNone) return false;
  }
  return v == c.root();
}

int extended_degree(const CoreGraph& c, std::int32_t v) {
  if (v < 0 || v >= c.vertex_count()) throw DomainError("invalid vertex id");
  int deg = 0;
  for (int base = 1; base <= c.rank(); ++base) {
    deg += c.forward(v, base) != CoreGraph::kNone;
    deg += c.backward(v, base) != CoreGraph::kNone;
  }
  return deg;
}

std::optional<std::int64_t> subgroup_index(const CoreGraph& c) {
  for (std::int32_t v = 0; v < c.vertex_count(); ++v) {
    if (extended_degree(c, v) != 2 * c.rank()) return std::nullopt;
  }
  return c.vertex_count();
}

bool is_normal(const CoreGraph& c) {
  if (!subgroup_index(c)) return false;
  const std::int32_t n = c.vertex_count();
  // Labels are deterministic and the graph 2m-regular, so a conflict-free
  // synchronized walk from (root, v) is exactly a rooted isomorphism.
  for (std::int32_t v = 1; v < n; ++v) {
    std::vector<std::int32_t> match(n, CoreGraph::kNone);
    std::vector<std::int32_t> stack{0};
    match[0] = v;
    bool ok = true;
    while (ok && !stack.empty()) {
      std::int32_t u = stack.back();
      stack.pop_back();
      for (int s = 0; s < 2 * c.rank() && ok; ++s) {
        Letter x = Letter::from_sigma_index(s);
        std::int32_t a = c.step(u, x), b = c.step(match[u], x);
        if (match[a] == CoreGraph::kNone) {
          match[a] = b;
          stack.push_back(a);
        } else if (match[a] != b) {
          ok = false;
        }
      }
    }
    if (!ok) return false;
  }
  return true;
}

bool is_conjugacy_reduced(const CoreGraph& c) {
  if (c.positive_edge_count() == 0) {
    throw DomainError("conjugacy reduction is undefined for the trivial subgroup");
  }
  return extended_degree(c, c.root()) >= 2;
}

std::pair<ReducedWord, CoreGraph> conjugacy_reduce(const CoreGraph& c) {
  if (c.positive_edge_count() == 0) {
    throw DomainError("conjugacy reduction is undefined for the trivial subgroup");
  }
  const int rank = c.rank();
  std::vector<std::int32_t> fwd(c.vertex_count() * rank), bwd(c.vertex_count() * rank);
  for (std::int32_t v = 0; v < c.vertex_count(); ++v) {
    for (int base = 1; base <= rank; ++base) {
      fwd[v * rank + base - 1] = c.forward(v, base);
      bwd[v * rank + base - 1] = c.backward(v, base);
    }
  }
  std::vector<bool> dead(c.vertex_count(), false);
  auto degree = [&](std::int32_t v) {
    int d = 0;
    for (int i = 0; i < rank; ++i) {
      d += fwd[v * rank + i] != CoreGraph::kNone;
      d += bwd[v * rank + i] != CoreGraph::kNone;
    }
    return d;
  };

  std::int32_t root = c.root();
  std::int32_t live = c.vertex_count();
  Word tail;  // letters read outward along the root tail
  while (degree(root) == 1) {
    for (int s = 0; s < 2 * rank; ++s) {
      Letter x = Letter::from_sigma_index(s);
      int slot = root * rank + x.base - 1;
      std::int32_t u = x.sign > 0 ? fwd[slot] : bwd[slot];
      if (u == CoreGraph::kNone) continue;
      tail.push_back(x);
      if (x.sign > 0) {
        fwd[slot] = CoreGraph::kNone;
        bwd[u * rank + x.base - 1] = CoreGraph::kNone;
      } else {
        bwd[slot] = CoreGraph::kNone;
        fwd[u * rank + x.base - 1] = CoreGraph::kNone;
      }
      dead[root] = true;
      --live;
      root = u;
      break;
    }
  }

  ReducedWord conjugator = invert(ReducedWord::from_reduced(tail));
  auto fwd_of = [&](std::int32_t v, int base) { return fwd[v * rank + base - 1]; };
  auto bwd_of = [&](std::int32_t v, int base) { return bwd[v * rank + base - 1]; };
  return {conjugator, canonicalize(rank, root, live, fwd_of, bwd_of)};
}

int subgroup_rank(const CoreGraph& c) {
  return c.positive_edge_count() - c.vertex_count() + 1;
}

namespace {

std::uint64_t count_paths(const CoreGraph& c, std::int32_t v, int forbidden_sigma,
                          int remaining) {
  if (remaining == 0) return v == c.root() ? 1 : 0;
  std::uint64_t total = 0;
  for (int s = 0; s < 2 * c.rank(); ++s) {
    if (s == forbidden_sigma) continue;
    std::int32_t u = c.step(v, Letter::from_sigma_index(s));
    if (u == CoreGraph::kNone) continue;
    total += count_paths(c, u, inverse_sigma(s), remaining - 1);
  }
  return total;
}

}  // namespace

std::uint64_t enumerate_count(const CoreGraph& c, int n) {
  if (n < 0) throw DomainError("length must be nonnegative");
  if (n > 12) throw DomainError("enumeration oracle is capped at length 12");
  if (n == 0) return 1;
  return count_paths(c, c.root(), -1, n);
}

}  // namespace cogrowth
