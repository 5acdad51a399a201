#include "cogrowth/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace cogrowth {

int FiniteAutomaton::edge_count() const {
  return static_cast<int>(std::count_if(transition.begin(), transition.end(),
                                        [](std::int32_t t) { return t != kNone; }));
}

bool FiniteAutomaton::is_initial(std::int32_t s) const {
  return std::binary_search(initials.begin(), initials.end(), s);
}

bool FiniteAutomaton::is_final(std::int32_t s) const {
  return std::binary_search(finals.begin(), finals.end(), s);
}

std::vector<std::string> sigma_letter_names(int rank) {
  std::vector<std::string> names;
  names.reserve(2 * rank);
  for (int s = 0; s < 2 * rank; ++s) names.push_back(to_text(Letter::from_sigma_index(s)));
  return names;
}

FiniteAutomaton build_free_group_dfa(int rank) {
  if (rank < 1) throw DomainError("rank must be at least 1");
  FiniteAutomaton a;
  a.letter_names = sigma_letter_names(rank);
  const int k = 2 * rank;
  a.state_names.push_back("q0");
  for (int s = 0; s < k; ++s) a.state_names.push_back("q_" + a.letter_names[s]);
  a.transition.assign(static_cast<std::size_t>(k + 1) * k, FiniteAutomaton::kNone);
  for (int s = 0; s < k; ++s) a.delta_ref(0, s) = 1 + s;
  for (int from = 0; from < k; ++from) {
    for (int s = 0; s < k; ++s) {
      if (s == inverse_sigma(from)) continue;  // would unreduce the word
      a.delta_ref(1 + from, s) = 1 + s;
    }
  }
  a.initials = {0};
  for (int q = 0; q <= k; ++q) a.finals.push_back(q);
  return a;
}

FiniteAutomaton core_to_dfa(const CoreGraph& c) {
  FiniteAutomaton a;
  a.letter_names = sigma_letter_names(c.rank());
  const int k = 2 * c.rank();
  for (std::int32_t v = 0; v < c.vertex_count(); ++v) {
    a.state_names.push_back("v" + std::to_string(v));
  }
  a.transition.assign(static_cast<std::size_t>(c.vertex_count()) * k, FiniteAutomaton::kNone);
  for (std::int32_t v = 0; v < c.vertex_count(); ++v) {
    for (int s = 0; s < k; ++s) {
      a.delta_ref(v, s) = c.step(v, Letter::from_sigma_index(s));
    }
  }
  a.initials = {c.root()};
  a.finals = {c.root()};
  return a;
}

FiniteAutomaton product(const FiniteAutomaton& a1, const FiniteAutomaton& a2) {
  if (a1.letter_names != a2.letter_names) throw DomainError("product: alphabet mismatch");
  if (a1.initials.size() != 1 || a2.initials.size() != 1) {
    throw DomainError("product requires single initial states");
  }
  const int k = a1.alphabet_size();
  FiniteAutomaton p;
  p.letter_names = a1.letter_names;
  std::map<std::pair<std::int32_t, std::int32_t>, std::int32_t> id;
  std::vector<std::pair<std::int32_t, std::int32_t>> pairs;
  auto intern = [&](std::int32_t s1, std::int32_t s2) {
    auto [it, fresh] = id.try_emplace({s1, s2}, static_cast<std::int32_t>(pairs.size()));
    if (fresh) pairs.emplace_back(s1, s2);
    return it->second;
  };
  intern(a1.initials[0], a2.initials[0]);
  for (std::size_t head = 0; head < pairs.size(); ++head) {
    auto [s1, s2] = pairs[head];
    for (int s = 0; s < k; ++s) {
      std::int32_t t1 = a1.delta(s1, s), t2 = a2.delta(s2, s);
      if (t1 == FiniteAutomaton::kNone || t2 == FiniteAutomaton::kNone) continue;
      intern(t1, t2);
    }
  }
  const int n = static_cast<int>(pairs.size());
  p.transition.assign(static_cast<std::size_t>(n) * k, FiniteAutomaton::kNone);
  for (int q = 0; q < n; ++q) {
    auto [s1, s2] = pairs[q];
    p.state_names.push_back("(" + a1.state_names[s1] + "," + a2.state_names[s2] + ")");
    for (int s = 0; s < k; ++s) {
      std::int32_t t1 = a1.delta(s1, s), t2 = a2.delta(s2, s);
      if (t1 == FiniteAutomaton::kNone || t2 == FiniteAutomaton::kNone) continue;
      p.delta_ref(q, s) = id.at({t1, t2});
    }
    if (a1.is_final(s1) && a2.is_final(s2)) p.finals.push_back(q);
  }
  p.initials = {0};
  return p;
}

FiniteAutomaton essential_part(const FiniteAutomaton& a) {
  const int n = a.state_count(), k = a.alphabet_size();
  std::vector<bool> reach(n, false), coreach(n, false);
  std::deque<std::int32_t> bfs(a.initials.begin(), a.initials.end());
  for (std::int32_t s : a.initials) reach[s] = true;
  while (!bfs.empty()) {
    std::int32_t s = bfs.front();
    bfs.pop_front();
    for (int x = 0; x < k; ++x) {
      std::int32_t t = a.delta(s, x);
      if (t != FiniteAutomaton::kNone && !reach[t]) {
        reach[t] = true;
        bfs.push_back(t);
      }
    }
  }
  std::vector<std::vector<std::int32_t>> rev(n);
  for (int s = 0; s < n; ++s) {
    for (int x = 0; x < k; ++x) {
      std::int32_t t = a.delta(s, x);
      if (t != FiniteAutomaton::kNone) rev[t].push_back(s);
    }
  }
  for (std::int32_t s : a.finals) {
    if (!coreach[s]) {
      coreach[s] = true;
      bfs.push_back(s);
    }
  }
  while (!bfs.empty()) {
    std::int32_t t = bfs.front();
    bfs.pop_front();
    for (std::int32_t s : rev[t]) {
      if (!coreach[s]) {
        coreach[s] = true;
        bfs.push_back(s);
      }
    }
  }

  std::vector<std::int32_t> keep(n, FiniteAutomaton::kNone);
  FiniteAutomaton e;
  e.letter_names = a.letter_names;
  for (int s = 0; s < n; ++s) {
    if (reach[s] && coreach[s]) {
      keep[s] = static_cast<std::int32_t>(e.state_names.size());
      e.state_names.push_back(a.state_names[s]);
    }
  }
  e.transition.assign(static_cast<std::size_t>(e.state_count()) * k, FiniteAutomaton::kNone);
  for (int s = 0; s < n; ++s) {
    if (keep[s] == FiniteAutomaton::kNone) continue;
    for (int x = 0; x < k; ++x) {
      std::int32_t t = a.delta(s, x);
      if (t != FiniteAutomaton::kNone && keep[t] != FiniteAutomaton::kNone) {
        e.delta_ref(keep[s], x) = keep[t];
      }
    }
  }
  for (std::int32_t s : a.initials) {
    if (keep[s] != FiniteAutomaton::kNone) e.initials.push_back(keep[s]);
  }
  for (std::int32_t s : a.finals) {
    if (keep[s] != FiniteAutomaton::kNone) e.finals.push_back(keep[s]);
  }
  return e;
}

FiniteAutomaton build_D_H(const CoreGraph& c) {
  const int k = 2 * c.rank();
  FiniteAutomaton d;
  d.letter_names = sigma_letter_names(c.rank());
  // State (v, x) exists iff v has an incoming x-edge, i.e. step(v, x^-1) is
  // defined. q* comes first; the rest follow (vertex, letter) order.
  std::vector<std::int32_t> state_of(static_cast<std::size_t>(c.vertex_count()) * k,
                                     FiniteAutomaton::kNone);
  d.state_names.push_back("q*");
  for (std::int32_t v = 0; v < c.vertex_count(); ++v) {
    for (int s = 0; s < k; ++s) {
      Letter x = Letter::from_sigma_index(s);
      if (c.step(v, x.inverse()) == CoreGraph::kNone) continue;
      state_of[static_cast<std::size_t>(v) * k + s] =
          static_cast<std::int32_t>(d.state_names.size());
      d.state_names.push_back("(v" + std::to_string(v) + "," + d.letter_names[s] + ")");
    }
  }
  const int n = d.state_count();
  d.transition.assign(static_cast<std::size_t>(n) * k, FiniteAutomaton::kNone);
  for (int s = 0; s < k; ++s) {
    std::int32_t t = c.step(c.root(), Letter::from_sigma_index(s));
    if (t != CoreGraph::kNone) {
      d.delta_ref(0, s) = state_of[static_cast<std::size_t>(t) * k + s];
    }
  }
  for (std::int32_t v = 0; v < c.vertex_count(); ++v) {
    for (int from = 0; from < k; ++from) {
      std::int32_t q = state_of[static_cast<std::size_t>(v) * k + from];
      if (q == FiniteAutomaton::kNone) continue;
      for (int s = 0; s < k; ++s) {
        if (s == inverse_sigma(from)) continue;
        std::int32_t t = c.step(v, Letter::from_sigma_index(s));
        if (t != CoreGraph::kNone) {
          d.delta_ref(q, s) = state_of[static_cast<std::size_t>(t) * k + s];
        }
      }
    }
  }
  d.initials = {0};
  d.finals.push_back(0);
  for (int s = 0; s < k; ++s) {
    std::int32_t q = state_of[static_cast<std::size_t>(c.root()) * k + s];
    if (q != FiniteAutomaton::kNone) d.finals.push_back(q);
  }
  std::sort(d.finals.begin(), d.finals.end());
  return d;
}

FiniteAutomaton build_Dhat_H(const FiniteAutomaton& d) {
  if (d.state_count() < 1 || d.state_names[0] != "q*" || d.initials != std::vector<std::int32_t>{0}) {
    throw DomainError("expected an automaton built by build_D_H");
  }
  if (d.state_count() == 1) {
    throw DomainError("the trivial subgroup has no reduced automaton");
  }
  const int k = d.alphabet_size(), n = d.state_count() - 1;
  FiniteAutomaton h;
  h.letter_names = d.letter_names;
  h.state_names.assign(d.state_names.begin() + 1, d.state_names.end());
  h.transition.assign(static_cast<std::size_t>(n) * k, FiniteAutomaton::kNone);
  for (int s = 1; s <= n; ++s) {
    for (int x = 0; x < k; ++x) {
      std::int32_t t = d.delta(s, x);
      if (t == FiniteAutomaton::kNone) continue;
      if (t == 0) throw DomainError("q* must have no incoming transition");
      h.delta_ref(s - 1, x) = t - 1;
    }
  }
  for (std::int32_t f : d.finals) {
    if (f != 0) h.initials.push_back(f - 1);
  }
  h.finals = h.initials;
  return h;
}

FiniteAutomaton minimize(const FiniteAutomaton& a) {
  if (a.initials.size() > 1) throw DomainError("minimize requires a single initial state");
  FiniteAutomaton e = essential_part(a);
  const int n = e.state_count(), k = e.alphabet_size();
  if (n == 0) return e;

  // Moore refinement with an implicit dead state at index n (all missing
  // transitions point there; it is non-final and loops to itself).
  std::vector<int> block(n + 1);
  for (int s = 0; s < n; ++s) block[s] = e.is_final(s) ? 0 : 1;
  block[n] = 1;
  int blocks = 2;
  while (true) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> next(n + 1);
    for (int s = 0; s <= n; ++s) {
      std::vector<int> sig{block[s]};
      for (int x = 0; x < k; ++x) {
        std::int32_t t = s == n ? n : e.delta(s, x);
        sig.push_back(block[t == FiniteAutomaton::kNone ? n : t]);
      }
      auto [it, fresh] = sig_ids.try_emplace(sig, static_cast<int>(sig_ids.size()));
      next[s] = it->second;
    }
    if (static_cast<int>(sig_ids.size()) == blocks) break;
    blocks = static_cast<int>(sig_ids.size());
    block = std::move(next);
  }

  // Quotient, dropping the dead state's block; blocks numbered by their
  // smallest member for a deterministic result.
  std::vector<std::int32_t> rep(blocks, FiniteAutomaton::kNone);
  for (int s = 0; s < n; ++s) {
    if (s != n && block[s] == block[n]) continue;  // dead-equivalent: unreachable here
    if (rep[block[s]] == FiniteAutomaton::kNone) rep[block[s]] = s;
  }
  std::vector<int> order;
  for (int b = 0; b < blocks; ++b) {
    if (b != block[n] && rep[b] != FiniteAutomaton::kNone) order.push_back(b);
  }
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return rep[x] < rep[y]; });
  std::vector<std::int32_t> new_id(blocks, FiniteAutomaton::kNone);
  for (std::size_t i = 0; i < order.size(); ++i) new_id[order[i]] = static_cast<std::int32_t>(i);

  FiniteAutomaton m;
  m.letter_names = e.letter_names;
  std::vector<std::vector<std::string>> members(order.size());
  for (int s = 0; s < n; ++s) {
    if (new_id[block[s]] != FiniteAutomaton::kNone) {
      members[new_id[block[s]]].push_back(e.state_names[s]);
    }
  }
  for (auto& group : members) {
    std::string name = group.size() == 1 ? group[0] : "{" + group[0];
    for (std::size_t i = 1; i < group.size(); ++i) name += "," + group[i];
    if (group.size() > 1) name += "}";
    m.state_names.push_back(name);
  }
  m.transition.assign(members.size() * static_cast<std::size_t>(k), FiniteAutomaton::kNone);
  for (std::size_t b = 0; b < order.size(); ++b) {
    std::int32_t s = rep[order[b]];
    for (int x = 0; x < k; ++x) {
      std::int32_t t = e.delta(s, x);
      if (t != FiniteAutomaton::kNone && new_id[block[t]] != FiniteAutomaton::kNone) {
        m.delta_ref(static_cast<std::int32_t>(b), x) = new_id[block[t]];
      }
    }
  }
  for (std::int32_t s : e.initials) m.initials.push_back(new_id[block[s]]);
  for (std::int32_t s : e.finals) {
    std::int32_t b = new_id[block[s]];
    if (m.finals.empty() || m.finals.back() != b) m.finals.push_back(b);
  }
  std::sort(m.initials.begin(), m.initials.end());
  m.initials.erase(std::unique(m.initials.begin(), m.initials.end()), m.initials.end());
  std::sort(m.finals.begin(), m.finals.end());
  m.finals.erase(std::unique(m.finals.begin(), m.finals.end()), m.finals.end());
  return m;
}

bool is_ergodic(const FiniteAutomaton& a) {
  const int n = a.state_count(), k = a.alphabet_size();
  if (n <= 1) return true;
  std::vector<std::vector<std::int32_t>> fwd(n), rev(n);
  for (int s = 0; s < n; ++s) {
    for (int x = 0; x < k; ++x) {
      std::int32_t t = a.delta(s, x);
      if (t != FiniteAutomaton::kNone) {
        fwd[s].push_back(t);
        rev[t].push_back(s);
      }
    }
  }
  auto covers = [&](const std::vector<std::vector<std::int32_t>>& adj) {
    std::vector<bool> seen(n, false);
    std::vector<std::int32_t> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
      std::int32_t s = stack.back();
      stack.pop_back();
      for (std::int32_t t : adj[s]) {
        if (!seen[t]) {
          seen[t] = true;
          ++count;
          stack.push_back(t);
        }
      }
    }
    return count == n;
  };
  return covers(fwd) && covers(rev);
}

BigInt count_accepted(const FiniteAutomaton& a, int n) {
  if (n < 0) throw DomainError("length must be nonnegative");
  const int q = a.state_count(), k = a.alphabet_size();
  std::vector<BigInt> cur(q, 0);
  for (std::int32_t s : a.initials) cur[s] = 1;
  for (int step = 0; step < n; ++step) {
    std::vector<BigInt> next(q, 0);
    for (int s = 0; s < q; ++s) {
      if (cur[s] == 0) continue;
      for (int x = 0; x < k; ++x) {
        std::int32_t t = a.delta(s, x);
        if (t != FiniteAutomaton::kNone) next[t] += cur[s];
      }
    }
    cur = std::move(next);
  }
  BigInt total = 0;
  for (std::int32_t f : a.finals) total += cur[f];
  return total;
}

std::uint64_t path_count_per_word(const FiniteAutomaton& a, const std::vector<int>& letters) {
  const int q = a.state_count();
  std::vector<std::uint64_t> cur(q, 0);
  for (std::int32_t s : a.initials) cur[s] = 1;
  for (int x : letters) {
    if (x < 0 || x >= a.alphabet_size()) throw AlphabetError("letter outside automaton alphabet");
    std::vector<std::uint64_t> next(q, 0);
    for (int s = 0; s < q; ++s) {
      if (cur[s] == 0) continue;
      std::int32_t t = a.delta(s, x);
      if (t != FiniteAutomaton::kNone) next[t] += cur[s];
    }
    cur = std::move(next);
  }
  std::uint64_t total = 0;
  for (std::int32_t f : a.finals) total += cur[f];
  return total;
}

std::uint64_t path_count_per_word(const FiniteAutomaton& a, const Word& w) {
  std::vector<int> letters;
  letters.reserve(w.size());
  for (const Letter& x : w) letters.push_back(x.sigma_index());
  return path_count_per_word(a, letters);
}

bool accepts(const FiniteAutomaton& a, const Word& w) {
  return path_count_per_word(a, w) > 0;
}

FiniteAutomaton base_automaton(const FiniteAutomaton& a) {
  const int n = a.state_count(), k = a.alphabet_size();
  FiniteAutomaton b;
  b.state_names = a.state_names;
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;  // (state, letter)
  for (int s = 0; s < n; ++s) {
    for (int x = 0; x < k; ++x) {
      if (a.delta(s, x) != FiniteAutomaton::kNone) edges.emplace_back(s, x);
    }
  }
  b.letter_names.reserve(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) b.letter_names.push_back("e" + std::to_string(e));
  b.transition.assign(static_cast<std::size_t>(n) * edges.size(), FiniteAutomaton::kNone);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [s, x] = edges[e];
    b.delta_ref(s, static_cast<int>(e)) = a.delta(s, x);
  }
  for (int s = 0; s < n; ++s) {
    b.initials.push_back(s);
    b.finals.push_back(s);
  }
  return b;
}

CountMatrix adjacency_matrix(const FiniteAutomaton& a) {
  CountMatrix m;
  m.n = a.state_count();
  m.a.assign(static_cast<std::size_t>(m.n) * m.n, 0);
  m.state_names = a.state_names;
  for (int s = 0; s < m.n; ++s) {
    for (int x = 0; x < a.alphabet_size(); ++x) {
      std::int32_t t = a.delta(s, x);
      if (t != FiniteAutomaton::kNone) ++m.at(s, t);
    }
  }
  return m;
}

}  // namespace cogrowth
