#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cogrowth/words.hpp"

namespace cogrowth {

// Intermediate multigraph: a bouquet of generator cycles before folding.
// Cycles are laid out as open arcs; `identifications` lists vertex pairs to
// glue (each arc end onto the root) as the first step of fold().
struct PreGraph {
  struct Edge {
    std::int32_t origin;
    std::int32_t letter;  // positive generator index, 1-based
    std::int32_t target;
  };

  int rank = 0;
  std::int32_t vertex_count = 1;
  std::int32_t root = 0;
  std::vector<Edge> edges;
  std::vector<std::pair<std::int32_t, std::int32_t>> identifications;
};

// Folded rooted core graph in canonical form: vertices numbered by BFS from
// the root (always vertex 0) following letters in the order
// a_1 < a_1^-1 < a_2 < a_2^-1 < ... . Deterministic and co-deterministic per
// letter, so equality of canonical forms is rooted labeled isomorphism.
class CoreGraph {
 public:
  static constexpr std::int32_t kNone = -1;

  CoreGraph() = default;
  // Tables are (vertex, base-1) indexed, kNone for absent edges; callers
  // (fold, tests) are responsible for canonical numbering.
  CoreGraph(int rank, std::int32_t vertex_count, std::vector<std::int32_t> fwd,
            std::vector<std::int32_t> bwd);

  int rank() const { return rank_; }
  std::int32_t vertex_count() const { return vertex_count_; }
  std::int32_t root() const { return 0; }

  // Target of the positive edge (v, a_base), or kNone.
  std::int32_t forward(std::int32_t v, int base) const {
    return fwd_[static_cast<std::size_t>(v) * rank_ + base - 1];
  }
  // Origin of the positive edge (<result>, a_base, v), or kNone.
  std::int32_t backward(std::int32_t v, int base) const {
    return bwd_[static_cast<std::size_t>(v) * rank_ + base - 1];
  }
  // Extended transition by an arbitrary letter.
  std::int32_t step(std::int32_t v, const Letter& x) const {
    return x.sign > 0 ? forward(v, x.base) : backward(v, x.base);
  }

  std::int32_t positive_edge_count() const;

  bool operator==(const CoreGraph&) const = default;

 private:
  int rank_ = 0;
  std::int32_t vertex_count_ = 1;
  std::vector<std::int32_t> fwd_, bwd_;
};

// One cycle at the root per nonempty generator (empty generators dropped).
PreGraph build_bouquet(int rank, const std::vector<ReducedWord>& generators);

// Stallings folding: glue, fold to determinism in both directions (union-find
// merge queue), trim non-root vertices of extended degree <= 1, canonicalize.
// The result is independent of fold order.
CoreGraph fold(const PreGraph& g);

// fold(build_bouquet(...)).
CoreGraph core_of(int rank, const std::vector<ReducedWord>& generators);

// w in H: the trace of w from the root stays defined and ends at the root.
bool membership(const CoreGraph& c, const ReducedWord& w);

// Number of letters x in Sigma with an outgoing x-edge at v (0..2m).
int extended_degree(const CoreGraph& c, std::int32_t v);

// finite(vertex count) iff the extended core is 2m-regular, otherwise infinite.
std::optional<std::int64_t> subgroup_index(const CoreGraph& c);

// H is normal iff 2m-regular and every vertex can serve as the root.
bool is_normal(const CoreGraph& c);

// Root degree >= 2. Throws DomainError for the trivial subgroup.
bool is_conjugacy_reduced(const CoreGraph& c);

// Re-roots along the unique edge at a degree-1 root until conjugacy reduced;
// returns (g, core of gHg^-1). Throws DomainError for the trivial subgroup.
std::pair<ReducedWord, CoreGraph> conjugacy_reduce(const CoreGraph& c);

// Free rank of H: (#positive edges) - (#vertices) + 1.
int subgroup_rank(const CoreGraph& c);

// Oracle: counts reduced words of length n in H by explicit backtracking over
// non-backtracking root-to-root paths. Deliberately exponential; n <= 12.
std::uint64_t enumerate_count(const CoreGraph& c, int n);

}  // namespace cogrowth
