#pragma once

#include "cogrowth/core.hpp"
#include "cogrowth/polynomial.hpp"
#include "cogrowth/words.hpp"

namespace cogrowth {

// Geodesic (BFS) spanning tree of a core graph rooted at v0.
struct SpanningTree {
  static constexpr std::int32_t kNoParent = -1;

  std::vector<std::int32_t> parent;  // kNoParent at the root
  std::vector<Letter> entering;     // letter read along parent[v] -> v
  std::vector<std::int32_t> depth;  // graph distance from the root
};

// A free basis of the subgroup satisfying the Nielsen cancellation conditions.
struct NielsenSystem {
  std::vector<ReducedWord> generators;
};

SpanningTree geodesic_spanning_tree(const CoreGraph& c);

// One generator per positive edge outside the tree, in (origin, base) order:
// w_e = red( path(v0 -> origin) . letter . path(v0 -> target)^-1 ).
NielsenSystem schreier_generators(const CoreGraph& c, const SpanningTree& t);
NielsenSystem schreier_generators(const CoreGraph& c);

// Both cancellation conditions, checked over S and its inverses:
//   (1) |red(uv)| >= max(|u|, |v|)      for u != v^-1
//   (2) |red(uvw)| > |u| + |w| - |v|    for u != v^-1 and v != w^-1
bool check_nielsen(const std::vector<ReducedWord>& s);

// Coefficient matrix and right-hand side of the counting system B Y = Z over
// the unknowns H_i^eps ordered (1,+),(1,-),(2,+),(2,-),...  Row (i,eps),
// column (j,eps'): 1 on the diagonal, exactly 0 when w_j^eps' = (w_i^eps)^-1,
// and the z-power -z^(|w_i^eps| - beta(w_j^eps', w_i^eps)) otherwise
// (the diagonal keeps its z-power too).
PolyMatrix nielsen_matrix(const NielsenSystem& s);
std::vector<IntPolynomial> nielsen_rhs(const NielsenSystem& s);

// Cogrowth series 1 + sum of all H_i^eps, solved exactly from B Y = Z.
// Refuses generating sets that fail check_nielsen.
RationalFunction nielsen_cogrowth(const NielsenSystem& s);

}  // namespace cogrowth
