#pragma once

#include "cogrowth/automaton.hpp"
#include "cogrowth/polynomial.hpp"

namespace cogrowth {

// Cogrowth series of the subgroup whose reduced-word acceptor is d (as built
// by build_D_H): H(z) = sum over final states q of the (initial, q) entry of
// (I - zM)^-1, with M the adjacency matrix of d. Each entry is evaluated by
// the cofactor formula: (-1)^q det(I - zM minus row q, column 0) over
// det(I - zM), all determinants fraction-free.
RationalFunction transfer_cogrowth(const FiniteAutomaton& d);

// Same series by solving the transposed system (I - zM)^T x = e_0 with one
// fraction-free elimination; kept as an independent cross-check.
RationalFunction transfer_cogrowth_system(const FiniteAutomaton& d);

// First `count` Taylor coefficients of f at 0 (indices 0..count-1). Requires
// f analytic at 0 with integer coefficients; throws DomainError otherwise.
std::vector<BigInt> series_coefficients(const RationalFunction& f, int count);

// Cogrowth series of the whole free group F_rank: (1 + z) / (1 - (2*rank-1)z).
RationalFunction cogrowth_free_group(int rank);

}  // namespace cogrowth
