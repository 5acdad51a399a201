#pragma once

#include "cogrowth/automaton.hpp"
#include "cogrowth/core.hpp"
#include "cogrowth/polynomial.hpp"

namespace cogrowth {

struct PerronEstimate {
  double value = 0.0;  // spectral radius
  int iterations = 0;
  double residual = 0.0;
};

struct SpectralResult {
  double perron_root = 1.0;
  double entropy = 0.0;              // natural log of perron_root
  double growth_rate = 1.0;          // e^entropy
  int iterations = 0;
  double residual = 0.0;
};

// Spectral radius of a nonnegative integer matrix by power iteration on
// M + I (the shift makes periodic Moore diagrams converge), L-infinity
// normalization, absolute tolerance 1e-10.
PerronEstimate perron_root_estimate(const CountMatrix& m);
double perron_root(const CountMatrix& m);

// Entropy and growth rate of the subgroup with core c: 0 and 1 for cyclic
// subgroups, otherwise log of the Perron root of the reduced acceptor's
// adjacency matrix (conjugating first when the core is not conjugacy
// reduced). Throws DomainError for the trivial subgroup.
SpectralResult entropy_of_subgroup(const CoreGraph& c);

// Rough growth-rate estimate from a coefficient prefix (indices 0..N-1):
// with b the last nonzero index and k = b/3, the windowed tail ratio
// (sum |c_n| over (b-k, b]  /  sum over (b-2k, b-k])^(1/k); |c_b|^(1/b) when
// the lower window is empty. Advisory only.
double empirical_growth_rate(const std::vector<BigInt>& coeffs);

}  // namespace cogrowth
