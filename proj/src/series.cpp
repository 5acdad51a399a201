#include "cogrowth/series.hpp"

namespace cogrowth {

namespace {

// I - z*M for the adjacency matrix M of a.
PolyMatrix counting_matrix(const FiniteAutomaton& a) {
  CountMatrix m = adjacency_matrix(a);
  PolyMatrix p(m.n);
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) {
      IntPolynomial entry = IntPolynomial::monomial(-m.at(i, j), 1);
      if (i == j) entry += 1;
      p.at(i, j) = entry;
    }
  }
  return p;
}

void require_single_initial(const FiniteAutomaton& d) {
  if (d.state_count() == 0 || d.initials != std::vector<std::int32_t>{0}) {
    throw DomainError("transfer method expects the single-initial acceptor");
  }
}

}  // namespace

RationalFunction transfer_cogrowth(const FiniteAutomaton& d) {
  require_single_initial(d);
  PolyMatrix a = counting_matrix(d);
  IntPolynomial denom = det(a);
  if (denom.is_zero()) throw DomainError("singular counting matrix");
  RationalFunction h;
  for (std::int32_t q : d.finals) {
    IntPolynomial cof = d.state_count() == 1 ? IntPolynomial(1) : det(a.minor_matrix(q, 0));
    if (q % 2 != 0) cof = -cof;
    h = h + RationalFunction(cof, denom);
  }
  return h;
}

RationalFunction transfer_cogrowth_system(const FiniteAutomaton& d) {
  require_single_initial(d);
  const int n = d.state_count();
  PolyMatrix a = counting_matrix(d);
  // Row q* of (I - zM)^-1 solves (I - zM)^T x = e_{q*}.
  PolyMatrix at(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) at.at(i, j) = a.at(j, i);
  }
  std::vector<IntPolynomial> rhs(n, IntPolynomial(0));
  rhs[0] = 1;
  std::vector<RationalFunction> x = solve_linear_system(at, rhs);
  RationalFunction h;
  for (std::int32_t q : d.finals) h = h + x[q];
  return h;
}

std::vector<BigInt> series_coefficients(const RationalFunction& f, int count) {
  if (count < 0) throw DomainError("coefficient count must be nonnegative");
  const IntPolynomial& num = f.num();
  const IntPolynomial& den = f.den();
  BigInt d0 = den.coeff(0);
  if (d0 == 0) throw DomainError("series has a pole at the origin");
  std::vector<BigInt> c(count);
  for (int k = 0; k < count; ++k) {
    BigInt acc = num.coeff(k);
    for (int i = 1; i <= k && i <= den.degree(); ++i) acc -= den.coeff(i) * c[k - i];
    if (acc % d0 != 0) throw DomainError("series has non-integer coefficients");
    c[k] = acc / d0;
  }
  return c;
}

RationalFunction cogrowth_free_group(int rank) {
  if (rank < 1) throw DomainError("rank must be at least 1");
  return RationalFunction(IntPolynomial(std::vector<BigInt>{1, 1}),
                          IntPolynomial(std::vector<BigInt>{1, -(2 * rank - 1)}));
}

}  // namespace cogrowth
