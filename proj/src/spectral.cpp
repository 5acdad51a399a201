#include "cogrowth/spectral.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

namespace cogrowth {

namespace {

constexpr double kTolerance = 1e-10;
constexpr int kMaxIterations = 100000;

}  // namespace

PerronEstimate perron_root_estimate(const CountMatrix& m) {
  const int n = m.n;
  if (n == 0) return {};
  bool all_zero = true;
  for (int i = 0; i < n && all_zero; ++i) {
    for (int j = 0; j < n; ++j) {
      if (m.at(i, j) != 0) {
        all_zero = false;
        break;
      }
    }
  }
  if (all_zero) return {};

  std::vector<double> x(n, 1.0), y(n);
  auto apply_shifted = [&](const std::vector<double>& in, std::vector<double>& out) {
    for (int i = 0; i < n; ++i) {
      double acc = in[i];  // the +I shift
      for (int j = 0; j < n; ++j) {
        if (m.at(i, j) != 0) acc += static_cast<double>(m.at(i, j)) * in[j];
      }
      out[i] = acc;
    }
  };

  double lambda = 0.0;
  int it = 0;
  for (it = 1; it <= kMaxIterations; ++it) {
    apply_shifted(x, y);
    double norm = 0.0;
    for (double v : y) norm = std::max(norm, std::abs(v));
    double delta = 0.0;
    for (int i = 0; i < n; ++i) {
      y[i] /= norm;
      delta = std::max(delta, std::abs(y[i] - x[i]));
    }
    x.swap(y);
    double change = std::abs(norm - lambda);
    lambda = norm;
    if (delta < 1e-13 && change < kTolerance) break;
    if (it == kMaxIterations) {
      throw DomainError("power iteration did not converge within the iteration budget");
    }
  }

  apply_shifted(x, y);
  double residual = 0.0;
  for (int i = 0; i < n; ++i) residual = std::max(residual, std::abs(y[i] - lambda * x[i]));
  return {lambda - 1.0, it, residual};
}

double perron_root(const CountMatrix& m) { return perron_root_estimate(m).value; }

SpectralResult entropy_of_subgroup(const CoreGraph& c) {
  if (c.positive_edge_count() == 0) throw DomainError("the trivial subgroup has no entropy");
  SpectralResult r;
  if (subgroup_rank(c) == 1) return r;  // cyclic: entropy 0, growth rate 1

  CoreGraph reduced = is_conjugacy_reduced(c) ? c : conjugacy_reduce(c).second;
  FiniteAutomaton dhat = build_Dhat_H(build_D_H(reduced));
  if (!is_ergodic(dhat)) {
    throw DomainError("reduced acceptor is not ergodic for a conjugacy-reduced core");
  }
  PerronEstimate p = perron_root_estimate(adjacency_matrix(dhat));
  r.perron_root = p.value;
  r.entropy = std::log(p.value);
  r.growth_rate = p.value;
  r.iterations = p.iterations;
  r.residual = p.residual;
  return r;
}

double empirical_growth_rate(const std::vector<BigInt>& coeffs) {
  if (coeffs.size() < 2) throw DomainError("need more coefficients to estimate growth");
  int last = -1;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    if (coeffs[i] != 0) {
      last = i;
      break;
    }
  }
  if (last < 1) throw DomainError("coefficient tail is all zero");

  using BigFloat = boost::multiprecision::cpp_bin_float_50;
  auto log_big = [](const BigInt& v) { return static_cast<double>(log(BigFloat(v))); };

  // Windowed tail ratio: sum |c_n| over the last k indices and over the k
  // before them, and take (hi/lo)^(1/k). Summing over windows cancels both
  // constant factors and periodic oscillation (lattice supports, alternating
  // dominant poles), which single-coefficient ratios are sensitive to.
  int k = std::max(1, last / 3);
  BigInt hi = 0, lo = 0;
  for (int i = last - k + 1; i <= last; ++i) hi += abs(coeffs[i]);
  for (int i = last - 2 * k + 1; i <= last - k; ++i) lo += abs(coeffs[i]);
  if (lo == 0) return std::exp(log_big(abs(coeffs[last])) / last);
  return std::exp((log_big(hi) - log_big(lo)) / k);
}

}  // namespace cogrowth
