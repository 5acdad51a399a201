#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cogrowth/core.hpp"
#include "cogrowth/polynomial.hpp"
#include "cogrowth/words.hpp"

namespace cogrowth {

struct AnalysisOptions {
  // Coefficients are reported for n = 0..coeff_count.
  int coeff_count = 20;
  // Enumeration oracle cross-checks n = 0..min(oracle_depth, 12).
  int oracle_depth = 10;
  // One of: transfer, nielsen, enumerate, all.
  std::string method = "all";
};

struct AnalysisReport {
  int rank = 0;
  std::vector<std::string> generators;
  int core_vertex_count = 0;
  // Positive edges (origin, base, target) in canonical order.
  std::vector<std::array<std::int32_t, 3>> core_edges;
  std::optional<std::int64_t> index;  // nullopt = infinite
  bool is_normal = false;
  bool conjugacy_reduced = false;
  int rank_of_h = 0;
  bool cyclic = false;
  RationalFunction cogrowth;
  std::vector<BigInt> coefficients;  // indices 0..coeff_count
  double entropy = 0.0;
  double growth_rate = 1.0;
  bool methods_agree = true;
  int acceptor_state_count = 0;
};

AnalysisReport analyze_subgroup(int rank, const std::vector<ReducedWord>& generators,
                                const AnalysisOptions& options = {});

std::string report_to_json(const AnalysisReport& r);
std::string report_to_text(const AnalysisReport& r);

}  // namespace cogrowth
