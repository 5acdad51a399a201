#include "cogrowth/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "cogrowth/automaton.hpp"
#include "cogrowth/nielsen.hpp"
#include "cogrowth/series.hpp"
#include "cogrowth/spectral.hpp"

namespace cogrowth {

namespace {

nlohmann::ordered_json big_to_json(const BigInt& v) {
  static const BigInt kMin = std::numeric_limits<std::int64_t>::min();
  static const BigInt kMax = std::numeric_limits<std::int64_t>::max();
  if (v >= kMin && v <= kMax) return v.convert_to<std::int64_t>();
  return v.str();
}

nlohmann::ordered_json poly_to_json(const IntPolynomial& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  if (p.is_zero()) {
    arr.push_back(0);
    return arr;
  }
  for (const BigInt& c : p.coeffs()) arr.push_back(big_to_json(c));
  return arr;
}

}  // namespace

AnalysisReport analyze_subgroup(int rank, const std::vector<ReducedWord>& generators,
                                const AnalysisOptions& options) {
  if (options.coeff_count < 0 || options.coeff_count > 10000) {
    throw DomainError("coefficient count out of range (0..10000)");
  }
  AnalysisReport r;
  r.rank = rank;
  for (const ReducedWord& w : generators) r.generators.push_back(to_text(w));

  CoreGraph core = core_of(rank, generators);
  r.core_vertex_count = core.vertex_count();
  for (std::int32_t v = 0; v < core.vertex_count(); ++v) {
    for (std::int32_t base = 1; base <= rank; ++base) {
      std::int32_t u = core.forward(v, base);
      if (u != CoreGraph::kNone) r.core_edges.push_back({v, base, u});
    }
  }
  const bool trivial = core.positive_edge_count() == 0;
  r.index = subgroup_index(core);
  r.is_normal = trivial || is_normal(core);
  r.conjugacy_reduced = trivial || is_conjugacy_reduced(core);
  r.rank_of_h = subgroup_rank(core);
  r.cyclic = r.rank_of_h == 1;

  FiniteAutomaton d = build_D_H(core);
  r.acceptor_state_count = d.state_count();
  r.cogrowth = transfer_cogrowth(d);
  r.coefficients = series_coefficients(r.cogrowth, options.coeff_count + 1);

  if (trivial) {
    r.entropy = 0.0;
    r.growth_rate = 1.0;
  } else {
    SpectralResult spectral = entropy_of_subgroup(core);
    r.entropy = spectral.entropy;
    r.growth_rate = spectral.growth_rate;
  }

  const std::string& method = options.method;
  if (method != "transfer" && method != "nielsen" && method != "enumerate" && method != "all") {
    throw DomainError("unknown method: " + method);
  }
  r.methods_agree = true;
  if (method == "nielsen" || method == "all") {
    RationalFunction h = nielsen_cogrowth(schreier_generators(core));
    if (!(h == r.cogrowth)) r.methods_agree = false;
  }
  if (method == "enumerate" || method == "all") {
    int cap = std::min(options.oracle_depth, 12);
    std::vector<BigInt> prefix =
        cap < static_cast<int>(r.coefficients.size())
            ? std::vector<BigInt>(r.coefficients.begin(), r.coefficients.begin() + cap + 1)
            : series_coefficients(r.cogrowth, cap + 1);
    for (int n = 0; n <= cap; ++n) {
      if (BigInt(enumerate_count(core, n)) != prefix[n]) {
        r.methods_agree = false;
        break;
      }
    }
  }
  return r;
}

std::string report_to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["rank"] = r.rank;
  j["generators"] = r.generators;
  nlohmann::ordered_json core;
  core["vertex_count"] = r.core_vertex_count;
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& e : r.core_edges) {
    edges.push_back({e[0], to_text(Letter{e[1], 1}), e[2]});
  }
  core["edges"] = edges;
  j["core"] = core;
  if (r.index) {
    j["index"] = *r.index;
  } else {
    j["index"] = "infinite";
  }
  j["is_normal"] = r.is_normal;
  j["conjugacy_reduced"] = r.conjugacy_reduced;
  j["rank_of_H"] = r.rank_of_h;
  j["cyclic"] = r.cyclic;
  nlohmann::ordered_json cogrowth;
  cogrowth["num"] = poly_to_json(r.cogrowth.num());
  cogrowth["den"] = poly_to_json(r.cogrowth.den());
  j["cogrowth"] = cogrowth;
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const BigInt& c : r.coefficients) coeffs.push_back(big_to_json(c));
  j["coefficients"] = coeffs;
  j["entropy"] = r.entropy;
  j["growth_rate"] = r.growth_rate;
  j["methods_agree"] = r.methods_agree;
  return j.dump(2) + "\n";
}

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "rank: " << r.rank << "\n";
  out << "generators:";
  if (r.generators.empty()) out << " (none)";
  for (const std::string& g : r.generators) out << " " << g;
  out << "\n";
  out << "core: " << r.core_vertex_count << " vertices, " << r.core_edges.size()
      << " positive edges\n";
  for (const auto& e : r.core_edges) {
    out << "  v" << e[0] << " -" << to_text(Letter{e[1], 1}) << "-> v" << e[2] << "\n";
  }
  if (r.index) {
    out << "index: " << *r.index << "\n";
  } else {
    out << "index: infinite\n";
  }
  out << "normal: " << (r.is_normal ? "yes" : "no") << "\n";
  out << "conjugacy reduced: " << (r.conjugacy_reduced ? "yes" : "no") << "\n";
  out << "subgroup rank: " << r.rank_of_h << "\n";
  out << "cyclic: " << (r.cyclic ? "yes" : "no") << "\n";
  out << "acceptor states: " << r.acceptor_state_count << "\n";
  out << "H(z) = " << to_string(r.cogrowth) << "\n";
  out << "coefficients (n = 0.." << r.coefficients.size() - 1 << "):";
  for (const BigInt& c : r.coefficients) out << " " << c.str();
  out << "\n";
  out << "entropy: " << r.entropy << " (log2: " << r.entropy / std::log(2.0) << ")\n";
  out << "growth rate: " << r.growth_rate << "\n";
  out << "methods agree: " << (r.methods_agree ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace cogrowth
