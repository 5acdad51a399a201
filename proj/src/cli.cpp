#include "cogrowth/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cogrowth/automaton.hpp"
#include "cogrowth/core.hpp"
#include "cogrowth/dot.hpp"
#include "cogrowth/nielsen.hpp"
#include "cogrowth/report.hpp"
#include "cogrowth/series.hpp"
#include "cogrowth/spectral.hpp"

namespace cogrowth {

namespace {

struct CmdState {
  int rank = 0;
  std::vector<std::string> words;
  std::string file;
  std::string method = "all";
  int coeffs = 20;
  int oracle_depth = 10;
  bool json = false;
  bool dot = false;
  std::string which = "DH";
};

struct SubgroupInput {
  int rank = 0;
  std::vector<ReducedWord> generators;
};

std::vector<SubgroupInput> parse_input_file(std::istream& in) {
  static const std::regex header(R"(^rank[ \t]+([0-9]+)$)");
  std::vector<SubgroupInput> blocks;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto where = [&] { return "input line " + std::to_string(lineno) + ": "; };
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::size_t last = line.find_last_not_of(" \t\r");
    std::string tok = line.substr(first, last - first + 1);
    std::smatch m;
    if (std::regex_match(tok, m, header)) {
      int rank = 0;
      try {
        rank = std::stoi(m[1]);
      } catch (const std::exception&) {
        throw ParseError(where() + "rank out of range");
      }
      if (rank < 1) throw ParseError(where() + "rank must be at least 1");
      blocks.push_back({rank, {}});
    } else {
      if (blocks.empty()) throw ParseError(where() + "expected a 'rank m' header first");
      blocks.back().generators.push_back(parse_reduced(tok, blocks.back().rank));
    }
  }
  return blocks;
}

std::vector<SubgroupInput> resolve_inputs(const CmdState& st) {
  if (!st.file.empty()) {
    if (!st.words.empty()) {
      throw ParseError("--file cannot be combined with positional generators");
    }
    std::ifstream in(st.file);
    if (!in) throw ParseError("cannot open input file: " + st.file);
    std::vector<SubgroupInput> blocks = parse_input_file(in);
    if (blocks.empty()) throw ParseError("input file contains no subgroup blocks");
    return blocks;
  }
  if (st.rank < 1) throw ParseError("rank (-m/--rank) is required and must be at least 1");
  SubgroupInput block;
  block.rank = st.rank;
  for (const std::string& w : st.words) block.generators.push_back(parse_reduced(w, st.rank));
  return {block};
}

nlohmann::ordered_json poly_to_json(const IntPolynomial& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  if (p.is_zero()) {
    arr.push_back(0);
    return arr;
  }
  static const BigInt kMin = std::numeric_limits<std::int64_t>::min();
  static const BigInt kMax = std::numeric_limits<std::int64_t>::max();
  for (const BigInt& c : p.coeffs()) {
    if (c >= kMin && c <= kMax) {
      arr.push_back(c.convert_to<std::int64_t>());
    } else {
      arr.push_back(c.str());
    }
  }
  return arr;
}

void print_automaton_text(const FiniteAutomaton& a, std::ostream& out) {
  out << "states: " << a.state_count() << "\n";
  out << "alphabet:";
  for (const std::string& x : a.letter_names) out << " " << x;
  out << "\n";
  out << "initial:";
  for (std::int32_t s : a.initials) out << " " << a.state_names[s];
  out << "\n";
  out << "final:";
  for (std::int32_t s : a.finals) out << " " << a.state_names[s];
  out << "\n";
  out << "transitions:\n";
  for (std::int32_t s = 0; s < a.state_count(); ++s) {
    for (int x = 0; x < a.alphabet_size(); ++x) {
      std::int32_t t = a.delta(s, x);
      if (t == FiniteAutomaton::kNone) continue;
      out << "  " << a.state_names[s] << " -" << a.letter_names[x] << "-> " << a.state_names[t]
          << "\n";
    }
  }
}

FiniteAutomaton pick_automaton(const SubgroupInput& b, const std::string& which) {
  if (which == "AFm") return build_free_group_dfa(b.rank);
  CoreGraph c = core_of(b.rank, b.generators);
  if (which == "core") return core_to_dfa(c);
  FiniteAutomaton d = build_D_H(c);
  if (which == "DH") return d;
  return build_Dhat_H(d);  // which == "DhatH", enforced by the option check
}

int cmd_analyze(const CmdState& st, std::ostream& out) {
  AnalysisOptions opt;
  opt.coeff_count = st.coeffs;
  opt.oracle_depth = st.oracle_depth;
  opt.method = st.method;
  bool agree = true;
  bool first = true;
  for (const SubgroupInput& b : resolve_inputs(st)) {
    AnalysisReport r = analyze_subgroup(b.rank, b.generators, opt);
    agree = agree && r.methods_agree;
    if (!first) out << "\n";
    first = false;
    out << (st.json ? report_to_json(r) : report_to_text(r));
  }
  return agree ? 0 : 3;
}

int cmd_core(const CmdState& st, std::ostream& out) {
  bool first = true;
  for (const SubgroupInput& b : resolve_inputs(st)) {
    CoreGraph c = core_of(b.rank, b.generators);
    if (!first) out << "\n";
    first = false;
    if (st.dot) {
      out << core_to_dot(c);
    } else if (st.json) {
      nlohmann::ordered_json j;
      j["schema"] = 1;
      j["rank"] = b.rank;
      j["vertex_count"] = c.vertex_count();
      j["root"] = c.root();
      nlohmann::ordered_json edges = nlohmann::ordered_json::array();
      for (std::int32_t v = 0; v < c.vertex_count(); ++v) {
        for (std::int32_t base = 1; base <= c.rank(); ++base) {
          std::int32_t u = c.forward(v, base);
          if (u != CoreGraph::kNone) edges.push_back({v, to_text(Letter{base, 1}), u});
        }
      }
      j["edges"] = edges;
      out << j.dump(2) << "\n";
    } else {
      out << "vertices: " << c.vertex_count() << "\nroot: v" << c.root() << "\nedges:\n";
      for (std::int32_t v = 0; v < c.vertex_count(); ++v) {
        for (std::int32_t base = 1; base <= c.rank(); ++base) {
          std::int32_t u = c.forward(v, base);
          if (u != CoreGraph::kNone) {
            out << "  v" << v << " -" << to_text(Letter{base, 1}) << "-> v" << u << "\n";
          }
        }
      }
    }
  }
  return 0;
}

int cmd_automaton(const CmdState& st, std::ostream& out) {
  bool first = true;
  for (const SubgroupInput& b : resolve_inputs(st)) {
    FiniteAutomaton a = pick_automaton(b, st.which);
    if (!first) out << "\n";
    first = false;
    if (st.dot) {
      out << automaton_to_dot(a);
    } else if (st.json) {
      nlohmann::ordered_json j;
      j["schema"] = 1;
      j["states"] = a.state_names;
      j["alphabet"] = a.letter_names;
      j["initial"] = a.initials;
      j["final"] = a.finals;
      nlohmann::ordered_json trans = nlohmann::ordered_json::array();
      for (std::int32_t s = 0; s < a.state_count(); ++s) {
        for (int x = 0; x < a.alphabet_size(); ++x) {
          std::int32_t t = a.delta(s, x);
          if (t != FiniteAutomaton::kNone) trans.push_back({s, a.letter_names[x], t});
        }
      }
      j["transitions"] = trans;
      out << j.dump(2) << "\n";
    } else {
      print_automaton_text(a, out);
    }
  }
  return 0;
}

int cmd_coefficients(const CmdState& st, std::ostream& out) {
  if (st.coeffs < 0 || st.coeffs > 10000) {
    throw ParseError("--coeffs must be between 0 and 10000");
  }
  bool first = true;
  for (const SubgroupInput& b : resolve_inputs(st)) {
    CoreGraph c = core_of(b.rank, b.generators);
    RationalFunction h = transfer_cogrowth(build_D_H(c));
    std::vector<BigInt> coeffs = series_coefficients(h, st.coeffs + 1);
    if (!first) out << "\n";
    first = false;
    if (st.json) {
      nlohmann::ordered_json j;
      j["schema"] = 1;
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      static const BigInt kMax = std::numeric_limits<std::int64_t>::max();
      static const BigInt kMin = std::numeric_limits<std::int64_t>::min();
      for (const BigInt& v : coeffs) {
        if (v >= kMin && v <= kMax) {
          arr.push_back(v.convert_to<std::int64_t>());
        } else {
          arr.push_back(v.str());
        }
      }
      j["coefficients"] = arr;
      out << j.dump(2) << "\n";
    } else {
      for (std::size_t n = 0; n < coeffs.size(); ++n) {
        out << n << "\t" << coeffs[n].str() << "\n";
      }
    }
  }
  return 0;
}

int cmd_nielsen(const CmdState& st, std::ostream& out) {
  bool first = true;
  for (const SubgroupInput& b : resolve_inputs(st)) {
    CoreGraph c = core_of(b.rank, b.generators);
    NielsenSystem s = schreier_generators(c);
    PolyMatrix bm = nielsen_matrix(s);
    std::vector<IntPolynomial> z = nielsen_rhs(s);
    RationalFunction h = nielsen_cogrowth(s);
    if (!first) out << "\n";
    first = false;
    if (st.json) {
      nlohmann::ordered_json j;
      j["schema"] = 1;
      nlohmann::ordered_json basis = nlohmann::ordered_json::array();
      for (const ReducedWord& w : s.generators) basis.push_back(to_text(w));
      j["basis"] = basis;
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (int i = 0; i < bm.size(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int k = 0; k < bm.size(); ++k) row.push_back(poly_to_json(bm.at(i, k)));
        rows.push_back(row);
      }
      j["B"] = rows;
      nlohmann::ordered_json rhs = nlohmann::ordered_json::array();
      for (const IntPolynomial& p : z) rhs.push_back(poly_to_json(p));
      j["Z"] = rhs;
      nlohmann::ordered_json cg;
      cg["num"] = poly_to_json(h.num());
      cg["den"] = poly_to_json(h.den());
      j["H"] = cg;
      out << j.dump(2) << "\n";
    } else {
      out << "basis:";
      if (s.generators.empty()) out << " (none)";
      for (const ReducedWord& w : s.generators) out << " " << to_text(w);
      out << "\n";
      out << "B (rows of ascending coefficient arrays):\n";
      for (int i = 0; i < bm.size(); ++i) {
        out << "  row " << i << ":";
        for (int k = 0; k < bm.size(); ++k) {
          out << " [";
          const IntPolynomial& p = bm.at(i, k);
          if (p.is_zero()) {
            out << "0";
          } else {
            for (int d = 0; d <= p.degree(); ++d) {
              if (d) out << " ";
              out << p.coeff(d).str();
            }
          }
          out << "]";
        }
        out << "\n";
      }
      out << "H(z) = " << to_string(h) << "\n";
    }
  }
  return 0;
}

int cmd_entropy(const CmdState& st, std::ostream& out) {
  bool first = true;
  for (const SubgroupInput& b : resolve_inputs(st)) {
    CoreGraph c = core_of(b.rank, b.generators);
    SpectralResult r;
    if (c.positive_edge_count() > 0) r = entropy_of_subgroup(c);
    if (!first) out << "\n";
    first = false;
    if (st.json) {
      nlohmann::ordered_json j;
      j["schema"] = 1;
      j["perron_root"] = r.perron_root;
      j["entropy"] = r.entropy;
      j["entropy_log2"] = r.entropy / std::log(2.0);
      j["growth_rate"] = r.growth_rate;
      j["iterations"] = r.iterations;
      j["residual"] = r.residual;
      out << j.dump(2) << "\n";
    } else {
      std::ostringstream text;
      text << std::setprecision(15);
      text << "perron root: " << r.perron_root << "\n";
      text << "entropy: " << r.entropy << " (log2: " << r.entropy / std::log(2.0) << ")\n";
      text << "growth rate: " << r.growth_rate << "\n";
      text << "iterations: " << r.iterations << "\n";
      text << "residual: " << r.residual << "\n";
      out << text.str();
    }
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cogrowth series of finitely generated subgroups of free groups"};
  app.require_subcommand(1);

  CmdState analyze, core, automaton, coefficients, nielsen, entropy;
  auto add_common = [](CLI::App* cmd, CmdState& st, bool with_dot) {
    cmd->add_option("-m,--rank", st.rank, "ambient free-group rank");
    cmd->add_option("generators", st.words, "generating words");
    cmd->add_option("--file", st.file, "input file: 'rank m' header then one word per line");
    cmd->add_flag("--json", st.json, "emit JSON");
    if (with_dot) cmd->add_flag("--dot", st.dot, "emit graphviz DOT");
  };

  CLI::App* cmd_an = app.add_subcommand("analyze", "full analysis report");
  add_common(cmd_an, analyze, false);
  cmd_an->add_option("--method", analyze.method, "cross-check method")
      ->check(CLI::IsMember({"transfer", "nielsen", "enumerate", "all"}));
  cmd_an->add_option("--coeffs", analyze.coeffs, "report coefficients up to this index");
  cmd_an->add_option("--oracle-depth", analyze.oracle_depth,
                     "enumeration cross-check depth (capped at 12)");

  CLI::App* cmd_co = app.add_subcommand("core", "folded core graph");
  add_common(cmd_co, core, true);

  CLI::App* cmd_au = app.add_subcommand("automaton", "derived automata");
  add_common(cmd_au, automaton, true);
  cmd_au->add_option("--which", automaton.which, "which automaton")
      ->check(CLI::IsMember({"core", "DH", "DhatH", "AFm"}));

  CLI::App* cmd_cf = app.add_subcommand("coefficients", "cogrowth coefficients |H_n|");
  add_common(cmd_cf, coefficients, false);
  cmd_cf->add_option("--coeffs", coefficients.coeffs, "largest index n");

  CLI::App* cmd_ni = app.add_subcommand("nielsen", "Schreier basis and counting system");
  add_common(cmd_ni, nielsen, false);

  CLI::App* cmd_en = app.add_subcommand("entropy", "entropy and growth rate");
  add_common(cmd_en, entropy, false);

  std::vector<std::string> argv_storage = args;
  std::vector<const char*> argv;
  argv.push_back("cogrowth");
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(cmd_an)) return cmd_analyze(analyze, out);
    if (app.got_subcommand(cmd_co)) return cmd_core(core, out);
    if (app.got_subcommand(cmd_au)) return cmd_automaton(automaton, out);
    if (app.got_subcommand(cmd_cf)) return cmd_coefficients(coefficients, out);
    if (app.got_subcommand(cmd_ni)) return cmd_nielsen(nielsen, out);
    if (app.got_subcommand(cmd_en)) return cmd_entropy(entropy, out);
  } catch (const AlphabetError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace cogrowth
