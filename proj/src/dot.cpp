#include "cogrowth/dot.hpp"

#include <sstream>

namespace cogrowth {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string core_to_dot(const CoreGraph& c) {
  std::ostringstream out;
  out << "digraph core {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (std::int32_t v = 0; v < c.vertex_count(); ++v) {
    out << "  v" << v;
    if (v == c.root()) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (std::int32_t v = 0; v < c.vertex_count(); ++v) {
    for (std::int32_t base = 1; base <= c.rank(); ++base) {
      std::int32_t u = c.forward(v, base);
      if (u == CoreGraph::kNone) continue;
      out << "  v" << v << " -> v" << u << " [label=" << quoted(to_text(Letter{base, 1}))
          << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string automaton_to_dot(const FiniteAutomaton& a) {
  std::ostringstream out;
  out << "digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (std::int32_t s = 0; s < a.state_count(); ++s) {
    out << "  s" << s << " [label=" << quoted(a.state_names[s]);
    if (a.is_final(s)) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (std::size_t i = 0; i < a.initials.size(); ++i) {
    out << "  start" << i << " [shape=point];\n";
  }
  for (std::size_t i = 0; i < a.initials.size(); ++i) {
    out << "  start" << i << " -> s" << a.initials[i] << ";\n";
  }
  for (std::int32_t s = 0; s < a.state_count(); ++s) {
    for (int x = 0; x < a.alphabet_size(); ++x) {
      std::int32_t t = a.delta(s, x);
      if (t == FiniteAutomaton::kNone) continue;
      out << "  s" << s << " -> s" << t << " [label=" << quoted(a.letter_names[x]) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace cogrowth
