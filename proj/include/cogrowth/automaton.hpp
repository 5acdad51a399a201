#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cogrowth/core.hpp"
#include "cogrowth/polynomial.hpp"
#include "cogrowth/words.hpp"

namespace cogrowth {

// Finite automaton with a partial deterministic transition function (no dead
// state), possibly several initial states. Letters are dense indices; for
// automata over Sigma the index of a_i^eps is Letter::sigma_index().
struct FiniteAutomaton {
  static constexpr std::int32_t kNone = -1;

  std::vector<std::string> letter_names;
  std::vector<std::string> state_names;
  std::vector<std::int32_t> transition;  // state_count x alphabet, kNone = undefined
  std::vector<std::int32_t> initials;    // ascending
  std::vector<std::int32_t> finals;      // ascending

  int alphabet_size() const { return static_cast<int>(letter_names.size()); }
  int state_count() const { return static_cast<int>(state_names.size()); }
  std::int32_t delta(std::int32_t s, int letter) const {
    return transition[static_cast<std::size_t>(s) * alphabet_size() + letter];
  }
  std::int32_t& delta_ref(std::int32_t s, int letter) {
    return transition[static_cast<std::size_t>(s) * alphabet_size() + letter];
  }
  int edge_count() const;
  bool is_initial(std::int32_t s) const;
  bool is_final(std::int32_t s) const;
};

// Adjacency matrix of the Moore diagram, rows/columns in state order.
struct CountMatrix {
  int n = 0;
  std::vector<std::int64_t> a;  // row-major
  std::vector<std::string> state_names;

  std::int64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  std::int64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
};

std::vector<std::string> sigma_letter_names(int rank);

// A_Fm: recognizes exactly the freely reduced words over Sigma.
// States: q0 (initial) plus one state per letter; all states final.
FiniteAutomaton build_free_group_dfa(int rank);

// The extended core as a DFA: states = vertices, initial = final = root.
FiniteAutomaton core_to_dfa(const CoreGraph& c);

// Product automaton on reachable pairs; both factors must be deterministic
// with a single initial state over the same alphabet.
FiniteAutomaton product(const FiniteAutomaton& a1, const FiniteAutomaton& a2);

// Subautomaton on states lying on at least one initial-to-final path.
FiniteAutomaton essential_part(const FiniteAutomaton& a);

// Minimal DFA of L_H: essential part of core_to_dfa(c) x A_Fm, states ordered
// canonically (q* first, then (v, letter) by vertex id, then letter).
FiniteAutomaton build_D_H(const CoreGraph& c);

// D_H with q* removed; initials = finals = the (root, letter) states.
FiniteAutomaton build_Dhat_H(const FiniteAutomaton& d);

// Moore partition-refinement minimization (single initial state required).
FiniteAutomaton minimize(const FiniteAutomaton& a);

// True iff the Moore diagram is one strongly connected component covering
// every state (vacuously true for <= 1 state with no missing pieces).
bool is_ergodic(const FiniteAutomaton& a);

// Number of admissible (initial -> final) paths of length n.
BigInt count_accepted(const FiniteAutomaton& a, int n);

// Number of admissible paths labeled exactly by w.
std::uint64_t path_count_per_word(const FiniteAutomaton& a, const std::vector<int>& letters);
std::uint64_t path_count_per_word(const FiniteAutomaton& a, const Word& w);

bool accepts(const FiniteAutomaton& a, const Word& w);

// Same digraph, every state initial and final, each edge its own fresh letter.
FiniteAutomaton base_automaton(const FiniteAutomaton& a);

CountMatrix adjacency_matrix(const FiniteAutomaton& a);

}  // namespace cogrowth
