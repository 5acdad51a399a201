#pragma once

#include <string>

#include "cogrowth/automaton.hpp"
#include "cogrowth/core.hpp"

namespace cogrowth {

// Core graph as DOT: one edge per positive-letter edge (inverse arrows are
// implicit), root double-circled. Deterministic output.
std::string core_to_dot(const CoreGraph& c);

// Moore diagram as DOT: final states double-circled, initial states marked by
// an arrow from a point node. Deterministic output.
std::string automaton_to_dot(const FiniteAutomaton& a);

}  // namespace cogrowth
