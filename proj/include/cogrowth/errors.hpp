#pragma once

#include <stdexcept>
#include <string>

namespace cogrowth {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed word/file syntax.
struct ParseError : Error {
  using Error::Error;
};

// A letter lies outside the configured rank m.
struct AlphabetError : Error {
  using Error::Error;
};

// Operation applied outside its domain (trivial subgroup, bad automaton
// shape, non-exact division, non-convergence, ...).
struct DomainError : Error {
  using Error::Error;
};

}  // namespace cogrowth
