#pragma once

#include <stdexcept>
#include <string>

namespace eqbif {

// Parameters violate a model assumption (e.g. sin(m*tau) ~ 0). CLI exit code 2.
class DegenerateParameterError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An exactness check failed; points at a bug in lattice or recurrence data.
// CLI exit code 3.
class InternalConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// A zero of mu lies beyond the enumeration window. CLI exit code 2.
class WindowTooSmallError : public DegenerateParameterError {
public:
  using DegenerateParameterError::DegenerateParameterError;
};

class GroupSizeError : public std::length_error {
public:
  using std::length_error::length_error;
};

class InconclusiveError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace eqbif
