#pragma once
// Shared error types and resource budgets used across the library.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace recolor {

// Hard caps for the expensive operations. Exceeding one raises BudgetError;
// callers that want "excluded by budget" semantics catch it and record the
// exclusion instead of silently weakening the check.
struct Budget {
    long long max_colorings = 1'000'000;   // coloring enumeration cap
    long long iso_nodes = 10'000'000;      // isomorphism/canonical search tree cap
    long long selection_steps = 1'000'000; // one-per-clique selection backtracking cap
};

// A computation hit a resource cap. Distinct from wrong input: the result is
// unknown, not false.
class BudgetError : public std::runtime_error {
  public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// The input violated an invariant that holds for every genuine coloring graph
// (e.g. a completion that should be unique was not). Distinct from a normal
// algorithm abort, which is a value, not an exception.
class StructuralError : public std::runtime_error {
  public:
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace recolor
