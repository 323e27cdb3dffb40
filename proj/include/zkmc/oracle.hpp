#pragma once

#include "zkmc/model.hpp"

namespace zkmc {

// Test-only plaintext model checker: fair-cycle detection on the synchronous
// product of system and automaton. Deliberately naive.
namespace oracle {

bool fair_cycle_exists(const ExplicitSystem& sys, const BuchiSpec& spec);

// explicit system over all integer points of the declared variable ranges
ExplicitSystem ground(const SymbolicSystem& sys, const BuchiSpec& spec,
                      uint64_t max_states = 1u << 20);

// enumerate the integer points of the declared ranges in grounding order
std::vector<std::vector<int64_t>> ground_points(const SymbolicSystem& sys,
                                                uint64_t max_states = 1u << 20);

}  // namespace oracle

}  // namespace zkmc
