#pragma once

#include <gmpxx.h>

#include "zkmc/linsys.hpp"

namespace zkmc {

// Exact rational feasibility of { y : A y <= b } with y free.
// Unsat comes with a Farkas ray: lambda >= 0, lambda^T A = 0, lambda^T b < 0,
// re-verified by substitution before returning.
struct LpResult {
    bool sat = false;
    std::vector<mpq_class> point;  // when sat
    std::vector<mpq_class> ray;    // when unsat: one multiplier per row
};

LpResult lp_feasible(const IntMat& A, std::span<const int64_t> b);

struct FarkasWitness {
    std::vector<uint64_t> lambda;  // per secret row
    std::vector<uint64_t> mu;      // per public row
    uint64_t slack = 0;            // -b.lambda - h.mu - 1

    bool reverify(const IntMat& As, std::span<const int64_t> bs, const IntMat& Gp,
                  std::span<const int64_t> hp) const;
};

enum class FarkasError { None, NoWitness, BoundExceeded };

// Dual witness for the stacked obligation system [As; Gp] y <= [bs; hp].
// NoWitness when the primal is rationally satisfiable; BoundExceeded when the
// scaled integer ray leaves [0, M].
struct FarkasOutcome {
    FarkasError error = FarkasError::None;
    FarkasWitness witness;
    std::vector<mpq_class> sat_point;  // populated in the NoWitness case
};
FarkasOutcome farkas_witness(const IntMat& As, std::span<const int64_t> bs, const IntMat& Gp,
                             std::span<const int64_t> hp, uint64_t bound_m);

}  // namespace zkmc
