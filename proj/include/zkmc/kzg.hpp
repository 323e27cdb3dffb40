#pragma once

#include "zkmc/poly.hpp"
#include "zkmc/srs.hpp"

namespace zkmc {

// Hiding polynomial commitments specialized to batch-vanishing proofs: the
// committed polynomial is p~(X) = p(X) + r*Z_D(X) for the full interpolation
// domain D, so vanishing on any E subset of D survives the randomization.
namespace kzg {

struct Commitment {
    G1Affine c;
    bool operator==(const Commitment& o) const { return c == o.c; }
};

struct VanishingProof {
    G1Affine pi;
    bool operator==(const VanishingProof& o) const { return pi == o.pi; }
};

// coefficients of p~ given p (degree < |D|) and the hiding scalar r
std::vector<Fr> randomize(std::span<const Fr> coeffs, const EvalDomain& domain, const Fr& r);

Commitment commit_hiding(const KzgSrs& srs, std::span<const Fr> coeffs, const EvalDomain& domain,
                         const Fr& r);

// proof that p~ vanishes on E (requires p(e) = 0 for all e in E, E subset D);
// throws Error when the division leaves a remainder (invalid certificate)
VanishingProof prove_vanishing(const KzgSrs& srs, std::span<const Fr> coeffs,
                               const EvalDomain& domain, const Fr& r, std::span<const Fr> evalset);

bool verify_vanishing(const KzgSrs& srs, const Commitment& c, std::span<const Fr> evalset,
                      const VanishingProof& proof);

}  // namespace kzg

}  // namespace zkmc
