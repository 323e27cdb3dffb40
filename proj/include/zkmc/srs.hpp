#pragma once

#include "zkmc/pedersen.hpp"

namespace zkmc {

// Powers-of-tau reference string for the polynomial commitment scheme.
struct KzgSrs {
    uint32_t degree = 0;  // t: powers 0..t inclusive, both groups
    std::vector<G1Affine> g1;
    std::vector<G2Affine> g2;
    bool insecure = false;
    std::optional<Fr> tau;  // retained only under the insecure flag

    static KzgSrs generate(uint32_t t, Drbg& rng, bool insecure);

    // pairing spot-check e(g^{tau^i}, g') = e(g^{tau^(i-1)}, g'^tau) on sampled i
    bool consistency_check(Drbg& rng, size_t samples = 8) const;

    Bytes serialize() const;
    static KzgSrs deserialize(std::span<const uint8_t> data);
    Bytes32 digest() const;
};

}  // namespace zkmc
