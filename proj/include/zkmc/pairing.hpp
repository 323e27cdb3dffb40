#pragma once

#include "zkmc/ec.hpp"

namespace zkmc {

// GT: target-group element (result of a completed pairing), unitary Fp12.
struct Gt {
    Fp12 v = Fp12::one();

    static Gt one() { return {}; }
    bool is_one() const { return v.is_one(); }
    bool operator==(const Gt& o) const { return v == o.v; }
    bool operator!=(const Gt& o) const { return !(*this == o); }

    Gt operator*(const Gt& o) const { return {v * o.v}; }
    Gt& operator*=(const Gt& o) { v = v * o.v; return *this; }
    Gt inv() const { return {v.conj()}; }  // unitary: conjugate inverts
    Gt pow(const Fr& e) const;
    Gt pow_neg(const Fr& e) const { return inv().pow(e); }

    std::array<uint8_t, 576> to_bytes() const { return v.to_bytes(); }
    static std::optional<Gt> from_bytes(std::span<const uint8_t> b);
};

Fp12 miller_loop(const G1Affine& p, const G2Affine& q);
Fp12 multi_miller_loop(std::span<const std::pair<G1Affine, G2Affine>> pairs);
Fp12 final_exponentiation(const Fp12& f);

inline Gt pairing(const G1Affine& p, const G2Affine& q) {
    return {final_exponentiation(miller_loop(p, q))};
}

inline Gt multi_pairing(std::span<const std::pair<G1Affine, G2Affine>> pairs) {
    return {final_exponentiation(multi_miller_loop(pairs))};
}

// exercised in tests against the chain-based hard part
Fp12 final_exponentiation_generic(const Fp12& f);

}  // namespace zkmc
