#pragma once

#include "zkmc/msm.hpp"
#include "zkmc/pairing.hpp"
#include "zkmc/serialize.hpp"

namespace zkmc {

// Bounded signed-integer encoding into Fr: [-M, M] with M^2 << r.
constexpr uint64_t DEFAULT_BOUND_M = uint64_t(1) << 32;

Fr encode_int(int64_t v);
// inverse on [0,M] u [r-M, r-1]; bound given explicitly
std::optional<int64_t> decode_int(const Fr& x, uint64_t bound);

// Common parameters for the symbolic scheme: powers of a secret alpha in both
// groups (g_i = g^(alpha^(i-1)) serve as the vector-commitment bases), plus
// the blinding pair h = g^beta, h' = g'^beta.
struct SymParams {
    uint32_t max_flat = 0;  // count of consecutive powers in each group
    std::vector<G1Affine> g_pow;
    std::vector<G2Affine> gp_pow;
    G1Affine h;
    G2Affine hp;
    bool insecure = false;
    std::optional<Fr> alpha, beta;  // retained only under the insecure flag

    // derived, not serialized
    G1FixedBase tab_g, tab_h;
    Gt gt_g;  // e(g, g')
    Gt gt_h;  // e(g, h'): randomness base of the matrix tier

    static SymParams generate(uint32_t max_flat, Drbg& rng, bool insecure);
    void finish_init();

    const G1Affine& g() const { return g_pow[0]; }
    const G2Affine& gp() const { return gp_pow[0]; }

    Bytes serialize() const;
    static SymParams deserialize(std::span<const uint8_t> data);
    Bytes32 digest() const;
};

// Commitment tiers
struct VectorCommitment {
    G1Affine c;
    bool operator==(const VectorCommitment& o) const { return c == o.c; }
};
struct MatrixCommitment {
    Gt c;
    bool operator==(const MatrixCommitment& o) const { return c == o.c; }
};

namespace pedersen {

// scalar commitment g^v h^r (the scalar base is g_pow[0])
VectorCommitment commit_scalar(const SymParams& sp, const Fr& v, const Fr& r);
// vector commitment h^r prod g_i^{v_i}
VectorCommitment commit_vector(const SymParams& sp, std::span<const Fr> v, const Fr& r);
// two-tier matrix commitment (row-major), e(g,g')^{f(alpha)} e(g,h')^r
MatrixCommitment commit_matrix(const SymParams& sp, size_t rows, size_t cols,
                               std::span<const Fr> row_major, const Fr& r);

bool verify_opening(const SymParams& sp, const VectorCommitment& c, std::span<const Fr> v,
                    const Fr& r);
bool verify_opening_matrix(const SymParams& sp, const MatrixCommitment& c, size_t rows,
                           size_t cols, std::span<const Fr> row_major, const Fr& r);

inline VectorCommitment hom_add(const VectorCommitment& a, const VectorCommitment& b) {
    return {curve::to_affine(curve::add(G1::from_affine(a.c), G1::from_affine(b.c)))};
}
inline MatrixCommitment hom_add(const MatrixCommitment& a, const MatrixCommitment& b) {
    return {a.c * b.c};
}

}  // namespace pedersen

// Fr <-> transcript helpers
Fr fr_challenge(Transcript& t, const std::string& label);
void absorb_g1(Transcript& t, const std::string& label, const G1Affine& p);
void absorb_gt(Transcript& t, const std::string& label, const Gt& v);
void absorb_fr(Transcript& t, const std::string& label, const Fr& x);
Fr fr_random(Drbg& rng);

}  // namespace zkmc
