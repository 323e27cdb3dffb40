#pragma once

#include "zkmc/linsys.hpp"
#include "zkmc/pedersen.hpp"

namespace zkmc {

// ------------------------------------------------------------------
// Per-element range backend (the R_Bullet relation): bit decomposition
// with two-move OR proofs per bit; [0, M] realized as the pair of
// checks v in [0, 2^k) and M - v in [0, 2^k).
// ------------------------------------------------------------------

struct BitOrProof {
    G1Affine t0, t1;
    Fr e0, s0, s1;  // e1 = e - e0 recomputed by the verifier
};

struct ValueRangeProof {
    std::vector<G1Affine> bit_commits;
    std::vector<BitOrProof> bits;
    G1Affine sum_t;  // Schnorr tying the weighted bit sum to the value commitment
    Fr sum_s;
};

struct RangeProof {
    uint32_t kbits = 0;
    std::vector<ValueRangeProof> low;   // v
    std::vector<ValueRangeProof> high;  // M - v
};

// Values must lie in [0, M]; the prover throws Error otherwise (the relation
// admits no proof). r[i] is the randomness of c[i] = g^{v_i} h^{r_i}.
RangeProof range_prove(const SymParams& sp, Transcript& t, std::span<const uint64_t> values,
                       std::span<const Fr> rand, std::span<const G1Affine> commits, uint64_t M,
                       Drbg& rng);
bool range_verify(const SymParams& sp, Transcript& t, std::span<const G1Affine> commits,
                  uint64_t M, const RangeProof& proof);

uint32_t range_bits(uint64_t M);

// test hook: forge a transcript for an out-of-range value (malicious prover)
RangeProof range_prove_unchecked(const SymParams& sp, Transcript& t,
                                 std::span<const uint64_t> values, std::span<const Fr> rand,
                                 std::span<const G1Affine> commits, uint64_t M, Drbg& rng);

// ------------------------------------------------------------------
// zkmmeq: batched proof that commitments c^(j) open to A^(j) x for
// public integer matrices A^(j), with x committed in c_x.
// ------------------------------------------------------------------

struct ZkmmeqClaim {
    VectorCommitment c;  // commitment to A x (vector bases for its length)
    IntMat A;            // public matrix, rows = committed length, cols = dim(x)
};

struct ZkmmeqProof {
    G1Affine t_x;
    std::vector<G1Affine> t_j;
    std::vector<Fr> z;  // dim(x)
    Fr w_x;
    std::vector<Fr> w_j;
};

ZkmmeqProof zkmmeq_prove(const SymParams& sp, Transcript& t,
                         std::span<const ZkmmeqClaim> claims, std::span<const Fr> claim_rand,
                         std::span<const Fr> x, const VectorCommitment& c_x, const Fr& r_x,
                         Drbg& rng);
bool zkmmeq_verify(const SymParams& sp, Transcript& t, std::span<const ZkmmeqClaim> claims,
                   const VectorCommitment& c_x, const ZkmmeqProof& proof);

#ifdef ZKMC_TEST_BUILD
// Rewinding support: run the prover with an externally chosen challenge.
struct ZkmmeqFirstMessage {
    std::vector<Fr> mask;  // r_i
    Fr sigma_x;
    std::vector<Fr> sigma_j;
    G1Affine t_x;
    std::vector<G1Affine> t_j;
};
ZkmmeqFirstMessage zkmmeq_first_message(const SymParams& sp, std::span<const ZkmmeqClaim> claims,
                                        size_t xdim, Drbg& rng);
ZkmmeqProof zkmmeq_finish(const ZkmmeqFirstMessage& fm, std::span<const Fr> claim_rand,
                          std::span<const Fr> x, const Fr& r_x, const Fr& e);
bool zkmmeq_check_with_challenge(const SymParams& sp, std::span<const ZkmmeqClaim> claims,
                                 const VectorCommitment& c_x, const ZkmmeqProof& proof,
                                 const Fr& e);
#endif

// ------------------------------------------------------------------
// zkrp: entries of a committed matrix/vector/scalar lie in [0, M].
// Links per-entry commitments to the tier commitment via a KZG-style
// opening at a transcript challenge, then runs the range backend.
// ------------------------------------------------------------------

struct TierCommitment {
    // matrix tier carries the GT element; vector/scalar tiers the G1 element
    bool is_matrix = false;
    MatrixCommitment m;
    VectorCommitment v;

    Bytes serialized() const;
    static TierCommitment matrix(const MatrixCommitment& c) { return {true, c, {}}; }
    static TierCommitment vector(const VectorCommitment& c) { return {false, {}, c}; }
};

struct ZkrpProof {
    std::vector<G1Affine> entry_commits;
    G1Affine pi_eq, theta;
    RangeProof range;
};

ZkrpProof zkrp_prove(const SymParams& sp, Transcript& t, std::span<const uint64_t> values,
                     const TierCommitment& c, const Fr& r_c, uint64_t M, Drbg& rng);
bool zkrp_verify(const SymParams& sp, Transcript& t, const TierCommitment& c, uint64_t M,
                 const ZkrpProof& proof);

#ifdef ZKMC_TEST_BUILD
// Appendix-style simulator: needs the trapdoors and the commitment's group-
// side preimage split (phi = g^{f(alpha)}, r) but not the entries themselves.
ZkrpProof zkrp_simulate(const SymParams& sp, Transcript& t, const TierCommitment& c,
                        const G1Affine& phi, const Fr& r_c, size_t num_entries, uint64_t M,
                        Drbg& rng);
#endif

// ------------------------------------------------------------------
// zkmm: product relation out = A x with A two-tier committed (matrix
// case) or vector committed (row-vector case: out is a scalar).
// ------------------------------------------------------------------

struct InnerProductProof {
    G1Affine T_a, T_x, C1, C2;
    std::vector<Fr> u_a, u_x;
    Fr w_a, w_x, w_y;
};

struct ZkmmProof {
    std::vector<G1Affine> row_commits;  // matrix case only
    G1Affine theta;                     // matrix case only
    G1Affine c_yz;                      // matrix case only (scalar commitment)
    ZkmmeqProof yz_link;                // matrix case only
    InnerProductProof ip;
};

// matrix case: A is rows x cols row-major (signed ints), x has cols entries,
// out = A x has rows entries committed as a vector in c_out.
ZkmmProof zkmm_prove_matrix(const SymParams& sp, Transcript& t, const IntMat& A,
                            std::span<const Fr> x, const MatrixCommitment& c_A,
                            const VectorCommitment& c_x, const VectorCommitment& c_out,
                            const Fr& r_A, const Fr& r_x, const Fr& r_out, Drbg& rng);
bool zkmm_verify_matrix(const SymParams& sp, Transcript& t, size_t rows, size_t cols,
                        const MatrixCommitment& c_A, const VectorCommitment& c_x,
                        const VectorCommitment& c_out, const ZkmmProof& proof);

// row-vector case: a has dim entries, out = <a, x> scalar committed in c_out.
ZkmmProof zkmm_prove_vector(const SymParams& sp, Transcript& t, std::span<const Fr> a,
                            std::span<const Fr> x, const VectorCommitment& c_a,
                            const VectorCommitment& c_x, const VectorCommitment& c_out,
                            const Fr& r_a, const Fr& r_x, const Fr& r_out, Drbg& rng);
bool zkmm_verify_vector(const SymParams& sp, Transcript& t, size_t dim,
                        const VectorCommitment& c_a, const VectorCommitment& c_x,
                        const VectorCommitment& c_out, const ZkmmProof& proof);

}  // namespace zkmc
