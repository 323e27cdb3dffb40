#include "zkmc/sigma.hpp"

namespace zkmc {

namespace {

// derived base: hat g_i^(j) = prod_s g_s^{A_si}; columns of A give the MSM
// coefficients. Entries are small signed integers, so negate points instead
// of using full-width scalars.
G1Affine derived_base(const SymParams& sp, const IntMat& A, size_t col) {
    G1 acc = G1::identity();
    for (size_t s = 0; s < A.rows; s++) {
        int64_t coeff = A.at(s, col);
        if (!coeff) continue;
        uint64_t mag = uint64_t(coeff < 0 ? -coeff : coeff);
        G1 term = curve::mul_limbs(G1::from_affine(sp.g_pow[s]), std::span(&mag, 1));
        if (coeff < 0) term = curve::neg(term);
        acc = curve::add(acc, term);
    }
    return curve::to_affine(acc);
}

std::vector<G1Affine> derived_bases(const SymParams& sp, const IntMat& A) {
    std::vector<G1Affine> out(A.cols);
    for (size_t i = 0; i < A.cols; i++) out[i] = derived_base(sp, A, i);
    return out;
}

// e = H(c_x || c^(1) || ... || c^(k) || t_x || t^(1) || ... || t^(k))
Fr transcript_challenge(Transcript& t, std::span<const ZkmmeqClaim> claims,
                        const VectorCommitment& c_x, const G1Affine& t_x,
                        std::span<const G1Affine> t_j) {
    absorb_g1(t, "zkmmeq.cx", c_x.c);
    for (const auto& cl : claims) absorb_g1(t, "zkmmeq.c", cl.c.c);
    absorb_g1(t, "zkmmeq.tx", t_x);
    for (const auto& tj : t_j) absorb_g1(t, "zkmmeq.t", tj);
    return fr_challenge(t, "zkmmeq.e");
}

}  // namespace

#ifdef ZKMC_TEST_BUILD
ZkmmeqFirstMessage zkmmeq_first_message(const SymParams& sp, std::span<const ZkmmeqClaim> claims,
                                        size_t xdim, Drbg& rng) {
    ZkmmeqFirstMessage fm;
    fm.mask.resize(xdim);
    for (auto& m : fm.mask) m = fr_random(rng);
    fm.sigma_x = fr_random(rng);
    fm.t_x = pedersen::commit_vector(sp, fm.mask, fm.sigma_x).c;
    for (const auto& cl : claims) {
        Fr sigma = fr_random(rng);
        fm.sigma_j.push_back(sigma);
        auto bases = derived_bases(sp, cl.A);
        G1 acc = msm(bases, fm.mask);
        acc = curve::add(acc, sp.tab_h.mul(sigma));
        fm.t_j.push_back(curve::to_affine(acc));
    }
    return fm;
}

ZkmmeqProof zkmmeq_finish(const ZkmmeqFirstMessage& fm, std::span<const Fr> claim_rand,
                          std::span<const Fr> x, const Fr& r_x, const Fr& e) {
    ZkmmeqProof proof;
    proof.t_x = fm.t_x;
    proof.t_j = fm.t_j;
    proof.z.resize(x.size());
    for (size_t i = 0; i < x.size(); i++) proof.z[i] = fm.mask[i] + e * x[i];
    proof.w_x = fm.sigma_x + e * r_x;
    for (size_t j = 0; j < claim_rand.size(); j++)
        proof.w_j.push_back(fm.sigma_j[j] + e * claim_rand[j]);
    return proof;
}
#endif

ZkmmeqProof zkmmeq_prove(const SymParams& sp, Transcript& t,
                         std::span<const ZkmmeqClaim> claims, std::span<const Fr> claim_rand,
                         std::span<const Fr> x, const VectorCommitment& c_x, const Fr& r_x,
                         Drbg& rng) {
    if (claims.size() != claim_rand.size()) throw Error("zkmmeq: claim size mismatch");
    for (const auto& cl : claims)
        if (cl.A.cols != x.size()) throw Error("zkmmeq: matrix width mismatch");

    std::vector<Fr> mask(x.size());
    for (auto& m : mask) m = fr_random(rng);
    Fr sigma_x = fr_random(rng);
    G1Affine t_x = pedersen::commit_vector(sp, mask, sigma_x).c;

    std::vector<Fr> sigma_j(claims.size());
    std::vector<G1Affine> t_j(claims.size());
    for (size_t j = 0; j < claims.size(); j++) {
        sigma_j[j] = fr_random(rng);
        auto bases = derived_bases(sp, claims[j].A);
        G1 acc = msm(bases, mask);
        acc = curve::add(acc, sp.tab_h.mul(sigma_j[j]));
        t_j[j] = curve::to_affine(acc);
    }

    Fr e = transcript_challenge(t, claims, c_x, t_x, t_j);

    ZkmmeqProof proof;
    proof.t_x = t_x;
    proof.t_j = t_j;
    proof.z.resize(x.size());
    for (size_t i = 0; i < x.size(); i++) proof.z[i] = mask[i] + e * x[i];
    proof.w_x = sigma_x + e * r_x;
    proof.w_j.resize(claims.size());
    for (size_t j = 0; j < claims.size(); j++) proof.w_j[j] = sigma_j[j] + e * claim_rand[j];
    return proof;
}

namespace {

bool zkmmeq_equations(const SymParams& sp, std::span<const ZkmmeqClaim> claims,
                      const VectorCommitment& c_x, const ZkmmeqProof& proof, const Fr& e) {
    if (proof.t_j.size() != claims.size() || proof.w_j.size() != claims.size()) return false;
    size_t l = proof.z.size();
    for (const auto& cl : claims)
        if (cl.A.cols != l) return false;

    // per-claim: prod_i (hat g_i^(j))^{z_i} * h^{w_j} == t_j * c_j^e
    for (size_t j = 0; j < claims.size(); j++) {
        auto bases = derived_bases(sp, claims[j].A);
        G1 lhs = msm(bases, proof.z);
        lhs = curve::add(lhs, sp.tab_h.mul(proof.w_j[j]));
        G1 rhs = curve::mul(G1::from_affine(claims[j].c.c), e);
        rhs = curve::add_mixed(rhs, proof.t_j[j]);
        if (!curve::eq(lhs, rhs)) return false;
    }
    // prod_i g_i^{z_i} * h^{w_x} == t_x * c_x^e
    G1 lhs = msm(std::span(sp.g_pow).subspan(0, l), proof.z);
    lhs = curve::add(lhs, sp.tab_h.mul(proof.w_x));
    G1 rhs = curve::mul(G1::from_affine(c_x.c), e);
    rhs = curve::add_mixed(rhs, proof.t_x);
    return curve::eq(lhs, rhs);
}

}  // namespace

bool zkmmeq_verify(const SymParams& sp, Transcript& t, std::span<const ZkmmeqClaim> claims,
                   const VectorCommitment& c_x, const ZkmmeqProof& proof) {
    Fr e = transcript_challenge(t, claims, c_x, proof.t_x, proof.t_j);
    return zkmmeq_equations(sp, claims, c_x, proof, e);
}

#ifdef ZKMC_TEST_BUILD
bool zkmmeq_check_with_challenge(const SymParams& sp, std::span<const ZkmmeqClaim> claims,
                                 const VectorCommitment& c_x, const ZkmmeqProof& proof,
                                 const Fr& e) {
    return zkmmeq_equations(sp, claims, c_x, proof, e);
}
#endif

}  // namespace zkmc
