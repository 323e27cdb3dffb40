#include "zkmc/sigma.hpp"

namespace zkmc {

Bytes TierCommitment::serialized() const {
    Writer w;
    w.u8(is_matrix ? 1 : 0);
    if (is_matrix) {
        auto b = m.c.to_bytes();
        w.raw(b);
    } else {
        w.raw(g1_to_bytes(v.c));
    }
    return w.take();
}

namespace {

// z = H(c_A || c_1 || ... || c_l)
Fr linkage_challenge(Transcript& t, const TierCommitment& c,
                     std::span<const G1Affine> entries) {
    t.absorb("zkrp.cA", c.serialized());
    for (const auto& e : entries) absorb_g1(t, "zkrp.ci", e);
    return fr_challenge(t, "zkrp.z");
}

// pairing equation: cA * e(c_combined, g')^{-1} == e(pi_eq, g'^(alpha-z)) * e(theta, h')
// For the vector tier cA lifts to e(c_vec, g'), which folds into the same
// multi-pairing with negated G1 inputs.
bool check_linkage(const SymParams& sp, const TierCommitment& c, const G1Affine& combined,
                   const Fr& z, const G1Affine& pi_eq, const G1Affine& theta) {
    G2 zshift = curve::mul(G2::from_affine(sp.gp()), z);         // g'^z
    G2 exp = curve::add_mixed(curve::neg(zshift), sp.gp_pow[1]);  // g'^(alpha-z)
    G2Affine exp_aff = curve::to_affine(exp);

    if (c.is_matrix) {
        std::pair<G1Affine, G2Affine> pairs[3] = {
            {combined, sp.gp()},
            {pi_eq, exp_aff},
            {theta, sp.hp},
        };
        return multi_pairing(pairs) == c.m.c;
    }
    std::pair<G1Affine, G2Affine> pairs[3] = {
        {curve::to_affine(
             curve::add_mixed(G1::from_affine(c.v.c), combined.neg())),  // c_vec - c
         sp.gp()},
        {pi_eq.neg(), exp_aff},
        {theta.neg(), sp.hp},
    };
    return multi_pairing(pairs).is_one();
}

}  // namespace

ZkrpProof zkrp_prove(const SymParams& sp, Transcript& t, std::span<const uint64_t> values,
                     const TierCommitment& c, const Fr& r_c, uint64_t M, Drbg& rng) {
    size_t l = values.size();
    if (l == 0 || l + 1 > sp.g_pow.size()) throw Error("zkrp: bad entry count");

    ZkrpProof proof;
    std::vector<Fr> r(l);
    std::vector<G1> jac(l);
    for (size_t i = 0; i < l; i++) {
        r[i] = fr_random(rng);
        G1 ci = sp.tab_g.mul(Fr::from_u64(values[i]));
        ci = curve::add(ci, sp.tab_h.mul(r[i]));
        jac[i] = ci;
    }
    proof.entry_commits.resize(l);
    curve::batch_to_affine<Fp>(jac, proof.entry_commits);

    Fr z = linkage_challenge(t, c, proof.entry_commits);

    // f(X) = sum v_i X^(i-1); q(X) = (f(X) - f(z)) / (X - z)
    std::vector<Fr> f(l);
    for (size_t i = 0; i < l; i++) f[i] = Fr::from_u64(values[i]);
    Fr r_z = Fr::zero();
    {
        Fr zp = Fr::one();
        for (size_t i = 0; i < l; i++) {
            r_z += r[i] * zp;
            zp = zp * z;
        }
    }
    std::vector<Fr> q(l > 1 ? l - 1 : 0);
    {
        // synthetic division by (X - z)
        Fr carry = Fr::zero();
        for (size_t i = l; i-- > 1;) {
            carry = f[i] + carry * z;
            q[i - 1] = carry;
        }
    }
    Fr mu = fr_random(rng);
    G1 pi = q.empty() ? G1::identity() : msm(std::span(sp.g_pow).subspan(0, q.size()), q);
    pi = curve::add(pi, sp.tab_h.mul(mu));
    proof.pi_eq = curve::to_affine(pi);

    // theta = g^{r_c - r_z + mu z} * (g^alpha)^{-mu}
    G1 theta = sp.tab_g.mul(r_c - r_z + mu * z);
    theta = curve::add(theta,
                       curve::neg(curve::mul(G1::from_affine(sp.g_pow[1]), mu)));
    proof.theta = curve::to_affine(theta);

    proof.range = range_prove(sp, t, values, r, proof.entry_commits, M, rng);
    return proof;
}

bool zkrp_verify(const SymParams& sp, Transcript& t, const TierCommitment& c, uint64_t M,
                 const ZkrpProof& proof) {
    size_t l = proof.entry_commits.size();
    if (l == 0) return false;
    Fr z = linkage_challenge(t, c, proof.entry_commits);

    // combined c = prod c_i^{z^(i-1)}
    std::vector<Fr> zpow(l);
    zpow[0] = Fr::one();
    for (size_t i = 1; i < l; i++) zpow[i] = zpow[i - 1] * z;
    G1Affine combined = curve::to_affine(msm(proof.entry_commits, zpow));

    if (!check_linkage(sp, c, combined, z, proof.pi_eq, proof.theta)) return false;
    return range_verify(sp, t, proof.entry_commits, M, proof.range);
}

#ifdef ZKMC_TEST_BUILD
ZkrpProof zkrp_simulate(const SymParams& sp, Transcript& t, const TierCommitment& c,
                        const G1Affine& phi, const Fr& r_c, size_t num_entries, uint64_t M,
                        Drbg& rng) {
    if (!sp.alpha || !sp.beta) throw Error("simulator requires the insecure trapdoors");
    Fr alpha = *sp.alpha, beta = *sp.beta;
    size_t l = num_entries;

    // uniform entry commitments with known trapdoor openings to the value 0:
    // c_i = g^{u_i} = g^0 h^{u_i / beta}
    ZkrpProof proof;
    std::vector<Fr> u(l), r(l);
    std::vector<G1> jac(l);
    Fr beta_inv = beta.inv();
    for (size_t i = 0; i < l; i++) {
        u[i] = fr_random(rng);
        r[i] = u[i] * beta_inv;
        jac[i] = sp.tab_g.mul(u[i]);
    }
    proof.entry_commits.resize(l);
    curve::batch_to_affine<Fp>(jac, proof.entry_commits);

    Fr z = linkage_challenge(t, c, proof.entry_commits);
    Fr r_z = Fr::zero();
    {
        Fr zp = Fr::one();
        for (size_t i = 0; i < l; i++) {
            r_z += r[i] * zp;
            zp = zp * z;
        }
    }

    // pi_eq sampled with known exponent; theta solves the verification
    // equation given the preimage split cA = e(phi, g') * e(g,h')^{r_c}
    Fr p_exp = fr_random(rng);
    Fr mu = fr_random(rng);
    proof.pi_eq = curve::to_affine(
        curve::add(sp.tab_g.mul(p_exp), sp.tab_h.mul(mu)));
    // theta = (phi * g^{-(p_exp + beta*mu)(alpha - z)})^{1/beta} * g^{r_c - r_z}
    Fr expo = (p_exp + beta * mu) * (alpha - z);
    G1 th = curve::add(G1::from_affine(phi), curve::neg(sp.tab_g.mul(expo)));
    th = curve::mul(th, beta_inv);
    th = curve::add(th, sp.tab_g.mul(r_c - r_z));
    proof.theta = curve::to_affine(th);

    // honest range proofs on the trapdoor openings (value 0)
    std::vector<uint64_t> zeros(l, 0);
    proof.range = range_prove(sp, t, zeros, r, proof.entry_commits, M, rng);
    return proof;
}
#endif

}  // namespace zkmc
