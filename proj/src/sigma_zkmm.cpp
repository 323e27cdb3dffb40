#include "zkmc/sigma.hpp"

namespace zkmc {

namespace {

Fr inner(std::span<const Fr> a, std::span<const Fr> b) {
    Fr acc = Fr::zero();
    for (size_t i = 0; i < a.size(); i++) acc += a[i] * b[i];
    return acc;
}

struct IpSecrets {
    std::vector<Fr> a, x;
    Fr r_a, r_x, y, r_y;
};

// masked Schnorr proof of <a, x> = y over vector commitments c_a, c_x and the
// scalar commitment c_y
InnerProductProof ip_prove(const SymParams& sp, Transcript& t, const IpSecrets& s, Drbg& rng) {
    size_t n = s.a.size();
    std::vector<Fr> sa(n), sx(n);
    for (auto& v : sa) v = fr_random(rng);
    for (auto& v : sx) v = fr_random(rng);
    Fr siga = fr_random(rng), sigx = fr_random(rng);
    Fr tau1 = fr_random(rng), tau2 = fr_random(rng);

    InnerProductProof p;
    p.T_a = pedersen::commit_vector(sp, sa, siga).c;
    p.T_x = pedersen::commit_vector(sp, sx, sigx).c;
    Fr t1 = inner(sa, s.x) + inner(s.a, sx);
    Fr t2 = inner(sa, sx);
    p.C1 = pedersen::commit_scalar(sp, t1, tau1).c;
    p.C2 = pedersen::commit_scalar(sp, t2, tau2).c;

    absorb_g1(t, "zkmm.Ta", p.T_a);
    absorb_g1(t, "zkmm.Tx", p.T_x);
    absorb_g1(t, "zkmm.C1", p.C1);
    absorb_g1(t, "zkmm.C2", p.C2);
    Fr e = fr_challenge(t, "zkmm.e");

    p.u_a.resize(n);
    p.u_x.resize(n);
    for (size_t i = 0; i < n; i++) {
        p.u_a[i] = sa[i] + e * s.a[i];
        p.u_x[i] = sx[i] + e * s.x[i];
    }
    p.w_a = siga + e * s.r_a;
    p.w_x = sigx + e * s.r_x;
    p.w_y = tau2 + e * tau1 + e * e * s.r_y;
    return p;
}

bool ip_verify(const SymParams& sp, Transcript& t, size_t n, const VectorCommitment& c_a,
               const VectorCommitment& c_x, const VectorCommitment& c_y,
               const InnerProductProof& p) {
    if (p.u_a.size() != n || p.u_x.size() != n) return false;
    absorb_g1(t, "zkmm.Ta", p.T_a);
    absorb_g1(t, "zkmm.Tx", p.T_x);
    absorb_g1(t, "zkmm.C1", p.C1);
    absorb_g1(t, "zkmm.C2", p.C2);
    Fr e = fr_challenge(t, "zkmm.e");

    // Com(u_a; w_a) == T_a * c_a^e
    G1 lhs = G1::from_affine(pedersen::commit_vector(sp, p.u_a, p.w_a).c);
    G1 rhs = curve::add_mixed(curve::mul(G1::from_affine(c_a.c), e), p.T_a);
    if (!curve::eq(lhs, rhs)) return false;
    lhs = G1::from_affine(pedersen::commit_vector(sp, p.u_x, p.w_x).c);
    rhs = curve::add_mixed(curve::mul(G1::from_affine(c_x.c), e), p.T_x);
    if (!curve::eq(lhs, rhs)) return false;
    // Com(<u_a,u_x>; w_y) == C2 * C1^e * c_y^{e^2}
    lhs = G1::from_affine(pedersen::commit_scalar(sp, inner(p.u_a, p.u_x), p.w_y).c);
    rhs = curve::mul(G1::from_affine(c_y.c), e * e);
    rhs = curve::add(rhs, curve::mul(G1::from_affine(p.C1), e));
    rhs = curve::add_mixed(rhs, p.C2);
    return curve::eq(lhs, rhs);
}

std::vector<Fr> encode_row(const IntMat& A, size_t r) {
    std::vector<Fr> out(A.cols);
    for (size_t c = 0; c < A.cols; c++) out[c] = encode_int(A.at(r, c));
    return out;
}

}  // namespace

ZkmmProof zkmm_prove_matrix(const SymParams& sp, Transcript& t, const IntMat& A,
                            std::span<const Fr> x, const MatrixCommitment& c_A,
                            const VectorCommitment& c_x, const VectorCommitment& c_out,
                            const Fr& r_A, const Fr& r_x, const Fr& r_out, Drbg& rng) {
    size_t m = A.rows, n = A.cols;
    if (x.size() != n) throw Error("zkmm: dimension mismatch");
    absorb_gt(t, "zkmm.cA", c_A.c);
    absorb_g1(t, "zkmm.cx", c_x.c);
    absorb_g1(t, "zkmm.cout", c_out.c);

    ZkmmProof proof;
    // per-row commitments + linkage correction
    std::vector<Fr> rho(m);
    std::vector<G1> jac(m);
    std::vector<std::vector<Fr>> rows(m);
    for (size_t i = 0; i < m; i++) {
        rho[i] = fr_random(rng);
        rows[i] = encode_row(A, i);
        jac[i] = G1::from_affine(pedersen::commit_vector(sp, rows[i], rho[i]).c);
    }
    proof.row_commits.resize(m);
    curve::batch_to_affine<Fp>(jac, proof.row_commits);

    // theta = g^{r_A} * prod g^(alpha^{n(i-1)})^{-rho_i}
    G1 theta = sp.tab_g.mul(r_A);
    for (size_t i = 0; i < m; i++) {
        size_t idx = n * i;
        theta = curve::add(theta, curve::neg(curve::mul(G1::from_affine(sp.g_pow[idx]), rho[i])));
    }
    proof.theta = curve::to_affine(theta);

    for (const auto& rc : proof.row_commits) absorb_g1(t, "zkmm.row", rc);
    absorb_g1(t, "zkmm.theta", proof.theta);
    Fr z = fr_challenge(t, "zkmm.z");

    // row combination a_z = sum z^{i-1} A_i and the combined product claim
    std::vector<Fr> zpow(m);
    zpow[0] = Fr::one();
    for (size_t i = 1; i < m; i++) zpow[i] = zpow[i - 1] * z;
    std::vector<Fr> a_z(n, Fr::zero());
    Fr r_az = Fr::zero();
    for (size_t i = 0; i < m; i++) {
        for (size_t c = 0; c < n; c++) a_z[c] += zpow[i] * rows[i][c];
        r_az += zpow[i] * rho[i];
    }
    // y = A x and y_z = <zpow, y>
    std::vector<Fr> y(m, Fr::zero());
    for (size_t i = 0; i < m; i++) y[i] = inner(rows[i], x);
    Fr y_z = inner(zpow, y);
    Fr r_yz = fr_random(rng);
    proof.c_yz = pedersen::commit_scalar(sp, y_z, r_yz).c;
    absorb_g1(t, "zkmm.cyz", proof.c_yz);

    // tie c_yz to c_out: the zkmmeq equation with the public z-power row,
    // whose derived base is g^{z^{i-1}} on the scalar side
    {
        std::vector<Fr> mask(m);
        for (auto& v : mask) v = fr_random(rng);
        Fr sig_link = fr_random(rng), sig_x = fr_random(rng);
        // t_link = g^{<zpow, mask>} h^{sig_link}; t_out = Com(mask; sig_x)
        G1 t_link = curve::add(sp.tab_g.mul(inner(zpow, mask)), sp.tab_h.mul(sig_link));
        G1Affine t_link_a = curve::to_affine(t_link);
        G1Affine t_out = pedersen::commit_vector(sp, mask, sig_x).c;
        absorb_g1(t, "zkmm.link.tl", t_link_a);
        absorb_g1(t, "zkmm.link.to", t_out);
        Fr e = fr_challenge(t, "zkmm.link.e");
        proof.yz_link.t_x = t_out;
        proof.yz_link.t_j = {t_link_a};
        proof.yz_link.z.resize(m);
        for (size_t i = 0; i < m; i++) proof.yz_link.z[i] = mask[i] + e * y[i];
        proof.yz_link.w_x = sig_x + e * r_out;
        proof.yz_link.w_j = {sig_link + e * r_yz};
    }

    // inner product <a_z, x> = y_z
    IpSecrets s;
    s.a = std::move(a_z);
    s.x.assign(x.begin(), x.end());
    s.r_a = r_az;
    s.r_x = r_x;
    s.y = y_z;
    s.r_y = r_yz;
    proof.ip = ip_prove(sp, t, s, rng);
    return proof;
}

bool zkmm_verify_matrix(const SymParams& sp, Transcript& t, size_t rows, size_t cols,
                        const MatrixCommitment& c_A, const VectorCommitment& c_x,
                        const VectorCommitment& c_out, const ZkmmProof& proof) {
    size_t m = rows, n = cols;
    if (proof.row_commits.size() != m) return false;
    if (n * (m - 1) + 1 > sp.g_pow.size()) return false;
    absorb_gt(t, "zkmm.cA", c_A.c);
    absorb_g1(t, "zkmm.cx", c_x.c);
    absorb_g1(t, "zkmm.cout", c_out.c);
    for (const auto& rc : proof.row_commits) absorb_g1(t, "zkmm.row", rc);
    absorb_g1(t, "zkmm.theta", proof.theta);
    Fr z = fr_challenge(t, "zkmm.z");

    // linkage: cA == prod e(R_i, g'^{alpha^{n(i-1)}}) * e(theta, h')
    std::vector<std::pair<G1Affine, G2Affine>> pairs;
    for (size_t i = 0; i < m; i++) pairs.push_back({proof.row_commits[i], sp.gp_pow[n * i]});
    pairs.push_back({proof.theta, sp.hp});
    if (multi_pairing(pairs) != c_A.c) return false;

    // combined row commitment
    std::vector<Fr> zpow(m);
    zpow[0] = Fr::one();
    for (size_t i = 1; i < m; i++) zpow[i] = zpow[i - 1] * z;
    VectorCommitment c_az{curve::to_affine(msm(proof.row_commits, zpow))};

    absorb_g1(t, "zkmm.cyz", proof.c_yz);

    // linkage of c_yz to c_out
    {
        if (proof.yz_link.t_j.size() != 1 || proof.yz_link.w_j.size() != 1 ||
            proof.yz_link.z.size() != m)
            return false;
        absorb_g1(t, "zkmm.link.tl", proof.yz_link.t_j[0]);
        absorb_g1(t, "zkmm.link.to", proof.yz_link.t_x);
        Fr e = fr_challenge(t, "zkmm.link.e");
        // g^{<zpow, zvec>} h^{w_j} == t_link * c_yz^e
        Fr comb = Fr::zero();
        for (size_t i = 0; i < m; i++) comb += zpow[i] * proof.yz_link.z[i];
        G1 lhs = curve::add(sp.tab_g.mul(comb), sp.tab_h.mul(proof.yz_link.w_j[0]));
        G1 rhs = curve::add_mixed(curve::mul(G1::from_affine(proof.c_yz), e),
                                  proof.yz_link.t_j[0]);
        if (!curve::eq(lhs, rhs)) return false;
        // Com(zvec; w_x) == t_out * c_out^e
        lhs = G1::from_affine(pedersen::commit_vector(sp, proof.yz_link.z, proof.yz_link.w_x).c);
        rhs = curve::add_mixed(curve::mul(G1::from_affine(c_out.c), e), proof.yz_link.t_x);
        if (!curve::eq(lhs, rhs)) return false;
    }

    return ip_verify(sp, t, n, c_az, c_x, VectorCommitment{proof.c_yz}, proof.ip);
}

ZkmmProof zkmm_prove_vector(const SymParams& sp, Transcript& t, std::span<const Fr> a,
                            std::span<const Fr> x, const VectorCommitment& c_a,
                            const VectorCommitment& c_x, const VectorCommitment& c_out,
                            const Fr& r_a, const Fr& r_x, const Fr& r_out, Drbg& rng) {
    if (a.size() != x.size()) throw Error("zkmm: dimension mismatch");
    absorb_g1(t, "zkmm.ca", c_a.c);
    absorb_g1(t, "zkmm.cx", c_x.c);
    absorb_g1(t, "zkmm.cout", c_out.c);
    ZkmmProof proof;
    IpSecrets s;
    s.a.assign(a.begin(), a.end());
    s.x.assign(x.begin(), x.end());
    s.r_a = r_a;
    s.r_x = r_x;
    s.y = inner(a, x);
    s.r_y = r_out;
    proof.ip = ip_prove(sp, t, s, rng);
    return proof;
}

bool zkmm_verify_vector(const SymParams& sp, Transcript& t, size_t dim,
                        const VectorCommitment& c_a, const VectorCommitment& c_x,
                        const VectorCommitment& c_out, const ZkmmProof& proof) {
    if (!proof.row_commits.empty()) return false;
    absorb_g1(t, "zkmm.ca", c_a.c);
    absorb_g1(t, "zkmm.cx", c_x.c);
    absorb_g1(t, "zkmm.cout", c_out.c);
    return ip_verify(sp, t, dim, c_a, c_x, c_out, proof.ip);
}

}  // namespace zkmc
