#include "zkmc/sigma.hpp"

namespace zkmc {

uint32_t range_bits(uint64_t M) {
    uint32_t k = 0;
    // smallest k with M <= 2^k - 1, i.e. k = ceil(log2(M+1))
    while (k < 63 && ((uint64_t(1) << k) - 1) < M) k++;
    return k;
}

namespace {

struct BitWitness {
    uint8_t bit;
    Fr rho;
};

struct ValueProver {
    std::vector<BitWitness> wit;
    std::vector<G1Affine> commits;
    // per-bit OR first-moves
    std::vector<Fr> sigma_real;  // mask of the real branch
    std::vector<Fr> e_sim, s_sim;
    std::vector<G1Affine> t0, t1;
    // weighted-sum Schnorr
    Fr sum_sigma;
    G1Affine sum_t;
    Fr omega;  // dlog witness: sum 2^j rho_j - r_value
};

// first move of one value's proof: bit commitments + OR t-values
ValueProver value_first_move(const SymParams& sp, uint64_t v, const Fr& r_value, uint32_t k,
                             Drbg& rng) {
    ValueProver p;
    p.wit.resize(k);
    std::vector<G1> jac(k);
    for (uint32_t j = 0; j < k; j++) {
        p.wit[j].bit = uint8_t((v >> j) & 1);
        p.wit[j].rho = fr_random(rng);
        G1 c = sp.tab_h.mul(p.wit[j].rho);
        if (p.wit[j].bit) c = curve::add_mixed(c, sp.g());
        jac[j] = c;
    }
    p.commits.resize(k);
    curve::batch_to_affine<Fp>(jac, p.commits);

    p.sigma_real.resize(k);
    p.e_sim.resize(k);
    p.s_sim.resize(k);
    std::vector<G1> t0j(k), t1j(k);
    for (uint32_t j = 0; j < k; j++) {
        p.sigma_real[j] = fr_random(rng);
        p.e_sim[j] = fr_random(rng);
        p.s_sim[j] = fr_random(rng);
        // statement 0: c = h^rho ; statement 1: c/g = h^rho
        G1 t_real = sp.tab_h.mul(p.sigma_real[j]);
        // simulated t = h^{s_sim} * target^{-e_sim}; target opens to
        // (g^{bit_target} h^{rho}) so both exponentiations stay fixed-base
        uint8_t sim_bit_target = p.wit[j].bit ? 0 : 1;  // the false branch
        // target = c * g^{-sim_target_offset}: offset 1 iff branch 1
        Fr ge = sim_bit_target == 1 ? p.e_sim[j] * encode_int(int64_t(p.wit[j].bit) - 1)
                                    : p.e_sim[j] * encode_int(int64_t(p.wit[j].bit));
        // target^{-e_sim} = g^{-(bit - branch)*e_sim} h^{-rho*e_sim}
        G1 t_sim = sp.tab_g.mul(ge.neg());
        t_sim = curve::add(t_sim, sp.tab_h.mul((p.wit[j].rho * p.e_sim[j]).neg()));
        t_sim = curve::add(t_sim, sp.tab_h.mul(p.s_sim[j]));
        if (p.wit[j].bit == 0) {
            t0j[j] = t_real;
            t1j[j] = t_sim;
        } else {
            t0j[j] = t_sim;
            t1j[j] = t_real;
        }
    }
    std::vector<G1Affine> t0a(k), t1a(k);
    curve::batch_to_affine<Fp>(t0j, t0a);
    curve::batch_to_affine<Fp>(t1j, t1a);
    p.t0 = std::move(t0a);
    p.t1 = std::move(t1a);

    // weighted-sum Schnorr first move: X = prod c_j^{2^j} / c_value = h^omega
    p.omega = Fr::zero();
    Fr pow2 = Fr::one();
    for (uint32_t j = 0; j < k; j++) {
        p.omega += p.wit[j].rho * pow2;
        pow2 = pow2 + pow2;
    }
    p.omega -= r_value;
    p.sum_sigma = fr_random(rng);
    p.sum_t = curve::to_affine(sp.tab_h.mul(p.sum_sigma));
    return p;
}

ValueRangeProof value_finish(const ValueProver& p, Transcript& t, const std::string& label) {
    uint32_t k = uint32_t(p.wit.size());
    ValueRangeProof out;
    out.bit_commits = p.commits;
    out.bits.resize(k);
    for (uint32_t j = 0; j < k; j++) {
        Fr e = fr_challenge(t, label + ".bit");
        Fr e_real = e - p.e_sim[j];
        Fr s_real = p.sigma_real[j] + e_real * p.wit[j].rho;
        BitOrProof& b = out.bits[j];
        b.t0 = p.t0[j];
        b.t1 = p.t1[j];
        if (p.wit[j].bit == 0) {
            b.e0 = e_real;
            b.s0 = s_real;
            b.s1 = p.s_sim[j];
        } else {
            b.e0 = p.e_sim[j];
            b.s0 = p.s_sim[j];
            b.s1 = s_real;
        }
    }
    Fr e = fr_challenge(t, label + ".sum");
    out.sum_t = p.sum_t;
    out.sum_s = p.sum_sigma + e * p.omega;
    return out;
}

void absorb_value_first_move(Transcript& t, const std::string& label, const ValueProver& p) {
    for (const auto& c : p.commits) absorb_g1(t, label + ".c", c);
    for (size_t j = 0; j < p.t0.size(); j++) {
        absorb_g1(t, label + ".t0", p.t0[j]);
        absorb_g1(t, label + ".t1", p.t1[j]);
    }
    absorb_g1(t, label + ".st", p.sum_t);
}

RangeProof range_prove_impl(const SymParams& sp, Transcript& t, std::span<const uint64_t> values,
                            std::span<const Fr> rand, std::span<const G1Affine> commits,
                            uint64_t M, Drbg& rng, bool check) {
    if (values.size() != rand.size() || values.size() != commits.size())
        throw Error("range: input size mismatch");
    uint32_t k = range_bits(M);
    RangeProof proof;
    proof.kbits = k;

    t.absorb_u64("range.M", M);
    t.absorb_u64("range.n", values.size());
    for (const auto& c : commits) absorb_g1(t, "range.value", c);

    std::vector<ValueProver> low, high;
    low.reserve(values.size());
    high.reserve(values.size());
    for (size_t i = 0; i < values.size(); i++) {
        if (check && values[i] > M) throw Error("range: value out of bounds, no proof exists");
        uint64_t lo = values[i] & ((uint64_t(1) << k) - 1);
        uint64_t hi = (M - values[i]) & ((uint64_t(1) << k) - 1);
        low.push_back(value_first_move(sp, lo, rand[i], k, rng));
        // commitment to M - v is g^M / c, randomness -r
        high.push_back(value_first_move(sp, hi, rand[i].neg(), k, rng));
        absorb_value_first_move(t, "range.low", low.back());
        absorb_value_first_move(t, "range.high", high.back());
    }
    for (size_t i = 0; i < values.size(); i++) {
        proof.low.push_back(value_finish(low[i], t, "range.low"));
        proof.high.push_back(value_finish(high[i], t, "range.high"));
    }
    return proof;
}

}  // namespace

RangeProof range_prove(const SymParams& sp, Transcript& t, std::span<const uint64_t> values,
                       std::span<const Fr> rand, std::span<const G1Affine> commits, uint64_t M,
                       Drbg& rng) {
    return range_prove_impl(sp, t, values, rand, commits, M, rng, true);
}

RangeProof range_prove_unchecked(const SymParams& sp, Transcript& t,
                                 std::span<const uint64_t> values, std::span<const Fr> rand,
                                 std::span<const G1Affine> commits, uint64_t M, Drbg& rng) {
    return range_prove_impl(sp, t, values, rand, commits, M, rng, false);
}

bool range_verify(const SymParams& sp, Transcript& t, std::span<const G1Affine> commits,
                  uint64_t M, const RangeProof& proof) {
    uint32_t k = range_bits(M);
    if (proof.kbits != k) return false;
    if (proof.low.size() != commits.size() || proof.high.size() != commits.size()) return false;
    size_t n = commits.size();
    for (size_t i = 0; i < n; i++) {
        if (proof.low[i].bit_commits.size() != k || proof.low[i].bits.size() != k) return false;
        if (proof.high[i].bit_commits.size() != k || proof.high[i].bits.size() != k) return false;
    }

    t.absorb_u64("range.M", M);
    t.absorb_u64("range.n", n);
    for (const auto& c : commits) absorb_g1(t, "range.value", c);
    for (size_t i = 0; i < n; i++) {
        for (const auto* vp : {&proof.low[i], &proof.high[i]}) {
            const std::string label = vp == &proof.low[i] ? "range.low" : "range.high";
            for (const auto& c : vp->bit_commits) absorb_g1(t, label + ".c", c);
            for (const auto& b : vp->bits) {
                absorb_g1(t, label + ".t0", b.t0);
                absorb_g1(t, label + ".t1", b.t1);
            }
            absorb_g1(t, label + ".st", vp->sum_t);
        }
    }

    // Gather every verification equation into one random-linear-combination
    // MSM; batching coefficients derive from the advanced transcript state.
    Transcript rho_t = t;
    rho_t.absorb("range.batch", Bytes{});
    std::vector<std::pair<G1Affine, Fr>> terms;
    terms.reserve(n * k * 8);
    Fr g_coeff = Fr::zero(), h_coeff = Fr::zero();
    auto add_term = [&](const G1Affine& p, const Fr& s) { terms.push_back({p, s}); };

    auto do_value = [&](const ValueRangeProof& vp, const G1Affine& c_value, bool is_high,
                        const std::string& label) -> bool {
        // challenges replay in prover order (interleaved per value below)
        for (uint32_t j = 0; j < k; j++) {
            Fr e = fr_challenge(t, label + ".bit");
            const BitOrProof& b = vp.bits[j];
            Fr e1 = e - b.e0;
            const G1Affine& c = vp.bit_commits[j];
            // branch 0: h^{s0} = t0 * c^{e0}
            Fr r0 = fr_challenge(rho_t, "rho");
            h_coeff += r0 * b.s0;
            add_term(b.t0, r0.neg());
            add_term(c, (r0 * b.e0).neg());
            // branch 1: h^{s1} = t1 * (c/g)^{e1}
            Fr r1 = fr_challenge(rho_t, "rho");
            h_coeff += r1 * b.s1;
            add_term(b.t1, r1.neg());
            add_term(c, (r1 * e1).neg());
            g_coeff += r1 * e1;
        }
        // weighted sum: h^{sum_s} = sum_t * X^e, X = prod c_j^{2^j} / c_target
        // where c_target = c_value (low) or g^M / c_value (high)
        Fr e = fr_challenge(t, label + ".sum");
        Fr r = fr_challenge(rho_t, "rho");
        h_coeff += r * vp.sum_s;
        add_term(vp.sum_t, r.neg());
        Fr pow2 = Fr::one();
        for (uint32_t j = 0; j < k; j++) {
            add_term(vp.bit_commits[j], (r * e * pow2).neg());
            pow2 = pow2 + pow2;
        }
        if (!is_high) {
            add_term(c_value, r * e);
        } else {
            // X includes (g^M / c_value)^{-1} = c_value * g^{-M}
            add_term(c_value, (r * e).neg());
            g_coeff += r * e * Fr::from_u64(M);
        }
        return true;
    };

    for (size_t i = 0; i < n; i++) {
        if (!do_value(proof.low[i], commits[i], false, "range.low")) return false;
        if (!do_value(proof.high[i], commits[i], true, "range.high")) return false;
    }

    add_term(sp.g(), g_coeff);
    add_term(sp.h, h_coeff);
    std::vector<G1Affine> bases;
    std::vector<Fr> scalars;
    bases.reserve(terms.size());
    scalars.reserve(terms.size());
    for (auto& [p, s] : terms) {
        if (p.infinity || s.is_zero()) continue;
        bases.push_back(p);
        scalars.push_back(s);
    }
    return msm(bases, scalars).is_identity();
}

}  // namespace zkmc
