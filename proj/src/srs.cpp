#include "zkmc/srs.hpp"

namespace zkmc {

KzgSrs KzgSrs::generate(uint32_t t, Drbg& rng, bool insecure) {
    KzgSrs srs;
    srs.degree = t;
    Fr tau = fr_random(rng);
    srs.insecure = insecure;
    if (insecure) srs.tau = tau;

    G1 g = G1::from_affine(curve::g1_generator());
    G2 gp = G2::from_affine(curve::g2_generator());
    std::vector<G1> jac1(t + 1);
    std::vector<G2> jac2(t + 1);
    Fr power = Fr::one();
    for (uint32_t i = 0; i <= t; i++) {
        jac1[i] = curve::mul(g, power);
        jac2[i] = curve::mul(gp, power);
        power = power * tau;
    }
    srs.g1.resize(t + 1);
    srs.g2.resize(t + 1);
    curve::batch_to_affine<Fp>(jac1, srs.g1);
    curve::batch_to_affine<Fp2>(jac2, srs.g2);
    return srs;
}

bool KzgSrs::consistency_check(Drbg& rng, size_t samples) const {
    if (g1.size() != degree + 1 || g2.size() != degree + 1) return false;
    if (g1[0] != curve::g1_generator() || g2[0] != curve::g2_generator()) return false;
    for (size_t k = 0; k < samples; k++) {
        size_t i = 1 + rng.next_u64() % degree;
        // e(g1[i], g2[0]) == e(g1[i-1], g2[1])
        std::pair<G1Affine, G2Affine> pairs[2] = {
            {g1[i], g2[0]},
            {g1[i - 1].neg(), g2[1]},
        };
        if (!multi_pairing(pairs).is_one()) return false;
        std::pair<G1Affine, G2Affine> cross[2] = {
            {g1[0], g2[i]},
            {g1[i].neg(), g2[0]},
        };
        if (!multi_pairing(cross).is_one()) return false;
    }
    return true;
}

Bytes KzgSrs::serialize() const {
    Writer w;
    w.u8(1);
    w.u8(insecure ? 1 : 0);
    w.u32(degree);
    for (const auto& p : g1) w.raw(g1_to_bytes(p));
    for (const auto& p : g2) w.raw(g2_to_bytes(p));
    if (insecure) w.raw(tau->to_bytes());
    return w.take();
}

KzgSrs KzgSrs::deserialize(std::span<const uint8_t> data) {
    Reader r(data);
    if (r.u8() != 1) throw Error("srs: unsupported version");
    KzgSrs srs;
    srs.insecure = r.u8() != 0;
    srs.degree = r.u32();
    srs.g1.resize(srs.degree + 1);
    srs.g2.resize(srs.degree + 1);
    for (auto& p : srs.g1) {
        auto q = g1_from_bytes(r.raw(48));
        if (!q) throw Error("srs: bad G1 element");
        p = *q;
    }
    for (auto& p : srs.g2) {
        auto q = g2_from_bytes(r.raw(96));
        if (!q) throw Error("srs: bad G2 element");
        p = *q;
    }
    if (srs.insecure) {
        auto t = Fr::from_bytes(r.raw(32));
        if (!t) throw Error("srs: bad trapdoor");
        srs.tau = *t;
    }
    if (!r.done()) throw Error("srs: trailing bytes");
    return srs;
}

Bytes32 KzgSrs::digest() const {
    Writer w;
    w.u8(1);
    w.u32(degree);
    for (const auto& p : g1) w.raw(g1_to_bytes(p));
    for (const auto& p : g2) w.raw(g2_to_bytes(p));
    return sha256(w.bytes());
}

}  // namespace zkmc
