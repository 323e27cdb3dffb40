#include "zkmc/pedersen.hpp"

#include <fstream>

namespace zkmc {

Bytes read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open " + path);
    return Bytes(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, std::span<const uint8_t> data) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write " + path);
    f.write(reinterpret_cast<const char*>(data.data()), std::streamsize(data.size()));
}

Fr encode_int(int64_t v) { return Fr::from_i64(v); }

std::optional<int64_t> decode_int(const Fr& x, uint64_t bound) {
    auto limbs = x.canonical();
    if (!limbs[1] && !limbs[2] && !limbs[3] && limbs[0] <= bound) return int64_t(limbs[0]);
    auto neg = x.neg().canonical();
    if (!neg[1] && !neg[2] && !neg[3] && neg[0] <= bound && neg[0] != 0)
        return -int64_t(neg[0]);
    return std::nullopt;
}

Fr fr_challenge(Transcript& t, const std::string& label) {
    auto b = t.challenge_bytes(label);
    return Fr::from_wide_bytes(b);
}

void absorb_g1(Transcript& t, const std::string& label, const G1Affine& p) {
    t.absorb(label, g1_to_bytes(p));
}

void absorb_gt(Transcript& t, const std::string& label, const Gt& v) {
    t.absorb(label, v.to_bytes());
}

void absorb_fr(Transcript& t, const std::string& label, const Fr& x) {
    t.absorb(label, x.to_bytes());
}

Fr fr_random(Drbg& rng) { return Fr::random(rng); }

SymParams SymParams::generate(uint32_t max_flat, Drbg& rng, bool insecure) {
    if (max_flat < 2) throw Error("setup: need at least two powers");
    SymParams sp;
    sp.max_flat = max_flat;
    Fr alpha = fr_random(rng);
    Fr beta = fr_random(rng);
    sp.insecure = insecure;
    if (insecure) {
        sp.alpha = alpha;
        sp.beta = beta;
    }

    G1 g = G1::from_affine(curve::g1_generator());
    G2 gp = G2::from_affine(curve::g2_generator());
    std::vector<G1> jac1(max_flat);
    std::vector<G2> jac2(max_flat);
    Fr power = Fr::one();
    for (uint32_t i = 0; i < max_flat; i++) {
        jac1[i] = curve::mul(g, power);
        jac2[i] = curve::mul(gp, power);
        power = power * alpha;
    }
    sp.g_pow.resize(max_flat);
    sp.gp_pow.resize(max_flat);
    curve::batch_to_affine<Fp>(jac1, sp.g_pow);
    curve::batch_to_affine<Fp2>(jac2, sp.gp_pow);
    sp.h = curve::to_affine(curve::mul(g, beta));
    sp.hp = curve::to_affine(curve::mul(gp, beta));
    sp.finish_init();
    return sp;
}

void SymParams::finish_init() {
    tab_g = G1FixedBase(g_pow[0]);
    tab_h = G1FixedBase(h);
    gt_g = pairing(g_pow[0], gp_pow[0]);
    gt_h = pairing(g_pow[0], hp);
}

Bytes SymParams::serialize() const {
    Writer w;
    w.u8(1);  // version
    w.u8(insecure ? 1 : 0);
    w.u32(max_flat);
    for (const auto& p : g_pow) w.raw(g1_to_bytes(p));
    for (const auto& p : gp_pow) w.raw(g2_to_bytes(p));
    w.raw(g1_to_bytes(h));
    w.raw(g2_to_bytes(hp));
    if (insecure) {
        w.raw(alpha->to_bytes());
        w.raw(beta->to_bytes());
    }
    return w.take();
}

SymParams SymParams::deserialize(std::span<const uint8_t> data) {
    Reader r(data);
    if (r.u8() != 1) throw Error("sp: unsupported version");
    SymParams sp;
    sp.insecure = r.u8() != 0;
    sp.max_flat = r.u32();
    sp.g_pow.resize(sp.max_flat);
    sp.gp_pow.resize(sp.max_flat);
    for (auto& p : sp.g_pow) {
        auto q = g1_from_bytes(r.raw(48));
        if (!q) throw Error("sp: bad G1 element");
        p = *q;
    }
    for (auto& p : sp.gp_pow) {
        auto q = g2_from_bytes(r.raw(96));
        if (!q) throw Error("sp: bad G2 element");
        p = *q;
    }
    auto h = g1_from_bytes(r.raw(48));
    auto hp = g2_from_bytes(r.raw(96));
    if (!h || !hp) throw Error("sp: bad blinding base");
    sp.h = *h;
    sp.hp = *hp;
    if (sp.insecure) {
        auto a = Fr::from_bytes(r.raw(32));
        auto b = Fr::from_bytes(r.raw(32));
        if (!a || !b) throw Error("sp: bad trapdoor");
        sp.alpha = *a;
        sp.beta = *b;
    }
    if (!r.done()) throw Error("sp: trailing bytes");
    sp.finish_init();
    return sp;
}

Bytes32 SymParams::digest() const {
    // digest covers the public material only
    Writer w;
    w.u8(1);
    w.u32(max_flat);
    for (const auto& p : g_pow) w.raw(g1_to_bytes(p));
    for (const auto& p : gp_pow) w.raw(g2_to_bytes(p));
    w.raw(g1_to_bytes(h));
    w.raw(g2_to_bytes(hp));
    return sha256(w.bytes());
}

namespace pedersen {

VectorCommitment commit_scalar(const SymParams& sp, const Fr& v, const Fr& r) {
    G1 acc = sp.tab_g.mul(v);
    acc = curve::add(acc, sp.tab_h.mul(r));
    return {curve::to_affine(acc)};
}

VectorCommitment commit_vector(const SymParams& sp, std::span<const Fr> v, const Fr& r) {
    if (v.size() > sp.g_pow.size()) throw Error("commit: vector exceeds base count");
    G1 acc = msm(std::span(sp.g_pow).subspan(0, v.size()), v);
    acc = curve::add(acc, sp.tab_h.mul(r));
    return {curve::to_affine(acc)};
}

MatrixCommitment commit_matrix(const SymParams& sp, size_t rows, size_t cols,
                               std::span<const Fr> row_major, const Fr& r) {
    if (row_major.size() != rows * cols) throw Error("commit: shape mismatch");
    if (row_major.size() > sp.g_pow.size()) throw Error("commit: matrix exceeds base count");
    G1 body = msm(std::span(sp.g_pow).subspan(0, row_major.size()), row_major);
    G1 blind = sp.tab_g.mul(r);
    std::pair<G1Affine, G2Affine> pairs[2] = {
        {curve::to_affine(body), sp.gp()},
        {curve::to_affine(blind), sp.hp},
    };
    return {multi_pairing(pairs)};
}

bool verify_opening(const SymParams& sp, const VectorCommitment& c, std::span<const Fr> v,
                    const Fr& r) {
    return commit_vector(sp, v, r) == c;
}

bool verify_opening_matrix(const SymParams& sp, const MatrixCommitment& c, size_t rows,
                           size_t cols, std::span<const Fr> row_major, const Fr& r) {
    return commit_matrix(sp, rows, cols, row_major, r) == c;
}

}  // namespace pedersen

}  // namespace zkmc
