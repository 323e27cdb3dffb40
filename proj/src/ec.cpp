#include "zkmc/ec.hpp"

namespace zkmc {

std::optional<Fp2> fp2_sqrt(const Fp2& a) {
    if (a.is_zero()) return Fp2::zero();
    if (a.c1.is_zero()) {
        if (auto r = fp_sqrt(a.c0)) return Fp2::make(*r, Fp::zero());
        auto r = fp_sqrt(a.c0.neg());
        if (!r) return std::nullopt;
        return Fp2::make(Fp::zero(), *r);
    }
    // complex method, u^2 = -1 and p = 3 mod 4
    Fp norm = a.c0.sqr() + a.c1.sqr();
    auto s = fp_sqrt(norm);
    if (!s) return std::nullopt;
    Fp half = Fp::from_u64(2).inv();
    Fp t = (a.c0 + *s) * half;
    if (!fp_is_square(t)) t = (a.c0 - *s) * half;
    auto x0 = fp_sqrt(t);
    if (!x0) return std::nullopt;
    Fp x1 = a.c1 * half * x0->inv();
    Fp2 r = Fp2::make(*x0, x1);
    if (r.sqr() != a) return std::nullopt;
    return r;
}

namespace curve {

const Fp& g1_b() {
    static const Fp b = Fp::from_u64(4);
    return b;
}

const Fp2& g2_b() {
    static const Fp2 b = Fp2::make(Fp::from_u64(4), Fp::from_u64(4));
    return b;
}

static Fp fp_from_hex(const char* hex) {
    auto bytes = from_hex(hex);
    // big-endian hex to little-endian bytes
    Bytes le(bytes->rbegin(), bytes->rend());
    le.resize(48, 0);
    auto f = Fp::from_bytes(le);
    if (!f) throw Error("bad field constant");
    return *f;
}

const G1Affine& g1_generator() {
    static const G1Affine g = [] {
        G1Affine p;
        p.x = fp_from_hex(
            "17f1d3a73197d7942695638c4fa9ac0fc3688c4f9774b905a14e3a3f171bac586c55e83ff97a1aeffb3af00a"
            "db22c6bb");
        p.y = fp_from_hex(
            "08b3f481e3aaa0f1a09e30ed741d8ae4fcf5e095d5d00af600db18cb2c04b3edd03cc744a2888ae40caa2329"
            "46c5e7e1");
        p.infinity = false;
        return p;
    }();
    return g;
}

const G2Affine& g2_generator() {
    static const G2Affine g = [] {
        G2Affine p;
        p.x.c0 = fp_from_hex(
            "024aa2b2f08f0a91260805272dc51051c6e47ad4fa403b02b4510b647ae3d1770bac0326a805bbefd48056c8"
            "c121bdb8");
        p.x.c1 = fp_from_hex(
            "13e02b6052719f607dacd3a088274f65596bd0d09920b61ab5da61bbdc7f5049334cf11213945d57e5ac7d05"
            "5d042b7e");
        p.y.c0 = fp_from_hex(
            "0ce5d527727d6e118cc9cdc6da2e351aadfd9baa8cbdd3a76d429a695160d12c923ac9cc3baca289e1935486"
            "08b82801");
        p.y.c1 = fp_from_hex(
            "0606c4a02ea734cc32acd2b02bc28b99cb3e287e85a763af267492ab572e99ab3f370d275cec1da1aaa9075f"
            "f05f79be");
        p.infinity = false;
        return p;
    }();
    return g;
}

template <class F>
JacPoint<F> dbl(const JacPoint<F>& p) {
    if (p.is_identity()) return p;
    // a = 0 doubling
    F A = p.X.sqr();
    F B = p.Y.sqr();
    F C = B.sqr();
    F t = (p.X + B).sqr() - A - C;
    F D = t + t;  // 2*((X+B)^2 - A - C)
    F E = A + A + A;
    F Fv = E.sqr();
    JacPoint<F> r;
    r.X = Fv - D - D;
    F C8 = C + C;
    C8 = C8 + C8;
    C8 = C8 + C8;
    r.Y = E * (D - r.X) - C8;
    F yz = p.Y * p.Z;
    r.Z = yz + yz;
    return r;
}

template <class F>
JacPoint<F> add(const JacPoint<F>& p, const JacPoint<F>& q) {
    if (p.is_identity()) return q;
    if (q.is_identity()) return p;
    F Z1Z1 = p.Z.sqr();
    F Z2Z2 = q.Z.sqr();
    F U1 = p.X * Z2Z2;
    F U2 = q.X * Z1Z1;
    F S1 = p.Y * q.Z * Z2Z2;
    F S2 = q.Y * p.Z * Z1Z1;
    if (U1 == U2) {
        if (S1 == S2) return dbl(p);
        return JacPoint<F>::identity();
    }
    F H = U2 - U1;
    F HH = H + H;
    F I = HH.sqr();
    F J = H * I;
    F r2 = S2 - S1;
    F r = r2 + r2;
    F V = U1 * I;
    JacPoint<F> out;
    out.X = r.sqr() - J - V - V;
    F SJ = S1 * J;
    out.Y = r * (V - out.X) - SJ - SJ;
    out.Z = ((p.Z + q.Z).sqr() - Z1Z1 - Z2Z2) * H;
    return out;
}

template <class F>
JacPoint<F> add_mixed(const JacPoint<F>& p, const AffinePoint<F>& q) {
    if (q.infinity) return p;
    if (p.is_identity()) return JacPoint<F>::from_affine(q);
    F Z1Z1 = p.Z.sqr();
    F U2 = q.x * Z1Z1;
    F S2 = q.y * p.Z * Z1Z1;
    if (p.X == U2) {
        if (p.Y == S2) return dbl(p);
        return JacPoint<F>::identity();
    }
    F H = U2 - p.X;
    F HH = H.sqr();
    F I = HH + HH;
    I = I + I;
    F J = H * I;
    F r2 = S2 - p.Y;
    F r = r2 + r2;
    F V = p.X * I;
    JacPoint<F> out;
    out.X = r.sqr() - J - V - V;
    F YJ = p.Y * J;
    out.Y = r * (V - out.X) - YJ - YJ;
    out.Z = (p.Z + H).sqr() - Z1Z1 - HH;
    return out;
}

template <class F>
JacPoint<F> neg(const JacPoint<F>& p) {
    JacPoint<F> r = p;
    r.Y = r.Y.neg();
    return r;
}

template <class F>
bool eq(const JacPoint<F>& p, const JacPoint<F>& q) {
    if (p.is_identity() || q.is_identity()) return p.is_identity() == q.is_identity();
    F Z1Z1 = p.Z.sqr();
    F Z2Z2 = q.Z.sqr();
    if (p.X * Z2Z2 != q.X * Z1Z1) return false;
    return p.Y * q.Z * Z2Z2 == q.Y * p.Z * Z1Z1;
}

template <class F>
AffinePoint<F> to_affine(const JacPoint<F>& p) {
    if (p.is_identity()) return AffinePoint<F>::identity();
    F zinv = p.Z.inv();
    F zinv2 = zinv.sqr();
    AffinePoint<F> r;
    r.x = p.X * zinv2;
    r.y = p.Y * zinv2 * zinv;
    r.infinity = false;
    return r;
}

template <class F>
void batch_to_affine(std::span<const JacPoint<F>> in, std::span<AffinePoint<F>> out) {
    size_t n = in.size();
    std::vector<F> prefix(n);
    F acc = F::one();
    for (size_t i = 0; i < n; i++) {
        prefix[i] = acc;
        if (!in[i].is_identity()) acc = acc * in[i].Z;
    }
    F inv = acc.inv();
    for (size_t i = n; i-- > 0;) {
        if (in[i].is_identity()) {
            out[i] = AffinePoint<F>::identity();
            continue;
        }
        F zinv = inv * prefix[i];
        inv = inv * in[i].Z;
        F zinv2 = zinv.sqr();
        out[i].x = in[i].X * zinv2;
        out[i].y = in[i].Y * zinv2 * zinv;
        out[i].infinity = false;
    }
}

template <class F>
JacPoint<F> mul_limbs(const JacPoint<F>& p, std::span<const uint64_t> k) {
    // 4-bit window
    std::array<JacPoint<F>, 16> table;
    table[0] = JacPoint<F>::identity();
    table[1] = p;
    for (size_t i = 2; i < 16; i++) table[i] = add(table[i - 1], p);
    JacPoint<F> acc = JacPoint<F>::identity();
    bool started = false;
    for (size_t i = k.size(); i-- > 0;) {
        for (int nib = 15; nib >= 0; nib--) {
            uint64_t digit = (k[i] >> (4 * nib)) & 0xf;
            if (started) {
                acc = dbl(acc);
                acc = dbl(acc);
                acc = dbl(acc);
                acc = dbl(acc);
            }
            if (digit) {
                acc = add(acc, table[digit]);
                started = true;
            }
        }
    }
    return acc;
}

template <class F>
JacPoint<F> mul(const JacPoint<F>& p, const Fr& k) {
    auto limbs = k.canonical();
    return mul_limbs(p, std::span<const uint64_t>(limbs));
}

template <class F>
static const F& curve_b();
template <>
const Fp& curve_b<Fp>() { return g1_b(); }
template <>
const Fp2& curve_b<Fp2>() { return g2_b(); }

template <class F>
bool on_curve(const AffinePoint<F>& p) {
    if (p.infinity) return true;
    return p.y.sqr() == p.x.sqr() * p.x + curve_b<F>();
}

template <class F>
bool in_subgroup(const AffinePoint<F>& p) {
    if (p.infinity) return true;
    if (!on_curve(p)) return false;
    auto r = FrParams::MOD;
    return mul_limbs(JacPoint<F>::from_affine(p), std::span<const uint64_t>(r)).is_identity();
}

template G1 dbl<Fp>(const G1&);
template G2 dbl<Fp2>(const G2&);
template G1 add<Fp>(const G1&, const G1&);
template G2 add<Fp2>(const G2&, const G2&);
template G1 add_mixed<Fp>(const G1&, const G1Affine&);
template G2 add_mixed<Fp2>(const G2&, const G2Affine&);
template G1 neg<Fp>(const G1&);
template G2 neg<Fp2>(const G2&);
template bool eq<Fp>(const G1&, const G1&);
template bool eq<Fp2>(const G2&, const G2&);
template G1Affine to_affine<Fp>(const G1&);
template G2Affine to_affine<Fp2>(const G2&);
template void batch_to_affine<Fp>(std::span<const G1>, std::span<G1Affine>);
template void batch_to_affine<Fp2>(std::span<const G2>, std::span<G2Affine>);
template G1 mul_limbs<Fp>(const G1&, std::span<const uint64_t>);
template G2 mul_limbs<Fp2>(const G2&, std::span<const uint64_t>);
template G1 mul<Fp>(const G1&, const Fr&);
template G2 mul<Fp2>(const G2&, const Fr&);
template bool on_curve<Fp>(const G1Affine&);
template bool on_curve<Fp2>(const G2Affine&);
template bool in_subgroup<Fp>(const G1Affine&);
template bool in_subgroup<Fp2>(const G2Affine&);

}  // namespace curve

static void fp_to_be(const Fp& f, uint8_t* out) {
    auto le = f.to_bytes();
    for (size_t i = 0; i < 48; i++) out[i] = le[47 - i];
}

static std::optional<Fp> fp_from_be(std::span<const uint8_t> b) {
    Bytes le(b.rbegin(), b.rend());
    return Fp::from_bytes(le);
}

std::array<uint8_t, 48> g1_to_bytes(const G1Affine& p) {
    std::array<uint8_t, 48> out{};
    if (p.infinity) {
        out[0] = 0xc0;
        return out;
    }
    fp_to_be(p.x, out.data());
    out[0] |= 0x80;
    if (p.y.canonical_gt(p.y.neg())) out[0] |= 0x20;
    return out;
}

std::optional<G1Affine> g1_from_bytes(std::span<const uint8_t> b, bool subgroup_check) {
    if (b.size() != 48 || !(b[0] & 0x80)) return std::nullopt;
    uint8_t flags = b[0] & 0xe0;
    Bytes xb(b.begin(), b.end());
    xb[0] &= 0x1f;
    if (flags & 0x40) {
        for (auto c : xb)
            if (c) return std::nullopt;
        return G1Affine::identity();
    }
    auto x = fp_from_be(xb);
    if (!x) return std::nullopt;
    auto y = fp_sqrt(x->sqr() * *x + curve::g1_b());
    if (!y) return std::nullopt;
    bool want_big = flags & 0x20;
    if (y->canonical_gt(y->neg()) != want_big) *y = y->neg();
    G1Affine p{*x, *y, false};
    if (subgroup_check && !curve::in_subgroup(p)) return std::nullopt;
    return p;
}

std::array<uint8_t, 96> g2_to_bytes(const G2Affine& p) {
    std::array<uint8_t, 96> out{};
    if (p.infinity) {
        out[0] = 0xc0;
        return out;
    }
    fp_to_be(p.x.c1, out.data());
    fp_to_be(p.x.c0, out.data() + 48);
    out[0] |= 0x80;
    bool big = p.y.c1.canonical_gt(p.y.c1.neg()) ||
               (p.y.c1 == p.y.c1.neg() && p.y.c0.canonical_gt(p.y.c0.neg()));
    if (big) out[0] |= 0x20;
    return out;
}

std::optional<G2Affine> g2_from_bytes(std::span<const uint8_t> b, bool subgroup_check) {
    if (b.size() != 96 || !(b[0] & 0x80)) return std::nullopt;
    uint8_t flags = b[0] & 0xe0;
    Bytes xb(b.begin(), b.end());
    xb[0] &= 0x1f;
    if (flags & 0x40) {
        for (auto c : xb)
            if (c) return std::nullopt;
        return G2Affine::identity();
    }
    auto x1 = fp_from_be(std::span(xb).subspan(0, 48));
    auto x0 = fp_from_be(std::span(xb).subspan(48, 48));
    if (!x0 || !x1) return std::nullopt;
    Fp2 x = Fp2::make(*x0, *x1);
    auto y = fp2_sqrt(x.sqr() * x + curve::g2_b());
    if (!y) return std::nullopt;
    bool big = y->c1.canonical_gt(y->c1.neg()) ||
               (y->c1 == y->c1.neg() && y->c0.canonical_gt(y->c0.neg()));
    bool want_big = flags & 0x20;
    if (big != want_big) *y = y->neg();
    G2Affine p{x, *y, false};
    if (subgroup_check && !curve::in_subgroup(p)) return std::nullopt;
    return p;
}

G1FixedBase::G1FixedBase(const G1Affine& base) : base_(base) {
    table_.resize(WINDOWS * 256);
    G1 row_base = G1::from_affine(base);
    std::vector<G1> jac(256);
    for (size_t w = 0; w < WINDOWS; w++) {
        jac[0] = G1::identity();
        for (size_t i = 1; i < 256; i++) jac[i] = curve::add(jac[i - 1], row_base);
        curve::batch_to_affine<Fp>(jac, std::span(table_).subspan(w * 256, 256));
        if (w + 1 < WINDOWS) {
            row_base = jac[128];
            row_base = curve::dbl(row_base);  // 256 * previous row base
        }
    }
}

G1 G1FixedBase::mul(const Fr& k) const {
    auto limbs = k.canonical();
    G1 acc = G1::identity();
    for (size_t w = 0; w < WINDOWS; w++) {
        uint8_t byte = uint8_t(limbs[w / 8] >> (8 * (w % 8)));
        if (byte) acc = curve::add_mixed(acc, table_[w * 256 + byte]);
    }
    return acc;
}

}  // namespace zkmc
