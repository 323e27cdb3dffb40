#pragma once

#include "zkmc/common.hpp"
#include "zkmc/hash.hpp"

namespace zkmc {

using u128 = unsigned __int128;

namespace detail {

template <size_t N>
constexpr bool limbs_gte(const std::array<uint64_t, N>& a, const std::array<uint64_t, N>& b) {
    for (size_t i = N; i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return true;
}

template <size_t N>
constexpr uint64_t limbs_add(std::array<uint64_t, N>& a, const std::array<uint64_t, N>& b) {
    uint64_t carry = 0;
    for (size_t i = 0; i < N; i++) {
        u128 s = u128(a[i]) + b[i] + carry;
        a[i] = uint64_t(s);
        carry = uint64_t(s >> 64);
    }
    return carry;
}

template <size_t N>
constexpr uint64_t limbs_sub(std::array<uint64_t, N>& a, const std::array<uint64_t, N>& b) {
    uint64_t borrow = 0;
    for (size_t i = 0; i < N; i++) {
        u128 s = u128(a[i]) - b[i] - borrow;
        a[i] = uint64_t(s);
        borrow = uint64_t(s >> 64) ? 1 : 0;
    }
    return borrow;
}

// -mod^{-1} mod 2^64 by Newton iteration.
constexpr uint64_t mont_inv64(uint64_t m) {
    uint64_t x = 1;
    for (int i = 0; i < 6; i++) x *= 2 - m * x;
    return ~x + 1;  // -x
}

// 2^(64N) mod m
template <size_t N>
constexpr std::array<uint64_t, N> compute_r(const std::array<uint64_t, N>& mod) {
    std::array<uint64_t, N> r{};
    // start from mod-reduced 1, double 64N times
    r[0] = 1;
    for (size_t i = 0; i < 64 * N; i++) {
        uint64_t carry = 0;
        for (size_t j = 0; j < N; j++) {
            uint64_t hi = r[j] >> 63;
            r[j] = (r[j] << 1) | carry;
            carry = hi;
        }
        if (carry || limbs_gte(r, mod)) limbs_sub(r, mod);
    }
    return r;
}

template <size_t N>
constexpr std::array<uint64_t, N> compute_r2(const std::array<uint64_t, N>& mod) {
    auto r = compute_r(mod);
    for (size_t i = 0; i < 64 * N; i++) {
        uint64_t carry = 0;
        for (size_t j = 0; j < N; j++) {
            uint64_t hi = r[j] >> 63;
            r[j] = (r[j] << 1) | carry;
            carry = hi;
        }
        if (carry || limbs_gte(r, mod)) limbs_sub(r, mod);
    }
    return r;
}

}  // namespace detail

// Prime field element in Montgomery form. Params supplies the modulus limbs
// (little-endian 64-bit) and a domain tag used for serialization width.
template <class Params>
struct Mont {
    static constexpr size_t N = Params::N;
    static constexpr std::array<uint64_t, N> MOD = Params::MOD;
    static constexpr uint64_t INV = detail::mont_inv64(Params::MOD[0]);
    static constexpr std::array<uint64_t, N> R = detail::compute_r<N>(Params::MOD);
    static constexpr std::array<uint64_t, N> R2 = detail::compute_r2<N>(Params::MOD);
    static constexpr size_t BYTES = N * 8;

    std::array<uint64_t, N> v{};  // Montgomery residue

    constexpr Mont() = default;

    static constexpr Mont zero() { return Mont{}; }
    static constexpr Mont one() {
        Mont r;
        r.v = R;
        return r;
    }

    static Mont from_u64(uint64_t x) {
        Mont raw;
        raw.v[0] = x;
        return mul(raw, r2());
    }

    static Mont from_i64(int64_t x) {
        Mont f = from_u64(uint64_t(x < 0 ? -x : x));
        return x < 0 ? f.neg() : f;
    }

    bool is_zero() const {
        for (auto x : v)
            if (x) return false;
        return true;
    }

    bool operator==(const Mont& o) const { return v == o.v; }
    bool operator!=(const Mont& o) const { return v != o.v; }

    static Mont add(const Mont& a, const Mont& b) {
        Mont r = a;
        uint64_t carry = detail::limbs_add(r.v, b.v);
        if (carry || detail::limbs_gte(r.v, MOD)) detail::limbs_sub(r.v, MOD);
        return r;
    }

    static Mont sub(const Mont& a, const Mont& b) {
        Mont r = a;
        if (detail::limbs_sub(r.v, b.v)) detail::limbs_add(r.v, MOD);
        return r;
    }

    Mont neg() const {
        if (is_zero()) return *this;
        Mont r;
        r.v = MOD;
        detail::limbs_sub(r.v, v);
        return r;
    }

    Mont dbl() const { return add(*this, *this); }

    // CIOS Montgomery multiplication.
    static Mont mul(const Mont& a, const Mont& b) {
        std::array<uint64_t, N + 1> t{};
        for (size_t i = 0; i < N; i++) {
            uint64_t carry = 0;
            for (size_t j = 0; j < N; j++) {
                u128 s = u128(a.v[j]) * b.v[i] + t[j] + carry;
                t[j] = uint64_t(s);
                carry = uint64_t(s >> 64);
            }
            u128 s = u128(t[N]) + carry;
            t[N] = uint64_t(s);
            uint64_t t_extra = uint64_t(s >> 64);  // 0 for moduli below 2^(64N-1)

            uint64_t m = t[0] * INV;
            u128 s2 = u128(m) * MOD[0] + t[0];
            carry = uint64_t(s2 >> 64);
            for (size_t j = 1; j < N; j++) {
                s2 = u128(m) * MOD[j] + t[j] + carry;
                t[j - 1] = uint64_t(s2);
                carry = uint64_t(s2 >> 64);
            }
            s2 = u128(t[N]) + carry;
            t[N - 1] = uint64_t(s2);
            t[N] = t_extra + uint64_t(s2 >> 64);
        }
        Mont r;
        std::copy(t.begin(), t.begin() + N, r.v.begin());
        if (t[N] || detail::limbs_gte(r.v, MOD)) detail::limbs_sub(r.v, MOD);
        return r;
    }

    Mont sqr() const { return mul(*this, *this); }

    Mont operator+(const Mont& o) const { return add(*this, o); }
    Mont operator-(const Mont& o) const { return sub(*this, o); }
    Mont operator*(const Mont& o) const { return mul(*this, o); }
    Mont& operator+=(const Mont& o) { return *this = add(*this, o); }
    Mont& operator-=(const Mont& o) { return *this = sub(*this, o); }
    Mont& operator*=(const Mont& o) { return *this = mul(*this, o); }

    // Exponent given as little-endian limbs (not Montgomery).
    Mont pow(std::span<const uint64_t> exp) const {
        Mont base = *this, acc = one();
        for (size_t i = 0; i < exp.size(); i++) {
            uint64_t w = exp[i];
            for (int b = 0; b < 64; b++) {
                if (w & 1) acc = mul(acc, base);
                w >>= 1;
                if (!w && i + 1 == exp.size()) break;
                base = base.sqr();
            }
        }
        return acc;
    }

    Mont inv() const {
        if (is_zero()) throw Error("field inverse of zero");
        // p - 2
        std::array<uint64_t, N> e = MOD;
        e[0] -= 2;  // MOD[0] >= 2 for our primes
        return pow(e);
    }

    // canonical little-endian bytes
    std::array<uint8_t, BYTES> to_bytes() const {
        auto c = canonical();
        std::array<uint8_t, BYTES> out{};
        for (size_t i = 0; i < N; i++)
            for (int j = 0; j < 8; j++) out[i * 8 + j] = uint8_t(c[i] >> (8 * j));
        return out;
    }

    std::array<uint64_t, N> canonical() const {
        // Montgomery reduce by multiplying with 1
        Mont onev;
        onev.v[0] = 1;
        Mont r = mul(*this, onev);  // uses raw 1 (= R^{-1} factor)
        return r.v;
    }

    static std::optional<Mont> from_bytes(std::span<const uint8_t> b) {
        if (b.size() != BYTES) return std::nullopt;
        Mont raw;
        for (size_t i = 0; i < N; i++)
            for (int j = 0; j < 8; j++) raw.v[i] |= uint64_t(b[i * 8 + j]) << (8 * j);
        if (detail::limbs_gte(raw.v, MOD)) return std::nullopt;
        return mul(raw, r2());
    }

    // uniform-ish element from 64 bytes (eager modular reduction)
    static Mont from_wide_bytes(std::span<const uint8_t> b) {
        Mont acc = zero();
        Mont c256 = from_u64(256);
        for (uint8_t byte : b) {
            acc = mul(acc, c256);
            acc = add(acc, from_u64(byte));
        }
        return acc;
    }

    static Mont random(Drbg& rng) {
        std::array<uint8_t, 64> b{};
        rng.fill(b);
        return from_wide_bytes(b);
    }

    bool is_odd() const { return canonical()[0] & 1; }

    // lexicographic comparison of canonical values
    bool canonical_gt(const Mont& o) const {
        auto a = canonical(), b = o.canonical();
        for (size_t i = N; i-- > 0;)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }

private:
    static const Mont& r2() {
        static const Mont r = [] {
            Mont m;
            m.v = R2;
            return m;
        }();
        return r;
    }
};

struct FpParams {
    static constexpr size_t N = 6;
    // BLS12-381 base field modulus
    static constexpr std::array<uint64_t, 6> MOD = {
        0xb9feffffffffaaabULL, 0x1eabfffeb153ffffULL, 0x6730d2a0f6b0f624ULL,
        0x64774b84f38512bfULL, 0x4b1ba7b6434bacd7ULL, 0x1a0111ea397fe69aULL,
    };
};

struct FrParams {
    static constexpr size_t N = 4;
    // BLS12-381 scalar field modulus (255 bit, 2-adicity 32)
    static constexpr std::array<uint64_t, 4> MOD = {
        0xffffffff00000001ULL, 0x53bda402fffe5bfeULL, 0x3339d80809a1d805ULL,
        0x73eda753299d7d48ULL,
    };
};

using Fp = Mont<FpParams>;
using Fr = Mont<FrParams>;

// sqrt for p = 3 mod 4; nullopt when not a square
std::optional<Fp> fp_sqrt(const Fp& a);
bool fp_is_square(const Fp& a);

// Fr utilities for FFT domains
Fr fr_root_of_unity(uint32_t log_size);       // primitive 2^log_size root
Fr fr_multiplicative_generator();             // 7
constexpr uint32_t FR_TWO_ADICITY = 32;

// scalar bits as canonical little-endian limbs
inline std::array<uint64_t, 4> fr_to_limbs(const Fr& x) { return x.canonical(); }

}  // namespace zkmc
