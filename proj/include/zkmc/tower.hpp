#pragma once

#include "zkmc/fields.hpp"

namespace zkmc {

// Fp2 = Fp[u]/(u^2 + 1)
struct Fp2 {
    Fp c0, c1;

    static Fp2 zero() { return {Fp::zero(), Fp::zero()}; }
    static Fp2 one() { return {Fp::one(), Fp::zero()}; }
    static Fp2 make(const Fp& a, const Fp& b) { return {a, b}; }

    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    bool operator==(const Fp2& o) const { return c0 == o.c0 && c1 == o.c1; }
    bool operator!=(const Fp2& o) const { return !(*this == o); }

    Fp2 operator+(const Fp2& o) const { return {c0 + o.c0, c1 + o.c1}; }
    Fp2 operator-(const Fp2& o) const { return {c0 - o.c0, c1 - o.c1}; }
    Fp2 neg() const { return {c0.neg(), c1.neg()}; }
    Fp2 dbl() const { return {c0.dbl(), c1.dbl()}; }
    Fp2 conj() const { return {c0, c1.neg()}; }

    Fp2 operator*(const Fp2& o) const {
        Fp aa = c0 * o.c0;
        Fp bb = c1 * o.c1;
        Fp sum = (c0 + c1) * (o.c0 + o.c1);
        return {aa - bb, sum - aa - bb};
    }

    Fp2 sqr() const {
        Fp s = (c0 + c1) * (c0 - c1);
        Fp t = c0 * c1;
        return {s, t.dbl()};
    }

    Fp2 mul_fp(const Fp& s) const { return {c0 * s, c1 * s}; }

    // multiply by the sextic non-residue xi = 1 + u
    Fp2 mul_xi() const { return {c0 - c1, c0 + c1}; }

    Fp2 inv() const {
        Fp norm = c0.sqr() + c1.sqr();
        Fp ninv = norm.inv();
        return {c0 * ninv, c1.neg() * ninv};
    }

    Fp2& operator+=(const Fp2& o) { return *this = *this + o; }
    Fp2& operator-=(const Fp2& o) { return *this = *this - o; }
    Fp2& operator*=(const Fp2& o) { return *this = *this * o; }

    Fp2 pow(std::span<const uint64_t> exp) const {
        Fp2 base = *this, acc = one();
        for (size_t i = 0; i < exp.size(); i++) {
            uint64_t w = exp[i];
            for (int b = 0; b < 64; b++) {
                if (w & 1) acc = acc * base;
                w >>= 1;
                if (!w && i + 1 == exp.size()) break;
                base = base.sqr();
            }
        }
        return acc;
    }
};

std::optional<Fp2> fp2_sqrt(const Fp2& a);

// Fp6 = Fp2[v]/(v^3 - xi)
struct Fp6 {
    Fp2 c0, c1, c2;

    static Fp6 zero() { return {Fp2::zero(), Fp2::zero(), Fp2::zero()}; }
    static Fp6 one() { return {Fp2::one(), Fp2::zero(), Fp2::zero()}; }

    bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
    bool operator==(const Fp6& o) const { return c0 == o.c0 && c1 == o.c1 && c2 == o.c2; }
    bool operator!=(const Fp6& o) const { return !(*this == o); }

    Fp6 operator+(const Fp6& o) const { return {c0 + o.c0, c1 + o.c1, c2 + o.c2}; }
    Fp6 operator-(const Fp6& o) const { return {c0 - o.c0, c1 - o.c1, c2 - o.c2}; }
    Fp6 neg() const { return {c0.neg(), c1.neg(), c2.neg()}; }

    Fp6 operator*(const Fp6& o) const {
        Fp2 m0 = c0 * o.c0;
        Fp2 m1 = c1 * o.c1;
        Fp2 m2 = c2 * o.c2;
        Fp2 r0 = m0 + ((c1 + c2) * (o.c1 + o.c2) - m1 - m2).mul_xi();
        Fp2 r1 = (c0 + c1) * (o.c0 + o.c1) - m0 - m1 + m2.mul_xi();
        Fp2 r2 = (c0 + c2) * (o.c0 + o.c2) - m0 - m2 + m1;
        return {r0, r1, r2};
    }

    Fp6 sqr() const { return *this * *this; }

    // multiply by v
    Fp6 mul_v() const { return {c2.mul_xi(), c0, c1}; }

    Fp6 mul_fp2(const Fp2& s) const { return {c0 * s, c1 * s, c2 * s}; }

    Fp6 inv() const {
        Fp2 a = c0.sqr() - (c1 * c2).mul_xi();
        Fp2 b = c2.sqr().mul_xi() - c0 * c1;
        Fp2 c = c1.sqr() - c0 * c2;
        Fp2 t = (c0 * a) + ((c2 * b) + (c1 * c)).mul_xi();
        Fp2 tinv = t.inv();
        return {a * tinv, b * tinv, c * tinv};
    }
};

// Fp12 = Fp6[w]/(w^2 - v)
struct Fp12 {
    Fp6 c0, c1;

    static Fp12 zero() { return {Fp6::zero(), Fp6::zero()}; }
    static Fp12 one() { return {Fp6::one(), Fp6::zero()}; }

    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    bool is_one() const { return *this == one(); }
    bool operator==(const Fp12& o) const { return c0 == o.c0 && c1 == o.c1; }
    bool operator!=(const Fp12& o) const { return !(*this == o); }

    Fp12 operator*(const Fp12& o) const {
        Fp6 m0 = c0 * o.c0;
        Fp6 m1 = c1 * o.c1;
        Fp6 r0 = m0 + m1.mul_v();
        Fp6 r1 = (c0 + c1) * (o.c0 + o.c1) - m0 - m1;
        return {r0, r1};
    }

    Fp12 sqr() const {
        Fp6 m = c0 * c1;
        Fp6 r0 = (c0 + c1) * (c0 + c1.mul_v()) - m - m.mul_v();
        Fp6 r1 = m + m;
        return {r0, r1};
    }

    // x -> x^(p^6)
    Fp12 conj() const { return {c0, c1.neg()}; }

    Fp12 inv() const {
        Fp6 t = (c0.sqr() - c1.sqr().mul_v()).inv();
        return {c0 * t, (c1 * t).neg()};
    }

    Fp12 pow(std::span<const uint64_t> exp) const {
        Fp12 base = *this, acc = one();
        for (size_t i = 0; i < exp.size(); i++) {
            uint64_t w = exp[i];
            for (int b = 0; b < 64; b++) {
                if (w & 1) acc = acc * base;
                w >>= 1;
                if (!w && i + 1 == exp.size()) break;
                base = base.sqr();
            }
        }
        return acc;
    }

    Fp12 frobenius() const;   // x -> x^p
    Fp12 frobenius2() const;  // x -> x^(p^2)

    std::array<uint8_t, 576> to_bytes() const;
    static std::optional<Fp12> from_bytes(std::span<const uint8_t> b);
};

}  // namespace zkmc
