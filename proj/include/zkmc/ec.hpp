#pragma once

#include "zkmc/tower.hpp"

namespace zkmc {

// Short Weierstrass y^2 = x^3 + b with a = 0 (both BLS12-381 groups).
template <class F>
struct AffinePoint {
    F x{}, y{};
    bool infinity = true;

    static AffinePoint identity() { return {}; }
    bool operator==(const AffinePoint& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
    AffinePoint neg() const {
        if (infinity) return *this;
        return {x, y.neg(), false};
    }
};

template <class F>
struct JacPoint {
    F X{}, Y{}, Z{};  // Z == 0 means identity

    static JacPoint identity() {
        JacPoint p;
        p.X = F::one();
        p.Y = F::one();
        p.Z = F::zero();
        return p;
    }
    bool is_identity() const { return Z.is_zero(); }

    static JacPoint from_affine(const AffinePoint<F>& a) {
        if (a.infinity) return identity();
        return {a.x, a.y, F::one()};
    }
};

using G1Affine = AffinePoint<Fp>;
using G2Affine = AffinePoint<Fp2>;
using G1 = JacPoint<Fp>;
using G2 = JacPoint<Fp2>;

namespace curve {

const Fp& g1_b();    // 4
const Fp2& g2_b();   // 4(1+u)
const G1Affine& g1_generator();
const G2Affine& g2_generator();

template <class F> JacPoint<F> dbl(const JacPoint<F>& p);
template <class F> JacPoint<F> add(const JacPoint<F>& p, const JacPoint<F>& q);
template <class F> JacPoint<F> add_mixed(const JacPoint<F>& p, const AffinePoint<F>& q);
template <class F> JacPoint<F> neg(const JacPoint<F>& p);
template <class F> bool eq(const JacPoint<F>& p, const JacPoint<F>& q);
template <class F> AffinePoint<F> to_affine(const JacPoint<F>& p);
template <class F>
void batch_to_affine(std::span<const JacPoint<F>> in, std::span<AffinePoint<F>> out);

// scalar given as canonical little-endian limbs
template <class F>
JacPoint<F> mul_limbs(const JacPoint<F>& p, std::span<const uint64_t> k);

template <class F> JacPoint<F> mul(const JacPoint<F>& p, const Fr& k);

template <class F> bool on_curve(const AffinePoint<F>& p);
template <class F> bool in_subgroup(const AffinePoint<F>& p);

}  // namespace curve

// 48-byte compressed G1, 96-byte compressed G2 (flag bits in the leading byte).
std::array<uint8_t, 48> g1_to_bytes(const G1Affine& p);
std::optional<G1Affine> g1_from_bytes(std::span<const uint8_t> b, bool subgroup_check = true);
std::array<uint8_t, 96> g2_to_bytes(const G2Affine& p);
std::optional<G2Affine> g2_from_bytes(std::span<const uint8_t> b, bool subgroup_check = true);

// Windowed fixed-base multiplication table.
class G1FixedBase {
public:
    G1FixedBase() = default;
    explicit G1FixedBase(const G1Affine& base);
    G1 mul(const Fr& k) const;
    const G1Affine& base() const { return base_; }

private:
    static constexpr size_t WINDOW = 8;
    static constexpr size_t WINDOWS = 32;  // 256 bits
    G1Affine base_;
    std::vector<G1Affine> table_;  // WINDOWS * 256 entries
};

}  // namespace zkmc
