#include "zkmc/fields.hpp"

namespace zkmc {

std::optional<Fp> fp_sqrt(const Fp& a) {
    if (a.is_zero()) return Fp::zero();
    // (p+1)/4
    static const std::array<uint64_t, 6> e = [] {
        std::array<uint64_t, 6> m = FpParams::MOD;
        // p+1 (p odd, no carry out)
        m[0] += 1;
        // shift right by 2
        for (size_t i = 0; i < 6; i++) {
            uint64_t next = (i + 1 < 6) ? m[i + 1] : 0;
            m[i] = (m[i] >> 2) | (next << 62);
        }
        return m;
    }();
    Fp r = a.pow(e);
    if (r.sqr() != a) return std::nullopt;
    return r;
}

bool fp_is_square(const Fp& a) {
    if (a.is_zero()) return true;
    static const std::array<uint64_t, 6> e = [] {
        std::array<uint64_t, 6> m = FpParams::MOD;
        m[0] -= 1;
        for (size_t i = 0; i < 6; i++) {
            uint64_t next = (i + 1 < 6) ? m[i + 1] : 0;
            m[i] = (m[i] >> 1) | (next << 63);
        }
        return m;
    }();
    return a.pow(e) == Fp::one();
}

Fr fr_multiplicative_generator() { return Fr::from_u64(7); }

Fr fr_root_of_unity(uint32_t log_size) {
    if (log_size > FR_TWO_ADICITY) throw Error("domain too large for field 2-adicity");
    // g^((r-1)/2^32), then square down to the requested order
    static const Fr root32 = [] {
        std::array<uint64_t, 4> e = FrParams::MOD;
        e[0] -= 1;
        for (int s = 0; s < 32; s++) {
            for (size_t i = 0; i < 4; i++) {
                uint64_t next = (i + 1 < 4) ? e[i + 1] : 0;
                e[i] = (e[i] >> 1) | (next << 63);
            }
        }
        return fr_multiplicative_generator().pow(e);
    }();
    Fr w = root32;
    for (uint32_t i = log_size; i < FR_TWO_ADICITY; i++) w = w.sqr();
    return w;
}

}  // namespace zkmc
