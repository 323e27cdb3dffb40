#include "zkmc/msm.hpp"

#include <omp.h>

#include "zkmc/ops_counter.hpp"

namespace zkmc {

template <class F>
static JacPoint<F> msm_serial_impl(std::span<const AffinePoint<F>> bases,
                                   std::span<const Fr> scalars) {
    if (bases.size() != scalars.size()) throw Error("msm: size mismatch");
    JacPoint<F> acc = JacPoint<F>::identity();
    for (size_t i = 0; i < bases.size(); i++) {
        auto term = curve::mul(JacPoint<F>::from_affine(bases[i]), scalars[i]);
        acc = curve::add(acc, term);
        ops::count_group(255 + 64);
    }
    return acc;
}

template <class F>
static JacPoint<F> msm_pippenger(std::span<const AffinePoint<F>> bases,
                                 std::span<const Fr> scalars) {
    if (bases.size() != scalars.size()) throw Error("msm: size mismatch");
    size_t n = bases.size();
    if (n == 0) return JacPoint<F>::identity();
    if (n < 32) return msm_serial_impl(bases, scalars);

    size_t c = 3;
    while ((size_t(1) << (c + 2)) < n && c < 16) c++;
    size_t windows = (255 + c - 1) / c;
    size_t buckets = (size_t(1) << c) - 1;

    std::vector<std::array<uint64_t, 4>> limbs(n);
    for (size_t i = 0; i < n; i++) limbs[i] = scalars[i].canonical();

    auto digit_of = [&](size_t i, size_t w) -> uint64_t {
        size_t bit = w * c;
        size_t limb = bit / 64, off = bit % 64;
        uint64_t d = limbs[i][limb] >> off;
        if (off + c > 64 && limb + 1 < 4) d |= limbs[i][limb + 1] << (64 - off);
        return d & buckets;
    };

    std::vector<JacPoint<F>> window_sums(windows);
    ops::count_group(windows * (n + 2 * buckets));

#pragma omp parallel for schedule(dynamic, 1)
    for (size_t w = 0; w < windows; w++) {
        std::vector<JacPoint<F>> bucket(buckets, JacPoint<F>::identity());
        for (size_t i = 0; i < n; i++) {
            uint64_t d = digit_of(i, w);
            if (d) bucket[d - 1] = curve::add_mixed(bucket[d - 1], bases[i]);
        }
        JacPoint<F> run = JacPoint<F>::identity();
        JacPoint<F> sum = JacPoint<F>::identity();
        for (size_t b = buckets; b-- > 0;) {
            run = curve::add(run, bucket[b]);
            sum = curve::add(sum, run);
        }
        window_sums[w] = sum;
    }

    JacPoint<F> acc = JacPoint<F>::identity();
    for (size_t w = windows; w-- > 0;) {
        for (size_t k = 0; k < c; k++) acc = curve::dbl(acc);
        acc = curve::add(acc, window_sums[w]);
    }
    return acc;
}

G1 msm(std::span<const G1Affine> bases, std::span<const Fr> scalars) {
    return msm_pippenger<Fp>(bases, scalars);
}
G1 msm_serial(std::span<const G1Affine> bases, std::span<const Fr> scalars) {
    return msm_serial_impl<Fp>(bases, scalars);
}
G2 msm_g2(std::span<const G2Affine> bases, std::span<const Fr> scalars) {
    return msm_pippenger<Fp2>(bases, scalars);
}
G2 msm_g2_serial(std::span<const G2Affine> bases, std::span<const Fr> scalars) {
    return msm_serial_impl<Fp2>(bases, scalars);
}

}  // namespace zkmc
