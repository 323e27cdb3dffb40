#include "zkmc/fft.hpp"

#include <omp.h>

#include "zkmc/ops_counter.hpp"

namespace zkmc {

EvalDomain EvalDomain::radix2(uint32_t log_size, const Fr& shift) {
    EvalDomain d;
    d.log_size = log_size;
    d.omega = fr_root_of_unity(log_size);
    d.omega_inv = d.omega.inv();
    d.shift = shift;
    d.shift_inv = shift.inv();
    d.size_inv = Fr::from_u64(uint64_t(1) << log_size).inv();
    return d;
}

Fr EvalDomain::element(size_t i) const {
    Fr w = Fr::one();
    Fr base = omega;
    for (size_t k = i; k; k >>= 1) {
        if (k & 1) w = w * base;
        base = base.sqr();
    }
    return shift * w;
}

Fr EvalDomain::vanishing_constant() const {
    Fr s = shift;
    for (uint32_t i = 0; i < log_size; i++) s = s.sqr();
    return s;
}

Fr EvalDomain::vanishing_at(const Fr& x) const {
    Fr xn = x;
    for (uint32_t i = 0; i < log_size; i++) xn = xn.sqr();
    return xn - vanishing_constant();
}

static void fft_core(std::vector<Fr>& a, const Fr& root, uint32_t log_n) {
    size_t n = size_t(1) << log_n;
    if (a.size() != n) throw Error("fft: size mismatch");
    ops::count_field(uint64_t(n) * log_n);

    // bit reversal
    for (size_t i = 0, j = 0; i < n; i++) {
        if (i < j) std::swap(a[i], a[j]);
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j |= bit;
    }

    // precompute stage twiddles once
    std::vector<Fr> roots(log_n);
    Fr w = root;
    for (uint32_t s = log_n; s-- > 0;) {
        roots[s] = w;  // root of order 2^(s+1)
        w = w.sqr();
    }

    for (uint32_t s = 0; s < log_n; s++) {
        size_t m = size_t(1) << (s + 1);
        size_t half = m >> 1;
        Fr wm = roots[s];
        std::vector<Fr> tw(half);
        tw[0] = Fr::one();
        for (size_t k = 1; k < half; k++) tw[k] = tw[k - 1] * wm;
        bool parallel = n >= 4096 && (n / m) >= 4;
#pragma omp parallel for schedule(static) if (parallel)
        for (size_t start = 0; start < n; start += m) {
            for (size_t k = 0; k < half; k++) {
                Fr t = tw[k] * a[start + k + half];
                Fr u = a[start + k];
                a[start + k] = u + t;
                a[start + k + half] = u - t;
            }
        }
    }
}

void fft(std::vector<Fr>& a, const EvalDomain& d) { fft_core(a, d.omega, d.log_size); }

void ifft(std::vector<Fr>& a, const EvalDomain& d) {
    fft_core(a, d.omega_inv, d.log_size);
    for (auto& x : a) x = x * d.size_inv;
}

void coset_fft(std::vector<Fr>& a, const EvalDomain& d) {
    Fr pow = Fr::one();
    for (auto& x : a) {
        x = x * pow;
        pow = pow * d.shift;
    }
    fft(a, d);
}

void coset_ifft(std::vector<Fr>& a, const EvalDomain& d) {
    ifft(a, d);
    Fr pow = Fr::one();
    for (auto& x : a) {
        x = x * pow;
        pow = pow * d.shift_inv;
    }
}

void fft_serial(std::vector<Fr>& a, const EvalDomain& d) {
    size_t n = a.size();
    std::vector<Fr> out(n);
    for (size_t i = 0; i < n; i++) {
        Fr xi = Fr::one();
        Fr x = d.element(i) * d.shift_inv;  // omega^i
        Fr acc = Fr::zero();
        for (size_t j = 0; j < n; j++) {
            acc = acc + a[j] * xi;
            xi = xi * x;
        }
        out[i] = acc;
    }
    a = std::move(out);
}

}  // namespace zkmc
