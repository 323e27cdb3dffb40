#pragma once

#include "zkmc/fields.hpp"

namespace zkmc {

// Radix-2 evaluation domain over Fr: the coset shift*H where H is the
// subgroup of power-of-two order 2^log_size.
struct EvalDomain {
    uint32_t log_size = 0;
    Fr omega;        // generator of H
    Fr omega_inv;
    Fr shift;        // coset representative (1 for the plain subgroup)
    Fr shift_inv;
    Fr size_inv;

    static EvalDomain radix2(uint32_t log_size, const Fr& shift);
    size_t size() const { return size_t(1) << log_size; }
    Fr element(size_t i) const;  // shift * omega^i

    // Z_D(X) = X^N - shift^N
    Fr vanishing_at(const Fr& x) const;
    Fr vanishing_constant() const;  // shift^N
};

// In-place FFT of coefficients -> evaluations over the plain subgroup.
void fft(std::vector<Fr>& a, const EvalDomain& d);
void ifft(std::vector<Fr>& a, const EvalDomain& d);

// Coset transforms: evaluations on shift*H <-> coefficients.
void coset_fft(std::vector<Fr>& a, const EvalDomain& d);
void coset_ifft(std::vector<Fr>& a, const EvalDomain& d);

// serial reference used by the kernel-comparison tests
void fft_serial(std::vector<Fr>& a, const EvalDomain& d);

}  // namespace zkmc
