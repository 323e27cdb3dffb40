#pragma once

#include "zkmc/fft.hpp"

namespace zkmc {

// Dense polynomial helpers over Fr; coefficient vectors are low-degree-first.
namespace poly {

Fr eval(std::span<const Fr> coeffs, const Fr& x);

// Product tree of (X - root_i); result has degree roots.size().
std::vector<Fr> from_roots(std::span<const Fr> roots);

// Long division: returns quotient, fills remainder. divisor must be monic.
std::vector<Fr> divide(std::span<const Fr> num, std::span<const Fr> monic_divisor,
                       std::vector<Fr>& remainder);

// Lagrange interpolation of values over a radix-2 coset domain (iFFT).
std::vector<Fr> interpolate(const EvalDomain& d, std::vector<Fr> values);

std::vector<Fr> mul_naive(std::span<const Fr> a, std::span<const Fr> b);

}  // namespace poly

}  // namespace zkmc
