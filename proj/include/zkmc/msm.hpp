#pragma once

#include "zkmc/ec.hpp"

namespace zkmc {

// Multi-scalar multiplication sum_i scalars[i] * bases[i].
// msm() is the OpenMP Pippenger kernel; msm_serial() is the reference
// implementation used by tests and tiny inputs.
G1 msm(std::span<const G1Affine> bases, std::span<const Fr> scalars);
G1 msm_serial(std::span<const G1Affine> bases, std::span<const Fr> scalars);

G2 msm_g2(std::span<const G2Affine> bases, std::span<const Fr> scalars);
G2 msm_g2_serial(std::span<const G2Affine> bases, std::span<const Fr> scalars);

}  // namespace zkmc
