#include "zkmc/kzg.hpp"

namespace zkmc::kzg {

std::vector<Fr> randomize(std::span<const Fr> coeffs, const EvalDomain& domain, const Fr& r) {
    if (coeffs.size() > domain.size()) throw Error("kzg: degree exceeds domain");
    std::vector<Fr> out(domain.size() + 1, Fr::zero());
    std::copy(coeffs.begin(), coeffs.end(), out.begin());
    // + r * (X^N - shift^N)
    out[domain.size()] += r;
    out[0] -= r * domain.vanishing_constant();
    return out;
}

static G1Affine commit_coeffs(const KzgSrs& srs, std::span<const Fr> coeffs) {
    if (coeffs.size() > srs.g1.size()) throw Error("kzg: polynomial exceeds SRS degree");
    return curve::to_affine(msm(std::span(srs.g1).subspan(0, coeffs.size()), coeffs));
}

Commitment commit_hiding(const KzgSrs& srs, std::span<const Fr> coeffs, const EvalDomain& domain,
                         const Fr& r) {
    auto p = randomize(coeffs, domain, r);
    return {commit_coeffs(srs, p)};
}

VanishingProof prove_vanishing(const KzgSrs& srs, std::span<const Fr> coeffs,
                               const EvalDomain& domain, const Fr& r,
                               std::span<const Fr> evalset) {
    auto p = randomize(coeffs, domain, r);
    auto z = poly::from_roots(evalset);
    std::vector<Fr> rem;
    auto q = poly::divide(p, z, rem);
    for (const Fr& c : rem)
        if (!c.is_zero()) throw Error("kzg: polynomial does not vanish on the evaluation set");
    if (q.empty()) q.push_back(Fr::zero());
    return {commit_coeffs(srs, q)};
}

bool verify_vanishing(const KzgSrs& srs, const Commitment& c, std::span<const Fr> evalset,
                      const VanishingProof& proof) {
    auto z = poly::from_roots(evalset);
    if (z.size() > srs.g2.size()) return false;
    G2 zt = msm_g2(std::span(srs.g2).subspan(0, z.size()), z);  // g'^{Z_E(tau)}
    // e(c, g') == e(pi, g'^{Z_E(tau)})
    std::pair<G1Affine, G2Affine> pairs[2] = {
        {c.c, srs.g2[0]},
        {proof.pi.neg(), curve::to_affine(zt)},
    };
    return multi_pairing(pairs).is_one();
}

}  // namespace zkmc::kzg
