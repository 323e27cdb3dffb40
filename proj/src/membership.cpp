#include "zkmc/explicit_cert.hpp"
#include "zkmc/poly.hpp"

namespace zkmc {

MembershipPolys build_membership_polys(const ExplicitSystem& sys, const Embedding& emb,
                                       Drbg& rng) {
    if (emb.num_states != sys.num_states) throw Error("membership: embedding mismatch");
    MembershipPolys out;

    std::vector<Fr> init_vals(emb.d1.size(), Fr::zero());
    for (uint32_t s : sys.init) init_vals[s] = Fr::one();
    out.p_init = poly::interpolate(emb.d1, std::move(init_vals));

    std::vector<Fr> trans_vals(emb.d2.size(), Fr::zero());
    for (auto [a, b] : sys.trans) trans_vals[a * sys.num_states + b] = Fr::one();
    out.p_trans = poly::interpolate(emb.d2, std::move(trans_vals));

    out.r_init = fr_random(rng);
    out.r_trans = fr_random(rng);
    return out;
}

}  // namespace zkmc
