#pragma once

#include "zkmc/fft.hpp"
#include "zkmc/hash.hpp"
#include "zkmc/zkxjson.hpp"

namespace zkmc {

// Injective public embeddings of S and SxS onto two disjoint coset domains of
// power-of-two size; deterministic in |S|.
struct Embedding {
    size_t num_states = 0;
    EvalDomain d1;  // states: coset 7*H1
    EvalDomain d2;  // pairs: subgroup H2
    std::vector<Fr> d1_points;  // cached element table
    std::vector<Fr> d2_points;

    static Embedding build(size_t num_states);
    Fr e1(size_t s) const { return d1_points[s]; }
    Fr e2(size_t s, size_t s2) const { return d2_points[s * num_states + s2]; }
};

struct BatchSets {
    std::vector<uint32_t> b_init;                        // states
    std::vector<std::pair<uint32_t, uint32_t>> b_step;   // pairs
    std::vector<std::pair<uint32_t, uint32_t>> b_fair;
    std::vector<Fr> e_init, e_step, e_fair;              // sorted canonical images

    size_t total_embedded() const { return e_init.size() + e_step.size() + e_fair.size(); }
    // deduplicated union used for the transition polynomial proof
    std::vector<Fr> e_step_fair_union() const;
};

// batches from public data only (parallel over states)
BatchSets enumerate_batches(const ExplicitCert& cert, const Embedding& emb);
BatchSets enumerate_batches_serial(const ExplicitCert& cert, const Embedding& emb);

struct MembershipPolys {
    std::vector<Fr> p_init;  // coefficients, degree < |D1|
    std::vector<Fr> p_trans; // degree < |D2|
    Fr r_init, r_trans;      // blinding scalars
};

MembershipPolys build_membership_polys(const ExplicitSystem& sys, const Embedding& emb,
                                       Drbg& rng);

// prover pre-flight: certificate valid in plaintext
bool plaintext_disjointness(const ExplicitSystem& sys, const BatchSets& batches);

// digest binding of the certificate and embedding parameters
Bytes32 cert_digest(const ExplicitCert& cert);

// sorted canonical-hex JSON export of the batch images
std::string batches_to_json(const BatchSets& b);

}  // namespace zkmc
