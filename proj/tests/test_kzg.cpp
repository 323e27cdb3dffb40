#include "doctest.h"
#include "zkmc/kzg.hpp"

using namespace zkmc;

namespace {

const KzgSrs& srs() {
    static const KzgSrs s = [] {
        Drbg rng(Bytes{0x51});
        return KzgSrs::generate(64, rng, true);
    }();
    return s;
}

}  // namespace

TEST_CASE("srs consistency check and tamper detection") {
    Drbg rng(Bytes{1});
    auto tiny = KzgSrs::generate(4, rng, false);
    CHECK(tiny.consistency_check(rng));
    CHECK(!tiny.tau.has_value());
    auto tampered = tiny;
    tampered.g1[2] = curve::to_affine(curve::dbl(G1::from_affine(tampered.g1[2])));
    CHECK(!tampered.consistency_check(rng));
}

TEST_CASE("srs serialization round trip") {
    Drbg rng(Bytes{2});
    auto s = KzgSrs::generate(6, rng, true);
    auto back = KzgSrs::deserialize(s.serialize());
    CHECK(back.degree == 6);
    CHECK(back.g1[5] == s.g1[5]);
    CHECK(back.g2[6] == s.g2[6]);
    CHECK(back.tau == s.tau);
    CHECK(back.digest() == s.digest());
}

TEST_CASE("hiding commitment basics") {
    Drbg rng(Bytes{3});
    auto d = EvalDomain::radix2(4, fr_multiplicative_generator());
    // zero polynomial with zero randomness commits to the identity
    std::vector<Fr> zero(4, Fr::zero());
    CHECK(kzg::commit_hiding(srs(), zero, d, Fr::zero()).c.infinity);
    // same polynomial, two different r, different commitments
    std::vector<Fr> p(8);
    for (auto& c : p) c = fr_random(rng);
    auto c1 = kzg::commit_hiding(srs(), p, d, fr_random(rng));
    auto c2 = kzg::commit_hiding(srs(), p, d, fr_random(rng));
    CHECK(!(c1 == c2));
}

TEST_CASE("trapdoor cross-check of commitment") {
    Drbg rng(Bytes{4});
    auto d = EvalDomain::radix2(3, fr_multiplicative_generator());
    std::vector<Fr> p(8);
    for (auto& c : p) c = fr_random(rng);
    Fr r = fr_random(rng);
    auto c = kzg::commit_hiding(srs(), p, d, r);
    // evaluate p~ at tau directly under the insecure flag
    Fr tau = *srs().tau;
    Fr val = poly::eval(p, tau) + r * d.vanishing_at(tau);
    auto direct = curve::to_affine(curve::mul(G1::from_affine(curve::g1_generator()), val));
    CHECK(c.c == direct);
}

TEST_CASE("vanishing proof round trip") {
    Drbg rng(Bytes{5});
    auto d = EvalDomain::radix2(4, fr_multiplicative_generator());
    // polynomial vanishing on a chosen subset of the domain
    std::vector<Fr> evals(d.size());
    std::vector<Fr> eset;
    for (size_t i = 0; i < d.size(); i++) {
        if (i % 3 == 0) {
            evals[i] = Fr::zero();
            eset.push_back(d.element(i));
        } else {
            evals[i] = fr_random(rng);
        }
    }
    auto p = poly::interpolate(d, evals);
    Fr r = fr_random(rng);
    auto c = kzg::commit_hiding(srs(), p, d, r);
    auto proof = kzg::prove_vanishing(srs(), p, d, r, eset);
    CHECK(kzg::verify_vanishing(srs(), c, eset, proof));

    // empty evaluation set: trivially valid
    auto trivial = kzg::prove_vanishing(srs(), p, d, r, {});
    CHECK(kzg::verify_vanishing(srs(), c, {}, trivial));

    // non-vanishing polynomial: division remainder nonzero
    auto evals_bad = evals;
    evals_bad[0] = Fr::one();
    auto p_bad = poly::interpolate(d, evals_bad);
    CHECK_THROWS(kzg::prove_vanishing(srs(), p_bad, d, r, eset));
}

TEST_CASE("vanishing proof mutation fuzzing") {
    Drbg rng(Bytes{6});
    auto d = EvalDomain::radix2(3, fr_multiplicative_generator());
    std::vector<Fr> evals(d.size(), Fr::zero());
    for (size_t i = 4; i < d.size(); i++) evals[i] = fr_random(rng);
    std::vector<Fr> eset;
    for (size_t i = 0; i < 4; i++) eset.push_back(d.element(i));
    auto p = poly::interpolate(d, evals);
    Fr r = fr_random(rng);
    auto c = kzg::commit_hiding(srs(), p, d, r);
    auto proof = kzg::prove_vanishing(srs(), p, d, r, eset);
    REQUIRE(kzg::verify_vanishing(srs(), c, eset, proof));

    // mutate commitment
    auto c_bad = c;
    c_bad.c = curve::to_affine(curve::dbl(G1::from_affine(c.c)));
    CHECK(!kzg::verify_vanishing(srs(), c_bad, eset, proof));
    // mutate proof
    auto pi_bad = proof;
    pi_bad.pi = curve::to_affine(curve::add_mixed(G1::from_affine(proof.pi), srs().g1[0]));
    CHECK(!kzg::verify_vanishing(srs(), c, eset, pi_bad));
    // mutate evaluation set
    auto eset_bad = eset;
    eset_bad[1] += Fr::one();
    CHECK(!kzg::verify_vanishing(srs(), c, eset_bad, proof));

    // swapped proofs across two commitments reject
    std::vector<Fr> evals2(d.size(), Fr::zero());
    for (size_t i = 4; i < d.size(); i++) evals2[i] = fr_random(rng);
    auto p2 = poly::interpolate(d, evals2);
    Fr r2 = fr_random(rng);
    auto c2 = kzg::commit_hiding(srs(), p2, d, r2);
    auto proof2 = kzg::prove_vanishing(srs(), p2, d, r2, eset);
    CHECK(kzg::verify_vanishing(srs(), c2, eset, proof2));
    CHECK(!kzg::verify_vanishing(srs(), c, eset, proof2));
    CHECK(!kzg::verify_vanishing(srs(), c2, eset, proof));
}

TEST_CASE("completeness on random honest instances") {
    Drbg rng(Bytes{7});
    auto d = EvalDomain::radix2(5, fr_multiplicative_generator());
    for (int round = 0; round < 5; round++) {
        std::vector<Fr> evals(d.size());
        std::vector<Fr> eset;
        for (size_t i = 0; i < d.size(); i++) {
            if (rng.next_u64() % 2) {
                evals[i] = Fr::zero();
                eset.push_back(d.element(i));
            } else {
                evals[i] = fr_random(rng);
            }
        }
        auto p = poly::interpolate(d, evals);
        Fr r = fr_random(rng);
        auto c = kzg::commit_hiding(srs(), p, d, r);
        auto proof = kzg::prove_vanishing(srs(), p, d, r, eset);
        CHECK(kzg::verify_vanishing(srs(), c, eset, proof));
    }
}
