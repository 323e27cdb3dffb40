#include "doctest.h"
#include "zkmc/sigma.hpp"

using namespace zkmc;

namespace {

const SymParams& sp() {
    static const SymParams p = [] {
        Drbg rng(Bytes{0xaa});
        return SymParams::generate(64, rng, true);
    }();
    return p;
}

std::vector<Fr> enc(std::initializer_list<int64_t> v) {
    std::vector<Fr> out;
    for (auto x : v) out.push_back(encode_int(x));
    return out;
}

}  // namespace

TEST_CASE("signed integer encoding") {
    CHECK(encode_int(-3) == Fr::from_u64(3).neg());
    CHECK(decode_int(encode_int(-3), 10) == -3);
    CHECK(decode_int(encode_int(7), 10) == 7);
    CHECK(!decode_int(encode_int(11), 10).has_value());
    // ring homomorphism on bounded products
    Drbg rng(Bytes{1});
    for (int i = 0; i < 200; i++) {
        int64_t a = int64_t(rng.next_u64() % (1ull << 32)) - (1ll << 31);
        int64_t b = int64_t(rng.next_u64() % (1ull << 32)) - (1ll << 31);
        Fr prod = encode_int(a) * encode_int(b);
        auto dec = decode_int(prod, uint64_t(1) << 62);
        REQUIRE(dec.has_value());
        CHECK(*dec == a * b);
    }
}

TEST_CASE("pedersen homomorphism at every tier") {
    Drbg rng(Bytes{2});
    // scalar
    auto c1 = pedersen::commit_scalar(sp(), Fr::from_u64(2), Fr::from_u64(3));
    auto c2 = pedersen::commit_scalar(sp(), Fr::from_u64(5), Fr::from_u64(7));
    auto c3 = pedersen::commit_scalar(sp(), Fr::from_u64(7), Fr::from_u64(10));
    CHECK(pedersen::hom_add(c1, c2) == c3);
    // vector
    for (int round = 0; round < 3; round++) {
        std::vector<Fr> a(5), b(5), s(5);
        for (int i = 0; i < 5; i++) {
            a[i] = fr_random(rng);
            b[i] = fr_random(rng);
            s[i] = a[i] + b[i];
        }
        Fr ra = fr_random(rng), rb = fr_random(rng);
        CHECK(pedersen::hom_add(pedersen::commit_vector(sp(), a, ra),
                                pedersen::commit_vector(sp(), b, rb)) ==
              pedersen::commit_vector(sp(), s, ra + rb));
    }
    // matrix tier
    std::vector<Fr> ma(6), mb(6), ms(6);
    for (int i = 0; i < 6; i++) {
        ma[i] = fr_random(rng);
        mb[i] = fr_random(rng);
        ms[i] = ma[i] + mb[i];
    }
    Fr ra = fr_random(rng), rb = fr_random(rng);
    CHECK(pedersen::hom_add(pedersen::commit_matrix(sp(), 3, 2, ma, ra),
                            pedersen::commit_matrix(sp(), 3, 2, mb, rb)) ==
          pedersen::commit_matrix(sp(), 3, 2, ms, ra + rb));
}

TEST_CASE("matrix tier equals per-row recomputation") {
    Drbg rng(Bytes{3});
    std::vector<Fr> m(6);
    for (auto& x : m) x = fr_random(rng);
    Fr r = fr_random(rng);
    auto cm = pedersen::commit_matrix(sp(), 3, 2, m, r);
    // aggregate per-row vector commitments via pairings with g'^{alpha^{n(i-1)}}
    std::vector<std::pair<G1Affine, G2Affine>> pairs;
    for (size_t i = 0; i < 3; i++) {
        std::span<const Fr> row(m.data() + i * 2, 2);
        G1 rc = msm(std::span(sp().g_pow).subspan(0, 2), row);
        pairs.push_back({curve::to_affine(rc), sp().gp_pow[2 * i]});
    }
    pairs.push_back({curve::to_affine(sp().tab_g.mul(r)), sp().hp});
    CHECK(multi_pairing(pairs) == cm.c);
}

TEST_CASE("opening verification rejects perturbations") {
    Drbg rng(Bytes{4});
    std::vector<Fr> v(4);
    for (auto& x : v) x = fr_random(rng);
    Fr r = fr_random(rng);
    auto c = pedersen::commit_vector(sp(), v, r);
    CHECK(pedersen::verify_opening(sp(), c, v, r));
    auto v2 = v;
    v2[2] += Fr::one();
    CHECK(!pedersen::verify_opening(sp(), c, v2, r));
    CHECK(!pedersen::verify_opening(sp(), c, v, r + Fr::one()));
}

TEST_CASE("transcript determinism and sensitivity") {
    Transcript a("test"), b("test");
    a.absorb("m", Bytes{1, 2, 3});
    b.absorb("m", Bytes{1, 2, 3});
    CHECK(fr_challenge(a, "c") == fr_challenge(b, "c"));
    // successive challenges differ
    Transcript c("test");
    c.absorb("m", Bytes{1, 2, 3});
    Fr c1 = fr_challenge(c, "c");
    Fr c2 = fr_challenge(c, "c");
    CHECK(c1 != c2);
    // one-byte perturbation changes the challenge
    Transcript d("test");
    d.absorb("m", Bytes{1, 2, 4});
    CHECK(fr_challenge(d, "c") != c1);
}

TEST_CASE("sym params serialization and digest") {
    Drbg rng(Bytes{5});
    auto p = SymParams::generate(8, rng, false);
    auto bytes = p.serialize();
    auto q = SymParams::deserialize(bytes);
    CHECK(q.g_pow[3] == p.g_pow[3]);
    CHECK(q.digest() == p.digest());
    CHECK(!q.alpha.has_value());
    // insecure params round-trip the trapdoor and share the public digest
    auto pi = SymParams::generate(8, rng, true);
    auto qi = SymParams::deserialize(pi.serialize());
    CHECK(qi.alpha == pi.alpha);
}

TEST_CASE("range proof boundaries") {
    Drbg rng(Bytes{6});
    const uint64_t M = 1000;
    for (uint64_t v : {uint64_t(0), uint64_t(737), M}) {
        Fr r = fr_random(rng);
        auto c = pedersen::commit_scalar(sp(), Fr::from_u64(v), r).c;
        Transcript tp("range-test");
        auto proof = range_prove(sp(), tp, std::span(&v, 1), std::span(&r, 1), std::span(&c, 1),
                                 M, rng);
        Transcript tv("range-test");
        CHECK(range_verify(sp(), tv, std::span(&c, 1), M, proof));
    }
    // M+1: the prover refuses
    uint64_t bad = M + 1;
    Fr r = fr_random(rng);
    auto c = pedersen::commit_scalar(sp(), Fr::from_u64(bad), r).c;
    Transcript tp("range-test");
    CHECK_THROWS(range_prove(sp(), tp, std::span(&bad, 1), std::span(&r, 1), std::span(&c, 1), M,
                             rng));
    // forged transcript for M+1 rejects
    Transcript tf("range-test");
    auto forged = range_prove_unchecked(sp(), tf, std::span(&bad, 1), std::span(&r, 1),
                                        std::span(&c, 1), M, rng);
    Transcript tv("range-test");
    CHECK(!range_verify(sp(), tv, std::span(&c, 1), M, forged));
}

TEST_CASE("range proof tamper rejection") {
    Drbg rng(Bytes{7});
    const uint64_t M = 255;
    uint64_t v = 100;
    Fr r = fr_random(rng);
    auto c = pedersen::commit_scalar(sp(), Fr::from_u64(v), r).c;
    Transcript tp("range-test");
    auto proof =
        range_prove(sp(), tp, std::span(&v, 1), std::span(&r, 1), std::span(&c, 1), M, rng);

    auto bad = proof;
    bad.low[0].bits[3].s0 += Fr::one();
    Transcript t1("range-test");
    CHECK(!range_verify(sp(), t1, std::span(&c, 1), M, bad));

    bad = proof;
    bad.high[0].sum_s += Fr::one();
    Transcript t2("range-test");
    CHECK(!range_verify(sp(), t2, std::span(&c, 1), M, bad));

    bad = proof;
    bad.low[0].bit_commits[0] = sp().g();
    Transcript t3("range-test");
    CHECK(!range_verify(sp(), t3, std::span(&c, 1), M, bad));

    // homomorphic shift: proving v + M in [0, 2M] realizes v in [-M, M]
    int64_t signed_v = -37;
    Fr rs = fr_random(rng);
    auto cs = pedersen::commit_scalar(sp(), encode_int(signed_v), rs).c;
    uint64_t shifted = uint64_t(signed_v + int64_t(M));
    auto c_shift = curve::to_affine(
        curve::add(G1::from_affine(cs), sp().tab_g.mul(Fr::from_u64(M))));
    Transcript t4("range-test");
    auto pshift = range_prove(sp(), t4, std::span(&shifted, 1), std::span(&rs, 1),
                              std::span(&c_shift, 1), 2 * M, rng);
    Transcript t5("range-test");
    CHECK(range_verify(sp(), t5, std::span(&c_shift, 1), 2 * M, pshift));
}

TEST_CASE("zkmmeq honest and forged") {
    Drbg rng(Bytes{8});
    // random public 3x2 matrix
    IntMat A(3, 2);
    for (auto& x : A.a) x = int64_t(rng.next_u64() % 17) - 8;
    std::vector<Fr> x = enc({4, -3});
    std::vector<Fr> ax(3);
    for (size_t i = 0; i < 3; i++) {
        ax[i] = Fr::zero();
        for (size_t j = 0; j < 2; j++) ax[i] += encode_int(A.at(i, j)) * x[j];
    }
    Fr r_ax = fr_random(rng), r_x = fr_random(rng);
    ZkmmeqClaim claim{pedersen::commit_vector(sp(), ax, r_ax), A};
    auto c_x = pedersen::commit_vector(sp(), x, r_x);

    Transcript tp("eq-test");
    auto proof = zkmmeq_prove(sp(), tp, std::span(&claim, 1), std::span(&r_ax, 1), x, c_x, r_x,
                              rng);
    Transcript tv("eq-test");
    CHECK(zkmmeq_verify(sp(), tv, std::span(&claim, 1), c_x, proof));

    // identity linkage: two commitments to the same value under different randomness
    IntMat I2(2, 2);
    I2.at(0, 0) = I2.at(1, 1) = 1;
    Fr r2 = fr_random(rng);
    ZkmmeqClaim idclaim{pedersen::commit_vector(sp(), x, r2), I2};
    Transcript tp2("eq-test");
    auto proof2 = zkmmeq_prove(sp(), tp2, std::span(&idclaim, 1), std::span(&r2, 1), x, c_x, r_x,
                               rng);
    Transcript tv2("eq-test");
    CHECK(zkmmeq_verify(sp(), tv2, std::span(&idclaim, 1), c_x, proof2));

    // forged: commitment opens to Ax + e1
    auto ax_bad = ax;
    ax_bad[0] += Fr::one();
    ZkmmeqClaim badclaim{pedersen::commit_vector(sp(), ax_bad, r_ax), A};
    Transcript tp3("eq-test");
    auto proof3 = zkmmeq_prove(sp(), tp3, std::span(&badclaim, 1), std::span(&r_ax, 1), x, c_x,
                               r_x, rng);
    // the prover produced responses for the wrong statement; verification fails
    Transcript tv3("eq-test");
    CHECK(!zkmmeq_verify(sp(), tv3, std::span(&badclaim, 1), c_x, proof3));
}

#ifdef ZKMC_TEST_BUILD
TEST_CASE("zkmmeq rewinding extraction") {
    Drbg rng(Bytes{9});
    int ok = 0;
    const int trials = 100;
    for (int trial = 0; trial < trials; trial++) {
        IntMat A(2, 3);
        for (auto& v : A.a) v = int64_t(rng.next_u64() % 9) - 4;
        std::vector<Fr> x(3);
        for (auto& v : x) v = fr_random(rng);
        std::vector<Fr> ax(2, Fr::zero());
        for (size_t i = 0; i < 2; i++)
            for (size_t j = 0; j < 3; j++) ax[i] += encode_int(A.at(i, j)) * x[j];
        Fr r_ax = fr_random(rng), r_x = fr_random(rng);
        ZkmmeqClaim claim{pedersen::commit_vector(sp(), ax, r_ax), A};
        auto c_x = pedersen::commit_vector(sp(), x, r_x);

        auto fm = zkmmeq_first_message(sp(), std::span(&claim, 1), 3, rng);
        Fr e1 = fr_random(rng), e2 = fr_random(rng);
        if (e1 == e2) continue;
        auto p1 = zkmmeq_finish(fm, std::span(&r_ax, 1), x, r_x, e1);
        auto p2 = zkmmeq_finish(fm, std::span(&r_ax, 1), x, r_x, e2);
        REQUIRE(zkmmeq_check_with_challenge(sp(), std::span(&claim, 1), c_x, p1, e1));
        REQUIRE(zkmmeq_check_with_challenge(sp(), std::span(&claim, 1), c_x, p2, e2));

        // extract x and both randomness values from the two transcripts
        Fr dinv = (e1 - e2).inv();
        std::vector<Fr> xe(3);
        for (size_t i = 0; i < 3; i++) xe[i] = (p1.z[i] - p2.z[i]) * dinv;
        Fr rxe = (p1.w_x - p2.w_x) * dinv;
        Fr raxe = (p1.w_j[0] - p2.w_j[0]) * dinv;
        std::vector<Fr> axe(2, Fr::zero());
        for (size_t i = 0; i < 2; i++)
            for (size_t j = 0; j < 3; j++) axe[i] += encode_int(A.at(i, j)) * xe[j];
        if (pedersen::verify_opening(sp(), c_x, xe, rxe) &&
            pedersen::verify_opening(sp(), claim.c, axe, raxe))
            ok++;
    }
    CHECK(ok >= 99);  // extraction succeeds on every completed trial
}
#endif

TEST_CASE("zkrp matrix round trip and boundaries") {
    Drbg rng(Bytes{10});
    const uint64_t M = 500;
    // zero matrix accepts
    {
        std::vector<uint64_t> vals(4, 0);
        std::vector<Fr> enc_vals(4, Fr::zero());
        Fr r = fr_random(rng);
        auto cm = pedersen::commit_matrix(sp(), 2, 2, enc_vals, r);
        auto tier = TierCommitment::matrix(cm);
        Transcript tp("rp-test");
        auto proof = zkrp_prove(sp(), tp, vals, tier, r, M, rng);
        Transcript tv("rp-test");
        CHECK(zkrp_verify(sp(), tv, tier, M, proof));
    }
    // boundary entry M accepts; M+1 refuses
    {
        std::vector<uint64_t> vals = {3, M, 7, 1, 0, 2};
        std::vector<Fr> enc_vals;
        for (auto v : vals) enc_vals.push_back(Fr::from_u64(v));
        Fr r = fr_random(rng);
        auto cm = pedersen::commit_matrix(sp(), 2, 3, enc_vals, r);
        auto tier = TierCommitment::matrix(cm);
        Transcript tp("rp-test");
        auto proof = zkrp_prove(sp(), tp, vals, tier, r, M, rng);
        Transcript tv("rp-test");
        CHECK(zkrp_verify(sp(), tv, tier, M, proof));

        auto vals_bad = vals;
        vals_bad[1] = M + 1;
        std::vector<Fr> enc_bad;
        for (auto v : vals_bad) enc_bad.push_back(Fr::from_u64(v));
        auto cm_bad = pedersen::commit_matrix(sp(), 2, 3, enc_bad, r);
        Transcript tb("rp-test");
        CHECK_THROWS(zkrp_prove(sp(), tb, vals_bad, TierCommitment::matrix(cm_bad), r, M, rng));

        // random theta tamper rejects
        auto tampered = proof;
        tampered.theta = curve::to_affine(sp().tab_g.mul(fr_random(rng)));
        Transcript tt("rp-test");
        CHECK(!zkrp_verify(sp(), tt, tier, M, tampered));
    }
    // vector tier
    {
        std::vector<uint64_t> vals = {11, 22, 33};
        std::vector<Fr> enc_vals;
        for (auto v : vals) enc_vals.push_back(Fr::from_u64(v));
        Fr r = fr_random(rng);
        auto cv = pedersen::commit_vector(sp(), enc_vals, r);
        auto tier = TierCommitment::vector(cv);
        Transcript tp("rp-test");
        auto proof = zkrp_prove(sp(), tp, vals, tier, r, M, rng);
        Transcript tv("rp-test");
        CHECK(zkrp_verify(sp(), tv, tier, M, proof));
        // wrong tier commitment rejects
        auto cv2 = pedersen::commit_vector(sp(), enc_vals, r + Fr::one());
        Transcript tw("rp-test");
        CHECK(!zkrp_verify(sp(), tw, TierCommitment::vector(cv2), M, proof));
    }
}

#ifdef ZKMC_TEST_BUILD
TEST_CASE("zkrp simulator transcripts verify") {
    Drbg rng(Bytes{11});
    const uint64_t M = 100;
    for (int round = 0; round < 3; round++) {
        // honest commitment to a secret matrix the simulator never sees
        std::vector<Fr> entries(6);
        for (auto& e : entries) e = Fr::from_u64(rng.next_u64() % (M + 1));
        Fr r = fr_random(rng);
        auto cm = pedersen::commit_matrix(sp(), 2, 3, entries, r);
        auto tier = TierCommitment::matrix(cm);
        // preimage split: phi = g^{f(alpha)}
        G1Affine phi = curve::to_affine(msm(std::span(sp().g_pow).subspan(0, 6), entries));
        Transcript ts("rp-test");
        auto sim = zkrp_simulate(sp(), ts, tier, phi, r, 6, M, rng);
        Transcript tv("rp-test");
        CHECK(zkrp_verify(sp(), tv, tier, M, sim));
    }
}
#endif

TEST_CASE("zkmm matrix-vector") {
    Drbg rng(Bytes{12});
    // 2x2 toy: A = [[1,2],[3,4]], x = (1,1) -> product (3,7)
    IntMat A(2, 2);
    A.at(0, 0) = 1;
    A.at(0, 1) = 2;
    A.at(1, 0) = 3;
    A.at(1, 1) = 4;
    std::vector<Fr> x = enc({1, 1});
    std::vector<Fr> flat = enc({1, 2, 3, 4});
    std::vector<Fr> prod = enc({3, 7});

    Fr r_A = fr_random(rng), r_x = fr_random(rng), r_out = fr_random(rng);
    auto c_A = pedersen::commit_matrix(sp(), 2, 2, flat, r_A);
    auto c_x = pedersen::commit_vector(sp(), x, r_x);
    auto c_out = pedersen::commit_vector(sp(), prod, r_out);

    Transcript tp("mm-test");
    auto proof = zkmm_prove_matrix(sp(), tp, A, x, c_A, c_x, c_out, r_A, r_x, r_out, rng);
    Transcript tv("mm-test");
    CHECK(zkmm_verify_matrix(sp(), tv, 2, 2, c_A, c_x, c_out, proof));

    // perturbed product commitment (3,8) rejects
    auto bad_prod = enc({3, 8});
    auto c_bad = pedersen::commit_vector(sp(), bad_prod, r_out);
    Transcript tb("mm-test");
    auto bad_proof = zkmm_prove_matrix(sp(), tb, A, x, c_A, c_x, c_bad, r_A, r_x, r_out, rng);
    Transcript tbv("mm-test");
    CHECK(!zkmm_verify_matrix(sp(), tbv, 2, 2, c_A, c_x, c_bad, bad_proof));

    // A = I: committed product must open to x (cross-check with zkmmeq linkage)
    IntMat I2(2, 2);
    I2.at(0, 0) = I2.at(1, 1) = 1;
    std::vector<Fr> iflat = enc({1, 0, 0, 1});
    Fr r_I = fr_random(rng), r_ix = fr_random(rng);
    auto c_I = pedersen::commit_matrix(sp(), 2, 2, iflat, r_I);
    auto c_ix = pedersen::commit_vector(sp(), x, r_ix);
    Transcript ti("mm-test");
    auto iproof = zkmm_prove_matrix(sp(), ti, I2, x, c_I, c_x, c_ix, r_I, r_x, r_ix, rng);
    Transcript tiv("mm-test");
    CHECK(zkmm_verify_matrix(sp(), tiv, 2, 2, c_I, c_x, c_ix, iproof));
    ZkmmeqClaim idclaim{c_ix, I2};
    Transcript te("mm-test2");
    auto eqp = zkmmeq_prove(sp(), te, std::span(&idclaim, 1), std::span(&r_ix, 1), x, c_x, r_x,
                            rng);
    Transcript tev("mm-test2");
    CHECK(zkmmeq_verify(sp(), tev, std::span(&idclaim, 1), c_x, eqp));
}

TEST_CASE("zkmm vector-vector") {
    Drbg rng(Bytes{13});
    std::vector<Fr> a = enc({-2, 5, 1});
    std::vector<Fr> x = enc({3, 1, -4});
    Fr dot = encode_int(-2 * 3 + 5 * 1 + 1 * -4);
    Fr r_a = fr_random(rng), r_x = fr_random(rng), r_out = fr_random(rng);
    auto c_a = pedersen::commit_vector(sp(), a, r_a);
    auto c_x = pedersen::commit_vector(sp(), x, r_x);
    auto c_out = pedersen::commit_scalar(sp(), dot, r_out);
    Transcript tp("mv-test");
    auto proof = zkmm_prove_vector(sp(), tp, a, x, c_a, c_x, c_out, r_a, r_x, r_out, rng);
    Transcript tv("mv-test");
    CHECK(zkmm_verify_vector(sp(), tv, 3, c_a, c_x, c_out, proof));
    // tampered response rejects
    auto bad = proof;
    bad.ip.u_x[1] += Fr::one();
    Transcript tb("mv-test");
    CHECK(!zkmm_verify_vector(sp(), tb, 3, c_a, c_x, c_out, bad));
}

TEST_CASE("sub-protocol completeness over randomized instances") {
    Drbg rng(Bytes{14});
    int trials = 25;
    for (int trial = 0; trial < trials; trial++) {
        size_t m = 1 + rng.next_u64() % 4, n = 1 + rng.next_u64() % 4;
        IntMat A(m, n);
        for (auto& v : A.a) v = int64_t(rng.next_u64() % 21) - 10;
        std::vector<Fr> x(n);
        std::vector<int64_t> xi(n);
        for (size_t i = 0; i < n; i++) {
            xi[i] = int64_t(rng.next_u64() % 21) - 10;
            x[i] = encode_int(xi[i]);
        }
        std::vector<Fr> flat(m * n);
        for (size_t i = 0; i < m * n; i++) flat[i] = encode_int(A.a[i]);
        std::vector<Fr> prod(m, Fr::zero());
        for (size_t i = 0; i < m; i++)
            for (size_t j = 0; j < n; j++) prod[i] += encode_int(A.at(i, j)) * x[j];
        Fr r_A = fr_random(rng), r_x = fr_random(rng), r_out = fr_random(rng);
        auto c_A = pedersen::commit_matrix(sp(), m, n, flat, r_A);
        auto c_x = pedersen::commit_vector(sp(), x, r_x);
        auto c_out = pedersen::commit_vector(sp(), prod, r_out);
        Transcript tp("fuzz");
        auto proof = zkmm_prove_matrix(sp(), tp, A, x, c_A, c_x, c_out, r_A, r_x, r_out, rng);
        Transcript tv("fuzz");
        CHECK(zkmm_verify_matrix(sp(), tv, m, n, c_A, c_x, c_out, proof));
    }
}
