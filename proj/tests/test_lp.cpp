#include "doctest.h"
#include "support/fourier_motzkin.hpp"
#include "zkmc/hash.hpp"
#include "zkmc/lp.hpp"

using namespace zkmc;

namespace {

IntMat mat(size_t r, size_t c, std::initializer_list<int64_t> vals) {
    IntMat m(r, c);
    std::copy(vals.begin(), vals.end(), m.a.begin());
    return m;
}

}  // namespace

TEST_CASE("trivial infeasible pair gives unit ray") {
    // x <= -1, -x <= 0
    auto A = mat(2, 1, {1, -1});
    std::vector<int64_t> b = {-1, 0};
    auto res = lp_feasible(A, b);
    REQUIRE(!res.sat);
    // ray (1,1) up to scale: combination 0 <= -1
    CHECK(res.ray[0] == res.ray[1]);
    CHECK(res.ray[0] > 0);
}

TEST_CASE("satisfiable single row") {
    auto A = mat(1, 1, {1});
    std::vector<int64_t> b = {5};
    auto res = lp_feasible(A, b);
    REQUIRE(res.sat);
    CHECK(res.point[0] <= 5);
}

TEST_CASE("lp agrees with fourier-motzkin on random systems") {
    Drbg rng(Bytes{77});
    int unsat_count = 0;
    for (int trial = 0; trial < 600; trial++) {
        size_t d = 1 + rng.next_u64() % 4;        // up to 4 variables
        size_t k = 1 + rng.next_u64() % 7;
        IntMat A(k, d);
        std::vector<int64_t> b(k);
        for (auto& v : A.a) v = int64_t(rng.next_u64() % 9) - 4;
        for (auto& v : b) v = int64_t(rng.next_u64() % 11) - 7;
        bool fm = testsupport::fm_feasible(A, b);
        auto lp = lp_feasible(A, b);
        CHECK(lp.sat == fm);
        if (!lp.sat) unsat_count++;
    }
    CHECK(unsat_count > 50);  // the family actually exercises both branches
}

TEST_CASE("farkas witness on the toy obligation") {
    // secret row x <= -1, public row -x <= 0
    auto As = mat(1, 1, {1});
    std::vector<int64_t> bs = {-1};
    auto Gp = mat(1, 1, {-1});
    std::vector<int64_t> hp = {0};
    auto out = farkas_witness(As, bs, Gp, hp, 1u << 20);
    REQUIRE(out.error == FarkasError::None);
    CHECK(out.witness.lambda == std::vector<uint64_t>{1});
    CHECK(out.witness.mu == std::vector<uint64_t>{1});
    CHECK(out.witness.slack == 0);
    CHECK(out.witness.reverify(As, bs, Gp, hp));
}

TEST_CASE("farkas rational scaling") {
    // 2x <= -1, -3x <= 0: ray proportional to (1/2, 1/3) scales to (3, 2)
    auto As = mat(1, 1, {2});
    std::vector<int64_t> bs = {-1};
    auto Gp = mat(1, 1, {-3});
    std::vector<int64_t> hp = {0};
    auto out = farkas_witness(As, bs, Gp, hp, 1u << 20);
    REQUIRE(out.error == FarkasError::None);
    CHECK(out.witness.lambda == std::vector<uint64_t>{3});
    CHECK(out.witness.mu == std::vector<uint64_t>{2});
    // slack = -(3*-1 + 2*0) - 1 = 2
    CHECK(out.witness.slack == 2);
}

TEST_CASE("farkas no witness when satisfiable") {
    auto As = mat(1, 2, {1, 0});
    std::vector<int64_t> bs = {4};
    auto Gp = mat(1, 2, {0, 1});
    std::vector<int64_t> hp = {4};
    auto out = farkas_witness(As, bs, Gp, hp, 1u << 20);
    CHECK(out.error == FarkasError::NoWitness);
    CHECK(out.sat_point.size() == 2);
}

TEST_CASE("farkas bound exceeded") {
    // x <= -1000, -x <= 0 with gcd-reduced multipliers (1,1) but slack 999 > M
    auto As = mat(1, 1, {1});
    std::vector<int64_t> bs = {-1000};
    auto Gp = mat(1, 1, {-1});
    std::vector<int64_t> hp = {0};
    auto out = farkas_witness(As, bs, Gp, hp, 16);
    CHECK(out.error == FarkasError::BoundExceeded);
}

TEST_CASE("farkas witnesses reverify on random infeasible systems") {
    Drbg rng(Bytes{78});
    int found = 0;
    for (int trial = 0; trial < 300; trial++) {
        size_t d = 1 + rng.next_u64() % 3;
        size_t ks = 1 + rng.next_u64() % 4, kp = 1 + rng.next_u64() % 4;
        IntMat As(ks, d), Gp(kp, d);
        std::vector<int64_t> bs(ks), hp(kp);
        for (auto& v : As.a) v = int64_t(rng.next_u64() % 7) - 3;
        for (auto& v : Gp.a) v = int64_t(rng.next_u64() % 7) - 3;
        for (auto& v : bs) v = int64_t(rng.next_u64() % 9) - 6;
        for (auto& v : hp) v = int64_t(rng.next_u64() % 9) - 6;
        auto out = farkas_witness(As, bs, Gp, hp, uint64_t(1) << 32);
        if (out.error == FarkasError::None) {
            found++;
            CHECK(out.witness.reverify(As, bs, Gp, hp));
            // witness entries within bound
            for (uint64_t v : out.witness.lambda) CHECK(v <= (uint64_t(1) << 32));
        }
    }
    CHECK(found > 30);
}
