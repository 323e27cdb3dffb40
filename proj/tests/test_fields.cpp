#include <gmpxx.h>

#include "doctest.h"
#include "zkmc/fields.hpp"
#include "zkmc/tower.hpp"

using namespace zkmc;

namespace {

template <class F>
mpz_class to_mpz(const F& x) {
    auto limbs = x.canonical();
    mpz_class v = 0;
    for (size_t i = F::N; i-- > 0;) {
        v <<= 64;
        v += mpz_class(limbs[i] >> 32) << 32 | mpz_class(uint32_t(limbs[i]));
    }
    return v;
}

template <class F>
mpz_class modulus() {
    mpz_class m = 0;
    for (size_t i = F::N; i-- > 0;) {
        m <<= 64;
        m += mpz_class(F::MOD[i] >> 32) << 32 | mpz_class(uint32_t(F::MOD[i]));
    }
    return m;
}

template <class F>
void check_against_gmp() {
    mpz_class p = modulus<F>();
    Drbg rng(Bytes{1, 2, 3});
    for (int round = 0; round < 200; round++) {
        F a = F::random(rng), b = F::random(rng);
        mpz_class za = to_mpz(a), zb = to_mpz(b);
        CHECK(to_mpz(a + b) == (za + zb) % p);
        CHECK(to_mpz(a - b) == ((za - zb) % p + p) % p);
        CHECK(to_mpz(a * b) == (za * zb) % p);
        CHECK(to_mpz(a.neg()) == (p - za) % p);
        if (!a.is_zero()) {
            mpz_class inv;
            mpz_invert(inv.get_mpz_t(), za.get_mpz_t(), p.get_mpz_t());
            CHECK(to_mpz(a.inv()) == inv);
        }
    }
}

}  // namespace

TEST_CASE("fp matches gmp arithmetic") { check_against_gmp<Fp>(); }
TEST_CASE("fr matches gmp arithmetic") { check_against_gmp<Fr>(); }

TEST_CASE("field serialization round trip") {
    Drbg rng(Bytes{9});
    for (int i = 0; i < 50; i++) {
        Fp a = Fp::random(rng);
        auto bytes = a.to_bytes();
        auto back = Fp::from_bytes(bytes);
        REQUIRE(back.has_value());
        CHECK(*back == a);
        Fr b = Fr::random(rng);
        CHECK(*Fr::from_bytes(b.to_bytes()) == b);
    }
    // non-canonical encodings rejected
    auto mod_bytes = Fp::zero().to_bytes();
    for (size_t i = 0; i < 6; i++)
        for (int j = 0; j < 8; j++) mod_bytes[i * 8 + j] = uint8_t(FpParams::MOD[i] >> (8 * j));
    CHECK(!Fp::from_bytes(mod_bytes).has_value());
}

TEST_CASE("fp sqrt") {
    Drbg rng(Bytes{7});
    for (int i = 0; i < 20; i++) {
        Fp a = Fp::random(rng);
        Fp sq = a.sqr();
        auto r = fp_sqrt(sq);
        REQUIRE(r.has_value());
        CHECK((*r == a || *r == a.neg()));
    }
}

TEST_CASE("fp2 arithmetic") {
    Drbg rng(Bytes{11});
    Fp2 a = Fp2::make(Fp::random(rng), Fp::random(rng));
    Fp2 b = Fp2::make(Fp::random(rng), Fp::random(rng));
    Fp2 c = Fp2::make(Fp::random(rng), Fp::random(rng));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a.sqr() == a * a);
    CHECK(a * a.inv() == Fp2::one());
    // u^2 = -1
    Fp2 u = Fp2::make(Fp::zero(), Fp::one());
    CHECK(u * u == Fp2::one().neg());
    // sqrt
    for (int i = 0; i < 10; i++) {
        Fp2 x = Fp2::make(Fp::random(rng), Fp::random(rng));
        auto r = fp2_sqrt(x.sqr());
        REQUIRE(r.has_value());
        CHECK((*r == x || *r == x.neg()));
    }
}

TEST_CASE("fp6 and fp12 arithmetic") {
    Drbg rng(Bytes{13});
    auto rnd2 = [&] { return Fp2::make(Fp::random(rng), Fp::random(rng)); };
    auto rnd6 = [&] { return Fp6{rnd2(), rnd2(), rnd2()}; };
    Fp6 a6 = rnd6(), b6 = rnd6(), c6 = rnd6();
    CHECK((a6 * b6) * c6 == a6 * (b6 * c6));
    CHECK(a6 * a6.inv() == Fp6::one());
    // v^3 = xi
    Fp6 v{Fp2::zero(), Fp2::one(), Fp2::zero()};
    Fp6 v3 = v * v * v;
    CHECK(v3 == Fp6{Fp2::one().mul_xi(), Fp2::zero(), Fp2::zero()});

    Fp12 a{rnd6(), rnd6()}, b{rnd6(), rnd6()};
    CHECK(a.sqr() == a * a);
    CHECK(a * a.inv() == Fp12::one());
    CHECK((a * b) * b.inv() == a);
    // frobenius = power map
    Fp12 f = a.frobenius();
    Fp12 fpow = a.pow(std::span<const uint64_t>(FpParams::MOD));
    CHECK(f == fpow);
    CHECK(a.frobenius2() == a.frobenius().frobenius());
    // conj = p^6 power
    Fp12 c6p = a;
    for (int i = 0; i < 6; i++) c6p = c6p.frobenius();
    CHECK(c6p == a.conj());
}

TEST_CASE("fr roots of unity") {
    Fr w8 = fr_root_of_unity(3);
    Fr acc = Fr::one();
    for (int i = 0; i < 8; i++) acc = acc * w8;
    CHECK(acc == Fr::one());
    Fr w4 = w8.sqr();
    CHECK(w4 == fr_root_of_unity(2));
    Fr m1 = fr_root_of_unity(1);
    CHECK(m1 == Fr::one().neg());
}
