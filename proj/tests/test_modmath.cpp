#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>
#include <numeric>
#include <random>

#include "ntverify/modmath.hpp"

using namespace ntv;

TEST_CASE("mod_reduce maps into [0, q)") {
    CHECK(mod_reduce(7, 5) == 2);
    CHECK(mod_reduce(-7, 5) == 3);
    CHECK(mod_reduce(0, 1) == 0);
    CHECK(mod_reduce(-1, 1000000007) == 1000000006);
}

TEST_CASE("mul_mod matches __int128 reference on large operands") {
    const i64 q = 3037000493LL;
    CHECK(mul_mod(3037000492LL, 3037000492LL, q) == 1);  // (-1)^2 mod q
    CHECK(mul_mod(-2, 3, 7) == 1);
}

TEST_CASE("mod_inverse") {
    CHECK(*mod_inverse(3, 7) == 5);
    CHECK(*mod_inverse(1, 1) == 0);  // everything is 0 mod 1
    CHECK(!mod_inverse(2, 4).has_value());
    CHECK(!mod_inverse(0, 5).has_value());
    CHECK_THROWS_AS((void)mod_inverse(1, 0), std::invalid_argument);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 500; ++t) {
        i64 q = std::uniform_int_distribution<i64>(2, 100000)(rng);
        i64 a = std::uniform_int_distribution<i64>(-100000, 100000)(rng);
        auto inv = mod_inverse(a, q);
        if (inv) CHECK(mul_mod(a, *inv, q) == 1);
    }
}

TEST_CASE("unit_phase basic values") {
    CHECK(std::abs(unit_phase(0, 5) - std::complex<double>{1, 0}) < 1e-15);
    CHECK(std::abs(unit_phase(2, 4) - std::complex<double>{-1, 0}) < 1e-15);
    CHECK(std::abs(unit_phase(1, 4) - std::complex<double>{0, 1}) < 1e-15);
    CHECK(std::abs(unit_phase(-1, 4) - std::complex<double>{0, -1}) < 1e-15);
    CHECK(std::abs(unit_phase(7, 7) - std::complex<double>{1, 0}) < 1e-15);
}

TEST_CASE("eq_phase zero convention and inverse semantics") {
    CHECK(std::abs(eq_phase(1, 2, 4)) == 0.0);  // 2 not invertible mod 4
    CHECK(std::abs(eq_phase(3, 1, 8) - unit_phase(3, 8)) < 1e-15);
    // e_7(1/3) = e_7(3^{-1}) = e_7(5)
    CHECK(std::abs(eq_phase(1, 3, 7) - unit_phase(5, 7)) < 1e-15);
}

TEST_CASE("crt_phase_product equals the single-modulus phase") {
    std::mt19937_64 rng(11);
    const i64 pool[] = {3, 4, 5, 7, 9, 11, 13};
    for (int t = 0; t < 300; ++t) {
        std::vector<i64> mods;
        i64 Q = 1;
        for (i64 q : pool) {
            if (std::uniform_int_distribution<int>(0, 1)(rng)) continue;
            bool cop = true;
            for (i64 m : mods) cop = cop && std::gcd(m, q) == 1;
            if (!cop) continue;
            mods.push_back(q);
            Q *= q;
        }
        if (mods.empty()) continue;
        i64 c = std::uniform_int_distribution<i64>(-500, 500)(rng);
        CHECK(std::abs(crt_phase_product(c, mods) - unit_phase(c, Q)) < 1e-12);
    }
}

TEST_CASE("crt_phase_product rejects non-coprime moduli, naming the pair") {
    std::vector<i64> mods{6, 10, 7};
    try {
        (void)crt_phase_product(1, mods);
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        CHECK(msg.find("6") != std::string::npos);
        CHECK(msg.find("10") != std::string::npos);
    }
}
