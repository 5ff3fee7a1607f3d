#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "ntverify/equidist.hpp"

using namespace ntv;

namespace {

bool trial_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("sieve matches trial division up to 1e4") {
    PrimeTable t = sieve_primes(10000);
    for (i64 n = 0; n <= 10000; ++n) CHECK(t.is_prime(n) == trial_prime(n));
}

TEST_CASE("prime counts and AP counts") {
    PrimeTable t = sieve_primes(100000);
    CHECK(t.prime_count(10) == 4);
    CHECK(t.prime_count(100) == 25);
    CHECK(t.prime_count(100000) == 9592);
    CHECK(t.count_in_ap(10, 2, 1) == 3);  // 3, 5, 7
    CHECK(t.count_in_ap(10, 1, 0) == 4);
    CHECK(t.count_in_ap(100, 4, 1) + t.count_in_ap(100, 4, 3) + 1 == 25);  // +1 for p=2
}

TEST_CASE("PrimeTable bounds") {
    CHECK_THROWS_AS((void)sieve_primes(1), std::invalid_argument);
    CHECK_THROWS_AS((void)sieve_primes(kPrimeLimitCap + 1), std::invalid_argument);
    PrimeTable t = sieve_primes(100);
    CHECK_THROWS_AS((void)t.prime_count(101), std::invalid_argument);
}

TEST_CASE("enumerate_smooth_squarefree") {
    auto a = enumerate_smooth_squarefree(3, 10);
    CHECK(a.moduli == std::vector<i64>{1, 2});
    auto b = enumerate_smooth_squarefree(10, 30);
    CHECK(b.moduli == std::vector<i64>{1, 2, 3, 5, 6, 7, 10, 14, 15, 21, 30});
    for (i64 q : b.moduli) {
        // squarefree and 10-smooth by construction
        for (i64 p = 2; p * p <= q; ++p)
            if (q % p == 0) CHECK((q / p) % p != 0);
        i64 rest = q;
        for (i64 p = 2; p < 10; ++p)
            while (rest % p == 0) rest /= p;
        CHECK(rest == 1);
    }
    CHECK_THROWS_AS((void)enumerate_smooth_squarefree(1.5, 10), std::invalid_argument);
}

TEST_CASE("phi_squarefree matches direct coprime counting") {
    auto mods = enumerate_smooth_squarefree(20, 10000);
    for (i64 q : mods.moduli) {
        i64 direct = 0;
        for (i64 r = 1; r <= q; ++r)
            if (std::gcd(r, q) == 1) ++direct;
        CHECK(phi_squarefree(q) == direct);
    }
}

TEST_CASE("partition: residue classes of primes partition pi(x)") {
    PrimeTable t = sieve_primes(10000);
    const i64 pix = t.prime_count(10000);
    for (i64 q = 1; q <= 30; ++q) {
        i64 sum = 0;
        for (i64 a = 0; a < q; ++a) sum += t.count_in_ap(10000, q, a);
        CHECK(sum == pix);
    }
}

TEST_CASE("discrepancy_table: small exact rows") {
    // x=100, theta/delta chosen so moduli = {1, 2}; 24 odd primes <= 100,
    // phi(2) = 1, so the q = 2 row has zero discrepancy
    auto rep = discrepancy_table(100, 0.55, 0.2, 1, 1);
    REQUIRE(rep.rows.size() == 2);
    CHECK(rep.rows[0].q == 1);
    CHECK(rep.rows[0].discrepancy == 0.0);
    CHECK(rep.rows[1].q == 2);
    CHECK(rep.rows[1].count_in_class == 24);
    CHECK(rep.rows[1].main_term == doctest::Approx(24.0));
    CHECK(rep.rows[1].discrepancy == doctest::Approx(0.0));
}

TEST_CASE("discrepancy_table: parameter validation") {
    CHECK_THROWS_AS((void)discrepancy_table(kPrimeLimitCap + 1, 0.5, 0.1, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)discrepancy_table(1000, 0.56, 0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)discrepancy_table(1000, 0.5, 0.21, 1), std::invalid_argument);
}

TEST_CASE("discrepancy_table: deterministic CSV across worker counts") {
    auto r1 = discrepancy_table(100000, 0.525, 0.15, 1, 1);
    auto r3 = discrepancy_table(100000, 0.525, 0.15, 1, 3);
    auto r8 = discrepancy_table(100000, 0.525, 0.15, 1, 8);
    CHECK(to_csv(r1) == to_csv(r3));
    CHECK(to_csv(r1) == to_csv(r8));
    CHECK(r1.total < r1.trivial_bound);
    CHECK(r1.rows.size() > 4);  // several smooth moduli at these parameters
}

TEST_CASE("discrepancy_table: moduli sharing a factor with a are skipped") {
    auto rep = discrepancy_table(1000, 0.5, 0.15, 2, 1);
    for (const auto& row : rep.rows) CHECK(std::gcd(row.q, rep.a) == 1);
}
