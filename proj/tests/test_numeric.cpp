#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "amicable/error.hpp"
#include "amicable/numeric.hpp"

using namespace amicable;

namespace {

bool prime_by_trial_division(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

Nat random_bits(std::mt19937_64& rng, unsigned bits) {
    Nat out = 0;
    for (unsigned i = 0; i < bits; i += 64) {
        out = out * pow2(64) + nat_from_u64(rng());
    }
    Nat mask = pow2(bits) - 1;
    out &= mask;
    mpz_setbit(out.get_mpz_t(), bits - 1);
    return out;
}

} // namespace

TEST_CASE("gcd examples") {
    CHECK(gcd(Nat(220), Nat(284)) == 4);
    CHECK(gcd(Nat(7), Nat(0)) == 7);
    CHECK(gcd(Nat(48), Nat(75)) == 3);
    CHECK(gcd(Nat(0), Nat(0)) == 0);
    CHECK(gcd(std::uint64_t{220}, std::uint64_t{284}) == 4);
}

TEST_CASE("gcd divides both and absorbs every common divisor") {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::uint64_t> dist(1, 999'999);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::uint64_t a = dist(rng);
        const std::uint64_t b = dist(rng);
        const std::uint64_t g = gcd(a, b);
        REQUIRE(g >= 1);
        CHECK(a % g == 0);
        CHECK(b % g == 0);
        for (std::uint64_t d = 1; d <= std::min<std::uint64_t>(a, 200); ++d) {
            if (a % d == 0 && b % d == 0) {
                CHECK(g % d == 0);
            }
        }
        CHECK(gcd(nat_from_u64(a), nat_from_u64(b)) == nat_from_u64(g));
    }
}

TEST_CASE("is_prime examples") {
    CHECK(is_prime(Nat(71)));
    CHECK_FALSE(is_prime(Nat(287)));
    CHECK_FALSE(is_prime(Nat(1)));
    CHECK_FALSE(is_prime(Nat(0)));
    CHECK(is_prime(Nat(2)));
}

TEST_CASE("is_prime agrees with trial division on [0, 1e5]") {
    for (std::uint64_t n = 0; n <= 100'000; ++n) {
        REQUIRE_MESSAGE(is_prime(n) == prime_by_trial_division(n), n);
    }
}

TEST_CASE("strong pseudoprimes are rejected") {
    CHECK_FALSE(is_prime(std::uint64_t{2047}));
    CHECK_FALSE(is_prime(std::uint64_t{3215031751}));
    CHECK_FALSE(is_prime(std::uint64_t{3825123056546413051ULL}));
    // Strong pseudoprime to every prime base up to 37, above 2^64.
    CHECK(primality(Nat("3317044064679887385961981")) == Primality::Composite);
    CHECK(primality(Nat("318665857834031151167461")) == Primality::Composite);
}

TEST_CASE("primality metadata above 2^64") {
    CHECK(primality(pow2(61) - 1) == Primality::Prime);
    CHECK(primality(pow2(89) - 1) == Primality::ProbablePrime);
    CHECK(primality(pow2(89) + 1) == Primality::Composite);
    CHECK(primality(pow2(127) - 1) == Primality::ProbablePrime);
}

TEST_CASE("big primality agrees with GMP's test") {
    std::mt19937_64 rng(7);
    int primes_seen = 0;
    for (int trial = 0; trial < 400; ++trial) {
        Nat n = random_bits(rng, 65 + static_cast<unsigned>(trial % 140));
        mpz_setbit(n.get_mpz_t(), 0);
        const bool expected = mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
        primes_seen += expected;
        REQUIRE_MESSAGE(is_prime(n) == expected, n.get_str());
    }
    CHECK(primes_seen > 0);
    Nat p;
    mpz_nextprime(p.get_mpz_t(), pow2(100).get_mpz_t());
    CHECK(is_prime(p));
    CHECK_FALSE(is_prime(Nat(p * p)));
}

TEST_CASE("factorize examples") {
    CHECK(factorize(Nat(220)).factors() ==
          std::vector<PrimePower>{{Nat(2), 2}, {Nat(5), 1}, {Nat(11), 1}});
    CHECK(factorize(Nat(284)).factors() == std::vector<PrimePower>{{Nat(2), 2}, {Nat(71), 1}});
    CHECK(factorize(Nat(1)).factors().empty());
    CHECK(factorize(Nat(1)).value() == 1);
    CHECK_THROWS_AS(factorize(Nat(0)), Error);
    CHECK_THROWS_AS(factorize(std::uint64_t{0}), Error);
}

TEST_CASE("factorize reconstructs n on [1, 1e5] with canonical factors") {
    for (std::uint64_t n = 1; n <= 100'000; ++n) {
        const Factorization f = factorize(n);
        REQUIRE(f.reconstruct() == nat_from_u64(n));
        REQUIRE(f.value() == nat_from_u64(n));
        for (std::size_t i = 0; i < f.factors().size(); ++i) {
            REQUIRE(f.factors()[i].exponent >= 1);
            REQUIRE(is_prime(f.factors()[i].prime));
            if (i > 0) {
                REQUIRE(f.factors()[i - 1].prime < f.factors()[i].prime);
            }
        }
    }
}

TEST_CASE("factorize needs rho for large cofactors") {
    const Factorization semiprime = factorize(std::uint64_t{1000000007ULL * 1000000009ULL});
    CHECK(semiprime.factors() ==
          std::vector<PrimePower>{{Nat(1000000007), 1}, {Nat(1000000009), 1}});

    const Nat big = (pow2(61) - 1) * (pow2(31) - 1);
    const Factorization f = factorize(big);
    REQUIRE(f.factors().size() == 2);
    CHECK(f.factors()[0].prime == pow2(31) - 1);
    CHECK(f.factors()[1].prime == pow2(61) - 1);
    CHECK_FALSE(f.probabilistic());

    const Nat square = Nat(1000003) * 1000003 * 1000033;
    CHECK(factorize(square).factors() ==
          std::vector<PrimePower>{{Nat(1000003), 2}, {Nat(1000033), 1}});

    const Factorization mersenne = factorize(Nat(pow2(89) - 1) * 12);
    CHECK(mersenne.probabilistic());
    CHECK(mersenne.reconstruct() == (pow2(89) - 1) * 12);
}

TEST_CASE("factorize round-trips random products of random primes") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        Nat product = 1;
        const int count = 1 + trial % 4;
        for (int i = 0; i < count; ++i) {
            Nat p;
            const Nat start = random_bits(rng, 8 + static_cast<unsigned>(rng() % 28));
            mpz_nextprime(p.get_mpz_t(), start.get_mpz_t());
            product *= p;
        }
        const Factorization f = factorize(product);
        REQUIRE(f.reconstruct() == product);
        for (const auto& pp : f.factors()) {
            REQUIRE(mpz_probab_prime_p(pp.prime.get_mpz_t(), 30) != 0);
        }
    }
}

TEST_CASE("nat helpers") {
    CHECK(to_u64(pow2(64)) == std::nullopt);
    CHECK(to_u64(pow2(64) - 1) == ~std::uint64_t{0});
    CHECK(nat_from_u64(~std::uint64_t{0}) == pow2(64) - 1);
    CHECK(monus(Nat(5), Nat(7)) == 0);
    CHECK(monus(Nat(7), Nat(5)) == 2);
    CHECK(parse_nat("12345678901234567890123") == Nat("12345678901234567890123"));
    CHECK_THROWS_AS(parse_nat("-3"), Error);
    CHECK_THROWS_AS(parse_nat(""), Error);
    CHECK_THROWS_AS(parse_nat("12a"), Error);
}
