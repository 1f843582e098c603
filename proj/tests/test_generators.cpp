#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "amicable/error.hpp"
#include "amicable/generators.hpp"

using namespace amicable;

TEST_CASE("thabit_candidate examples") {
    const ThabitCandidate k1 = thabit_candidate(1);
    CHECK(k1.p == 5);
    CHECK(k1.q == 11);
    CHECK(k1.r == 71);
    REQUIRE(k1.pair.has_value());
    CHECK(k1.pair->m == 220);
    CHECK(k1.pair->n == 284);
    CHECK(k1.verified);

    const ThabitCandidate k2 = thabit_candidate(2);
    CHECK(k2.r == 287);
    CHECK(k2.p_prime);
    CHECK(k2.q_prime);
    CHECK_FALSE(k2.r_prime);
    CHECK_FALSE(k2.pair.has_value());
    CHECK_FALSE(k2.verified);

    const ThabitCandidate k3 = thabit_candidate(3);
    CHECK(k3.p == 23);
    CHECK(k3.q == 47);
    CHECK(k3.r == 1151);
    REQUIRE(k3.pair.has_value());
    CHECK(*k3.pair == NatPair{17296, 18416});
    CHECK(k3.verified);

    CHECK_THROWS_AS(thabit_candidate(0), Error);
}

TEST_CASE("thabit sweep gates exactly at k = 1, 3, 6 below 10") {
    for (unsigned k = 1; k <= 9; ++k) {
        const ThabitCandidate c = thabit_candidate(k);
        const bool expected = k == 1 || k == 3 || k == 6;
        CHECK_MESSAGE(c.pair.has_value() == expected, k);
        CHECK(c.verified == expected);
    }
    CHECK(*thabit_candidate(6).pair == NatPair{9363584, 9437056});
}

TEST_CASE("euler_candidate examples") {
    const EulerCandidate e18 = euler_candidate(1, 8);
    CHECK(e18.a == 129);
    CHECK(e18.p == 257);
    CHECK(e18.q == 33023);
    CHECK(e18.r == 8520191);
    REQUIRE(e18.pair.has_value());
    CHECK(*e18.pair == NatPair{Nat("2172649216"), Nat("2181168896")});
    CHECK(e18.verified);
    CHECK_FALSE(e18.probable);

    const EulerCandidate e12 = euler_candidate(1, 2);
    CHECK(e12.a == 3);
    CHECK(*e12.pair == *thabit_candidate(1).pair);

    const EulerCandidate e23 = euler_candidate(2, 3);
    CHECK(e23.a == 3);
    CHECK(e23.p == 11);
    CHECK(e23.q == 23);
    CHECK(e23.r == 287);
    CHECK_FALSE(e23.r_prime);
    CHECK_FALSE(e23.pair.has_value());

    CHECK_THROWS_AS(euler_candidate(0, 3), Error);
    CHECK_THROWS_AS(euler_candidate(3, 3), Error);
    CHECK_THROWS_AS(euler_candidate(4, 3), Error);
}

TEST_CASE("euler rule with n - m = 1 reproduces thabit") {
    for (unsigned m = 1; m <= 20; ++m) {
        const EulerCandidate e = euler_candidate(m, m + 1);
        const ThabitCandidate t = thabit_candidate(m);
        CHECK(e.p == t.p);
        CHECK(e.q == t.q);
        CHECK(e.r == t.r);
        CHECK(e.pair == t.pair);
        CHECK(e.verified == t.verified);
    }
}

TEST_CASE("verify_pair_by_sigma examples") {
    CHECK(verify_pair_by_sigma(220, 284));
    CHECK(verify_pair_by_sigma(2620, 2924));
    CHECK_FALSE(verify_pair_by_sigma(220, 285));
    CHECK_THROWS_AS(verify_pair_by_sigma(0, 284), Error);
    CHECK_THROWS_AS(verify_pair_by_sigma(220, 220), Error);
}

TEST_CASE("key identities") {
    CHECK(thabit_identity_check(1));
    CHECK(thabit_identity_check(10));
    CHECK(thabit_identity_check(30));
    for (unsigned k = 1; k <= 64; ++k) {
        CHECK(thabit_identity_check(k));
    }
    CHECK(euler_identity_check(1, 8));
    CHECK(euler_identity_check(2, 3));
    CHECK(euler_identity_check(5, 9));
    for (unsigned n = 2; n <= 32; ++n) {
        for (unsigned m = 1; m < n; ++m) {
            CHECK(euler_identity_check(m, n));
        }
    }
    CHECK_THROWS_AS(euler_identity_check(3, 2), Error);
    CHECK_THROWS_AS(thabit_identity_check(0), Error);
}

TEST_CASE("thabit sigma splits over the coprime factors") {
    for (unsigned k = 1; k <= 40; ++k) {
        const ThabitCandidate c = thabit_candidate(k);
        if (!c.verified) {
            continue;
        }
        const Nat lhs = sigma(pow2(k + 1)) * (c.p + 1) * (c.q + 1);
        CHECK(lhs == sigma(c.pair->m));
        CHECK(sigma(pow2(k + 1)) == pow2(k + 2) - 1);
    }
}

TEST_CASE("generated pairs pass both characterizations") {
    std::vector<NatPair> pairs;
    for (unsigned k = 1; k <= 12; ++k) {
        if (auto c = thabit_candidate(k); c.verified) {
            pairs.push_back(*c.pair);
        }
    }
    pairs.push_back(*euler_candidate(1, 8).pair);
    CHECK(pairs.size() == 4);
    for (const auto& [m, n] : pairs) {
        CHECK(check_amicable(m, n).kind == PairKind::Amicable);
        CHECK(verify_pair_by_sigma(m, n));
    }
}

TEST_CASE("borho_candidate examples") {
    const BorhoCandidate c = borho_candidate(3, 4, 1);
    CHECK(c.t == 7);
    CHECK(c.p1 == 34);
    CHECK(c.p2 == 104);
    CHECK(c.M == 2856);
    CHECK(c.N == 2184);
    CHECK(c.hypothesis.t_prime);
    CHECK_FALSE(c.hypothesis.p1_prime);
    CHECK_FALSE(c.hypothesis.holds());
    CHECK_FALSE(c.pair.has_value());

    const BorhoCandidate unit = borho_candidate(1, 1, 1);
    CHECK(unit.t == 1);
    CHECK_FALSE(unit.hypothesis.t_prime);
    CHECK(unit.degenerate_subtraction);
    CHECK(unit.p2 == 0);
    CHECK_FALSE(unit.hypothesis.p2_prime);
    CHECK_FALSE(unit.pair.has_value());

    const BorhoCandidate same = borho_candidate(220, 1, 1);
    CHECK_FALSE(same.hypothesis.breeder_amicable);
    CHECK_FALSE(same.pair.has_value());

    CHECK_THROWS_AS(borho_candidate(0, 4, 1), Error);
    CHECK_THROWS_AS(borho_candidate(3, 0, 1), Error);
    CHECK_THROWS_AS(borho_candidate(3, 4, 0), Error);
}

TEST_CASE("borho hypothesis flags are computed independently") {
    const BorhoCandidate c = borho_candidate(2, 9, 2);
    CHECK(c.t == 13);
    CHECK(c.p1 == 1689);
    CHECK(c.p2 == 6759);
    CHECK(c.M == 5137938);
    CHECK(c.N == 2284542);
    CHECK(c.hypothesis.t_prime);
    CHECK(c.hypothesis.coprime_au_t == (gcd(Nat(18), Nat(13)) == 1));
    CHECK(c.hypothesis.coprime_au_p1 == (gcd(Nat(18), Nat(1689)) == 1));
    CHECK(c.hypothesis.coprime_a_p2 == (gcd(Nat(2), Nat(6759)) == 1));
    CHECK(c.hypothesis.p1_prime == is_prime(Nat(1689)));
    CHECK(c.hypothesis.p2_prime == is_prime(Nat(6759)));
}

TEST_CASE("borho_structure_check examples and random sweep") {
    CHECK(borho_structure_check(3, 4, 1));
    CHECK(borho_structure_check(1, 1, 1));
    CHECK(borho_structure_check(2, 9, 2));

    std::mt19937_64 rng(1747);
    for (int i = 0; i < 200; ++i) {
        const Nat a = nat_from_u64(1 + rng() % 5000);
        const Nat u = nat_from_u64(1 + rng() % 5000);
        const unsigned n = 1 + static_cast<unsigned>(rng() % 3);
        CHECK(borho_structure_check(a, u, n));
    }
}
