#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "amicable/aliquot.hpp"
#include "amicable/error.hpp"
#include "amicable/pairs.hpp"

using namespace amicable;

namespace {

std::vector<Nat> nats(std::initializer_list<long> values) {
    std::vector<Nat> out;
    for (long v : values) {
        out.emplace_back(v);
    }
    return out;
}

const Nat kCeiling("1000000000000000");

std::uint64_t naive_s(std::uint64_t n) {
    if (n < 2) {
        return 0;
    }
    std::uint64_t total = 0;
    for (std::uint64_t d = 1; d < n; ++d) {
        if (n % d == 0) {
            total += d;
        }
    }
    return total;
}

const std::vector<Nat> kPoulet = nats({12496, 14288, 15472, 14536, 14264});

} // namespace

TEST_CASE("aliquot_sequence examples") {
    const AliquotResult amicable = aliquot_sequence(220, 100, kCeiling);
    CHECK(amicable.outcome == AliquotOutcome::EnteredCycle);
    CHECK(amicable.cycle == nats({220, 284}));
    CHECK(amicable.entry_index == 0);
    CHECK(amicable.trajectory == nats({220, 284}));

    const AliquotResult twelve = aliquot_sequence(12, 100, kCeiling);
    CHECK(twelve.trajectory == nats({12, 16, 15, 9, 4, 3, 1, 0}));
    CHECK(twelve.outcome == AliquotOutcome::ReachedZero);

    const AliquotResult perfect = aliquot_sequence(6, 100, kCeiling);
    CHECK(perfect.outcome == AliquotOutcome::FixedPoint);
    CHECK(perfect.fixed_point == 6);
    CHECK(perfect.cycle.empty());
}

TEST_CASE("trajectories follow s step by step") {
    for (long start : {12, 25, 95, 220, 562, 1064, 12496, 138}) {
        const AliquotResult r = aliquot_sequence(start, 200, kCeiling);
        REQUIRE(r.trajectory.front() == start);
        for (std::size_t i = 0; i + 1 < r.trajectory.size(); ++i) {
            REQUIRE(r.trajectory[i + 1] == aliquot_s(r.trajectory[i]));
        }
        if (r.outcome == AliquotOutcome::FixedPoint) {
            CHECK(aliquot_s(r.fixed_point) == r.fixed_point);
        }
        if (r.outcome == AliquotOutcome::EnteredCycle) {
            CHECK(r.cycle.size() >= 2);
            CHECK(verify_cycle(r.cycle).ok);
        }
    }
}

TEST_CASE("tails into cycles and fixed points") {
    const AliquotResult into_six = aliquot_sequence(25, 100, kCeiling);
    CHECK(into_six.trajectory == nats({25, 6}));
    CHECK(into_six.outcome == AliquotOutcome::FixedPoint);
    CHECK(into_six.fixed_point == 6);

    // 562 -> 284 -> 220 -> 284: enters the amicable pair from a tail.
    const AliquotResult tail = aliquot_sequence(562, 100, kCeiling);
    CHECK(tail.outcome == AliquotOutcome::EnteredCycle);
    CHECK(tail.entry_index == 1);
    CHECK(tail.cycle == nats({284, 220}));
}

TEST_CASE("open-ended sequences stop at the caps") {
    const AliquotResult steps = aliquot_sequence(276, 20, kCeiling);
    CHECK(steps.outcome == AliquotOutcome::StepsExhausted);
    CHECK(steps.trajectory.size() == 21);

    const AliquotResult ceiling = aliquot_sequence(276, 1000, Nat(10'000));
    CHECK(ceiling.outcome == AliquotOutcome::CeilingExceeded);
    CHECK(ceiling.trajectory.back() > 10'000);
    CHECK(ceiling.trajectory[ceiling.trajectory.size() - 2] <= 10'000);
}

TEST_CASE("aliquot_sequence preconditions") {
    CHECK_THROWS_AS(aliquot_sequence(0, 10, kCeiling), Error);
    CHECK_THROWS_AS(aliquot_sequence(10, 0, kCeiling), Error);
    CHECK_THROWS_AS(aliquot_sequence(10, 10, Nat(5)), Error);
    const AliquotResult one = aliquot_sequence(1, 1, Nat(1));
    CHECK(one.trajectory == nats({1, 0}));
    CHECK(one.outcome == AliquotOutcome::ReachedZero);
}

TEST_CASE("verify_cycle examples") {
    CHECK(verify_cycle(kPoulet).ok);
    CHECK(verify_cycle(nats({220, 284})).ok);
    const CycleCheck single = verify_cycle(nats({6}));
    CHECK_FALSE(single.ok);
    CHECK(single.failure == CycleFailure::TooShort);
}

TEST_CASE("verify_cycle reports the first failed condition") {
    CHECK(verify_cycle(nats({220, 0})).failure == CycleFailure::ZeroMember);
    CHECK(verify_cycle(nats({220, 284, 220, 284})).failure == CycleFailure::Duplicate);
    CHECK(verify_cycle(nats({6, 6})).failure == CycleFailure::Duplicate);
    const CycleCheck broken = verify_cycle(nats({12496, 14288, 14536, 15472, 14264}));
    CHECK(broken.failure == CycleFailure::BrokenLink);
    CHECK(broken.index == 1);
    CHECK(verify_cycle({}).failure == CycleFailure::TooShort);
}

TEST_CASE("verify_cycle is rotation invariant") {
    for (const auto& base : {kPoulet, nats({220, 284}), nats({1184, 1210}),
                             nats({12496, 14288, 14536, 15472, 14264})}) {
        const bool expected = verify_cycle(base).ok;
        for (std::size_t j = 0; j < base.size(); ++j) {
            auto rotated = base;
            std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(j), rotated.end());
            CHECK(verify_cycle(rotated).ok == expected);
            CHECK(canonical_rotation(rotated) == canonical_rotation(base));
        }
    }
}

TEST_CASE("find_cycles examples") {
    const auto small = find_cycles(300, 2);
    REQUIRE(small.size() == 1);
    CHECK(small[0].members == nats({220, 284}));

    const auto poulet = find_cycles(13'000, 5);
    CHECK(std::find(poulet.begin(), poulet.end(), SociableCycle{kPoulet}) != poulet.end());

    CHECK(find_cycles(100, 5).empty());
    // Brute-force iteration from every non-perfect start <= 100 never returns
    // to the start in 2..5 steps.
    for (std::uint64_t x = 2; x <= 100; ++x) {
        if (naive_s(x) == x) {
            continue;
        }
        std::uint64_t v = x;
        for (int step = 1; step <= 5 && v != 0 && v <= 6400; ++step) {
            v = naive_s(v);
            if (step >= 2) {
                CHECK(v != x);
            }
        }
    }
}

TEST_CASE("find_cycles respects max_len") {
    const auto short_only = find_cycles(13'000, 4);
    for (const SociableCycle& c : short_only) {
        CHECK(c.length() <= 4);
        CHECK(c.length() == 2);
    }
    CHECK_THROWS_AS(find_cycles(1, 5), Error);
    CHECK_THROWS_AS(find_cycles(100, 1), Error);
    CHECK_THROWS_AS(find_cycles(1000, 5, {}, 1000), Error);
}

TEST_CASE("reported cycles are canonical and valid") {
    const auto cycles = find_cycles(20'000, 6);
    for (const SociableCycle& c : cycles) {
        CHECK(verify_cycle(c.members).ok);
        CHECK(c.members.front() == *std::min_element(c.members.begin(), c.members.end()));
    }
    std::set<std::vector<Nat>> unique;
    for (const SociableCycle& c : cycles) {
        unique.insert(c.members);
    }
    CHECK(unique.size() == cycles.size());
}

TEST_CASE("length-2 cycles correspond to amicable pairs") {
    const std::uint64_t limit = 20'000;
    const auto cycles = find_cycles(limit, 2);
    const SearchReport pairs = search_amicable(limit);
    REQUIRE(cycles.size() == pairs.pairs.size());
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        CHECK(cycles[i].members == std::vector<Nat>{pairs.pairs[i].m, pairs.pairs[i].n});
        CHECK(check_amicable(cycles[i].members[0], cycles[i].members[1]).kind == PairKind::Amicable);
    }
}

TEST_CASE("find_cycles output is independent of scheduling") {
    const auto serial = find_cycles(15'000, 5);
    for (unsigned workers : {2u, 5u}) {
        CHECK(find_cycles(15'000, 5, Parallelism{true, workers}) == serial);
    }
}
