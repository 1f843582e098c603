#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "amicable/divisors.hpp"
#include "amicable/numeric.hpp"

namespace amicable {

enum class AliquotOutcome { ReachedZero, FixedPoint, EnteredCycle, CeilingExceeded, StepsExhausted };

std::string_view to_string(AliquotOutcome outcome);

/// Orbit of s from `start`. trajectory[i + 1] = s(trajectory[i]); the
/// sequence stops before repeating a value, so a fixed point or cycle is
/// recorded once. ReachedZero and CeilingExceeded keep the final value.
struct AliquotResult {
    Nat start;
    std::vector<Nat> trajectory;
    AliquotOutcome outcome = AliquotOutcome::StepsExhausted;
    /// FixedPoint: the perfect value.
    Nat fixed_point;
    /// EnteredCycle: cycle members in visiting order, cycle length >= 2.
    std::vector<Nat> cycle;
    /// EnteredCycle: index in trajectory where the cycle begins.
    std::size_t entry_index = 0;

    friend bool operator==(const AliquotResult&, const AliquotResult&) = default;
};

inline constexpr std::uint64_t kDefaultMaxSteps = 100;

/// Throws Error{BadParameter} unless start >= 1, max_steps >= 1 and
/// ceiling >= start.
AliquotResult aliquot_sequence(const Nat& start, std::uint64_t max_steps, const Nat& ceiling);

enum class CycleFailure { None, TooShort, ZeroMember, Duplicate, BrokenLink };

std::string_view to_string(CycleFailure failure);

struct CycleCheck {
    bool ok = false;
    CycleFailure failure = CycleFailure::None;
    /// BrokenLink: index i with s(members[i]) != members[(i + 1) % len].
    std::size_t index = 0;

    explicit operator bool() const noexcept { return ok; }
};

/// Length >= 2, no zero member, no duplicates, and s maps each member to
/// the next one cyclically. Reports the first condition that fails.
CycleCheck verify_cycle(const std::vector<Nat>& members);

struct SociableCycle {
    /// Rotated so the minimum member comes first.
    std::vector<Nat> members;

    std::size_t length() const noexcept { return members.size(); }

    friend bool operator==(const SociableCycle&, const SociableCycle&) = default;
};

/// Rotation placing the minimum element first.
std::vector<Nat> canonical_rotation(std::vector<Nat> members);

/// s is tabulated up to this multiple of the start bound.
inline constexpr std::uint64_t kCycleValueFactor = 64;

/// Cycles of length 2..max_len whose minimum member is <= limit, found by
/// walking s from every start <= limit for at most max_len steps. Values
/// above kCycleValueFactor * limit are stepped with aliquot_s directly.
/// Sorted by minimum member.
/// Throws Error{BadParameter} for limit < 2 or max_len < 2 and
/// Error{LimitTooLarge} when the sieve table exceeds the budget.
std::vector<SociableCycle> find_cycles(std::uint64_t limit, std::size_t max_len,
                                       Parallelism parallel = {},
                                       std::uint64_t budget = sieve_budget());

} // namespace amicable
