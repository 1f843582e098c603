#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "amicable/divisors.hpp"
#include "amicable/numeric.hpp"

namespace amicable {

enum class PairKind { Amicable, Betrothed, Neither };
enum class GuardFailure { ZeroMember, EqualMembers };

std::string_view to_string(PairKind kind);
std::string_view to_string(GuardFailure failure);

struct PairVerdict {
    Nat m;
    Nat n;
    /// Zero when a guard failed and s was never evaluated.
    Nat s_m;
    Nat s_n;
    PairKind kind = PairKind::Neither;
    std::vector<GuardFailure> guard_failures;

    friend bool operator==(const PairVerdict&, const PairVerdict&) = default;
};

/// s(m) = n and s(n) = m with m, n nonzero and distinct. Guards are checked
/// before any divisor sum is computed.
PairVerdict check_amicable(const Nat& m, const Nat& n);
/// s(m) = n + 1 and s(n) = m + 1 with m, n nonzero and distinct.
PairVerdict check_betrothed(const Nat& m, const Nat& n);

/// The amicable partner of n, if there is one.
std::optional<Nat> is_amicable_number(const Nat& n);

enum class Oracle { Sieve, Direct };
std::string_view to_string(Oracle oracle);

struct NatPair {
    Nat m;
    Nat n;

    friend bool operator==(const NatPair&, const NatPair&) = default;
};

struct SearchReport {
    Nat limit;
    /// m < n, sorted by m, each unordered pair once.
    std::vector<NatPair> pairs;
    bool all_even = true;
    /// Minimum gcd over the pairs; 0 when there are none.
    Nat min_gcd;
    Oracle oracle = Oracle::Sieve;
    /// Amicable or Betrothed, according to the search that produced it.
    PairKind kind = PairKind::Amicable;

    friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

struct SearchOptions {
    Oracle oracle = Oracle::Sieve;
    Parallelism parallel;
    std::uint64_t sieve_budget = amicable::sieve_budget();
};

/// All amicable pairs (m, n), m < n, with m <= limit. The partner n may lie
/// above limit. Every pair is re-verified with sigma_brute before it is kept.
/// Throws Error{BadParameter} for limit < 2, Error{LimitTooLarge} from the
/// sieve.
SearchReport search_amicable(std::uint64_t limit, const SearchOptions& options = {});
/// Same contract as search_amicable under the betrothed condition.
SearchReport search_betrothed(std::uint64_t limit, const SearchOptions& options = {});

struct AuditResult {
    bool all_even = true;
    Nat min_gcd;
    bool coprime_found = false;

    friend bool operator==(const AuditResult&, const AuditResult&) = default;
};

/// Parity and coprimality audit over the pairs of a report. Recomputes from
/// the pairs rather than trusting the report's stored flags.
AuditResult audit(const SearchReport& report);

/// Power of ten that the product of a coprime amicable pair is known (from
/// published exhaustive searches) to exceed. Metadata only; nothing here
/// computes or asserts it.
inline constexpr unsigned kCoprimeSearchBoundExponent = 65;

} // namespace amicable
