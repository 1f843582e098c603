#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "amicable/numeric.hpp"

namespace amicable {

/// Sum of all positive divisors, from the factorization. sigma(0) = 0.
Nat sigma(const Nat& n);
Nat sigma(std::uint64_t n);

/// Independent oracle: enumerates d <= sqrt(n), adding d and n/d.
/// Intended for n up to about 10^12. sigma_brute(0) = 0.
Nat sigma_brute(const Nat& n);
Nat sigma_brute(std::uint64_t n);

/// Proper divisor sum s(n) = sigma(n) - n, with s(0) = s(1) = 0.
Nat aliquot_s(const Nat& n);
Nat aliquot_s(std::uint64_t n);

enum class NumberKind { Deficient, Perfect, Abundant };

std::string_view to_string(NumberKind kind);

struct NumberClass {
    NumberKind tag;
    Nat n;
    Nat s_value;
};

/// Throws Error{ZeroInput} for n = 0.
NumberClass classify(const Nat& n);

struct Parallelism {
    bool enabled = false;
    /// 0 selects std::thread::hardware_concurrency().
    unsigned workers = 0;

    unsigned worker_count() const;
};

/// Default cap on sieve entries (2^31). AMICABLE_SIEVE_BUDGET overrides it.
inline constexpr std::uint64_t kDefaultSieveBudget = std::uint64_t{1} << 31;
std::uint64_t sieve_budget();

/// Dense table of s(i) for 0 <= i <= limit.
class SieveTable {
public:
    SieveTable() = default;
    SieveTable(std::uint64_t limit, std::vector<std::uint64_t> s_values)
        : limit_(limit), s_values_(std::move(s_values)) {}

    std::uint64_t limit() const noexcept { return limit_; }
    std::uint64_t s(std::uint64_t i) const { return s_values_[i]; }
    std::uint64_t operator[](std::uint64_t i) const { return s_values_[i]; }
    std::span<const std::uint64_t> s_values() const noexcept { return s_values_; }

private:
    std::uint64_t limit_ = 0;
    std::vector<std::uint64_t> s_values_;
};

/// Additive divisor sieve: every d in 1..limit/2 is added to each proper
/// multiple's slot. Throws Error{LimitTooLarge} when limit + 1 entries exceed
/// the budget, Error{BadParameter} for limit = 0.
SieveTable build_sieve(std::uint64_t limit, Parallelism parallel = {});
SieveTable build_sieve(std::uint64_t limit, std::uint64_t budget, Parallelism parallel);

} // namespace amicable
