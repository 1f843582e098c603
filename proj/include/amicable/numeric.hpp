#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace amicable {

/// Arbitrary-precision natural number. Values that fit in 64 bits are routed
/// through native arithmetic internally; callers never see the difference.
using Nat = mpz_class;

Nat nat_from_u64(std::uint64_t v);
std::optional<std::uint64_t> to_u64(const Nat& v);
/// Parses a decimal string. Throws Error{ParseError} on anything else.
Nat parse_nat(const std::string& text);
std::string to_string(const Nat& v);

/// 2^e as a Nat.
Nat pow2(unsigned long e);
/// x - y, clamped at zero (natural-number subtraction).
Nat monus(const Nat& x, const Nat& y);

Nat gcd(const Nat& a, const Nat& b);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

enum class Primality { Composite, Prime, ProbablePrime };

/// Deterministic below 2^64 (Miller-Rabin, first twelve prime bases).
/// Above, BPSW: base-2 strong probable prime test plus strong Lucas test
/// (Selfridge parameters), followed by kExtraMillerRabinRounds fixed bases.
/// Positive answers above 2^64 are reported as ProbablePrime.
Primality primality(const Nat& n);
bool is_prime(const Nat& n);
bool is_prime(std::uint64_t n);

inline constexpr int kExtraMillerRabinRounds = 8;

struct PrimePower {
    Nat prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical prime-power decomposition. Primes strictly increasing; the
/// product of prime^exponent equals value; value 1 has no factors.
class Factorization {
public:
    Factorization() = default;
    Factorization(std::vector<PrimePower> factors, Nat value);

    const std::vector<PrimePower>& factors() const noexcept { return factors_; }
    const Nat& value() const noexcept { return value_; }
    /// True when some factor above 2^64 was accepted as a probable prime.
    bool probabilistic() const noexcept { return probabilistic_; }
    void set_probabilistic(bool p) noexcept { probabilistic_ = p; }

    Nat reconstruct() const;

private:
    std::vector<PrimePower> factors_;
    Nat value_ = 1;
    bool probabilistic_ = false;
};

/// Trial division through a fixed small-prime table, then Pollard rho with
/// Brent cycle detection until every cofactor passes is_prime.
/// Throws Error{ZeroInput} for n = 0.
Factorization factorize(const Nat& n);
Factorization factorize(std::uint64_t n);

/// Primes below kSmallPrimeBound, ascending.
const std::vector<std::uint32_t>& small_primes();
inline constexpr std::uint32_t kSmallPrimeBound = 1000;

} // namespace amicable
