#pragma once

#include <optional>
#include <variant>

#include "amicable/numeric.hpp"
#include "amicable/pairs.hpp"

namespace amicable {

/// Thabit ibn Qurra's rule in the shifted index k >= 1 (classical n = k + 1):
///   p = 3*2^k - 1, q = 3*2^(k+1) - 1, r = 9*2^(2k+1) - 1,
///   pair (2^(k+1)*p*q, 2^(k+1)*r) when p, q, r are all prime.
struct ThabitCandidate {
    unsigned k = 0;
    Nat p;
    Nat q;
    Nat r;
    bool p_prime = false;
    bool q_prime = false;
    bool r_prime = false;
    std::optional<NatPair> pair;
    bool verified = false;
    /// Some primality verdict above 2^64 was probabilistic.
    bool probable = false;
};

/// Euler's rule for 1 <= m < n:
///   a = 2^(n-m) + 1, p = 2^m*a - 1, q = 2^n*a - 1, r = 2^(n+m)*a^2 - 1,
///   pair (2^n*p*q, 2^n*r) when p, q, r are all prime.
struct EulerCandidate {
    unsigned m = 0;
    unsigned n = 0;
    Nat a;
    Nat p;
    Nat q;
    Nat r;
    bool p_prime = false;
    bool q_prime = false;
    bool r_prime = false;
    std::optional<NatPair> pair;
    bool verified = false;
    bool probable = false;
};

struct BorhoHypothesis {
    bool breeder_amicable = false;
    bool t_prime = false;
    bool p1_prime = false;
    bool p2_prime = false;
    bool coprime_au_t = false;
    bool coprime_au_p1 = false;
    bool coprime_a_p2 = false;

    bool holds() const noexcept {
        return breeder_amicable && t_prime && p1_prime && p2_prime && coprime_au_t &&
               coprime_au_p1 && coprime_a_p2;
    }
};

/// Borho-Hoffmann breeding from a breeder pair (a*u, a):
///   t = sigma(u), p1 = t^n*(u+1) - 1, p2 = t^n*(u+1)*(t-u) - 1,
///   M = a*u*t^n*p1, N = a*t^n*p2.
/// Subtractions truncate at zero. A candidate where p2 truncated is marked
/// degenerate_subtraction and its p2-dependent conditions are never tested.
struct BorhoCandidate {
    Nat a;
    Nat u;
    unsigned n = 0;
    Nat t;
    Nat p1;
    Nat p2;
    Nat M;
    Nat N;
    BorhoHypothesis hypothesis;
    bool degenerate_subtraction = false;
    std::optional<NatPair> pair;
    bool verified = false;
    bool probable = false;
};

using GeneratorCandidate = std::variant<ThabitCandidate, EulerCandidate, BorhoCandidate>;

/// Throws Error{BadParameter} for k < 1.
ThabitCandidate thabit_candidate(unsigned k);
/// Throws Error{BadParameter} unless 1 <= m < n.
EulerCandidate euler_candidate(unsigned m, unsigned n);
/// Throws Error{BadParameter} for zero arguments and
/// Error{DegenerateSubtraction} if sigma(u) < u.
BorhoCandidate borho_candidate(const Nat& a, const Nat& u, unsigned n);

/// sigma(m) = sigma(n) = m + n, over arbitrary precision via factorization.
/// Throws Error{BadParameter} for zero or equal members.
bool verify_pair_by_sigma(const Nat& m, const Nat& n);

/// (p+1)(q+1) = r+1 for the Thabit components at k.
bool thabit_identity_check(unsigned k);
/// (p+1)(q+1) = r+1 for the Euler components at (m, n).
bool euler_identity_check(unsigned m, unsigned n);
/// Rebuilds t, p1, p2, M, N by an independent route (brute-force sigma,
/// repeated multiplication) and checks the defining identities against
/// borho_candidate's values.
bool borho_structure_check(const Nat& a, const Nat& u, unsigned n);

} // namespace amicable
