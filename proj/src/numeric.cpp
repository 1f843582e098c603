#include "amicable/numeric.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "amicable/error.hpp"

namespace amicable {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::LimitTooLarge: return "LimitTooLarge";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::DegenerateSubtraction: return "DegenerateSubtraction";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Nat nat_from_u64(std::uint64_t v) {
    Nat out;
    mpz_import(out.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
    return out;
}

std::optional<std::uint64_t> to_u64(const Nat& v) {
    if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) {
        return std::nullopt;
    }
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof out, 0, 0, v.get_mpz_t());
    return out;
}

Nat parse_nat(const std::string& text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(),
                                     [](char c) { return c >= '0' && c <= '9'; })) {
        throw Error(ErrorCode::ParseError, "not a natural number: '" + text + "'");
    }
    return Nat(text, 10);
}

std::string to_string(const Nat& v) { return v.get_str(10); }

Nat pow2(unsigned long e) {
    Nat out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
    return out;
}

Nat monus(const Nat& x, const Nat& y) {
    if (y > x) {
        return 0;
    }
    return x - y;
}

Nat gcd(const Nat& a, const Nat& b) {
    Nat out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) {
            result = mulmod(result, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// n odd, n > 2, d * 2^s = n - 1.
bool strong_probable_prime(u64 n, u64 base, u64 d, unsigned s) {
    u64 x = powmod(base, d, n);
    if (x == 1 || x == n - 1) {
        return true;
    }
    for (unsigned r = 1; r < s; ++r) {
        x = mulmod(x, x, n);
        if (x == n - 1) {
            return true;
        }
    }
    return false;
}

// Sufficient for every n < 3.3 * 10^24.
constexpr u64 kDeterministicBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool strong_probable_prime(const Nat& n, const Nat& base, const Nat& d, unsigned long s) {
    const Nat n_minus_1 = n - 1;
    Nat x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) {
        return true;
    }
    for (unsigned long r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == n_minus_1) {
            return true;
        }
    }
    return false;
}

Nat half_mod(Nat x, const Nat& n) {
    if (mpz_odd_p(x.get_mpz_t())) {
        x += n;
    }
    return x / 2 % n;
}

Nat mod_nonneg(const Nat& x, const Nat& n) {
    Nat out;
    mpz_mod(out.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
    return out;
}

// Strong Lucas probable prime test with Selfridge's method A parameters.
// n odd, n > 2, not a perfect square.
bool strong_lucas_probable_prime(const Nat& n) {
    long d_param = 5;
    for (;;) {
        const Nat d_nat(d_param);
        const int j = mpz_jacobi(d_nat.get_mpz_t(), n.get_mpz_t());
        if (j == -1) {
            break;
        }
        if (j == 0 && abs(d_nat) != n) {
            return false;
        }
        d_param = d_param > 0 ? -(d_param + 2) : -d_param + 2;
    }
    const Nat D = mod_nonneg(Nat(d_param), n);
    const Nat P = 1;
    const Nat Q = mod_nonneg(Nat((1 - d_param) / 4), n);

    Nat d = n + 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++s;
    }

    Nat u = 1;
    Nat v = P;
    Nat qk = Q;
    for (long bit = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2)) - 2; bit >= 0; --bit) {
        u = u * v % n;
        v = mod_nonneg(v * v - 2 * qk, n);
        qk = qk * qk % n;
        if (mpz_tstbit(d.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
            const Nat next_u = half_mod(P * u + v, n);
            const Nat next_v = half_mod(D * u + P * v, n);
            u = next_u;
            v = next_v;
            qk = qk * Q % n;
        }
    }
    if (u == 0 || v == 0) {
        return true;
    }
    for (unsigned long r = 1; r < s; ++r) {
        v = mod_nonneg(v * v - 2 * qk, n);
        qk = qk * qk % n;
        if (v == 0) {
            return true;
        }
    }
    return false;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (u64 p : kDeterministicBases) {
        if (n % p == 0) {
            return n == p;
        }
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 base : kDeterministicBases) {
        if (!strong_probable_prime(n, base, d, s)) {
            return false;
        }
    }
    return true;
}

Primality primality(const Nat& n) {
    if (auto small = to_u64(n)) {
        return is_prime(*small) ? Primality::Prime : Primality::Composite;
    }
    for (std::uint32_t p : small_primes()) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            return Primality::Composite;
        }
    }
    Nat d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++s;
    }
    if (!strong_probable_prime(n, Nat(2), d, s)) {
        return Primality::Composite;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        return Primality::Composite;
    }
    if (!strong_lucas_probable_prime(n)) {
        return Primality::Composite;
    }
    for (int i = 1; i <= kExtraMillerRabinRounds; ++i) {
        if (!strong_probable_prime(n, Nat(kDeterministicBases[i]), d, s)) {
            return Primality::Composite;
        }
    }
    return Primality::ProbablePrime;
}

bool is_prime(const Nat& n) { return primality(n) != Primality::Composite; }

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> table = [] {
        std::vector<bool> composite(kSmallPrimeBound, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i < kSmallPrimeBound; ++i) {
            if (composite[i]) {
                continue;
            }
            out.push_back(i);
            for (std::uint32_t j = i * i; j < kSmallPrimeBound; j += i) {
                composite[j] = true;
            }
        }
        return out;
    }();
    return table;
}

Factorization::Factorization(std::vector<PrimePower> factors, Nat value)
    : factors_(std::move(factors)), value_(std::move(value)) {}

Nat Factorization::reconstruct() const {
    Nat out = 1;
    for (const auto& [prime, exponent] : factors_) {
        Nat power;
        mpz_pow_ui(power.get_mpz_t(), prime.get_mpz_t(), exponent);
        out *= power;
    }
    return out;
}

namespace {

// Pollard rho, Brent's variant, on composite odd n with no factor below
// kSmallPrimeBound. Returns a nontrivial divisor.
u64 brent_rho(u64 n) {
    constexpr u64 batch = 128;
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return static_cast<u64>((static_cast<u128>(x) * x + c) % n); };
        u64 y = 2;
        u64 x = y;
        u64 ys = y;
        u64 g = 1;
        u64 q = 1;
        for (u64 r = 1; g == 1; r <<= 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) {
                y = f(y);
            }
            for (u64 k = 0; k < r && g == 1; k += batch) {
                ys = y;
                for (u64 i = 0; i < std::min(batch, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = gcd(q, n);
            }
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

Nat brent_rho(const Nat& n) {
    constexpr unsigned long batch = 128;
    for (unsigned long c = 1;; ++c) {
        auto f = [&](const Nat& x) { return Nat((x * x + c) % n); };
        Nat y = 2;
        Nat x = y;
        Nat ys = y;
        Nat g = 1;
        Nat q = 1;
        for (unsigned long r = 1; g == 1; r <<= 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) {
                y = f(y);
            }
            for (unsigned long k = 0; k < r && g == 1; k += batch) {
                ys = y;
                for (unsigned long i = 0; i < std::min(batch, r - k); ++i) {
                    y = f(y);
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
            }
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

void split_u64(u64 n, std::map<Nat, unsigned>& out) {
    if (n == 1) {
        return;
    }
    if (is_prime(n)) {
        ++out[nat_from_u64(n)];
        return;
    }
    const u64 d = brent_rho(n);
    split_u64(d, out);
    split_u64(n / d, out);
}

void split(const Nat& n, std::map<Nat, unsigned>& out, bool& probabilistic) {
    if (auto small = to_u64(n)) {
        split_u64(*small, out);
        return;
    }
    const Primality p = primality(n);
    if (p != Primality::Composite) {
        probabilistic = probabilistic || p == Primality::ProbablePrime;
        ++out[n];
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        const Nat root = sqrt(n);
        split(root, out, probabilistic);
        split(root, out, probabilistic);
        return;
    }
    const Nat d = brent_rho(n);
    split(d, out, probabilistic);
    split(Nat(n / d), out, probabilistic);
}

Factorization assemble(std::map<Nat, unsigned>& found, Nat value, bool probabilistic) {
    std::vector<PrimePower> factors;
    factors.reserve(found.size());
    for (auto& [prime, exponent] : found) {
        factors.push_back({prime, exponent});
    }
    Factorization out(std::move(factors), std::move(value));
    out.set_probabilistic(probabilistic);
    return out;
}

} // namespace

Factorization factorize(std::uint64_t n) {
    if (n == 0) {
        throw Error(ErrorCode::ZeroInput, "factorize(0)");
    }
    std::map<Nat, unsigned> found;
    u64 rest = n;
    for (std::uint32_t p : small_primes()) {
        if (static_cast<u64>(p) * p > rest) {
            break;
        }
        while (rest % p == 0) {
            rest /= p;
            ++found[Nat(p)];
        }
    }
    split_u64(rest, found);
    return assemble(found, nat_from_u64(n), false);
}

Factorization factorize(const Nat& n) {
    if (sgn(n) <= 0) {
        throw Error(ErrorCode::ZeroInput, "factorize requires n >= 1");
    }
    if (auto small = to_u64(n)) {
        return factorize(*small);
    }
    std::map<Nat, unsigned> found;
    Nat rest = n;
    for (std::uint32_t p : small_primes()) {
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++found[Nat(p)];
        }
    }
    bool probabilistic = false;
    split(rest, found, probabilistic);
    return assemble(found, n, probabilistic);
}

} // namespace amicable
