#include "amicable/divisors.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

#include "amicable/error.hpp"

namespace amicable {

namespace {

// 1 + p + ... + p^e by multiply-accumulate.
Nat geometric_sum(const Nat& p, unsigned e) {
    Nat acc = 1;
    for (unsigned i = 0; i < e; ++i) {
        acc = acc * p + 1;
    }
    return acc;
}

Nat sigma_of(const Factorization& f) {
    Nat out = 1;
    for (const auto& [prime, exponent] : f.factors()) {
        out *= geometric_sum(prime, exponent);
    }
    return out;
}

} // namespace

Nat sigma(const Nat& n) {
    if (n == 0) {
        return 0;
    }
    return sigma_of(factorize(n));
}

Nat sigma(std::uint64_t n) {
    if (n == 0) {
        return 0;
    }
    return sigma_of(factorize(n));
}

Nat sigma_brute(std::uint64_t n) {
    Nat total = 0;
    for (std::uint64_t d = 1; d <= n / d; ++d) {
        if (n % d != 0) {
            continue;
        }
        const std::uint64_t partner = n / d;
        total += nat_from_u64(d);
        if (partner != d) {
            total += nat_from_u64(partner);
        }
    }
    return total;
}

Nat sigma_brute(const Nat& n) {
    if (auto small = to_u64(n)) {
        return sigma_brute(*small);
    }
    Nat total = 0;
    for (Nat d = 1; d * d <= n; ++d) {
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            const Nat partner = n / d;
            total += d;
            if (partner != d) {
                total += partner;
            }
        }
    }
    return total;
}

Nat aliquot_s(const Nat& n) {
    if (n <= 1) {
        return 0;
    }
    return sigma(n) - n;
}

Nat aliquot_s(std::uint64_t n) {
    if (n <= 1) {
        return 0;
    }
    return sigma(n) - nat_from_u64(n);
}

std::string_view to_string(NumberKind kind) {
    switch (kind) {
    case NumberKind::Deficient: return "Deficient";
    case NumberKind::Perfect: return "Perfect";
    case NumberKind::Abundant: return "Abundant";
    }
    return "Unknown";
}

NumberClass classify(const Nat& n) {
    if (n == 0) {
        throw Error(ErrorCode::ZeroInput, "classify(0)");
    }
    Nat s = aliquot_s(n);
    const NumberKind tag = s < n ? NumberKind::Deficient
                         : s == n ? NumberKind::Perfect
                                  : NumberKind::Abundant;
    return {tag, n, std::move(s)};
}

unsigned Parallelism::worker_count() const {
    if (!enabled) {
        return 1;
    }
    if (workers != 0) {
        return workers;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t sieve_budget() {
    if (const char* env = std::getenv("AMICABLE_SIEVE_BUDGET")) {
        try {
            if (auto v = to_u64(parse_nat(env))) {
                return *v;
            }
        } catch (const Error&) {
        }
    }
    return kDefaultSieveBudget;
}

SieveTable build_sieve(std::uint64_t limit, Parallelism parallel) {
    return build_sieve(limit, sieve_budget(), parallel);
}

SieveTable build_sieve(std::uint64_t limit, std::uint64_t budget, Parallelism parallel) {
    if (limit == 0) {
        throw Error(ErrorCode::BadParameter, "sieve limit must be >= 1");
    }
    if (limit >= budget) {
        throw Error(ErrorCode::LimitTooLarge,
                    "sieve of " + std::to_string(limit) + " exceeds budget of " +
                        std::to_string(budget) + " entries");
    }
    std::vector<std::uint64_t> s(limit + 1, 0);

    // Each worker owns the slots [lo, hi] and adds every divisor d <= hi/2
    // to the proper multiples of d that fall inside its range.
    auto fill = [&s](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t d = 1; d <= hi / 2; ++d) {
            std::uint64_t first = std::max(2 * d, (lo + d - 1) / d * d);
            for (std::uint64_t k = first; k <= hi; k += d) {
                s[k] += d;
            }
        }
    };

    const std::uint64_t workers = std::min<std::uint64_t>(parallel.worker_count(), limit);
    if (workers <= 1) {
        fill(0, limit);
    } else {
        std::vector<std::jthread> threads;
        const std::uint64_t chunk = (limit + 1 + workers - 1) / workers;
        for (std::uint64_t lo = 0; lo <= limit; lo += chunk) {
            const std::uint64_t hi = std::min(limit, lo + chunk - 1);
            threads.emplace_back(fill, lo, hi);
        }
    }
    return SieveTable(limit, std::move(s));
}

} // namespace amicable
