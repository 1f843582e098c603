#include "amicable/pairs.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "amicable/error.hpp"

namespace amicable {

std::string_view to_string(PairKind kind) {
    switch (kind) {
    case PairKind::Amicable: return "Amicable";
    case PairKind::Betrothed: return "Betrothed";
    case PairKind::Neither: return "Neither";
    }
    return "Unknown";
}

std::string_view to_string(GuardFailure failure) {
    switch (failure) {
    case GuardFailure::ZeroMember: return "ZeroMember";
    case GuardFailure::EqualMembers: return "EqualMembers";
    }
    return "Unknown";
}

std::string_view to_string(Oracle oracle) {
    switch (oracle) {
    case Oracle::Sieve: return "Sieve";
    case Oracle::Direct: return "Direct";
    }
    return "Unknown";
}

namespace {

// offset 0 is the amicable condition, offset 1 the betrothed one.
PairVerdict check_with_offset(const Nat& m, const Nat& n, int offset, PairKind success) {
    PairVerdict v{m, n, 0, 0, PairKind::Neither, {}};
    if (m == 0 || n == 0) {
        v.guard_failures.push_back(GuardFailure::ZeroMember);
    }
    if (m == n) {
        v.guard_failures.push_back(GuardFailure::EqualMembers);
    }
    if (!v.guard_failures.empty()) {
        return v;
    }
    v.s_m = aliquot_s(m);
    v.s_n = aliquot_s(n);
    if (v.s_m == n + offset && v.s_n == m + offset) {
        v.kind = success;
    }
    return v;
}

Nat proper_sum_brute(const Nat& x) { return x <= 1 ? Nat(0) : Nat(sigma_brute(x) - x); }

} // namespace

PairVerdict check_amicable(const Nat& m, const Nat& n) {
    return check_with_offset(m, n, 0, PairKind::Amicable);
}

PairVerdict check_betrothed(const Nat& m, const Nat& n) {
    return check_with_offset(m, n, 1, PairKind::Betrothed);
}

std::optional<Nat> is_amicable_number(const Nat& n) {
    Nat partner = aliquot_s(n);
    if (partner == 0 || partner == n) {
        return std::nullopt;
    }
    if (aliquot_s(partner) != n) {
        return std::nullopt;
    }
    return partner;
}

namespace {

// Runs body(lo, hi) over [2, limit] split into contiguous ranges, and
// concatenates the per-range results in range order.
std::vector<NatPair> partitioned(std::uint64_t limit, const Parallelism& parallel,
                                 const std::function<std::vector<NatPair>(std::uint64_t, std::uint64_t)>& body) {
    const std::uint64_t workers =
        std::min<std::uint64_t>(parallel.worker_count(), limit - 1);
    if (workers <= 1) {
        return body(2, limit);
    }
    const std::uint64_t span = limit - 1;
    const std::uint64_t chunk = (span + workers - 1) / workers;
    std::vector<std::vector<NatPair>> parts;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
    for (std::uint64_t lo = 2; lo <= limit; lo += chunk) {
        ranges.emplace_back(lo, std::min(limit, lo + chunk - 1));
    }
    parts.resize(ranges.size());
    {
        std::vector<std::jthread> threads;
        for (std::size_t i = 0; i < ranges.size(); ++i) {
            threads.emplace_back([&, i] { parts[i] = body(ranges[i].first, ranges[i].second); });
        }
    }
    std::vector<NatPair> out;
    for (auto& part : parts) {
        std::move(part.begin(), part.end(), std::back_inserter(out));
    }
    return out;
}

SearchReport finish_report(std::uint64_t limit, std::vector<NatPair> pairs, Oracle oracle,
                           PairKind kind) {
    std::sort(pairs.begin(), pairs.end(), [](const NatPair& a, const NatPair& b) { return a.m < b.m; });
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    SearchReport report{nat_from_u64(limit), std::move(pairs), true, 0, oracle, kind};
    const AuditResult a = audit(report);
    report.all_even = a.all_even;
    report.min_gcd = a.min_gcd;
    return report;
}

void check_limit(std::uint64_t limit) {
    if (limit < 2) {
        throw Error(ErrorCode::BadParameter, "search limit must be >= 2");
    }
}

} // namespace

SearchReport search_amicable(std::uint64_t limit, const SearchOptions& options) {
    check_limit(limit);
    SieveTable table;
    if (options.oracle == Oracle::Sieve) {
        table = build_sieve(limit, options.sieve_budget, options.parallel);
    }
    auto s_of = [&](std::uint64_t x) -> Nat {
        if (options.oracle == Oracle::Sieve) {
            return nat_from_u64(table[x]);
        }
        return aliquot_s(x);
    };
    auto s_of_partner = [&](const Nat& x) -> Nat {
        if (options.oracle == Oracle::Sieve) {
            if (auto small = to_u64(x); small && *small <= limit) {
                return nat_from_u64(table[*small]);
            }
        }
        return aliquot_s(x);
    };

    auto body = [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<NatPair> found;
        for (std::uint64_t m = lo; m <= hi; ++m) {
            const Nat mm = nat_from_u64(m);
            const Nat n = s_of(m);
            if (n <= mm) {
                continue;
            }
            if (s_of_partner(n) != mm) {
                continue;
            }
            if (proper_sum_brute(mm) == n && proper_sum_brute(n) == mm) {
                found.push_back({mm, n});
            }
        }
        return found;
    };
    return finish_report(limit, partitioned(limit, options.parallel, body), options.oracle,
                         PairKind::Amicable);
}

SearchReport search_betrothed(std::uint64_t limit, const SearchOptions& options) {
    check_limit(limit);
    SieveTable table;
    if (options.oracle == Oracle::Sieve) {
        table = build_sieve(limit, options.sieve_budget, options.parallel);
    }
    auto s_of = [&](std::uint64_t x) -> Nat {
        if (options.oracle == Oracle::Sieve) {
            return nat_from_u64(table[x]);
        }
        return aliquot_s(x);
    };
    auto s_of_partner = [&](const Nat& x) -> Nat {
        if (options.oracle == Oracle::Sieve) {
            if (auto small = to_u64(x); small && *small <= limit) {
                return nat_from_u64(table[*small]);
            }
        }
        return aliquot_s(x);
    };

    auto body = [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<NatPair> found;
        for (std::uint64_t m = lo; m <= hi; ++m) {
            const Nat mm = nat_from_u64(m);
            const Nat s_m = s_of(m);
            if (s_m <= mm + 1) {
                continue;
            }
            const Nat n = s_m - 1;
            if (s_of_partner(n) != mm + 1) {
                continue;
            }
            if (proper_sum_brute(mm) == n + 1 && proper_sum_brute(n) == mm + 1) {
                found.push_back({mm, n});
            }
        }
        return found;
    };
    return finish_report(limit, partitioned(limit, options.parallel, body), options.oracle,
                         PairKind::Betrothed);
}

AuditResult audit(const SearchReport& report) {
    AuditResult out{true, 0, false};
    for (const auto& [m, n] : report.pairs) {
        if (mpz_odd_p(m.get_mpz_t()) || mpz_odd_p(n.get_mpz_t())) {
            out.all_even = false;
        }
        const Nat g = gcd(m, n);
        if (out.min_gcd == 0 || g < out.min_gcd) {
            out.min_gcd = g;
        }
        if (g == 1) {
            out.coprime_found = true;
        }
    }
    return out;
}

} // namespace amicable
