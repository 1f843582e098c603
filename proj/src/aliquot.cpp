#include "amicable/aliquot.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <thread>

#include "amicable/error.hpp"

namespace amicable {

std::string_view to_string(AliquotOutcome outcome) {
    switch (outcome) {
    case AliquotOutcome::ReachedZero: return "ReachedZero";
    case AliquotOutcome::FixedPoint: return "FixedPoint";
    case AliquotOutcome::EnteredCycle: return "EnteredCycle";
    case AliquotOutcome::CeilingExceeded: return "CeilingExceeded";
    case AliquotOutcome::StepsExhausted: return "StepsExhausted";
    }
    return "Unknown";
}

std::string_view to_string(CycleFailure failure) {
    switch (failure) {
    case CycleFailure::None: return "None";
    case CycleFailure::TooShort: return "TooShort";
    case CycleFailure::ZeroMember: return "ZeroMember";
    case CycleFailure::Duplicate: return "Duplicate";
    case CycleFailure::BrokenLink: return "BrokenLink";
    }
    return "Unknown";
}

AliquotResult aliquot_sequence(const Nat& start, std::uint64_t max_steps, const Nat& ceiling) {
    if (start < 1) {
        throw Error(ErrorCode::BadParameter, "aliquot start must be >= 1");
    }
    if (max_steps < 1) {
        throw Error(ErrorCode::BadParameter, "max_steps must be >= 1");
    }
    if (ceiling < start) {
        throw Error(ErrorCode::BadParameter, "ceiling must be >= start");
    }

    AliquotResult result;
    result.start = start;
    result.trajectory.push_back(start);
    std::map<Nat, std::size_t> seen{{start, 0}};

    for (std::uint64_t step = 0; step < max_steps; ++step) {
        const Nat& current = result.trajectory.back();
        Nat next = aliquot_s(current);
        if (next == 0) {
            result.trajectory.push_back(0);
            result.outcome = AliquotOutcome::ReachedZero;
            return result;
        }
        if (next == current) {
            result.fixed_point = current;
            result.outcome = AliquotOutcome::FixedPoint;
            return result;
        }
        if (auto it = seen.find(next); it != seen.end()) {
            result.entry_index = it->second;
            result.cycle.assign(result.trajectory.begin() + static_cast<std::ptrdiff_t>(it->second),
                                result.trajectory.end());
            result.outcome = AliquotOutcome::EnteredCycle;
            return result;
        }
        const bool over = next > ceiling;
        seen.emplace(next, result.trajectory.size());
        result.trajectory.push_back(std::move(next));
        if (over) {
            result.outcome = AliquotOutcome::CeilingExceeded;
            return result;
        }
    }
    result.outcome = AliquotOutcome::StepsExhausted;
    return result;
}

CycleCheck verify_cycle(const std::vector<Nat>& members) {
    if (members.size() < 2) {
        return {false, CycleFailure::TooShort, 0};
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i] == 0) {
            return {false, CycleFailure::ZeroMember, i};
        }
    }
    std::set<Nat> distinct;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (!distinct.insert(members[i]).second) {
            return {false, CycleFailure::Duplicate, i};
        }
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (aliquot_s(members[i]) != members[(i + 1) % members.size()]) {
            return {false, CycleFailure::BrokenLink, i};
        }
    }
    return {true, CycleFailure::None, 0};
}

std::vector<Nat> canonical_rotation(std::vector<Nat> members) {
    if (members.empty()) {
        return members;
    }
    std::rotate(members.begin(), std::min_element(members.begin(), members.end()), members.end());
    return members;
}

std::vector<SociableCycle> find_cycles(std::uint64_t limit, std::size_t max_len,
                                       Parallelism parallel, std::uint64_t budget) {
    if (limit < 2) {
        throw Error(ErrorCode::BadParameter, "cycle search limit must be >= 2");
    }
    if (max_len < 2) {
        throw Error(ErrorCode::BadParameter, "max_len must be >= 2");
    }
    if (limit > std::numeric_limits<std::uint64_t>::max() / kCycleValueFactor) {
        throw Error(ErrorCode::LimitTooLarge, "value cap overflows 64 bits");
    }
    const std::uint64_t cap = limit * kCycleValueFactor;
    const SieveTable table = build_sieve(cap, budget, parallel);

    using Members = std::vector<std::uint64_t>;
    auto walk_range = [&](std::uint64_t lo, std::uint64_t hi) {
        std::set<Members> found;
        Members path;
        for (std::uint64_t x = lo; x <= hi; ++x) {
            path.assign(1, x);
            std::uint64_t current = x;
            for (std::size_t step = 1; step <= max_len; ++step) {
                if (current <= cap) {
                    current = table[current];
                } else {
                    const auto next = to_u64(aliquot_s(current));
                    if (!next) {
                        break;
                    }
                    current = *next;
                }
                if (current == 0) {
                    break;
                }
                if (current == x) {
                    if (step >= 2) {
                        std::rotate(path.begin(), std::min_element(path.begin(), path.end()), path.end());
                        found.insert(path);
                    }
                    break;
                }
                path.push_back(current);
            }
        }
        return found;
    };

    std::set<Members> merged;
    const std::uint64_t workers = std::min<std::uint64_t>(parallel.worker_count(), limit - 1);
    if (workers <= 1) {
        merged = walk_range(2, limit);
    } else {
        const std::uint64_t chunk = (limit - 1 + workers - 1) / workers;
        std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
        for (std::uint64_t lo = 2; lo <= limit; lo += chunk) {
            ranges.emplace_back(lo, std::min(limit, lo + chunk - 1));
        }
        std::vector<std::set<Members>> parts(ranges.size());
        {
            std::vector<std::jthread> threads;
            for (std::size_t i = 0; i < ranges.size(); ++i) {
                threads.emplace_back([&, i] { parts[i] = walk_range(ranges[i].first, ranges[i].second); });
            }
        }
        for (auto& part : parts) {
            merged.merge(part);
        }
    }

    std::vector<SociableCycle> out;
    out.reserve(merged.size());
    for (const Members& cycle : merged) {
        SociableCycle sc;
        for (std::uint64_t v : cycle) {
            sc.members.push_back(nat_from_u64(v));
        }
        out.push_back(std::move(sc));
    }
    return out;
}

} // namespace amicable
