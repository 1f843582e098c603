#include "amicable/catalog.hpp"

#include <sstream>

#include "amicable/error.hpp"

namespace amicable {

std::string_view to_string(EntryKind kind) {
    switch (kind) {
    case EntryKind::AmicablePair: return "AmicablePair";
    case EntryKind::BetrothedPair: return "BetrothedPair";
    case EntryKind::SociableCycle: return "SociableCycle";
    }
    return "Unknown";
}

namespace {

KnownEntry entry(EntryKind kind, std::initializer_list<const char*> members, std::string attribution,
                 std::string source) {
    KnownEntry e{kind, {}, std::move(attribution), std::move(source)};
    for (const char* m : members) {
        e.members.emplace_back(m, 10);
    }
    return e;
}

} // namespace

const std::vector<KnownEntry>& known_catalog() {
    static const std::vector<KnownEntry> catalog = {
        entry(EntryKind::AmicablePair, {"220", "284"}, "Pythagoras", "antiquity; Thabit rule k = 1"),
        entry(EntryKind::AmicablePair, {"1184", "1210"}, "Paganini", "not of Thabit form"),
        entry(EntryKind::AmicablePair, {"2620", "2924"}, "Euler", "Euler's catalogue"),
        entry(EntryKind::AmicablePair, {"5020", "5564"}, "Euler", "Euler's catalogue"),
        entry(EntryKind::AmicablePair, {"17296", "18416"}, "Fermat", "Thabit rule k = 3"),
        entry(EntryKind::AmicablePair, {"9363584", "9437056"}, "Descartes", "Thabit rule k = 6"),
        entry(EntryKind::AmicablePair, {"2172649216", "2181168896"}, "Euler",
              "Euler's rule (m, n) = (1, 8)"),
        entry(EntryKind::BetrothedPair, {"48", "75"}, "", "smallest betrothed pair"),
        entry(EntryKind::BetrothedPair, {"140", "195"}, "", "second smallest betrothed pair"),
        entry(EntryKind::SociableCycle, {"12496", "14288", "15472", "14536", "14264"}, "Poulet",
              "smallest sociable cycle of length 5"),
    };
    return catalog;
}

std::vector<CatalogCheck> verify_catalog() {
    std::vector<CatalogCheck> out;
    for (const KnownEntry& e : known_catalog()) {
        bool ok = false;
        switch (e.kind) {
        case EntryKind::AmicablePair:
            ok = e.members.size() == 2 &&
                 check_amicable(e.members[0], e.members[1]).kind == PairKind::Amicable;
            break;
        case EntryKind::BetrothedPair:
            ok = e.members.size() == 2 &&
                 check_betrothed(e.members[0], e.members[1]).kind == PairKind::Betrothed;
            break;
        case EntryKind::SociableCycle:
            ok = verify_cycle(e.members).ok;
            break;
        }
        out.push_back({&e, ok});
    }
    return out;
}

Nat coprime_search_bound() {
    Nat out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, kCoprimeSearchBoundExponent);
    return out;
}

Format parse_format(std::string_view name) {
    if (name == "json") {
        return Format::Json;
    }
    if (name == "csv") {
        return Format::Csv;
    }
    throw Error(ErrorCode::UnsupportedFormat, std::string(name));
}

namespace {

Json nats(const std::vector<Nat>& values) {
    Json arr = Json::array();
    for (const Nat& v : values) {
        arr.push_back(to_string(v));
    }
    return arr;
}

Json optional_pair(const std::optional<NatPair>& pair) {
    return pair ? to_json(*pair) : Json(nullptr);
}

} // namespace

Json to_json(const NatPair& pair) {
    return Json{{"m", to_string(pair.m)}, {"n", to_string(pair.n)}};
}

Json to_json(const PairVerdict& v) {
    Json guards = Json::array();
    for (GuardFailure g : v.guard_failures) {
        guards.push_back(to_string(g));
    }
    return Json{{"m", to_string(v.m)},   {"n", to_string(v.n)},
                {"kind", to_string(v.kind)}, {"s_m", to_string(v.s_m)},
                {"s_n", to_string(v.s_n)},   {"guard_failures", std::move(guards)}};
}

Json to_json(const SearchReport& r) {
    Json pairs = Json::array();
    for (const NatPair& p : r.pairs) {
        pairs.push_back(to_json(p));
    }
    return Json{{"limit", to_string(r.limit)},     {"pairs", std::move(pairs)},
                {"all_even", r.all_even},          {"min_gcd", to_string(r.min_gcd)},
                {"oracle", to_string(r.oracle)},   {"kind", to_string(r.kind)}};
}

Json to_json(const AuditResult& a) {
    return Json{{"all_even", a.all_even},
                {"min_gcd", to_string(a.min_gcd)},
                {"coprime_found", a.coprime_found}};
}

Json to_json(const AliquotResult& r) {
    Json j{{"start", to_string(r.start)},
           {"trajectory", nats(r.trajectory)},
           {"outcome", to_string(r.outcome)}};
    if (r.outcome == AliquotOutcome::FixedPoint) {
        j["fixed_point"] = to_string(r.fixed_point);
    }
    if (r.outcome == AliquotOutcome::EnteredCycle) {
        j["cycle"] = nats(r.cycle);
        j["entry_index"] = std::to_string(r.entry_index);
    }
    return j;
}

Json to_json(const SociableCycle& c) {
    return Json{{"members", nats(c.members)}, {"length", std::to_string(c.length())}};
}

Json to_json(const std::vector<SociableCycle>& cycles) {
    Json arr = Json::array();
    for (const SociableCycle& c : cycles) {
        arr.push_back(to_json(c));
    }
    return Json{{"cycles", std::move(arr)}};
}

Json to_json(const ThabitCandidate& c) {
    return Json{{"rule", "thabit"},
                {"k", std::to_string(c.k)},
                {"p", to_string(c.p)},
                {"q", to_string(c.q)},
                {"r", to_string(c.r)},
                {"p_prime", c.p_prime},
                {"q_prime", c.q_prime},
                {"r_prime", c.r_prime},
                {"pair", optional_pair(c.pair)},
                {"verified", c.verified},
                {"probable_prime", c.probable}};
}

Json to_json(const EulerCandidate& c) {
    return Json{{"rule", "euler"},
                {"m", std::to_string(c.m)},
                {"n", std::to_string(c.n)},
                {"a", to_string(c.a)},
                {"p", to_string(c.p)},
                {"q", to_string(c.q)},
                {"r", to_string(c.r)},
                {"p_prime", c.p_prime},
                {"q_prime", c.q_prime},
                {"r_prime", c.r_prime},
                {"pair", optional_pair(c.pair)},
                {"verified", c.verified},
                {"probable_prime", c.probable}};
}

Json to_json(const BorhoCandidate& c) {
    const BorhoHypothesis& h = c.hypothesis;
    Json hyp{{"breeder_amicable", h.breeder_amicable}, {"t_prime", h.t_prime},
             {"p1_prime", h.p1_prime},                 {"p2_prime", h.p2_prime},
             {"coprime_au_t", h.coprime_au_t},         {"coprime_au_p1", h.coprime_au_p1},
             {"coprime_a_p2", h.coprime_a_p2}};
    return Json{{"rule", "borho"},
                {"a", to_string(c.a)},
                {"u", to_string(c.u)},
                {"n", std::to_string(c.n)},
                {"t", to_string(c.t)},
                {"p1", to_string(c.p1)},
                {"p2", to_string(c.p2)},
                {"M", to_string(c.M)},
                {"N", to_string(c.N)},
                {"hypothesis", std::move(hyp)},
                {"degenerate_subtraction", c.degenerate_subtraction},
                {"pair", optional_pair(c.pair)},
                {"verified", c.verified},
                {"probable_prime", c.probable}};
}

Json to_json(const GeneratorCandidate& c) {
    return std::visit([](const auto& v) { return to_json(v); }, c);
}

Json to_json(const KnownEntry& e) {
    return Json{{"kind", to_string(e.kind)},
                {"members", nats(e.members)},
                {"attribution", e.attribution},
                {"source", e.source}};
}

Json to_json(const std::vector<KnownEntry>& entries) {
    Json arr = Json::array();
    for (const KnownEntry& e : entries) {
        arr.push_back(to_json(e));
    }
    return Json{{"entries", std::move(arr)}};
}

namespace {

template <typename F>
auto parsing(F&& body) {
    try {
        return body();
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

Nat nat_field(const Json& j, const char* key) { return parse_nat(j.at(key).get<std::string>()); }

std::vector<Nat> nat_list(const Json& j) {
    std::vector<Nat> out;
    for (const Json& v : j) {
        out.push_back(parse_nat(v.get<std::string>()));
    }
    return out;
}

template <typename Enum, std::size_t N>
Enum enum_field(const Json& j, const char* key, const Enum (&values)[N]) {
    const std::string text = j.at(key).get<std::string>();
    for (Enum v : values) {
        if (to_string(v) == text) {
            return v;
        }
    }
    throw Error(ErrorCode::ParseError, std::string("bad value for ") + key + ": " + text);
}

constexpr PairKind kPairKinds[] = {PairKind::Amicable, PairKind::Betrothed, PairKind::Neither};
constexpr GuardFailure kGuards[] = {GuardFailure::ZeroMember, GuardFailure::EqualMembers};
constexpr Oracle kOracles[] = {Oracle::Sieve, Oracle::Direct};
constexpr AliquotOutcome kOutcomes[] = {AliquotOutcome::ReachedZero, AliquotOutcome::FixedPoint,
                                        AliquotOutcome::EnteredCycle, AliquotOutcome::CeilingExceeded,
                                        AliquotOutcome::StepsExhausted};

} // namespace

PairVerdict pair_verdict_from_json(const Json& j) {
    return parsing([&] {
        PairVerdict v{nat_field(j, "m"), nat_field(j, "n"), nat_field(j, "s_m"), nat_field(j, "s_n"),
                      enum_field(j, "kind", kPairKinds), {}};
        for (const Json& g : j.at("guard_failures")) {
            v.guard_failures.push_back(enum_field(Json{{"g", g}}, "g", kGuards));
        }
        return v;
    });
}

SearchReport search_report_from_json(const Json& j) {
    return parsing([&] {
        SearchReport r;
        r.limit = nat_field(j, "limit");
        r.kind = enum_field(j, "kind", kPairKinds);
        for (const Json& p : j.at("pairs")) {
            r.pairs.push_back({nat_field(p, "m"), nat_field(p, "n")});
        }
        r.all_even = j.at("all_even").get<bool>();
        r.min_gcd = nat_field(j, "min_gcd");
        r.oracle = enum_field(j, "oracle", kOracles);
        return r;
    });
}

AliquotResult aliquot_result_from_json(const Json& j) {
    return parsing([&] {
        AliquotResult r;
        r.start = nat_field(j, "start");
        r.trajectory = nat_list(j.at("trajectory"));
        r.outcome = enum_field(j, "outcome", kOutcomes);
        if (r.outcome == AliquotOutcome::FixedPoint) {
            r.fixed_point = nat_field(j, "fixed_point");
        }
        if (r.outcome == AliquotOutcome::EnteredCycle) {
            r.cycle = nat_list(j.at("cycle"));
            r.entry_index = std::stoull(j.at("entry_index").get<std::string>());
        }
        return r;
    });
}

SociableCycle sociable_cycle_from_json(const Json& j) {
    return parsing([&] {
        SociableCycle c{nat_list(j.at("members"))};
        if (std::to_string(c.length()) != j.at("length").get<std::string>()) {
            throw Error(ErrorCode::ParseError, "cycle length does not match members");
        }
        return c;
    });
}

namespace {

constexpr const char* kCsvHeader = "m,n,kind,gcd,parity\n";

std::string parity(const Nat& m, const Nat& n) {
    const bool m_even = mpz_even_p(m.get_mpz_t()) != 0;
    const bool n_even = mpz_even_p(n.get_mpz_t()) != 0;
    if (m_even && n_even) {
        return "even-even";
    }
    if (!m_even && !n_even) {
        return "odd-odd";
    }
    return "mixed";
}

void csv_row(std::ostream& out, const Nat& m, const Nat& n, PairKind kind) {
    out << m << ',' << n << ',' << to_string(kind) << ',' << gcd(m, n) << ',' << parity(m, n) << '\n';
}

} // namespace

std::string to_csv(const SearchReport& report) {
    std::ostringstream out;
    out << kCsvHeader;
    for (const auto& [m, n] : report.pairs) {
        csv_row(out, m, n, report.kind);
    }
    return out.str();
}

std::string to_csv(const PairVerdict& v) {
    std::ostringstream out;
    out << kCsvHeader;
    csv_row(out, v.m, v.n, v.kind);
    return out.str();
}

std::string to_csv(const GeneratorCandidate& c) {
    std::ostringstream out;
    out << kCsvHeader;
    std::visit(
        [&](const auto& cand) {
            if (cand.pair) {
                csv_row(out, cand.pair->m, cand.pair->n,
                        cand.verified ? PairKind::Amicable : PairKind::Neither);
            }
        },
        c);
    return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string export_report(const SearchReport& report, Format format) {
    return format == Format::Json ? dump(to_json(report)) : to_csv(report);
}

std::string export_report(const PairVerdict& verdict, Format format) {
    return format == Format::Json ? dump(to_json(verdict)) : to_csv(verdict);
}

std::string export_report(const GeneratorCandidate& c, Format format) {
    return format == Format::Json ? dump(to_json(c)) : to_csv(c);
}

std::string export_report(const AliquotResult& result, Format format) {
    if (format != Format::Json) {
        throw Error(ErrorCode::UnsupportedFormat, "aliquot results export as json only");
    }
    return dump(to_json(result));
}

std::string export_report(const std::vector<KnownEntry>& entries, Format format) {
    if (format != Format::Json) {
        throw Error(ErrorCode::UnsupportedFormat, "catalog exports as json only");
    }
    return dump(to_json(entries));
}

std::string export_report(const std::vector<SociableCycle>& cycles, Format format) {
    if (format != Format::Json) {
        throw Error(ErrorCode::UnsupportedFormat, "cycle lists export as json only");
    }
    return dump(to_json(cycles));
}

} // namespace amicable
