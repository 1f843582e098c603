#include "amicable/cli.hpp"

#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "amicable/aliquot.hpp"
#include "amicable/catalog.hpp"
#include "amicable/divisors.hpp"
#include "amicable/error.hpp"
#include "amicable/generators.hpp"
#include "amicable/pairs.hpp"

namespace amicable::cli {

namespace {

enum class OutputFormat { Text, Json, Csv };

struct Config {
    std::string format = "text";
    bool parallel = false;

    // Positional arguments kept as text so arbitrary-precision values parse.
    std::string number;
    std::string second;
    std::string members;

    bool betrothed = false;
    std::uint64_t limit = 0;
    std::uint64_t max_steps = kDefaultMaxSteps;
    std::string ceiling = "1000000000000000";
    std::size_t max_len = 0;

    std::optional<unsigned> k;
    std::optional<unsigned> k_max;
    unsigned euler_m = 0;
    unsigned euler_n = 0;
    std::string borho_a;
    std::string borho_u;
    unsigned borho_n = 0;
};

OutputFormat output_format(const std::string& name) {
    if (name == "text") {
        return OutputFormat::Text;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    throw Error(ErrorCode::UnsupportedFormat, name);
}

[[noreturn]] void no_csv(const char* command) {
    throw Error(ErrorCode::UnsupportedFormat, std::string(command) + " has no csv output");
}

std::vector<Nat> parse_list(const std::string& text) {
    std::vector<Nat> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        out.push_back(parse_nat(item));
    }
    return out;
}

std::string join(const std::vector<Nat>& values, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) {
            out += sep;
        }
        out += to_string(values[i]);
    }
    return out;
}

const char* yes_no(bool prime) { return prime ? "prime" : "composite"; }

class Runner {
public:
    Runner(const Config& cfg, std::ostream& out) : cfg_(cfg), out_(out), fmt_(output_format(cfg.format)) {}

    int sigma_cmd() {
        const Nat n = parse_nat(cfg_.number);
        const Nat value = sigma(n);
        return scalar("sigma", n, value);
    }

    int s_cmd() {
        const Nat n = parse_nat(cfg_.number);
        return scalar("s", n, aliquot_s(n));
    }

    int classify_cmd() {
        const NumberClass c = classify(parse_nat(cfg_.number));
        switch (fmt_) {
        case OutputFormat::Json:
            out_ << dump(Json{{"n", to_string(c.n)}, {"s", to_string(c.s_value)}, {"class", to_string(c.tag)}});
            break;
        case OutputFormat::Csv: no_csv("classify");
        case OutputFormat::Text:
            out_ << to_string(c.tag) << " (s = " << c.s_value << ")\n";
            break;
        }
        return kExitOk;
    }

    int check_pair_cmd() {
        const Nat m = parse_nat(cfg_.number);
        const Nat n = parse_nat(cfg_.second);
        const PairVerdict v = cfg_.betrothed ? check_betrothed(m, n) : check_amicable(m, n);
        switch (fmt_) {
        case OutputFormat::Json: out_ << export_report(v, Format::Json); break;
        case OutputFormat::Csv: out_ << export_report(v, Format::Csv); break;
        case OutputFormat::Text:
            out_ << to_string(v.kind);
            if (!v.guard_failures.empty()) {
                out_ << " (";
                for (std::size_t i = 0; i < v.guard_failures.size(); ++i) {
                    out_ << (i ? ", " : "") << to_string(v.guard_failures[i]);
                }
                out_ << ')';
            }
            out_ << '\n';
            break;
        }
        return v.kind == PairKind::Neither ? kExitVerificationFailed : kExitOk;
    }

    int search_cmd() {
        const SearchReport r = cfg_.betrothed ? search_betrothed(cfg_.limit, options())
                                              : search_amicable(cfg_.limit, options());
        switch (fmt_) {
        case OutputFormat::Json: out_ << export_report(r, Format::Json); break;
        case OutputFormat::Csv: out_ << export_report(r, Format::Csv); break;
        case OutputFormat::Text:
            for (const auto& [m, n] : r.pairs) {
                out_ << m << ' ' << n << '\n';
            }
            out_ << "pairs: " << r.pairs.size() << ", all_even: " << std::boolalpha << r.all_even
                 << ", min_gcd: " << r.min_gcd << '\n';
            break;
        }
        return kExitOk;
    }

    int aliquot_cmd() {
        const AliquotResult r =
            aliquot_sequence(parse_nat(cfg_.number), cfg_.max_steps, parse_nat(cfg_.ceiling));
        switch (fmt_) {
        case OutputFormat::Json: out_ << export_report(r, Format::Json); break;
        case OutputFormat::Csv: no_csv("aliquot");
        case OutputFormat::Text:
            out_ << join(r.trajectory, " ") << '\n' << to_string(r.outcome);
            if (r.outcome == AliquotOutcome::FixedPoint) {
                out_ << ' ' << r.fixed_point;
            } else if (r.outcome == AliquotOutcome::EnteredCycle) {
                out_ << ' ' << join(r.cycle, ",") << " at index " << r.entry_index;
            }
            out_ << '\n';
            break;
        }
        return kExitOk;
    }

    int cycles_cmd() {
        const auto cycles = find_cycles(cfg_.limit, cfg_.max_len, parallelism());
        switch (fmt_) {
        case OutputFormat::Json: out_ << export_report(cycles, Format::Json); break;
        case OutputFormat::Csv: no_csv("cycles");
        case OutputFormat::Text:
            for (const SociableCycle& c : cycles) {
                out_ << join(c.members, ",") << '\n';
            }
            break;
        }
        return kExitOk;
    }

    int cycle_verify_cmd() {
        const std::vector<Nat> members = parse_list(cfg_.members);
        const CycleCheck check = verify_cycle(members);
        switch (fmt_) {
        case OutputFormat::Json: {
            Json j{{"members", Json::array()}, {"valid", check.ok}, {"failure", to_string(check.failure)}};
            for (const Nat& m : members) {
                j["members"].push_back(to_string(m));
            }
            if (check.failure == CycleFailure::BrokenLink || check.failure == CycleFailure::Duplicate ||
                check.failure == CycleFailure::ZeroMember) {
                j["index"] = std::to_string(check.index);
            }
            out_ << dump(j);
            break;
        }
        case OutputFormat::Csv: no_csv("cycle-verify");
        case OutputFormat::Text:
            if (check.ok) {
                out_ << "true\n";
            } else {
                out_ << "false (" << to_string(check.failure);
                if (check.failure != CycleFailure::TooShort) {
                    out_ << " at index " << check.index;
                }
                out_ << ")\n";
            }
            break;
        }
        return check.ok ? kExitOk : kExitVerificationFailed;
    }

    int thabit_cmd() {
        if (cfg_.k.has_value() == cfg_.k_max.has_value()) {
            throw Error(ErrorCode::BadParameter, "give exactly one of --k or --k-max");
        }
        std::vector<GeneratorCandidate> candidates;
        if (cfg_.k) {
            candidates.emplace_back(thabit_candidate(*cfg_.k));
        } else {
            for (unsigned k = 1; k <= *cfg_.k_max; ++k) {
                candidates.emplace_back(thabit_candidate(k));
            }
        }
        return emit_candidates(candidates, cfg_.k.has_value());
    }

    int euler_cmd() {
        return emit_candidates({euler_candidate(cfg_.euler_m, cfg_.euler_n)}, true);
    }

    int borho_cmd() {
        return emit_candidates({borho_candidate(parse_nat(cfg_.borho_a), parse_nat(cfg_.borho_u), cfg_.borho_n)},
                               true);
    }

    int verify_known_cmd() {
        const auto checks = verify_catalog();
        bool all_ok = true;
        for (const CatalogCheck& c : checks) {
            all_ok = all_ok && c.ok;
        }
        switch (fmt_) {
        case OutputFormat::Json: {
            Json entries = Json::array();
            for (const CatalogCheck& c : checks) {
                Json e = to_json(*c.entry);
                e["verified"] = c.ok;
                entries.push_back(std::move(e));
            }
            out_ << dump(Json{{"entries", std::move(entries)},
                              {"all_verified", all_ok},
                              {"coprime_search_bound", to_string(coprime_search_bound())}});
            break;
        }
        case OutputFormat::Csv: no_csv("verify-known");
        case OutputFormat::Text:
            for (const CatalogCheck& c : checks) {
                out_ << (c.ok ? "ok   " : "FAIL ") << to_string(c.entry->kind) << ' '
                     << join(c.entry->members, ",");
                if (!c.entry->attribution.empty()) {
                    out_ << " (" << c.entry->attribution << ')';
                }
                out_ << '\n';
            }
            break;
        }
        return all_ok ? kExitOk : kExitVerificationFailed;
    }

    int audit_cmd() {
        const SearchReport r = search_amicable(cfg_.limit, options());
        const AuditResult a = audit(r);
        switch (fmt_) {
        case OutputFormat::Json: {
            Json j = to_json(a);
            j["limit"] = to_string(r.limit);
            j["pairs"] = to_json(r)["pairs"];
            out_ << dump(j);
            break;
        }
        case OutputFormat::Csv: out_ << export_report(r, Format::Csv); break;
        case OutputFormat::Text:
            out_ << "pairs: " << r.pairs.size() << '\n'
                 << "all_even: " << std::boolalpha << a.all_even << '\n'
                 << "min_gcd: " << a.min_gcd << '\n'
                 << "coprime_found: " << a.coprime_found << '\n';
            break;
        }
        return a.coprime_found ? kExitVerificationFailed : kExitOk;
    }

private:
    int scalar(const char* name, const Nat& n, const Nat& value) {
        switch (fmt_) {
        case OutputFormat::Json: out_ << dump(Json{{"n", to_string(n)}, {name, to_string(value)}}); break;
        case OutputFormat::Csv: no_csv(name);
        case OutputFormat::Text: out_ << value << '\n'; break;
        }
        return kExitOk;
    }

    Parallelism parallelism() const { return Parallelism{cfg_.parallel, 0}; }

    SearchOptions options() const {
        SearchOptions o;
        o.parallel = parallelism();
        return o;
    }

    void describe(const ThabitCandidate& c) {
        out_ << "thabit k=" << c.k << ": p=" << c.p << " (" << yes_no(c.p_prime) << "), q=" << c.q << " ("
             << yes_no(c.q_prime) << "), r=" << c.r << " (" << yes_no(c.r_prime) << ")\n";
    }

    void describe(const EulerCandidate& c) {
        out_ << "euler m=" << c.m << " n=" << c.n << ": a=" << c.a << ", p=" << c.p << " (" << yes_no(c.p_prime)
             << "), q=" << c.q << " (" << yes_no(c.q_prime) << "), r=" << c.r << " (" << yes_no(c.r_prime)
             << ")\n";
    }

    void describe(const BorhoCandidate& c) {
        const BorhoHypothesis& h = c.hypothesis;
        out_ << "borho a=" << c.a << " u=" << c.u << " n=" << c.n << ": t=" << c.t << ", p1=" << c.p1
             << ", p2=" << c.p2 << '\n'
             << "  breeder_amicable=" << std::boolalpha << h.breeder_amicable << " t_prime=" << h.t_prime
             << " p1_prime=" << h.p1_prime << " p2_prime=" << h.p2_prime << " coprime_au_t=" << h.coprime_au_t
             << " coprime_au_p1=" << h.coprime_au_p1 << " coprime_a_p2=" << h.coprime_a_p2 << '\n';
        if (c.degenerate_subtraction) {
            out_ << "  degenerate subtraction: t - u = 0\n";
        }
    }

    int emit_candidates(const std::vector<GeneratorCandidate>& candidates, bool single) {
        bool any_verified = false;
        for (const auto& c : candidates) {
            std::visit([&](const auto& v) { any_verified = any_verified || v.verified; }, c);
        }
        switch (fmt_) {
        case OutputFormat::Json:
            if (single) {
                out_ << export_report(candidates.front(), Format::Json);
            } else {
                Json arr = Json::array();
                for (const auto& c : candidates) {
                    arr.push_back(to_json(c));
                }
                out_ << dump(Json{{"candidates", std::move(arr)}});
            }
            break;
        case OutputFormat::Csv: {
            out_ << "m,n,kind,gcd,parity\n";
            for (const auto& c : candidates) {
                const std::string csv = to_csv(c);
                out_ << csv.substr(csv.find('\n') + 1);
            }
            break;
        }
        case OutputFormat::Text:
            for (const auto& c : candidates) {
                std::visit(
                    [&](const auto& v) {
                        describe(v);
                        if (v.pair) {
                            out_ << "  pair (" << v.pair->m << ", " << v.pair->n << ") "
                                 << (v.verified ? "verified" : "FAILED verification")
                                 << (v.probable ? " [probable primes]" : "") << '\n';
                        } else {
                            out_ << "  no pair\n";
                        }
                    },
                    c);
            }
            break;
        }
        return any_verified ? kExitOk : kExitVerificationFailed;
    }

    const Config& cfg_;
    std::ostream& out_;
    OutputFormat fmt_;
};

} // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Amicable numbers toolkit: divisor sums, pair and cycle search, classical generation rules",
                 argv.empty() ? "amicable" : argv.front()};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_flag("--parallel", cfg.parallel, "Partition sieve and searches across worker threads");

    std::function<int(Runner&)> action;
    auto bind = [&](CLI::App* sub, int (Runner::*method)()) {
        sub->callback([&action, method] { action = [method](Runner& r) { return (r.*method)(); }; });
    };

    auto* sigma_sub = app.add_subcommand("sigma", "Sum of all divisors of N");
    sigma_sub->add_option("N", cfg.number)->required();
    bind(sigma_sub, &Runner::sigma_cmd);

    auto* s_sub = app.add_subcommand("s", "Proper divisor sum of N");
    s_sub->add_option("N", cfg.number)->required();
    bind(s_sub, &Runner::s_cmd);

    auto* classify_sub = app.add_subcommand("classify", "Deficient, perfect or abundant");
    classify_sub->add_option("N", cfg.number)->required();
    bind(classify_sub, &Runner::classify_cmd);

    auto* check_sub = app.add_subcommand("check-pair", "Test (M, N) as an amicable or betrothed pair");
    check_sub->add_option("M", cfg.number)->required();
    check_sub->add_option("N", cfg.second)->required();
    check_sub->add_flag("--betrothed", cfg.betrothed);
    bind(check_sub, &Runner::check_pair_cmd);

    auto* search_sub = app.add_subcommand("search", "All pairs with smaller member <= L");
    search_sub->add_option("--max", cfg.limit)->required();
    search_sub->add_flag("--betrothed", cfg.betrothed);
    bind(search_sub, &Runner::search_cmd);

    auto* aliquot_sub = app.add_subcommand("aliquot", "Iterate s from N");
    aliquot_sub->add_option("N", cfg.number)->required();
    aliquot_sub->add_option("--max-steps", cfg.max_steps);
    aliquot_sub->add_option("--ceiling", cfg.ceiling);
    bind(aliquot_sub, &Runner::aliquot_cmd);

    auto* cycles_sub = app.add_subcommand("cycles", "Sociable cycles with minimum member <= L");
    cycles_sub->add_option("--max", cfg.limit)->required();
    cycles_sub->add_option("--max-len", cfg.max_len)->required();
    bind(cycles_sub, &Runner::cycles_cmd);

    auto* cv_sub = app.add_subcommand("cycle-verify", "Check a comma-separated list as a sociable cycle");
    cv_sub->add_option("MEMBERS", cfg.members)->required();
    bind(cv_sub, &Runner::cycle_verify_cmd);

    auto* gen = app.add_subcommand("generate", "Classical generation rules");
    gen->require_subcommand(1);
    auto* thabit = gen->add_subcommand("thabit", "Thabit ibn Qurra's rule");
    thabit->add_option("--k", cfg.k);
    thabit->add_option("--k-max", cfg.k_max);
    bind(thabit, &Runner::thabit_cmd);
    auto* euler = gen->add_subcommand("euler", "Euler's generalized rule");
    euler->add_option("--m", cfg.euler_m)->required();
    euler->add_option("--n", cfg.euler_n)->required();
    bind(euler, &Runner::euler_cmd);
    auto* borho = gen->add_subcommand("borho", "Borho-Hoffmann breeding");
    borho->add_option("--a", cfg.borho_a)->required();
    borho->add_option("--u", cfg.borho_u)->required();
    borho->add_option("--n", cfg.borho_n)->required();
    bind(borho, &Runner::borho_cmd);

    auto* known_sub = app.add_subcommand("verify-known", "Re-verify the built-in catalog");
    bind(known_sub, &Runner::verify_known_cmd);

    auto* audit_sub = app.add_subcommand("audit", "Parity and coprimality audit of pairs up to L");
    audit_sub->add_option("--max", cfg.limit)->required();
    bind(audit_sub, &Runner::audit_cmd);

    std::vector<const char*> raw;
    raw.reserve(argv.size() + 1);
    if (argv.empty()) {
        raw.push_back("amicable");
    }
    for (const std::string& a : argv) {
        raw.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n' << "run with --help for usage\n";
        return kExitUsage;
    }

    try {
        Runner runner(cfg, out);
        return action(runner);
    } catch (const Error& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace amicable::cli
