#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "amicable/aliquot.hpp"
#include "amicable/generators.hpp"
#include "amicable/pairs.hpp"

namespace amicable {

enum class EntryKind { AmicablePair, BetrothedPair, SociableCycle };
std::string_view to_string(EntryKind kind);

struct KnownEntry {
    EntryKind kind;
    std::vector<Nat> members;
    std::string attribution;
    std::string source;

    friend bool operator==(const KnownEntry&, const KnownEntry&) = default;
};

/// The fixed list of classical results shipped with the toolkit.
const std::vector<KnownEntry>& known_catalog();

struct CatalogCheck {
    const KnownEntry* entry;
    bool ok;
};

/// Re-verifies every entry with check_amicable, check_betrothed or
/// verify_cycle according to its kind.
std::vector<CatalogCheck> verify_catalog();

/// Known coprime-pair search bound, 10^kCoprimeSearchBoundExponent.
Nat coprime_search_bound();

enum class Format { Json, Csv };
/// Accepts "json" and "csv". Throws Error{UnsupportedFormat} otherwise.
Format parse_format(std::string_view name);

using Json = nlohmann::ordered_json;

Json to_json(const NatPair& pair);
Json to_json(const PairVerdict& verdict);
Json to_json(const SearchReport& report);
Json to_json(const AuditResult& audit);
Json to_json(const AliquotResult& result);
Json to_json(const SociableCycle& cycle);
Json to_json(const std::vector<SociableCycle>& cycles);
Json to_json(const ThabitCandidate& c);
Json to_json(const EulerCandidate& c);
Json to_json(const BorhoCandidate& c);
Json to_json(const GeneratorCandidate& c);
Json to_json(const KnownEntry& entry);
Json to_json(const std::vector<KnownEntry>& entries);

/// Inverses of to_json. Throw Error{ParseError} on malformed input.
PairVerdict pair_verdict_from_json(const Json& j);
SearchReport search_report_from_json(const Json& j);
AliquotResult aliquot_result_from_json(const Json& j);
SociableCycle sociable_cycle_from_json(const Json& j);

/// CSV covers pair-shaped data only: header "m,n,kind,gcd,parity" and one
/// row per pair. Other report types throw Error{UnsupportedFormat}.
std::string to_csv(const SearchReport& report);
std::string to_csv(const PairVerdict& verdict);
std::string to_csv(const GeneratorCandidate& c);

/// JSON rendering used for every exported document: two-space indent,
/// trailing newline.
std::string dump(const Json& j);

std::string export_report(const SearchReport& report, Format format);
std::string export_report(const PairVerdict& verdict, Format format);
std::string export_report(const GeneratorCandidate& c, Format format);
std::string export_report(const AliquotResult& result, Format format);
std::string export_report(const std::vector<KnownEntry>& entries, Format format);
std::string export_report(const std::vector<SociableCycle>& cycles, Format format);

} // namespace amicable
