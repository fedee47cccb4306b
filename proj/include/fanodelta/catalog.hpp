#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fanodelta/delta.hpp"
#include "fanodelta/geometry.hpp"

namespace fano {

struct CatalogFamily {
    int id;
    Family family;
    std::string printed_header;  // Sing(X) as printed in the family's header
};

const std::vector<CatalogFamily>& catalog_families();
const CatalogFamily& catalog_family(int id);  // throws on unknown id

using FieldMap = std::vector<std::pair<std::string, std::string>>;

std::optional<std::string> field(const FieldMap& m, const std::string& key);

struct CaseEntry {
    int family = 0;
    QuotientSingularity point;
    std::string label;
    std::string method;
    FieldMap spec;
    FieldMap expected;  // "printed" or "printed!recomputed" for known printing errors
    std::string citation;
    int line = 0;
};

struct Ledger {
    std::filesystem::path path;
    std::vector<CaseEntry> entries;
};

// FANO_DELTA_LEDGER if set, otherwise the ledger shipped with the sources.
std::filesystem::path default_ledger_path();
Ledger load_ledger(const std::filesystem::path& path);

std::vector<CaseEntry> entries(const Ledger& ledger, std::optional<int> family = std::nullopt);

enum class CheckStatus { Match, Discrepancy, Mismatch };

struct Check {
    std::string name;
    std::string computed;
    std::string printed;
    std::optional<std::string> recomputed;  // value expected where the print is known to be wrong
    CheckStatus status = CheckStatus::Match;
};

struct Report {
    CaseEntry entry;
    std::vector<Check> checks;
    std::optional<DeltaVerdict> verdict;
    Rational bound;
    std::string active_term;
    std::string error;  // nonempty when recomputation itself failed

    bool ok() const;
    bool has_discrepancy() const;
};

Report verify(const CaseEntry& entry, const std::filesystem::path& base_dir);

struct Summary {
    std::vector<Report> reports;  // ledger order
    int matches = 0;
    int discrepancies = 0;
    int mismatches = 0;
    bool ok() const { return mismatches == 0; }
};

Summary verify_all_serial(const std::vector<CaseEntry>& list, const std::filesystem::path& base_dir);
Summary verify_all_parallel(const std::vector<CaseEntry>& list, const std::filesystem::path& base_dir);
Summary verify_all(const Ledger& ledger, std::optional<int> family = std::nullopt);

// Builds the flag specification stored in a ledger entry.
FlagSpec entry_flag_spec(const CaseEntry& entry, const std::filesystem::path& base_dir);

}  // namespace fano
