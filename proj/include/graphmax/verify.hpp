#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphmax/search.hpp"
#include "graphmax/variation.hpp"

namespace graphmax {

enum class EntryStatus { pass, fail, info };

std::string_view to_string(EntryStatus status);

struct ReportEntry {
    std::string name;
    std::string family;  // empty when the check is not tied to a family
    std::optional<std::size_t> n;
    std::optional<PExponent> p;
    std::optional<double> expected;
    double computed = 0.0;
    double tolerance = 0.0;
    EntryStatus status = EntryStatus::info;
};

struct ReportMetadata {
    std::string tool_version;
    std::uint64_t seed = kDefaultSeed;
    /// Left empty unless requested, so reports stay byte-reproducible.
    std::optional<std::string> timestamp;
};

struct Report {
    ReportMetadata metadata;
    std::vector<ReportEntry> entries;

    /// Adds a checked entry: pass iff |computed - expected| <= tolerance.
    void check(ReportEntry entry);
    /// Adds an entry with no expected value.
    void info(ReportEntry entry);

    bool passed() const;
    std::size_t failures() const;
};

enum class Suite { constants, extremizers, bounds, continuity, all };

std::string_view to_string(Suite suite);
/// Throws DomainError on an unknown suite name.
Suite parse_suite(std::string_view name);

struct VerifyOptions {
    std::uint64_t seed = kDefaultSeed;
    std::size_t restarts = 64;
    std::size_t threads = 0;
};

/// Recomputes the tabulated constants, extremizer ratios, search bounds and
/// continuity checks, one report entry per quantity.
Report run_verify(Suite suite, const VerifyOptions& options = {});

}  // namespace graphmax
