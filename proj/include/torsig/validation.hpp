#pragma once

// Batch cross-check of every closed formula against its oracle, with a
// deterministic JSON report.

#include "torsig/exact.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace torsig {

struct ValidationOptions {
    std::int64_t max_n = 20;        ///< pairs p < q <= max_n; must be >= 5
    std::int64_t grid_density = 4;  ///< spectral grid C = t/(d pq); must be >= 2
    unsigned jobs = 1;
};

enum class ValidationStatus { match, known_erratum, unexpected };

std::string_view status_name(ValidationStatus status);

/// Known discrepancies between a commonly quoted form of a formula and its oracle.
namespace erratum {
inline constexpr std::string_view integral_dedekind_sign = "integral-dedekind-sign";
inline constexpr std::string_view rosen_sawtooth_coefficient = "rosen-sawtooth-coefficient";
inline constexpr std::string_view ordinary_mixed_parity_signs = "ordinary-signature-mixed-parity-signs";
} // namespace erratum

struct ValidationEntry {
    std::string formula;
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::optional<ExactRational> c;
    std::string extra;  ///< other inputs, e.g. "x=1/2,y=0" or "n=2"
    std::string oracle;
    std::string closed;
    std::optional<std::string> printed;
    ValidationStatus status = ValidationStatus::match;
    std::optional<std::string> erratum;
};

/// A reading of a formula that was considered and rejected, with the defect
/// it produces at a witness input.
struct ConventionNote {
    std::string id;
    std::string description;
    std::string witness;
    std::string adopted_value;
    std::string rejected_value;
};

struct ValidationSummary {
    std::size_t total = 0;
    std::size_t match = 0;
    std::size_t known_erratum = 0;
    std::size_t unexpected = 0;
    std::vector<std::string> errata_classes;  ///< sorted, distinct
};

struct ValidationReport {
    ValidationOptions options;
    std::vector<ValidationEntry> entries;  ///< sorted by (formula, p, q, C, extra)
    std::vector<ConventionNote> conventions;

    ValidationSummary summary() const;
    bool has_unexpected() const;

    /// Canonical JSON, independent of options.jobs.
    std::string to_json() const;
};

/// Throws InvalidArgument when max_n < 5, grid_density < 2 or jobs < 1.
ValidationReport run_validation(const ValidationOptions& options);

} // namespace torsig
