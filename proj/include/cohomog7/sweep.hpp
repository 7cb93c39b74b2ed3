#pragma once

#include <gmpxx.h>

#include <optional>
#include <set>
#include <vector>

#include "cohomog7/classify.hpp"
#include "cohomog7/families.hpp"

namespace cohomog7 {

/// A parameter-space enumeration request: which families, the bound on
/// |parameter|, and optional row filters.
struct SearchSpec {
    std::set<Family> families;
    long long bound = 1;
    std::optional<mpz_class> r_filter;
    bool only_type_er = false;
    bool only_eschenburg = false;

    /// Canonical text form; the cache key is derived from this.
    std::string key_string() const;
};

/// All valid parameter tuples of one family with |parameter| <= bound,
/// deduplicated under the simultaneous sign flip (p, q) -> (-p, -q) of a
/// pair whenever the flipped tuple is also valid (canonical representative:
/// positive leading parameter). Deterministic ascending order.
std::vector<FamilyParams> enumerate_family(Family family, long long bound);

enum class SweepMode {
    Serial,   ///< reference implementation
    Parallel  ///< OpenMP over tuples; falls back to serial without OpenMP
};

/// Enumerate, classify, filter and sort. Rows are ordered by
/// (family, r, parameters) so output is deterministic in either mode.
/// Throws invalid_input for an empty family set or bound < 1.
std::vector<ClassificationReport> run_search(const SearchSpec& spec,
                                             SweepMode mode = SweepMode::Parallel);

/// Classify a fixed tuple list. Exposed for the benchmark; the parallel and
/// serial paths must produce identical reports.
std::vector<ClassificationReport> classify_tuples(const std::vector<FamilyParams>& tuples,
                                                  SweepMode mode);

}  // namespace cohomog7
