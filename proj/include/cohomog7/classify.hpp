#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cohomog7/exactseq.hpp"
#include "cohomog7/families.hpp"

namespace cohomog7 {

using ordered_json = nlohmann::ordered_json;

/// The type-E_r verdict together with the order of the fourth cohomology
/// group (r = 0 encodes an infinite H^4).
struct ErClassification {
    bool is_type_er = false;
    mpz_class r;
};

/// True exactly when the manifold has cohomology type E_r (r >= 2):
///   L with p+ odd and p+^2 q-^2 - p-^2 q+^2 != 0;
///   any N;
///   O with |p| and |q| not both equal to one.
/// Throws validation_error on invalid params.
ErClassification is_type_er(const FamilyParams& params);

/// True exactly when the manifold has the integral cohomology ring of an
/// Eschenburg space:
///   N with |p-^2 q+^2 - p+^2 q-^2| != 1;
///   O with p or q even.
/// Throws validation_error on invalid params.
bool has_eschenburg_ring(const FamilyParams& params);

/// Literal pattern match on O(p, p +/- 1 : 2), the tuples known to be
/// Eschenburg spaces.
bool is_known_eschenburg_space(const FamilyParams& params);

/// Everything the library knows about one parameter tuple, with a
/// (claim, justification) trail for every number.
struct ClassificationReport {
    FamilyParams params;
    bool valid = false;
    std::vector<std::string> errors;

    std::optional<GradedCohomology> table;
    std::optional<mpz_class> r;
    bool type_er = false;
    bool eschenburg_ring = false;
    bool known_eschenburg_space = false;
    std::vector<std::pair<std::string, std::string>> provenance;
    std::optional<PiStarData> pi_star;

    ordered_json to_json() const;
};

/// Assemble a full report. Invalid parameters give valid = false with the
/// violation list and no analysis; internal cross-check failures throw
/// internal_error rather than producing a silent report.
ClassificationReport report(const FamilyParams& params);

/// The structural reading of "type E_r" off an emitted table: shape
/// (Z, 0, Z, 0, Z_r, Z, 0, Z) with 2 <= r finite, complete generators x, y
/// and x^2 generating H^4. Used to cross-check the predicate.
bool table_has_er_shape(const GradedCohomology& table);

/// JSON value for an arbitrary-precision integer: a plain number when it
/// fits in 64 bits, a decimal string otherwise.
ordered_json mpz_to_json(const mpz_class& v);

/// Structured form {display, free_rank, torsion[]} of an abelian group.
ordered_json group_to_json(const AbelianGroup& g);

/// Stable-key JSON for a generator certificate: condition1..3, surjectivity,
/// verdict, narrative[].
ordered_json certificate_to_json(const GeneratorCertificate& cert);

}  // namespace cohomog7
