#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cohomog7/abelian.hpp"
#include "cohomog7/intmatrix.hpp"

namespace cohomog7 {

/// The four families of simply connected 7-dimensional cohomogeneity-one
/// manifolds with an S^3 x S^3 action.
enum class Family { L, M, N, O };

std::string family_name(Family f);

/// One parameter tuple. L, M, N use two coprime pairs (p-, q-), (p+, q+);
/// O uses a single pair (p, q) plus the order m of the principal isotropy
/// group (m = 1 or 2).
struct FamilyParams {
    Family family = Family::L;
    long long p_minus = 0, q_minus = 0;  ///< (p, q) for family O
    long long p_plus = 0, q_plus = 0;    ///< unused for family O
    int m = 0;                           ///< family O only

    static FamilyParams make_l(long long pm, long long qm, long long pp, long long qp);
    static FamilyParams make_m(long long pm, long long qm, long long pp, long long qp);
    static FamilyParams make_n(long long pm, long long qm, long long pp, long long qp);
    static FamilyParams make_o(long long p, long long q, int m);

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Canonical display form: "L(p-,q-)(p+,q+)" or "O(p,q:m)".
std::string to_string(const FamilyParams& params);

/// Parse the grammar "L(p-,q-)(p+,q+)" / "M..." / "N..." / "O(p,q:m)",
/// whitespace-insensitive, signed integers. Returns std::nullopt and fills
/// *error on failure. Parsing does not validate the parameter restrictions.
std::optional<FamilyParams> parse_params(std::string_view text, std::string* error = nullptr);

/// Check the family restrictions. Returns one message per violated
/// constraint; empty means valid.
std::vector<std::string> validate(const FamilyParams& params);

inline bool is_valid(const FamilyParams& params) { return validate(params).empty(); }

/// Throws validation_error when params are invalid.
void require_valid(const FamilyParams& params);

/// The determinant bookkeeping of the orbit-map square
///   tau*: third cohomology of the identity-component orbits,
///   eta*, mu*: covering-induced maps,
/// from which r = |det tau*| * det_mu_abs / det_eta_abs.
struct PiStarFactorization {
    mpz_class det_tau;      ///< signed determinant at the tau* level
    mpz_class det_eta_abs;  ///< |det eta*|
    mpz_class det_mu_abs;   ///< |det mu*| on free parts
    mpz_class resulting_r;  ///< |det tau*| * det_mu_abs / det_eta_abs, exact
};

/// The pi* data for one parameter tuple. Family O with m = 1 carries the
/// explicit free-part matrix of pi* = pi-* - pi+*; families L, N and O with
/// m = 2 carry the tau*-level matrix plus covering factors; family M carries
/// the factorization only.
struct PiStarData {
    std::optional<IntMatrix> pi_matrix;   ///< O with m = 1
    std::optional<IntMatrix> tau_matrix;  ///< L, N, O with m = 2
    PiStarFactorization factorization;
};

/// Build the pi*/tau* matrices and determinant factorization.
/// Throws validation_error on invalid params.
PiStarData pi_star_matrix(const FamilyParams& params);

/// Closed-form order r of the fourth cohomology group:
///   L, p+ odd:  |p+^2 q-^2 - p-^2 q+^2| / 4
///   L, p+ even: |p+^2 q-^2 - p-^2 q+^2|
///   M:          |p+^2 q-^2 - p-^2 q+^2| / 8
///   N:          |p-^2 q+^2 - p+^2 q-^2|
///   O:          |p^2 - q^2|
/// Cross-checked against the determinant route; disagreement throws
/// internal_error. Throws validation_error on invalid params.
mpz_class fourth_cohomology_order(const FamilyParams& params);

/// A named degree-k ring generator, e.g. x in degree 2.
struct RingGenerator {
    std::string name;
    int degree = 0;
    friend bool operator==(const RingGenerator&, const RingGenerator&) = default;
};

/// Ring-structure annotations attached to a graded cohomology table.
struct RingNotes {
    std::vector<RingGenerator> generators;
    std::vector<std::string> products;  ///< e.g. "x^2 generates H^4"
    bool complete = false;              ///< generator list known to be complete
    std::vector<std::string> remarks;
    friend bool operator==(const RingNotes&, const RingNotes&) = default;
};

/// Integral cohomology in degrees 0..7 plus ring annotations.
struct GradedCohomology {
    std::array<AbelianGroup, 8> groups;
    RingNotes ring;
};

/// Full cohomology table for one manifold. Throws validation_error on
/// invalid params.
GradedCohomology cohomology_table(const FamilyParams& params);

/// Poincare duality / universal coefficients shape checks for a closed
/// simply connected orientable 7-manifold. Returns violation messages.
std::vector<std::string> check_duality(const GradedCohomology& table);

enum class Orbit { KMinus, KPlus, Principal };

/// Cohomology of one orbit: the non-principal orbits G/K-, G/K+ or the
/// principal orbit G/H.
struct OrbitCohomology {
    Orbit orbit = Orbit::KMinus;
    std::vector<AbelianGroup> groups;  ///< degrees 0..dim(orbit)
    bool orientable = false;
};

/// Fixed orbit tables per family and case. Family M's orbit tables are not
/// encoded; requesting them throws invalid_input. Throws validation_error on
/// invalid params.
OrbitCohomology orbit_cohomology(const FamilyParams& params, Orbit orbit);

}  // namespace cohomog7
