#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "cohomog7/errors.hpp"

namespace cohomog7 {

/// Finitely generated abelian group in invariant-factor normal form:
/// Z^free_rank + Z_{d1} + ... + Z_{dk} with 2 <= d1, d1 | d2 | ... | dk.
///
/// The normal form is canonical, so structural equality is group isomorphism.
/// Cyclic factors follow the convention Z_0 = Z (infinite cyclic) and
/// Z_1 = trivial; both are resolved at construction time, never at comparison
/// time.
class AbelianGroup {
public:
    /// The trivial group.
    AbelianGroup() = default;

    /// Z^rank.
    static AbelianGroup free_group(int rank);

    /// Z_n under the Z_0 = Z, Z_1 = 0 convention. Throws invalid_input if n < 0.
    static AbelianGroup cyclic(const mpz_class& n);

    /// Normal form of the direct sum of cyclic groups Z_{raw_factors[i]}.
    /// Every entry must be >= 0 (0 meaning an infinite cyclic summand);
    /// a negative entry throws invalid_input.
    static AbelianGroup normalize(std::vector<mpz_class> raw_factors);

    /// Normal form of Z^free_rank plus the given cyclic factors.
    static AbelianGroup from_parts(int free_rank, std::vector<mpz_class> factors);

    int free_rank() const { return free_rank_; }
    const std::vector<mpz_class>& torsion() const { return torsion_; }

    /// The group re-expressed as a plain factor list: one 0 per free summand
    /// followed by the torsion chain. normalize(factors_as_list()) == *this.
    std::vector<mpz_class> factors_as_list() const;

    /// Number of elements; std::nullopt when the group is infinite.
    std::optional<mpz_class> order() const;

    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }

    /// Generated by a single element: Z, or Z_n (n >= 1).
    bool is_cyclic() const {
        return (free_rank_ == 1 && torsion_.empty()) ||
               (free_rank_ == 0 && torsion_.size() <= 1);
    }

    AbelianGroup direct_sum(const AbelianGroup& other) const;

    /// Display grammar: "0", "Z", "Z^2", "Z_56", "Z + Z_2", "Z^2 + Z_2 + Z_4".
    std::string str() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

private:
    int free_rank_ = 0;
    std::vector<mpz_class> torsion_;
};

inline AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
    return a.direct_sum(b);
}

}  // namespace cohomog7
