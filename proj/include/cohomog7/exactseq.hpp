#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "cohomog7/abelian.hpp"
#include "cohomog7/intmatrix.hpp"

namespace cohomog7 {

/// The Mayer-Vietoris data feeding the cyclicity criterion for a double disk
/// bundle X = D(B-) u D(B+). free_map is pi* = pi-* - pi+* restricted to
/// free parts, a map free(H^{k-1}(B-) + H^{k-1}(B+)) -> free(H^{k-1}(dD(B))).
/// The two booleans assert the hypotheses that are established case by case
/// upstream: H^{k-t}(B-) cyclic, and H^k(B-), H^k(B+) both trivial.
struct MayerVietorisInput {
    IntMatrix free_map;
    bool source_is_cyclic_below = true;
    bool target_degree_groups_trivial = true;
};

/// H^k(X) for a double disk bundle satisfying the cyclicity hypotheses:
/// the cokernel of free_map, which is Z_r with r = |det(free_map)| under the
/// Z_0 = Z convention. Throws hypotheses_not_met naming the withdrawn
/// hypothesis, invalid_input when free_map is not square.
AbelianGroup cyclic_lemma(const MayerVietorisInput& input);

/// ker(pi*) on free parts: the free group of rank kernel_rank(free_map).
/// This is H^3(X) in the families where the Mayer-Vietoris sequence
/// identifies the third cohomology with the kernel.
AbelianGroup mv_kernel(const MayerVietorisInput& input);

/// Inputs to the ring-generator criterion: whether x cup alpha generates
/// H^kappa(X) for x a generator of H^t(X). Scalar facts (s, n, the zero-map
/// and surjectivity flags) are asserted by the caller; the checker evaluates
/// the three numbered conditions plus the surjectivity hypothesis.
struct GeneratorLemmaInput {
    int t = 2;                               ///< fiber-disk dimension of D(B-)
    int kappa = 4;                           ///< target degree, kappa > t
    mpz_class n = 1;                         ///< order of H^t(B+), finite cyclic, n >= 1
    AbelianGroup h_kappa_x;                  ///< H^kappa(X), must be cyclic
    std::vector<mpz_class> torsion_orders_t; ///< invariant factors of T in H^{kappa-t}(B-) = Z.gamma + T
    mpz_class s = 0;                         ///< coefficient of gamma in i-*(alpha)
    bool surjects_onto_b_plus = true;        ///< i+*: H^t(X) -> H^t(B+) surjective
    bool i_plus_star_zero_at_kappa = true;   ///< i+*: H^kappa(X) -> H^kappa(B+) is zero
};

/// Outcome of the generator criterion with one line of justification per check.
struct GeneratorCertificate {
    bool verdict = false;
    bool condition1 = false;
    bool condition2 = false;
    bool condition3 = false;
    bool surjectivity = false;
    std::vector<std::string> narrative;
};

/// Evaluate the generator criterion.
///   Condition 1: H^kappa(X) non-trivial cyclic and i+* zero at kappa.
///   Condition 2: if H^kappa(X) is finite, every order in T is coprime to it.
///   Condition 3: |s| = n when H^kappa(X) is free; gcd(s, |H^kappa(X)|) = 1
///                when it is finite.
/// The verdict additionally requires the surjectivity hypothesis.
/// Throws invalid_input when h_kappa_x is not cyclic, n < 1, or kappa <= t.
GeneratorCertificate generator_lemma_check(const GeneratorLemmaInput& input);

}  // namespace cohomog7
