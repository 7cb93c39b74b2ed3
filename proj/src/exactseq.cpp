#include "cohomog7/exactseq.hpp"

#include <utility>

namespace cohomog7 {

AbelianGroup cyclic_lemma(const MayerVietorisInput& input) {
    if (!input.source_is_cyclic_below) {
        throw hypotheses_not_met(
            "hypothesis not met: H^{kappa-t}(B-) was not asserted cyclic");
    }
    if (!input.target_degree_groups_trivial) {
        throw hypotheses_not_met(
            "hypothesis not met: H^kappa(B-) and H^kappa(B+) were not asserted trivial");
    }
    if (!input.free_map.is_square()) {
        throw invalid_input(
            "free part of pi* must be square (equal source and target ranks)");
    }
    return cokernel(input.free_map);
}

AbelianGroup mv_kernel(const MayerVietorisInput& input) {
    return AbelianGroup::free_group(kernel_rank(input.free_map));
}

namespace {

std::string group_or_order(const AbelianGroup& g) {
    return g.str();
}

}  // namespace

GeneratorCertificate generator_lemma_check(const GeneratorLemmaInput& input) {
    if (input.n < 1) throw invalid_input("order n of H^t(B+) must be >= 1");
    if (input.kappa <= input.t) throw invalid_input("kappa must exceed the fiber dimension t");
    if (input.t < 1) throw invalid_input("fiber dimension t must be positive");
    for (const auto& d : input.torsion_orders_t) {
        if (d < 1) throw invalid_input("torsion orders must be positive");
    }
    if (!input.h_kappa_x.is_cyclic()) {
        throw invalid_input("H^kappa(X) must be cyclic, got " + input.h_kappa_x.str());
    }

    GeneratorCertificate cert;
    const std::string hk = "H^" + std::to_string(input.kappa) + "(X)";
    const bool is_free = input.h_kappa_x.free_rank() == 1;
    const auto order = input.h_kappa_x.order();  // nullopt exactly when free

    if (input.n == 1) {
        cert.narrative.push_back(
            "note: n = 1 (trivial H^" + std::to_string(input.t) +
            "(B+)); in the free case Condition 3 degenerates to |s| = 1");
    }

    // Condition 1: non-trivial cyclic target, and i+* vanishes at kappa.
    const bool nontrivial = !input.h_kappa_x.is_trivial();
    cert.condition1 = nontrivial && input.i_plus_star_zero_at_kappa;
    cert.narrative.push_back(
        "Condition 1: " + hk + " = " + group_or_order(input.h_kappa_x) +
        (nontrivial ? " is a non-trivial cyclic group" : " is trivial") + "; i+* at degree " +
        std::to_string(input.kappa) +
        (input.i_plus_star_zero_at_kappa ? " asserted zero" : " not asserted zero") + " -> " +
        (cert.condition1 ? "holds" : "fails"));

    // Condition 2: torsion of H^{kappa-t}(B-) coprime to |H^kappa(X)| when finite.
    cert.condition2 = true;
    if (order) {
        for (const auto& d : input.torsion_orders_t) {
            if (gcd(d, *order) != 1) cert.condition2 = false;
        }
    }
    {
        std::string torsion_list = "{";
        for (std::size_t i = 0; i < input.torsion_orders_t.size(); ++i) {
            if (i) torsion_list += ", ";
            torsion_list += input.torsion_orders_t[i].get_str();
        }
        torsion_list += "}";
        cert.narrative.push_back(
            "Condition 2: torsion orders " + torsion_list +
            (order ? " against |" + hk + "| = " + order->get_str() : ", vacuous for infinite " + hk) +
            " -> " + (cert.condition2 ? "holds" : "fails"));
    }

    // Condition 3: |s| = n in the free case, gcd(s, order) = 1 in the finite case.
    if (is_free) {
        const mpz_class s_abs = abs(input.s);
        cert.condition3 = s_abs == input.n;
        cert.narrative.push_back(
            "Condition 3 (free case): |s| = " + s_abs.get_str() + " vs n = " +
            input.n.get_str() + " -> " + (cert.condition3 ? "holds" : "fails"));
    } else {
        const mpz_class g = gcd(input.s, *order);
        cert.condition3 = g == 1;
        cert.narrative.push_back(
            "Condition 3 (finite case): gcd(s = " + input.s.get_str() + ", |" + hk + "| = " +
            order->get_str() + ") = " + g.get_str() + " -> " +
            (cert.condition3 ? "holds" : "fails"));
    }

    cert.surjectivity = input.surjects_onto_b_plus;
    cert.narrative.push_back(
        std::string("surjectivity of i+*: H^t(X) -> H^t(B+) ") +
        (cert.surjectivity ? "asserted -> holds" : "not asserted -> fails"));

    cert.verdict = cert.condition1 && cert.condition2 && cert.condition3 && cert.surjectivity;
    cert.narrative.push_back(
        std::string("verdict: x cup alpha ") +
        (cert.verdict ? "generates " : "is not certified to generate ") + hk);
    return cert;
}

}  // namespace cohomog7
