#include "cohomog7/classify.hpp"

namespace cohomog7 {

namespace {

mpz_class signed_tau_difference(const FamilyParams& params) {
    const mpz_class pm = static_cast<long>(params.p_minus);
    const mpz_class qm = static_cast<long>(params.q_minus);
    const mpz_class pp = static_cast<long>(params.p_plus);
    const mpz_class qp = static_cast<long>(params.q_plus);
    return pp * pp * qm * qm - pm * pm * qp * qp;
}

}  // namespace

ErClassification is_type_er(const FamilyParams& params) {
    require_valid(params);
    ErClassification out;
    out.r = fourth_cohomology_order(params);
    switch (params.family) {
        case Family::L:
            out.is_type_er = (params.p_plus % 2 != 0) && signed_tau_difference(params) != 0;
            break;
        case Family::M:
            out.is_type_er = false;
            break;
        case Family::N:
            out.is_type_er = true;
            break;
        case Family::O:
            out.is_type_er = !((params.p_minus == 1 || params.p_minus == -1) &&
                               (params.q_minus == 1 || params.q_minus == -1));
            break;
    }
    return out;
}

bool has_eschenburg_ring(const FamilyParams& params) {
    require_valid(params);
    switch (params.family) {
        case Family::N:
            return abs(signed_tau_difference(params)) != 1;
        case Family::O:
            return params.p_minus % 2 == 0 || params.q_minus % 2 == 0;
        case Family::L:
        case Family::M:
            return false;
    }
    return false;
}

bool is_known_eschenburg_space(const FamilyParams& params) {
    if (params.family != Family::O || params.m != 2) return false;
    const mpz_class gap = mpz_class(static_cast<long>(params.p_minus)) -
                          mpz_class(static_cast<long>(params.q_minus));
    return abs(gap) == 1;
}

bool table_has_er_shape(const GradedCohomology& table) {
    const AbelianGroup z = AbelianGroup::free_group(1);
    const AbelianGroup trivial;
    const bool shape = table.groups[0] == z && table.groups[1] == trivial &&
                       table.groups[2] == z && table.groups[3] == trivial &&
                       table.groups[5] == z && table.groups[6] == trivial &&
                       table.groups[7] == z;
    if (!shape) return false;
    const auto order = table.groups[4].order();
    if (!order || *order < 2 || !table.groups[4].is_cyclic()) return false;

    bool has_x = false, has_y = false;
    for (const auto& g : table.ring.generators) {
        if (g.name == "x" && g.degree == 2) has_x = true;
        if (g.name == "y" && g.degree == 5) has_y = true;
    }
    bool x_squared = false;
    for (const auto& p : table.ring.products) {
        if (p == "x^2 generates H^4") x_squared = true;
    }
    return has_x && has_y && x_squared && table.ring.complete;
}

namespace {

void add_r_provenance(ClassificationReport& rep) {
    const FamilyParams& p = rep.params;
    switch (p.family) {
        case Family::L:
            if (p.p_plus % 2 != 0) {
                rep.provenance.emplace_back(
                    "r", "r = |p+^2 q-^2 - p-^2 q+^2| / 4 for family L with p+ odd");
            } else {
                rep.provenance.emplace_back(
                    "r", "r = |p+^2 q-^2 - p-^2 q+^2| for family L with p+ even");
            }
            break;
        case Family::M:
            rep.provenance.emplace_back("r", "r = |p+^2 q-^2 - p-^2 q+^2| / 8 for family M");
            break;
        case Family::N:
            rep.provenance.emplace_back("r", "r = |p-^2 q+^2 - p+^2 q-^2| for family N");
            break;
        case Family::O:
            rep.provenance.emplace_back("r", "r = |p^2 - q^2| for family O");
            break;
    }
    const mpz_class det_tau_abs = abs(rep.pi_star->factorization.det_tau);
    rep.provenance.emplace_back(
        "r cross-check",
        "closed form agrees with |det tau*| * |det mu*| / |det eta*| = " +
            det_tau_abs.get_str() + " * " +
            rep.pi_star->factorization.det_mu_abs.get_str() + " / " +
            rep.pi_star->factorization.det_eta_abs.get_str());
}

void add_table_provenance(ClassificationReport& rep) {
    rep.provenance.emplace_back(
        "H^4", "cyclic of order r: cokernel of pi* restricted to free parts (Smith normal form)");
    switch (rep.params.family) {
        case Family::L:
            if (rep.params.p_plus % 2 != 0) {
                rep.provenance.emplace_back(
                    "H^3", "kernel of pi* on free parts; trivial exactly when r != 0");
            } else {
                rep.provenance.emplace_back(
                    "H^3", "Z_2: duality and universal coefficients applied to the "
                           "Mayer-Vietoris computation for p+ even");
            }
            break;
        case Family::M:
            rep.provenance.emplace_back("H^2, H^5", "trivial: members of family M are 2-connected");
            break;
        case Family::N:
            rep.provenance.emplace_back("groups", "shape (Z,0,Z,0,Z_r,Z,0,Z) for every member of N");
            break;
        case Family::O:
            rep.provenance.emplace_back(
                "H^3", "kernel of pi* on free parts; non-trivial exactly when |p| = |q| = 1");
            break;
    }
}

void add_predicate_provenance(ClassificationReport& rep) {
    switch (rep.params.family) {
        case Family::L:
            rep.provenance.emplace_back(
                "type E_r",
                "family L: type E_r exactly when p+ is odd and p+^2 q-^2 - p-^2 q+^2 != 0");
            rep.provenance.emplace_back(
                "Eschenburg ring",
                rep.params.p_plus % 2 != 0
                    ? "family L with p+ odd has r even, never an Eschenburg ring"
                    : "family L with p+ even has Z_2 summands in H^3 and H^5, never type E_r");
            break;
        case Family::M:
            rep.provenance.emplace_back("type E_r", "family M is 2-connected, never type E_r");
            break;
        case Family::N:
            rep.provenance.emplace_back("type E_r", "every member of family N has type E_r");
            rep.provenance.emplace_back(
                "Eschenburg ring",
                "family N: Eschenburg ring exactly when |p-^2 q+^2 - p+^2 q-^2| != 1; the clause "
                "is redundant for valid parameters, where r is odd and r >= 3");
            break;
        case Family::O:
            rep.provenance.emplace_back(
                "type E_r", "family O: type E_r exactly when |p| and |q| are not both 1");
            rep.provenance.emplace_back(
                "Eschenburg ring", "family O: Eschenburg ring exactly when p or q is even");
            if (rep.known_eschenburg_space) {
                rep.provenance.emplace_back("known Eschenburg space",
                                            "pattern O(p, p +/- 1 : 2) matched");
            }
            break;
    }
}

}  // namespace

ClassificationReport report(const FamilyParams& params) {
    ClassificationReport rep;
    rep.params = params;
    rep.errors = validate(params);
    rep.valid = rep.errors.empty();
    if (!rep.valid) return rep;

    rep.pi_star = pi_star_matrix(params);
    rep.r = fourth_cohomology_order(params);
    rep.table = cohomology_table(params);

    const ErClassification er = is_type_er(params);
    rep.type_er = er.is_type_er;
    if (er.r != *rep.r) {
        throw internal_error("type-E_r route and table route disagree on r for " +
                             to_string(params));
    }
    rep.eschenburg_ring = has_eschenburg_ring(params);
    rep.known_eschenburg_space = is_known_eschenburg_space(params);

    // Consistency gates; a report is never emitted when these fail.
    if (rep.table->groups[4] != AbelianGroup::cyclic(*rep.r)) {
        throw internal_error("H^4 does not match Z_r for " + to_string(params));
    }
    if (auto violations = check_duality(*rep.table); !violations.empty()) {
        throw internal_error("duality violation for " + to_string(params) + ": " + violations[0]);
    }
    if (rep.type_er != table_has_er_shape(*rep.table)) {
        throw internal_error("type-E_r predicate disagrees with table shape for " +
                             to_string(params));
    }
    if (rep.eschenburg_ring && (*rep.r % 2 == 0 || !rep.type_er)) {
        throw internal_error("Eschenburg-ring verdict inconsistent with r for " +
                             to_string(params));
    }

    add_r_provenance(rep);
    add_table_provenance(rep);
    add_predicate_provenance(rep);
    return rep;
}

ordered_json mpz_to_json(const mpz_class& v) {
    if (v.fits_slong_p()) {
        return static_cast<std::int64_t>(v.get_si());
    }
    return v.get_str();
}

ordered_json group_to_json(const AbelianGroup& g) {
    ordered_json j;
    j["display"] = g.str();
    j["free_rank"] = g.free_rank();
    ordered_json torsion = ordered_json::array();
    for (const auto& d : g.torsion()) torsion.push_back(mpz_to_json(d));
    j["torsion"] = std::move(torsion);
    return j;
}

ordered_json certificate_to_json(const GeneratorCertificate& cert) {
    ordered_json j;
    j["condition1"] = cert.condition1;
    j["condition2"] = cert.condition2;
    j["condition3"] = cert.condition3;
    j["surjectivity"] = cert.surjectivity;
    j["verdict"] = cert.verdict;
    j["narrative"] = cert.narrative;
    return j;
}

namespace {

ordered_json matrix_to_json(const IntMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(mpz_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

ordered_json ClassificationReport::to_json() const {
    ordered_json j;
    j["family"] = family_name(params.family);
    j["params"] = to_string(params);
    j["valid"] = valid;
    j["errors"] = errors;

    ordered_json groups = ordered_json::array();
    if (table) {
        for (const auto& g : table->groups) groups.push_back(group_to_json(g));
    }
    j["groups"] = std::move(groups);
    j["r"] = r ? mpz_to_json(*r) : ordered_json(nullptr);
    j["is_type_Er"] = type_er;
    j["eschenburg_ring"] = eschenburg_ring;
    j["known_eschenburg_space"] = known_eschenburg_space;

    ordered_json generators = ordered_json::array();
    ordered_json products = ordered_json::array();
    ordered_json notes = ordered_json::array();
    bool complete = false;
    if (table) {
        for (const auto& g : table->ring.generators) {
            ordered_json gen;
            gen["name"] = g.name;
            gen["degree"] = g.degree;
            generators.push_back(std::move(gen));
        }
        for (const auto& p : table->ring.products) products.push_back(p);
        for (const auto& n : table->ring.remarks) notes.push_back(n);
        complete = table->ring.complete;
    }
    j["ring_generators"] = std::move(generators);
    j["ring_products"] = std::move(products);
    j["ring_complete"] = complete;
    j["notes"] = std::move(notes);

    ordered_json prov = ordered_json::array();
    for (const auto& [claim, why] : provenance) {
        ordered_json entry;
        entry["claim"] = claim;
        entry["justification"] = why;
        prov.push_back(std::move(entry));
    }
    j["provenance"] = std::move(prov);

    if (pi_star) {
        ordered_json ps;
        ps["pi_matrix"] =
            pi_star->pi_matrix ? matrix_to_json(*pi_star->pi_matrix) : ordered_json(nullptr);
        ps["tau_matrix"] =
            pi_star->tau_matrix ? matrix_to_json(*pi_star->tau_matrix) : ordered_json(nullptr);
        ps["det_tau"] = mpz_to_json(pi_star->factorization.det_tau);
        ps["det_eta_abs"] = mpz_to_json(pi_star->factorization.det_eta_abs);
        ps["det_mu_abs"] = mpz_to_json(pi_star->factorization.det_mu_abs);
        j["pi_star"] = std::move(ps);
    } else {
        j["pi_star"] = nullptr;
    }
    return j;
}

}  // namespace cohomog7
