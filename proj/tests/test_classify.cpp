#include <doctest.h>

#include <random>

#include "cohomog7/classify.hpp"

using namespace cohomog7;

namespace {

template <typename Rng>
FamilyParams random_valid(Family family, long long bound, Rng& rng) {
    std::uniform_int_distribution<long long> pick(-bound, bound);
    std::uniform_int_distribution<int> pick_m(1, 2);
    for (;;) {
        FamilyParams params;
        switch (family) {
            case Family::L:
                params = FamilyParams::make_l(pick(rng), pick(rng), pick(rng), pick(rng));
                break;
            case Family::M:
                params = FamilyParams::make_m(pick(rng), pick(rng), pick(rng), pick(rng));
                break;
            case Family::N:
                params = FamilyParams::make_n(pick(rng), pick(rng), pick(rng), pick(rng));
                break;
            case Family::O:
                params = FamilyParams::make_o(pick(rng), pick(rng), pick_m(rng));
                break;
        }
        if (is_valid(params)) return params;
    }
}

}  // namespace

TEST_SUITE_BEGIN("classify");

TEST_CASE("type E_r examples") {
    const ErClassification l = is_type_er(FamilyParams::make_l(1, 1, 1, 3));
    CHECK(l.is_type_er);
    CHECK(l.r == 2);

    CHECK_FALSE(is_type_er(FamilyParams::make_o(1, 1, 1)).is_type_er);
    CHECK_FALSE(is_type_er(FamilyParams::make_l(1, 1, 2, 1)).is_type_er);  // p+ even
    CHECK(is_type_er(FamilyParams::make_n(1, 1, 2, 1)).is_type_er);
    CHECK_FALSE(is_type_er(FamilyParams::make_m(1, 1, 5, 1)).is_type_er);
    CHECK_FALSE(is_type_er(FamilyParams::make_l(1, 1, 1, 1)).is_type_er);  // r = 0
}

TEST_CASE("Eschenburg ring examples") {
    CHECK(has_eschenburg_ring(FamilyParams::make_n(1, 1, 2, 1)));
    CHECK(has_eschenburg_ring(FamilyParams::make_o(2, 3, 2)));
    CHECK(is_known_eschenburg_space(FamilyParams::make_o(2, 3, 2)));
    CHECK_FALSE(has_eschenburg_ring(FamilyParams::make_o(3, 5, 1)));  // r = 16 even
    CHECK_FALSE(has_eschenburg_ring(FamilyParams::make_l(1, 1, 1, 3)));
    CHECK_FALSE(has_eschenburg_ring(FamilyParams::make_l(1, 1, 2, 1)));
    CHECK_FALSE(is_known_eschenburg_space(FamilyParams::make_o(2, 1, 1)));
    CHECK_FALSE(is_known_eschenburg_space(FamilyParams::make_o(2, 5, 2)));
}

TEST_CASE("report assembles a consistent row") {
    const ClassificationReport rep = report(FamilyParams::make_n(1, 3, 2, 1));
    CHECK(rep.valid);
    CHECK(*rep.r == 35);  // |4*9 - 1*1|
    CHECK(rep.type_er);
    CHECK(rep.eschenburg_ring);
    CHECK_FALSE(rep.known_eschenburg_space);
    CHECK_FALSE(rep.provenance.empty());

    const ClassificationReport m = report(FamilyParams::make_m(1, 1, 5, 1));
    CHECK(*m.r == 3);
    CHECK_FALSE(m.type_er);
    bool bundle_note = false;
    for (const auto& note : m.table->ring.remarks) {
        if (note.find("S^3-bundle over S^4") != std::string::npos) bundle_note = true;
    }
    CHECK(bundle_note);

    const ClassificationReport bad = report(FamilyParams::make_n(1, 1, 3, 1));
    CHECK_FALSE(bad.valid);
    REQUIRE_FALSE(bad.errors.empty());
    CHECK(bad.errors[0].find("p+ must be even") != std::string::npos);
    CHECK_FALSE(bad.table.has_value());
    CHECK_FALSE(bad.r.has_value());
}

TEST_CASE("json report carries the stable keys in a fixed order") {
    const ordered_json j = report(FamilyParams::make_n(1, 1, 2, 1)).to_json();
    const std::vector<std::string> expected_keys = {
        "family",          "params",         "valid",
        "errors",          "groups",         "r",
        "is_type_Er",      "eschenburg_ring", "known_eschenburg_space",
        "ring_generators", "ring_products",  "ring_complete",
        "notes",           "provenance",     "pi_star"};
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == expected_keys);
    CHECK(j["family"] == "N");
    CHECK(j["params"] == "N(1,1)(2,1)");
    CHECK(j["r"] == 3);
    CHECK(j["groups"].size() == 8);
    CHECK(j["groups"][4]["display"] == "Z_3");
    CHECK(j["groups"][4]["torsion"][0] == 3);
    CHECK(j["groups"][4]["free_rank"] == 0);
}

TEST_CASE("generator certificates serialize with stable keys") {
    GeneratorLemmaInput in;
    in.t = 2;
    in.kappa = 4;
    in.n = 4;
    in.h_kappa_x = AbelianGroup::cyclic(3);
    in.torsion_orders_t = {2};
    in.s = 1;
    const ordered_json j = certificate_to_json(generator_lemma_check(in));
    const std::vector<std::string> expected_keys = {"condition1", "condition2", "condition3",
                                                    "surjectivity", "verdict", "narrative"};
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == expected_keys);
    CHECK(j["verdict"] == true);
    CHECK(j["condition3"] == true);
    CHECK(j["narrative"].is_array());
}

TEST_CASE("report is deterministic") {
    const FamilyParams params = FamilyParams::make_o(4, 7, 1);
    CHECK(report(params).to_json().dump() == report(params).to_json().dump());
}

TEST_CASE("predicate agrees with the table shape across sweeps") {
    std::mt19937_64 rng(271828);
    for (Family family : {Family::L, Family::M, Family::N, Family::O}) {
        for (int trial = 0; trial < 120; ++trial) {
            const FamilyParams params = random_valid(family, 60, rng);
            const ClassificationReport rep = report(params);  // throws on inconsistency
            CHECK(rep.type_er == table_has_er_shape(*rep.table));
            if (rep.eschenburg_ring) {
                CHECK(*rep.r % 2 == 1);
                CHECK(rep.type_er);
            }
        }
    }
}

TEST_CASE("no valid N tuple reaches r = 1") {
    std::mt19937_64 rng(161803);
    for (int trial = 0; trial < 400; ++trial) {
        const FamilyParams params = random_valid(Family::N, 99, rng);
        CHECK(fourth_cohomology_order(params) != 1);
        CHECK(has_eschenburg_ring(params));
    }
}

TEST_CASE("degenerate tuples stay valid with infinite H^4") {
    const ClassificationReport o = report(FamilyParams::make_o(1, 1, 1));
    CHECK(o.valid);
    CHECK(*o.r == 0);
    CHECK(o.table->groups[3] == AbelianGroup::free_group(1));
    CHECK(o.table->groups[4] == AbelianGroup::free_group(1));
    CHECK_FALSE(o.type_er);

    const ClassificationReport l = report(FamilyParams::make_l(1, 1, 1, 1));
    CHECK(l.valid);
    CHECK(*l.r == 0);
    CHECK(l.table->groups[3] == AbelianGroup::free_group(1));
    CHECK(l.table->groups[4] == AbelianGroup::free_group(1));
    CHECK_FALSE(l.type_er);
}

TEST_SUITE_END();
