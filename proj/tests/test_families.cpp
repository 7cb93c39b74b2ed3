#include <doctest.h>

#include <random>

#include "cohomog7/families.hpp"

using namespace cohomog7;

namespace {

// Rejection-sample one valid tuple of the given family with |parameter| <= bound.
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

bool has_issue(const std::vector<std::string>& issues, const std::string& needle) {
    for (const auto& issue : issues) {
        if (issue.find(needle) != std::string::npos) return true;
    }
    return false;
}

}  // namespace

TEST_SUITE_BEGIN("families");

TEST_CASE("validation examples") {
    CHECK(is_valid(FamilyParams::make_l(1, 1, 1, 3)));
    CHECK(has_issue(validate(FamilyParams::make_n(1, 1, 3, 1)), "p+ must be even"));
    CHECK(has_issue(validate(FamilyParams::make_o(3, 5, 2)), "m = 2 requires p even"));
    CHECK(has_issue(validate(FamilyParams::make_l(2, 1, 1, 1)), "p- must be congruent to 1 mod 4"));
    CHECK(has_issue(validate(FamilyParams::make_l(1, 1, 3, 2)), "q+ must be odd when p+ is odd"));
    CHECK(has_issue(validate(FamilyParams::make_m(1, 1, 3, 1)), "p+ must be congruent to 1 mod 4"));
    CHECK(has_issue(validate(FamilyParams::make_n(2, 4, 2, 1)), "gcd(p-, q-) must be 1"));
    CHECK(has_issue(validate(FamilyParams::make_o(0, 1, 1)), "parameters must be non-zero"));
    CHECK(has_issue(validate(FamilyParams::make_o(2, 1, 3)), "m must be 1 or 2"));
    CHECK(is_valid(FamilyParams::make_l(-3, 1, 2, 1)));  // -3 = 1 mod 4
}

TEST_CASE("parameter string grammar round-trips") {
    const auto n = parse_params("N(1,1)(2,1)");
    REQUIRE(n.has_value());
    CHECK(*n == FamilyParams::make_n(1, 1, 2, 1));
    CHECK(to_string(*n) == "N(1,1)(2,1)");

    const auto o = parse_params(" O( 2 , 1 : 1 ) ");
    REQUIRE(o.has_value());
    CHECK(*o == FamilyParams::make_o(2, 1, 1));
    CHECK(to_string(*o) == "O(2,1:1)");

    const auto l = parse_params("L(-3,1)(2,-5)");
    REQUIRE(l.has_value());
    CHECK(*l == FamilyParams::make_l(-3, 1, 2, -5));

    const auto plus = parse_params("N(+1,1)(+2,-1)");
    REQUIRE(plus.has_value());
    CHECK(*plus == FamilyParams::make_n(1, 1, 2, -1));

    std::string error;
    CHECK_FALSE(parse_params("P(1,1)(1,1)", &error).has_value());
    CHECK_FALSE(parse_params("N(1,1)", &error).has_value());
    CHECK_FALSE(parse_params("O(1,1)", &error).has_value());
    CHECK_FALSE(parse_params("N(1,1)(2,1)x", &error).has_value());
    CHECK_FALSE(parse_params("", &error).has_value());
    CHECK_FALSE(parse_params("N(1,,1)(2,1)", &error).has_value());
}

TEST_CASE("pi* matrix for family O") {
    const PiStarData data = pi_star_matrix(FamilyParams::make_o(2, 1, 1));
    REQUIRE(data.pi_matrix.has_value());
    CHECK(*data.pi_matrix == IntMatrix::from_rows({{-1, -1}, {4, 1}}));
    CHECK(data.factorization.det_eta_abs == 1);
    CHECK(data.factorization.det_mu_abs == 1);
    CHECK(data.factorization.resulting_r == 3);

    const PiStarData degenerate = pi_star_matrix(FamilyParams::make_o(1, 1, 1));
    REQUIRE(degenerate.pi_matrix.has_value());
    CHECK(*degenerate.pi_matrix == IntMatrix::from_rows({{-1, -1}, {1, 1}}));
    CHECK(determinant(*degenerate.pi_matrix) == 0);

    const PiStarData m2 = pi_star_matrix(FamilyParams::make_o(2, 3, 2));
    CHECK_FALSE(m2.pi_matrix.has_value());
    REQUIRE(m2.tau_matrix.has_value());
    CHECK(m2.factorization.det_eta_abs == 2);
    CHECK(m2.factorization.det_mu_abs == 2);
    CHECK(m2.factorization.resulting_r == 5);
}

TEST_CASE("tau* matrix and covering factors for family L") {
    const PiStarData data = pi_star_matrix(FamilyParams::make_l(1, 1, 1, 3));
    CHECK_FALSE(data.pi_matrix.has_value());
    REQUIRE(data.tau_matrix.has_value());
    CHECK(*data.tau_matrix == IntMatrix::from_rows({{-1, -9}, {1, 1}}));
    CHECK(data.factorization.det_eta_abs == 4);
    CHECK(data.factorization.det_mu_abs == 1);
    CHECK(data.factorization.resulting_r == 2);

    const PiStarData even = pi_star_matrix(FamilyParams::make_l(1, 1, 2, 1));
    CHECK(even.factorization.det_eta_abs == 4);
    CHECK(even.factorization.det_mu_abs == 4);
    CHECK(even.factorization.resulting_r == 3);
}

TEST_CASE("family M carries the factorization only") {
    const PiStarData data = pi_star_matrix(FamilyParams::make_m(1, 1, 5, 1));
    CHECK_FALSE(data.pi_matrix.has_value());
    CHECK_FALSE(data.tau_matrix.has_value());
    CHECK(data.factorization.det_eta_abs == 8);
    CHECK(data.factorization.resulting_r == 3);
}

TEST_CASE("closed-form r examples") {
    CHECK(fourth_cohomology_order(FamilyParams::make_l(1, 1, 1, 3)) == 2);  // |1 - 9| / 4
    CHECK(fourth_cohomology_order(FamilyParams::make_n(1, 1, 2, 1)) == 3);  // |4 - 1|
    CHECK(fourth_cohomology_order(FamilyParams::make_o(2, 3, 2)) == 5);     // |4 - 9|
    CHECK(fourth_cohomology_order(FamilyParams::make_m(1, 1, 5, 1)) == 3);  // |25 - 1| / 8
    CHECK_THROWS_AS(fourth_cohomology_order(FamilyParams::make_n(1, 1, 3, 1)),
                    cohomog7::validation_error);
}

TEST_CASE("cohomology table examples") {
    const GradedCohomology n = cohomology_table(FamilyParams::make_n(1, 1, 2, 1));
    CHECK(n.groups[0] == AbelianGroup::free_group(1));
    CHECK(n.groups[1].is_trivial());
    CHECK(n.groups[2] == AbelianGroup::free_group(1));
    CHECK(n.groups[3].is_trivial());
    CHECK(n.groups[4] == AbelianGroup::cyclic(3));
    CHECK(n.groups[5] == AbelianGroup::free_group(1));
    CHECK(n.groups[6].is_trivial());
    CHECK(n.groups[7] == AbelianGroup::free_group(1));
    CHECK(n.ring.complete);
    REQUIRE(n.ring.generators.size() == 2);
    CHECK(n.ring.generators[0].name == "x");
    CHECK(n.ring.generators[1].degree == 5);

    // degenerate determinant: H^3 = Z, H^4 = Z_0 = Z
    const GradedCohomology o = cohomology_table(FamilyParams::make_o(1, 1, 1));
    CHECK(o.groups[3] == AbelianGroup::free_group(1));
    CHECK(o.groups[4] == AbelianGroup::free_group(1));
    CHECK_FALSE(o.ring.complete);

    const GradedCohomology l_even = cohomology_table(FamilyParams::make_l(1, 1, 2, 1));
    CHECK(l_even.groups[3] == AbelianGroup::cyclic(2));
    CHECK(l_even.groups[4] == AbelianGroup::cyclic(3));
    CHECK(l_even.groups[5] == AbelianGroup::from_parts(1, {2}));
    CHECK_FALSE(l_even.ring.complete);
}

TEST_CASE("closed-form r equals the determinant route on random sweeps") {
    std::mt19937_64 rng(8675309);
    for (Family family : {Family::L, Family::M, Family::N, Family::O}) {
        for (int trial = 0; trial < 250; ++trial) {
            const FamilyParams params = random_valid(family, 99, rng);
            const PiStarData data = pi_star_matrix(params);
            const mpz_class r = fourth_cohomology_order(params);  // cross-checks internally
            CHECK(r == data.factorization.resulting_r);
            if (data.pi_matrix) {
                CHECK(r == abs(determinant(*data.pi_matrix)));
            }
            CHECK(abs(data.factorization.det_tau) * data.factorization.det_mu_abs %
                      data.factorization.det_eta_abs ==
                  0);
        }
    }
}

TEST_CASE("parity facts over random sweeps") {
    std::mt19937_64 rng(5551212);
    for (int trial = 0; trial < 250; ++trial) {
        const FamilyParams l = random_valid(Family::L, 99, rng);
        const mpz_class r = fourth_cohomology_order(l);
        if (l.p_plus % 2 != 0) {
            CHECK(r % 2 == 0);
        } else {
            CHECK(r % 2 == 1);
        }

        const FamilyParams n = random_valid(Family::N, 99, rng);
        const mpz_class rn = fourth_cohomology_order(n);
        CHECK(rn % 2 == 1);
        CHECK(rn >= 3);

        const FamilyParams m = random_valid(Family::M, 99, rng);
        const mpz_class pp = static_cast<long>(m.p_plus);
        const mpz_class qm = static_cast<long>(m.q_minus);
        const mpz_class pm = static_cast<long>(m.p_minus);
        const mpz_class qp = static_cast<long>(m.q_plus);
        CHECK(abs(pp * pp * qm * qm - pm * pm * qp * qp) % 8 == 0);
    }
}

TEST_CASE("every emitted table satisfies duality") {
    std::mt19937_64 rng(14142);
    for (Family family : {Family::L, Family::M, Family::N, Family::O}) {
        for (int trial = 0; trial < 100; ++trial) {
            const FamilyParams params = random_valid(family, 50, rng);
            const GradedCohomology table = cohomology_table(params);
            CHECK(check_duality(table).empty());
            CHECK(table.groups[4] == AbelianGroup::cyclic(fourth_cohomology_order(params)));
        }
    }
}

TEST_CASE("H^4 equals the cokernel of the explicit pi* matrix for O with m = 1") {
    std::mt19937_64 rng(987654);
    for (int trial = 0; trial < 200; ++trial) {
        FamilyParams params = random_valid(Family::O, 60, rng);
        params.m = 1;
        const PiStarData data = pi_star_matrix(params);
        REQUIRE(data.pi_matrix.has_value());
        const GradedCohomology table = cohomology_table(params);
        CHECK(cokernel(*data.pi_matrix) == table.groups[4]);
        CHECK(AbelianGroup::free_group(kernel_rank(*data.pi_matrix)) == table.groups[3]);
    }
}

TEST_CASE("r is invariant under the pair sign flip") {
    std::mt19937_64 rng(606060);
    for (int trial = 0; trial < 150; ++trial) {
        const FamilyParams n = random_valid(Family::N, 60, rng);
        FamilyParams minus_flip = n;
        minus_flip.p_minus = -n.p_minus;
        minus_flip.q_minus = -n.q_minus;
        FamilyParams plus_flip = n;
        plus_flip.p_plus = -n.p_plus;
        plus_flip.q_plus = -n.q_plus;
        REQUIRE(is_valid(minus_flip));
        REQUIRE(is_valid(plus_flip));
        CHECK(fourth_cohomology_order(minus_flip) == fourth_cohomology_order(n));
        CHECK(fourth_cohomology_order(plus_flip) == fourth_cohomology_order(n));

        const FamilyParams o = random_valid(Family::O, 60, rng);
        FamilyParams o_flip = o;
        o_flip.p_minus = -o.p_minus;
        o_flip.q_minus = -o.q_minus;
        REQUIRE(is_valid(o_flip));
        CHECK(fourth_cohomology_order(o_flip) == fourth_cohomology_order(o));

        const FamilyParams l = random_valid(Family::L, 60, rng);
        FamilyParams l_flip = l;
        l_flip.p_plus = -l.p_plus;
        l_flip.q_plus = -l.q_plus;
        REQUIRE(is_valid(l_flip));
        CHECK(fourth_cohomology_order(l_flip) == fourth_cohomology_order(l));
    }
}

TEST_CASE("orbit cohomology tables") {
    const FamilyParams l = FamilyParams::make_l(1, 1, 1, 3);
    const OrbitCohomology k_minus = orbit_cohomology(l, Orbit::KMinus);
    CHECK(k_minus.orientable);
    CHECK(k_minus.groups ==
          std::vector<AbelianGroup>{AbelianGroup::free_group(1), AbelianGroup{},
                                    AbelianGroup::free_group(1), AbelianGroup::free_group(1),
                                    AbelianGroup{}, AbelianGroup::free_group(1)});

    const OrbitCohomology k_plus = orbit_cohomology(l, Orbit::KPlus);
    CHECK_FALSE(k_plus.orientable);
    CHECK(k_plus.groups ==
          std::vector<AbelianGroup>{AbelianGroup::free_group(1), AbelianGroup{},
                                    AbelianGroup::cyclic(2), AbelianGroup::free_group(1),
                                    AbelianGroup{}, AbelianGroup::cyclic(2)});

    const OrbitCohomology o_plus = orbit_cohomology(FamilyParams::make_o(2, 1, 1), Orbit::KPlus);
    CHECK(o_plus.orientable);  // S^3
    CHECK(o_plus.groups ==
          std::vector<AbelianGroup>{AbelianGroup::free_group(1), AbelianGroup{}, AbelianGroup{},
                                    AbelianGroup::free_group(1)});

    // the N-family principal orbit has H^2 = Z_2 + Z_4
    const OrbitCohomology n_h = orbit_cohomology(FamilyParams::make_n(1, 1, 2, 1),
                                                 Orbit::Principal);
    CHECK(n_h.groups[2] == AbelianGroup::normalize({2, 4}));
    CHECK(n_h.groups[3] == AbelianGroup::from_parts(2, {2}));

    CHECK_THROWS_AS(orbit_cohomology(FamilyParams::make_m(1, 1, 5, 1), Orbit::KMinus),
                    cohomog7::invalid_input);
    CHECK_THROWS_AS(orbit_cohomology(FamilyParams::make_n(1, 1, 3, 1), Orbit::KMinus),
                    cohomog7::validation_error);
}

TEST_SUITE_END();
