#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"
#include "tquot/topology.hpp"

using namespace tquot;

namespace {

UnivariatePolynomial t_pow(int e) { return UnivariatePolynomial::monomial(e, 1); }

// Prepend a zero column: the new circle is fixed by the whole torus.
IntMatrix with_zero_column(const IntMatrix& z) {
    IntMatrix m(z.rows(), z.cols() + 1);
    for (std::size_t i = 0; i < z.rows(); ++i) {
        for (std::size_t j = 0; j < z.cols(); ++j) m(i, j + 1) = z(i, j);
    }
    return m;
}

}  // namespace

TEST_CASE("quotient Poincare polynomial on the worked examples") {
    SECTION("both weighted circles give the two-sphere") {
        REQUIRE(poincare_quotient(parse_action("2 3")).poincare == t_pow(2));
        REQUIRE(poincare_quotient(parse_action("1 1")).poincare == t_pow(2));
    }
    SECTION("the diagonal circle in the Hopf family gives projective spaces") {
        REQUIRE(poincare_quotient(parse_action("1 1 1")).poincare == t_pow(2) + t_pow(4));
    }
    SECTION("a coloop collapses everything") {
        QuotientSummary q = poincare_quotient(parse_action("1 0\n0 1"));
        REQUIRE(q.poincare.is_zero());
        REQUIRE(q.dimension == 1);  // 2n - 1 - r: the quotient is an arc
    }
    SECTION("one circuit in rank two gives the three-sphere") {
        QuotientSummary q = poincare_quotient(parse_action("1 0 1\n0 1 1"));
        REQUIRE(q.poincare == t_pow(3));
        REQUIRE(q.dimension == 3);
        REQUIRE(q.simply_connected);
        REQUIRE(q.torsion_free);
    }
    SECTION("trivial torus keeps the sphere itself") {
        QuotientSummary q = poincare_quotient(TorusAction(IntMatrix(0, 2)));
        REQUIRE(q.poincare == t_pow(3));
        REQUIRE(q.dimension == 3);
    }
    SECTION("the degenerate circle case has degree one") {
        QuotientSummary q = poincare_quotient(TorusAction(IntMatrix(0, 1)));
        REQUIRE(q.poincare == t_pow(1));
        REQUIRE_FALSE(q.simply_connected);
    }
}

TEST_CASE("quotients of non-effective actions are refused with the kernel") {
    try {
        poincare_quotient(parse_action("2 4"));
        FAIL("expected NotEffectiveError");
    } catch (const NotEffectiveError& e) {
        REQUIRE(e.kernel() == IsotropyGroup{0, {2}});
    }
}

TEST_CASE("simple connectivity") {
    REQUIRE(is_simply_connected(parse_action("1 2 3")));
    REQUIRE_FALSE(is_simply_connected(TorusAction(IntMatrix(0, 1))));
    REQUIRE(is_simply_connected(parse_action("5")));
}

TEST_CASE("exponent parity and top degree of the quotient polynomial") {
    std::mt19937 rng(740901);
    int tested = 0;
    for (int trial = 0; trial < 300 && tested < 80; ++trial) {
        TorusAction a{testsupport::random_matrix(rng, 3, 8, -3, 3)};
        if (!is_effective(a).effective) continue;
        ++tested;
        QuotientSummary q = poincare_quotient(a);
        const int r = static_cast<int>(a.torus_rank());
        REQUIRE(q.betti.size() == q.poincare.terms().size());
        for (const auto& [deg, rk] : q.betti) REQUIRE(q.poincare.coeff(deg) == rk);
        for (const auto& [e, c] : q.poincare.terms()) {
            REQUIRE(c > 0);
            REQUIRE((e - (r - 1)) % 2 == 0);  // all exponents are r-1 mod 2
            REQUIRE(e <= q.dimension);
        }
        RepresentedMatroid m = matroid_of(a);
        if (m.coloops().empty()) {
            REQUIRE(q.poincare.max_exponent() == q.dimension);
            REQUIRE(q.poincare.coeff(q.dimension) == 1);
        }
    }
    REQUIRE(tested >= 80);
}

TEST_CASE("a fixed circle joins: prepending a zero column doubles by t^2") {
    std::mt19937 rng(740902);
    int tested = 0;
    for (int trial = 0; trial < 200 && tested < 50; ++trial) {
        TorusAction a{testsupport::random_matrix(rng, 3, 6, -3, 3)};
        if (!is_effective(a).effective) continue;
        ++tested;
        TorusAction joined{with_zero_column(a.matrix())};
        REQUIRE(poincare_quotient(joined).poincare ==
                poincare_quotient(a).poincare.shifted(2));
    }
    REQUIRE(tested >= 50);
}

TEST_CASE("deletion-contraction at the Poincare level") {
    std::mt19937 rng(740903);
    for (int trial = 0; trial < 60; ++trial) {
        IntMatrix z = testsupport::random_matrix(rng, 3, 6, -3, 3);
        RepresentedMatroid m{z};
        const std::size_t r = z.rows();
        for (int e : m.ground_set()) {
            if (m.is_loop(e) || m.is_coloop(e)) continue;
            RepresentedMatroid del = m.delete_element(e);
            RepresentedMatroid con = m.contract_element(e);
            REQUIRE(reduced_poincare(m, r) ==
                    reduced_poincare(del, r) + reduced_poincare(con, r - 1).shifted(1));
        }
    }
}

TEST_CASE("singular Poincare polynomial on the worked examples") {
    SECTION("three isolated singular points") {
        REQUIRE(poincare_singular(parse_action("1 0 1\n0 1 1")) ==
                UnivariatePolynomial::constant(2));
    }
    SECTION("free rank-one actions have empty singular sets") {
        REQUIRE(poincare_singular(parse_action("1 1")).is_zero());
    }
    SECTION("two fixed points of the arc") {
        REQUIRE(poincare_singular(parse_action("1 0\n0 1")) ==
                UnivariatePolynomial::constant(1));
    }
    SECTION("rank one with a fixed circle") {
        REQUIRE(poincare_singular(parse_action("0 1 1")) == t_pow(1));
    }
    SECTION("trivial torus") {
        REQUIRE(poincare_singular(TorusAction(IntMatrix(0, 2))).is_zero());
    }
}

TEST_CASE("wedge decomposition on the worked examples") {
    SECTION("three-point line") {
        auto wedge = singular_wedge(parse_action("1 0 1\n0 1 1"));
        REQUIRE(wedge.size() == 4);  // bottom + three atoms
        REQUIRE(wedge[0].flat.elements.empty());
        REQUIRE(wedge[0].multiplicity == 2);
        REQUIRE(wedge[0].sphere_dim == 0);
        REQUIRE(wedge[0].flat_space_is_empty);
        for (std::size_t i = 1; i < 4; ++i) {
            REQUIRE(wedge[i].multiplicity == 1);
            REQUIRE(wedge[i].sphere_dim == -1);
            REQUIRE(wedge[i].flat_quotient_poincare.is_zero());  // a point
        }
        REQUIRE(wedge_aggregate(wedge) == UnivariatePolynomial::constant(2));
    }
    SECTION("two coloops") {
        auto wedge = singular_wedge(parse_action("1 0\n0 1"));
        REQUIRE(wedge.size() == 3);
        REQUIRE(wedge[0].multiplicity == 1);  // bottom contributes one 0-sphere
        REQUIRE(wedge[0].sphere_dim == 0);
        REQUIRE(wedge[1].sphere_dim == -1);
        REQUIRE(wedge_aggregate(wedge) == UnivariatePolynomial::constant(1));
    }
    SECTION("parallel pair: the single summand is the empty join marker") {
        auto wedge = singular_wedge(parse_action("1 1"));
        REQUIRE(wedge.size() == 1);
        REQUIRE(wedge[0].flat_space_is_empty);
        REQUIRE(wedge[0].sphere_dim == -1);
        REQUIRE(wedge_aggregate(wedge).is_zero());
    }
}

TEST_CASE("wedge aggregation reproduces the singular Poincare polynomial") {
    std::mt19937 rng(740904);
    int tested = 0;
    for (int trial = 0; trial < 300 && tested < 80; ++trial) {
        TorusAction a{testsupport::random_matrix(rng, 3, 7, -3, 3)};
        if (!is_effective(a).effective) continue;
        if (a.torus_rank() == 0) continue;
        ++tested;
        REQUIRE(wedge_aggregate(singular_wedge(a)) == poincare_singular(a));
    }
    REQUIRE(tested >= 80);
}

TEST_CASE("wedge multiplicities are the unsigned Mobius values of the upper intervals") {
    std::mt19937 rng(740906);
    int tested = 0;
    for (int trial = 0; trial < 100 && tested < 25; ++trial) {
        TorusAction a{testsupport::random_matrix(rng, 3, 6, -3, 3)};
        if (!is_effective(a).effective || a.torus_rank() == 0) continue;
        ++tested;
        RepresentedMatroid m = matroid_of(a);
        for (const WedgeSummand& s : singular_wedge(a)) {
            // the interval [F, E] is the lattice of the contraction by F
            Integer interval_mobius = m.contract_set(s.flat.elements).mobius();
            REQUIRE(s.multiplicity == abs_int(interval_mobius));
        }
    }
    REQUIRE(tested >= 25);
}

TEST_CASE("singular strata") {
    SECTION("three-point line: three point strata") {
        auto strata = singular_strata(parse_action("1 0 1\n0 1 1"));
        REQUIRE(strata.size() == 3);
        for (const auto& s : strata) {
            REQUIRE(s.hyperplane.elements.size() == 1);
            REQUIRE(s.dimension == 0);
        }
    }
    SECTION("two coloops: two point strata") {
        auto strata = singular_strata(parse_action("1 0\n0 1"));
        REQUIRE(strata.size() == 2);
        REQUIRE(strata[0].dimension == 0);
    }
    SECTION("rank one, loop-free: the empty hyperplane is omitted") {
        REQUIRE(singular_strata(parse_action("1 1")).empty());
    }
    SECTION("rank one with fixed circles keeps the loop stratum") {
        auto strata = singular_strata(parse_action("0 1 1"));
        REQUIRE(strata.size() == 1);
        REQUIRE(strata[0].hyperplane.elements == std::vector<int>{0});
        REQUIRE(strata[0].dimension == 1);
    }
}

TEST_CASE("convolution identity on the worked examples and random matrices") {
    REQUIRE(convolution_check(RepresentedMatroid{IntMatrix{{1, 0, 1}, {0, 1, 1}}}));
    REQUIRE(convolution_check(RepresentedMatroid{IntMatrix{{0}}}));

    std::mt19937 rng(740905);
    for (int trial = 0; trial < 80; ++trial) {
        RepresentedMatroid m{testsupport::random_matrix(rng, 3, 8, -3, 3)};
        REQUIRE(convolution_check(m));
    }
}
