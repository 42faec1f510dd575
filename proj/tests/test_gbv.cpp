#include "defalg/gbv.hpp"
#include "defalg/suite.hpp"

#include "doctest.h"

using namespace defalg;

namespace {

Polyvector pv(int n, const Monomial& m, Frame f, const Scalar& c = 1) { return Polyvector::term(n, 3, m, f, c); }

int index_of(const GBVStructure& S, const Polyvector& p) {
    Element e = to_element(S, p);
    REQUIRE(e.terms.size() == 1);
    return e.terms.begin()->first;
}

}  // namespace

TEST_CASE("abelian GBV") {
    GBVStructure S = abelian_gbv_example();
    CHECK(gbv_check(S).empty());
    for (int i = 0; i < S.basis().size(); ++i)
        for (int j = 0; j < S.basis().size(); ++j)
            CHECK(derived_q(S, Element::basis(i), Element::basis(j)).is_zero());
    REQUIRE(S.alg.unit);
    CHECK(S.Delta(Element::basis(*S.alg.unit)).is_zero());
    CHECK(dgla_verify(S).empty());
}

TEST_CASE("exterior GBV") {
    GBVStructure S = exterior_gbv(0, 0, 1, 0);
    CHECK(gbv_check(S).empty());
    CHECK(dgla_verify(S).empty());
    REQUIRE(S.alg.unit);
    CHECK(S.Delta(Element::basis(*S.alg.unit)).is_zero());
}

TEST_CASE("polyvector fields form GBV algebras") {
    for (int n = 1; n <= 3; ++n)
        for (int D = 1; D <= 3; ++D) CHECK(gbv_check(polyvector_gbv(n, D)).empty());
    CHECK(dgla_verify(polyvector_gbv(2, 2)).empty());
}

TEST_CASE("Schouten bracket examples") {
    // [∂1, z1∂2] = ∂2
    CHECK(schouten(pv(2, {0, 0}, 1), pv(2, {1, 0}, 2)) == pv(2, {0, 0}, 2));
    // [z1∂1, z1] = z1, [∂1, z1^2] = 2 z1
    CHECK(schouten(pv(1, {1}, 1), pv(1, {1}, 0)) == pv(1, {1}, 0));
    CHECK(schouten(pv(1, {0}, 1), pv(1, {2}, 0)) == pv(1, {1}, 0, 2));
    // functions commute
    CHECK(schouten(pv(2, {1, 0}, 0), pv(2, {0, 1}, 0)).is_zero());
    // [∂1, ∂2] = 0 and [∂1∧∂2, z1z2] ≠ 0
    CHECK(schouten(pv(2, {0, 0}, 1), pv(2, {0, 0}, 2)).is_zero());
    CHECK_FALSE(schouten(pv(2, {0, 0}, 3), pv(2, {1, 1}, 0)).is_zero());
}

TEST_CASE("divergence operator") {
    CHECK(delta_volume(pv(1, {1}, 1)) == pv(1, {0}, 0));
    CHECK(delta_coordinates(pv(1, {1}, 1)) == pv(1, {0}, 0));
    CHECK(delta_volume(pv(2, {0, 0}, 0)).is_zero());
    CHECK(delta_volume(pv(2, {2, 0}, 1)) == pv(2, {1, 0}, 0, 2));
    Rng rng(5);
    for (int k = 0; k < 40; ++k) {
        int n = rng.uniform(1, 3);
        Polyvector a = random_polyvector(rng, n, 4, rng.uniform(0, n), 3);
        CHECK(delta_volume(a) == delta_coordinates(a));
        CHECK(delta_volume(delta_volume(a)).is_zero());
    }
}

TEST_CASE("Tian-Todorov and the odd Poisson identity") {
    Rng rng(7);
    for (int k = 0; k < 40; ++k) {
        int n = rng.uniform(1, 3);
        Polyvector a = random_polyvector(rng, n, 4, rng.uniform(0, n), 2);
        Polyvector b = random_polyvector(rng, n, 4, rng.uniform(0, n), 2);
        CHECK(tian_todorov_check(a, b).empty());
    }
    // one variable: (-1)^ā [z∂, z] = Δ(z·z∂) - Δ(z∂) z + z Δ(z)
    Polyvector a = pv(1, {1}, 1), b = pv(1, {1}, 0);
    CHECK(tian_todorov_check(a, b).empty());
}

TEST_CASE("contraction with the volume form") {
    Form omega = volume_form(2, 3);
    // ∂1 ⊢ (dz2∧dz1) = -dz2, ∂2 ⊢ (dz2∧dz1) = dz1
    CHECK(contraction(pv(2, {0, 0}, 1), omega) == pv(2, {0, 0}, 2, -1));
    CHECK(contraction(pv(2, {0, 0}, 2), omega) == pv(2, {0, 0}, 1));
    CHECK(contraction(pv(2, {1, 0}, 0), omega) == wedge(pv(2, {1, 0}, 0), omega));
    Rng rng(3);
    for (int k = 0; k < 20; ++k) {
        Polyvector a = random_polyvector(rng, 2, 3, rng.uniform(0, 2), 2);
        // (Δa)⊢Ω = ∂(a⊢Ω)
        CHECK(contraction(delta_volume(a), omega) == del_form(contraction(a, omega)));
    }
}

TEST_CASE("odd Poisson structure from generators") {
    GBVStructure S = polyvector_gbv(2, 2);
    std::vector<int> gens{index_of(S, Polyvector::term(2, 2, {1, 0}, 0)), index_of(S, Polyvector::term(2, 2, {0, 1}, 0)),
                          index_of(S, Polyvector::term(2, 2, {0, 0}, 1)), index_of(S, Polyvector::term(2, 2, {0, 0}, 2))};
    CHECK(odd_poisson_from_generators(S, gens).empty());
}

TEST_CASE("GBV bracket agrees with Schouten") {
    GBVStructure S = polyvector_gbv(2, 3);
    Rng rng(11);
    for (int k = 0; k < 30; ++k) {
        Polyvector a = random_polyvector(rng, 2, 3, rng.uniform(0, 2), 1);
        Polyvector b = random_polyvector(rng, 2, 3, rng.uniform(0, 2), 1);
        CHECK(gbv_bracket(S, to_element(S, a), to_element(S, b)) == to_element(S, schouten(a, b)));
    }
}

TEST_CASE("polyvector bounds") {
    CHECK_THROWS_AS(Polyvector::term(1, 2, {3}, 0), BoundError);
    CHECK_THROWS_AS(wedge(Polyvector::term(1, 2, {2}, 0), Polyvector::term(1, 2, {1}, 0)), BoundError);
    CHECK_THROWS_AS((pv(2, {0, 0}, 1) + pv(2, {0, 0}, 3)).frame_degree(), DomainError);
    CHECK(pv(2, {0, 0}, 3).frame_degree() == 2);
}

TEST_CASE("product morphism to the abelian structure") {
    for (const auto& S : {abelian_gbv_example(), exterior_gbv(0, 0, 1, 0), polyvector_gbv(1, 2)}) {
        AbelianResult a = gbv_to_abelian(S, 4);
        CHECK(a.violations.empty());
    }
    // the sign-flipped inverse drops the (m-1)! and is not an inverse
    CHECK_FALSE(gbv_to_abelian(abelian_gbv_example(), 4).signed_inverse_violations.empty());
    CHECK_FALSE(gbv_to_abelian(polyvector_gbv(1, 2), 4).signed_inverse_violations.empty());
}
