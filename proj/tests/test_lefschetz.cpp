#include "defalg/lefschetz.hpp"
#include "defalg/suite.hpp"

#include "doctest.h"

using namespace defalg;

namespace {

// n = 2
CovectorElement one() { return CovectorElement::basis(StandardCovector::make(2, {}, {}, {}, {1, 2})); }
CovectorElement u(int i) {
    return CovectorElement::basis(StandardCovector::make(2, {}, {}, {i}, {i == 1 ? 2 : 1}));
}
const GaussianScalar half(Scalar(1, 2));

}  // namespace

TEST_CASE("standard basis") {
    for (int n = 1; n <= 4; ++n) {
        auto b = standard_basis(n);
        CHECK(static_cast<int>(b.size()) == 1 << (2 * n));
        for (const auto& z : b) {
            CHECK(z.valid());
            CHECK(z.weight() == n - z.p());
        }
    }
    CHECK_FALSE(StandardCovector{2, 1, 1, 0, 2}.valid());
}

TEST_CASE("Lefschetz operators in two variables") {
    CHECK(op_L(one()) == u(1) + u(2));
    CHECK(op_Lambda(u(1)) == one());
    CHECK(op_Lambda(one()).is_zero());
    CHECK(op_CinvStar(u(1)) == u(2));
    CHECK(op_CinvStar(op_CinvStar(u(1))) == u(1));
    // Λ²L²(1) = 2!² · 1
    CHECK(op_power(op_Lambda, 2, op_power(op_L, 2, one())) == GaussianScalar(4) * one());
    CHECK(op_power(op_L, 3, one()).is_zero());
    CHECK(covector_degree(u(1)) == 2);
    CHECK_THROWS_AS(covector_degree(u(1) + one()), DomainError);
}

TEST_CASE("operator identities") {
    for (int n = 1; n <= 3; ++n) CHECK(identities_check(n).empty());
}

TEST_CASE("a corrupted star is caught") {
    StarFn negated = [](const CovectorElement& v) { return GaussianScalar(-1) * op_star(v); };
    CHECK_FALSE(identities_check(2, negated).empty());
    StarFn conj_star = [](const CovectorElement& v) { return conjugate(op_star(v)); };
    CHECK_FALSE(identities_check(2, conj_star).empty());
}

TEST_CASE("star sign and the top-degree pairing") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& z : standard_basis(n)) {
            CovectorElement v = CovectorElement::basis(z);
            auto top = wedge_top_coefficient(v, op_star(conjugate(v)));
            REQUIRE(top);
            CHECK(*top == GaussianScalar(1));
            CHECK(star_sign(n, z.A, z.B) * star_sign(n, z.A, z.B) == 1);
        }
}

TEST_CASE("Lefschetz decomposition") {
    // u1 = (u1 - u2)/2 + L(1/2)
    auto pieces = lefschetz_decompose(u(1));
    REQUIRE(pieces.size() == 2);
    std::map<int, CovectorElement> by_r;
    for (const auto& p : pieces) by_r[p.r] = p.v;
    CHECK(by_r[0] == half * (u(1) - u(2)));
    CHECK(by_r[1] == half * one());
    CHECK(is_primitive(u(1) - u(2)));
    CHECK_FALSE(is_primitive(u(1)));
    CHECK(lefschetz_reconstruct(pieces, 2) == u(1));

    Rng rng(10);
    for (int k = 0; k < 60; ++k) {
        int n = rng.uniform(1, 3);
        CovectorElement v = random_covector(rng, n, rng.uniform(0, 2 * n));
        auto ps = lefschetz_decompose(v);
        CHECK(lefschetz_reconstruct(ps, n) == v);
        for (const auto& p : ps) {
            CHECK(is_primitive(p.v));
            CHECK(primitive_coefficient_check(p.v).empty());
            CHECK(primitive_star_check(p.v, p.r).empty());
        }
    }
}

TEST_CASE("primitivity is equivalent to the coefficient rule") {
    // in every degree p ≤ n of n = 2, a random element is primitive exactly when the rule holds
    Rng rng(13);
    int prim = 0, non = 0;
    for (int k = 0; k < 80; ++k) {
        CovectorElement v = random_covector(rng, 2, rng.uniform(0, 2));
        if (k % 2 == 0) {
            auto ps = lefschetz_decompose(v);
            for (const auto& p : ps)
                if (p.r == 0) v = p.v;
        }
        if (v.is_zero()) continue;
        bool p = is_primitive(v);
        CHECK(p == primitive_coefficient_check(v).empty());
        (p ? prim : non) += 1;
    }
    CHECK(prim > 0);
    CHECK(non > 0);
}
