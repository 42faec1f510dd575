#include "defalg/coalg.hpp"
#include "defalg/suite.hpp"

#include "doctest.h"

using namespace defalg;

namespace {

SymVec single(const SymWord& w, const Scalar& c = 1) { return SymVec{{w, c}}; }

}  // namespace

TEST_CASE("coproduct examples") {
    GradedBasis even({{"x", 0}, {"y", 2}});
    CHECK(coproduct(even, SymWord{0}).empty());
    SymPairVec xy = coproduct(even, SymWord{0, 1});
    CHECK(xy == SymPairVec{{{{0}, {1}}, 1}, {{{1}, {0}}, 1}});
    GradedBasis odd_b({{"e", 1}, {"f", 1}});
    SymPairVec ef = coproduct(odd_b, SymWord{0, 1});
    CHECK(ef == SymPairVec{{{{0}, {1}}, 1}, {{{1}, {0}}, -1}});
    // x⊙x ↦ 2 x⊗x
    CHECK(coproduct(even, SymWord{0, 0}) == SymPairVec{{{{0}, {0}}, 2}});
}

TEST_CASE("coproduct is coassociative and cocommutative") {
    Rng rng(4);
    for (int k = 0; k < 10; ++k) {
        GradedBasis b = random_basis(rng, 4, -1, 2);
        for (const auto& w : sym_words_upto(b, 4)) {
            CHECK(coproduct_left_twice(b, w) == coproduct_right_twice(b, w));
            CHECK(twist(b, coproduct(b, w)) == coproduct(b, w));
        }
    }
}

TEST_CASE("symmetrization intertwines the coproducts") {
    Rng rng(8);
    for (int k = 0; k < 10; ++k) {
        GradedBasis b = random_basis(rng, 3, -1, 2);
        for (const auto& w : sym_words_upto(b, 4)) CHECK(deconcatenate(n_map(b, w)) == n_tensor_n(b, coproduct(b, w)));
    }
    GradedBasis o({{"e", 1}, {"f", 1}});
    CHECK(n_map(o, SymWord{0, 1}) == TensorVec{{{0, 1}, 1}, {{1, 0}, -1}});
}

TEST_CASE("coderivation from a linear component") {
    GradedBasis b({{"x", 0}, {"y", 0}});
    Components q{b, b, 0, {}};
    q.q[1][{0}] = Element::basis(1);
    Coderivation Q(q, 4);
    CHECK(Q.apply(SymWord{0, 0}) == single({0, 1}, 2));
    CHECK(Q.apply(SymWord{0, 0, 0}) == single({0, 0, 1}, 3));
    CHECK(Q.apply(SymWord{1, 1}).empty());
    CHECK(check_coleibniz(Q, 4).empty());
}

TEST_CASE("coderivation from a quadratic component") {
    GradedBasis b({{"x", 0}, {"y", 0}, {"z", 0}, {"u", 0}});
    Components q{b, b, 0, {}};
    q.q[2][{0, 1}] = Element::basis(3);
    Coderivation Q(q, 4);
    CHECK(Q.apply(SymWord{0, 1}) == single({3}));
    // x⊙y⊙z ↦ q2(x⊙y)⊙z
    CHECK(Q.apply(SymWord{0, 1, 2}) == single({2, 3}));
    // x⊙x⊙y: either x pairs with y
    CHECK(Q.apply(SymWord{0, 0, 1}) == single({0, 3}, 2));
    CHECK(check_coleibniz(Q, 4).empty());
}

TEST_CASE("coderivations satisfy co-Leibniz and their bracket is one") {
    Rng rng(12);
    for (int k = 0; k < 12; ++k) {
        GradedBasis b = random_basis(rng, 3, -1, 2);
        long dq = rng.uniform(-1, 1), dr = rng.uniform(-1, 1);
        Coderivation Q(random_components(rng, b, b, dq, 3), 4);
        Coderivation R(random_components(rng, b, b, dr, 3), 4);
        CHECK(check_coleibniz(Q, 4).empty());
        Coderivation QR = coder_bracket(Q, R);
        CHECK(QR.degree() == dq + dr);
        CHECK(check_coleibniz(QR, 4).empty());
        for (const auto& w : sym_words_upto(b, 4)) {
            SymVec lhs = QR.apply(w);
            SymVec rhs = Q.apply(R.apply(w));
            for (const auto& [v, c] : R.apply(Q.apply(w))) accumulate(rhs, v, -sign_pow(dq * dr) * c);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("coderivation components of the wrong degree are rejected") {
    GradedBasis b({{"x", 0}, {"y", 1}});
    Components q{b, b, 0, {}};
    q.q[1][{0}] = Element::basis(1);
    CHECK_FALSE(check_component_degrees(q).empty());
    CHECK_THROWS_AS(Coderivation(q, 3), DomainError);
    GradedBasis other({{"z", 0}});
    CHECK_THROWS_AS(Coderivation(Components{b, other, 0, {}}, 3), DomainError);
}

TEST_CASE("coalgebra morphisms") {
    GradedBasis b({{"x", 0}, {"y", 1}});
    Components id{b, b, 0, {}};
    id.q[1][{0}] = Element::basis(0);
    id.q[1][{1}] = Element::basis(1);
    CoalgMorphism I(id, 4);
    for (const auto& w : sym_words_upto(b, 4)) CHECK(I.apply(w) == single(w));

    // f1 = id, f2(x⊙x) = y
    GradedBasis e({{"x", 0}, {"y", 0}});
    Components f{e, e, 0, {}};
    f.q[1][{0}] = Element::basis(0);
    f.q[2][{0, 0}] = Element::basis(1);
    CoalgMorphism F(f, 4);
    // F(x⊙x) = x⊙x + y
    CHECK(F.apply(SymWord{0, 0}) == SymVec{{{0, 0}, 1}, {{1}, 1}});
    CHECK(check_comorphism(F, 4).empty());
    CHECK(F.component(1, SymWord{0, 0}) == single({1}));

    Rng rng(17);
    for (int k = 0; k < 12; ++k) {
        GradedBasis s = random_basis(rng, 3, -1, 2), t = random_basis(rng, 3, -1, 2);
        CoalgMorphism G(random_components(rng, s, t, 0, 3), 4);
        CHECK(check_comorphism(G, 4).empty());
        for (const auto& w : sym_words_upto(s, 4)) CHECK(morphism_exp_form(G.components(), w) == G.apply(w));
        CoalgMorphism H(random_components(rng, t, s, 0, 3), 4);
        for (const auto& w : sym_words_upto(s, 3)) CHECK(compose(H, G, w) == H.apply(G.apply(w)));
    }

    Components bad{b, b, 1, {}};
    CHECK_THROWS_AS(CoalgMorphism(bad, 3), DomainError);
    Components mixed{b, b, 0, {}};
    mixed.q[1][{0}] = Element::basis(1);
    CHECK_THROWS_AS(CoalgMorphism(mixed, 3), DomainError);
}
