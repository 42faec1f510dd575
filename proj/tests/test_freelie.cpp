#include "defalg/freelie.hpp"
#include "defalg/suite.hpp"

#include "doctest.h"

using namespace defalg;

namespace {

TensorSeries L(int g, int n, int k) { return TensorSeries::letter(g, n, k); }

}  // namespace

TEST_CASE("exp and log") {
    const int N = 5;
    TensorSeries x = L(2, N, 0), y = L(2, N, 1), zero(2, N);
    CHECK(tensor_exp(zero, N) == TensorSeries::one(2, N));
    TensorSeries e2 = tensor_exp(L(2, 2, 0), 2);
    CHECK(e2 == TensorSeries::one(2, 2) + L(2, 2, 0) + TensorSeries::word(2, 2, {0, 0}, Scalar(1, 2)));
    TensorSeries s = x + Scalar(3) * y + commutator(x, y);
    CHECK(tensor_exp(s, N) * tensor_exp(-s, N) == TensorSeries::one(2, N));
    CHECK(tensor_log(TensorSeries::one(2, N), N).is_zero());
    CHECK(tensor_log(tensor_exp(s, 4), 4) == s.truncated(4));
    TensorSeries l = tensor_log(tensor_exp(x, N) * tensor_exp(y, N), N);
    CHECK(l.part(2) == Scalar(1, 2) * (TensorSeries::word(2, N, {0, 1}) - TensorSeries::word(2, N, {1, 0})));
    CHECK_THROWS_AS(tensor_exp(TensorSeries::one(2, N), N), DomainError);
    CHECK_THROWS_AS(tensor_log(x, N), DomainError);
}

TEST_CASE("Dynkin-Specht-Wever projection") {
    const int N = 4;
    TensorSeries xy = TensorSeries::word(2, N, {0, 1}), yx = TensorSeries::word(2, N, {1, 0});
    CHECK(dsw_project(xy) == Scalar(1, 2) * (xy - yx));
    CHECK(dsw_project(xy - yx) == xy - yx);
    CHECK(is_lie(xy - yx));
    CHECK_FALSE(is_lie(xy));
    Rng rng(3);
    for (int k = 0; k < 30; ++k) {
        TensorSeries t = random_tensor(rng, 3, 4);
        CHECK(dsw_project(dsw_project(t)) == dsw_project(t));
        CHECK(is_lie(random_lie_element(rng, 3, 4)));
    }
    CHECK_THROWS_AS(dsw_project(TensorSeries::one(2, N)), DomainError);
}

TEST_CASE("BCH coefficients") {
    const int N = 5;
    TensorSeries a = L(2, N, 0), b = L(2, N, 1);
    TensorSeries fr = bch_free(a, b, N), ex = bch_explicit(a, b, N);
    CHECK(fr == ex);
    CHECK(fr.part(1) == a + b);
    CHECK(fr.part(2) == Scalar(1, 2) * commutator(a, b));
    CHECK(fr.part(3) == Scalar(1, 12) * (commutator(a, commutator(a, b)) + commutator(b, commutator(b, a))));
    // degree 4: -1/24 [b,[a,[a,b]]]
    CHECK(fr.part(4) == Scalar(-1, 24) * commutator(b, commutator(a, commutator(a, b))));
    auto coeff = bch_letter_coefficients(2);
    CHECK(coeff.at({0}) == 1);
    // ab collects 1/2 from one block and -1/4 from two blocks
    CHECK(coeff.at({0, 1}) == Scalar(1, 4));
    CHECK(coeff.at({1, 0}) == Scalar(-1, 4));
}

TEST_CASE("BCH of commuting elements and inverses") {
    const int N = 4;
    TensorSeries a = L(2, N, 0);
    TensorSeries twice = Scalar(2) * a;
    CHECK(bch_free(a, twice, N) == Scalar(3) * a);
    CHECK(bch_explicit(a, twice, N) == Scalar(3) * a);
    CHECK(bch_free(a, -a, N).is_zero());
    CHECK(bch_free(a, TensorSeries(2, N), N) == a);
    TensorSeries x = L(3, N, 0), y = L(3, N, 1), z = L(3, N, 2);
    CHECK(bch_free(bch_free(x, y, N), z, N) == bch_free(x, bch_free(y, z, N), N));
}

TEST_CASE("nilpotent BCH") {
    GradedBasis hb({{"p", 0}, {"q", 0}, {"c", 0}});
    NilpotentLie h(hb, {{{0, 1}, Element::basis(2)}, {{1, 0}, Element::basis(2, -1)}});
    CHECK(h.nilpotency_index() == 3);
    Element p = Element::basis(0), q = Element::basis(1);
    CHECK(h.bch(p, q) == p + q + Element::basis(2, Scalar(1, 2)));
    CHECK(h.bch(p, Element::basis(0, 2)) == Element::basis(0, 3));
    CHECK(h.bch(h.bch(p, q), p + q) == h.bch(p, h.bch(q, p + q)));
    CHECK(h.bch(p, -p).is_zero());
    CHECK(h.bch(p, Element()) == p);
    Element ex = bch_series(p, q, [&](const Element& x, const Element& y) { return h.bracket(x, y); }, 16);
    CHECK(ex == h.bch(p, q));

    // sl2 is not nilpotent
    GradedBasis sb({{"e", 0}, {"f", 0}, {"h", 0}});
    std::map<std::pair<int, int>, Element> sl2{{{0, 1}, Element::basis(2)},
                                                {{1, 0}, Element::basis(2, -1)},
                                                {{2, 0}, Element::basis(0, 2)},
                                                {{0, 2}, Element::basis(0, -2)},
                                                {{2, 1}, Element::basis(1, -2)},
                                                {{1, 2}, Element::basis(1, 2)}};
    CHECK_THROWS_AS(NilpotentLie(sb, sl2), BoundError);
    // antisymmetry broken
    CHECK_THROWS_AS(NilpotentLie(hb, {{{0, 1}, Element::basis(2)}, {{1, 0}, Element::basis(2)}}), StructureError);
}
