#include "defalg/core.hpp"

#include "doctest.h"

#include <random>

using namespace defalg;

namespace {

// adjacent-swap oracle: bubble the sequence v_σ(1)..v_σ(n) back into 1..n
int swap_oracle(const std::vector<long>& deg, const Permutation& s) {
    std::vector<int> cur;
    for (int i = 1; i <= s.size(); ++i) cur.push_back(s(i));
    int sign = 1;
    for (std::size_t a = 0; a < cur.size(); ++a)
        for (std::size_t b = 0; b + 1 < cur.size() - a; ++b)
            if (cur[b] > cur[b + 1]) {
                if (odd(deg[cur[b] - 1]) && odd(deg[cur[b + 1] - 1])) sign = -sign;
                std::swap(cur[b], cur[b + 1]);
            }
    return sign;
}

std::vector<long> permuted(const std::vector<long>& d, const Permutation& t) {
    std::vector<long> out;
    for (int i = 1; i <= t.size(); ++i) out.push_back(d[t(i) - 1]);
    return out;
}

}  // namespace

TEST_CASE("koszul sign examples") {
    CHECK(koszul_sign({1, 1}, Permutation::identity(2)) == 1);
    CHECK(koszul_sign({1, 1}, Permutation({2, 1})) == -1);
    CHECK(koszul_sign({2, 1}, Permutation({2, 1})) == 1);
    Permutation s({3, 1, 2});
    CHECK(koszul_sign({1, 2, 1}, s) == swap_oracle({1, 2, 1}, s));
    CHECK_THROWS_AS(koszul_sign({1, 1, 1}, Permutation({2, 1})), InputError);
}

TEST_CASE("koszul sign agrees with adjacent swaps and is a cocycle") {
    std::mt19937_64 g(11);
    for (int n = 1; n <= 6; ++n) {
        auto perms = all_permutations(n);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<long> d(n);
            for (auto& x : d) x = static_cast<long>(g() % 5) - 2;
            const auto& s = perms[g() % perms.size()];
            const auto& t = perms[g() % perms.size()];
            int e = koszul_sign(d, s);
            CHECK(e == swap_oracle(d, s));
            CHECK(e * e == 1);
            // ε(τσ; d) = ε(σ; τ·d) ε(τ; d)
            CHECK(koszul_sign(d, t.compose(s)) == koszul_sign(permuted(d, t), s) * koszul_sign(d, t));
        }
    }
}

TEST_CASE("unshuffles") {
    auto u11 = unshuffles(1, 1);
    REQUIRE(u11.size() == 2);
    CHECK(u11[0] == Permutation({1, 2}));
    CHECK(u11[1] == Permutation({2, 1}));
    CHECK(unshuffles(2, 2).size() == 6);
    auto u12 = unshuffles(1, 2);
    CHECK(u12.size() == 3);
    int filtered = 0;
    for (const auto& p : all_permutations(3))
        if (p.is_unshuffle(1)) ++filtered;
    CHECK(filtered == 3);
    for (const auto& p : u12) CHECK(p.is_unshuffle(1));
    for (int p = 0; p <= 8; ++p)
        for (int q = 0; p + q <= 8; ++q) CHECK(static_cast<std::int64_t>(unshuffles(p, q).size()) == binomial(p + q, p));
}

TEST_CASE("every permutation factors uniquely as unshuffle after block permutation") {
    for (int n = 1; n <= 6; ++n)
        for (int p = 0; p <= n; ++p) {
            int q = n - p;
            std::map<Permutation, int> hits;
            auto left = all_permutations(p), right = all_permutations(q);
            for (const auto& u : unshuffles(p, q))
                for (const auto& a : left)
                    for (const auto& b : right) {
                        std::vector<int> im;
                        for (int i = 1; i <= p; ++i) im.push_back(a(i));
                        for (int i = 1; i <= q; ++i) im.push_back(p + b(i));
                        ++hits[u.compose(Permutation(im))];
                    }
            CHECK(static_cast<int>(hits.size()) == static_cast<int>(factorial(n).get_num().get_si()));
            for (const auto& [perm, k] : hits) CHECK(k == 1);
        }
}

TEST_CASE("sym_canonical") {
    GradedBasis even({{"x", 0}, {"y", 2}});
    auto c = sym_canonical(even, {1, 0});
    REQUIRE(c);
    CHECK(c->word == std::vector<int>{0, 1});
    CHECK(c->sign == 1);
    GradedBasis odd_b({{"e", 1}});
    CHECK_FALSE(sym_canonical(odd_b, {0, 0}));
    GradedBasis mixed({{"x", 1}, {"y", 1}, {"z", 2}});
    auto m = sym_canonical(mixed, {2, 0, 1});
    REQUIRE(m);
    CHECK(m->word == std::vector<int>{0, 1, 2});
    // z x y → x y z moves even z past two odd symbols
    CHECK(m->sign == 1);
    auto swapped = sym_canonical(mixed, {1, 2, 0});
    REQUIRE(swapped);
    CHECK(swapped->sign == -1);

    // idempotent, and every reordering lands on the same word with the Koszul sign
    std::vector<long> deg{1, 1, 2};
    for (const auto& s : all_permutations(3)) {
        std::vector<int> w{s(1) - 1, s(2) - 1, s(3) - 1};
        auto cw = sym_canonical(mixed, w);
        REQUIRE(cw);
        CHECK(cw->word == std::vector<int>{0, 1, 2});
        auto again = sym_canonical(mixed, cw->word);
        CHECK(again->sign == 1);
        // x y z = ε(σ) x_σ1 x_σ2 x_σ3
        CHECK(cw->sign == koszul_sign(deg, s));
    }
}

TEST_CASE("symmetrize") {
    GradedBasis b({{"x", 0}, {"y", 0}, {"xy", 0}});
    MultilinearMap id1 = [](const std::vector<Element>& a) { return a[0]; };
    Element x = Element::basis(0);
    CHECK(symmetrize(b, id1, 1, {x}) == x);
    MultilinearMap prod = [](const std::vector<Element>& a) {
        Element out;
        if (a[0].coeff(0) != 0 && a[1].coeff(1) != 0) out.add(2, a[0].coeff(0) * a[1].coeff(1));
        if (a[0].coeff(1) != 0 && a[1].coeff(0) != 0) out.add(2, a[0].coeff(1) * a[1].coeff(0));
        return out;
    };
    CHECK(symmetrize(b, prod, 2, {Element::basis(0), Element::basis(1)}) == Element::basis(2, 2));
    CHECK_THROWS(symmetrize(b, prod, 2, {x}));

    // odd arguments: f(a⊗b) = first coefficient of a times second of b lands on a sign
    GradedBasis o({{"e", 1}, {"f", 1}, {"t", 2}});
    MultilinearMap pair = [](const std::vector<Element>& a) {
        return Element::basis(2, a[0].coeff(0) * a[1].coeff(1));
    };
    Element s = symmetrize(o, pair, 2, {Element::basis(0), Element::basis(1)});
    CHECK(s == Element::basis(2, 1));
    Element s2 = symmetrize(o, pair, 2, {Element::basis(1), Element::basis(0)});
    CHECK(s2 == Element::basis(2, -1));
}

TEST_CASE("symmetrized composition through unshuffles") {
    // Σ_{S(2,1)} ε f̃(g̃(a_σ1⊙a_σ2)⊙a_σ3) equals the full symmetrization of f̃(g(·,·),·)
    GradedBasis b({{"a", 1}, {"b", 0}, {"c", 1}, {"u", 1}, {"w", 0}});
    auto g = [](const std::vector<Element>& a) {
        // degree 0 bilinear into u (coefficient-wise product)
        Scalar s = a[0].coeff(0) * a[1].coeff(1) + 2 * a[0].coeff(1) * a[1].coeff(2) + a[0].coeff(0) * a[1].coeff(2);
        return Element::basis(3, s);
    };
    auto f = [](const std::vector<Element>& a) {
        Scalar s = a[0].coeff(3) * a[1].coeff(2) + 3 * a[0].coeff(3) * a[1].coeff(0) + a[0].coeff(2) * a[1].coeff(3);
        return Element::basis(4, s);
    };
    std::vector<Element> args{Element::basis(0), Element::basis(1), Element::basis(2)};
    std::vector<long> deg{1, 0, 1};
    Element lhs;
    for (const auto& u : unshuffles(2, 1)) {
        std::vector<Element> in{args[u(1) - 1], args[u(2) - 1]};
        Element gg = symmetrize(b, g, 2, in);
        lhs.axpy(Scalar(koszul_sign(deg, u)), symmetrize(b, f, 2, {gg, args[u(3) - 1]}));
    }
    MultilinearMap fg = [&](const std::vector<Element>& a) { return symmetrize(b, f, 2, {g({a[0], a[1]}), a[2]}); };
    Element rhs = symmetrize(b, fg, 3, args);
    CHECK(lhs == rhs);
}

TEST_CASE("scalars and elements") {
    CHECK(parse_scalar("1/2") == Scalar(1, 2));
    CHECK(parse_scalar("-4/6") == Scalar(-2, 3));
    CHECK_THROWS_AS(parse_scalar("1/0", "coeff"), InputError);
    CHECK_THROWS_AS(parse_scalar("x"), InputError);
    Element e;
    e.add(0, 1);
    e.add(0, -1);
    CHECK(e.is_zero());
    GradedBasis b({{"x", 1}, {"y", 2}});
    CHECK(degree_of(b, Element::basis(1)) == 2);
    CHECK_FALSE(degree_of(b, Element()).has_value());
    CHECK_THROWS_AS(degree_of(b, Element::basis(0) + Element::basis(1)), DomainError);
    CHECK_THROWS_AS(GradedBasis({{"x", 0}, {"x", 1}}), InputError);
    CHECK(GaussianScalar::i_pow(2) == GaussianScalar(-1));
    CHECK(GaussianScalar::i_pow(-1) == GaussianScalar(0, -1));
}
