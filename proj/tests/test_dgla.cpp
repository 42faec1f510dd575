#include "defalg/dgla.hpp"
#include "defalg/suite.hpp"

#include "doctest.h"

using namespace defalg;

namespace {

// x (deg 1), y (deg 2), [x,x] = y
DGLA xy_dgla() {
    DGLA L;
    L.basis = GradedBasis({{"x", 1}, {"y", 2}});
    L.d.assign(2, Element());
    L.bracket[{0, 0}] = Element::basis(1);
    return L;
}

bool has_location(const Violations& v, const std::string& text) {
    for (const auto& x : v)
        if (x.location.find(text) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("check_dgla") {
    DGLA ab;
    ab.basis = GradedBasis({{"a", 0}, {"b", 1}});
    ab.d = {Element::basis(1), Element()};
    CHECK(check_dgla(ab).empty());

    DGLA L = xy_dgla();
    CHECK(check_dgla(L).empty());
    L.bracket[{0, 1}] = Element::basis(0);
    L.bracket = complete_antisymmetric(L.basis, L.bracket);
    Violations v = check_dgla(L);
    CHECK_FALSE(v.empty());
    CHECK(has_location(v, "(x,x,y)"));

    DGLA dd;
    dd.basis = GradedBasis({{"a", 0}, {"b", 1}, {"c", 2}});
    dd.d = {Element::basis(1), Element::basis(2), Element()};
    CHECK_FALSE(check_dgla(dd).empty());
}

TEST_CASE("check_na") {
    NaReport r = check_na(truncated_polynomial(3));
    CHECK(r.violations.empty());
    CHECK(r.nilpotency_index == 3);

    // u, v, w of degree 1 and dw of degree 2 with uv = uw = dw, vw = 0
    GradedBasis b({{"u", 1}, {"v", 1}, {"w", 1}, {"dw", 2}});
    Table m;
    m[{0, 1}] = Element::basis(3);
    m[{1, 0}] = Element::basis(3, -1);
    m[{0, 2}] = Element::basis(3);
    m[{2, 0}] = Element::basis(3, -1);
    ArtinDg A = make_artin(b, m, {Element(), Element(), Element::basis(3), Element()});
    NaReport ra = check_na(A);
    CHECK(ra.violations.empty());
    CHECK(ra.nilpotency_index == 3);
    // the ideal (w, dw) is acyclic, but u·w ≠ 0 so it is not a small extension
    Complex kernel{GradedBasis({{"w", 1}, {"dw", 2}}), {Element::basis(1), Element()}};
    CHECK(Cohomology(kernel, 1).dimension() == 0);
    CHECK(Cohomology(kernel, 2).dimension() == 0);
    CHECK_THROWS_AS(make_small_extension(A, {"w", "dw"}), DomainError);

    GradedBasis c({{"a", 0}, {"b", 0}});
    Table bad;
    bad[{0, 0}] = Element::basis(1);
    bad[{0, 1}] = Element::basis(1);
    bad[{1, 0}] = Element::basis(1);
    NaReport rb = check_na(make_artin(c, bad));
    CHECK_FALSE(rb.violations.empty());
}

TEST_CASE("tensor DGLA") {
    DGLA L = xy_dgla();
    ArtinDg A = truncated_polynomial(3);
    TensorDgla T = tensor_dgla(L, A);
    CHECK(check_dgla(T.dgla).empty());
    CHECK(T.dgla.basis.degree(T.index(0, 0)) == 1);
    // [x⊗t, x⊗t] = [x,x]⊗t²
    Element xt = T.pure(Element::basis(0), Element::basis(0));
    CHECK(T.dgla.br(xt, xt) == T.pure(Element::basis(1), Element::basis(1)));

    Rng rng(5);
    for (int k = 0; k < 20; ++k) {
        DGLA R = random_dgla(rng);
        LeveledArtin B = random_artin(rng, rng.coin());
        CHECK(check_dgla(tensor_dgla(R, B.A).dgla).empty());
    }
}

TEST_CASE("Maurer-Cartan residual") {
    DGLA L = xy_dgla();
    TensorDgla T = tensor_dgla(L, truncated_polynomial(3));
    CHECK(mc_residual(T.dgla, Element()).is_zero());
    Element xt = T.pure(Element::basis(0), Element::basis(0));
    CHECK(mc_residual(T.dgla, xt) == T.pure(Element::basis(1, Scalar(1, 2)), Element::basis(1)));
    CHECK_THROWS_AS(mc_residual(T.dgla, T.pure(Element::basis(1), Element::basis(0))), DomainError);

    // abelian: residual = dx
    DGLA ab;
    ab.basis = GradedBasis({{"a", 1}, {"b", 2}});
    ab.d = {Element::basis(1), Element()};
    TensorDgla TA = tensor_dgla(ab, truncated_polynomial(3));
    Element m = TA.pure(Element::basis(0), Element::basis(0)) + TA.pure(Element::basis(0), Element::basis(1, 3));
    CHECK(mc_residual(TA.dgla, m) == TA.dgla.diff(m));
}

TEST_CASE("non-liftable Maurer-Cartan element") {
    // L = <a,b> in degree 0 with [a,b] = -b, so ad(a) has eigenvalue -1 and x + [a,x] + [a,b] = 0 has no solution
    DGLA L;
    L.basis = GradedBasis({{"a", 0}, {"b", 0}});
    L.d.assign(2, Element());
    L.bracket = complete_antisymmetric(L.basis, {{{0, 1}, Element::basis(1, -1)}});
    REQUIRE(check_dgla(L).empty());
    GradedBasis b({{"u", 1}, {"v", 1}, {"w", 1}, {"dw", 2}});
    Table m;
    m[{0, 1}] = Element::basis(3);
    m[{1, 0}] = Element::basis(3, -1);
    m[{0, 2}] = Element::basis(3);
    m[{2, 0}] = Element::basis(3, -1);
    ArtinDg A = make_artin(b, m, {Element(), Element(), Element::basis(3), Element()});
    // B = A/(w, dw) = <u, v> with zero product
    ArtinDg B = make_artin(GradedBasis({{"u", 1}, {"v", 1}}), {});
    TensorDgla TB = tensor_dgla(L, B), TA = tensor_dgla(L, A);
    Element xi = TB.pure(Element::basis(0), Element::basis(0)) + TB.pure(Element::basis(1), Element::basis(1));
    CHECK(mc_check(TB.dgla, xi));
    Element ea = Element::basis(0), eb = Element::basis(1);
    for (int p = -2; p <= 2; ++p)
        for (int q = -2; q <= 2; ++q) {
            Element x = Element::basis(0, p) + Element::basis(1, q);
            Element lift = TA.pure(ea, Element::basis(0)) + TA.pure(eb, Element::basis(1)) + TA.pure(x, Element::basis(2));
            Element want = TA.pure(x + L.br(ea, x) + L.br(ea, eb), Element::basis(3));
            CHECK(mc_residual(TA.dgla, lift) == want);
            CHECK_FALSE(want.is_zero());
        }
}

TEST_CASE("gauge action") {
    DGLA ab;
    ab.basis = GradedBasis({{"a", 0}, {"b", 1}, {"c", 2}});
    ab.d = {Element::basis(1, 2), Element(), Element()};
    TensorDgla T = tensor_dgla(ab, truncated_polynomial(3));
    Element a = T.pure(Element::basis(0), Element::basis(0));
    Element x = T.pure(Element::basis(1), Element::basis(1));
    CHECK(gauge_apply(T.dgla, Element(), x) == x);
    CHECK(gauge_apply(T.dgla, a, x) == x - T.dgla.diff(a));

    // [a,x] = y, d = 0 over (t)/(t^3): exp(at)(xt) = xt + yt^2
    DGLA L;
    L.basis = GradedBasis({{"a", 0}, {"x", 1}, {"y", 1}});
    L.d.assign(3, Element());
    L.bracket = complete_antisymmetric(L.basis, {{{0, 1}, Element::basis(2)}});
    REQUIRE(check_dgla(L).empty());
    TensorDgla M = tensor_dgla(L, truncated_polynomial(3));
    Element at = M.pure(Element::basis(0), Element::basis(0));
    Element xt = M.pure(Element::basis(1), Element::basis(0));
    CHECK(gauge_apply(M.dgla, at, xt) == xt + M.pure(Element::basis(2), Element::basis(1)));
}

TEST_CASE("gauge properties on random instances") {
    Rng rng(21);
    int done = 0;
    for (int k = 0; done < 25 && k < 200; ++k) {
        DGLA L = random_dgla(rng);
        LeveledArtin A = random_artin(rng, rng.coin());
        auto w = random_mc(L, A, rng);
        if (!w) continue;
        ++done;
        TensorDgla T = tensor_dgla(L, A.A);
        Element a = random_of_degree(T.dgla.basis, 0, rng), b = random_of_degree(T.dgla.basis, 0, rng);
        CHECK(mc_check(T.dgla, gauge_apply(T.dgla, a, *w)));
        CHECK(gauge_apply(T.dgla, a, gauge_apply(T.dgla, b, *w)) == gauge_apply(T.dgla, bch_in(T.dgla, a, b), *w));
        Element u = random_of_degree(T.dgla.basis, -1, rng);
        CHECK(gauge_apply(T.dgla, T.dgla.br(*w, u) + T.dgla.diff(u), *w) == *w);
    }
    CHECK(done == 25);
}

TEST_CASE("cohomology") {
    Complex zero{GradedBasis({{"a", 0}, {"b", 1}}), {Element(), Element()}};
    CHECK(Cohomology(zero, 0).dimension() == 1);
    CHECK(Cohomology(zero, 1).dimension() == 1);
    Complex id{GradedBasis({{"a", 0}, {"b", 1}}), {Element::basis(1), Element()}};
    CHECK(Cohomology(id, 0).dimension() == 0);
    CHECK(Cohomology(id, 1).dimension() == 0);
    // ranks (1,2,1): c0 → c1, c1 → c2
    Complex c{GradedBasis({{"p", 0}, {"q1", 1}, {"q2", 1}, {"r", 2}}),
              {Element::basis(1) + Element::basis(2), Element::basis(3), Element::basis(3, -1), Element()}};
    REQUIRE(check_complex(c).empty());
    auto betti = betti_numbers(c);
    CHECK(betti[0] == 0);
    CHECK(betti[1] == 0);
    CHECK(betti[2] == 0);
    Cohomology H(c, 2);
    CHECK(H.preimage(Element::basis(3)).has_value());
    Complex c2{GradedBasis({{"p", 0}, {"q1", 1}, {"q2", 1}, {"r", 2}}),
               {Element::basis(1), Element(), Element(), Element()}};
    auto b2 = betti_numbers(c2);
    CHECK(b2[1] == 1);
    CHECK(b2[2] == 1);
}

TEST_CASE("obstruction classes") {
    DGLA L = xy_dgla();
    ArtinDg A = truncated_polynomial(3);
    SmallExtension e = make_small_extension(A, {"t^2"});
    TensorDgla MB = tensor_dgla(L, e.quotient), MA = tensor_dgla(L, A);
    Element xt = MB.pure(Element::basis(0), Element::basis(0));
    ObstructionResult o = obstruction_class(L, e, xt);
    CHECK(o.h == MA.pure(Element::basis(1, Scalar(1, 2)), Element::basis(1)));
    CHECK_FALSE(o.vanishes);
    CHECK_FALSE(o.mc_lift);
    Element other = lift_tensor(L, e, xt) + MA.pure(Element::basis(0, 5), Element::basis(1));
    CHECK(obstruction_class(L, e, xt, other).class_coords == o.class_coords);

    DGLA Lz;
    Lz.basis = GradedBasis({{"x", 1}, {"z", 1}, {"y", 2}});
    Lz.d = {Element(), Element::basis(2), Element()};
    Lz.bracket[{0, 0}] = Element::basis(2);
    TensorDgla MBz = tensor_dgla(Lz, e.quotient), MAz = tensor_dgla(Lz, A);
    ObstructionResult oz = obstruction_class(Lz, e, MBz.pure(Element::basis(0), Element::basis(0)));
    CHECK(oz.vanishes);
    REQUIRE(oz.mc_lift);
    CHECK(mc_check(MAz.dgla, *oz.mc_lift));
    Element want = MAz.pure(Element::basis(0), Element::basis(0)) - MAz.pure(Element::basis(1, Scalar(1, 2)), Element::basis(1));
    CHECK(mc_check(MAz.dgla, want));

    // abelian: h = d x~
    DGLA ab;
    ab.basis = GradedBasis({{"a", 1}, {"b", 2}});
    ab.d = {Element(), Element()};
    TensorDgla TB = tensor_dgla(ab, e.quotient);
    CHECK(obstruction_class(ab, e, TB.pure(Element::basis(0), Element::basis(0))).h.is_zero());

    CHECK_THROWS_AS(obstruction_class(L, e, MB.pure(Element::basis(1), Element::basis(0)) ), DomainError);
}

TEST_CASE("cones") {
    ArtinDg A = truncated_polynomial(3);
    SmallExtension e = make_small_extension(A, {"t^2"});
    Cones c = cones(e);
    CHECK(check_na(c.cone).violations.empty());
    CHECK(c.cone.basis().size() == 3);
    REQUIRE(c.cone_kernel.size() == 2);
    Complex k = subcomplex(c.cone.complex(), c.cone_kernel);
    for (const auto& [deg, n] : betti_numbers(k)) CHECK(n == 0);
    REQUIRE(c.inverse);
    CHECK(check_na(*c.inverse).violations.empty());
    SmallExtension none = make_small_extension(A, {});
    CHECK(cones(none).cone.basis().size() == A.basis().size());
}

TEST_CASE("exponential of derivations") {
    // R = K[u]/(u^2) with unit, m_A = (t)/(t^2)
    GradedAlgebra R;
    R.basis = GradedBasis({{"1", 0}, {"u", 0}});
    R.unit = 0;
    R.mult[{0, 0}] = Element::basis(0);
    R.mult[{0, 1}] = Element::basis(1);
    R.mult[{1, 0}] = Element::basis(1);
    ArtinDg A = truncated_polynomial(2);
    DerivationExp zero = exp_derivation(R, A, {Element(), Element()});
    CHECK(zero.violations.empty());
    for (int i = 0; i < zero.space.size(); ++i) CHECK(zero.exp[i] == Element::basis(i));
    int u = rplus_index(A, 1, 0), ut = rplus_index(A, 1, 1);
    DerivationExp ex = exp_derivation(R, A, {Element(), Element::basis(ut)});
    CHECK(ex.violations.empty());
    CHECK(ex.exp[u] == Element::basis(u) + Element::basis(ut));
    CHECK(ex.exp_inverse[u] == Element::basis(u) - Element::basis(ut));
    // d(1) ≠ 0 breaks Leibniz
    CHECK_THROWS_AS(exp_derivation(R, A, {Element::basis(ut), Element()}), DomainError);
}

TEST_CASE("homotopy evaluation") {
    // acyclic A: v (deg 0), dv (deg 1), zero products
    ArtinDg A = make_artin(GradedBasis({{"v", 0}, {"dv", 1}}), {}, {Element::basis(1), Element()});
    std::vector<PolyForm> id(2);
    id[0][{0, 0, 0}] = 1;
    id[1][{1, 0, 0}] = 1;
    HomotopyResult r = homotopy_eval(A, A, id, 0);
    CHECK(r.violations.empty());
    CHECK(r.e_s[0] == Element::basis(0));

    // H(v) = v t, H(dv) = dv t + v dt
    std::vector<PolyForm> H(2);
    H[0][{0, 1, 0}] = 1;
    H[1][{1, 1, 0}] = 1;
    H[1][{0, 0, 1}] = 1;
    HomotopyResult h0 = homotopy_eval(A, A, H, 0), h1 = homotopy_eval(A, A, H, 1);
    CHECK(h0.violations.empty());
    CHECK(h0.e_s[0].is_zero());
    CHECK(h0.e_s[1].is_zero());
    CHECK(h1.e_s[0] == Element::basis(0));
    CHECK(h1.e_s[1] == Element::basis(1));

    std::vector<PolyForm> bad(2);
    bad[0][{0, 1, 0}] = 1;
    bad[1][{1, 1, 0}] = 1;
    CHECK_FALSE(homotopy_eval(A, A, bad, 1).violations.empty());
}

TEST_CASE("abelian deformation classes have dimension h1 times dim m_A") {
    DGLA ab;
    ab.basis = GradedBasis({{"a", 0}, {"b", 1}, {"c", 1}, {"e", 2}});
    ab.d = {Element::basis(1), Element::basis(3), Element(), Element()};
    int h1 = betti_numbers(ab.complex())[1];
    for (int s = 2; s <= 4; ++s) {
        ArtinDg A = truncated_polynomial(s);
        TensorDgla T = tensor_dgla(ab, A);
        int z1 = Cohomology(T.dgla.complex(), 1).dimension();
        CHECK(z1 == h1 * A.basis().size());
    }
}
