#pragma once

#include "defalg/algebra.hpp"
#include "defalg/dgla.hpp"
#include "defalg/linfty.hpp"

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace defalg {

/// Graded commutative algebra G with Δ of degree +1.
/// When `cap` is set, only basis tuples of total weight ≤ cap are verified; the multiplication
/// table is exact on those tuples.
struct GBVStructure {
    GradedAlgebra alg;
    std::vector<Element> delta;
    std::vector<int> weight;
    std::optional<int> cap;

    const GradedBasis& basis() const { return alg.basis; }
    Element mul(const Element& x, const Element& y) const { return alg.mul(x, y); }
    Element Delta(const Element& x) const { return linear(delta, x); }
    bool admissible(const std::vector<int>& idx) const;
};

/// Q(a,b) = Δ(ab) - Δ(a)b - (-1)^ā aΔ(b).
Element derived_q(const GBVStructure& S, const Element& a, const Element& b);

/// Graded commutativity, Δ of degree 1, Δ² = 0, Δ(1) = 0, odd Poisson on basis triples.
Violations gbv_check(const GBVStructure& S);

/// Rebuilds Q from its values on generator pairs by the derivation rule and compares with
/// the brute-force Q on all admissible basis pairs. Every basis vector must be a multiple of
/// a product of generators.
Violations odd_poisson_from_generators(const GBVStructure& S, const std::vector<int>& generators);

/// [a,b] = aΔb + (-1)^{deg(a,G[-1])}(Δ(ab) - Δ(a)b).
Element gbv_bracket(const GBVStructure& S, const Element& a, const Element& b);

/// (G[-1], [,], Δ) as a DGLA; brackets on inadmissible pairs are left out.
DGLA gbv_dgla(const GBVStructure& S);

/// DGLA axioms on G[-1] and ΔQ(a,b) + Q(Δa,b) + (-1)^ā Q(a,Δb) = 0.
Violations dgla_verify(const GBVStructure& S);

/// Four-dimensional ⋀(ξ1,ξ2), deg ξi = -1, Δ(ξi) = c_i, Δ(ξ1ξ2) = l1 ξ1 + l2 ξ2.
GBVStructure exterior_gbv(const Scalar& c1, const Scalar& c2, const Scalar& l1, const Scalar& l2);

/// Any GBV with Δ a derivation of the algebra.
GBVStructure abelian_gbv_example();

// Polyvector fields with polynomial coefficients.

using Monomial = std::vector<int>;   // exponents of z1..zn
using Frame = unsigned;              // bit j-1 set ⇔ ∂/∂z_j present
using PolyKey = std::pair<Monomial, Frame>;

int frame_size(Frame f);
int monomial_degree(const Monomial& m);

/// Σ c · f(z) ∂/∂z_I; f∂_I has degree -|I|. Also used for forms g dz_J.
struct Polyvector {
    int n = 1;
    int cap = 3;
    std::map<PolyKey, Scalar> terms;

    static Polyvector term(int n, int cap, const Monomial& m, Frame f, const Scalar& c = 1);
    bool is_zero() const { return terms.empty(); }
    void add(const PolyKey& k, const Scalar& c);
    /// Exterior degree |I| of a pure-degree element; nullopt for zero; throws if mixed.
    std::optional<int> frame_degree() const;
    int max_monomial_degree() const;

    Polyvector& operator+=(const Polyvector& o);
    Polyvector& operator-=(const Polyvector& o);
    friend Polyvector operator+(Polyvector a, const Polyvector& b) { return a += b; }
    friend Polyvector operator-(Polyvector a, const Polyvector& b) { return a -= b; }
    friend Polyvector operator*(const Scalar& c, Polyvector a);
    friend bool operator==(const Polyvector& a, const Polyvector& b) { return a.terms == b.terms; }
};

using Form = Polyvector;

/// Product; throws BoundError if a coefficient exceeds the cap.
Polyvector wedge(const Polyvector& a, const Polyvector& b);
/// Polyvector ⊢ form: (v_a∧…∧v_1)⊢z = v_a⊢(…(v_1⊢z)), v⊢(z1∧…∧zb) = Σ(-1)^{i-1}⟨v,z_i⟩ z1..ẑi..zb.
Form contraction(const Polyvector& v, const Form& z);
/// Form ⊢ polyvector, same rule with the roles exchanged.
Polyvector contraction_form(const Form& w, const Polyvector& v);
/// Holomorphic de Rham ∂ on forms.
Form del_form(const Form& z);
/// ∂f as the 1-form Σ ∂_j f dz_j of the coefficient of each term.
Polyvector partial(const Polyvector& a, int j);

/// Ω = dz_n∧…∧dz_1.
Form volume_form(int n, int cap);
/// Δ determined by (Δα)⊢Ω = ∂(α⊢Ω).
Polyvector delta_volume(const Polyvector& a);
/// Σ_j ∂_j f (dz_j ⊢ ∂_I).
Polyvector delta_coordinates(const Polyvector& a);

/// [f∂_I, g∂_H] = (-1)^{|I|-1} f(∂g⊢∂_I)∧∂_H - g∂_I∧(∂f⊢∂_H).
Polyvector schouten(const Polyvector& a, const Polyvector& b);

/// (-1)^{ā}[a,b] - (Δ(ab) - Δ(a)b - (-1)^{ā-1}aΔ(b)), ā = 1-|I| the degree in G[-1].
Violations tian_todorov_check(const Polyvector& a, const Polyvector& b);

/// Basis of polyvectors on n variables with coefficient degree ≤ cap.
std::vector<PolyKey> polyvector_basis(int n, int cap);
/// The GBV structure on that basis; weights are coefficient degrees, capped at `cap`.
GBVStructure polyvector_gbv(int n, int cap);
Element to_element(const GBVStructure& S, const Polyvector& p);
std::string format(const Polyvector& p);

struct AbelianResult {
    LInftyStructure source;   // δ: Δ and Q
    LInftyStructure target;   // τ: Δ only
    LInftyMorphism morphism;        // f(a1⊙…⊙am) = a1…am
    LInftyMorphism inverse;         // (-1)^{m-1}(m-1)! a1…am
    LInftyMorphism signed_inverse;  // (-1)^{m-1} a1…am
    Violations violations;          // morphism checks of F and its inverse, F∘inverse = id
    Violations signed_inverse_violations;  // F∘signed_inverse = id
};

/// Product morphism from (S̄(G), δ) to (S̄(G), Δ), verified on admissible words ≤ m_max.
AbelianResult gbv_to_abelian(const GBVStructure& S, int m_max);

}  // namespace defalg
