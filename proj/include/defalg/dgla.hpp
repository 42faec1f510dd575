#pragma once

#include "defalg/algebra.hpp"
#include "defalg/core.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace defalg {

/// Finite-dimensional differential graded Lie algebra.
struct DGLA {
    GradedBasis basis;
    std::vector<Element> d;
    Table bracket;

    Element diff(const Element& x) const { return linear(d, x); }
    Element br(const Element& x, const Element& y) const { return bilinear(bracket, x, y); }
    Element br_basis(int i, int j) const { return table_entry(bracket, i, j); }
    Complex complex() const { return {basis, d}; }
};

/// Fills [e_j,e_i] = -(-1)^{|i||j|}[e_i,e_j] where only one order was given.
Table complete_antisymmetric(const GradedBasis& basis, Table table);

/// d^2 = 0, degrees, graded antisymmetry, Jacobi, Leibniz on all basis tuples.
Violations check_dgla(const DGLA& L);

/// Nilpotent graded-commutative dg-algebra (an object of NA); no unit.
struct ArtinDg {
    GradedAlgebra alg;
    std::vector<Element> d;

    const GradedBasis& basis() const { return alg.basis; }
    Element mul(const Element& x, const Element& y) const { return alg.mul(x, y); }
    Element diff(const Element& x) const { return linear(d, x); }
    Complex complex() const { return {alg.basis, d}; }
};

ArtinDg make_artin(GradedBasis basis, Table mult, std::vector<Element> d = {});
/// Maximal ideal (t)/(t^s): basis t, t^2, ..., t^{s-1}, all in degree 0.
ArtinDg truncated_polynomial(int s, const std::string& var = "t");
/// Maximal ideal of K[t_1..t_k]/(monomials of total degree >= s).
ArtinDg truncated_polynomial_ring(int vars, int s);

struct NaReport {
    Violations violations;
    std::optional<int> nilpotency_index;
};

NaReport check_na(const ArtinDg& A);

/// L ⊗ A on basis pairs (x_i, a_j), index i*|A| + j.
struct TensorDgla {
    DGLA dgla;
    int l_dim = 0;
    int a_dim = 0;

    int index(int l, int a) const { return l * a_dim + a; }
    int l_of(int idx) const { return idx / a_dim; }
    int a_of(int idx) const { return idx % a_dim; }
    /// x ⊗ a for x in L, a in A.
    Element pure(const Element& x, const Element& a) const;
};

TensorDgla tensor_dgla(const DGLA& L, const ArtinDg& A);

/// dx + ½[x,x]; x must have total degree 1.
Element mc_residual(const DGLA& M, const Element& x);
bool mc_check(const DGLA& M, const Element& x);

/// w + Σ_{n≥0} ad(a)^n/(n+1)! ([a,w] - da); throws BoundError if the series does not stop.
Element gauge_apply(const DGLA& M, const Element& a, const Element& w, int max_terms = 64);

/// BCH product of two degree-0 elements of a nilpotent DGLA.
Element bch_in(const DGLA& M, const Element& a, const Element& b, int max_len = 64);

/// Kernel spanned by a subset of basis vectors of A, with A·I = 0.
struct SmallExtension {
    ArtinDg total;
    ArtinDg quotient;
    std::vector<int> kernel;          // indices in total
    std::vector<int> to_quotient;     // total index -> quotient index, -1 on the kernel
    std::vector<int> section;         // quotient index -> total index

    bool acyclic() const;
    Element project(const Element& a) const;
    Element lift(const Element& b) const;
};

SmallExtension make_small_extension(const ArtinDg& A, const std::vector<std::string>& kernel_names);

struct ObstructionResult {
    Element h;                          // d x~ + ½[x~,x~] in L⊗I
    std::vector<Scalar> class_coords;   // coordinates in H²(L⊗I)
    std::vector<Element> class_basis;   // representatives of H²(L⊗I)
    bool vanishes = false;
    std::optional<Element> mc_lift;     // x~ - z with dz = h, when the class vanishes
};

/// x is an MC element of L⊗B (quotient pair basis); `lift` overrides the default lift x~.
ObstructionResult obstruction_class(const DGLA& L, const SmallExtension& e, const Element& x,
                                    const std::optional<Element>& lift = std::nullopt);

/// Embeds L⊗(quotient) elements into L⊗(total) along the extension's section.
Element lift_tensor(const DGLA& L, const SmallExtension& e, const Element& x);
Element project_tensor(const DGLA& L, const SmallExtension& e, const Element& x);

struct Cones {
    ArtinDg cone;                      // A ⊕ I[1]
    std::vector<int> cone_kernel;      // indices of I ⊕ I[1] inside the cone
    std::optional<ArtinDg> inverse;    // A ⊕ B[-1], defined when A² ⊂ I
    std::string inverse_note;
};

Cones cones(const SmallExtension& e);

/// Graded-commutative unital algebra R, derivation values on R's basis in R⊗m_A.
/// The result acts on R⊗A⁺ with basis pairs (r, j), j = 0 the unit of A⁺ and j = k+1 for A's k.
struct DerivationExp {
    GradedBasis space;                  // basis of R⊗A⁺
    std::vector<Element> derivation;    // d on the R⊗A⁺ basis
    std::vector<Element> exp;           // e^d on the R⊗A⁺ basis
    std::vector<Element> exp_inverse;   // e^{-d}
    Violations violations;              // multiplicativity / identity mod m_A / inverse
};

/// d_values[r] = d(r ⊗ 1) expressed on the R⊗A⁺ basis; must lie in R⊗m_A.
DerivationExp exp_derivation(const GradedAlgebra& R, const ArtinDg& A, const std::vector<Element>& d_values);
int rplus_index(const ArtinDg& A, int r, int j);

/// b ⊗ t^k dt^e with e ∈ {0,1}.
struct PolyTerm {
    int b;
    int k;
    int e;
    friend bool operator<(const PolyTerm& x, const PolyTerm& y) {
        return std::tie(x.b, x.k, x.e) < std::tie(y.b, y.k, y.e);
    }
};
using PolyForm = std::map<PolyTerm, Scalar>;

struct HomotopyResult {
    std::vector<Element> e_s;   // images of A's basis under e_s ∘ H
    Violations violations;      // H multiplicativity and commutation with d
};

/// H maps A's basis to B[t,dt]; e_s sets t = s, dt = 0.
HomotopyResult homotopy_eval(const ArtinDg& A, const ArtinDg& B, const std::vector<PolyForm>& H, const Scalar& s);

PolyForm poly_mul(const ArtinDg& B, const PolyForm& x, const PolyForm& y);
PolyForm poly_diff(const ArtinDg& B, const PolyForm& x);

}  // namespace defalg
