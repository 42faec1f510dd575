#pragma once

#include "defalg/algebra.hpp"
#include "defalg/coalg.hpp"
#include "defalg/dgla.hpp"
#include "defalg/linalg.hpp"

#include <map>
#include <optional>
#include <vector>

namespace defalg {

/// L∞-structure on V, stored as suspended components Q¹_k on V[1] (degree +1).
struct LInftyStructure {
    GradedBasis space;  // V, unsuspended degrees
    Components q;       // source = target = V[1]
    int truncation = 4;

    const GradedBasis& suspended() const { return q.source; }
    int max_arity() const { return q.max_arity(); }
    Coderivation coderivation() const { return Coderivation(q, truncation); }
    bool minimal() const;
};

/// Unsuspended brackets l_k: ⋀^k V → V of degree 2-k, keyed by canonical words.
struct UnsuspendedBrackets {
    GradedBasis space;
    std::map<int, std::map<SymWord, Element>> l;

    /// l_k on an arbitrary ordered word, using graded antisymmetry.
    Element eval(const std::vector<int>& word) const;
};

/// (-1)^{Σ_i (n-i) deg v_i}.
int displacing_sign(const std::vector<long>& degrees);

/// l_n(v1∧…∧vn) = (-1)^n (-1)^{Σ(n-i)deg v_i} Q¹_n(v1[1]⊙…⊙vn[1]).
UnsuspendedBrackets to_unsuspended(const LInftyStructure& s);
LInftyStructure from_unsuspended(const UnsuspendedBrackets& b, int truncation);

/// Empty structure on V.
LInftyStructure zero_structure(const GradedBasis& space, int truncation);

/// Generalized Jacobi: Σ_{k+l=n+1} Σ_{S(k,n-k)} ε Q¹_l(Q¹_k(…)⊙…) = 0 for n ≤ n_max.
Violations check_linfty(const LInftyStructure& s, int n_max);

/// Q¹₁ = -d, Q¹₂(w1⊙w2) = (-1)^{deg w1}[w1,w2]. With `validate`, non-DGLA input throws StructureError.
LInftyStructure from_dgla(const DGLA& L, int truncation = 4, bool validate = true);

struct LInftyMorphism {
    LInftyStructure source;
    LInftyStructure target;
    Components f;  // V[1] → W[1], degree 0
    int truncation = 4;

    CoalgMorphism coalgebra_map() const { return CoalgMorphism(f, truncation); }
};

/// F^i_n(w) for a word of length n.
SymVec morphism_taylor(const Components& f, int i, const SymWord& w);

/// Σ_i R¹_i F^i_n = Σ_i F¹_i Q^i_n on every canonical word of length ≤ n_max.
/// `filter` restricts the verified words.
Violations morphism_check(const LInftyMorphism& F, int n_max,
                          const std::function<bool(const SymWord&)>& filter = {});

/// Strong morphism with the single component F¹₁ = f.
LInftyMorphism strong_morphism(const LInftyStructure& source, const LInftyStructure& target,
                               const std::vector<Element>& f);

/// m is given on the basis of V⊗A with index v*|A| + a.
/// Residual (Id⊗d_A)m - Σ_{n≥1} (1/n!)(-1)^{n(n+1)/2} (l_n⊗Id) m^{∧n}.
Element mc_linfty(const LInftyStructure& s, const ArtinDg& A, const Element& m);

/// The same equation written with Q¹ on V[1]⊗A: Σ_n (1/n!) Q̃_n(m^{⊙n}) + (Id⊗d_A)m.
Element mc_linfty_suspended(const LInftyStructure& s, const ArtinDg& A, const Element& m);

/// Basis of V⊗A with total degrees, names "v⊗a".
GradedBasis pair_basis(const GradedBasis& V, const GradedBasis& A);

struct HBracket {
    GradedBasis basis;                 // one symbol per class, named "[rep]"
    std::vector<Element> representatives;
    Table bracket;                     // structure constants on classes
    Violations violations;
};

/// Bracket induced by l₂ on H(V, l₁), with well-definedness, antisymmetry and Jacobi checks.
HBracket h_bracket_check(const LInftyStructure& s);

/// Abstract Hodge data. Operators are dense matrices; H sits in A via inc, proj: A → H.
struct HodgeModel {
    GradedBasis a_space;
    GradedBasis h_space;
    Matrix inc;    // |A| × |H|
    Matrix proj;   // |H| × |A|
    Matrix del;
    Matrix dbar;
    Matrix tau;

    GradedBasis l_space;               // source, degrees of the symmetric coalgebra
    std::vector<Element> d;            // degree 1
    Table q;                           // symmetric, degree 1, on canonical pairs
    std::vector<Matrix> hat;           // â for each basis vector of L, operator degree deg a

    Matrix hat_of(const Element& a) const;
    Element q_eval(int i, int j) const;
};

Violations hodge_model_check(const HodgeModel& M);

struct HodgeResult {
    Violations model_violations;
    std::map<SymWord, Matrix> F;        // F_m on canonical words, m ≤ m_max
    Violations violations;              // nonzero F∘δ
};

/// f_m(a1…am) = h â1 τ â2 … τ âm i, F_m its symmetrization; checks F∘δ = 0.
HodgeResult hodge_F(const HodgeModel& M, int m_max);

/// F_m on an ordered word by explicit symmetrization.
Matrix hodge_F_word(const HodgeModel& M, const std::vector<int>& word);

/// Codifferential of S̄(L) with components d and Q.
Coderivation hodge_delta(const HodgeModel& M, int truncation);

/// ∂ = ∂̄ = τ = 0, A = H.
HodgeModel trivial_hodge_model();
/// Six-dimensional A with a rank-two ∂̄ and τ = σ∂.
HodgeModel derived_hodge_model();
/// The derived model with Q(mu⊙beta) = 2 kappa added; F∘δ fails at arity 2.
HodgeModel injected_hodge_model();

Matrix identity_matrix(int n);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scale(const Scalar& c, const Matrix& a);
bool is_zero(const Matrix& a);
/// [X,Y] = XY - (-1)^{xy} YX.
Matrix graded_commutator(const Matrix& x, long dx, const Matrix& y, long dy);
std::string format(const Matrix& m);

}  // namespace defalg
