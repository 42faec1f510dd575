#pragma once

#include "defalg/core.hpp"

#include <map>
#include <utility>
#include <vector>

namespace defalg {

using SymWord = std::vector<int>;
/// Element of the truncated reduced symmetric coalgebra, keyed by canonical words.
using SymVec = std::map<SymWord, Scalar>;
/// Element of S̄(V)⊗S̄(V).
using SymPairVec = std::map<std::pair<SymWord, SymWord>, Scalar>;
/// Element of the tensor algebra T̄(V), keyed by ordered words.
using TensorVec = std::map<std::vector<int>, Scalar>;
using TensorPairVec = std::map<std::pair<std::vector<int>, std::vector<int>>, Scalar>;

template <class Map, class Key>
void accumulate(Map& m, const Key& k, const Scalar& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = m.emplace(k, c);
    if (fresh) return;
    it->second += c;
    if (sgn(it->second) == 0) m.erase(it);
}

long word_degree(const GradedBasis& basis, const std::vector<int>& w);
/// Canonical words of length n, in lexicographic order of basis indices.
std::vector<SymWord> sym_words(const GradedBasis& basis, int n);
/// Canonical words of length 1..n.
std::vector<SymWord> sym_words_upto(const GradedBasis& basis, int n);

/// Adds c · (v_{w1}⊙…⊙v_{wk}) for an arbitrary ordered word.
void add_word(const GradedBasis& basis, SymVec& out, const std::vector<int>& word, const Scalar& c);
/// x1 ⊙ … ⊙ xk for elements of V.
SymVec sym_product(const GradedBasis& basis, const std::vector<Element>& xs);
SymVec sym_product(const GradedBasis& basis, const SymVec& x, const SymVec& y);
/// Part of word length n.
SymVec arity_part(const SymVec& x, int n);
Element linear_part(const SymVec& x);
std::string format(const GradedBasis& basis, const SymVec& x);

/// 𝔩(v1⊙…⊙vn) = Σ_{∅≠I⊊[n]} ε(I,I^c) v_I ⊗ v_{I^c}.
SymPairVec coproduct(const GradedBasis& basis, const SymWord& w);
SymPairVec coproduct(const GradedBasis& basis, const SymVec& x);
/// (𝔩⊗Id)𝔩 and (Id⊗𝔩)𝔩 as elements of the triple tensor product.
std::map<std::vector<SymWord>, Scalar> coproduct_left_twice(const GradedBasis& basis, const SymWord& w);
std::map<std::vector<SymWord>, Scalar> coproduct_right_twice(const GradedBasis& basis, const SymWord& w);
/// Swap with Koszul sign.
SymPairVec twist(const GradedBasis& basis, const SymPairVec& x);

/// N(v1⊙…⊙vn) = Σ_σ ε(σ) v_σ1⊗…⊗v_σn.
TensorVec n_map(const GradedBasis& basis, const SymWord& w);
/// Deconcatenation coproduct 𝔞 on T̄(V).
TensorPairVec deconcatenate(const TensorVec& x);
TensorPairVec n_tensor_n(const GradedBasis& basis, const SymPairVec& x);

/// Components q_k: ⊙^k V → W given on canonical words of length k.
struct Components {
    GradedBasis source;
    GradedBasis target;
    long degree = 0;
    std::map<int, std::map<SymWord, Element>> q;

    int max_arity() const;
    /// q_k on an arbitrary ordered word of length k.
    Element eval(const std::vector<int>& word) const;
    Element eval(const SymVec& x) const;
};

Violations check_component_degrees(const Components& c);

/// The coderivation on S̄(V) with corestriction components q (source == target).
class Coderivation {
public:
    Coderivation(Components q, int truncation);

    long degree() const { return q_.degree; }
    int truncation() const { return n_; }
    const Components& components() const { return q_; }
    const GradedBasis& basis() const { return q_.source; }

    SymVec apply(const SymWord& w) const;
    SymVec apply(const SymVec& x) const;

private:
    Components q_;
    int n_;
};

/// 𝔩Q - (Q⊗Id + Id⊗Q)𝔩 on every canonical word of length ≤ n.
Violations check_coleibniz(const Coderivation& Q, int n);

/// Corestriction components of an arbitrary linear operator on S̄(V) (given on words ≤ n).
Components corestriction(const GradedBasis& basis, long degree, int n,
                         const std::function<SymVec(const SymWord&)>& op);

/// [Q,R] = QR - (-1)^{|Q||R|} RQ, lifted from its corestriction.
Coderivation coder_bracket(const Coderivation& Q, const Coderivation& R);

/// The coalgebra morphism S̄(V) → S̄(W) with components f (degree 0).
class CoalgMorphism {
public:
    CoalgMorphism(Components f, int truncation);

    const Components& components() const { return f_; }
    int truncation() const { return n_; }
    SymVec apply(const SymWord& w) const;
    SymVec apply(const SymVec& x) const;
    /// F^i_n on a word of length n.
    SymVec component(int i, const SymWord& w) const;

private:
    Components f_;
    int n_;
};

/// Σ_n (1/n!) (⊙ⁿ f) Δ^{n-1}(w) through iterated coproducts.
SymVec morphism_exp_form(const Components& f, const SymWord& w);

/// 𝔩F - (F⊗F)𝔩 on every canonical word of length ≤ n.
Violations check_comorphism(const CoalgMorphism& F, int n);

/// G∘F on a word, as a map S̄(V) → S̄(U).
SymVec compose(const CoalgMorphism& G, const CoalgMorphism& F, const SymWord& w);

}  // namespace defalg
