#pragma once

#include "defalg/core.hpp"

#include <functional>
#include <map>
#include <vector>

namespace defalg {

using Word = std::vector<int>;

/// Element of the tensor algebra on `generators` letters, truncated at word length `order`.
class TensorSeries {
public:
    TensorSeries() = default;
    TensorSeries(int generators, int order) : gens_(generators), order_(order) {}

    static TensorSeries one(int generators, int order);
    static TensorSeries letter(int generators, int order, int g, Scalar c = 1);
    static TensorSeries word(int generators, int order, const Word& w, Scalar c = 1);

    int generators() const { return gens_; }
    int order() const { return order_; }
    const std::map<Word, Scalar>& terms() const { return terms_; }
    Scalar coeff(const Word& w) const;
    Scalar constant() const { return coeff({}); }
    bool is_zero() const { return terms_.empty(); }

    void add(const Word& w, const Scalar& c);
    /// Homogeneous part of word length n.
    TensorSeries part(int n) const;
    TensorSeries truncated(int order) const;

    TensorSeries& operator+=(const TensorSeries& o);
    TensorSeries& operator-=(const TensorSeries& o);
    TensorSeries& operator*=(const Scalar& c);
    friend TensorSeries operator+(TensorSeries a, const TensorSeries& b) { return a += b; }
    friend TensorSeries operator-(TensorSeries a, const TensorSeries& b) { return a -= b; }
    friend TensorSeries operator-(TensorSeries a) { return a *= Scalar(-1); }
    friend TensorSeries operator*(const Scalar& c, TensorSeries a) { return a *= c; }
    /// Truncated concatenation product.
    friend TensorSeries operator*(const TensorSeries& a, const TensorSeries& b);
    friend bool operator==(const TensorSeries& a, const TensorSeries& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TensorSeries& a, const TensorSeries& b) { return !(a == b); }

private:
    int gens_ = 0, order_ = 0;
    std::map<Word, Scalar> terms_;
};

TensorSeries commutator(const TensorSeries& a, const TensorSeries& b);
TensorSeries tensor_exp(const TensorSeries& x, int order);
TensorSeries tensor_log(const TensorSeries& y, int order);

/// Right-nested bracket [x1,[x2,[…,[x_{n-1},x_n]]]] of Lie elements.
TensorSeries right_nested(const std::vector<TensorSeries>& xs);

/// Dynkin–Specht–Wever projection v1⊗…⊗vn ↦ (1/n)[v1,[v2,…]].
TensorSeries dsw_project(const TensorSeries& x);
bool is_lie(const TensorSeries& x);

enum class BchMode { Free, Explicit, Nilpotent };

/// σ log(e^a e^b) in the truncated tensor algebra.
TensorSeries bch_free(const TensorSeries& a, const TensorSeries& b, int order);

/// Coefficients of the explicit double sum, indexed by letter words over {0=a, 1=b}.
/// The value for w already includes the (Σ(p_i+q_i))^{-1} factor.
std::map<Word, Scalar> bch_letter_coefficients(int max_len);

/// The explicit double sum, each letter word evaluated as a right-nested bracket.
TensorSeries bch_explicit(const TensorSeries& a, const TensorSeries& b, int order);

using Bracket = std::function<Element(const Element&, const Element&)>;

/// The explicit double sum in a Lie algebra given by a bracket callable; stops once every
/// right-nested bracket of some length vanishes. Throws BoundError past max_len.
Element bch_series(const Element& a, const Element& b, const Bracket& bracket, int max_len);

/// Finite-dimensional Lie algebra given by structure constants on basis pairs.
class NilpotentLie {
public:
    /// Verifies antisymmetry and Jacobi (StructureError) and nilpotency (BoundError).
    NilpotentLie(GradedBasis basis, std::map<std::pair<int, int>, Element> table);

    const GradedBasis& basis() const { return basis_; }
    int nilpotency_index() const { return index_; }
    Element bracket(const Element& x, const Element& y) const;
    Element bracket_basis(int i, int j) const;
    Element bch(const Element& a, const Element& b) const;

private:
    GradedBasis basis_;
    std::map<std::pair<int, int>, Element> table_;
    int index_ = 1;
};

/// Smallest s with L^s = 0 for the lower central series of a bracket on `dim` basis vectors.
/// Throws BoundError when the series stabilizes at a nonzero subspace.
int lower_central_index(int dim, const std::function<Element(int, int)>& bracket_basis);

}  // namespace defalg
