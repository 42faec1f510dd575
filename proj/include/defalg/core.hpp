#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace defalg {

using Scalar = mpq_class;

/// Malformed input. `path` names the offending field, e.g. "basis/2/degree".
struct InputError : std::runtime_error {
    std::string path;
    InputError(std::string p, const std::string& msg)
        : std::runtime_error(p.empty() ? msg : p + ": " + msg), path(std::move(p)) {}
};

/// Mathematical precondition failed (wrong degree, non-MC input, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structure constants violate the axioms of the declared structure.
struct StructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A series or closure iteration did not terminate within its bound.
struct BoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One failed instance of an identity: where, what was left over, which law.
struct Violation {
    std::string location;
    std::string residual;
    std::string message;
};
using Violations = std::vector<Violation>;

Scalar parse_scalar(const std::string& text, const std::string& path = "");
std::string to_string(const Scalar& q);
Scalar factorial(int n);
std::int64_t binomial(int n, int k);

inline bool odd(long d) { return (d % 2) != 0; }
inline int sign_pow(long e) { return odd(e) ? -1 : 1; }

struct GaussianScalar {
    Scalar re, im;

    GaussianScalar() = default;
    GaussianScalar(Scalar r, Scalar i = 0) : re(std::move(r)), im(std::move(i)) {}
    GaussianScalar(int r) : re(r), im(0) {}

    static GaussianScalar i_pow(long k);

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    GaussianScalar conj() const { return {re, -im}; }
    GaussianScalar inverse() const;

    GaussianScalar& operator+=(const GaussianScalar& o);
    GaussianScalar& operator-=(const GaussianScalar& o);
    GaussianScalar& operator*=(const GaussianScalar& o);
    friend GaussianScalar operator+(GaussianScalar a, const GaussianScalar& b) { return a += b; }
    friend GaussianScalar operator-(GaussianScalar a, const GaussianScalar& b) { return a -= b; }
    friend GaussianScalar operator*(GaussianScalar a, const GaussianScalar& b) { return a *= b; }
    friend GaussianScalar operator-(const GaussianScalar& a) { return {-a.re, -a.im}; }
    friend bool operator==(const GaussianScalar& a, const GaussianScalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianScalar& a, const GaussianScalar& b) { return !(a == b); }
};

std::string to_string(const GaussianScalar& z);

struct Symbol {
    std::string name;
    long degree = 0;
};

/// Ordered list of named homogeneous basis vectors. The order fixes canonical words.
class GradedBasis {
public:
    GradedBasis() = default;
    explicit GradedBasis(std::vector<Symbol> symbols);

    int size() const { return static_cast<int>(symbols_.size()); }
    const Symbol& operator[](int i) const { return symbols_.at(i); }
    const std::vector<Symbol>& symbols() const { return symbols_; }
    long degree(int i) const { return symbols_.at(i).degree; }
    const std::string& name(int i) const { return symbols_.at(i).name; }
    std::optional<int> find(const std::string& name) const;
    int index(const std::string& name) const;  // throws InputError
    std::vector<int> of_degree(long d) const;
    /// Same symbols, every degree shifted by `by`.
    GradedBasis shifted(long by) const;

    friend bool operator==(const GradedBasis& a, const GradedBasis& b);

private:
    std::vector<Symbol> symbols_;
    std::map<std::string, int> lookup_;
};

/// Sparse exact linear combination of basis indices.
struct Element {
    std::map<int, Scalar> terms;

    Element() = default;
    static Element basis(int i, Scalar c = 1);

    bool is_zero() const { return terms.empty(); }
    Scalar coeff(int i) const;
    void add(int i, const Scalar& c);
    void axpy(const Scalar& c, const Element& x);

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Scalar& c);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator-(Element a) { return a *= Scalar(-1); }
    friend Element operator*(const Scalar& c, Element a) { return a *= c; }
    friend bool operator==(const Element& a, const Element& b) { return a.terms == b.terms; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
};

/// Degree of a homogeneous element; nullopt for zero, throws DomainError if mixed.
std::optional<long> degree_of(const GradedBasis& basis, const Element& x);
std::string format(const GradedBasis& basis, const Element& x);

/// A bijection of {1..n} stored by its images.
struct Permutation {
    std::vector<int> images;

    Permutation() = default;
    explicit Permutation(std::vector<int> im);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(images.size()); }
    int operator()(int i) const { return images.at(i - 1); }
    Permutation inverse() const;
    /// (this ∘ other)(i) = this(other(i))
    Permutation compose(const Permutation& other) const;
    bool is_unshuffle(int p) const;
    int parity() const;  // ±1

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.images == b.images; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.images < b.images; }
};

/// Koszul sign ε(σ; v1..vn) defined by v1⊙…⊙vn = ε · v_{σ(1)}⊙…⊙v_{σ(n)}.
int koszul_sign(const std::vector<long>& degrees, const Permutation& sigma);

/// All permutations of {1..n} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// S(p,q), ordered lexicographically on the image of {1..p}.
std::vector<Permutation> unshuffles(int p, int q);

struct CanonicalWord {
    std::vector<int> word;
    int sign = 1;
};

/// Sort a ⊙-word into basis order. nullopt when an odd symbol repeats.
std::optional<CanonicalWord> sym_canonical(const GradedBasis& basis, const std::vector<int>& word);

using MultilinearMap = std::function<Element(const std::vector<Element>&)>;

/// f̃(a1⊙…⊙am) = Σ_σ ε(σ) f(a_σ1 ⊗ … ⊗ a_σm).
Element symmetrize(const GradedBasis& basis, const MultilinearMap& f, int arity,
                   const std::vector<Element>& args);

/// Apply a multilinear map on basis words to arbitrary elements by expanding.
Element multilinear_extend(const std::vector<Element>& args,
                           const std::function<Element(const std::vector<int>&)>& on_basis);

}  // namespace defalg
