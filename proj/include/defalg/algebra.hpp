#pragma once

#include "defalg/core.hpp"

#include <map>
#include <optional>
#include <vector>

namespace defalg {

using Table = std::map<std::pair<int, int>, Element>;

/// Bilinear extension of a table on basis pairs; missing entries are zero.
Element bilinear(const Table& table, const Element& x, const Element& y);
Element table_entry(const Table& table, int i, int j);
/// Linear extension of images of basis vectors.
Element linear(const std::vector<Element>& images, const Element& x);

/// Finite-dimensional graded algebra given by a multiplication table.
struct GradedAlgebra {
    GradedBasis basis;
    Table mult;
    std::optional<int> unit;

    Element mul(const Element& x, const Element& y) const { return bilinear(mult, x, y); }
    Element mul_basis(int i, int j) const { return table_entry(mult, i, j); }
};

/// Associativity, graded commutativity, degree and unit laws on basis tuples.
Violations check_graded_commutative(const GradedAlgebra& a);

/// Smallest s with A^s = 0. Throws BoundError if the power series stabilizes above zero.
int algebra_nilpotency_index(const GradedAlgebra& a);

/// Cochain complex on a graded basis; d[i] is the image of basis vector i.
struct Complex {
    GradedBasis basis;
    std::vector<Element> d;

    Element apply(const Element& x) const { return linear(d, x); }
};

Violations check_complex(const Complex& c);

/// H^i = Z^i/B^i with chosen cycle representatives.
class Cohomology {
public:
    Cohomology(const Complex& c, long degree);

    long degree() const { return degree_; }
    int dimension() const { return static_cast<int>(reps_.size()); }
    const std::vector<Element>& representatives() const { return reps_; }
    bool is_cycle(const Element& z) const;
    /// Coordinates of the class of z in the representative basis; nullopt if z is not a cycle.
    std::optional<std::vector<Scalar>> project(const Element& z) const;
    /// Some y of degree i-1 with dy = b, or nullopt if b is not a boundary.
    std::optional<Element> preimage(const Element& b) const;

private:
    long degree_;
    Complex complex_;
    std::vector<int> here_, above_, below_;
    std::vector<Element> boundaries_;
    std::vector<Element> reps_;
};

/// Restriction of c to the span of `idx`; throws DomainError if d leaves the span.
/// Basis order follows `idx`.
Complex subcomplex(const Complex& c, const std::vector<int>& idx);

/// Dimensions of H^i for every degree present in the basis.
std::map<long, int> betti_numbers(const Complex& c);

}  // namespace defalg
