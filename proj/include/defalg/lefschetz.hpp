#pragma once

#include "defalg/core.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace defalg {

/// z_{A,B,M,N} = 2^{-(|A|+|B|)/2} z_A∧z̄_B∧u_M with A,B,M,N a partition of {1..n}, stored as bitmasks.
struct StandardCovector {
    int n = 0;
    unsigned A = 0, B = 0, M = 0, N = 0;

    static StandardCovector make(int n, const std::vector<int>& A, const std::vector<int>& B,
                                 const std::vector<int>& M, const std::vector<int>& N);
    bool valid() const;
    int a() const;       // |A|+|M|
    int b() const;       // |B|+|M|
    int p() const { return a() + b(); }
    int weight() const;  // |N|-|M| = n - p
    std::string name() const;

    friend bool operator<(const StandardCovector& x, const StandardCovector& y);
    friend bool operator==(const StandardCovector& x, const StandardCovector& y);
};

struct CovectorElement {
    int n = 0;
    std::map<StandardCovector, GaussianScalar> terms;

    static CovectorElement basis(const StandardCovector& z, const GaussianScalar& c = 1);
    bool is_zero() const { return terms.empty(); }
    void add(const StandardCovector& z, const GaussianScalar& c);
    CovectorElement& operator+=(const CovectorElement& o);
    CovectorElement& operator-=(const CovectorElement& o);
    friend CovectorElement operator+(CovectorElement a, const CovectorElement& b) { return a += b; }
    friend CovectorElement operator-(CovectorElement a, const CovectorElement& b) { return a -= b; }
    friend CovectorElement operator*(const GaussianScalar& c, const CovectorElement& a);
    friend bool operator==(const CovectorElement& a, const CovectorElement& b) { return a.terms == b.terms; }
};

std::string format(const CovectorElement& v);
/// All 4^n standard basis covectors in a fixed order.
std::vector<StandardCovector> standard_basis(int n);

enum class CovOp { L, Lambda, Li, Lambdai, C, Cinv, Star, CinvStar, Pab, Pp, Palpha };

/// `i` is the index for Li/Lambdai, (a,b) the bidegree for Pab, `a` the degree for Pp or weight for Palpha.
CovectorElement apply_op(CovOp op, const CovectorElement& v, int i = 0, int a = 0, int b = 0);
CovOp parse_cov_op(const std::string& name);
std::string cov_op_name(CovOp op);

CovectorElement op_L(const CovectorElement& v);
CovectorElement op_Lambda(const CovectorElement& v);
CovectorElement op_C(const CovectorElement& v);
CovectorElement op_Cinv(const CovectorElement& v);
/// C^{-1}* z_{A,B,M,N} = (-1)^{(p+q)(p+q+1)/2+|M|} z_{A,B,N,M}.
CovectorElement op_CinvStar(const CovectorElement& v);
/// * = C ∘ C^{-1}*.
CovectorElement op_star(const CovectorElement& v);
CovectorElement op_power(const std::function<CovectorElement(const CovectorElement&)>& f, int k,
                         const CovectorElement& v);
/// Complex conjugation: conj(z_{A,B,M,N}) = (-1)^{|A||B|} z_{B,A,M,N}, coefficients conjugated.
CovectorElement conjugate(const CovectorElement& v);

using StarFn = std::function<CovectorElement(const CovectorElement&)>;

/// Commutation relations, the [Λ,L^r] formula, (C^{-1}*)² = Id, *² = C² = Σ(-1)^p P_p,
/// L_i* = *Λ_i, and z∧*z̄ = u1∧…∧un through a raw wedge expansion. `star` replaces * when given.
Violations identities_check(int n, const StarFn& star = {});

/// z ∧ w computed in ⋀(z_1..z_n, z̄_1..z̄_n) and returned as a multiple of u_1∧…∧u_n,
/// or nullopt if the product is not such a multiple.
std::optional<GaussianScalar> wedge_top_coefficient(const CovectorElement& x, const CovectorElement& y);

/// sgn(A,B) with * z_{A,B,M,N} = sgn(A,B) i^{|A|+|B|} z_{A,B,N,M}.
int star_sign(int n, unsigned A, unsigned B);

/// Common p of a homogeneous element; throws DomainError otherwise.
int covector_degree(const CovectorElement& v);
bool is_primitive(const CovectorElement& v);

struct LefschetzPiece {
    int r;
    CovectorElement v;
};

/// v = Σ_r L^r v_r with v_r primitive of weight α+2r.
std::vector<LefschetzPiece> lefschetz_decompose(const CovectorElement& v);
CovectorElement lefschetz_reconstruct(const std::vector<LefschetzPiece>& pieces, int n);

/// a_M = (-1)^m Σ_{N⊂M^c, |N|=m} a_N in every V_{A,B} block of a primitive element.
Violations primitive_coefficient_check(const CovectorElement& v);

/// C^{-1}*L^r v against (-1)^{p(p+1)/2} r!/(n-p-r)! L^{n-p-r} v, and Λ^α L^α v = α!² v.
Violations primitive_star_check(const CovectorElement& v, int r);

}  // namespace defalg
