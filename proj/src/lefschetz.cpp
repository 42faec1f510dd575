#include "defalg/lefschetz.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <tuple>

namespace defalg {

namespace {

int pc(unsigned m) { return std::popcount(m); }

std::string set_name(unsigned m) {
    std::string s;
    for (int j = 0; m; ++j, m >>= 1)
        if (m & 1u) {
            if (!s.empty()) s += ",";
            s += std::to_string(j + 1);
        }
    return s;
}

unsigned to_mask(int n, const std::vector<int>& idx, const char* field) {
    unsigned m = 0;
    for (int j : idx) {
        if (j < 1 || j > n) throw InputError(field, "index " + std::to_string(j) + " outside 1.." + std::to_string(n));
        if (m & (1u << (j - 1))) throw InputError(field, "repeated index " + std::to_string(j));
        m |= 1u << (j - 1);
    }
    return m;
}

unsigned full(int n) { return n >= 32 ? ~0u : ((1u << n) - 1u); }

CovectorElement map_basis(const CovectorElement& v,
                          const std::function<CovectorElement(const StandardCovector&)>& f) {
    CovectorElement out;
    out.n = v.n;
    for (const auto& [z, c] : v.terms) out += c * f(z);
    return out;
}

CovectorElement scaled_basis(const StandardCovector& z, const GaussianScalar& c) {
    return CovectorElement::basis(z, c);
}

CovectorElement op_Li(const CovectorElement& v, int i) {
    if (i < 1 || i > v.n) throw DomainError("L_i index out of range");
    unsigned bit = 1u << (i - 1);
    return map_basis(v, [&](const StandardCovector& z) {
        CovectorElement r;
        r.n = z.n;
        if (!(z.N & bit)) return r;
        StandardCovector w = z;
        w.N &= ~bit;
        w.M |= bit;
        return CovectorElement::basis(w);
    });
}

CovectorElement op_Lambdai(const CovectorElement& v, int i) {
    if (i < 1 || i > v.n) throw DomainError("Lambda_i index out of range");
    unsigned bit = 1u << (i - 1);
    return map_basis(v, [&](const StandardCovector& z) {
        CovectorElement r;
        r.n = z.n;
        if (!(z.M & bit)) return r;
        StandardCovector w = z;
        w.M &= ~bit;
        w.N |= bit;
        return CovectorElement::basis(w);
    });
}

CovectorElement projection(const CovectorElement& v, const std::function<bool(const StandardCovector&)>& keep) {
    CovectorElement out;
    out.n = v.n;
    for (const auto& [z, c] : v.terms)
        if (keep(z)) out.add(z, c);
    return out;
}

// Exterior algebra on z_1, z̄_1, ..., z_n, z̄_n (generator 2(j-1) is z_j, 2(j-1)+1 is z̄_j).
using Raw = std::map<unsigned long long, GaussianScalar>;

int mono_sign(unsigned long long a, unsigned long long b) {
    int inv = 0;
    for (unsigned long long bb = b; bb; bb &= bb - 1) {
        int g = std::countr_zero(bb);
        unsigned long long above = a & ~((2ULL << g) - 1ULL);
        inv += std::popcount(above);
    }
    return sign_pow(inv);
}

void raw_add(Raw& r, unsigned long long m, const GaussianScalar& c) {
    if (c.is_zero()) return;
    auto [it, ins] = r.emplace(m, c);
    if (!ins) {
        it->second += c;
        if (it->second.is_zero()) r.erase(it);
    }
}

Raw raw_mul(const Raw& x, const Raw& y) {
    Raw out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
            if (a & b) continue;
            raw_add(out, a | b, GaussianScalar(mono_sign(a, b)) * ca * cb);
        }
    return out;
}

Raw raw_gen(int g) { return Raw{{1ULL << g, GaussianScalar(1)}}; }

// z_A ∧ z̄_B ∧ u_M without the 2^{-(|A|+|B|)/2} factor.
Raw raw_of(const StandardCovector& z) {
    Raw r{{0ULL, GaussianScalar(1)}};
    for (int j = 0; j < z.n; ++j)
        if (z.A & (1u << j)) r = raw_mul(r, raw_gen(2 * j));
    for (int j = 0; j < z.n; ++j)
        if (z.B & (1u << j)) r = raw_mul(r, raw_gen(2 * j + 1));
    GaussianScalar half_i(0, Scalar(1, 2));
    for (int j = 0; j < z.n; ++j)
        if (z.M & (1u << j)) {
            Raw u = raw_mul(raw_gen(2 * j), raw_gen(2 * j + 1));
            for (auto& [m, c] : u) c *= half_i;
            r = raw_mul(r, u);
        }
    return r;
}

// Conjugation on the raw algebra: swaps z_j and z̄_j and conjugates coefficients.
Raw raw_conj(const Raw& x, int n) {
    Raw out;
    for (const auto& [m, c] : x) {
        Raw r{{0ULL, GaussianScalar(1)}};
        for (int g = 0; g < 2 * n; ++g)
            if (m & (1ULL << g)) r = raw_mul(r, raw_gen(g ^ 1));
        for (const auto& [mm, cc] : r) raw_add(out, mm, cc * c.conj());
    }
    return out;
}

GaussianScalar pow2_neg_half(int k) {
    // 2^{-k/2} for even k
    mpz_class den = 1;
    den <<= static_cast<unsigned>(k / 2);
    return GaussianScalar(Scalar(1) / Scalar(den));
}

Scalar fact(int n) { return factorial(n); }

}  // namespace

StandardCovector StandardCovector::make(int n, const std::vector<int>& A, const std::vector<int>& B,
                                        const std::vector<int>& M, const std::vector<int>& N) {
    if (n < 0 || n > 16) throw InputError("n", "dimension must lie in 0..16");
    StandardCovector z;
    z.n = n;
    z.A = to_mask(n, A, "A");
    z.B = to_mask(n, B, "B");
    z.M = to_mask(n, M, "M");
    z.N = to_mask(n, N, "N");
    if (!z.valid()) throw InputError("", "A, B, M, N must partition {1.." + std::to_string(n) + "}");
    return z;
}

bool StandardCovector::valid() const {
    unsigned all = A | B | M | N;
    return all == full(n) && pc(A) + pc(B) + pc(M) + pc(N) == n;
}

int StandardCovector::a() const { return pc(A) + pc(M); }
int StandardCovector::b() const { return pc(B) + pc(M); }
int StandardCovector::weight() const { return pc(N) - pc(M); }

std::string StandardCovector::name() const {
    return "z{" + set_name(A) + "}{" + set_name(B) + "}{" + set_name(M) + "}{" + set_name(N) + "}";
}

bool operator<(const StandardCovector& x, const StandardCovector& y) {
    return std::tie(x.n, x.A, x.B, x.M, x.N) < std::tie(y.n, y.A, y.B, y.M, y.N);
}
bool operator==(const StandardCovector& x, const StandardCovector& y) {
    return std::tie(x.n, x.A, x.B, x.M, x.N) == std::tie(y.n, y.A, y.B, y.M, y.N);
}

CovectorElement CovectorElement::basis(const StandardCovector& z, const GaussianScalar& c) {
    CovectorElement e;
    e.n = z.n;
    e.add(z, c);
    return e;
}

void CovectorElement::add(const StandardCovector& z, const GaussianScalar& c) {
    if (c.is_zero()) return;
    if (n != z.n) {
        if (!terms.empty()) throw DomainError("covectors of different dimensions");
        n = z.n;
    }
    auto [it, ins] = terms.emplace(z, c);
    if (!ins) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

CovectorElement& CovectorElement::operator+=(const CovectorElement& o) {
    for (const auto& [z, c] : o.terms) add(z, c);
    return *this;
}

CovectorElement& CovectorElement::operator-=(const CovectorElement& o) {
    for (const auto& [z, c] : o.terms) add(z, -c);
    return *this;
}

CovectorElement operator*(const GaussianScalar& c, const CovectorElement& a) {
    CovectorElement out;
    out.n = a.n;
    for (const auto& [z, x] : a.terms) out.add(z, c * x);
    return out;
}

std::string format(const CovectorElement& v) {
    if (v.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [z, c] : v.terms) {
        if (!first) os << " + ";
        first = false;
        std::string s = to_string(c);
        if (s == "1") os << z.name();
        else if (sgn(c.re) != 0 && sgn(c.im) != 0) os << "(" << s << ")" << z.name();
        else os << s << "*" << z.name();
    }
    return os.str();
}

std::vector<StandardCovector> standard_basis(int n) {
    if (n < 0 || n > 8) throw BoundError("standard basis limited to n <= 8");
    std::vector<StandardCovector> out;
    long total = 1L << (2 * n);
    for (long code = 0; code < total; ++code) {
        StandardCovector z;
        z.n = n;
        for (int j = 0; j < n; ++j) {
            switch ((code >> (2 * j)) & 3) {
                case 0: z.N |= 1u << j; break;
                case 1: z.A |= 1u << j; break;
                case 2: z.B |= 1u << j; break;
                default: z.M |= 1u << j; break;
            }
        }
        out.push_back(z);
    }
    return out;
}

CovectorElement op_L(const CovectorElement& v) {
    CovectorElement out;
    out.n = v.n;
    for (int i = 1; i <= v.n; ++i) out += op_Li(v, i);
    return out;
}

CovectorElement op_Lambda(const CovectorElement& v) {
    CovectorElement out;
    out.n = v.n;
    for (int i = 1; i <= v.n; ++i) out += op_Lambdai(v, i);
    return out;
}

CovectorElement op_C(const CovectorElement& v) {
    return map_basis(v, [](const StandardCovector& z) {
        return scaled_basis(z, GaussianScalar::i_pow(z.a() - z.b()));
    });
}

CovectorElement op_Cinv(const CovectorElement& v) {
    return map_basis(v, [](const StandardCovector& z) {
        return scaled_basis(z, GaussianScalar::i_pow(z.b() - z.a()));
    });
}

// signs: docs/signs.md S11
CovectorElement op_CinvStar(const CovectorElement& v) {
    return map_basis(v, [](const StandardCovector& z) {
        long pq = z.p();
        StandardCovector w = z;
        std::swap(w.M, w.N);
        return scaled_basis(w, GaussianScalar(sign_pow(pq * (pq + 1) / 2 + pc(z.M))));
    });
}

CovectorElement op_star(const CovectorElement& v) { return op_C(op_CinvStar(v)); }

CovectorElement op_power(const std::function<CovectorElement(const CovectorElement&)>& f, int k,
                         const CovectorElement& v) {
    CovectorElement out = v;
    for (int j = 0; j < k && !out.is_zero(); ++j) out = f(out);
    return out;
}

CovectorElement conjugate(const CovectorElement& v) {
    CovectorElement out;
    out.n = v.n;
    for (const auto& [z, c] : v.terms) {
        StandardCovector w = z;
        std::swap(w.A, w.B);
        out.add(w, GaussianScalar(sign_pow(static_cast<long>(pc(z.A)) * pc(z.B))) * c.conj());
    }
    return out;
}

CovOp parse_cov_op(const std::string& name) {
    static const std::map<std::string, CovOp> ops = {
        {"L", CovOp::L},       {"Lambda", CovOp::Lambda},     {"L_i", CovOp::Li},
        {"Lambda_i", CovOp::Lambdai}, {"C", CovOp::C},        {"Cinv", CovOp::Cinv},
        {"star", CovOp::Star}, {"Cinv_star", CovOp::CinvStar}, {"P_ab", CovOp::Pab},
        {"P_p", CovOp::Pp},    {"P_alpha", CovOp::Palpha}};
    auto it = ops.find(name);
    if (it == ops.end()) throw InputError("op", "unknown operator '" + name + "'");
    return it->second;
}

std::string cov_op_name(CovOp op) {
    switch (op) {
        case CovOp::L: return "L";
        case CovOp::Lambda: return "Lambda";
        case CovOp::Li: return "L_i";
        case CovOp::Lambdai: return "Lambda_i";
        case CovOp::C: return "C";
        case CovOp::Cinv: return "Cinv";
        case CovOp::Star: return "star";
        case CovOp::CinvStar: return "Cinv_star";
        case CovOp::Pab: return "P_ab";
        case CovOp::Pp: return "P_p";
        case CovOp::Palpha: return "P_alpha";
    }
    return "?";
}

CovectorElement apply_op(CovOp op, const CovectorElement& v, int i, int a, int b) {
    switch (op) {
        case CovOp::L: return op_L(v);
        case CovOp::Lambda: return op_Lambda(v);
        case CovOp::Li: return op_Li(v, i);
        case CovOp::Lambdai: return op_Lambdai(v, i);
        case CovOp::C: return op_C(v);
        case CovOp::Cinv: return op_Cinv(v);
        case CovOp::Star: return op_star(v);
        case CovOp::CinvStar: return op_CinvStar(v);
        case CovOp::Pab:
            return projection(v, [&](const StandardCovector& z) { return z.a() == a && z.b() == b; });
        case CovOp::Pp: return projection(v, [&](const StandardCovector& z) { return z.p() == a; });
        case CovOp::Palpha: return projection(v, [&](const StandardCovector& z) { return z.weight() == a; });
    }
    return v;
}

std::optional<GaussianScalar> wedge_top_coefficient(const CovectorElement& x, const CovectorElement& y) {
    int n = x.n;
    GaussianScalar total;
    unsigned long long top = n == 0 ? 0ULL : ((1ULL << (2 * n)) - 1ULL);
    for (const auto& [zx, cx] : x.terms)
        for (const auto& [zy, cy] : y.terms) {
            Raw prod = raw_mul(raw_of(zx), raw_of(zy));
            if (prod.empty()) continue;
            int k = pc(zx.A) + pc(zx.B) + pc(zy.A) + pc(zy.B);
            if (odd(k)) return std::nullopt;
            for (const auto& [m, c] : prod) {
                if (m != top) return std::nullopt;
                total += c * cx * cy * pow2_neg_half(k);
            }
        }
    // u1∧…∧un = (i/2)^n z1 z̄1 … zn z̄n
    GaussianScalar unit(1);
    for (int j = 0; j < n; ++j) unit *= GaussianScalar(0, Scalar(1, 2));
    return total * unit.inverse();
}

int star_sign(int n, unsigned A, unsigned B) {
    StandardCovector z;
    z.n = n;
    z.A = A;
    z.B = B;
    z.N = full(n) & ~(A | B);
    if (A & B) throw DomainError("A and B must be disjoint");
    CovectorElement s = op_star(CovectorElement::basis(z));
    StandardCovector w = z;
    std::swap(w.M, w.N);
    GaussianScalar c = s.terms.at(w) * GaussianScalar::i_pow(pc(A) + pc(B)).inverse();
    return sgn(c.re);
}

Violations identities_check(int n, const StarFn& star_override) {
    StarFn star = star_override ? star_override : StarFn(op_star);
    Violations out;
    auto expect = [&](const std::string& law, const StandardCovector& z, const CovectorElement& lhs,
                      const CovectorElement& rhs) {
        if (!(lhs == rhs)) out.push_back({law + "(" + z.name() + ")", format(lhs - rhs), law + " fails"});
    };
    for (const StandardCovector& z : standard_basis(n)) {
        CovectorElement v = CovectorElement::basis(z);
        CovectorElement zero;
        zero.n = n;
        expect("[L,C]", z, op_L(op_C(v)), op_C(op_L(v)));
        expect("[Lambda,C]", z, op_Lambda(op_C(v)), op_C(op_Lambda(v)));
        expect("[star,C]", z, star(op_C(v)), op_C(star(v)));
        expect("[Lambda,L]", z, op_Lambda(op_L(v)) - op_L(op_Lambda(v)), GaussianScalar(n - z.p()) * v);
        int alpha = z.weight();
        for (int r = 1; r <= n; ++r) {
            CovectorElement lr = op_power(op_L, r, v);
            CovectorElement lhs = op_Lambda(lr) - op_power(op_L, r, op_Lambda(v));
            CovectorElement rhs = GaussianScalar(r * (alpha - r + 1)) * op_power(op_L, r - 1, v);
            expect("[Lambda,L^" + std::to_string(r) + "]", z, lhs, rhs);
        }
        expect("(Cinv star)^2", z, op_CinvStar(op_CinvStar(v)), v);
        CovectorElement sign_p = GaussianScalar(sign_pow(z.p())) * v;
        expect("star^2", z, star(star(v)), sign_p);
        expect("C^2", z, op_C(op_C(v)), sign_p);
        for (int i = 1; i <= n; ++i) {
            expect("L_" + std::to_string(i) + " star", z, op_Li(star(v), i), star(op_Lambdai(v, i)));
            expect("star L_" + std::to_string(i), z, star(op_Li(v, i)), op_Lambdai(star(v), i));
        }
        // * sends the orthonormal basis to unit multiples of basis vectors
        CovectorElement s = star(v);
        if (s.terms.size() != 1 || (s.terms.begin()->second * s.terms.begin()->second.conj()) != GaussianScalar(1))
            out.push_back({"isometry(" + z.name() + ")", format(s), "star is not unitary on the standard basis"});

        // conjugation formula against the raw expansion
        Raw lhs = raw_conj(raw_of(z), n);
        CovectorElement cz = conjugate(v);
        Raw rhs;
        for (const auto& [w, c] : cz.terms)
            for (const auto& [m, cc] : raw_of(w)) raw_add(rhs, m, cc * c);
        if (lhs != rhs) out.push_back({"conj(" + z.name() + ")", format(cz), "conjugation formula fails"});

        auto top = wedge_top_coefficient(v, star(conjugate(v)));
        if (!top || *top != GaussianScalar(1))
            out.push_back({"z^*conj(z)(" + z.name() + ")", top ? to_string(*top) : "not top degree",
                           "z wedge star(conj z) != u1...un"});
    }
    return out;
}

int covector_degree(const CovectorElement& v) {
    if (v.is_zero()) throw DomainError("zero covector has no degree");
    int p = v.terms.begin()->first.p();
    for (const auto& [z, c] : v.terms)
        if (z.p() != p) throw DomainError("covector is not homogeneous");
    return p;
}

bool is_primitive(const CovectorElement& v) { return op_Lambda(v).is_zero(); }

std::vector<LefschetzPiece> lefschetz_decompose(const CovectorElement& v) {
    std::vector<LefschetzPiece> pieces;
    if (v.is_zero()) return pieces;
    int n = v.n;
    int p = covector_degree(v);
    int alpha = n - p;
    CovectorElement cur = v;
    int lo = std::max(-alpha, 0);
    for (int q = (n - alpha) / 2; q >= lo; --q) {
        int k = alpha + 2 * q;
        CovectorElement w = op_power(op_Lambda, k, op_power(op_L, alpha + q, cur));
        Scalar f = fact(k);
        w = GaussianScalar(Scalar(1) / (f * f)) * w;
        if (w.is_zero()) continue;
        cur -= op_power(op_L, q, w);
        pieces.push_back({q, w});
    }
    if (!cur.is_zero()) throw DomainError("Lefschetz decomposition left a remainder: " + format(cur));
    std::reverse(pieces.begin(), pieces.end());
    return pieces;
}

CovectorElement lefschetz_reconstruct(const std::vector<LefschetzPiece>& pieces, int n) {
    CovectorElement out;
    out.n = n;
    for (const auto& pc_ : pieces) out += op_power(op_L, pc_.r, pc_.v);
    return out;
}

Violations primitive_coefficient_check(const CovectorElement& v) {
    Violations out;
    if (v.is_zero()) return out;
    if (!is_primitive(v)) {
        out.push_back({"Lambda v", format(op_Lambda(v)), "input is not primitive"});
        return out;
    }
    int n = v.n;
    int alpha = n - covector_degree(v);
    std::map<std::pair<unsigned, unsigned>, std::map<unsigned, GaussianScalar>> blocks;
    for (const auto& [z, c] : v.terms) blocks[{z.A, z.B}][z.M] = c;
    for (const auto& [ab, coeffs] : blocks) {
        unsigned rest = full(n) & ~(ab.first | ab.second);
        int h = pc(rest);
        if (odd(h - alpha) || h < alpha) continue;
        int m = (h - alpha) / 2;
        auto coeff = [&](unsigned M) {
            auto it = coeffs.find(M);
            return it == coeffs.end() ? GaussianScalar() : it->second;
        };
        for (unsigned M = rest;; M = (M - 1) & rest) {
            if (pc(M) == m) {
                GaussianScalar sum;
                unsigned comp = rest & ~M;
                for (unsigned Nn = comp;; Nn = (Nn - 1) & comp) {
                    if (pc(Nn) == m) sum += coeff(Nn);
                    if (Nn == 0) break;
                }
                GaussianScalar rhs = GaussianScalar(sign_pow(m)) * sum;
                if (coeff(M) != rhs) {
                    StandardCovector z;
                    z.n = n;
                    z.A = ab.first;
                    z.B = ab.second;
                    z.M = M;
                    z.N = rest & ~M;
                    out.push_back({"a(" + z.name() + ")", to_string(coeff(M) - rhs),
                                   "primitive coefficient relation fails"});
                }
            }
            if (M == 0) break;
        }
    }
    return out;
}

Violations primitive_star_check(const CovectorElement& v, int r) {
    Violations out;
    if (v.is_zero()) return out;
    if (!is_primitive(v)) {
        out.push_back({"Lambda v", format(op_Lambda(v)), "input is not primitive"});
        return out;
    }
    int n = v.n;
    int p = covector_degree(v);
    CovectorElement lhs = op_CinvStar(op_power(op_L, r, v));
    CovectorElement rhs;
    rhs.n = n;
    if (r <= n - p) {
        Scalar c = Scalar(sign_pow(static_cast<long>(p) * (p + 1) / 2)) * fact(r) / fact(n - p - r);
        rhs = GaussianScalar(c) * op_power(op_L, n - p - r, v);
    }
    if (!(lhs == rhs))
        out.push_back({"Cinv star L^" + std::to_string(r), format(lhs - rhs), "primitive star formula fails"});
    int alpha = n - p;
    if (alpha >= 0) {
        Scalar f = fact(alpha);
        CovectorElement ll = op_power(op_Lambda, alpha, op_power(op_L, alpha, v));
        CovectorElement exp = GaussianScalar(f * f) * v;
        if (!(ll == exp))
            out.push_back({"Lambda^a L^a", format(ll - exp), "Lambda^alpha L^alpha v != alpha!^2 v"});
    }
    return out;
}

}  // namespace defalg
