#include "defalg/linfty.hpp"

#include <numeric>
#include <sstream>

namespace defalg {

namespace {

std::vector<long> degrees_of(const GradedBasis& b, const std::vector<int>& w) {
    std::vector<long> d;
    for (int i : w) d.push_back(b.degree(i));
    return d;
}

std::string word_name(const GradedBasis& b, const std::vector<int>& w) {
    std::string s = "(";
    for (std::size_t j = 0; j < w.size(); ++j) s += (j ? "," : "") + b.name(w[j]);
    return s + ")";
}

/// Sorts a ∧-word; zero when an even symbol repeats.
std::optional<CanonicalWord> wedge_canonical(const GradedBasis& b, const std::vector<int>& word) {
    const int n = static_cast<int>(word.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return word[x] < word[y]; });
    CanonicalWord out;
    for (int k = 0; k < n; ++k) {
        out.word.push_back(word[order[k]]);
        if (k > 0 && out.word[k] == out.word[k - 1] && !odd(b.degree(out.word[k]))) return std::nullopt;
    }
    int s = 1;
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
            if (order[k] > order[l]) s *= -sign_pow(b.degree(word[order[k]]) * b.degree(word[order[l]]));
    out.sign = s;
    return out;
}

/// Terms of an element of V⊗A as (v, a, coefficient).
struct PairTerm {
    int v;
    int a;
    Scalar c;
};

std::vector<PairTerm> pair_terms(const Element& m, int a_dim) {
    std::vector<PairTerm> out;
    for (const auto& [i, c] : m.terms) out.push_back({i / a_dim, i % a_dim, c});
    return out;
}

/// Visits ordered n-tuples of terms with nonzero A-product.
/// Callback receives the V-word, the product in A, coefficient product, and Σ_{k<l}|a_k||x_l| parity
/// with the given shift on x degrees.
void visit_tuples(const std::vector<PairTerm>& terms, const GradedBasis& V, const ArtinDg& A, int n, long x_shift,
                  const std::function<void(const std::vector<int>&, const Element&, const Scalar&, long)>& f,
                  bool& any) {
    std::vector<int> xs;
    std::function<void(const Element&, const Scalar&, long, long)> rec = [&](const Element& prod, const Scalar& c,
                                                                            long adeg, long sgn_exp) {
        if (static_cast<int>(xs.size()) == n) {
            any = true;
            f(xs, prod, c, sgn_exp);
            return;
        }
        for (const auto& t : terms) {
            Element next = xs.empty() ? Element::basis(t.a) : A.mul(prod, Element::basis(t.a));
            if (next.is_zero()) continue;
            xs.push_back(t.v);
            rec(next, c * t.c, adeg + A.basis().degree(t.a), sgn_exp + adeg * (V.degree(t.v) + x_shift));
            xs.pop_back();
        }
    };
    rec(Element(), Scalar(1), 0, 0);
}

void add_tensor(Element& out, const Element& x, const Element& a, int a_dim, const Scalar& c) {
    for (const auto& [i, u] : x.terms)
        for (const auto& [j, v] : a.terms) out.add(i * a_dim + j, c * u * v);
}

}  // namespace

bool LInftyStructure::minimal() const {
    auto it = q.q.find(1);
    return it == q.q.end() || it->second.empty();
}

Element UnsuspendedBrackets::eval(const std::vector<int>& word) const {
    auto it = l.find(static_cast<int>(word.size()));
    if (it == l.end()) return Element();
    auto cw = wedge_canonical(space, word);
    if (!cw) return Element();
    auto jt = it->second.find(cw->word);
    if (jt == it->second.end()) return Element();
    return Scalar(cw->sign) * jt->second;
}

// signs: docs/signs.md S7
int displacing_sign(const std::vector<long>& degrees) {
    const long n = static_cast<long>(degrees.size());
    long e = 0;
    for (long i = 1; i <= n; ++i) e += (n - i) * degrees[i - 1];
    return sign_pow(e);
}

// signs: docs/signs.md S7
UnsuspendedBrackets to_unsuspended(const LInftyStructure& s) {
    UnsuspendedBrackets out{s.space, {}};
    for (const auto& [k, table] : s.q.q)
        for (const auto& [w, v] : table) {
            int sign = sign_pow(k) * displacing_sign(degrees_of(s.space, w));
            if (!v.is_zero()) out.l[k][w] = Scalar(sign) * v;
        }
    return out;
}

LInftyStructure from_unsuspended(const UnsuspendedBrackets& b, int truncation) {
    LInftyStructure s = zero_structure(b.space, truncation);
    for (const auto& [k, table] : b.l)
        for (const auto& [w, v] : table) {
            auto cw = wedge_canonical(b.space, w);
            if (!cw) continue;
            long want = 2 - k + static_cast<long>(std::accumulate(w.begin(), w.end(), 0L,
                                                                  [&](long a, int i) { return a + b.space.degree(i); }));
            for (const auto& [i, c] : v.terms)
                if (b.space.degree(i) != want)
                    throw DomainError("l" + std::to_string(k) + word_name(b.space, w) + " must have degree " +
                                      std::to_string(want));
            int sign = cw->sign * sign_pow(k) * displacing_sign(degrees_of(b.space, cw->word));
            Element& slot = s.q.q[k][cw->word];
            slot.axpy(Scalar(sign), v);
            if (slot.is_zero()) s.q.q[k].erase(cw->word);
        }
    return s;
}

LInftyStructure zero_structure(const GradedBasis& space, int truncation) {
    GradedBasis sus = space.shifted(-1);
    return LInftyStructure{space, Components{sus, sus, 1, {}}, truncation};
}

Violations check_linfty(const LInftyStructure& s, int n_max) {
    if (n_max > s.truncation) throw DomainError("verification arity exceeds the truncation");
    Violations out;
    const auto& b = s.suspended();
    for (const auto& w : sym_words_upto(b, n_max)) {
        const int n = static_cast<int>(w.size());
        auto degs = degrees_of(b, w);
        Element total;
        for (int k = 1; k <= n; ++k) {
            if (!s.q.q.count(k) || !s.q.q.count(n - k + 1)) continue;
            for (const auto& sigma : unshuffles(k, n - k)) {
                std::vector<int> head, rest;
                for (int j = 1; j <= k; ++j) head.push_back(w[sigma(j) - 1]);
                for (int j = k + 1; j <= n; ++j) rest.push_back(w[sigma(j) - 1]);
                Element inner = s.q.eval(head);
                if (inner.is_zero()) continue;
                int eps = koszul_sign(degs, sigma);
                for (const auto& [i, c] : inner.terms) {
                    std::vector<int> word{i};
                    word.insert(word.end(), rest.begin(), rest.end());
                    total.axpy(eps * c, s.q.eval(word));
                }
            }
        }
        if (!total.is_zero())
            out.push_back({"jacobi" + word_name(s.space, w), format(b, total),
                           "generalized Jacobi fails at n=" + std::to_string(n)});
    }
    return out;
}

// signs: docs/signs.md S7
LInftyStructure from_dgla(const DGLA& L, int truncation, bool validate) {
    auto bad = validate ? check_dgla(L) : Violations{};
    if (!bad.empty()) throw StructureError("not a DGLA: " + bad.front().location + " " + bad.front().message);
    LInftyStructure s = zero_structure(L.basis, truncation);
    for (int i = 0; i < L.basis.size(); ++i)
        if (!L.d[i].is_zero()) s.q.q[1][{i}] = -L.d[i];
    for (const auto& w : sym_words(s.suspended(), 2)) {
        Element v = L.br_basis(w[0], w[1]);
        if (v.is_zero()) continue;
        s.q.q[2][w] = Scalar(sign_pow(L.basis.degree(w[0]))) * v;
    }
    return s;
}

SymVec morphism_taylor(const Components& f, int i, const SymWord& w) {
    return CoalgMorphism(f, static_cast<int>(w.size())).component(i, w);
}

Violations morphism_check(const LInftyMorphism& F, int n_max, const std::function<bool(const SymWord&)>& filter) {
    Violations out;
    CoalgMorphism phi = F.coalgebra_map();
    Coderivation Q = F.source.coderivation();
    const auto& b = F.source.suspended();
    for (const auto& w : sym_words_upto(b, n_max)) {
        if (filter && !filter(w)) continue;
        Element lhs = F.target.q.eval(phi.apply(w));
        Element rhs = F.f.eval(Q.apply(w));
        Element r = lhs - rhs;
        if (!r.is_zero())
            out.push_back({"morphism" + word_name(F.source.space, w), format(F.target.suspended(), r),
                           "Σ R¹_i F^i_n != Σ F¹_i Q^i_n at n=" + std::to_string(w.size())});
    }
    return out;
}

LInftyMorphism strong_morphism(const LInftyStructure& source, const LInftyStructure& target,
                               const std::vector<Element>& f) {
    Components c{source.suspended(), target.suspended(), 0, {}};
    for (int i = 0; i < static_cast<int>(f.size()); ++i)
        if (!f[i].is_zero()) c.q[1][{i}] = f[i];
    return LInftyMorphism{source, target, c, std::min(source.truncation, target.truncation)};
}

GradedBasis pair_basis(const GradedBasis& V, const GradedBasis& A) {
    std::vector<Symbol> syms;
    for (int i = 0; i < V.size(); ++i)
        for (int j = 0; j < A.size(); ++j) syms.push_back({V.name(i) + "⊗" + A.name(j), V.degree(i) + A.degree(j)});
    return GradedBasis(std::move(syms));
}

namespace {

void require_mc_degree(const LInftyStructure& s, const ArtinDg& A, const Element& m) {
    GradedBasis pb = pair_basis(s.space, A.basis());
    for (const auto& [i, c] : m.terms) {
        if (i < 0 || i >= pb.size()) throw DomainError("index outside V⊗A");
        if (pb.degree(i) != 1) throw DomainError("L∞ Maurer-Cartan candidate must have total degree 1");
    }
}

}  // namespace

// signs: docs/signs.md S8
Element mc_linfty(const LInftyStructure& s, const ArtinDg& A, const Element& m) {
    require_mc_degree(s, A, m);
    const int ad = A.basis().size();
    const auto& V = s.space;
    UnsuspendedBrackets U = to_unsuspended(s);
    auto terms = pair_terms(m, ad);
    Element out;
    for (const auto& t : terms) add_tensor(out, Element::basis(t.v), A.diff(Element::basis(t.a)), ad,
                                           t.c * sign_pow(V.degree(t.v)));
    for (int n = 1;; ++n) {
        bool any = false;
        Scalar coef = Scalar(-sign_pow(static_cast<long>(n) * (n + 1) / 2)) / factorial(n);
        visit_tuples(terms, V, A, n, 0,
                     [&](const std::vector<int>& xs, const Element& prod, const Scalar& c, long e) {
                         Element l = U.eval(xs);
                         if (!l.is_zero()) add_tensor(out, l, prod, ad, coef * c * sign_pow(e));
                     },
                     any);
        if (!any) break;
    }
    return out;
}

Element mc_linfty_suspended(const LInftyStructure& s, const ArtinDg& A, const Element& m) {
    require_mc_degree(s, A, m);
    const int ad = A.basis().size();
    const auto& V = s.space;
    auto terms = pair_terms(m, ad);
    Element out;
    for (const auto& t : terms) add_tensor(out, Element::basis(t.v), A.diff(Element::basis(t.a)), ad,
                                           t.c * sign_pow(V.degree(t.v) - 1));
    for (int n = 1;; ++n) {
        bool any = false;
        Scalar coef = 1 / factorial(n);
        visit_tuples(terms, V, A, n, -1,
                     [&](const std::vector<int>& xs, const Element& prod, const Scalar& c, long e) {
                         Element q = s.q.eval(xs);
                         if (!q.is_zero()) add_tensor(out, q, prod, ad, coef * c * sign_pow(e));
                     },
                     any);
        if (!any) break;
    }
    return out;
}

HBracket h_bracket_check(const LInftyStructure& s) {
    HBracket out;
    const auto& V = s.space;
    UnsuspendedBrackets U = to_unsuspended(s);
    Complex c{V, {}};
    for (int i = 0; i < V.size(); ++i) c.d.push_back(U.eval({i}));
    std::map<long, Cohomology> coh;
    for (const auto& sym : V.symbols()) coh.try_emplace(sym.degree, c, sym.degree);

    auto l2 = [&](const Element& x, const Element& y) {
        return multilinear_extend({x, y}, [&](const std::vector<int>& w) { return U.eval(w); });
    };

    std::vector<Symbol> syms;
    std::vector<long> cls_deg;
    std::map<long, int> first_class;
    for (const auto& [deg, H] : coh) {
        first_class[deg] = static_cast<int>(out.representatives.size());
        for (const auto& r : H.representatives()) {
            syms.push_back({"[" + format(V, r) + "]", deg});
            cls_deg.push_back(deg);
            out.representatives.push_back(r);
        }
    }
    out.basis = GradedBasis(syms);
    const int nc = static_cast<int>(out.representatives.size());

    auto to_classes = [&](const Element& z, long deg, const std::string& where) -> Element {
        Element e;
        if (z.is_zero()) return e;
        auto it = coh.find(deg);
        if (it == coh.end()) {
            out.violations.push_back({where, format(V, z), "value in a degree with no basis vectors"});
            return e;
        }
        auto coords = it->second.project(z);
        if (!coords) {
            out.violations.push_back({where, format(V, z), "l2 of cycles is not a cycle"});
            return e;
        }
        for (std::size_t k = 0; k < coords->size(); ++k) e.add(first_class[deg] + static_cast<int>(k), (*coords)[k]);
        return e;
    };

    for (int a = 0; a < nc; ++a)
        for (int b = 0; b < nc; ++b) {
            std::string where = "bracket(" + syms[a].name + "," + syms[b].name + ")";
            Element e = to_classes(l2(out.representatives[a], out.representatives[b]), cls_deg[a] + cls_deg[b], where);
            if (!e.is_zero()) out.bracket[{a, b}] = e;
        }

    for (int a = 0; a < nc; ++a)
        for (int y = 0; y < V.size(); ++y) {
            Element z = l2(out.representatives[a], c.d[y]);
            if (z.is_zero()) continue;
            long deg = cls_deg[a] + V.degree(y) + 1;
            auto it = coh.find(deg);
            if (it == coh.end() || !it->second.preimage(z))
                out.violations.push_back({"well-defined(" + syms[a].name + ",d" + V.name(y) + ")", format(V, z),
                                          "l2(z, boundary) is not a boundary"});
        }

    auto br = [&](const Element& x, const Element& y) { return bilinear(out.bracket, x, y); };
    for (int a = 0; a < nc; ++a)
        for (int b = 0; b < nc; ++b) {
            Element r = table_entry(out.bracket, a, b) +
                        Scalar(sign_pow(cls_deg[a] * cls_deg[b])) * table_entry(out.bracket, b, a);
            if (!r.is_zero())
                out.violations.push_back({"antisymmetry(" + syms[a].name + "," + syms[b].name + ")",
                                          format(out.basis, r), "[a,b] + (-1)^{ab}[b,a] != 0 on H"});
        }
    for (int a = 0; a < nc; ++a)
        for (int b = 0; b < nc; ++b)
            for (int cc = 0; cc < nc; ++cc) {
                Element A = Element::basis(a), B = Element::basis(b), C = Element::basis(cc);
                Element r = br(A, br(B, C)) - br(br(A, B), C) -
                            Scalar(sign_pow(cls_deg[a] * cls_deg[b])) * br(B, br(A, C));
                if (!r.is_zero())
                    out.violations.push_back({"jacobi(" + syms[a].name + "," + syms[b].name + "," + syms[cc].name + ")",
                                              format(out.basis, r), "Jacobi fails on H"});
            }
    return out;
}

Matrix identity_matrix(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix shape mismatch");
    Matrix m(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) m(r, c) = a(r, c) + b(r, c);
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + scale(-1, b); }

Matrix scale(const Scalar& k, const Matrix& a) {
    Matrix m(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) m(r, c) = k * a(r, c);
    return m;
}

bool is_zero(const Matrix& a) {
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            if (sgn(a(r, c)) != 0) return false;
    return true;
}

Matrix graded_commutator(const Matrix& x, long dx, const Matrix& y, long dy) {
    return x * y - scale(sign_pow(dx * dy), y * x);
}

std::string format(const Matrix& m) {
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < m.rows(); ++r) {
        os << (r ? "," : "") << "[";
        for (int c = 0; c < m.cols(); ++c) os << (c ? "," : "") << to_string(m(r, c));
        os << "]";
    }
    os << "]";
    return os.str();
}

Matrix HodgeModel::hat_of(const Element& a) const {
    const int n = a_space.size();
    Matrix m(n, n);
    for (const auto& [i, c] : a.terms) m = m + scale(c, hat.at(i));
    return m;
}

Element HodgeModel::q_eval(int i, int j) const {
    if (i > j) return Scalar(sign_pow(l_space.degree(i) * l_space.degree(j))) * q_eval(j, i);
    if (i == j && odd(l_space.degree(i))) return Element();
    return table_entry(q, i, j);
}

Coderivation hodge_delta(const HodgeModel& M, int truncation) {
    Components c{M.l_space, M.l_space, 1, {}};
    for (int i = 0; i < M.l_space.size(); ++i)
        if (!M.d[i].is_zero()) c.q[1][{i}] = M.d[i];
    for (const auto& w : sym_words(M.l_space, 2)) {
        Element v = M.q_eval(w[0], w[1]);
        if (!v.is_zero()) c.q[2][w] = v;
    }
    return Coderivation(c, truncation);
}

namespace {

void check_op_degree(Violations& out, const std::string& name, const Matrix& m, const GradedBasis& rows,
                     const GradedBasis& cols, long k) {
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (sgn(m(r, c)) != 0 && rows.degree(r) - cols.degree(c) != k) {
                out.push_back({"degree(" + name + ")", cols.name(c) + "->" + rows.name(r),
                               "operator must have degree " + std::to_string(k)});
                return;
            }
}

void require_zero(Violations& out, const std::string& name, const Matrix& m) {
    if (!is_zero(m)) out.push_back({name, format(m), "relation " + name + " = 0 fails"});
}

}  // namespace

Violations hodge_model_check(const HodgeModel& M) {
    Violations out;
    const int na = M.a_space.size(), nh = M.h_space.size(), nl = M.l_space.size();
    if (M.del.rows() != na || M.dbar.rows() != na || M.tau.rows() != na || M.inc.rows() != na ||
        M.inc.cols() != nh || M.proj.rows() != nh || M.proj.cols() != na ||
        static_cast<int>(M.hat.size()) != nl || static_cast<int>(M.d.size()) != nl)
        throw DomainError("Hodge model operator shapes do not match the spaces");
    check_op_degree(out, "∂", M.del, M.a_space, M.a_space, 1);
    check_op_degree(out, "∂̄", M.dbar, M.a_space, M.a_space, 1);
    check_op_degree(out, "τ", M.tau, M.a_space, M.a_space, 0);
    check_op_degree(out, "i", M.inc, M.a_space, M.h_space, 0);
    check_op_degree(out, "h", M.proj, M.h_space, M.a_space, 0);
    for (int a = 0; a < nl; ++a) check_op_degree(out, "hat " + M.l_space.name(a), M.hat[a], M.a_space, M.a_space, M.l_space.degree(a));

    require_zero(out, "h∂", M.proj * M.del);
    require_zero(out, "∂h", M.del * M.inc);
    require_zero(out, "τh", M.tau * M.inc);
    require_zero(out, "hτ", M.proj * M.tau);
    require_zero(out, "∂τ", M.del * M.tau);
    require_zero(out, "τ∂", M.tau * M.del);
    require_zero(out, "h∂̄", M.proj * M.dbar);
    require_zero(out, "∂̄h", M.dbar * M.inc);
    require_zero(out, "∂²", M.del * M.del);
    require_zero(out, "∂̄²", M.dbar * M.dbar);
    require_zero(out, "∂∂̄+∂̄∂", M.del * M.dbar + M.dbar * M.del);
    require_zero(out, "[∂̄,τ]-∂", graded_commutator(M.dbar, 1, M.tau, 0) - M.del);
    require_zero(out, "hi-id", M.proj * M.inc - identity_matrix(nh));

    for (int a = 0; a < nl; ++a) {
        long da = M.l_space.degree(a);
        require_zero(out, "hat(d " + M.l_space.name(a) + ")-[∂̄,hat " + M.l_space.name(a) + "]",
                     M.hat_of(M.d[a]) - graded_commutator(M.dbar, 1, M.hat[a], da));
    }
    for (int a = 0; a < nl; ++a)
        for (int b = a; b < nl; ++b) {
            long da = M.l_space.degree(a), db = M.l_space.degree(b);
            Matrix inner = graded_commutator(M.del, 1, M.hat[a], da);
            require_zero(out, "hat(Q(" + M.l_space.name(a) + "⊙" + M.l_space.name(b) + "))+[[∂,â],b̂]",
                         M.hat_of(M.q_eval(a, b)) + graded_commutator(inner, da + 1, M.hat[b], db));
        }

    Coderivation delta = hodge_delta(M, 3);
    for (const auto& w : sym_words_upto(M.l_space, 3)) {
        SymVec r = delta.apply(delta.apply(w));
        if (!r.empty()) out.push_back({"δ²" + word_name(M.l_space, w), format(M.l_space, r), "δ² != 0"});
    }
    return out;
}

Matrix hodge_F_word(const HodgeModel& M, const std::vector<int>& word) {
    const int m = static_cast<int>(word.size());
    const int nh = M.h_space.size();
    auto degs = degrees_of(M.l_space, word);
    Matrix out(nh, nh);
    for (const auto& sigma : all_permutations(m)) {
        Matrix f = M.hat[word[sigma(m) - 1]] * M.inc;
        for (int k = m - 1; k >= 1; --k) f = M.hat[word[sigma(k) - 1]] * (M.tau * f);
        f = M.proj * f;
        out = out + scale(koszul_sign(degs, sigma), f);
    }
    return out;
}

HodgeResult hodge_F(const HodgeModel& M, int m_max) {
    HodgeResult res;
    res.model_violations = hodge_model_check(M);
    const int nh = M.h_space.size();
    for (const auto& w : sym_words_upto(M.l_space, m_max)) {
        Matrix f = hodge_F_word(M, w);
        if (!is_zero(f)) res.F.emplace(w, f);
    }
    auto F_of = [&](const SymWord& w) -> Matrix {
        auto it = res.F.find(w);
        return it == res.F.end() ? Matrix(nh, nh) : it->second;
    };
    Coderivation delta = hodge_delta(M, m_max);
    for (const auto& w : sym_words_upto(M.l_space, m_max)) {
        Matrix total(nh, nh);
        for (const auto& [u, c] : delta.apply(w)) total = total + scale(c, F_of(u));
        if (!is_zero(total))
            res.violations.push_back({"Fδ" + word_name(M.l_space, w), format(total),
                                      "F∘δ != 0 at m=" + std::to_string(w.size())});
    }
    return res;
}

HodgeModel trivial_hodge_model() {
    HodgeModel M;
    M.a_space = GradedBasis({{"k0", 0}, {"k1", 1}});
    M.h_space = M.a_space;
    M.inc = identity_matrix(2);
    M.proj = identity_matrix(2);
    M.del = Matrix(2, 2);
    M.dbar = Matrix(2, 2);
    M.tau = Matrix(2, 2);
    M.l_space = GradedBasis({{"nu", 0}, {"kappa", 1}});
    M.d = {Element(), Element()};
    M.hat = {identity_matrix(2), Matrix(2, 2)};
    M.hat[1](1, 0) = 1;
    return M;
}

HodgeModel derived_hodge_model() {
    HodgeModel M;
    // p u v w k0 k1
    M.a_space = GradedBasis({{"p", 0}, {"u", 1}, {"v", 1}, {"w", 2}, {"k0", 0}, {"k1", 1}});
    M.h_space = GradedBasis({{"k0", 0}, {"k1", 1}});
    enum { p, u, v, w, k0, k1 };
    M.inc = Matrix(6, 2);
    M.inc(k0, 0) = 1;
    M.inc(k1, 1) = 1;
    M.proj = Matrix(2, 6);
    M.proj(0, k0) = 1;
    M.proj(1, k1) = 1;
    M.dbar = Matrix(6, 6);
    M.dbar(u, p) = 1;
    M.dbar(w, v) = -1;
    M.del = Matrix(6, 6);
    M.del(v, p) = 1;
    M.del(w, u) = 1;
    Matrix sigma(6, 6);
    sigma(p, u) = 1;
    sigma(v, w) = -1;
    M.tau = sigma * M.del;

    M.l_space = GradedBasis({{"mu", 0}, {"alpha", 1}, {"beta", 0}, {"kappa", 1}});
    M.d = {Element::basis(1), Element(), Element(), Element()};
    M.q[{0, 2}] = Element::basis(3);
    M.hat.assign(4, Matrix(6, 6));
    M.hat[0](p, k0) = 1;
    M.hat[1](u, k0) = 1;
    M.hat[2](k1, v) = 1;
    M.hat[3](k1, k0) = 1;
    return M;
}

HodgeModel injected_hodge_model() {
    HodgeModel M = derived_hodge_model();
    M.q[{0, 2}] = Element::basis(3, 2);
    return M;
}

}  // namespace defalg
