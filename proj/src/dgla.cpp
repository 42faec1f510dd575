#include "defalg/dgla.hpp"

#include "defalg/freelie.hpp"

#include <set>

namespace defalg {

namespace {

std::string tuple_name(const GradedBasis& b, std::initializer_list<int> idx) {
    std::string s = "(";
    bool first = true;
    for (int i : idx) {
        if (!first) s += ",";
        s += b.name(i);
        first = false;
    }
    return s + ")";
}

void push_if(Violations& out, const GradedBasis& b, const Element& r, std::string where, std::string what) {
    if (!r.is_zero()) out.push_back({std::move(where), format(b, r), std::move(what)});
}

bool has_degree(const GradedBasis& b, const Element& x, long want) {
    for (const auto& [i, c] : x.terms)
        if (b.degree(i) != want) return false;
    return true;
}

void require_degree(const GradedBasis& b, const Element& x, long want, const char* what) {
    if (!has_degree(b, x, want))
        throw DomainError(std::string(what) + " must be homogeneous of degree " + std::to_string(want));
}

}  // namespace

Table complete_antisymmetric(const GradedBasis& basis, Table table) {
    Table out = table;
    for (const auto& [key, v] : table) {
        auto [i, j] = key;
        std::pair<int, int> rev{j, i};
        if (table.count(rev)) continue;
        out[rev] = Scalar(-sign_pow(basis.degree(i) * basis.degree(j))) * v;
    }
    return out;
}

Violations check_dgla(const DGLA& L) {
    const auto& b = L.basis;
    const int n = b.size();
    Violations out = check_complex(L.complex());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!has_degree(b, L.br_basis(i, j), b.degree(i) + b.degree(j)))
                out.push_back({"degree" + tuple_name(b, {i, j}), format(b, L.br_basis(i, j)), "bracket must have degree 0"});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long s = b.degree(i) * b.degree(j);
            Element r = L.br_basis(i, j) + Scalar(sign_pow(s)) * L.br_basis(j, i);
            push_if(out, b, r, "antisymmetry" + tuple_name(b, {i, j}), "[a,b] + (-1)^{|a||b|}[b,a] != 0");
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Element a = Element::basis(i), c = Element::basis(k);
                Element r = L.br(a, L.br_basis(j, k)) - L.br(L.br_basis(i, j), c) -
                            Scalar(sign_pow(b.degree(i) * b.degree(j))) * L.br(Element::basis(j), L.br_basis(i, k));
                push_if(out, b, r, "jacobi" + tuple_name(b, {i, j, k}), "[a,[b,c]] - [[a,b],c] - (-1)^{|a||b|}[b,[a,c]] != 0");
            }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Element a = Element::basis(i), c = Element::basis(j);
            Element r = L.diff(L.br_basis(i, j)) - L.br(L.d[i], c) - Scalar(sign_pow(b.degree(i))) * L.br(a, L.d[j]);
            push_if(out, b, r, "leibniz" + tuple_name(b, {i, j}), "d[a,b] - [da,b] - (-1)^{|a|}[a,db] != 0");
        }
    return out;
}

ArtinDg make_artin(GradedBasis basis, Table mult, std::vector<Element> d) {
    if (d.empty()) d.resize(basis.size());
    if (static_cast<int>(d.size()) != basis.size()) throw InputError("differential", "one image per basis vector");
    ArtinDg A;
    A.alg.basis = std::move(basis);
    A.alg.mult = std::move(mult);
    A.d = std::move(d);
    return A;
}

ArtinDg truncated_polynomial(int s, const std::string& var) {
    std::vector<Symbol> syms;
    for (int k = 1; k < s; ++k) syms.push_back({k == 1 ? var : var + "^" + std::to_string(k), 0});
    Table mult;
    for (int a = 1; a < s; ++a)
        for (int b = 1; a + b < s; ++b) mult[{a - 1, b - 1}] = Element::basis(a + b - 1);
    return make_artin(GradedBasis(std::move(syms)), std::move(mult));
}

ArtinDg truncated_polynomial_ring(int vars, int s) {
    std::vector<std::vector<int>> monos;
    std::vector<int> e(vars, 0);
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == vars) {
            int tot = 0;
            for (int x : e) tot += x;
            if (tot > 0) monos.push_back(e);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[v] = k;
            rec(v + 1, left - k);
        }
        e[v] = 0;
    };
    rec(0, s - 1);
    std::sort(monos.begin(), monos.end(), [](const auto& x, const auto& y) {
        int a = 0, b = 0;
        for (int v : x) a += v;
        for (int v : y) b += v;
        if (a != b) return a < b;
        return x > y;
    });
    std::map<std::vector<int>, int> where;
    std::vector<Symbol> syms;
    for (std::size_t k = 0; k < monos.size(); ++k) {
        where[monos[k]] = static_cast<int>(k);
        std::string name;
        for (int v = 0; v < vars; ++v) {
            if (monos[k][v] == 0) continue;
            if (!name.empty()) name += "*";
            name += "t" + std::to_string(v + 1);
            if (monos[k][v] > 1) name += "^" + std::to_string(monos[k][v]);
        }
        syms.push_back({name, 0});
    }
    Table mult;
    for (std::size_t a = 0; a < monos.size(); ++a)
        for (std::size_t b = 0; b < monos.size(); ++b) {
            std::vector<int> m(vars);
            for (int v = 0; v < vars; ++v) m[v] = monos[a][v] + monos[b][v];
            auto it = where.find(m);
            if (it != where.end()) mult[{static_cast<int>(a), static_cast<int>(b)}] = Element::basis(it->second);
        }
    return make_artin(GradedBasis(std::move(syms)), std::move(mult));
}

NaReport check_na(const ArtinDg& A) {
    NaReport rep;
    rep.violations = check_graded_commutative(A.alg);
    if (A.alg.unit) rep.violations.push_back({"unit", A.basis().name(*A.alg.unit), "objects of NA carry no unit"});
    auto cx = check_complex(A.complex());
    rep.violations.insert(rep.violations.end(), cx.begin(), cx.end());
    const auto& b = A.basis();
    for (int i = 0; i < b.size(); ++i)
        for (int j = 0; j < b.size(); ++j) {
            Element r = A.diff(A.alg.mul_basis(i, j)) - A.mul(A.d[i], Element::basis(j)) -
                        Scalar(sign_pow(b.degree(i))) * A.mul(Element::basis(i), A.d[j]);
            push_if(rep.violations, b, r, "leibniz" + tuple_name(b, {i, j}), "d(ab) - (da)b - (-1)^{|a|} a db != 0");
        }
    try {
        rep.nilpotency_index = algebra_nilpotency_index(A.alg);
    } catch (const BoundError& e) {
        rep.violations.push_back({"nilpotency", "", e.what()});
    }
    return rep;
}

Element TensorDgla::pure(const Element& x, const Element& a) const {
    Element out;
    for (const auto& [i, c] : x.terms)
        for (const auto& [j, v] : a.terms) out.add(index(i, j), c * v);
    return out;
}

// signs: docs/signs.md S4
TensorDgla tensor_dgla(const DGLA& L, const ArtinDg& A) {
    TensorDgla T;
    T.l_dim = L.basis.size();
    T.a_dim = A.basis().size();
    std::vector<Symbol> syms;
    for (int i = 0; i < T.l_dim; ++i)
        for (int j = 0; j < T.a_dim; ++j)
            syms.push_back({L.basis.name(i) + "⊗" + A.basis().name(j), L.basis.degree(i) + A.basis().degree(j)});
    T.dgla.basis = GradedBasis(std::move(syms));
    T.dgla.d.resize(T.l_dim * T.a_dim);
    for (int i = 0; i < T.l_dim; ++i)
        for (int j = 0; j < T.a_dim; ++j) {
            Element v = T.pure(L.d[i], Element::basis(j));
            v.axpy(sign_pow(L.basis.degree(i)), T.pure(Element::basis(i), A.d[j]));
            T.dgla.d[T.index(i, j)] = std::move(v);
        }
    for (const auto& [key, lie] : L.bracket) {
        auto [x, y] = key;
        for (const auto& [akey, prod] : A.alg.mult) {
            auto [a, b] = akey;
            Scalar s = sign_pow(A.basis().degree(a) * L.basis.degree(y));
            Element v = T.pure(lie, prod);
            if (v.is_zero()) continue;
            v *= s;
            T.dgla.bracket[{T.index(x, a), T.index(y, b)}] = std::move(v);
        }
    }
    return T;
}

Element mc_residual(const DGLA& M, const Element& x) {
    require_degree(M.basis, x, 1, "Maurer-Cartan candidate");
    Element r = M.diff(x);
    r.axpy(Scalar(1, 2), M.br(x, x));
    return r;
}

bool mc_check(const DGLA& M, const Element& x) { return mc_residual(M, x).is_zero(); }

// signs: docs/signs.md S5
Element gauge_apply(const DGLA& M, const Element& a, const Element& w, int max_terms) {
    require_degree(M.basis, a, 0, "gauge parameter");
    require_degree(M.basis, w, 1, "gauge target");
    Element term = M.br(a, w) - M.diff(a);
    Element out = w;
    for (int n = 0; !term.is_zero(); ++n) {
        if (n >= max_terms) throw BoundError("gauge series did not terminate");
        out.axpy(1 / factorial(n + 1), term);
        term = M.br(a, term);
    }
    return out;
}

Element bch_in(const DGLA& M, const Element& a, const Element& b, int max_len) {
    require_degree(M.basis, a, 0, "BCH argument");
    require_degree(M.basis, b, 0, "BCH argument");
    return bch_series(a, b, [&M](const Element& x, const Element& y) { return M.br(x, y); }, max_len);
}

bool SmallExtension::acyclic() const {
    for (const auto& [deg, dim] : betti_numbers(subcomplex(total.complex(), kernel)))
        if (dim != 0) return false;
    return true;
}

Element SmallExtension::project(const Element& a) const {
    Element out;
    for (const auto& [i, c] : a.terms)
        if (to_quotient[i] >= 0) out.add(to_quotient[i], c);
    return out;
}

Element SmallExtension::lift(const Element& b) const {
    Element out;
    for (const auto& [i, c] : b.terms) out.add(section[i], c);
    return out;
}

SmallExtension make_small_extension(const ArtinDg& A, const std::vector<std::string>& kernel_names) {
    SmallExtension e;
    e.total = A;
    const auto& b = A.basis();
    std::set<int> ker;
    for (std::size_t k = 0; k < kernel_names.size(); ++k) {
        auto i = b.find(kernel_names[k]);
        if (!i) throw InputError("kernel/" + std::to_string(k), "unknown symbol " + kernel_names[k]);
        ker.insert(*i);
    }
    e.kernel.assign(ker.begin(), ker.end());
    auto inside = [&](const Element& x) {
        for (const auto& [i, c] : x.terms)
            if (!ker.count(i)) return false;
        return true;
    };
    for (int i : e.kernel) {
        if (!inside(A.d[i])) throw DomainError("kernel is not closed under d: " + b.name(i));
        for (int j = 0; j < b.size(); ++j)
            if (!A.alg.mul_basis(j, i).is_zero() || !A.alg.mul_basis(i, j).is_zero())
                throw DomainError("A·I != 0 at (" + b.name(j) + "," + b.name(i) + ")");
    }
    std::vector<Symbol> syms;
    e.to_quotient.assign(b.size(), -1);
    for (int i = 0; i < b.size(); ++i)
        if (!ker.count(i)) {
            e.to_quotient[i] = static_cast<int>(syms.size());
            e.section.push_back(i);
            syms.push_back(b[i]);
        }
    Table mult;
    for (const auto& [key, v] : A.alg.mult) {
        auto [i, j] = key;
        if (ker.count(i) || ker.count(j)) continue;
        Element p = e.project(v);
        if (!p.is_zero()) mult[{e.to_quotient[i], e.to_quotient[j]}] = std::move(p);
    }
    std::vector<Element> d;
    for (int i : e.section) d.push_back(e.project(A.d[i]));
    e.quotient = make_artin(GradedBasis(std::move(syms)), std::move(mult), std::move(d));
    return e;
}

Element lift_tensor(const DGLA& L, const SmallExtension& e, const Element& x) {
    const int nb = e.quotient.basis().size(), na = e.total.basis().size();
    (void)L;
    Element out;
    for (const auto& [idx, c] : x.terms) out.add((idx / nb) * na + e.section[idx % nb], c);
    return out;
}

Element project_tensor(const DGLA& L, const SmallExtension& e, const Element& x) {
    const int nb = e.quotient.basis().size(), na = e.total.basis().size();
    (void)L;
    Element out;
    for (const auto& [idx, c] : x.terms) {
        int q = e.to_quotient[idx % na];
        if (q >= 0) out.add((idx / na) * nb + q, c);
    }
    return out;
}

ObstructionResult obstruction_class(const DGLA& L, const SmallExtension& e, const Element& x,
                                    const std::optional<Element>& lift) {
    TensorDgla MB = tensor_dgla(L, e.quotient);
    TensorDgla MA = tensor_dgla(L, e.total);
    if (!mc_check(MB.dgla, x)) throw DomainError("obstruction needs a Maurer-Cartan element over the quotient");
    Element xt = lift ? *lift : lift_tensor(L, e, x);
    if (project_tensor(L, e, xt) != x) throw DomainError("supplied lift does not project to x");

    ObstructionResult res;
    res.h = mc_residual(MA.dgla, xt);

    std::vector<int> idx;
    std::map<int, int> pos;
    for (int l = 0; l < MA.l_dim; ++l)
        for (int k : e.kernel) {
            pos[MA.index(l, k)] = static_cast<int>(idx.size());
            idx.push_back(MA.index(l, k));
        }
    Complex LI = subcomplex(MA.dgla.complex(), idx);
    Element h_local;
    for (const auto& [i, c] : res.h.terms) {
        auto it = pos.find(i);
        if (it == pos.end()) throw DomainError("residual of the lift leaves L⊗I");
        h_local.add(it->second, c);
    }
    Cohomology H2(LI, 2);
    auto coords = H2.project(h_local);
    if (!coords) throw DomainError("obstruction cocycle is not closed");
    res.class_coords = *coords;
    for (const auto& r : H2.representatives()) {
        Element g;
        for (const auto& [i, c] : r.terms) g.add(idx[i], c);
        res.class_basis.push_back(std::move(g));
    }
    res.vanishes = true;
    for (const auto& c : res.class_coords)
        if (sgn(c) != 0) res.vanishes = false;
    if (res.vanishes) {
        auto z = H2.preimage(h_local);
        if (!z) throw DomainError("zero class without a primitive");
        Element lifted = xt;
        for (const auto& [i, c] : z->terms) lifted.add(idx[i], -c);
        if (!mc_check(MA.dgla, lifted)) throw DomainError("constructed lift is not Maurer-Cartan");
        res.mc_lift = std::move(lifted);
    }
    return res;
}

// signs: docs/signs.md S3
Cones cones(const SmallExtension& e) {
    Cones out;
    const auto& A = e.total;
    const auto& ab = A.basis();
    const int na = ab.size();

    std::vector<Symbol> syms = ab.symbols();
    std::map<int, int> shifted;
    for (int i : e.kernel) {
        shifted[i] = static_cast<int>(syms.size());
        syms.push_back({"s(" + ab.name(i) + ")", ab.degree(i) - 1});
    }
    std::vector<Element> d(A.d.begin(), A.d.end());
    for (int i : e.kernel) {
        Element v = Element::basis(i);
        for (const auto& [j, c] : A.d[i].terms) v.add(shifted.at(j), -c);
        d.push_back(std::move(v));
    }
    out.cone = make_artin(GradedBasis(std::move(syms)), A.alg.mult, std::move(d));
    out.cone_kernel = e.kernel;
    for (int i : e.kernel) out.cone_kernel.push_back(shifted.at(i));

    for (const auto& [key, v] : A.alg.mult)
        if (!e.project(v).is_zero()) {
            out.inverse_note = "B is not a complex: A^2 is not contained in I";
            return out;
        }
    const auto& qb = e.quotient.basis();
    std::vector<Symbol> dsyms = ab.symbols();
    for (int q = 0; q < qb.size(); ++q) dsyms.push_back({"u(" + qb.name(q) + ")", qb.degree(q) + 1});
    std::vector<Element> dd;
    for (int i = 0; i < na; ++i) {
        Element v = A.d[i];
        for (const auto& [q, c] : e.project(Element::basis(i)).terms) v.add(na + q, c);
        dd.push_back(std::move(v));
    }
    for (int q = 0; q < qb.size(); ++q) {
        Element v;
        for (const auto& [r, c] : e.quotient.d[q].terms) v.add(na + r, -c);
        dd.push_back(std::move(v));
    }
    out.inverse = make_artin(GradedBasis(std::move(dsyms)), A.alg.mult, std::move(dd));
    return out;
}

int rplus_index(const ArtinDg& A, int r, int j) { return r * (A.basis().size() + 1) + j; }

DerivationExp exp_derivation(const GradedAlgebra& R, const ArtinDg& A, const std::vector<Element>& d_values) {
    const auto& rb = R.basis;
    const auto& ab = A.basis();
    const int nr = rb.size(), np = ab.size() + 1;
    for (int k = 0; k < ab.size(); ++k)
        if (ab.degree(k) != 0) throw DomainError("exp of derivations needs A concentrated in degree 0");
    if (static_cast<int>(d_values.size()) != nr) throw InputError("derivation", "one value per basis vector of R");

    DerivationExp out;
    std::vector<Symbol> syms;
    for (int r = 0; r < nr; ++r)
        for (int j = 0; j < np; ++j)
            syms.push_back({j == 0 ? rb.name(r) : rb.name(r) + "⊗" + ab.name(j - 1), rb.degree(r)});
    out.space = GradedBasis(std::move(syms));

    auto mul = [&](const Element& x, const Element& y) {
        Element z;
        for (const auto& [p, c] : x.terms)
            for (const auto& [q, e] : y.terms) {
                int r1 = p / np, j1 = p % np, r2 = q / np, j2 = q % np;
                Element rr = R.mul_basis(r1, r2);
                if (rr.is_zero()) continue;
                Element aa;
                if (j1 == 0) aa = Element::basis(j2);
                else if (j2 == 0) aa = Element::basis(j1);
                else
                    for (const auto& [k, v] : A.alg.mul_basis(j1 - 1, j2 - 1).terms) aa.add(k + 1, v);
                for (const auto& [ri, rv] : rr.terms)
                    for (const auto& [ai, av] : aa.terms) z.add(ri * np + ai, c * e * rv * av);
            }
        return z;
    };

    for (int r = 0; r < nr; ++r) {
        for (const auto& [p, c] : d_values[r].terms)
            if (p % np == 0) throw DomainError("derivation values must lie in R⊗m_A");
        if (degree_of(out.space, d_values[r]).value_or(rb.degree(r)) != rb.degree(r))
            throw DomainError("derivation must have degree 0");
    }
    out.derivation.resize(nr * np);
    for (int r = 0; r < nr; ++r)
        for (int j = 0; j < np; ++j) out.derivation[r * np + j] = mul(d_values[r], Element::basis(j));

    for (int r = 0; r < nr; ++r)
        for (int s = 0; s < nr; ++s) {
            Element er = Element::basis(r * np), es = Element::basis(s * np);
            Element lhs = linear(out.derivation, mul(er, es));
            Element rhs = mul(d_values[r], es) + mul(er, d_values[s]);
            if (lhs != rhs)
                throw DomainError("not a derivation at (" + rb.name(r) + "," + rb.name(s) + ")");
        }

    auto exponentiate = [&](const Scalar& sign) {
        std::vector<Element> e(nr * np);
        for (int v = 0; v < nr * np; ++v) {
            Element term = Element::basis(v), sum = term;
            for (int n = 1; !term.is_zero(); ++n) {
                if (n > 64) throw BoundError("derivation is not nilpotent");
                term = linear(out.derivation, term);
                term *= sign / n;
                sum += term;
            }
            e[v] = std::move(sum);
        }
        return e;
    };
    out.exp = exponentiate(1);
    out.exp_inverse = exponentiate(-1);

    const auto& sp = out.space;
    for (int v = 0; v < nr * np; ++v)
        for (int w = 0; w < nr * np; ++w) {
            Element lhs = linear(out.exp, mul(Element::basis(v), Element::basis(w)));
            Element rhs = mul(out.exp[v], out.exp[w]);
            push_if(out.violations, sp, lhs - rhs, "multiplicative(" + sp.name(v) + "," + sp.name(w) + ")",
                    "e^d(xy) != e^d(x)e^d(y)");
        }
    for (int r = 0; r < nr; ++r) {
        Element diff = out.exp[r * np] - Element::basis(r * np);
        Element low;
        for (const auto& [p, c] : diff.terms)
            if (p % np == 0) low.add(p, c);
        push_if(out.violations, sp, low, "identity_mod_m(" + rb.name(r) + ")", "e^d is not the identity modulo m_A");
    }
    for (int v = 0; v < nr * np; ++v) {
        Element back = linear(out.exp_inverse, out.exp[v]) - Element::basis(v);
        push_if(out.violations, sp, back, "inverse(" + sp.name(v) + ")", "e^{-d} e^d != id");
    }
    return out;
}

PolyForm poly_mul(const ArtinDg& B, const PolyForm& x, const PolyForm& y) {
    PolyForm out;
    for (const auto& [p, c] : x)
        for (const auto& [q, e] : y) {
            if (p.e + q.e > 1) continue;
            Scalar s = c * e * sign_pow(p.e * B.basis().degree(q.b));
            for (const auto& [k, v] : B.alg.mul_basis(p.b, q.b).terms) {
                auto& slot = out[{k, p.k + q.k, p.e + q.e}];
                slot += s * v;
            }
        }
    for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    return out;
}

PolyForm poly_diff(const ArtinDg& B, const PolyForm& x) {
    PolyForm out;
    for (const auto& [p, c] : x) {
        for (const auto& [k, v] : B.d[p.b].terms) out[{k, p.k, p.e}] += c * v;
        if (p.e == 0 && p.k > 0) out[{p.b, p.k - 1, 1}] += c * p.k * sign_pow(B.basis().degree(p.b));
    }
    for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    return out;
}

HomotopyResult homotopy_eval(const ArtinDg& A, const ArtinDg& B, const std::vector<PolyForm>& H, const Scalar& s) {
    const auto& ab = A.basis();
    const auto& bb = B.basis();
    if (static_cast<int>(H.size()) != ab.size()) throw InputError("homotopy", "one image per basis vector of A");
    for (std::size_t i = 0; i < H.size(); ++i)
        for (const auto& [p, c] : H[i]) {
            std::string where = "homotopy/" + std::to_string(i);
            if (p.k < 0) throw InputError(where, "negative power of t");
            if (p.e != 0 && p.e != 1) throw InputError(where, "dt exponent must be 0 or 1");
            if (p.b < 0 || p.b >= bb.size()) throw InputError(where, "unknown target symbol");
            if (bb.degree(p.b) + p.e != ab.degree(static_cast<int>(i)))
                throw InputError(where, "H must preserve degrees");
        }
    auto apply = [&](const Element& x) {
        PolyForm out;
        for (const auto& [i, c] : x.terms)
            for (const auto& [p, v] : H[i]) out[p] += c * v;
        for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
        return out;
    };
    auto show = [&](const PolyForm& f) {
        std::string str;
        for (const auto& [p, c] : f) {
            if (!str.empty()) str += " + ";
            str += to_string(c) + "*" + bb.name(p.b) + "*t^" + std::to_string(p.k) + (p.e ? "*dt" : "");
        }
        return str.empty() ? std::string("0") : str;
    };
    HomotopyResult res;
    for (int i = 0; i < ab.size(); ++i)
        for (int j = 0; j < ab.size(); ++j) {
            PolyForm lhs = apply(A.alg.mul_basis(i, j));
            PolyForm rhs = poly_mul(B, H[i], H[j]);
            for (const auto& [p, c] : rhs) lhs[p] -= c;
            for (auto it = lhs.begin(); it != lhs.end();) it = sgn(it->second) == 0 ? lhs.erase(it) : std::next(it);
            if (!lhs.empty())
                res.violations.push_back({"multiplicative(" + ab.name(i) + "," + ab.name(j) + ")", show(lhs),
                                          "H(xy) != H(x)H(y)"});
        }
    for (int i = 0; i < ab.size(); ++i) {
        PolyForm lhs = apply(A.d[i]);
        for (const auto& [p, c] : poly_diff(B, H[i])) lhs[p] -= c;
        for (auto it = lhs.begin(); it != lhs.end();) it = sgn(it->second) == 0 ? lhs.erase(it) : std::next(it);
        if (!lhs.empty()) res.violations.push_back({"differential(" + ab.name(i) + ")", show(lhs), "H(dx) != dH(x)"});
    }
    for (int i = 0; i < ab.size(); ++i) {
        Element v;
        for (const auto& [p, c] : H[i]) {
            if (p.e != 0) continue;
            Scalar pw = 1;
            for (int k = 0; k < p.k; ++k) pw *= s;
            v.add(p.b, c * pw);
        }
        res.e_s.push_back(std::move(v));
    }
    return res;
}

}  // namespace defalg
