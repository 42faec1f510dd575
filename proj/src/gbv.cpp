#include "defalg/gbv.hpp"

#include <bit>
#include <sstream>

namespace defalg {

bool GBVStructure::admissible(const std::vector<int>& idx) const {
    if (!cap) return true;
    int w = 0;
    for (int i : idx) w += weight.empty() ? 0 : weight.at(i);
    return w <= *cap;
}

namespace {

long elem_degree(const GradedBasis& b, const Element& x) { return degree_of(b, x).value_or(0); }

std::string tuple_name(const GradedBasis& b, const std::vector<int>& idx) {
    std::string s = "(";
    for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + b.name(idx[k]);
    return s + ")";
}

void push_if(Violations& out, const GradedBasis& b, const Element& r, const std::string& loc, const std::string& msg) {
    if (!r.is_zero()) out.push_back({loc, format(b, r), msg});
}

/// Memoized bilinear operation on basis pairs.
class PairCache {
public:
    explicit PairCache(std::function<Element(int, int)> f) : f_(std::move(f)) {}
    const Element& at(int i, int j) {
        auto key = std::make_pair(i, j);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(key, f_(i, j)).first->second;
    }
    Element apply(const Element& x, const Element& y) {
        Element out;
        for (const auto& [i, a] : x.terms)
            for (const auto& [j, b] : y.terms) out.axpy(a * b, at(i, j));
        return out;
    }

private:
    std::function<Element(int, int)> f_;
    std::map<std::pair<int, int>, Element> cache_;
};

}  // namespace

Element derived_q(const GBVStructure& S, const Element& a, const Element& b) {
    long da = elem_degree(S.basis(), a);
    Element r = S.Delta(S.mul(a, b));
    r -= S.mul(S.Delta(a), b);
    r -= Scalar(sign_pow(da)) * S.mul(a, S.Delta(b));
    return r;
}

Violations gbv_check(const GBVStructure& S) {
    Violations out;
    const auto& B = S.basis();
    const int n = B.size();
    if (static_cast<int>(S.delta.size()) != n) throw DomainError("Δ must be given on every basis vector");
    for (int i = 0; i < n; ++i) {
        for (const auto& [k, c] : S.delta[i].terms)
            if (B.degree(k) != B.degree(i) + 1) {
                out.push_back({"degree(Δ" + B.name(i) + ")", format(B, S.delta[i]), "Δ must have degree +1"});
                break;
            }
        push_if(out, B, S.Delta(S.delta[i]), "Δ²(" + B.name(i) + ")", "Δ² != 0");
    }
    if (S.alg.unit) push_if(out, B, S.delta[*S.alg.unit], "Δ(1)", "Δ(1) != 0");

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!S.admissible({i, j})) continue;
            Element r = S.alg.mul_basis(i, j) - Scalar(sign_pow(B.degree(i) * B.degree(j))) * S.alg.mul_basis(j, i);
            push_if(out, B, r, "commutativity" + tuple_name(B, {i, j}), "ab != (-1)^{ab} ba");
            for (const auto& [k, c] : S.alg.mul_basis(i, j).terms)
                if (B.degree(k) != B.degree(i) + B.degree(j)) {
                    out.push_back({"degree" + tuple_name(B, {i, j}), format(B, S.alg.mul_basis(i, j)),
                                   "product must be homogeneous"});
                    break;
                }
        }

    PairCache q([&](int i, int j) { return derived_q(S, Element::basis(i), Element::basis(j)); });
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (!S.admissible({a, b, c})) continue;
                Element A = Element::basis(a), Bb = Element::basis(b), C = Element::basis(c);
                Element assoc = S.mul(S.mul(A, Bb), C) - S.mul(A, S.mul(Bb, C));
                push_if(out, B, assoc, "associativity" + tuple_name(B, {a, b, c}), "(ab)c != a(bc)");
                Element lhs = q.apply(A, S.alg.mul_basis(b, c));
                Element rhs = S.mul(q.at(a, b), C);
                rhs.axpy(sign_pow((B.degree(a) + 1) * B.degree(b)), S.mul(Bb, q.at(a, c)));
                push_if(out, B, lhs - rhs, "odd-poisson" + tuple_name(B, {a, b, c}),
                        "Q(a,bc) != Q(a,b)c + (-1)^{(a+1)b} bQ(a,c)");
            }
    return out;
}

Violations odd_poisson_from_generators(const GBVStructure& S, const std::vector<int>& generators) {
    const auto& B = S.basis();
    const int n = B.size();
    struct Factor {
        std::vector<int> word;
        Scalar c;
    };
    std::map<int, Factor> factor;
    // the unit is the empty product
    if (S.alg.unit) factor[*S.alg.unit] = {{}, 1};
    std::vector<std::pair<std::vector<int>, Element>> layer;
    for (std::size_t g = 0; g < generators.size(); ++g) layer.push_back({{static_cast<int>(g)}, Element::basis(generators[g])});
    for (int len = 1; !layer.empty() && static_cast<int>(factor.size()) < n && len <= n + 1; ++len) {
        std::vector<std::pair<std::vector<int>, Element>> next;
        for (const auto& [w, prod] : layer) {
            if (prod.terms.size() == 1) {
                auto [i, c] = *prod.terms.begin();
                if (!factor.count(i)) {
                    std::vector<int> gw;
                    for (int g : w) gw.push_back(generators[g]);
                    factor[i] = {gw, c};
                }
            }
            for (int g = w.back(); g < static_cast<int>(generators.size()); ++g) {
                Element p = S.mul(prod, Element::basis(generators[g]));
                if (p.is_zero()) continue;
                auto w2 = w;
                w2.push_back(g);
                next.push_back({w2, p});
            }
        }
        layer = std::move(next);
    }

    Violations out;
    for (int i = 0; i < n; ++i)
        if (!factor.count(i)) out.push_back({"generators(" + B.name(i) + ")", "", "not a product of generators"});
    if (!out.empty()) return out;

    auto product = [&](const std::vector<int>& w, std::size_t from) {
        Element p = Element::basis(w[from]);
        for (std::size_t k = from + 1; k < w.size(); ++k) p = S.mul(p, Element::basis(w[k]));
        return p;
    };
    auto wdeg = [&](const std::vector<int>& w, std::size_t from) {
        long d = 0;
        for (std::size_t k = from; k < w.size(); ++k) d += B.degree(w[k]);
        return d;
    };
    std::function<Element(const std::vector<int>&, const std::vector<int>&)> qext =
        [&](const std::vector<int>& u, const std::vector<int>& v) -> Element {
        if (u.empty() || v.empty()) return Element();
        if (v.size() > 1) {
            std::vector<int> rest(v.begin() + 1, v.end());
            Element r = S.mul(qext(u, {v[0]}), product(rest, 0));
            r.axpy(sign_pow((wdeg(u, 0) + 1) * B.degree(v[0])), S.mul(Element::basis(v[0]), qext(u, rest)));
            return r;
        }
        if (u.size() > 1) return Scalar(sign_pow(wdeg(u, 0) * wdeg(v, 0))) * qext(v, u);
        return derived_q(S, Element::basis(u[0]), Element::basis(v[0]));
    };

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!S.admissible({i, j})) continue;
            const auto& fi = factor[i];
            const auto& fj = factor[j];
            Element e = qext(fi.word, fj.word);
            e *= 1 / (fi.c * fj.c);
            Element r = e - derived_q(S, Element::basis(i), Element::basis(j));
            push_if(out, B, r, "generated-Q" + tuple_name(B, {i, j}), "Q is not the biderivation extension of its generator values");
        }
    return out;
}

// signs: docs/signs.md S9
Element gbv_bracket(const GBVStructure& S, const Element& a, const Element& b) {
    long da = elem_degree(S.basis(), a);
    Element r = S.mul(a, S.Delta(b));
    Element t = S.Delta(S.mul(a, b)) - S.mul(S.Delta(a), b);
    r.axpy(sign_pow(da + 1), t);
    return r;
}

DGLA gbv_dgla(const GBVStructure& S) {
    DGLA L;
    L.basis = S.basis().shifted(1);
    L.d = S.delta;
    const int n = S.basis().size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!S.admissible({i, j})) continue;
            Element v = gbv_bracket(S, Element::basis(i), Element::basis(j));
            if (!v.is_zero()) L.bracket[{i, j}] = std::move(v);
        }
    return L;
}

Violations dgla_verify(const GBVStructure& S) {
    Violations out;
    const auto& B = S.basis();
    const int n = B.size();
    auto sdeg = [&](int i) { return B.degree(i) + 1; };
    PairCache br([&](int i, int j) { return gbv_bracket(S, Element::basis(i), Element::basis(j)); });
    PairCache q([&](int i, int j) { return derived_q(S, Element::basis(i), Element::basis(j)); });

    for (int i = 0; i < n; ++i) push_if(out, B, S.Delta(S.delta[i]), "d2(" + B.name(i) + ")", "d² != 0");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!S.admissible({i, j})) continue;
            const Element& v = br.at(i, j);
            for (const auto& [k, c] : v.terms)
                if (B.degree(k) != B.degree(i) + B.degree(j) + 1) {
                    out.push_back({"degree" + tuple_name(B, {i, j}), format(B, v), "bracket must have degree 0 on G[-1]"});
                    break;
                }
            Element r = br.at(i, j) + Scalar(sign_pow(sdeg(i) * sdeg(j))) * br.at(j, i);
            push_if(out, B, r, "antisymmetry" + tuple_name(B, {i, j}), "[a,b] + (-1)^{|a||b|}[b,a] != 0");
            Element lz = S.Delta(br.at(i, j)) - br.apply(S.delta[i], Element::basis(j)) -
                         Scalar(sign_pow(sdeg(i))) * br.apply(Element::basis(i), S.delta[j]);
            push_if(out, B, lz, "leibniz" + tuple_name(B, {i, j}), "d[a,b] != [da,b] + (-1)^{|a|}[a,db]");
            Element lem = S.Delta(q.at(i, j)) + q.apply(S.delta[i], Element::basis(j)) +
                          Scalar(sign_pow(B.degree(i))) * q.apply(Element::basis(i), S.delta[j]);
            push_if(out, B, lem, "delta-q" + tuple_name(B, {i, j}), "ΔQ(a,b) + Q(Δa,b) + (-1)^a Q(a,Δb) != 0");
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (!S.admissible({a, b, c})) continue;
                Element A = Element::basis(a), Bb = Element::basis(b), C = Element::basis(c);
                Element r = br.apply(A, br.at(b, c)) - br.apply(br.at(a, b), C) -
                            Scalar(sign_pow(sdeg(a) * sdeg(b))) * br.apply(Bb, br.at(a, c));
                push_if(out, B, r, "jacobi" + tuple_name(B, {a, b, c}), "[a,[b,c]] != [[a,b],c] + (-1)^{|a||b|}[b,[a,c]]");
            }
    return out;
}

GBVStructure exterior_gbv(const Scalar& c1, const Scalar& c2, const Scalar& l1, const Scalar& l2) {
    GBVStructure S;
    S.alg.basis = GradedBasis({{"1", 0}, {"ξ1", -1}, {"ξ2", -1}, {"ξ1ξ2", -2}});
    S.alg.unit = 0;
    for (int i = 0; i < 4; ++i) {
        S.alg.mult[{0, i}] = Element::basis(i);
        S.alg.mult[{i, 0}] = Element::basis(i);
    }
    S.alg.mult[{1, 2}] = Element::basis(3);
    S.alg.mult[{2, 1}] = Element::basis(3, -1);
    S.delta.resize(4);
    S.delta[1] = Element::basis(0, c1);
    S.delta[2] = Element::basis(0, c2);
    S.delta[3] = Element::basis(1, l1) + Element::basis(2, l2);
    return S;
}

GBVStructure abelian_gbv_example() { return exterior_gbv(1, 0, 0, 1); }

int frame_size(Frame f) { return std::popcount(f); }

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

namespace {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) m[k] = a[k] + b[k];
    return m;
}

std::vector<int> frame_indices(Frame f) {
    std::vector<int> out;
    for (int j = 0; f >> j; ++j)
        if (f & (1u << j)) out.push_back(j);
    return out;
}

/// Sign of writing ∂_I ∧ ∂_H as ∂_{I∪H}; 0 if they overlap.
int merge_sign(Frame I, Frame H) {
    if (I & H) return 0;
    int inv = 0;
    for (int i : frame_indices(I)) inv += std::popcount(H & ((1u << i) - 1));
    return sign_pow(inv);
}

/// e_j ⊢ (e_{j1}∧…∧e_{jb}) for a single index.
std::optional<std::pair<Frame, int>> contract_one(int j, Frame J) {
    if (!(J & (1u << j))) return std::nullopt;
    int before = std::popcount(J & ((1u << j) - 1));
    return std::make_pair(J & ~(1u << j), sign_pow(before));
}

/// (e_{i1}∧…∧e_{ia}) ⊢ z applies e_{ia} first.
std::optional<std::pair<Frame, int>> contract_frame(Frame I, Frame J) {
    auto idx = frame_indices(I);
    int s = 1;
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
        auto r = contract_one(*it, J);
        if (!r) return std::nullopt;
        J = r->first;
        s *= r->second;
    }
    return std::make_pair(J, s);
}

Polyvector pair_op(const Polyvector& a, const Polyvector& b,
                   const std::function<void(Polyvector&, const PolyKey&, const Scalar&, const PolyKey&, const Scalar&)>& f) {
    Polyvector out{a.n, std::max(a.cap, b.cap), {}};
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) f(out, ka, ca, kb, cb);
    return out;
}

std::string mono_name(const Monomial& m) {
    std::string s;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k] == 0) continue;
        s += "z" + std::to_string(k + 1);
        if (m[k] > 1) s += "^" + std::to_string(m[k]);
    }
    return s;
}

std::string key_name(const PolyKey& k) {
    std::string s = mono_name(k.first);
    for (int j : frame_indices(k.second)) s += "∂" + std::to_string(j + 1);
    return s.empty() ? "1" : s;
}

}  // namespace

Polyvector Polyvector::term(int n, int cap, const Monomial& m, Frame f, const Scalar& c) {
    if (static_cast<int>(m.size()) != n) throw DomainError("monomial length must equal the variable count");
    if (monomial_degree(m) > cap) throw BoundError("coefficient degree exceeds the cap");
    Polyvector p{n, cap, {}};
    p.add({m, f}, c);
    return p;
}

void Polyvector::add(const PolyKey& k, const Scalar& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = terms.emplace(k, c);
    if (fresh) return;
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
}

std::optional<int> Polyvector::frame_degree() const {
    std::optional<int> d;
    for (const auto& [k, c] : terms) {
        int f = frame_size(k.second);
        if (d && *d != f) throw DomainError("polyvector of mixed degree");
        d = f;
    }
    return d;
}

int Polyvector::max_monomial_degree() const {
    int d = 0;
    for (const auto& [k, c] : terms) d = std::max(d, monomial_degree(k.first));
    return d;
}

Polyvector& Polyvector::operator+=(const Polyvector& o) {
    for (const auto& [k, c] : o.terms) add(k, c);
    return *this;
}

Polyvector& Polyvector::operator-=(const Polyvector& o) {
    for (const auto& [k, c] : o.terms) add(k, -c);
    return *this;
}

Polyvector operator*(const Scalar& c, Polyvector a) {
    if (sgn(c) == 0) {
        a.terms.clear();
        return a;
    }
    for (auto& [k, v] : a.terms) v *= c;
    return a;
}

Polyvector wedge(const Polyvector& a, const Polyvector& b) {
    return pair_op(a, b, [](Polyvector& out, const PolyKey& ka, const Scalar& ca, const PolyKey& kb, const Scalar& cb) {
        int s = merge_sign(ka.second, kb.second);
        if (s == 0) return;
        Monomial m = mono_mul(ka.first, kb.first);
        if (monomial_degree(m) > out.cap) throw BoundError("coefficient degree exceeds the cap");
        out.add({m, ka.second | kb.second}, s * ca * cb);
    });
}

// signs: docs/signs.md S10
Form contraction(const Polyvector& v, const Form& z) {
    return pair_op(v, z, [](Form& out, const PolyKey& kv, const Scalar& cv, const PolyKey& kz, const Scalar& cz) {
        auto r = contract_frame(kv.second, kz.second);
        if (!r) return;
        out.add({mono_mul(kv.first, kz.first), r->first}, r->second * cv * cz);
    });
}

Polyvector contraction_form(const Form& w, const Polyvector& v) { return contraction(w, v); }

Polyvector partial(const Polyvector& a, int j) {
    Polyvector out{a.n, a.cap, {}};
    for (const auto& [k, c] : a.terms) {
        if (k.first[j] == 0) continue;
        Monomial m = k.first;
        m[j] -= 1;
        out.add({m, k.second}, c * k.first[j]);
    }
    return out;
}

Form del_form(const Form& z) {
    Form out{z.n, z.cap, {}};
    for (int j = 0; j < z.n; ++j) {
        Form dj = partial(z, j);
        for (const auto& [k, c] : dj.terms) {
            int s = merge_sign(1u << j, k.second);
            if (s == 0) continue;
            out.add({k.first, k.second | (1u << j)}, s * c);
        }
    }
    return out;
}

Form volume_form(int n, int cap) {
    Form o{n, cap, {}};
    o.add({Monomial(n, 0), (1u << n) - 1}, sign_pow(static_cast<long>(n) * (n - 1) / 2));
    return o;
}

Polyvector delta_volume(const Polyvector& a) {
    const int n = a.n;
    Form omega = volume_form(n, a.cap);
    Form y = del_form(contraction(a, omega));
    Polyvector out{n, a.cap, {}};
    const Frame full = (1u << n) - 1;
    for (const auto& [k, c] : y.terms) {
        Frame K = full & ~k.second;
        Form img = contraction(Polyvector::term(n, a.cap, Monomial(n, 0), K), omega);
        const Scalar& s = img.terms.begin()->second;
        out.add({k.first, K}, c / s);
    }
    return out;
}

Polyvector delta_coordinates(const Polyvector& a) {
    Polyvector out{a.n, a.cap, {}};
    for (int j = 0; j < a.n; ++j) {
        Polyvector dj = partial(a, j);
        for (const auto& [k, c] : dj.terms) {
            auto r = contract_one(j, k.second);
            if (r) out.add({k.first, r->first}, r->second * c);
        }
    }
    return out;
}

namespace {

/// Σ_j ∂_j g (dz_j ⊢ ∂_I) for a function g (frame 0 terms) and a frame I.
Polyvector dg_contract(const Polyvector& g, Frame I, int n, int cap) {
    Polyvector out{n, cap, {}};
    for (int j = 0; j < n; ++j) {
        auto r = contract_one(j, I);
        if (!r) continue;
        for (const auto& [k, c] : partial(g, j).terms) out.add({k.first, r->first}, r->second * c);
    }
    return out;
}

}  // namespace

// signs: docs/signs.md S9
Polyvector schouten(const Polyvector& a, const Polyvector& b) {
    const int n = a.n;
    const int cap = std::max(a.cap, b.cap);
    Polyvector out{n, cap, {}};
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            Polyvector f = Polyvector::term(n, cap, ka.first, 0, ca);
            Polyvector g = Polyvector::term(n, cap, kb.first, 0, cb);
            Polyvector dI = Polyvector::term(n, cap, Monomial(n, 0), ka.second);
            Polyvector dH = Polyvector::term(n, cap, Monomial(n, 0), kb.second);
            int sI = sign_pow(frame_size(ka.second) - 1);
            Polyvector t1 = wedge(wedge(f, dg_contract(g, ka.second, n, cap)), dH);
            Polyvector t2 = wedge(wedge(g, dI), dg_contract(f, kb.second, n, cap));
            out += Scalar(sI) * t1;
            out -= t2;
        }
    return out;
}

Violations tian_todorov_check(const Polyvector& a, const Polyvector& b) {
    Violations out;
    auto fa = a.frame_degree();
    if (!fa) return out;
    long ap = 1 - *fa;
    Polyvector lhs = Scalar(sign_pow(ap)) * schouten(a, b);
    Polyvector rhs = delta_volume(wedge(a, b)) - wedge(delta_volume(a), b) -
                     Scalar(sign_pow(ap - 1)) * wedge(a, delta_volume(b));
    Polyvector r = lhs - rhs;
    if (!r.is_zero())
        out.push_back({"tian-todorov(" + format(a) + "," + format(b) + ")", format(r),
                       "(-1)^a[a,b] != Δ(ab) - Δ(a)b - (-1)^{a-1}aΔ(b)"});
    return out;
}

std::vector<PolyKey> polyvector_basis(int n, int cap) {
    std::vector<Monomial> monos;
    Monomial m(n, 0);
    std::function<void(int, int)> rec = [&](int k, int left) {
        if (k == n) {
            monos.push_back(m);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            m[k] = e;
            rec(k + 1, left - e);
        }
        m[k] = 0;
    };
    rec(0, cap);
    std::stable_sort(monos.begin(), monos.end(),
                     [](const Monomial& x, const Monomial& y) { return monomial_degree(x) < monomial_degree(y); });
    std::vector<PolyKey> out;
    for (const auto& mono : monos)
        for (Frame f = 0; f < (1u << n); ++f) out.push_back({mono, f});
    return out;
}

GBVStructure polyvector_gbv(int n, int cap) {
    auto keys = polyvector_basis(n, cap);
    std::vector<Symbol> syms;
    std::map<PolyKey, int> index;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        syms.push_back({key_name(keys[i]), -static_cast<long>(frame_size(keys[i].second))});
        index[keys[i]] = static_cast<int>(i);
    }
    GBVStructure S;
    S.alg.basis = GradedBasis(syms);
    S.cap = cap;
    const int N = static_cast<int>(keys.size());
    auto to_elem = [&](const Polyvector& p) {
        Element e;
        for (const auto& [k, c] : p.terms) e.add(index.at(k), c);
        return e;
    };
    for (int i = 0; i < N; ++i) {
        S.weight.push_back(monomial_degree(keys[i].first));
        if (keys[i].second == 0 && monomial_degree(keys[i].first) == 0) S.alg.unit = i;
    }
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (S.weight[i] + S.weight[j] > cap) continue;
            Polyvector p = wedge(Polyvector::term(n, cap, keys[i].first, keys[i].second),
                                 Polyvector::term(n, cap, keys[j].first, keys[j].second));
            if (!p.is_zero()) S.alg.mult[{i, j}] = to_elem(p);
        }
    for (int i = 0; i < N; ++i)
        S.delta.push_back(to_elem(delta_volume(Polyvector::term(n, cap, keys[i].first, keys[i].second))));
    return S;
}

Element to_element(const GBVStructure& S, const Polyvector& p) {
    Element e;
    for (const auto& [k, c] : p.terms) e.add(S.basis().index(key_name(k)), c);
    return e;
}

std::string format(const Polyvector& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : p.terms) {
        if (!first) os << " + ";
        os << to_string(c) << "*" << key_name(k);
        first = false;
    }
    return os.str();
}

AbelianResult gbv_to_abelian(const GBVStructure& S, int m_max) {
    const auto& G = S.basis();
    const int n = G.size();
    AbelianResult R;
    R.source = zero_structure(G.shifted(1), m_max);
    R.target = zero_structure(G.shifted(1), m_max);
    for (int i = 0; i < n; ++i)
        if (!S.delta[i].is_zero()) {
            R.source.q.q[1][{i}] = S.delta[i];
            R.target.q.q[1][{i}] = S.delta[i];
        }
    for (const auto& w : sym_words(G, 2)) {
        if (!S.admissible(w)) continue;
        Element v = derived_q(S, Element::basis(w[0]), Element::basis(w[1]));
        if (!v.is_zero()) R.source.q.q[2][w] = v;
    }
    Components f{G, G, 0, {}}, g{G, G, 0, {}}, h{G, G, 0, {}};
    for (const auto& w : sym_words_upto(G, m_max)) {
        if (!S.admissible(w)) continue;
        Element p = Element::basis(w[0]);
        for (std::size_t k = 1; k < w.size(); ++k) p = S.mul(p, Element::basis(w[k]));
        if (p.is_zero()) continue;
        int m = static_cast<int>(w.size());
        f.q[m][w] = p;
        g.q[m][w] = Scalar(sign_pow(m - 1)) * factorial(m - 1) * p;
        h.q[m][w] = Scalar(sign_pow(m - 1)) * p;
    }
    R.morphism = LInftyMorphism{R.source, R.target, f, m_max};
    R.inverse = LInftyMorphism{R.target, R.source, g, m_max};
    R.signed_inverse = LInftyMorphism{R.target, R.source, h, m_max};
    auto filter = [&S](const SymWord& w) { return S.admissible(w); };
    R.violations = morphism_check(R.morphism, m_max, filter);
    for (auto& v : morphism_check(R.inverse, m_max, filter)) {
        v.location = "inverse-" + v.location;
        R.violations.push_back(v);
    }
    CoalgMorphism F = R.morphism.coalgebra_map(), Fi = R.inverse.coalgebra_map(), Fs = R.signed_inverse.coalgebra_map();
    for (const auto& w : sym_words_upto(G, m_max)) {
        if (!S.admissible(w)) continue;
        SymVec r = compose(F, Fi, w);
        accumulate(r, w, Scalar(-1));
        if (!r.empty()) R.violations.push_back({"inverse" + tuple_name(G, w), format(G, r), "F∘F^{-1} != id"});
        if (w.size() > 3) continue;
        SymVec t = compose(F, Fs, w);
        accumulate(t, w, Scalar(-1));
        if (!t.empty())
            R.signed_inverse_violations.push_back({"signed-inverse" + tuple_name(G, w), format(G, t), "F∘F* != id"});
    }
    return R;
}

}  // namespace defalg
