#include "defalg/coalg.hpp"

#include <numeric>
#include <sstream>

namespace defalg {

long word_degree(const GradedBasis& basis, const std::vector<int>& w) {
    long d = 0;
    for (int i : w) d += basis.degree(i);
    return d;
}

std::vector<SymWord> sym_words(const GradedBasis& basis, int n) {
    std::vector<SymWord> out;
    SymWord w;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(w.size()) == n) {
            out.push_back(w);
            return;
        }
        for (int i = start; i < basis.size(); ++i) {
            if (!w.empty() && w.back() == i && odd(basis.degree(i))) continue;
            w.push_back(i);
            rec(i);
            w.pop_back();
        }
    };
    if (n >= 1) rec(0);
    return out;
}

std::vector<SymWord> sym_words_upto(const GradedBasis& basis, int n) {
    std::vector<SymWord> out;
    for (int k = 1; k <= n; ++k) {
        auto ws = sym_words(basis, k);
        out.insert(out.end(), ws.begin(), ws.end());
    }
    return out;
}

void add_word(const GradedBasis& basis, SymVec& out, const std::vector<int>& word, const Scalar& c) {
    auto cw = sym_canonical(basis, word);
    if (!cw) return;
    accumulate(out, cw->word, cw->sign * c);
}

SymVec sym_product(const GradedBasis& basis, const std::vector<Element>& xs) {
    SymVec out;
    std::vector<int> word(xs.size());
    std::function<void(std::size_t, const Scalar&)> rec = [&](std::size_t k, const Scalar& c) {
        if (k == xs.size()) {
            add_word(basis, out, word, c);
            return;
        }
        for (const auto& [i, v] : xs[k].terms) {
            word[k] = i;
            rec(k + 1, c * v);
        }
    };
    rec(0, Scalar(1));
    return out;
}

SymVec sym_product(const GradedBasis& basis, const SymVec& x, const SymVec& y) {
    SymVec out;
    for (const auto& [u, a] : x)
        for (const auto& [v, b] : y) {
            std::vector<int> w = u;
            w.insert(w.end(), v.begin(), v.end());
            add_word(basis, out, w, a * b);
        }
    return out;
}

SymVec arity_part(const SymVec& x, int n) {
    SymVec out;
    for (const auto& [w, c] : x)
        if (static_cast<int>(w.size()) == n) out.emplace(w, c);
    return out;
}

Element linear_part(const SymVec& x) {
    Element e;
    for (const auto& [w, c] : x)
        if (w.size() == 1) e.add(w[0], c);
    return e;
}

std::string format(const GradedBasis& basis, const SymVec& x) {
    if (x.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : x) {
        if (!first) os << " + ";
        os << to_string(c) << "*";
        for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "⊙" : "") << basis.name(w[k]);
        first = false;
    }
    return os.str();
}

namespace {

std::vector<long> degrees_of(const GradedBasis& basis, const std::vector<int>& w) {
    std::vector<long> d;
    for (int i : w) d.push_back(basis.degree(i));
    return d;
}

}  // namespace

SymPairVec coproduct(const GradedBasis& basis, const SymWord& w) {
    SymPairVec out;
    const int n = static_cast<int>(w.size());
    auto degs = degrees_of(basis, w);
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<int> im;
        SymWord left, right;
        for (int k = 0; k < n; ++k)
            if (mask & (1u << k)) {
                im.push_back(k + 1);
                left.push_back(w[k]);
            }
        for (int k = 0; k < n; ++k)
            if (!(mask & (1u << k))) {
                im.push_back(k + 1);
                right.push_back(w[k]);
            }
        accumulate(out, std::make_pair(left, right), Scalar(koszul_sign(degs, Permutation(im))));
    }
    return out;
}

SymPairVec coproduct(const GradedBasis& basis, const SymVec& x) {
    SymPairVec out;
    for (const auto& [w, c] : x)
        for (const auto& [k, v] : coproduct(basis, w)) accumulate(out, k, c * v);
    return out;
}

std::map<std::vector<SymWord>, Scalar> coproduct_left_twice(const GradedBasis& basis, const SymWord& w) {
    std::map<std::vector<SymWord>, Scalar> out;
    for (const auto& [xy, c] : coproduct(basis, w))
        for (const auto& [ab, e] : coproduct(basis, xy.first))
            accumulate(out, std::vector<SymWord>{ab.first, ab.second, xy.second}, c * e);
    return out;
}

std::map<std::vector<SymWord>, Scalar> coproduct_right_twice(const GradedBasis& basis, const SymWord& w) {
    std::map<std::vector<SymWord>, Scalar> out;
    for (const auto& [xy, c] : coproduct(basis, w))
        for (const auto& [ab, e] : coproduct(basis, xy.second))
            accumulate(out, std::vector<SymWord>{xy.first, ab.first, ab.second}, c * e);
    return out;
}

SymPairVec twist(const GradedBasis& basis, const SymPairVec& x) {
    SymPairVec out;
    for (const auto& [xy, c] : x) {
        long s = word_degree(basis, xy.first) * word_degree(basis, xy.second);
        accumulate(out, std::make_pair(xy.second, xy.first), c * sign_pow(s));
    }
    return out;
}

TensorVec n_map(const GradedBasis& basis, const SymWord& w) {
    TensorVec out;
    auto degs = degrees_of(basis, w);
    for (const auto& sigma : all_permutations(static_cast<int>(w.size()))) {
        std::vector<int> t;
        for (int k = 1; k <= sigma.size(); ++k) t.push_back(w[sigma(k) - 1]);
        accumulate(out, t, Scalar(koszul_sign(degs, sigma)));
    }
    return out;
}

TensorPairVec deconcatenate(const TensorVec& x) {
    TensorPairVec out;
    for (const auto& [w, c] : x)
        for (std::size_t a = 1; a < w.size(); ++a)
            accumulate(out, std::make_pair(std::vector<int>(w.begin(), w.begin() + static_cast<long>(a)),
                                           std::vector<int>(w.begin() + static_cast<long>(a), w.end())),
                       c);
    return out;
}

TensorPairVec n_tensor_n(const GradedBasis& basis, const SymPairVec& x) {
    TensorPairVec out;
    for (const auto& [xy, c] : x)
        for (const auto& [u, a] : n_map(basis, xy.first))
            for (const auto& [v, b] : n_map(basis, xy.second)) accumulate(out, std::make_pair(u, v), c * a * b);
    return out;
}

int Components::max_arity() const {
    int k = 0;
    for (const auto& [a, t] : q)
        if (!t.empty()) k = std::max(k, a);
    return k;
}

Element Components::eval(const std::vector<int>& word) const {
    auto it = q.find(static_cast<int>(word.size()));
    if (it == q.end()) return Element();
    auto cw = sym_canonical(source, word);
    if (!cw) return Element();
    auto jt = it->second.find(cw->word);
    if (jt == it->second.end()) return Element();
    Element v = jt->second;
    v *= Scalar(cw->sign);
    return v;
}

Element Components::eval(const SymVec& x) const {
    Element out;
    for (const auto& [w, c] : x) out.axpy(c, eval(w));
    return out;
}

Violations check_component_degrees(const Components& c) {
    Violations out;
    for (const auto& [k, table] : c.q)
        for (const auto& [w, v] : table) {
            long want = word_degree(c.source, w) + c.degree;
            for (const auto& [i, x] : v.terms)
                if (c.target.degree(i) != want) {
                    std::string loc = "q" + std::to_string(k) + "(";
                    for (std::size_t j = 0; j < w.size(); ++j) loc += (j ? "," : "") + c.source.name(w[j]);
                    out.push_back({loc + ")", format(c.target, v), "component value must have degree " + std::to_string(want)});
                    break;
                }
        }
    return out;
}

Coderivation::Coderivation(Components q, int truncation) : q_(std::move(q)), n_(truncation) {
    if (!(q_.source == q_.target)) throw DomainError("coderivation components must map into the same space");
    auto bad = check_component_degrees(q_);
    if (!bad.empty()) throw DomainError("inhomogeneous coderivation component at " + bad.front().location);
}

SymVec Coderivation::apply(const SymWord& w) const {
    SymVec out;
    const auto& b = q_.source;
    const int n = static_cast<int>(w.size());
    auto degs = degrees_of(b, w);
    for (const auto& [k, table] : q_.q) {
        if (k < 1 || k > n || table.empty()) continue;
        for (const auto& sigma : unshuffles(k, n - k)) {
            std::vector<int> head, rest;
            for (int j = 1; j <= k; ++j) head.push_back(w[sigma(j) - 1]);
            for (int j = k + 1; j <= n; ++j) rest.push_back(w[sigma(j) - 1]);
            Element v = q_.eval(head);
            if (v.is_zero()) continue;
            int eps = koszul_sign(degs, sigma);
            for (const auto& [i, c] : v.terms) {
                std::vector<int> word{i};
                word.insert(word.end(), rest.begin(), rest.end());
                add_word(b, out, word, eps * c);
            }
        }
    }
    return out;
}

SymVec Coderivation::apply(const SymVec& x) const {
    SymVec out;
    for (const auto& [w, c] : x)
        for (const auto& [u, v] : apply(w)) accumulate(out, u, c * v);
    return out;
}

namespace {

SymPairVec tensor_apply_left(const GradedBasis& b, const std::function<SymVec(const SymWord&)>& f, const SymPairVec& x) {
    SymPairVec out;
    for (const auto& [xy, c] : x)
        for (const auto& [u, v] : f(xy.first)) accumulate(out, std::make_pair(u, xy.second), c * v);
    (void)b;
    return out;
}

SymPairVec tensor_apply_right(const GradedBasis& b, long deg, const std::function<SymVec(const SymWord&)>& f,
                              const SymPairVec& x) {
    SymPairVec out;
    for (const auto& [xy, c] : x) {
        int s = sign_pow(deg * word_degree(b, xy.first));
        for (const auto& [u, v] : f(xy.second)) accumulate(out, std::make_pair(xy.first, u), c * v * s);
    }
    return out;
}

std::string word_name(const GradedBasis& b, const SymWord& w) {
    std::string s = "(";
    for (std::size_t j = 0; j < w.size(); ++j) s += (j ? "," : "") + b.name(w[j]);
    return s + ")";
}

std::string pair_format(const GradedBasis& b, const SymPairVec& x) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [xy, c] : x) {
        if (!first) os << " + ";
        os << to_string(c) << "*" << word_name(b, xy.first) << "⊗" << word_name(b, xy.second);
        first = false;
    }
    return first ? "0" : os.str();
}

}  // namespace

Violations check_coleibniz(const Coderivation& Q, int n) {
    Violations out;
    const auto& b = Q.basis();
    auto f = [&Q](const SymWord& w) { return Q.apply(w); };
    for (const auto& w : sym_words_upto(b, n)) {
        SymPairVec lhs = coproduct(b, Q.apply(w));
        SymPairVec cw = coproduct(b, w);
        SymPairVec rhs = tensor_apply_left(b, f, cw);
        for (const auto& [k, v] : tensor_apply_right(b, Q.degree(), f, cw)) accumulate(rhs, k, v);
        for (const auto& [k, v] : rhs) accumulate(lhs, k, -v);
        if (!lhs.empty()) out.push_back({"coleibniz" + word_name(b, w), pair_format(b, lhs), "ΔQ != (Q⊗Id + Id⊗Q)Δ"});
    }
    return out;
}

Components corestriction(const GradedBasis& basis, long degree, int n,
                         const std::function<SymVec(const SymWord&)>& op) {
    Components c{basis, basis, degree, {}};
    for (int k = 1; k <= n; ++k)
        for (const auto& w : sym_words(basis, k)) {
            Element v = linear_part(op(w));
            if (!v.is_zero()) c.q[k][w] = std::move(v);
        }
    return c;
}

Coderivation coder_bracket(const Coderivation& Q, const Coderivation& R) {
    int n = std::min(Q.truncation(), R.truncation());
    long s = sign_pow(Q.degree() * R.degree());
    auto op = [&](const SymWord& w) {
        SymVec out = Q.apply(R.apply(w));
        for (const auto& [u, v] : R.apply(Q.apply(w))) accumulate(out, u, -s * v);
        return out;
    };
    return Coderivation(corestriction(Q.basis(), Q.degree() + R.degree(), n, op), n);
}

CoalgMorphism::CoalgMorphism(Components f, int truncation) : f_(std::move(f)), n_(truncation) {
    if (f_.degree != 0) throw DomainError("coalgebra morphism components must have degree 0");
    auto bad = check_component_degrees(f_);
    if (!bad.empty()) throw DomainError("morphism component of wrong degree at " + bad.front().location);
}

namespace {

/// Restricted growth strings: block[k] = index of the block containing position k.
void set_partitions(int n, const std::function<void(const std::vector<int>&, int)>& visit) {
    std::vector<int> block(n, 0);
    std::function<void(int, int)> rec = [&](int k, int used) {
        if (k == n) {
            visit(block, used);
            return;
        }
        for (int b = 0; b <= used; ++b) {
            block[k] = b;
            rec(k + 1, std::max(used, b + 1));
        }
    };
    if (n > 0) rec(0, 0);
}

}  // namespace

SymVec CoalgMorphism::apply(const SymWord& w) const {
    SymVec out;
    const int n = static_cast<int>(w.size());
    auto degs = degrees_of(f_.source, w);
    set_partitions(n, [&](const std::vector<int>& block, int count) {
        std::vector<int> im;
        std::vector<Element> values;
        for (int b = 0; b < count; ++b) {
            std::vector<int> part;
            for (int k = 0; k < n; ++k)
                if (block[k] == b) {
                    im.push_back(k + 1);
                    part.push_back(w[k]);
                }
            values.push_back(f_.eval(part));
            if (values.back().is_zero()) return;
        }
        int eps = koszul_sign(degs, Permutation(im));
        for (const auto& [u, v] : sym_product(f_.target, values)) accumulate(out, u, eps * v);
    });
    return out;
}

SymVec CoalgMorphism::apply(const SymVec& x) const {
    SymVec out;
    for (const auto& [w, c] : x)
        for (const auto& [u, v] : apply(w)) accumulate(out, u, c * v);
    return out;
}

SymVec CoalgMorphism::component(int i, const SymWord& w) const { return arity_part(apply(w), i); }

SymVec morphism_exp_form(const Components& f, const SymWord& w) {
    const auto& b = f.source;
    SymVec out;
    std::map<std::vector<SymWord>, Scalar> tuples{{{w}, Scalar(1)}};
    for (int n = 1; n <= static_cast<int>(w.size()); ++n) {
        Scalar inv = 1 / factorial(n);
        for (const auto& [t, c] : tuples) {
            std::vector<Element> values;
            for (const auto& part : t) values.push_back(f.eval(part));
            for (const auto& [u, v] : sym_product(f.target, values)) accumulate(out, u, inv * c * v);
        }
        std::map<std::vector<SymWord>, Scalar> next;
        for (const auto& [t, c] : tuples)
            for (const auto& [xy, e] : coproduct(b, t.back())) {
                auto u = t;
                u.back() = xy.first;
                u.push_back(xy.second);
                accumulate(next, u, c * e);
            }
        tuples = std::move(next);
    }
    return out;
}

Violations check_comorphism(const CoalgMorphism& F, int n) {
    Violations out;
    const auto& src = F.components().source;
    const auto& tgt = F.components().target;
    for (const auto& w : sym_words_upto(src, n)) {
        SymPairVec lhs = coproduct(tgt, F.apply(w));
        for (const auto& [xy, c] : coproduct(src, w)) {
            SymVec a = F.apply(xy.first), b = F.apply(xy.second);
            for (const auto& [u, x] : a)
                for (const auto& [v, y] : b) accumulate(lhs, std::make_pair(u, v), -c * x * y);
        }
        if (!lhs.empty())
            out.push_back({"comorphism" + word_name(src, w), pair_format(tgt, lhs), "ΔF != (F⊗F)Δ"});
    }
    return out;
}

SymVec compose(const CoalgMorphism& G, const CoalgMorphism& F, const SymWord& w) { return G.apply(F.apply(w)); }

}  // namespace defalg
