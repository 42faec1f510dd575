#include "defalg/freelie.hpp"

#include "defalg/linalg.hpp"

namespace defalg {

TensorSeries TensorSeries::one(int generators, int order) { return word(generators, order, {}, 1); }

TensorSeries TensorSeries::letter(int generators, int order, int g, Scalar c) {
    return word(generators, order, {g}, std::move(c));
}

TensorSeries TensorSeries::word(int generators, int order, const Word& w, Scalar c) {
    TensorSeries t(generators, order);
    t.add(w, c);
    return t;
}

Scalar TensorSeries::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void TensorSeries::add(const Word& w, const Scalar& c) {
    if (sgn(c) == 0 || static_cast<int>(w.size()) > order_) return;
    for (int g : w)
        if (g < 0 || g >= gens_) throw InputError("", "letter out of range");
    auto [it, fresh] = terms_.emplace(w, c);
    if (fresh) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

TensorSeries TensorSeries::part(int n) const {
    TensorSeries t(gens_, order_);
    for (const auto& [w, c] : terms_)
        if (static_cast<int>(w.size()) == n) t.terms_.emplace(w, c);
    return t;
}

TensorSeries TensorSeries::truncated(int order) const {
    TensorSeries t(gens_, order);
    for (const auto& [w, c] : terms_) t.add(w, c);
    return t;
}

TensorSeries& TensorSeries::operator+=(const TensorSeries& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

TensorSeries& TensorSeries::operator-=(const TensorSeries& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

TensorSeries& TensorSeries::operator*=(const Scalar& c) {
    if (sgn(c) == 0) terms_.clear();
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

TensorSeries operator*(const TensorSeries& a, const TensorSeries& b) {
    TensorSeries out(a.gens_, std::min(a.order_, b.order_));
    for (const auto& [u, x] : a.terms_)
        for (const auto& [v, y] : b.terms_) {
            if (static_cast<int>(u.size() + v.size()) > out.order_) continue;
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.add(w, x * y);
        }
    return out;
}

TensorSeries commutator(const TensorSeries& a, const TensorSeries& b) { return a * b - b * a; }

TensorSeries tensor_exp(const TensorSeries& x, int order) {
    if (sgn(x.constant()) != 0) throw DomainError("exp needs zero constant term");
    TensorSeries xs = x.truncated(order);
    TensorSeries term = TensorSeries::one(x.generators(), order);
    TensorSeries sum = term;
    for (int n = 1; n <= order; ++n) {
        term = term * xs;
        term *= Scalar(1, n);
        sum += term;
    }
    return sum;
}

TensorSeries tensor_log(const TensorSeries& y, int order) {
    if (y.constant() != 1) throw DomainError("log needs constant term 1");
    TensorSeries x = y.truncated(order) - TensorSeries::one(y.generators(), order);
    TensorSeries power = x;
    TensorSeries sum(y.generators(), order);
    for (int n = 1; n <= order; ++n) {
        sum += Scalar(n % 2 ? 1 : -1, n) * power;
        power = power * x;
    }
    return sum;
}

TensorSeries right_nested(const std::vector<TensorSeries>& xs) {
    if (xs.empty()) throw DomainError("empty bracket");
    TensorSeries acc = xs.back();
    for (int k = static_cast<int>(xs.size()) - 2; k >= 0; --k) acc = commutator(xs[k], acc);
    return acc;
}

TensorSeries dsw_project(const TensorSeries& x) {
    if (sgn(x.constant()) != 0) throw DomainError("DSW projection needs zero constant term");
    TensorSeries out(x.generators(), x.order());
    for (const auto& [w, c] : x.terms()) {
        std::vector<TensorSeries> letters;
        for (int g : w) letters.push_back(TensorSeries::letter(x.generators(), x.order(), g));
        out += (c / static_cast<long>(w.size())) * right_nested(letters);
    }
    return out;
}

bool is_lie(const TensorSeries& x) { return dsw_project(x) == x; }

TensorSeries bch_free(const TensorSeries& a, const TensorSeries& b, int order) {
    return dsw_project(tensor_log(tensor_exp(a, order) * tensor_exp(b, order), order));
}

namespace {

void decompose(const Word& w, std::size_t pos, int blocks, const Scalar& weight, Scalar& acc) {
    if (pos == w.size()) {
        acc += Scalar(blocks % 2 ? 1 : -1, blocks) * weight;
        return;
    }
    std::size_t run_a = 0;
    while (pos + run_a < w.size() && w[pos + run_a] == 0) ++run_a;
    for (std::size_t p = 0; p < run_a; ++p)
        if (p > 0) decompose(w, pos + p, blocks + 1, weight / factorial(static_cast<int>(p)), acc);
    std::size_t after = pos + run_a;
    std::size_t run_b = 0;
    while (after + run_b < w.size() && w[after + run_b] == 1) ++run_b;
    for (std::size_t q = 0; q <= run_b; ++q) {
        if (run_a + q == 0) continue;
        decompose(w, after + q, blocks + 1,
                  weight / (factorial(static_cast<int>(run_a)) * factorial(static_cast<int>(q))), acc);
    }
}

}  // namespace

std::map<Word, Scalar> bch_letter_coefficients(int max_len) {
    std::map<Word, Scalar> out;
    for (int m = 1; m <= max_len; ++m)
        for (int mask = 0; mask < (1 << m); ++mask) {
            Word w(m);
            for (int k = 0; k < m; ++k) w[k] = (mask >> (m - 1 - k)) & 1;
            Scalar c = 0;
            decompose(w, 0, 0, Scalar(1), c);
            c /= m;
            if (sgn(c) != 0) out.emplace(w, c);
        }
    return out;
}

// signs: docs/signs.md S6
TensorSeries bch_explicit(const TensorSeries& a, const TensorSeries& b, int order) {
    TensorSeries out(a.generators(), order);
    for (const auto& [w, c] : bch_letter_coefficients(order)) {
        std::vector<TensorSeries> xs;
        for (int l : w) xs.push_back((l == 0 ? a : b).truncated(order));
        out += c * right_nested(xs);
    }
    return out;
}

Element bch_series(const Element& a, const Element& b, const Bracket& bracket, int max_len) {
    Element out;
    // nested[w] = right-nested bracket of the letter word w, built from shorter suffixes
    std::map<Word, Element> nested{{{0}, a}, {{1}, b}};
    auto coeffs = bch_letter_coefficients(1);
    out.axpy(coeffs[{0}], a);
    out.axpy(coeffs[{1}], b);
    for (int m = 2;; ++m) {
        bool all_zero = true;
        for (const auto& [w, x] : nested)
            if (!x.is_zero()) all_zero = false;
        if (all_zero) return out;
        if (m > max_len) throw BoundError("BCH series did not terminate within the nilpotency bound");
        coeffs = bch_letter_coefficients(m);
        std::map<Word, Element> next;
        for (const auto& [w, x] : nested) {
            for (int l = 0; l < 2; ++l) {
                Word v{l};
                v.insert(v.end(), w.begin(), w.end());
                Element y = x.is_zero() ? Element() : bracket(l == 0 ? a : b, x);
                auto it = coeffs.find(v);
                if (it != coeffs.end()) out.axpy(it->second, y);
                next.emplace(std::move(v), std::move(y));
            }
        }
        nested = std::move(next);
    }
}

namespace {

std::vector<Scalar> dense(const Element& x, int dim) {
    std::vector<Scalar> v(dim);
    for (const auto& [i, c] : x.terms) v[i] = c;
    return v;
}

Element sparse(const std::vector<Scalar>& v) {
    Element x;
    for (int i = 0; i < static_cast<int>(v.size()); ++i) x.add(i, v[i]);
    return x;
}

}  // namespace

int lower_central_index(int dim, const std::function<Element(int, int)>& bracket_basis) {
    std::vector<Element> current;
    for (int i = 0; i < dim; ++i) current.push_back(Element::basis(i));
    int s = 1;
    while (!current.empty()) {
        std::vector<std::vector<Scalar>> gens;
        for (int i = 0; i < dim; ++i)
            for (const auto& v : current) {
                Element w;
                for (const auto& [j, c] : v.terms) w.axpy(c, bracket_basis(i, j));
                gens.push_back(dense(w, dim));
            }
        std::vector<Element> next;
        if (!gens.empty())
            for (int k : independent_subset(gens, dim)) next.push_back(sparse(gens[k]));
        if (next.size() == current.size()) throw BoundError("Lie algebra is not nilpotent");
        current = std::move(next);
        ++s;
    }
    return s;
}

NilpotentLie::NilpotentLie(GradedBasis basis, std::map<std::pair<int, int>, Element> table)
    : basis_(std::move(basis)), table_(std::move(table)) {
    const int n = basis_.size();
    for (int i = 0; i < n; ++i)
        if (basis_.degree(i) != 0) throw StructureError("nilpotent Lie basis must sit in degree 0");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (bracket_basis(i, j) + bracket_basis(j, i) != Element())
                throw StructureError("antisymmetry fails at (" + basis_.name(i) + "," + basis_.name(j) + ")");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Element ei = Element::basis(i), ej = Element::basis(j), ek = Element::basis(k);
                Element r = bracket(ei, bracket(ej, ek)) - bracket(bracket(ei, ej), ek) - bracket(ej, bracket(ei, ek));
                if (!r.is_zero())
                    throw StructureError("Jacobi fails at (" + basis_.name(i) + "," + basis_.name(j) + "," +
                                         basis_.name(k) + ")");
            }
    index_ = lower_central_index(n, [this](int i, int j) { return bracket_basis(i, j); });
}

Element NilpotentLie::bracket_basis(int i, int j) const {
    auto it = table_.find({i, j});
    if (it != table_.end()) return it->second;
    return Element();
}

Element NilpotentLie::bracket(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [i, a] : x.terms)
        for (const auto& [j, b] : y.terms) out.axpy(a * b, bracket_basis(i, j));
    return out;
}

Element NilpotentLie::bch(const Element& a, const Element& b) const {
    return bch_series(a, b, [this](const Element& x, const Element& y) { return bracket(x, y); }, index_);
}

}  // namespace defalg
