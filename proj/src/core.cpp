#include "defalg/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace defalg {

Scalar parse_scalar(const std::string& text, const std::string& path) {
    auto bad = [&](const std::string& why) { return InputError(path, "invalid rational \"" + text + "\": " + why); };
    if (text.empty()) throw bad("empty");
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    auto digits = [](const std::string& s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!digits(num, true) || !digits(den, false)) throw bad("expected p or p/q");
    if (num[0] == '+') num = num.substr(1);
    mpz_class n(num), d(den);
    if (d == 0) throw bad("zero denominator");
    Scalar q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Scalar& q) { return q.get_str(); }

Scalar factorial(int n) {
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Scalar(f);
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

GaussianScalar GaussianScalar::i_pow(long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

GaussianScalar GaussianScalar::inverse() const {
    Scalar n = re * re + im * im;
    if (sgn(n) == 0) throw DomainError("division by zero Gaussian rational");
    return {re / n, -im / n};
}

GaussianScalar& GaussianScalar::operator+=(const GaussianScalar& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussianScalar& GaussianScalar::operator-=(const GaussianScalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussianScalar& GaussianScalar::operator*=(const GaussianScalar& o) {
    Scalar r = re * o.re - im * o.im;
    Scalar i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
}

std::string to_string(const GaussianScalar& z) {
    if (sgn(z.im) == 0) return to_string(z.re);
    if (sgn(z.re) == 0) return to_string(z.im) + "i";
    std::string im = to_string(z.im);
    return to_string(z.re) + (im[0] == '-' ? "" : "+") + im + "i";
}

GradedBasis::GradedBasis(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    for (int i = 0; i < size(); ++i) {
        auto [it, fresh] = lookup_.emplace(symbols_[i].name, i);
        if (!fresh) throw InputError("basis/" + std::to_string(i) + "/name", "duplicate symbol " + symbols_[i].name);
    }
}

std::optional<int> GradedBasis::find(const std::string& name) const {
    auto it = lookup_.find(name);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

int GradedBasis::index(const std::string& name) const {
    auto i = find(name);
    if (!i) throw InputError("", "unknown symbol " + name);
    return *i;
}

std::vector<int> GradedBasis::of_degree(long d) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (symbols_[i].degree == d) out.push_back(i);
    return out;
}

// signs: docs/signs.md S3
GradedBasis GradedBasis::shifted(long by) const {
    auto s = symbols_;
    for (auto& x : s) x.degree += by;
    return GradedBasis(std::move(s));
}

bool operator==(const GradedBasis& a, const GradedBasis& b) {
    if (a.size() != b.size()) return false;
    for (int i = 0; i < a.size(); ++i)
        if (a[i].name != b[i].name || a[i].degree != b[i].degree) return false;
    return true;
}

Element Element::basis(int i, Scalar c) {
    Element e;
    e.add(i, c);
    return e;
}

Scalar Element::coeff(int i) const {
    auto it = terms.find(i);
    return it == terms.end() ? Scalar(0) : it->second;
}

void Element::add(int i, const Scalar& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = terms.emplace(i, c);
    if (fresh) return;
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
}

void Element::axpy(const Scalar& c, const Element& x) {
    if (sgn(c) == 0) return;
    for (const auto& [i, v] : x.terms) add(i, c * v);
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [i, v] : o.terms) add(i, v);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [i, v] : o.terms) add(i, -v);
    return *this;
}

Element& Element::operator*=(const Scalar& c) {
    if (sgn(c) == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [i, v] : terms) v *= c;
    return *this;
}

std::optional<long> degree_of(const GradedBasis& basis, const Element& x) {
    std::optional<long> d;
    for (const auto& [i, v] : x.terms) {
        long e = basis.degree(i);
        if (d && *d != e) throw DomainError("element is not homogeneous");
        d = e;
    }
    return d;
}

std::string format(const GradedBasis& basis, const Element& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, v] : x.terms) {
        std::string c = to_string(v);
        if (!first) os << (c[0] == '-' ? " - " : " + ");
        else if (c[0] == '-') os << "-";
        if (c[0] == '-') c = c.substr(1);
        if (c != "1") os << c << "*";
        os << basis.name(i);
        first = false;
    }
    return os.str();
}

Permutation::Permutation(std::vector<int> im) : images(std::move(im)) {
    std::vector<bool> seen(images.size() + 1, false);
    for (int v : images) {
        if (v < 1 || v > size() || seen[v]) throw InputError("", "not a permutation");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images.size());
    for (int i = 0; i < size(); ++i) inv[images[i] - 1] = i + 1;
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
    std::vector<int> im(images.size());
    for (int i = 0; i < size(); ++i) im[i] = images[other.images[i] - 1];
    return Permutation(std::move(im));
}

bool Permutation::is_unshuffle(int p) const {
    for (int i = 1; i < size(); ++i)
        if (i != p && images[i - 1] > images[i]) return false;
    return true;
}

int Permutation::parity() const {
    int s = 1;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (images[i] > images[j]) s = -s;
    return s;
}

// signs: docs/signs.md S1
int koszul_sign(const std::vector<long>& degrees, const Permutation& sigma) {
    if (static_cast<int>(degrees.size()) != sigma.size())
        throw InputError("", "degree list and permutation differ in length");
    int s = 1;
    const int n = sigma.size();
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
            int a = sigma.images[k], b = sigma.images[l];
            if (a > b && odd(degrees[a - 1]) && odd(degrees[b - 1])) s = -s;
        }
    return s;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(im);
    while (std::next_permutation(im.begin(), im.end()));
    return out;
}

std::vector<Permutation> unshuffles(int p, int q) {
    if (p < 0 || q < 0) throw InputError("", "negative block size");
    const int n = p + q;
    std::vector<Permutation> out;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + p, true);
    // prev_permutation on a true-first mask walks subsets in lexicographic order
    do {
        std::vector<int> im;
        im.reserve(n);
        for (int i = 0; i < n; ++i)
            if (pick[i]) im.push_back(i + 1);
        for (int i = 0; i < n; ++i)
            if (!pick[i]) im.push_back(i + 1);
        out.emplace_back(std::move(im));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

std::optional<CanonicalWord> sym_canonical(const GradedBasis& basis, const std::vector<int>& word) {
    const int n = static_cast<int>(word.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return word[a] < word[b]; });
    CanonicalWord out;
    out.word.resize(n);
    for (int k = 0; k < n; ++k) {
        if (word[order[k]] < 0 || word[order[k]] >= basis.size()) throw InputError("", "unknown symbol index");
        out.word[k] = word[order[k]];
        if (k > 0 && out.word[k] == out.word[k - 1] && odd(basis.degree(out.word[k]))) return std::nullopt;
    }
    int s = 1;
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
            if (order[k] > order[l] && odd(basis.degree(word[order[k]])) && odd(basis.degree(word[order[l]])))
                s = -s;
    out.sign = s;
    return out;
}

// signs: docs/signs.md S2
Element symmetrize(const GradedBasis& basis, const MultilinearMap& f, int arity,
                   const std::vector<Element>& args) {
    if (static_cast<int>(args.size()) != arity) throw InputError("", "arity mismatch in symmetrize");
    std::vector<long> degs;
    for (const auto& a : args) {
        auto d = degree_of(basis, a);
        degs.push_back(d.value_or(0));
    }
    Element out;
    for (const auto& sigma : all_permutations(arity)) {
        std::vector<Element> permuted;
        for (int k = 1; k <= arity; ++k) permuted.push_back(args[sigma(k) - 1]);
        out.axpy(koszul_sign(degs, sigma), f(permuted));
    }
    return out;
}

Element multilinear_extend(const std::vector<Element>& args,
                           const std::function<Element(const std::vector<int>&)>& on_basis) {
    Element out;
    std::vector<int> word(args.size());
    std::function<void(std::size_t, const Scalar&)> rec = [&](std::size_t k, const Scalar& c) {
        if (k == args.size()) {
            out.axpy(c, on_basis(word));
            return;
        }
        for (const auto& [i, v] : args[k].terms) {
            word[k] = i;
            rec(k + 1, c * v);
        }
    };
    rec(0, Scalar(1));
    return out;
}

}  // namespace defalg
