#include "defalg/algebra.hpp"

#include "defalg/linalg.hpp"

#include <set>

namespace defalg {

Element table_entry(const Table& table, int i, int j) {
    auto it = table.find({i, j});
    return it == table.end() ? Element() : it->second;
}

Element bilinear(const Table& table, const Element& x, const Element& y) {
    Element out;
    for (const auto& [i, a] : x.terms)
        for (const auto& [j, b] : y.terms) {
            auto it = table.find({i, j});
            if (it != table.end()) out.axpy(a * b, it->second);
        }
    return out;
}

Element linear(const std::vector<Element>& images, const Element& x) {
    Element out;
    for (const auto& [i, a] : x.terms) out.axpy(a, images.at(i));
    return out;
}

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

void expect_degree(Violations& out, const GradedBasis& b, const Element& x, long want, const std::string& where) {
    for (const auto& [i, c] : x.terms)
        if (b.degree(i) != want) {
            out.push_back({where, format(b, x), "degree: expected " + std::to_string(want)});
            return;
        }
}

std::vector<Scalar> dense_on(const Element& x, const std::vector<int>& idx, const std::map<int, int>& pos) {
    std::vector<Scalar> v(idx.size());
    for (const auto& [i, c] : x.terms) {
        auto it = pos.find(i);
        if (it != pos.end()) v[it->second] = c;
    }
    return v;
}

Element sparse_on(const std::vector<Scalar>& v, const std::vector<int>& idx) {
    Element x;
    for (std::size_t k = 0; k < v.size(); ++k) x.add(idx[k], v[k]);
    return x;
}

std::map<int, int> positions(const std::vector<int>& idx) {
    std::map<int, int> pos;
    for (std::size_t k = 0; k < idx.size(); ++k) pos[idx[k]] = static_cast<int>(k);
    return pos;
}

}  // namespace

Violations check_graded_commutative(const GradedAlgebra& a) {
    Violations out;
    const auto& b = a.basis;
    const int n = b.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            expect_degree(out, b, a.mul_basis(i, j), b.degree(i) + b.degree(j), "degree" + tuple_name(b, {i, j}));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Element r = a.mul_basis(i, j) - Scalar(sign_pow(b.degree(i) * b.degree(j))) * a.mul_basis(j, i);
            if (!r.is_zero()) out.push_back({"commutativity" + tuple_name(b, {i, j}), format(b, r), "ab - (-1)^{|a||b|} ba != 0"});
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Element ei = Element::basis(i), ek = Element::basis(k);
                Element r = a.mul(a.mul_basis(i, j), ek) - a.mul(ei, a.mul_basis(j, k));
                if (!r.is_zero())
                    out.push_back({"associativity" + tuple_name(b, {i, j, k}), format(b, r), "(ab)c - a(bc) != 0"});
            }
    if (a.unit) {
        int u = *a.unit;
        if (b.degree(u) != 0) out.push_back({"unit", b.name(u), "unit must have degree 0"});
        for (int i = 0; i < n; ++i) {
            Element r = a.mul_basis(u, i) - Element::basis(i);
            if (!r.is_zero()) out.push_back({"unit" + tuple_name(b, {i}), format(b, r), "1*a != a"});
        }
    }
    return out;
}

int algebra_nilpotency_index(const GradedAlgebra& a) {
    const int n = a.basis.size();
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    auto pos = positions(all);
    std::vector<Element> current;
    for (int i = 0; i < n; ++i) current.push_back(Element::basis(i));
    int s = 1;
    while (!current.empty()) {
        std::vector<std::vector<Scalar>> gens;
        for (int i = 0; i < n; ++i)
            for (const auto& v : current) gens.push_back(dense_on(a.mul(Element::basis(i), v), all, pos));
        std::vector<Element> next;
        if (!gens.empty())
            for (int k : independent_subset(gens, n)) next.push_back(sparse_on(gens[k], all));
        if (next.size() == current.size()) throw BoundError("algebra is not nilpotent");
        current = std::move(next);
        ++s;
    }
    return s;
}

Violations check_complex(const Complex& c) {
    Violations out;
    const auto& b = c.basis;
    for (int i = 0; i < b.size(); ++i) {
        expect_degree(out, b, c.d.at(i), b.degree(i) + 1, "degree(d" + b.name(i) + ")");
        Element r = c.apply(c.d[i]);
        if (!r.is_zero()) out.push_back({"d2(" + b.name(i) + ")", format(b, r), "d^2 != 0"});
    }
    return out;
}

Cohomology::Cohomology(const Complex& c, long degree) : degree_(degree), complex_(c) {
    here_ = c.basis.of_degree(degree);
    above_ = c.basis.of_degree(degree + 1);
    below_ = c.basis.of_degree(degree - 1);
    auto pos_here = positions(here_);
    auto pos_above = positions(above_);

    Matrix d_here(static_cast<int>(above_.size()), static_cast<int>(here_.size()));
    for (std::size_t k = 0; k < here_.size(); ++k) {
        auto col = dense_on(c.d[here_[k]], above_, pos_above);
        for (std::size_t r = 0; r < above_.size(); ++r) d_here(static_cast<int>(r), static_cast<int>(k)) = col[r];
    }
    auto cycles = kernel(d_here);

    std::vector<std::vector<Scalar>> cols;
    for (int i : below_) cols.push_back(dense_on(c.d[i], here_, pos_here));
    const int dim = static_cast<int>(here_.size());
    std::vector<std::vector<Scalar>> bnd;
    if (!cols.empty())
        for (int k : independent_subset(cols, dim)) bnd.push_back(cols[k]);
    for (const auto& v : bnd) boundaries_.push_back(sparse_on(v, here_));

    auto all = bnd;
    all.insert(all.end(), cycles.begin(), cycles.end());
    if (!all.empty())
        for (int k : independent_subset(all, dim))
            if (k >= static_cast<int>(bnd.size())) reps_.push_back(sparse_on(all[k], here_));
}

bool Cohomology::is_cycle(const Element& z) const {
    for (const auto& [i, v] : z.terms)
        if (complex_.basis.degree(i) != degree_) return false;
    return complex_.apply(z).is_zero();
}

std::optional<std::vector<Scalar>> Cohomology::project(const Element& z) const {
    if (!is_cycle(z)) return std::nullopt;
    auto pos = positions(here_);
    std::vector<std::vector<Scalar>> cols;
    for (const auto& b : boundaries_) cols.push_back(dense_on(b, here_, pos));
    for (const auto& r : reps_) cols.push_back(dense_on(r, here_, pos));
    const int dim = static_cast<int>(here_.size());
    auto x = solve(Matrix::from_columns(dim, cols), dense_on(z, here_, pos));
    if (!x) throw BoundError("cycle outside the span of boundaries and representatives");
    return std::vector<Scalar>(x->begin() + static_cast<long>(boundaries_.size()), x->end());
}

std::optional<Element> Cohomology::preimage(const Element& b) const {
    for (const auto& [i, v] : b.terms)
        if (complex_.basis.degree(i) != degree_) return std::nullopt;
    auto pos = positions(here_);
    std::vector<std::vector<Scalar>> cols;
    for (int i : below_) cols.push_back(dense_on(complex_.d[i], here_, pos));
    if (cols.empty()) {
        if (b.is_zero()) return Element();
        return std::nullopt;
    }
    auto x = solve(Matrix::from_columns(static_cast<int>(here_.size()), cols), dense_on(b, here_, pos));
    if (!x) return std::nullopt;
    return sparse_on(*x, below_);
}

Complex subcomplex(const Complex& c, const std::vector<int>& idx) {
    auto pos = positions(idx);
    std::vector<Symbol> syms;
    for (int i : idx) syms.push_back(c.basis[i]);
    Complex out{GradedBasis(std::move(syms)), {}};
    for (int i : idx) {
        Element image;
        for (const auto& [j, v] : c.d.at(i).terms) {
            auto it = pos.find(j);
            if (it == pos.end()) throw DomainError("span is not closed under d");
            image.add(it->second, v);
        }
        out.d.push_back(std::move(image));
    }
    return out;
}

std::map<long, int> betti_numbers(const Complex& c) {
    std::set<long> degs;
    for (const auto& s : c.basis.symbols()) degs.insert(s.degree);
    std::map<long, int> out;
    for (long d : degs) out[d] = Cohomology(c, d).dimension();
    return out;
}

}  // namespace defalg
