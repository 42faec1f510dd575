#include "defalg/io.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace defalg {

namespace {

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "/" + key; }
std::string join(const std::string& path, std::size_t i) { return join(path, std::to_string(i)); }

const Json& array_field(const Json& j, const std::string& key, const std::string& path) {
    const Json& a = field(j, key, path);
    if (!a.is_array()) throw InputError(join(path, key), "expected an array");
    return a;
}

std::string string_of(const Json& j, const std::string& path) {
    if (!j.is_string()) throw InputError(path, "expected a string");
    return j.get<std::string>();
}

int index_of(const GradedBasis& b, const Json& j, const std::string& path) {
    std::string name = string_of(j, path);
    auto i = b.find(name);
    if (!i) throw InputError(path, "unknown basis symbol '" + name + "'");
    return *i;
}

std::vector<int> int_list(const Json& j, const std::string& path) {
    if (!j.is_array()) throw InputError(path, "expected an array of integers");
    std::vector<int> out;
    for (std::size_t k = 0; k < j.size(); ++k) {
        if (!j[k].is_number_integer()) throw InputError(join(path, k), "expected an integer");
        out.push_back(j[k].get<int>());
    }
    return out;
}

}  // namespace

long max_basis() {
    const char* env = std::getenv("DEFALG_MAX_BASIS");
    if (!env || !*env) return 4096;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v <= 0) throw InputError("DEFALG_MAX_BASIS", "expected a positive integer");
    return v;
}

void guard_basis(long n, const std::string& what) {
    if (n > max_basis())
        throw BoundError(what + " has " + std::to_string(n) + " basis vectors, above DEFALG_MAX_BASIS=" +
                         std::to_string(max_basis()));
}

Json load_json_file(const std::string& filename) {
    std::ifstream in(filename);
    if (!in) throw InputError("input", "cannot open " + filename);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError("input", std::string("malformed JSON: ") + e.what());
    }
}

void require_kind(const Json& j, const std::string& kind, const std::string& path) {
    if (!j.is_object()) throw InputError(path, "expected an object");
    if (!j.contains("kind")) return;
    std::string k = string_of(j["kind"], join(path, "kind"));
    if (k != kind) throw InputError(join(path, "kind"), "expected \"" + kind + "\", got \"" + k + "\"");
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw InputError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(join(path, key), "missing field");
    return *it;
}

int int_field(const Json& j, const std::string& key, const std::string& path) {
    const Json& v = field(j, key, path);
    if (!v.is_number_integer()) throw InputError(join(path, key), "expected an integer");
    return v.get<int>();
}

Scalar parse_rational(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (!j.is_string()) throw InputError(path, "rational literals are strings \"p/q\" or integers");
    return parse_scalar(j.get<std::string>(), path);
}

GaussianScalar parse_gaussian(const Json& j, const std::string& path) {
    if (!j.is_object()) return GaussianScalar(parse_rational(j, path));
    Scalar re = j.contains("re") ? parse_rational(j["re"], join(path, "re")) : Scalar(0);
    Scalar im = j.contains("im") ? parse_rational(j["im"], join(path, "im")) : Scalar(0);
    return {re, im};
}

GradedBasis parse_basis(const Json& j, const std::string& path) {
    const Json* list = &j;
    std::string p = path;
    if (j.is_object()) {
        list = &field(j, "basis", path);
        p = join(path, "basis");
    }
    if (!list->is_array()) throw InputError(p, "expected an array of symbols");
    guard_basis(static_cast<long>(list->size()), p);
    std::vector<Symbol> syms;
    std::set<std::string> seen;
    for (std::size_t k = 0; k < list->size(); ++k) {
        const Json& s = (*list)[k];
        std::string sp = join(p, k);
        std::string name = string_of(field(s, "name", sp), join(sp, "name"));
        if (name.empty()) throw InputError(join(sp, "name"), "empty name");
        if (!seen.insert(name).second) throw InputError(join(sp, "name"), "duplicate symbol '" + name + "'");
        const Json& d = field(s, "degree", sp);
        if (!d.is_number_integer()) throw InputError(join(sp, "degree"), "expected an integer");
        syms.push_back({name, d.get<long>()});
    }
    return GradedBasis(std::move(syms));
}

Element parse_element(const Json& j, const GradedBasis& b, const std::string& path) {
    if (!j.is_array()) throw InputError(path, "expected a list of {basis, coeff}");
    Element x;
    for (std::size_t k = 0; k < j.size(); ++k) {
        std::string p = join(path, k);
        int i = index_of(b, field(j[k], "basis", p), join(p, "basis"));
        Scalar c = j[k].contains("coeff") ? parse_rational(j[k]["coeff"], join(p, "coeff")) : Scalar(1);
        x.add(i, c);
    }
    return x;
}

Table parse_table(const Json& j, const GradedBasis& b, const std::string& path) {
    if (!j.is_array()) throw InputError(path, "expected a list of {left, right, value}");
    Table t;
    std::set<std::pair<int, int>> seen;
    for (std::size_t k = 0; k < j.size(); ++k) {
        std::string p = join(path, k);
        int l = index_of(b, field(j[k], "left", p), join(p, "left"));
        int r = index_of(b, field(j[k], "right", p), join(p, "right"));
        if (!seen.insert({l, r}).second) throw InputError(p, "duplicate entry");
        Element v = parse_element(field(j[k], "value", p), b, join(p, "value"));
        if (!v.is_zero()) t[{l, r}] = std::move(v);
    }
    return t;
}

std::vector<Element> parse_linear_map(const Json& j, const GradedBasis& src, const GradedBasis& dst,
                                      const std::string& path) {
    if (!j.is_array()) throw InputError(path, "expected a list of {source, value}");
    std::vector<Element> out(src.size());
    std::vector<bool> given(src.size(), false);
    for (std::size_t k = 0; k < j.size(); ++k) {
        std::string p = join(path, k);
        int s = index_of(src, field(j[k], "source", p), join(p, "source"));
        if (given[s]) throw InputError(p, "duplicate source");
        given[s] = true;
        out[s] = parse_element(field(j[k], "value", p), dst, join(p, "value"));
    }
    return out;
}

DGLA parse_dgla(const Json& j, const std::string& path) {
    require_kind(j, "dgla", path);
    DGLA L;
    L.basis = parse_basis(j, path);
    L.d = j.contains("d") ? parse_linear_map(j["d"], L.basis, L.basis, join(path, "d"))
                          : std::vector<Element>(L.basis.size());
    if (j.contains("bracket"))
        L.bracket = complete_antisymmetric(L.basis, parse_table(j["bracket"], L.basis, join(path, "bracket")));
    return L;
}

GradedAlgebra parse_algebra(const Json& j, const std::string& path) {
    require_kind(j, "algebra", path);
    GradedAlgebra A;
    A.basis = parse_basis(j, path);
    if (j.contains("mult")) A.mult = parse_table(j["mult"], A.basis, join(path, "mult"));
    if (j.contains("unit")) A.unit = index_of(A.basis, j["unit"], join(path, "unit"));
    return A;
}

ArtinDg parse_artin(const Json& j, const std::string& path) {
    require_kind(j, "artin", path);
    if (j.contains("truncated_polynomial")) {
        int s = int_field(j, "truncated_polynomial", path);
        if (s < 2) throw InputError(join(path, "truncated_polynomial"), "needs s >= 2");
        guard_basis(s, join(path, "truncated_polynomial"));
        return truncated_polynomial(s);
    }
    GradedBasis b = parse_basis(j, path);
    Table mult = j.contains("mult") ? parse_table(j["mult"], b, join(path, "mult")) : Table{};
    std::vector<Element> d = j.contains("d") ? parse_linear_map(j["d"], b, b, join(path, "d")) : std::vector<Element>{};
    return make_artin(b, std::move(mult), std::move(d));
}

Complex parse_complex(const Json& j, const std::string& path) {
    require_kind(j, "complex", path);
    Complex c;
    c.basis = parse_basis(j, path);
    c.d = j.contains("d") ? parse_linear_map(j["d"], c.basis, c.basis, join(path, "d"))
                          : std::vector<Element>(c.basis.size());
    return c;
}

NilpotentLie parse_lie(const Json& j, const std::string& path) {
    require_kind(j, "lie", path);
    GradedBasis b = parse_basis(j, path);
    Table t = j.contains("bracket") ? parse_table(j["bracket"], b, join(path, "bracket")) : Table{};
    return NilpotentLie(b, complete_antisymmetric(b, std::move(t)));
}

TensorSeries parse_tensor(const Json& j, const std::string& path) {
    require_kind(j, "tensor", path);
    int g = int_field(j, "generators", path);
    if (g < 1) throw InputError(join(path, "generators"), "need at least one generator");
    const Json& terms = array_field(j, "terms", path);
    int order = 0;
    for (const auto& t : terms)
        if (t.contains("word") && t["word"].is_array()) order = std::max<int>(order, static_cast<int>(t["word"].size()));
    if (j.contains("order")) order = std::max(order, int_field(j, "order", path));
    TensorSeries x(g, order);
    for (std::size_t k = 0; k < terms.size(); ++k) {
        std::string p = join(join(path, "terms"), k);
        Word w = int_list(field(terms[k], "word", p), join(p, "word"));
        for (std::size_t q = 0; q < w.size(); ++q)
            if (w[q] < 0 || w[q] >= g) throw InputError(join(join(p, "word"), q), "letter out of range");
        x.add(w, parse_rational(field(terms[k], "coeff", p), join(p, "coeff")));
    }
    return x;
}

Components parse_components(const Json& j, const GradedBasis& source, const GradedBasis& target, long degree,
                            const std::string& path) {
    Components c{source, target, degree, {}};
    const Json& list = array_field(j, "components", path);
    for (std::size_t k = 0; k < list.size(); ++k) {
        std::string p = join(join(path, "components"), k);
        int arity = int_field(list[k], "arity", p);
        if (arity < 1) throw InputError(join(p, "arity"), "arity must be positive");
        const Json& entries = array_field(list[k], "entries", p);
        for (std::size_t e = 0; e < entries.size(); ++e) {
            std::string ep = join(join(p, "entries"), e);
            const Json& w = field(entries[e], "word", ep);
            if (!w.is_array() || static_cast<int>(w.size()) != arity)
                throw InputError(join(ep, "word"), "word length must equal the arity");
            std::vector<int> word;
            for (std::size_t q = 0; q < w.size(); ++q) word.push_back(index_of(source, w[q], join(join(ep, "word"), q)));
            Element v = parse_element(field(entries[e], "value", ep), target, join(ep, "value"));
            auto canon = sym_canonical(source, word);
            if (!canon) {
                if (!v.is_zero()) throw InputError(join(ep, "word"), "word vanishes in the symmetric power");
                continue;
            }
            Element& slot = c.q[arity][canon->word];
            slot.axpy(Scalar(canon->sign), v);
        }
    }
    return c;
}

LInftyStructure parse_linfty(const Json& j, int truncation, const std::string& path) {
    require_kind(j, "linfty", path);
    std::string conv = j.contains("convention") ? string_of(j["convention"], join(path, "convention")) : "unsuspended";
    GradedBasis V = parse_basis(j, path);
    Json comps = Json::object();
    comps["components"] = Json::array();
    if (j.contains("brackets")) {
        const Json& br = j["brackets"];
        if (!br.is_object()) throw InputError(join(path, "brackets"), "expected an object keyed by arity");
        for (auto it = br.begin(); it != br.end(); ++it) {
            int k = 0;
            try {
                k = std::stoi(it.key());
            } catch (...) {
                throw InputError(join(join(path, "brackets"), it.key()), "arity keys are integers");
            }
            comps["components"].push_back({{"arity", k}, {"entries", it.value()}});
        }
    }
    if (conv == "suspended") {
        GradedBasis S = V.shifted(-1);
        LInftyStructure s{V, parse_components(comps, S, S, 1, join(path, "brackets")), truncation};
        return s;
    }
    if (conv != "unsuspended") throw InputError(join(path, "convention"), "expected \"unsuspended\" or \"suspended\"");
    UnsuspendedBrackets b{V, {}};
    for (std::size_t k = 0; k < comps["components"].size(); ++k) {
        const Json& c = comps["components"][k];
        int arity = c["arity"].get<int>();
        std::string p = join(join(path, "brackets"), std::to_string(arity));
        const Json& entries = c["entries"];
        if (!entries.is_array()) throw InputError(p, "expected a list of entries");
        for (std::size_t e = 0; e < entries.size(); ++e) {
            std::string ep = join(p, e);
            const Json& w = field(entries[e], "word", ep);
            if (!w.is_array() || static_cast<int>(w.size()) != arity)
                throw InputError(join(ep, "word"), "word length must equal the arity");
            std::vector<int> word;
            for (std::size_t q = 0; q < w.size(); ++q) word.push_back(index_of(V, w[q], join(join(ep, "word"), q)));
            Element v = parse_element(field(entries[e], "value", ep), V, join(ep, "value"));
            b.l[arity][word] += v;
        }
    }
    return from_unsuspended(b, truncation);
}

Polyvector parse_polyvector(const Json& j, const std::string& path) {
    require_kind(j, "polyvector", path);
    int n = int_field(j, "vars", path);
    int cap = j.contains("cap") ? int_field(j, "cap", path) : 3;
    if (n < 1 || n > 8) throw InputError(join(path, "vars"), "variable count must lie in 1..8");
    if (cap < 0) throw InputError(join(path, "cap"), "cap must be nonnegative");
    Polyvector p{n, cap, {}};
    const Json& terms = array_field(j, "terms", path);
    for (std::size_t k = 0; k < terms.size(); ++k) {
        std::string tp = join(join(path, "terms"), k);
        Monomial m = int_list(field(terms[k], "monomial", tp), join(tp, "monomial"));
        if (static_cast<int>(m.size()) != n) throw InputError(join(tp, "monomial"), "one exponent per variable");
        for (std::size_t q = 0; q < m.size(); ++q)
            if (m[q] < 0) throw InputError(join(join(tp, "monomial"), q), "negative exponent");
        if (monomial_degree(m) > cap) throw InputError(join(tp, "monomial"), "coefficient degree exceeds cap");
        std::vector<int> fr = terms[k].contains("frame") ? int_list(terms[k]["frame"], join(tp, "frame")) : std::vector<int>{};
        Frame f = 0;
        for (std::size_t q = 0; q < fr.size(); ++q) {
            if (fr[q] < 1 || fr[q] > n) throw InputError(join(join(tp, "frame"), q), "frame index out of range");
            if (f & (1u << (fr[q] - 1))) throw InputError(join(join(tp, "frame"), q), "repeated frame index");
            f |= 1u << (fr[q] - 1);
        }
        Scalar c = terms[k].contains("coeff") ? parse_rational(terms[k]["coeff"], join(tp, "coeff")) : Scalar(1);
        // ∂_{i1}∧∂_{i2}… in the given order, sorted with its sign
        int inv = 0;
        for (std::size_t a = 0; a < fr.size(); ++a)
            for (std::size_t b = a + 1; b < fr.size(); ++b)
                if (fr[a] > fr[b]) ++inv;
        p.add({m, f}, Scalar(sign_pow(inv)) * c);
    }
    return p;
}

CovectorElement parse_covector(const Json& j, const std::string& path) {
    require_kind(j, "covector", path);
    int n = int_field(j, "dim", path);
    if (n < 0 || n > 8) throw InputError(join(path, "dim"), "dimension must lie in 0..8");
    CovectorElement v;
    v.n = n;
    const Json& terms = array_field(j, "terms", path);
    for (std::size_t k = 0; k < terms.size(); ++k) {
        std::string tp = join(join(path, "terms"), k);
        auto get = [&](const char* key) {
            return terms[k].contains(key) ? int_list(terms[k][key], join(tp, key)) : std::vector<int>{};
        };
        StandardCovector z;
        try {
            z = StandardCovector::make(n, get("A"), get("B"), get("M"), get("N"));
        } catch (const InputError& e) {
            throw InputError(join(tp, e.path), e.what());
        }
        GaussianScalar c = terms[k].contains("coeff") ? parse_gaussian(terms[k]["coeff"], join(tp, "coeff"))
                                                     : GaussianScalar(1);
        v.add(z, c);
    }
    return v;
}

GBVStructure parse_gbv(const Json& j, const std::string& path) {
    if (!j.is_object()) throw InputError(path, "expected an object");
    std::string kind = j.contains("kind") ? string_of(j["kind"], join(path, "kind")) : "gbv";
    if (kind == "polyvector-gbv") {
        int n = int_field(j, "vars", path);
        int cap = int_field(j, "cap", path);
        if (n < 1 || n > 4) throw InputError(join(path, "vars"), "variable count must lie in 1..4");
        if (cap < 0 || cap > 6) throw InputError(join(path, "cap"), "cap must lie in 0..6");
        guard_basis(static_cast<long>(polyvector_basis(n, cap).size()), "polyvector basis");
        return polyvector_gbv(n, cap);
    }
    if (kind == "exterior-gbv") {
        auto pair = [&](const char* key) {
            const Json& a = field(j, key, path);
            if (!a.is_array() || a.size() != 2) throw InputError(join(path, key), "expected two rationals");
            return std::pair{parse_rational(a[0], join(join(path, key), "0")), parse_rational(a[1], join(join(path, key), "1"))};
        };
        auto [c1, c2] = pair("c");
        auto [l1, l2] = pair("l");
        return exterior_gbv(c1, c2, l1, l2);
    }
    if (kind != "gbv") throw InputError(join(path, "kind"), "expected gbv, polyvector-gbv or exterior-gbv");
    GBVStructure S;
    S.alg.basis = parse_basis(j, path);
    if (j.contains("mult")) S.alg.mult = parse_table(j["mult"], S.alg.basis, join(path, "mult"));
    if (j.contains("unit")) S.alg.unit = index_of(S.alg.basis, j["unit"], join(path, "unit"));
    S.delta = j.contains("delta") ? parse_linear_map(j["delta"], S.alg.basis, S.alg.basis, join(path, "delta"))
                                  : std::vector<Element>(S.alg.basis.size());
    S.weight.assign(S.alg.basis.size(), 0);
    return S;
}

Json to_json(const Scalar& q) { return to_string(q); }

Json to_json(const GaussianScalar& z) { return Json{{"re", to_string(z.re)}, {"im", to_string(z.im)}}; }

Json to_json(const GradedBasis& b, const Element& x) {
    Json a = Json::array();
    for (const auto& [i, c] : x.terms) a.push_back({{"basis", b.name(i)}, {"coeff", to_string(c)}});
    return a;
}

Json to_json(const GradedBasis& b, const SymVec& x) {
    Json a = Json::array();
    for (const auto& [w, c] : x) {
        Json word = Json::array();
        for (int i : w) word.push_back(b.name(i));
        a.push_back({{"word", word}, {"coeff", to_string(c)}});
    }
    return a;
}

Json to_json(const Polyvector& p) {
    Json terms = Json::array();
    for (const auto& [k, c] : p.terms) {
        Json frame = Json::array();
        for (int j = 0; j < p.n; ++j)
            if (k.second & (1u << j)) frame.push_back(j + 1);
        terms.push_back({{"coeff", to_string(c)}, {"monomial", k.first}, {"frame", frame}});
    }
    return Json{{"vars", p.n}, {"cap", p.cap}, {"terms", terms}};
}

Json to_json(const CovectorElement& v) {
    Json terms = Json::array();
    auto list = [&](unsigned m) {
        Json a = Json::array();
        for (int j = 0; j < v.n; ++j)
            if (m & (1u << j)) a.push_back(j + 1);
        return a;
    };
    for (const auto& [z, c] : v.terms)
        terms.push_back({{"A", list(z.A)}, {"B", list(z.B)}, {"M", list(z.M)}, {"N", list(z.N)}, {"coeff", to_json(c)}});
    return Json{{"dim", v.n}, {"terms", terms}};
}

Json to_json(const TensorSeries& x) {
    Json terms = Json::array();
    for (const auto& [w, c] : x.terms()) terms.push_back({{"word", w}, {"coeff", to_string(c)}});
    return Json{{"generators", x.generators()}, {"order", x.order()}, {"terms", terms}};
}

Json to_json(const Violation& v) {
    return Json{{"location", v.location}, {"residual", v.residual}, {"message", v.message}};
}

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::InputError: return "input-error";
    }
    return "?";
}

void CheckReport::settle() {
    if (status == Status::InputError) return;
    status = violations.empty() ? Status::Pass : Status::Fail;
}

int CheckReport::exit_code() const {
    switch (status) {
        case Status::Pass: return 0;
        case Status::Fail: return 1;
        case Status::InputError: return 2;
    }
    return 2;
}

Json report_to_json(const CheckReport& r, bool with_timing) {
    Json j;
    j["command"] = r.command;
    j["status"] = status_name(r.status);
    Json v = Json::array();
    for (const auto& x : r.violations) v.push_back(to_json(x));
    j["violations"] = v;
    j["witness"] = r.witness;
    if (with_timing) j["timing"] = r.timing_ms;
    return j;
}

CheckReport report_from_json(const Json& j) {
    CheckReport r;
    r.command = string_of(field(j, "command", ""), "command");
    std::string s = string_of(field(j, "status", ""), "status");
    if (s == "pass") r.status = Status::Pass;
    else if (s == "fail") r.status = Status::Fail;
    else if (s == "input-error") r.status = Status::InputError;
    else throw InputError("status", "unknown status '" + s + "'");
    const Json& v = array_field(j, "violations", "");
    for (std::size_t k = 0; k < v.size(); ++k) {
        std::string p = join("violations", k);
        r.violations.push_back({string_of(field(v[k], "location", p), join(p, "location")),
                                string_of(field(v[k], "residual", p), join(p, "residual")),
                                string_of(field(v[k], "message", p), join(p, "message"))});
    }
    if (j.contains("witness")) r.witness = j["witness"];
    if (j.contains("timing")) r.timing_ms = j["timing"].get<double>();
    return r;
}

std::string report_text(const CheckReport& r, bool with_timing) {
    std::ostringstream os;
    os << r.command << ": " << status_name(r.status);
    if (with_timing) os << " (" << static_cast<long>(r.timing_ms) << " ms)";
    os << "\n";
    for (const auto& v : r.violations) {
        os << "  " << v.location << ": " << v.message;
        if (!v.residual.empty()) os << " [" << v.residual << "]";
        os << "\n";
    }
    if (!r.witness.is_null()) os << "  witness: " << r.witness.dump() << "\n";
    return os.str();
}

}  // namespace defalg
