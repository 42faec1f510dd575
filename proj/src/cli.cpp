#include "defalg/cli.hpp"

#include "defalg/linalg.hpp"
#include "defalg/suite.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

namespace defalg::cli {

namespace {

Json basis_json(const GradedBasis& b) {
    Json a = Json::array();
    for (const auto& s : b.symbols()) a.push_back({{"name", s.name}, {"degree", s.degree}});
    return a;
}

Json load(const Options& o) {
    if (o.input.empty()) throw InputError("--input", "this command needs an input file");
    return load_json_file(o.input);
}

const Json& section(const Json& j, const std::string& key) { return field(j, key, ""); }

Element element_of(const Json& j, const std::string& key, const GradedBasis& b) {
    return parse_element(section(j, key), b, key);
}

void need_degree(const GradedBasis& b, const Element& x, long want, const std::string& path) {
    auto d = degree_of(b, x);
    if (d && *d != want)
        throw InputError(path, "expected total degree " + std::to_string(want) + ", got " + std::to_string(*d));
}

void prefix(Violations& into, const Violations& from, const std::string& p) {
    for (const auto& v : from) into.push_back({p + v.location, v.residual, v.message});
}

TensorDgla guarded_tensor(const DGLA& L, const ArtinDg& A) {
    guard_basis(static_cast<long>(L.basis.size()) * A.basis().size(), "L⊗A");
    return tensor_dgla(L, A);
}

Outcome make(const std::string& command) {
    Outcome o;
    o.report.command = command;
    o.report.witness = nullptr;
    return o;
}

// dgla module

Outcome do_check_dgla(const Options& o) {
    Outcome r = make("check-dgla");
    Json j = load(o);
    DGLA L = parse_dgla(j);
    r.report.violations = check_dgla(L);
    Json b = Json::object();
    for (const auto& [deg, n] : betti_numbers(L.complex())) b[std::to_string(deg)] = n;
    r.report.witness = {{"dim", L.basis.size()}, {"betti", b}};
    return r;
}

Outcome do_check_na(const Options& o) {
    Outcome r = make("check-na");
    ArtinDg A = parse_artin(load(o));
    NaReport na = check_na(A);
    r.report.violations = na.violations;
    r.report.witness = {{"dim", A.basis().size()}};
    r.report.witness["nilpotency_index"] = na.nilpotency_index ? Json(*na.nilpotency_index) : Json(nullptr);
    return r;
}

Outcome do_mc(const Options& o) {
    Outcome r = make("mc");
    Json j = load(o);
    require_kind(j, "mc");
    DGLA L = parse_dgla(section(j, "dgla"), "dgla");
    ArtinDg A = parse_artin(section(j, "artin"), "artin");
    TensorDgla T = guarded_tensor(L, A);
    Element x = element_of(j, "element", T.dgla.basis);
    need_degree(T.dgla.basis, x, 1, "element");
    Element res = x.is_zero() ? Element() : mc_residual(T.dgla, x);
    if (!res.is_zero()) r.report.violations.push_back({"element", format(T.dgla.basis, res), "dx + 1/2[x,x] != 0"});
    r.report.witness = {{"residual", to_json(T.dgla.basis, res)}};
    return r;
}

Outcome do_gauge(const Options& o) {
    Outcome r = make("gauge");
    Json j = load(o);
    require_kind(j, "gauge");
    DGLA L = parse_dgla(section(j, "dgla"), "dgla");
    ArtinDg A = parse_artin(section(j, "artin"), "artin");
    TensorDgla T = guarded_tensor(L, A);
    const DGLA& M = T.dgla;
    Element a = element_of(j, "a", M.basis), w = element_of(j, "w", M.basis);
    need_degree(M.basis, a, 0, "a");
    need_degree(M.basis, w, 1, "w");
    auto& v = r.report.violations;
    if (!w.is_zero() && !mc_check(M, w)) v.push_back({"w", format(M.basis, mc_residual(M, w)), "w is not Maurer-Cartan"});
    Element aw = gauge_apply(M, a, w);
    if (!aw.is_zero() && !mc_check(M, aw))
        v.push_back({"exp(a)*w", format(M.basis, mc_residual(M, aw)), "gauge image is not Maurer-Cartan"});
    r.report.witness = {{"result", to_json(M.basis, aw)}};
    if (j.contains("b")) {
        Element b = element_of(j, "b", M.basis);
        need_degree(M.basis, b, 0, "b");
        Element ab = bch_in(M, a, b);
        Element lhs = gauge_apply(M, a, gauge_apply(M, b, w)), rhs = gauge_apply(M, ab, w);
        if (lhs != rhs) v.push_back({"exp(a)exp(b)*w", format(M.basis, lhs - rhs), "group law fails"});
        r.report.witness["product"] = to_json(M.basis, ab);
    }
    return r;
}

Outcome do_obstruction(const Options& o) {
    Outcome r = make("obstruction");
    Json j = load(o);
    require_kind(j, "obstruction");
    DGLA L = parse_dgla(section(j, "dgla"), "dgla");
    ArtinDg A = parse_artin(section(j, "artin"), "artin");
    const Json& k = section(j, "kernel");
    if (!k.is_array()) throw InputError("kernel", "expected a list of basis names");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (!k[i].is_string()) throw InputError("kernel/" + std::to_string(i), "expected a name");
        names.push_back(k[i].get<std::string>());
    }
    SmallExtension e = make_small_extension(A, names);
    TensorDgla MB = guarded_tensor(L, e.quotient), MA = guarded_tensor(L, A);
    Element x = element_of(j, "x", MB.dgla.basis);
    need_degree(MB.dgla.basis, x, 1, "x");
    ObstructionResult ob = obstruction_class(L, e, x);
    Json cls = Json::array();
    std::string text;
    for (const auto& c : ob.class_coords) {
        cls.push_back(to_string(c));
        text += (text.empty() ? "" : ",") + to_string(c);
    }
    if (!ob.vanishes) r.report.violations.push_back({"H2(L⊗I)", "(" + text + ")", "obstruction class is nonzero"});
    r.report.witness = {{"h", to_json(MA.dgla.basis, ob.h)}, {"class", cls}};
    r.report.witness["lift"] = ob.mc_lift ? to_json(MA.dgla.basis, *ob.mc_lift) : Json(nullptr);
    return r;
}

Outcome do_cohomology(const Options& o) {
    Outcome r = make("cohomology");
    Json j = load(o);
    std::string kind = j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>() : "complex";
    Complex c = kind == "dgla" ? parse_dgla(j).complex() : kind == "artin" ? parse_artin(j).complex() : parse_complex(j);
    r.report.violations = check_complex(c);
    if (!r.report.violations.empty()) return r;
    Json w = Json::object();
    for (const auto& [deg, n] : betti_numbers(c)) {
        Cohomology H(c, deg);
        Json reps = Json::array();
        for (const auto& z : H.representatives()) reps.push_back(to_json(c.basis, z));
        w[std::to_string(deg)] = {{"dim", n}, {"representatives", reps}};
        r.lines.push_back("  H^" + std::to_string(deg) + ": " + std::to_string(n));
    }
    r.report.witness = {{"cohomology", w}};
    return r;
}

Outcome do_cones(const Options& o) {
    Outcome r = make("cones");
    Json j = load(o);
    require_kind(j, "cones");
    ArtinDg A = parse_artin(section(j, "artin"), "artin");
    std::vector<std::string> names;
    const Json& k = section(j, "kernel");
    if (!k.is_array()) throw InputError("kernel", "expected a list of basis names");
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (!k[i].is_string()) throw InputError("kernel/" + std::to_string(i), "expected a name");
        names.push_back(k[i].get<std::string>());
    }
    SmallExtension e = make_small_extension(A, names);
    Cones c = cones(e);
    prefix(r.report.violations, check_na(c.cone).violations, "cone/");
    r.report.witness = {{"cone", basis_json(c.cone.basis())}};
    if (c.inverse) {
        prefix(r.report.violations, check_na(*c.inverse).violations, "inverse/");
        r.report.witness["inverse"] = basis_json(c.inverse->basis());
    } else {
        r.report.witness["inverse"] = nullptr;
    }
    if (!c.inverse_note.empty()) r.report.witness["note"] = c.inverse_note;
    return r;
}

Outcome do_exp_der(const Options& o) {
    Outcome r = make("exp-der");
    Json j = load(o);
    require_kind(j, "exp-der");
    GradedAlgebra R = parse_algebra(section(j, "algebra"), "algebra");
    ArtinDg A = parse_artin(section(j, "artin"), "artin");
    guard_basis(static_cast<long>(R.basis.size()) * (A.basis().size() + 1), "R⊗A+");
    GradedBasis space = exp_derivation(R, A, std::vector<Element>(R.basis.size())).space;
    auto d = parse_linear_map(section(j, "derivation"), R.basis, space, "derivation");
    DerivationExp ex = exp_derivation(R, A, d);
    r.report.violations = ex.violations;
    Json imgs = Json::array();
    for (int i = 0; i < ex.space.size(); ++i)
        imgs.push_back({{"source", ex.space.name(i)}, {"value", to_json(ex.space, ex.exp[i])}});
    r.report.witness = {{"exp", imgs}};
    return r;
}

Outcome do_homotopy_eval(const Options& o) {
    Outcome r = make("homotopy-eval");
    Json j = load(o);
    require_kind(j, "homotopy");
    ArtinDg A = parse_artin(section(j, "A"), "A");
    ArtinDg B = parse_artin(section(j, "B"), "B");
    Scalar s = j.contains("s") ? parse_rational(j["s"], "s") : Scalar(0);
    std::vector<PolyForm> H(A.basis().size());
    const Json& h = section(j, "H");
    if (!h.is_array()) throw InputError("H", "expected a list of {source, value}");
    for (std::size_t k = 0; k < h.size(); ++k) {
        std::string p = "H/" + std::to_string(k);
        const Json& src = field(h[k], "source", p);
        if (!src.is_string()) throw InputError(p + "/source", "expected a name");
        int a = A.basis().index(src.get<std::string>());
        const Json& val = field(h[k], "value", p);
        if (!val.is_array()) throw InputError(p + "/value", "expected a list of terms");
        for (std::size_t t = 0; t < val.size(); ++t) {
            std::string tp = p + "/value/" + std::to_string(t);
            const Json& bn = field(val[t], "basis", tp);
            if (!bn.is_string()) throw InputError(tp + "/basis", "expected a name");
            int b = B.basis().index(bn.get<std::string>());
            int tk = val[t].contains("t") ? int_field(val[t], "t", tp) : 0;
            int dt = val[t].contains("dt") ? int_field(val[t], "dt", tp) : 0;
            if (tk < 0) throw InputError(tp + "/t", "negative power");
            if (dt != 0 && dt != 1) throw InputError(tp + "/dt", "expected 0 or 1");
            Scalar c = val[t].contains("coeff") ? parse_rational(val[t]["coeff"], tp + "/coeff") : Scalar(1);
            H[a][{b, tk, dt}] += c;
        }
    }
    HomotopyResult hr = homotopy_eval(A, B, H, s);
    r.report.violations = hr.violations;
    Json imgs = Json::array();
    for (int i = 0; i < A.basis().size(); ++i)
        imgs.push_back({{"source", A.basis().name(i)}, {"value", to_json(B.basis(), hr.e_s[i])}});
    r.report.witness = {{"s", to_string(s)}, {"e_s", imgs}};
    return r;
}

// freelie module

std::string letters_text(const Word& w) {
    // [x1,[x2,[…,xn]]]
    std::string s;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) s += std::string("[") + static_cast<char>('a' + w[k]) + ",";
    s += static_cast<char>('a' + w.back());
    s += std::string(w.size() - 1, ']');
    return s;
}

std::string tensor_text(const TensorSeries& x) {
    std::string s;
    for (const auto& [w, c] : x.terms()) {
        if (!s.empty()) s += " + ";
        s += to_string(c);
        if (!w.empty()) s += "*";
        for (int l : w) s += static_cast<char>('a' + l);
    }
    return s.empty() ? "0" : s;
}

Outcome do_bch(const Options& o) {
    Outcome r = make("bch");
    const int N = o.truncate;
    if (N < 1 || N > 12) throw InputError("--truncate", "truncation must lie in 1..12");
    if (o.mode != "free" && o.mode != "explicit" && o.mode != "nilpotent")
        throw InputError("--mode", "expected free, explicit or nilpotent");
    auto& v = r.report.violations;
    if (o.input.empty()) {
        if (o.mode == "nilpotent") throw InputError("--mode", "nilpotent mode needs a Lie algebra --input");
        TensorSeries a = TensorSeries::letter(2, N, 0), b = TensorSeries::letter(2, N, 1);
        TensorSeries fr = bch_free(a, b, N), ex = bch_explicit(a, b, N);
        const TensorSeries& x = o.mode == "free" ? fr : ex;
        for (int n = 1; n <= N; ++n)
            if (fr.part(n) != ex.part(n))
                v.push_back({"degree " + std::to_string(n), tensor_text(fr.part(n) - ex.part(n)),
                             "free and explicit BCH differ"});
        if (!is_lie(x)) v.push_back({"a*b", tensor_text(x - dsw_project(x)), "product is not a Lie element"});
        Json terms = Json::array();
        for (const auto& t : lie_coordinates(x)) {
            terms.push_back({{"degree", t.degree}, {"coeff", to_string(t.coeff)}, {"bracket", t.bracket}});
            r.lines.push_back("  " + to_string(t.coeff) + " " + t.bracket);
        }
        r.report.witness = {{"mode", o.mode}, {"truncate", N}, {"terms", terms}};
        return r;
    }
    Json j = load(o);
    NilpotentLie L = parse_lie(j);
    Element a = element_of(j, "a", L.basis()), b = element_of(j, "b", L.basis());
    Element nil = L.bch(a, b);
    Element ex = bch_series(a, b, [&](const Element& x, const Element& y) { return L.bracket(x, y); }, 64);
    if (nil != ex) v.push_back({"a*b", format(L.basis(), nil - ex), "explicit and nilpotent BCH differ"});
    Element minus = L.bch(a, -a);
    if (!minus.is_zero()) v.push_back({"a*(-a)", format(L.basis(), minus), "a*(-a) != 0"});
    const Element& x = o.mode == "nilpotent" ? nil : ex;
    r.report.witness = {{"mode", o.mode}, {"nilpotency_index", L.nilpotency_index()}, {"value", to_json(L.basis(), x)}};
    r.lines.push_back("  a*b = " + format(L.basis(), x));
    return r;
}

Outcome do_dsw(const Options& o) {
    Outcome r = make("dsw");
    TensorSeries x = parse_tensor(load(o));
    TensorSeries s = dsw_project(x);
    if (dsw_project(s) != s) r.report.violations.push_back({"sigma", tensor_text(dsw_project(s) - s), "sigma is not idempotent"});
    r.report.witness = {{"projection", to_json(s)}, {"is_lie", s == x}};
    r.lines.push_back("  sigma(x) = " + tensor_text(s));
    return r;
}

Outcome do_friedrichs(const Options& o) {
    Outcome r = make("friedrichs");
    TensorSeries x = parse_tensor(load(o));
    bool lie = is_lie(x);
    if (!lie) r.report.violations.push_back({"x", tensor_text(x - dsw_project(x)), "sigma(x) != x, not a Lie element"});
    r.report.witness = {{"is_lie", lie}};
    return r;
}

// coalg module

Outcome do_coder(const Options& o) {
    Outcome r = make("coder");
    Json j = load(o);
    require_kind(j, "coderivation");
    GradedBasis b = parse_basis(j, "");
    long deg = j.contains("degree") ? int_field(j, "degree", "") : 1;
    Components c = parse_components(j, b, b, deg);
    prefix(r.report.violations, check_component_degrees(c), "");
    Coderivation Q(c, o.truncate);
    prefix(r.report.violations, check_coleibniz(Q, o.truncate), "");
    long words = 0;
    Json square = Json::array();
    for (const auto& w : sym_words_upto(b, o.truncate)) {
        ++words;
        SymVec q2 = Q.apply(Q.apply(w));
        if (!q2.empty()) {
            Json wj = Json::array();
            for (int i : w) wj.push_back(b.name(i));
            square.push_back({{"word", wj}, {"value", to_json(b, q2)}});
        }
    }
    r.report.witness = {{"words", words}, {"square_zero", square.empty()}, {"square", square}};
    return r;
}

Outcome do_comorph(const Options& o) {
    Outcome r = make("comorph");
    Json j = load(o);
    require_kind(j, "comorphism");
    GradedBasis src = parse_basis(section(j, "source"), "source");
    GradedBasis tgt = parse_basis(section(j, "target"), "target");
    Components f = parse_components(j, src, tgt, 0);
    prefix(r.report.violations, check_component_degrees(f), "");
    CoalgMorphism F(f, o.truncate);
    prefix(r.report.violations, check_comorphism(F, o.truncate), "");
    long words = 0;
    for (const auto& w : sym_words_upto(src, o.truncate)) {
        ++words;
        SymVec lhs = F.apply(w), rhs = morphism_exp_form(f, w);
        if (lhs != rhs) {
            std::string name;
            for (int i : w) name += (name.empty() ? "" : "⊙") + src.name(i);
            r.report.violations.push_back({name, "", "recursive lift and exponential form differ"});
        }
    }
    r.report.witness = {{"words", words}};
    return r;
}

// linfty module

int default_arity(int k, const Options& o) { return o.max_arity > 0 ? o.max_arity : std::max(k, 1) + 2; }

LInftyStructure load_linfty(const Json& j, const std::string& path, const Options& o) {
    LInftyStructure s = parse_linfty(j, 2, path);
    s.truncation = default_arity(s.max_arity(), o);
    return s;
}

Outcome do_check_linfty(const Options& o) {
    Outcome r = make("check-linfty");
    Json j = load(o);
    LInftyStructure s = load_linfty(j, "", o);
    int n = s.truncation;
    r.report.violations = check_linfty(s, n);
    r.report.witness = {{"n_max", n}, {"minimal", s.minimal()}};
    if (r.report.violations.empty()) {
        HBracket h = h_bracket_check(s);
        prefix(r.report.violations, h.violations, "H/");
        Json br = Json::array();
        for (const auto& [key, val] : h.bracket)
            if (key.first <= key.second && !val.is_zero())
                br.push_back({{"left", h.basis.name(key.first)}, {"right", h.basis.name(key.second)},
                              {"value", to_json(h.basis, val)}});
        r.report.witness["cohomology"] = {{"basis", basis_json(h.basis)}, {"bracket", br}};
    }
    return r;
}

Outcome do_from_dgla(const Options& o) {
    Outcome r = make("from-dgla");
    DGLA L = parse_dgla(load(o));
    Violations dv = check_dgla(L);
    LInftyStructure s = from_dgla(L, std::max(o.truncate, 3), false);
    Violations lv = check_linfty(s, 3);
    r.report.violations = dv;
    if (dv.empty() != lv.empty())
        r.report.violations.push_back({"from_dgla", "", "check_dgla and check_linfty disagree"});
    r.report.witness = linfty_json(s);
    return r;
}

Outcome do_linfty_morphism(const Options& o) {
    Outcome r = make("linfty-morphism");
    Json j = load(o);
    require_kind(j, "linfty-morphism");
    LInftyStructure src = parse_linfty(section(j, "source"), 2, "source");
    LInftyStructure tgt = parse_linfty(section(j, "target"), 2, "target");
    Components f = parse_components(j, src.suspended(), tgt.suspended(), 0);
    int n = default_arity(std::max({src.max_arity(), tgt.max_arity(), f.max_arity()}), o);
    src.truncation = tgt.truncation = n;
    prefix(r.report.violations, check_component_degrees(f), "");
    LInftyMorphism F{src, tgt, f, n};
    prefix(r.report.violations, morphism_check(F, n), "");
    r.report.witness = {{"n_max", n}};
    return r;
}

Outcome do_mc_linfty(const Options& o) {
    Outcome r = make("mc-linfty");
    Json j = load(o);
    require_kind(j, "mc-linfty");
    LInftyStructure s = load_linfty(section(j, "linfty"), "linfty", o);
    ArtinDg A = parse_artin(section(j, "artin"), "artin");
    guard_basis(static_cast<long>(s.space.size()) * A.basis().size(), "V⊗A");
    GradedBasis P = pair_basis(s.space, A.basis());
    Element m = element_of(j, "element", P);
    need_degree(P, m, 1, "element");
    Element res = mc_linfty(s, A, m);
    if (!res.is_zero()) r.report.violations.push_back({"element", format(P, res), "L-infinity Maurer-Cartan residual != 0"});
    if (mc_linfty_suspended(s, A, m) != -res)
        r.report.violations.push_back({"element", "", "suspended and unsuspended residuals disagree"});
    r.report.witness = {{"residual", to_json(P, res)}};
    return r;
}

Outcome do_hodge_f(const Options& o) {
    Outcome r = make("hodge-f");
    HodgeModel M = o.model == "trivial"    ? trivial_hodge_model()
                   : o.model == "derived"  ? derived_hodge_model()
                   : o.model == "injected" ? injected_hodge_model()
                                           : throw InputError("--model", "expected trivial, derived or injected");
    int m = o.max_arity > 0 ? o.max_arity : 4;
    if (m > 6) throw InputError("--max-arity", "hodge-f supports arity up to 6");
    HodgeResult h = hodge_F(M, m);
    prefix(r.report.violations, h.model_violations, "model/");
    prefix(r.report.violations, h.violations, "");
    r.report.witness = {{"model", o.model}, {"m_max", m}, {"components", h.F.size()}};
    return r;
}

// gbv module

Outcome do_gbv_check(const Options& o) {
    Outcome r = make("gbv-check");
    GBVStructure S = parse_gbv(load(o));
    r.report.violations = gbv_check(S);
    bool verified = false;
    if (r.report.violations.empty()) {
        prefix(r.report.violations, dgla_verify(S), "G[-1]/");
        verified = true;
    }
    r.report.witness = {{"dim", S.basis().size()}, {"dgla_verified", verified}};
    return r;
}

Polyvector polyvector_of(const Json& j, const std::string& key) { return parse_polyvector(section(j, key), key); }

Outcome do_schouten(const Options& o) {
    Outcome r = make("schouten");
    Json j = load(o);
    require_kind(j, "schouten");
    Polyvector a = polyvector_of(j, "a"), b = polyvector_of(j, "b");
    if (a.n != b.n) throw InputError("b/vars", "both polyvectors need the same variables");
    Polyvector ab = schouten(a, b);
    auto da = a.frame_degree(), db = b.frame_degree();
    if (da && db) {
        Polyvector ba = schouten(b, a);
        int s = ((*da - 1) * (*db - 1)) % 2 == 0 ? 1 : -1;
        Polyvector sum = ab + Scalar(s) * ba;
        if (!sum.is_zero()) r.report.violations.push_back({"[a,b]", format(sum), "graded antisymmetry fails"});
    }
    r.report.witness = {{"bracket", to_json(ab)}};
    r.lines.push_back("  [a,b] = " + format(ab));
    return r;
}

Outcome do_delta(const Options& o) {
    Outcome r = make("delta");
    Json j = load(o);
    Polyvector a = j.contains("a") ? polyvector_of(j, "a") : parse_polyvector(j);
    Polyvector da = delta_volume(a);
    Polyvector dd = delta_volume(da);
    if (!dd.is_zero()) r.report.violations.push_back({"a", format(dd), "Δ² != 0"});
    Polyvector dc = delta_coordinates(a);
    if (dc != da) r.report.violations.push_back({"a", format(da - dc), "volume-form Δ and coordinate Δ differ"});
    r.report.witness = {{"delta", to_json(da)}};
    r.lines.push_back("  Δa = " + format(da));
    return r;
}

Outcome do_tian_todorov(const Options& o) {
    Outcome r = make("tian-todorov");
    Json j = load(o);
    require_kind(j, "tian-todorov");
    Polyvector a = polyvector_of(j, "a"), b = polyvector_of(j, "b");
    if (a.n != b.n) throw InputError("b/vars", "both polyvectors need the same variables");
    if (!a.is_zero() && !a.frame_degree()) throw InputError("a", "a must have a single exterior degree");
    r.report.violations = tian_todorov_check(a, b);
    r.report.witness = {{"bracket", to_json(schouten(a, b))}};
    return r;
}

Outcome do_gbv_to_abelian(const Options& o) {
    Outcome r = make("gbv-to-abelian");
    if (o.inverse != "factorial" && o.inverse != "signed") throw InputError("--inverse", "expected factorial or signed");
    GBVStructure S = parse_gbv(load(o));
    int m = o.max_arity > 0 ? o.max_arity : 4;
    if (m > 6) throw InputError("--max-arity", "gbv-to-abelian supports arity up to 6");
    AbelianResult a = gbv_to_abelian(S, m);
    r.report.violations = a.violations;
    if (o.inverse == "signed") prefix(r.report.violations, a.signed_inverse_violations, "signed/");
    r.report.witness = {{"m_max", m}, {"inverse", o.inverse}};
    return r;
}

// lefschetz module

Outcome do_lefschetz(const Options& o) {
    Outcome r = make("lefschetz");
    const std::string action = o.action.empty() ? "identities" : o.action;
    if (action == "identities") {
        int n = o.dim > 0 ? o.dim : 2;
        if (n > 5) throw InputError("--dim", "identities are checked for dim ≤ 5");
        guard_basis(1L << (2 * n), "covector basis");
        r.report.command = "lefschetz identities";
        r.report.violations = identities_check(n);
        r.report.witness = {{"dim", n}, {"basis", 1L << (2 * n)}};
        return r;
    }
    CovectorElement v = parse_covector(load(o));
    if (o.dim > 0 && o.dim != v.n) throw InputError("--dim", "does not match the input dimension");
    guard_basis(1L << (2 * v.n), "covector basis");
    if (action == "decompose") {
        r.report.command = "lefschetz decompose";
        auto pieces = lefschetz_decompose(v);
        if (lefschetz_reconstruct(pieces, v.n) != v)
            r.report.violations.push_back({"v", "", "pieces do not sum back to v"});
        Json list = Json::array();
        for (const auto& p : pieces) {
            std::string loc = "L^" + std::to_string(p.r);
            if (!is_primitive(p.v)) r.report.violations.push_back({loc, format(op_Lambda(p.v)), "piece is not primitive"});
            prefix(r.report.violations, primitive_coefficient_check(p.v), loc + "/");
            for (int k = 0; k <= v.n; ++k) prefix(r.report.violations, primitive_star_check(p.v, k), loc + "/");
            list.push_back({{"r", p.r}, {"primitive", to_json(p.v)}});
            r.lines.push_back("  L^" + std::to_string(p.r) + " " + format(p.v));
        }
        r.report.witness = {{"pieces", list}};
        return r;
    }
    if (action == "apply") {
        r.report.command = "lefschetz apply";
        // name[:i] or name[:a,b]
        std::string name = o.op, args;
        if (auto c = name.find(':'); c != std::string::npos) {
            args = name.substr(c + 1);
            name = name.substr(0, c);
        }
        if (name.empty()) throw InputError("--op", "missing operator name");
        CovOp op = parse_cov_op(name);
        std::vector<int> nums;
        std::stringstream ss(args);
        for (std::string t; std::getline(ss, t, ',');) {
            try {
                nums.push_back(std::stoi(t));
            } catch (...) {
                throw InputError("--op", "bad operator argument '" + t + "'");
            }
        }
        int i = 0, a = 0, b = 0;
        if (op == CovOp::Li || op == CovOp::Lambdai) i = nums.empty() ? 1 : nums[0];
        if (op == CovOp::Pab) {
            if (nums.size() != 2) throw InputError("--op", "P_ab needs P_ab:a,b");
            a = nums[0];
            b = nums[1];
        }
        if (op == CovOp::Pp || op == CovOp::Palpha) {
            if (nums.size() != 1) throw InputError("--op", name + " needs one argument");
            a = nums[0];
        }
        if ((op == CovOp::Li || op == CovOp::Lambdai) && (i < 1 || i > v.n))
            throw InputError("--op", "index out of range");
        CovectorElement w = apply_op(op, v, i, a, b);
        r.report.witness = {{"op", cov_op_name(op)}, {"result", to_json(w)}};
        r.lines.push_back("  " + format(w));
        return r;
    }
    throw InputError("action", "expected identities, decompose or apply");
}

// suite

Outcome do_suite(const Options& o) {
    Outcome r = make("suite");
    std::set<int> only(o.only.begin(), o.only.end());
    for (int id : only)
        if (id < 1 || id > library_criteria()) throw InputError("--only", "unknown criterion " + std::to_string(id));
    auto results = run_suite(o.seed, only);
    for (const auto& c : results) {
        std::string line = "  " + std::to_string(c.id) + " " + c.name + ": " + (c.pass ? "PASS" : "FAIL") + " (" +
                           std::to_string(c.checks) + " checks)";
        if (o.timing) line += " " + std::to_string(static_cast<long>(c.ms)) + " ms";
        r.lines.push_back(line);
        if (!c.pass)
            for (const auto& v : c.violations)
                r.report.violations.push_back({"criterion " + std::to_string(c.id) + "/" + v.location, v.residual, v.message});
    }
    r.report.witness = suite_json(o.seed, results);
    return r;
}

}  // namespace

std::vector<LieTerm> lie_coordinates(const TensorSeries& x) {
    std::vector<LieTerm> out;
    const int g = x.generators();
    for (int n = 1; n <= x.order(); ++n) {
        TensorSeries part = x.part(n);
        if (part.is_zero()) continue;
        // all words of length n in lexicographic order
        std::vector<Word> words;
        Word w(n, 0);
        for (;;) {
            words.push_back(w);
            int k = n - 1;
            while (k >= 0 && w[k] == g - 1) w[k--] = 0;
            if (k < 0) break;
            ++w[k];
        }
        std::map<Word, int> pos;
        for (std::size_t k = 0; k < words.size(); ++k) pos[words[k]] = static_cast<int>(k);
        auto alternations = [](const Word& u) {
            int a = 0;
            for (std::size_t k = 1; k < u.size(); ++k) a += u[k] != u[k - 1];
            return a;
        };
        std::vector<Word> order = words;
        std::stable_sort(order.begin(), order.end(),
                         [&](const Word& p, const Word& q) { return alternations(p) < alternations(q); });
        std::vector<std::vector<Scalar>> vecs;
        for (const auto& u : order) {
            std::vector<TensorSeries> xs;
            for (int l : u) xs.push_back(TensorSeries::letter(g, n, l));
            TensorSeries br = right_nested(xs);
            std::vector<Scalar> col(words.size());
            for (const auto& [ww, c] : br.terms()) col[pos.at(ww)] = c;
            vecs.push_back(col);
        }
        auto chosen = independent_subset(vecs, static_cast<int>(words.size()));
        std::vector<std::vector<Scalar>> cols;
        for (int k : chosen) cols.push_back(vecs[k]);
        Matrix m = Matrix::from_columns(static_cast<int>(words.size()), cols);
        std::vector<Scalar> rhs(words.size());
        for (const auto& [ww, c] : part.terms()) rhs[pos.at(ww)] = c;
        auto sol = solve(m, rhs);
        if (!sol) throw DomainError("degree " + std::to_string(n) + " part is not a Lie element");
        for (std::size_t k = 0; k < chosen.size(); ++k)
            if ((*sol)[k] != 0) out.push_back({n, (*sol)[k], letters_text(order[chosen[k]])});
    }
    return out;
}

Json linfty_json(const LInftyStructure& s) {
    UnsuspendedBrackets u = to_unsuspended(s);
    Json j;
    j["kind"] = "linfty";
    j["convention"] = "unsuspended";
    j["basis"] = basis_json(u.space);
    Json br = Json::object();
    for (const auto& [k, table] : u.l) {
        Json entries = Json::array();
        for (const auto& [w, v] : table) {
            if (v.is_zero()) continue;
            Json wj = Json::array();
            for (int i : w) wj.push_back(u.space.name(i));
            entries.push_back({{"word", wj}, {"value", to_json(u.space, v)}});
        }
        if (!entries.empty()) br[std::to_string(k)] = entries;
    }
    j["brackets"] = br;
    return j;
}

const std::vector<Subcommand>& dispatch_table() {
    static const std::vector<Subcommand> table{
        {"check-dgla", "DGLA axioms on a structure file", {"check_dgla", "cohomology"}, do_check_dgla},
        {"check-na", "nilpotent dg-algebra axioms and nilpotency index", {"check_na"}, do_check_na},
        {"mc", "Maurer-Cartan residual in L⊗A", {"tensor_dgla", "mc_residual"}, do_mc},
        {"gauge", "gauge action and group law", {"tensor_dgla", "gauge_apply", "mc_residual", "bch"}, do_gauge},
        {"obstruction", "obstruction class along a small extension", {"obstruction_class", "cohomology"}, do_obstruction},
        {"cohomology", "cohomology of a complex, DGLA or base algebra", {"cohomology"}, do_cohomology},
        {"cones", "mapping cones of a small extension", {"cones", "check_na"}, do_cones},
        {"exp-der", "exponential of a nilpotent derivation", {"exp_derivation"}, do_exp_der},
        {"homotopy-eval", "evaluation of a homotopy A -> B[t,dt]", {"homotopy_eval"}, do_homotopy_eval},
        {"bch", "BCH product: free, explicit or nilpotent", {"bch", "tensor_exp", "tensor_log", "dsw_project", "is_lie"}, do_bch},
        {"dsw", "Dynkin-Specht-Wever projection", {"dsw_project"}, do_dsw},
        {"friedrichs", "Lie membership test sigma(x) = x", {"is_lie", "dsw_project"}, do_friedrichs},
        {"coder", "coderivation lift and co-Leibniz check",
         {"coder_lift", "coproduct", "n_map", "koszul_sign", "unshuffles", "sym_canonical", "symmetrize"}, do_coder},
        {"comorph", "coalgebra morphism lift", {"morphism_lift", "coproduct", "sym_canonical"}, do_comorph},
        {"check-linfty", "generalized Jacobi identities", {"check_linfty", "decalage", "h_bracket_check"}, do_check_linfty},
        {"from-dgla", "L-infinity structure of a DGLA", {"from_dgla", "decalage", "check_dgla", "check_linfty"}, do_from_dgla},
        {"linfty-morphism", "L-infinity morphism equations", {"morphism_check", "morphism_taylor"}, do_linfty_morphism},
        {"mc-linfty", "L-infinity Maurer-Cartan residual", {"mc_linfty"}, do_mc_linfty},
        {"hodge-f", "F∘δ = 0 on an abstract Hodge model", {"hodge_model_check", "hodge_F"}, do_hodge_f},
        {"gbv-check", "GBV axioms and the induced DGLA", {"gbv_check", "derived_q", "gbv_bracket", "dgla_verify"}, do_gbv_check},
        {"schouten", "Schouten bracket of polyvector fields", {"schouten"}, do_schouten},
        {"delta", "divergence operator of the volume form", {"delta_volume", "contraction"}, do_delta},
        {"tian-todorov", "Tian-Todorov identity", {"tian_todorov_check", "schouten", "delta_volume"}, do_tian_todorov},
        {"gbv-to-abelian", "product morphism to the abelian structure", {"gbv_to_abelian"}, do_gbv_to_abelian},
        {"lefschetz", "covector operators: identities, decompose, apply",
         {"apply_op", "identities_check", "is_primitive", "lefschetz_decompose", "primitive_star_check"}, do_lefschetz},
        {"suite", "acceptance battery", {"run"}, do_suite},
    };
    return table;
}

const std::vector<std::string>& module_operations() {
    static const std::vector<std::string> ops{
        "koszul_sign", "unshuffles", "sym_canonical", "symmetrize",
        "tensor_exp", "tensor_log", "dsw_project", "is_lie", "bch",
        "check_dgla", "check_na", "tensor_dgla", "mc_residual", "gauge_apply", "cohomology", "obstruction_class",
        "cones", "exp_derivation", "homotopy_eval",
        "coproduct", "n_map", "coder_lift", "morphism_lift",
        "decalage", "check_linfty", "from_dgla", "morphism_taylor", "morphism_check", "mc_linfty",
        "h_bracket_check", "hodge_model_check", "hodge_F",
        "derived_q", "gbv_check", "gbv_bracket", "dgla_verify", "contraction", "schouten", "delta_volume",
        "tian_todorov_check", "gbv_to_abelian",
        "apply_op", "identities_check", "is_primitive", "lefschetz_decompose", "primitive_star_check",
        "run"};
    return ops;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact checks for differential graded Lie algebras, L-infinity algebras and related structures",
                 "defalg"};
    std::string commands;
    for (const auto& s : dispatch_table()) commands += (commands.empty() ? "" : ", ") + s.name;
    app.footer("Commands: " + commands);
    app.add_option("command", o.command, "subcommand")->required();
    app.add_option("action", o.action, "lefschetz action: identities, decompose, apply");
    app.add_option("--input,-i", o.input, "input JSON file");
    app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--truncate", o.truncate, "truncation order")->capture_default_str();
    app.add_option("--max-arity", o.max_arity, "verification arity");
    app.add_option("--dim", o.dim, "complex dimension for lefschetz");
    app.add_option("--seed", o.seed, "seed for the suite")->capture_default_str();
    app.add_option("--mode", o.mode, "bch mode: free, explicit, nilpotent")->capture_default_str();
    app.add_option("--model", o.model, "hodge-f model: trivial, derived, injected")->capture_default_str();
    app.add_option("--inverse", o.inverse, "gbv-to-abelian inverse: factorial or signed")->capture_default_str();
    app.add_option("--op", o.op, "lefschetz apply operator, e.g. L, Lambda_i:2, P_ab:1,0");
    app.add_option("--only", o.only, "suite criteria to run");
    app.add_flag("--timing", o.timing, "include timings in reports");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "defalg: " << e.what() << "\n";
        return 2;
    }

    const Subcommand* sub = nullptr;
    for (const auto& s : dispatch_table())
        if (s.name == o.command) sub = &s;
    if (!sub) {
        err << "defalg: unknown subcommand '" << o.command << "'\n";
        return 2;
    }
    if (!o.action.empty() && o.command != "lefschetz") {
        err << "defalg: " << o.command << " takes no positional action\n";
        return 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    Outcome res;
    try {
        res = sub->handler(o);
        res.report.settle();
    } catch (const InputError& e) {
        res = make(o.command);
        res.report.status = Status::InputError;
        std::string msg = e.what();
        if (!e.path.empty() && msg.starts_with(e.path + ": ")) msg = msg.substr(e.path.size() + 2);
        res.report.violations.push_back({e.path.empty() ? "input" : e.path, "", msg});
    } catch (const std::exception& e) {
        // precondition, structure and bound failures of the input
        res = make(o.command);
        res.report.status = Status::InputError;
        res.report.violations.push_back({"input", "", e.what()});
    }
    res.report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (o.format == "json") {
        out << report_to_json(res.report, o.timing).dump(2) << "\n";
    } else {
        const auto& r = res.report;
        out << r.command << ": " << status_name(r.status);
        if (o.timing) out << " (" << static_cast<long>(r.timing_ms) << " ms)";
        out << "\n";
        for (const auto& v : r.violations) {
            out << "  " << v.location << ": " << v.message;
            if (!v.residual.empty()) out << " [" << v.residual << "]";
            out << "\n";
        }
        if (!res.lines.empty()) {
            for (const auto& l : res.lines) out << l << "\n";
        } else if (!r.witness.is_null() && r.status != Status::InputError) {
            out << "  witness: " << r.witness.dump() << "\n";
        }
    }
    if (res.report.status == Status::InputError) err << "defalg: " << res.report.violations.front().message << "\n";
    return res.report.exit_code();
}

}  // namespace defalg::cli
