#pragma once

#include "defalg/algebra.hpp"
#include "defalg/coalg.hpp"
#include "defalg/dgla.hpp"
#include "defalg/freelie.hpp"
#include "defalg/gbv.hpp"
#include "defalg/lefschetz.hpp"
#include "defalg/linfty.hpp"

#include "json.hpp"

#include <string>

namespace defalg {

using Json = nlohmann::ordered_json;

/// DEFALG_MAX_BASIS, default 4096.
long max_basis();
/// Throws BoundError when n exceeds max_basis().
void guard_basis(long n, const std::string& what);

Json load_json_file(const std::string& filename);
/// If j carries "kind", it must equal `kind`.
void require_kind(const Json& j, const std::string& kind, const std::string& path = "");
const Json& field(const Json& j, const std::string& key, const std::string& path);
int int_field(const Json& j, const std::string& key, const std::string& path);

Scalar parse_rational(const Json& j, const std::string& path);
GaussianScalar parse_gaussian(const Json& j, const std::string& path);

/// {"basis":[{"name":"x","degree":1},...]} or the bare list.
GradedBasis parse_basis(const Json& j, const std::string& path);
/// [{"basis":"x","coeff":"1/2"},...]
Element parse_element(const Json& j, const GradedBasis& b, const std::string& path);
/// [{"left":"a","right":"b","value":[...]},...]
Table parse_table(const Json& j, const GradedBasis& b, const std::string& path);
/// [{"source":"x","value":[...]},...]; unlisted sources map to zero.
std::vector<Element> parse_linear_map(const Json& j, const GradedBasis& src, const GradedBasis& dst,
                                      const std::string& path);

DGLA parse_dgla(const Json& j, const std::string& path = "");
ArtinDg parse_artin(const Json& j, const std::string& path = "");
GradedAlgebra parse_algebra(const Json& j, const std::string& path = "");
Complex parse_complex(const Json& j, const std::string& path = "");
NilpotentLie parse_lie(const Json& j, const std::string& path = "");
/// {"generators":2,"order":4,"terms":[{"word":[0,1],"coeff":"1"}]}
TensorSeries parse_tensor(const Json& j, const std::string& path = "");
/// {"components":[{"arity":2,"entries":[{"word":["x","y"],"value":[...]}]}]}
Components parse_components(const Json& j, const GradedBasis& source, const GradedBasis& target,
                            long degree, const std::string& path = "");
/// {"convention":"unsuspended"|"suspended","basis":[...],"brackets":{"1":[entries],...}}
LInftyStructure parse_linfty(const Json& j, int truncation, const std::string& path = "");
/// {"vars":2,"cap":3,"terms":[{"coeff":"1","monomial":[1,0],"frame":[1]}]}
Polyvector parse_polyvector(const Json& j, const std::string& path = "");
/// {"dim":2,"terms":[{"A":[],"B":[],"M":[1],"N":[2],"coeff":{"re":"1","im":"0"}}]}
CovectorElement parse_covector(const Json& j, const std::string& path = "");
/// {"kind":"gbv","basis":[...],"mult":[...],"unit":"1","delta":[...]} or
/// {"kind":"polyvector-gbv","vars":n,"cap":D} or {"kind":"exterior-gbv","c":[c1,c2],"l":[l1,l2]}.
GBVStructure parse_gbv(const Json& j, const std::string& path = "");

Json to_json(const Scalar& q);
Json to_json(const GaussianScalar& z);
Json to_json(const GradedBasis& b, const Element& x);
Json to_json(const GradedBasis& b, const SymVec& x);
Json to_json(const Polyvector& p);
Json to_json(const CovectorElement& v);
Json to_json(const TensorSeries& x);
Json to_json(const Violation& v);

enum class Status { Pass, Fail, InputError };
std::string status_name(Status s);

struct CheckReport {
    std::string command;
    Status status = Status::Pass;
    Violations violations;
    Json witness;            // null when absent
    double timing_ms = 0;

    /// status from violations unless it is already InputError.
    void settle();
    int exit_code() const;
};

/// Timing is written only when requested, so default reports are deterministic.
Json report_to_json(const CheckReport& r, bool with_timing = false);
CheckReport report_from_json(const Json& j);
std::string report_text(const CheckReport& r, bool with_timing = true);

}  // namespace defalg
