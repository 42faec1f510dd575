#pragma once

#include "defalg/io.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace defalg {

/// Seeded generator; draws are reduced from mt19937_64 output so runs repeat across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    int uniform(int lo, int hi);
    bool coin() { return uniform(0, 1) == 1; }
    /// Integer in {-2..2}.
    Scalar small();
    Scalar small_nonzero();

private:
    std::mt19937_64 g_;
};

/// e (deg 0), x_i (deg 1), y_k (deg 2), at most five vectors. e acts diagonally with integer weights,
/// [x_i,x_j] and d: L¹ → L² respect the weights, and de may hit a central weight-zero x.
DGLA random_dgla(Rng& rng);
/// Same family with d: L¹ → L² onto, so H²(L) = 0.
DGLA random_dgla_h2_zero(Rng& rng);

/// Monomial basis with an additive level (t^k ↦ k, t^k η ↦ k+1).
struct LeveledArtin {
    ArtinDg A;
    std::vector<int> level;
};
LeveledArtin leveled_truncated(int s);
/// Maximal ideal of K[t]/(t^s) ⊗ K[η], deg η = -1.
LeveledArtin leveled_odd(int s);
/// Dimension ≤ 5, nilpotency ≤ 4; graded when `graded`.
LeveledArtin random_artin(Rng& rng, bool graded);

/// Solves the Maurer–Cartan equation in L⊗A level by level, adding random cocycles.
/// nullopt when an obstruction is met.
std::optional<Element> random_mc(const DGLA& L, const LeveledArtin& A, Rng& rng);
Element random_of_degree(const GradedBasis& b, long degree, Rng& rng);
/// Basis of Z^deg(L).
std::vector<Element> cocycles(const DGLA& L, long degree);

/// Mixed-degree basis of size 2..max_size with degrees in [lo, hi].
GradedBasis random_basis(Rng& rng, int max_size, long lo, long hi);
Components random_components(Rng& rng, const GradedBasis& source, const GradedBasis& target, long degree,
                             int max_arity);

TensorSeries random_tensor(Rng& rng, int gens, int order);
TensorSeries random_lie_element(Rng& rng, int gens, int order);
Polyvector random_polyvector(Rng& rng, int n, int cap, int frame, int max_coeff_degree);
CovectorElement random_covector(Rng& rng, int n, int p);

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = true;
    long checks = 0;
    Violations violations;
    std::string note;
    double ms = 0;

    void expect(bool ok, const std::string& location, const std::string& message, const std::string& residual = "");
    void absorb(const Violations& v, const std::string& prefix = "");
};

/// Library-level criteria, numbered 1..12.
int library_criteria();
std::string criterion_name(int id);
/// Runtime bound in milliseconds.
double criterion_budget_ms(int id);
CriterionResult run_criterion(int id, std::uint64_t seed);
std::vector<CriterionResult> run_suite(std::uint64_t seed, const std::set<int>& only = {});
/// Deterministic: no timings.
Json suite_json(std::uint64_t seed, const std::vector<CriterionResult>& results);

}  // namespace defalg
