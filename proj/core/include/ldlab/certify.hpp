#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ldlab/code.hpp"
#include "ldlab/simplex.hpp"

#include "json.hpp"

namespace ldlab {

/// Default cap on enumerated supports C(N, L).
inline constexpr std::uint64_t kSubsetBudget = 10'000'000;

enum class Verdict { holds, fails, boundary };
enum class CertMode { exact, greedy_lower_bound };

std::string to_string(Verdict v);
std::string to_string(CertMode m);

/// Outcome of the l1 sufficient condition: value = (1/L) max_{x in Sigma_L}
/// ||Phi x||_1 against threshold (q-1) n epsilon.  A holding certificate
/// implies ((1-1/q)(1-eps), L-1)-list decodability.
struct L1Certificate {
    std::size_t L = 0;
    double value = 0.0;
    double threshold = 0.0;
    double tolerance = 0.0;  // 1e-6 * n(q-1); within it the verdict is "boundary"
    Verdict verdict = Verdict::fails;
    CertMode mode = CertMode::exact;
    SparsePattern witness;
};

/// Exact mode enumerates every size-L support (C(N,L) <= budget, else
/// SizeOverBudget).  Greedy mode grows the support by locally maximal l1 gain
/// with lowest-index tie-breaking; its value is a lower bound, so it can
/// refute but never certify: "holds" is never issued in greedy mode.
L1Certificate l1_certificate(const LinearCode& code, std::size_t L, double epsilon,
                             CertMode mode = CertMode::exact,
                             std::uint64_t subset_budget = kSubsetBudget);

struct L1MaxResult {
    double value = 0.0;  // max_{x in Sigma_L} ||Phi x||_1
    SparsePattern witness;
};

/// Exact maximum of ||Phi x||_1 over all size-L supports, enumerated with
/// incremental per-coordinate symbol counts.  C(N,L) <= budget required.
L1MaxResult max_phi_l1(const LinearCode& code, std::size_t L,
                       std::uint64_t subset_budget = kSubsetBudget);

/// Exact maximum of | ||Phi x||_1 - center | over all size-L supports.
/// For q = 2, L = 2 this reduces to a pass over the nonzero codeword weights
/// (the norm depends only on the difference codeword), which sidesteps the
/// subset budget entirely.
double max_l1_deviation(const LinearCode& code, std::size_t L, double center,
                        std::uint64_t subset_budget = kSubsetBudget);

/// delta = max over size-s column subsets of || Gram - I ||_2 for the
/// normalized encoding Phi / sqrt(n(q-1)).  Gram entries are exact integers
/// scaled by n(q-1); extreme eigenvalues come from cyclic Jacobi sweeps.
struct RipReport {
    std::size_t s = 0;
    double delta = 0.0;
    SparsePattern witness;                     // subset attaining delta (lex least)
    std::optional<double> implied_radius;      // (1-1/q)(1-(1+delta)/sqrt(s)) when positive
    std::optional<double> boxed_radius;        // (1-1/q)(1-3/(2 sqrt(s))) when delta <= 1/2 and positive
    std::optional<std::uint64_t> implied_list; // s - 1, when a radius is populated
};

RipReport rip_constant(const LinearCode& code, std::size_t s,
                       std::uint64_t subset_budget = kSubsetBudget);

/// Decodability implied by a restricted isometry constant.
struct RipDecodability {
    double radius = 0.0;                 // general bound (1-1/q)(1-(1+delta)/sqrt(L))
    std::optional<double> boxed_radius;  // delta <= 1/2 special case
    std::uint64_t list = 0;              // L - 1
};

std::optional<RipDecodability> rip_implied_decodability(double delta, std::size_t L, Symbol q);

/// floor(n (1-1/q) (1 - a/sqrt(L))) with a = a_num/a_den, decided by exact
/// integer arithmetic (no floating sqrt at the boundary).  Returns nullopt
/// when the radius is negative.  a = 3/2 gives the boxed RIP radius.
std::optional<std::size_t> radius_floor_sqrt(Symbol q, std::size_t n, std::size_t L,
                                             std::int64_t a_num, std::int64_t a_den);

/// Average-distance certificate: minimum over all size-L index sets of the
/// average pairwise relative distance, exactly as rationals, mapped to the
/// (eta, epsilon) of the punctured-ensemble bound.
struct AvgDistanceCertificate {
    std::size_t L = 0;
    Rational min_avg_distance{0};
    Rational plotkin_bound{0};  // 1 - 1/q, what min_avg is measured against
    Rational eta{0};            // clamp(1 - min_avg / (1 - 1/q), [0, 1])
    Rational epsilon_sq{0};     // 4 (1/L + eta (1 - 1/L)), exact
    double epsilon = 0.0;
    bool vacuous = false;  // epsilon > 1: implied radius would be negative
    SparsePattern witness;
};

AvgDistanceCertificate avg_distance_certificate(const LinearCode& code, std::size_t L,
                                                std::uint64_t subset_budget = kSubsetBudget);

/// Parameter planner: L = ceil((2/eps)^2), n = ceil((2 C0)^2 k ln q / eps^2),
/// predicted radius t = floor((1-1/q)(1-eps) n), plus the margin by which the
/// planned point satisfies n/sqrt(L) + C0 sqrt(n ln N) < n eps.
struct ParamPlan {
    Rational epsilon{0};
    Symbol q = 2;
    double c0 = 1.0;
    std::size_t k = 0;
    std::uint64_t L = 0;
    std::size_t n = 0;
    std::size_t predicted_radius = 0;
    double rate = 0.0;    // k / n
    double margin = 0.0;  // n eps - n/sqrt(L) - C0 sqrt(n k ln q)
    bool satisfied = false;
};

ParamPlan plan_parameters(const Rational& epsilon, Symbol q, double c0, std::size_t k);

nlohmann::json to_json(const L1Certificate& cert);
nlohmann::json to_json(const RipReport& report);
nlohmann::json to_json(const AvgDistanceCertificate& cert);
nlohmann::json to_json(const ParamPlan& plan);

}  // namespace ldlab
