#include "ldlab/certify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "ldlab/linalg.hpp"

namespace ldlab {

namespace {

/// min(C(n, k), cap + 1) without overflow.
std::uint64_t binom_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt c = 1;
    const BigInt lim = BigInt(cap) + 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
        if (c > lim) return cap + 1;
    }
    return std::uint64_t(c);
}

std::vector<std::uint8_t> codeword_table(const LinearCode& code, std::uint64_t& N) {
    N = code.num_codewords(kEnumerationBudget);
    if (code.q() > 255 || N * code.length() > (std::uint64_t(1) << 28))
        throw SizeOverBudget("codeword table too large to materialize");
    std::vector<std::uint8_t> table(N * code.length());
    CodewordEnumerator en(code);
    std::uint64_t idx = 0;
    do {
        for (std::size_t j = 0; j < code.length(); ++j)
            table[idx * code.length() + j] = std::uint8_t(en.symbols()[j]);
        ++idx;
    } while (en.advance());
    return table;
}

/// Per-coordinate symbol counts of the current support, updated incrementally
/// while walking size-L subsets in lexicographic order.
class L1Evaluator {
public:
    L1Evaluator(const LinearCode& code, const std::vector<std::uint8_t>& table)
        : q_(code.q()), n_(code.length()), table_(&table), counts_(n_ * q_, 0) {
        const double two_pi = 2.0 * std::numbers::pi;
        char_table_.resize(std::size_t(q_) * q_);
        for (Symbol s = 0; s < q_; ++s)
            for (Symbol a = 0; a < q_; ++a) {
                const double arg = two_pi * double(std::uint64_t(s) * a % q_) / double(q_);
                char_table_[s * q_ + a] = Complex(std::cos(arg), std::sin(arg));
            }
    }

    void add(std::uint64_t col) { bump_(col, +1); }
    void remove(std::uint64_t col) { bump_(col, -1); }

    /// ||Phi x||_1 of the current support.
    double l1() const {
        if (q_ == 2) {
            // one character per coordinate: |#zeros - #ones|, an exact integer
            std::int64_t acc = 0;
            for (std::size_t t = 0; t < n_; ++t)
                acc += std::abs(std::int64_t(counts_[t * 2]) - std::int64_t(counts_[t * 2 + 1]));
            return double(acc);
        }
        double acc = 0.0;
        for (std::size_t t = 0; t < n_; ++t) {
            for (Symbol a = 1; a < q_; ++a) {
                Complex z(0.0, 0.0);
                for (Symbol s = 0; s < q_; ++s) {
                    const int c = counts_[t * q_ + s];
                    if (c) z += double(c) * char_table_[s * q_ + a];
                }
                acc += std::abs(z);
            }
        }
        return acc;
    }

private:
    void bump_(std::uint64_t col, int delta) {
        const std::uint8_t* row = &(*table_)[col * n_];
        for (std::size_t t = 0; t < n_; ++t) counts_[t * q_ + row[t]] += delta;
    }

    Symbol q_;
    std::size_t n_;
    const std::vector<std::uint8_t>* table_;
    std::vector<int> counts_;
    std::vector<Complex> char_table_;
};

/// Walks all size-L subsets of [N] in lexicographic order.
template <class OnAdd, class OnRemove, class AtLeaf>
void walk_subsets(std::uint64_t N, std::size_t L, OnAdd&& on_add, OnRemove&& on_remove,
                  AtLeaf&& at_leaf) {
    std::vector<std::uint64_t> chosen;
    chosen.reserve(L);
    std::function<void(std::uint64_t)> rec = [&](std::uint64_t next) {
        if (chosen.size() == L) {
            at_leaf(chosen);
            return;
        }
        const std::uint64_t remaining = L - chosen.size();
        for (std::uint64_t j = next; j + remaining <= N; ++j) {
            chosen.push_back(j);
            on_add(j);
            rec(j + 1);
            on_remove(j);
            chosen.pop_back();
        }
    };
    rec(0);
}

std::size_t disagreement_count(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
    std::size_t d = 0;
    for (std::size_t j = 0; j < n; ++j) d += a[j] != b[j];
    return d;
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        default: return "boundary";
    }
}

std::string to_string(CertMode m) {
    return m == CertMode::exact ? "exact" : "greedy_lower_bound";
}

L1MaxResult max_phi_l1(const LinearCode& code, std::size_t L, std::uint64_t subset_budget) {
    if (L < 1) throw ConfigError("sparsity L must be >= 1");
    std::uint64_t N = 0;
    const auto table = codeword_table(code, N);
    if (L > N) throw ConfigError("sparsity L exceeds the number of columns");
    if (binom_capped(N, L, subset_budget) > subset_budget)
        throw SizeOverBudget("C(N, L) exceeds the subset budget");
    L1Evaluator eval(code, table);
    double best = -1.0;
    std::vector<std::uint64_t> best_support;
    walk_subsets(
        N, L, [&](std::uint64_t j) { eval.add(j); }, [&](std::uint64_t j) { eval.remove(j); },
        [&](const std::vector<std::uint64_t>& chosen) {
            const double v = eval.l1();
            if (v > best) {
                best = v;
                best_support = chosen;
            }
        });
    return {best, make_pattern(best_support, N)};
}

double max_l1_deviation(const LinearCode& code, std::size_t L, double center,
                        std::uint64_t subset_budget) {
    if (L < 1) throw ConfigError("sparsity L must be >= 1");
    if (code.q() == 2 && L == 2) {
        // ||Phi x||_1 for x = {i, j} is 2 (n - wt(c_i + c_j)), a function of
        // the nonzero difference codeword alone, so one pass over the
        // codeword multiset yields the exact maximum.
        code.num_codewords(kEnumerationBudget);
        double best = -1.0;
        CodewordEnumerator en(code);
        while (en.advance()) {  // starts past the zero message
            std::size_t w = 0;
            for (Symbol s : en.symbols()) w += s != 0;
            const double l1 = 2.0 * double(code.length() - w);
            best = std::max(best, std::abs(l1 - center));
        }
        return best;
    }
    std::uint64_t N = 0;
    const auto table = codeword_table(code, N);
    if (L > N) throw ConfigError("sparsity L exceeds the number of columns");
    if (binom_capped(N, L, subset_budget) > subset_budget)
        throw SizeOverBudget("C(N, L) exceeds the subset budget");
    L1Evaluator eval(code, table);
    double best = -1.0;
    walk_subsets(
        N, L, [&](std::uint64_t j) { eval.add(j); }, [&](std::uint64_t j) { eval.remove(j); },
        [&](const std::vector<std::uint64_t>&) { best = std::max(best, std::abs(eval.l1() - center)); });
    return best;
}

L1Certificate l1_certificate(const LinearCode& code, std::size_t L, double epsilon,
                             CertMode mode, std::uint64_t subset_budget) {
    if (L < 1) throw ConfigError("sparsity L must be >= 1");

    L1Certificate cert;
    cert.L = L;
    cert.mode = mode;
    cert.threshold = double(code.q() - 1) * double(code.length()) * epsilon;
    cert.tolerance = 1e-6 * double(code.length()) * double(code.q() - 1);

    double best = -1.0;
    if (mode == CertMode::exact) {
        L1MaxResult res = max_phi_l1(code, L, subset_budget);
        best = res.value;
        cert.witness = std::move(res.witness);
    } else {
        std::uint64_t N = 0;
        const auto table = codeword_table(code, N);
        if (L > N) throw ConfigError("sparsity L exceeds the number of columns");
        L1Evaluator eval(code, table);
        std::vector<std::uint64_t> support;
        std::vector<bool> used(N, false);
        for (std::size_t step = 0; step < L; ++step) {
            double step_best = -1.0;
            std::uint64_t pick = N;
            for (std::uint64_t j = 0; j < N; ++j) {
                if (used[j]) continue;
                eval.add(j);
                const double v = eval.l1();
                eval.remove(j);
                if (v > step_best) {  // strict: ties resolve to the lowest index
                    step_best = v;
                    pick = j;
                }
            }
            used[pick] = true;
            support.push_back(pick);
            eval.add(pick);
            best = step_best;
        }
        std::sort(support.begin(), support.end());
        cert.witness = make_pattern(std::move(support), N);
    }

    cert.value = best / double(L);
    if (cert.value < cert.threshold - cert.tolerance)
        cert.verdict = mode == CertMode::exact ? Verdict::holds : Verdict::boundary;
    else if (cert.value > cert.threshold + cert.tolerance)
        cert.verdict = Verdict::fails;
    else
        cert.verdict = Verdict::boundary;
    return cert;
}

RipReport rip_constant(const LinearCode& code, std::size_t s, std::uint64_t subset_budget) {
    if (s < 1) throw ConfigError("sparsity s must be >= 1");
    std::uint64_t N = 0;
    const auto table = codeword_table(code, N);
    if (s > N) throw ConfigError("sparsity s exceeds the number of columns");
    if (binom_capped(N, s, subset_budget) > subset_budget)
        throw SizeOverBudget("C(N, s) exceeds the subset budget");

    const std::size_t n = code.length();
    const double scale = double(code.q() - 1) * double(n);

    RipReport report;
    report.s = s;
    double best = -1.0;
    std::vector<std::uint64_t> best_subset;

    std::vector<double> gram(s * s);
    walk_subsets(
        N, s, [](std::uint64_t) {}, [](std::uint64_t) {},
        [&](const std::vector<std::uint64_t>& S) {
            for (std::size_t a = 0; a < s; ++a) {
                gram[a * s + a] = 1.0;
                for (std::size_t b = a + 1; b < s; ++b) {
                    const double d =
                        double(disagreement_count(&table[S[a] * n], &table[S[b] * n], n));
                    const double ip = scale - double(code.q()) * d;  // exact integer
                    gram[a * s + b] = gram[b * s + a] = ip / scale;
                }
            }
            const auto eig = jacobi_eigenvalues(gram, s);
            const double dev = std::max(std::abs(eig.front() - 1.0), std::abs(eig.back() - 1.0));
            if (dev > best) {
                best = dev;
                best_subset = S;
            }
        });

    report.delta = best;
    report.witness = make_pattern(best_subset, N);
    if (const auto implied = rip_implied_decodability(report.delta, s, code.q())) {
        report.implied_radius = implied->radius;
        report.boxed_radius = implied->boxed_radius;
        report.implied_list = implied->list;
    }
    return report;
}

std::optional<RipDecodability> rip_implied_decodability(double delta, std::size_t L, Symbol q) {
    if (delta < 0.0 || L < 2) throw ConfigError("need delta >= 0 and L >= 2");
    const double plotkin = 1.0 - 1.0 / double(q);
    const double general = plotkin * (1.0 - (1.0 + delta) / std::sqrt(double(L)));
    if (general <= 0.0) return std::nullopt;
    RipDecodability out;
    out.radius = general;
    out.list = L - 1;
    if (delta <= 0.5) {
        const double boxed = plotkin * (1.0 - 1.5 / std::sqrt(double(L)));
        if (boxed > 0.0) out.boxed_radius = boxed;
    }
    return out;
}

std::optional<std::size_t> radius_floor_sqrt(Symbol q, std::size_t n, std::size_t L,
                                             std::int64_t a_num, std::int64_t a_den) {
    if (L < 1 || a_den <= 0 || a_num < 0) throw ConfigError("bad radius parameters");
    // t <= n (1-1/q)(1 - a/sqrt(L))  <=>  A sqrt(L) <= B
    // with A = a_den (t q - n(q-1)), B = -n(q-1) a_num, decided exactly.
    const auto predicate = [&](std::size_t t) {
        const BigInt A = BigInt(a_den) * (BigInt(q) * t - BigInt(n) * (q - 1));
        const BigInt B = -BigInt(n) * (q - 1) * a_num;
        if (A <= 0 && B >= 0) return true;
        if (A >= 0 && B < 0) return false;
        if (A > 0) return A * A * L <= B * B;  // both nonnegative sides squared
        return B * B <= A * A * L;             // both negative: |B| <= |A| sqrt(L)
    };
    if (!predicate(0)) return std::nullopt;  // implied radius is negative
    std::size_t t = 0;
    while (t < n && predicate(t + 1)) ++t;
    return t;
}

AvgDistanceCertificate avg_distance_certificate(const LinearCode& code, std::size_t L,
                                                std::uint64_t subset_budget) {
    if (L < 2) throw ConfigError("average-distance certificate needs L >= 2");
    std::uint64_t N = 0;
    const auto table = codeword_table(code, N);
    if (L > N) throw ConfigError("sparsity L exceeds the number of columns");
    if (binom_capped(N, L, subset_budget) > subset_budget)
        throw SizeOverBudget("C(N, L) exceeds the subset budget");

    const std::size_t n = code.length();
    std::vector<std::uint64_t> current;
    std::uint64_t pair_sum = 0;  // sum of pairwise disagreement counts in `current`
    std::uint64_t best_sum = ~std::uint64_t(0);
    std::vector<std::uint64_t> best_subset;

    walk_subsets(
        N, L,
        [&](std::uint64_t j) {
            for (std::uint64_t i : current)
                pair_sum += disagreement_count(&table[i * n], &table[j * n], n);
            current.push_back(j);
        },
        [&](std::uint64_t j) {
            current.pop_back();
            for (std::uint64_t i : current)
                pair_sum -= disagreement_count(&table[i * n], &table[j * n], n);
        },
        [&](const std::vector<std::uint64_t>& S) {
            if (pair_sum < best_sum) {
                best_sum = pair_sum;
                best_subset = S;
            }
        });

    AvgDistanceCertificate cert;
    cert.L = L;
    const BigInt pairs = BigInt(L) * (L - 1) / 2;
    cert.min_avg_distance = Rational(BigInt(best_sum), pairs * BigInt(n));
    const Rational plotkin(BigInt(code.q() - 1), BigInt(code.q()));
    cert.plotkin_bound = plotkin;
    Rational eta = Rational(1) - cert.min_avg_distance / plotkin;
    if (eta < Rational(0)) eta = Rational(0);
    if (eta > Rational(1)) eta = Rational(1);
    cert.eta = eta;
    cert.epsilon_sq =
        Rational(4) * (Rational(1, L) + eta * (Rational(1) - Rational(1, L)));
    cert.epsilon = std::sqrt(to_double(cert.epsilon_sq));
    cert.vacuous = cert.epsilon_sq > Rational(1);
    cert.witness = make_pattern(best_subset, N);
    return cert;
}

ParamPlan plan_parameters(const Rational& epsilon, Symbol q, double c0, std::size_t k) {
    if (epsilon <= Rational(0) || epsilon > Rational(1))
        throw ConfigError("epsilon must lie in (0, 1]");
    if (c0 <= 0.0 || k < 1) throw ConfigError("need C0 > 0 and k >= 1");
    PrimeField field(q);  // validates q

    ParamPlan plan;
    plan.epsilon = epsilon;
    plan.q = q;
    plan.c0 = c0;
    plan.k = k;

    const Rational eps_sq = epsilon * epsilon;
    plan.L = std::uint64_t(ceil_rational(Rational(4) / eps_sq));

    const double eps_d = to_double(epsilon);
    const double ln_q = std::log(double(q));
    const double n_real = 4.0 * c0 * c0 * double(k) * ln_q / (eps_d * eps_d);
    plan.n = std::max<std::size_t>(k, std::size_t(std::ceil(n_real - 1e-12)));

    const Rational radius = Rational(BigInt(q - 1), BigInt(q)) * (Rational(1) - epsilon) *
                            Rational(BigInt(plan.n), BigInt(1));
    plan.predicted_radius = std::size_t(floor_rational(radius));

    plan.rate = double(k) / double(plan.n);
    const double ln_N = double(k) * ln_q;
    plan.margin = double(plan.n) * eps_d - double(plan.n) / std::sqrt(double(plan.L)) -
                  c0 * std::sqrt(double(plan.n) * ln_N);
    plan.satisfied = plan.margin > 0.0;
    return plan;
}

namespace {

nlohmann::json witness_json(const SparsePattern& p) { return nlohmann::json(p.support); }

}  // namespace

nlohmann::json to_json(const L1Certificate& cert) {
    return nlohmann::json{
        {"kind", "l1"},
        {"L", cert.L},
        {"value", cert.value},
        {"threshold", cert.threshold},
        {"verdict", to_string(cert.verdict)},
        {"witness", witness_json(cert.witness)},
        {"mode", to_string(cert.mode)},
        {"tolerance", cert.tolerance},
    };
}

nlohmann::json to_json(const RipReport& report) {
    nlohmann::json j{
        {"kind", "rip"},
        {"L", report.s},
        {"value", report.delta},
        {"threshold", 0.5},
        {"verdict", report.delta <= 0.5 ? "holds" : "fails"},
        {"witness", witness_json(report.witness)},
        {"mode", "exact"},
        {"tolerance", 1e-9},
    };
    j["implied_radius"] = report.implied_radius ? nlohmann::json(*report.implied_radius)
                                                : nlohmann::json(nullptr);
    j["boxed_radius"] =
        report.boxed_radius ? nlohmann::json(*report.boxed_radius) : nlohmann::json(nullptr);
    j["implied_list"] =
        report.implied_list ? nlohmann::json(*report.implied_list) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const AvgDistanceCertificate& cert) {
    nlohmann::json j{
        {"kind", "avgdist"},
        {"L", cert.L},
        {"value", to_double(cert.min_avg_distance)},
        {"threshold", to_double(cert.plotkin_bound)},
        {"verdict", cert.vacuous ? "fails" : "holds"},
        {"witness", witness_json(cert.witness)},
        {"mode", "exact"},
        {"tolerance", 0.0},
    };
    j["min_avg_distance"] = cert.min_avg_distance.numerator().str() + "/" +
                            cert.min_avg_distance.denominator().str();
    j["eta"] = cert.eta.numerator().str() + "/" + cert.eta.denominator().str();
    j["epsilon"] = cert.epsilon;
    j["vacuous"] = cert.vacuous;
    return j;
}

nlohmann::json to_json(const ParamPlan& plan) {
    return nlohmann::json{
        {"kind", "plan"},
        {"epsilon", to_double(plan.epsilon)},
        {"q", plan.q},
        {"c0", plan.c0},
        {"k", plan.k},
        {"L", plan.L},
        {"n", plan.n},
        {"predicted_radius", plan.predicted_radius},
        {"rate", plan.rate},
        {"margin", plan.margin},
        {"satisfied", plan.satisfied},
    };
}

}  // namespace ldlab
