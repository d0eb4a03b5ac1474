#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ldlab/code.hpp"

#include "json.hpp"

namespace ldlab {

enum class SearchMethod { coset, exhaustive };

/// Exhaustive word / coset-representative cap.
inline constexpr std::uint64_t kWordBudget = std::uint64_t(1) << 24;
/// Product guard: representatives x codewords distance evaluations.
inline constexpr std::uint64_t kDistanceEvalBudget = std::uint64_t(1) << 30;

struct ListDecodingReport {
    std::size_t t = 0;
    std::uint64_t max_list = 0;
    Word witness;          // attains max_list; lexicographically least in the enumerated set
    SearchMethod method = SearchMethod::exhaustive;
};

/// Codewords (with multiplicity) within Hamming distance t of w.
std::uint64_t list_size_at(const LinearCode& code, const Word& w, std::size_t t,
                           std::uint64_t budget = kEnumerationBudget);

/// Worst case of list_size_at over all received words.  The coset method
/// enumerates one representative per coset of the code's row space (distance
/// multisets are coset-invariant); works for rank-deficient generators too,
/// using the row-space rank for the transversal.
ListDecodingReport worst_case_list_size(const LinearCode& code, std::size_t t,
                                        SearchMethod method = SearchMethod::coset);

/// max_list for every radius t = 0..n in a single pass (distance histograms
/// per representative).  Same budgets as worst_case_list_size.
std::vector<std::uint64_t> worst_case_profile(const LinearCode& code,
                                              SearchMethod method = SearchMethod::coset);

struct Decodability {
    bool decodable = false;
    std::uint64_t max_list = 0;
    std::optional<Word> witness;  // populated when not decodable
};

Decodability is_list_decodable(const LinearCode& code, std::size_t t, std::uint64_t L,
                               SearchMethod method = SearchMethod::coset);

/// Verifies that the distance definition and the inner-product reading agree:
/// for every word w and codeword c,  d(w,c) <= t/n  iff
/// <phi(w), phi(c)> >= (q-1)n - q t,  with the inner product evaluated by
/// direct complex summation.  Any discrepancy is an implementation bug.
bool char_equivalence_check(const LinearCode& code, std::size_t t);

/// One pass establishing the equivalence for all radii simultaneously.
bool char_equivalence_all_radii(const LinearCode& code);

nlohmann::json to_json(const ListDecodingReport& report);

}  // namespace ldlab
