#include "ldlab/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "ldlab/linalg.hpp"
#include "ldlab/simplex.hpp"

namespace ldlab {

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap,
                          const char* what) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (v > cap / base) throw SizeOverBudget(what);
        v *= base;
    }
    if (v > cap) throw SizeOverBudget(what);
    return v;
}

/// Coordinates the representative enumeration ranges over: all of [n] for the
/// exhaustive method, the non-pivot (free) coordinates of the row space for
/// the coset method.  Representatives are words supported on those
/// coordinates, visited in lexicographic word order.
std::vector<std::size_t> representative_support(const LinearCode& code, SearchMethod method) {
    std::vector<std::size_t> coords;
    if (method == SearchMethod::exhaustive) {
        coords.resize(code.length());
        for (std::size_t j = 0; j < code.length(); ++j) coords[j] = j;
        return coords;
    }
    const GfRref rref =
        gf_rref(code.field(), code.generator(), code.dimension(), code.length());
    std::size_t p = 0;
    for (std::size_t j = 0; j < code.length(); ++j) {
        if (p < rref.pivot_cols.size() && rref.pivot_cols[p] == j)
            ++p;
        else
            coords.push_back(j);
    }
    return coords;
}

void check_budgets(const LinearCode& code, std::size_t free_coords) {
    const std::uint64_t reps =
        checked_pow(code.q(), free_coords, kWordBudget, "representative count over budget");
    const std::uint64_t n_codewords = code.num_codewords(kEnumerationBudget);
    if (reps > kDistanceEvalBudget / n_codewords)
        throw SizeOverBudget("distance evaluation count over budget");
}

// ---- q = 2, n <= 64: words as bitmasks, coordinate j at bit n-1-j so that
// ascending mask order is lexicographic word order.

std::vector<std::uint64_t> codeword_masks(const LinearCode& code) {
    const std::size_t n = code.length(), k = code.dimension();
    std::vector<std::uint64_t> rows(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (code.gen(i, j)) rows[i] |= std::uint64_t(1) << (n - 1 - j);
    const std::uint64_t N = code.num_codewords(kEnumerationBudget);
    std::vector<std::uint64_t> cw(N, 0);
    // odometer in message order: every changed digit XORs its row
    std::vector<unsigned> digits(k, 0);
    std::uint64_t cur = 0;
    for (std::uint64_t idx = 1; idx < N; ++idx) {
        std::size_t j = k;
        while (j > 0) {
            --j;
            cur ^= rows[j];
            if (digits[j] == 0) {
                digits[j] = 1;
                break;
            }
            digits[j] = 0;
        }
        cw[idx] = cur;
    }
    return cw;
}

Word word_from_mask(std::uint64_t mask, std::size_t n) {
    Word w(n, 0);
    for (std::size_t j = 0; j < n; ++j) w[j] = Symbol((mask >> (n - 1 - j)) & 1);
    return w;
}

struct SearchResult {
    std::vector<std::uint64_t> profile;  // max_list per radius
    std::vector<Word> witness;           // first (lex-least) maximizer per radius
};

SearchResult binary_search_all(const LinearCode& code, const std::vector<std::size_t>& coords) {
    const std::size_t n = code.length(), nf = coords.size();
    const std::vector<std::uint64_t> cw = codeword_masks(code);
    const std::uint64_t reps = std::uint64_t(1) << nf;
    SearchResult res;
    res.profile.assign(n + 1, 0);
    res.witness.assign(n + 1, Word());
    std::vector<std::uint64_t> hist(n + 1);
    std::vector<std::uint64_t> bit_of(nf);
    for (std::size_t d = 0; d < nf; ++d) bit_of[d] = std::uint64_t(1) << (n - 1 - coords[d]);
    for (std::uint64_t i = 0; i < reps; ++i) {
        std::uint64_t w = 0;
        for (std::size_t d = 0; d < nf; ++d)
            if ((i >> (nf - 1 - d)) & 1) w |= bit_of[d];
        std::fill(hist.begin(), hist.end(), 0);
        for (std::uint64_t c : cw) ++hist[std::uint64_t(std::popcount(w ^ c))];
        std::uint64_t acc = 0;
        for (std::size_t t = 0; t <= n; ++t) {
            acc += hist[t];
            if (acc > res.profile[t]) {
                res.profile[t] = acc;
                res.witness[t] = word_from_mask(w, n);
            }
        }
    }
    return res;
}

// ---- general q: codewords materialized as packed byte rows.

SearchResult general_search_all(const LinearCode& code, const std::vector<std::size_t>& coords) {
    const std::size_t n = code.length(), nf = coords.size();
    const Symbol q = code.q();
    const std::uint64_t N = code.num_codewords(kEnumerationBudget);
    if (q > 255 || N * n > (std::uint64_t(1) << 28))
        throw SizeOverBudget("codeword table too large to materialize");
    std::vector<std::uint8_t> table(N * n);
    {
        CodewordEnumerator en(code);
        std::uint64_t idx = 0;
        do {
            for (std::size_t j = 0; j < n; ++j) table[idx * n + j] = std::uint8_t(en.symbols()[j]);
            ++idx;
        } while (en.advance());
    }
    SearchResult res;
    res.profile.assign(n + 1, 0);
    res.witness.assign(n + 1, Word());
    std::uint64_t reps = 1;
    for (std::size_t d = 0; d < nf; ++d) reps *= q;  // <= kWordBudget, checked upstream
    std::vector<std::uint64_t> hist(n + 1);
    std::vector<std::uint8_t> w(n, 0);
    std::vector<Symbol> digits(nf, 0);
    for (std::uint64_t i = 0; i < reps; ++i) {
        std::fill(hist.begin(), hist.end(), 0);
        for (std::uint64_t c = 0; c < N; ++c) {
            const std::uint8_t* row = &table[c * n];
            std::size_t d = 0;
            for (std::size_t j = 0; j < n; ++j) d += row[j] != w[j];
            ++hist[d];
        }
        std::uint64_t acc = 0;
        for (std::size_t t = 0; t <= n; ++t) {
            acc += hist[t];
            if (acc > res.profile[t]) {
                res.profile[t] = acc;
                res.witness[t].assign(w.begin(), w.end());
            }
        }
        // next representative in lexicographic order (last coordinate fastest)
        if (i + 1 < reps) {
            std::size_t d = nf;
            while (d > 0) {
                --d;
                if (digits[d] + 1 < q) {
                    ++digits[d];
                    w[coords[d]] = std::uint8_t(digits[d]);
                    break;
                }
                digits[d] = 0;
                w[coords[d]] = 0;
            }
        }
    }
    return res;
}

SearchResult search_all(const LinearCode& code, SearchMethod method) {
    const auto coords = representative_support(code, method);
    check_budgets(code, coords.size());
    if (code.q() == 2 && code.length() <= 64) return binary_search_all(code, coords);
    return general_search_all(code, coords);
}

}  // namespace

std::uint64_t list_size_at(const LinearCode& code, const Word& w, std::size_t t,
                           std::uint64_t budget) {
    if (w.size() != code.length()) throw LengthMismatch("received word length != n");
    if (t > code.length()) throw ConfigError("radius t out of range");
    for (Symbol s : w)
        if (s >= code.q()) throw SymbolOutOfRange("received word symbol out of range");
    code.num_codewords(budget);
    std::uint64_t count = 0;
    CodewordEnumerator en(code);
    do {
        std::size_t d = 0;
        const Word& c = en.symbols();
        for (std::size_t j = 0; j < w.size(); ++j) d += c[j] != w[j];
        count += d <= t;
    } while (en.advance());
    return count;
}

ListDecodingReport worst_case_list_size(const LinearCode& code, std::size_t t,
                                        SearchMethod method) {
    if (t > code.length()) throw ConfigError("radius t out of range");
    const SearchResult res = search_all(code, method);
    return ListDecodingReport{t, res.profile[t], res.witness[t], method};
}

std::vector<std::uint64_t> worst_case_profile(const LinearCode& code, SearchMethod method) {
    return search_all(code, method).profile;
}

Decodability is_list_decodable(const LinearCode& code, std::size_t t, std::uint64_t L,
                               SearchMethod method) {
    const ListDecodingReport rep = worst_case_list_size(code, t, method);
    Decodability d;
    d.max_list = rep.max_list;
    d.decodable = rep.max_list <= L;
    if (!d.decodable) d.witness = rep.witness;
    return d;
}

namespace {

bool equivalence_pass(const LinearCode& code, std::optional<std::size_t> only_t) {
    const Symbol q = code.q();
    const std::size_t n = code.length();
    checked_pow(q, n, kWordBudget, "word space over budget");
    const std::uint64_t N = code.num_codewords(kEnumerationBudget);
    // encoded codeword columns, materialized once
    std::vector<ComplexVec> cols;
    cols.reserve(N);
    std::vector<Word> words;
    words.reserve(N);
    {
        CodewordEnumerator en(code);
        do {
            words.push_back(en.symbols());
            cols.push_back(encode_word(q, en.symbols()));
        } while (en.advance());
    }
    const double tol = 1e-6;
    Word w(n, 0);
    for (;;) {
        const ComplexVec fw = encode_word(q, w);
        for (std::uint64_t ci = 0; ci < N; ++ci) {
            std::size_t cnt = 0;
            for (std::size_t j = 0; j < n; ++j) cnt += words[ci][j] != w[j];
            Complex z(0, 0);
            const ComplexVec& fc = cols[ci];
            for (std::size_t i = 0; i < fw.size(); ++i) z += fw[i] * std::conj(fc[i]);
            const double expected =
                double((std::int64_t(q) - 1) * std::int64_t(n) - std::int64_t(q) * std::int64_t(cnt));
            if (std::abs(z.imag()) > tol || std::abs(z.real() - expected) > tol) return false;
            if (only_t) {
                const double threshold =
                    double((std::int64_t(q) - 1) * std::int64_t(n)) - double(q) * double(*only_t);
                const bool by_distance = cnt <= *only_t;
                const bool by_inner = z.real() >= threshold - 0.5;
                if (by_distance != by_inner) return false;
            }
            // |z - expected| <= tol < 1/2 classifies identically at every
            // integer radius, so no per-t loop is needed here
        }
        std::size_t j = n;
        bool carried = true;
        while (j > 0 && carried) {
            --j;
            if (w[j] + 1 < q) {
                ++w[j];
                carried = false;
            } else {
                w[j] = 0;
            }
        }
        if (carried) break;
    }
    return true;
}

}  // namespace

bool char_equivalence_check(const LinearCode& code, std::size_t t) {
    if (t > code.length()) throw ConfigError("radius t out of range");
    return equivalence_pass(code, t);
}

bool char_equivalence_all_radii(const LinearCode& code) { return equivalence_pass(code, std::nullopt); }

nlohmann::json to_json(const ListDecodingReport& report) {
    return nlohmann::json{
        {"t", report.t},
        {"max_list", report.max_list},
        {"witness", report.witness},
        {"method", report.method == SearchMethod::coset ? "coset" : "exhaustive"},
    };
}

}  // namespace ldlab
