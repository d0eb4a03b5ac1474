#include "ldlab/code.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ldlab/rng.hpp"

namespace ldlab {

LinearCode::LinearCode(Symbol q, std::size_t k, std::size_t n, std::vector<Symbol> generator)
    : field_(q), k_(k), n_(n), gen_(std::move(generator)) {
    if (k_ < 1 || n_ < 1) throw ConfigError("code dimensions must satisfy k >= 1, n >= 1");
    if (gen_.size() != k_ * n_) throw ConfigError("generator size does not match k x n");
    for (Symbol s : gen_)
        if (s >= q) throw SymbolOutOfRange("generator entry out of range for F_q");
}

bool LinearCode::size_within(std::uint64_t cap) const {
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < k_; ++i) {
        if (size > cap / q()) return false;
        size *= q();
    }
    return size <= cap;
}

std::uint64_t LinearCode::num_codewords(std::uint64_t cap) const {
    if (!size_within(cap))
        throw SizeOverBudget("q^k exceeds enumeration budget " + std::to_string(cap));
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < k_; ++i) size *= q();
    return size;
}

Word LinearCode::encode(const Word& message) const {
    if (message.size() != k_) throw LengthMismatch("message length != k");
    Word out(n_, 0);
    for (std::size_t i = 0; i < k_; ++i) {
        const Symbol m = message[i];
        if (m >= q()) throw SymbolOutOfRange("message symbol out of range");
        if (m == 0) continue;
        for (std::size_t t = 0; t < n_; ++t)
            out[t] = field_.add(out[t], field_.mul(m, gen_[i * n_ + t]));
    }
    return out;
}

Word LinearCode::message_at(std::uint64_t index) const {
    Word msg(k_, 0);
    for (std::size_t j = 0; j < k_; ++j) {
        msg[k_ - 1 - j] = Symbol(index % q());
        index /= q();
    }
    if (index != 0) throw IndexOutOfRange("message index out of range");
    return msg;
}

Word LinearCode::codeword_at(std::uint64_t index) const { return encode(message_at(index)); }

CodewordEnumerator::CodewordEnumerator(const LinearCode& code)
    : code_(&code), digits_(code.dimension(), 0), word_(code.length(), 0) {}

bool CodewordEnumerator::advance() {
    // Odometer step.  Every changed digit position j contributes +row_j:
    // a digit rolling q-1 -> 0 changes by -(q-1) = +1 mod q, and the digit
    // that increments changes by +1.
    const Symbol q = code_->q();
    const std::size_t k = code_->dimension(), n = code_->length();
    const PrimeField& f = code_->field();
    std::size_t j = k;
    while (j > 0) {
        --j;
        const bool carry = digits_[j] == q - 1;
        digits_[j] = carry ? 0 : digits_[j] + 1;
        for (std::size_t t = 0; t < n; ++t) word_[t] = f.add(word_[t], code_->gen(j, t));
        if (!carry) {
            ++index_;
            return true;
        }
    }
    return false;  // wrapped around to the zero message
}

HammingDistance hamming_distance(const Word& x, const Word& y) {
    if (x.size() != y.size()) throw LengthMismatch("words of unequal length");
    std::size_t count = 0;
    for (std::size_t i = 0; i < x.size(); ++i) count += x[i] != y[i];
    return {count, Rational(BigInt(count), BigInt(x.size()))};
}

LinearCode random_generator(Symbol q, std::size_t k, std::size_t n, std::uint64_t seed) {
    PrimeField field(q);  // validates primality before drawing
    Rng rng(seed);
    std::vector<Symbol> gen(k * n);
    for (std::size_t t = 0; t < n; ++t)  // column by column: one column per draw position
        for (std::size_t i = 0; i < k; ++i) gen[i * n + t] = Symbol(rng.below(q));
    return LinearCode(q, k, n, std::move(gen));
}

std::vector<Codeword> enumerate_codewords(const LinearCode& code, std::uint64_t budget) {
    const std::uint64_t size = code.num_codewords(budget);
    std::vector<Codeword> out;
    out.reserve(size);
    CodewordEnumerator en(code);
    do {
        out.push_back({en.symbols(), en.message()});
    } while (en.advance());
    return out;
}

LinearCode reed_muller(unsigned r, unsigned m) {
    if (r > m || m > 20) throw ConfigError("reed_muller requires 0 <= r <= m <= 20");
    // monomials of degree <= r, by degree then lex on sorted variable sets
    std::vector<std::uint32_t> monomials;
    for (unsigned d = 0; d <= r; ++d) {
        std::vector<unsigned> idx(d);
        for (unsigned i = 0; i < d; ++i) idx[i] = i;
        if (d == 0) {
            monomials.push_back(0);
            continue;
        }
        if (d > m) break;
        for (;;) {
            std::uint32_t mask = 0;
            for (unsigned i : idx) mask |= 1u << i;
            monomials.push_back(mask);
            // next combination
            int p = int(d) - 1;
            while (p >= 0 && idx[p] == m - d + p) --p;
            if (p < 0) break;
            ++idx[p];
            for (unsigned i = p + 1; i < d; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    const std::size_t k = monomials.size();
    const std::size_t n = std::size_t(1) << m;
    if (k > 24) throw SizeOverBudget("RM dimension exceeds the enumeration budget");
    std::vector<Symbol> gen(k * n);
    for (std::size_t row = 0; row < k; ++row) {
        const std::uint32_t mask = monomials[row];
        for (std::size_t p = 0; p < n; ++p)
            gen[row * n + p] = (std::uint32_t(p) & mask) == mask ? 1 : 0;
    }
    return LinearCode(2, k, n, std::move(gen));
}

namespace {

template <class Fn>
void for_each_weight(const LinearCode& code, std::uint64_t budget, Fn&& fn) {
    code.num_codewords(budget);
    CodewordEnumerator en(code);
    do {
        std::size_t w = 0;
        for (Symbol s : en.symbols()) w += s != 0;
        fn(w);
    } while (en.advance());
}

}  // namespace

std::size_t min_distance(const LinearCode& code, std::uint64_t budget) {
    // smallest weight over nonzero messages; 0 exactly when the multiset has
    // duplicate codewords
    std::size_t best = code.length() + 1;
    bool first = true;
    for_each_weight(code, budget, [&](std::size_t w) {
        if (first) {
            first = false;  // skip the zero message
            return;
        }
        best = std::min(best, w);
    });
    return best == code.length() + 1 ? 0 : best;
}

WeightProfile weight_profile(const LinearCode& code, std::uint64_t budget) {
    WeightProfile p;
    for_each_weight(code, budget, [&](std::size_t w) { ++p.counts[w]; });
    return p;
}

std::uint64_t low_weight_count(const LinearCode& code, std::size_t w, std::uint64_t budget) {
    std::uint64_t count = 0;
    for_each_weight(code, budget, [&](std::size_t weight) { count += weight <= w; });
    return count;
}

LinearCode puncture(const LinearCode& code, std::size_t n_out, std::uint64_t seed,
                    PunctureVariant variant) {
    if (n_out < 1) throw ConfigError("punctured length must be >= 1");
    Rng rng(seed);
    std::vector<std::size_t> positions;
    if (variant == PunctureVariant::multiset) {
        positions.reserve(n_out);
        for (std::size_t i = 0; i < n_out; ++i)
            positions.push_back(std::size_t(rng.below(code.length())));
    } else {
        const double p = double(n_out) / double(code.length());
        for (std::size_t i = 0; i < code.length(); ++i)
            if (rng.unit() < p) positions.push_back(i);
        if (positions.empty()) positions.push_back(std::size_t(rng.below(code.length())));
    }
    return puncture_with_positions(code, positions);
}

LinearCode puncture_with_positions(const LinearCode& code,
                                   const std::vector<std::size_t>& positions) {
    if (positions.empty()) throw ConfigError("empty coordinate multiset");
    const std::size_t k = code.dimension();
    std::vector<Symbol> gen(k * positions.size());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < positions.size(); ++j) {
            if (positions[j] >= code.length()) throw IndexOutOfRange("puncture position out of range");
            gen[i * positions.size() + j] = code.gen(i, positions[j]);
        }
    return LinearCode(code.q(), k, positions.size(), std::move(gen));
}

LinearCode wozencraft(unsigned k, unsigned r, std::uint64_t seed) {
    BinaryExtField field(k);
    Rng rng(seed);
    std::vector<std::uint32_t> alphas(r);
    for (auto& a : alphas) a = std::uint32_t(rng.below(field.size()));
    return wozencraft_with_multipliers(field, alphas);
}

LinearCode wozencraft_with_multipliers(const BinaryExtField& field,
                                       const std::vector<std::uint32_t>& multipliers) {
    const unsigned k = field.degree();
    const std::size_t blocks = multipliers.size() + 1;
    const std::size_t n = blocks * k;
    std::vector<Symbol> gen(std::size_t(k) * n);
    for (unsigned i = 0; i < k; ++i) {
        const std::uint32_t e = 1u << i;  // message bit i as a field element
        for (std::size_t b = 0; b < blocks; ++b) {
            const std::uint32_t v = b == 0 ? e : field.mul(multipliers[b - 1], e);
            for (unsigned bit = 0; bit < k; ++bit)
                gen[i * n + b * k + bit] = (v >> bit) & 1;
        }
    }
    return LinearCode(2, k, n, std::move(gen));
}

Rational full_rank_probability(Symbol q, std::size_t k, std::size_t n) {
    if (k > n) return Rational(0);
    Rational p(1);
    for (std::size_t r = 0; r < k; ++r) {
        const BigInt d = big_pow(q, n - r);  // 1 - q^(r-n) = (q^(n-r) - 1) / q^(n-r)
        p *= Rational(d - 1, d);
    }
    return p;
}

std::string to_gen_string(const LinearCode& code) {
    std::ostringstream os;
    os << code.q() << ' ' << code.dimension() << ' ' << code.length() << '\n';
    for (std::size_t i = 0; i < code.dimension(); ++i) {
        for (std::size_t j = 0; j < code.length(); ++j) {
            if (j) os << ' ';
            os << code.gen(i, j);
        }
        os << '\n';
    }
    return os.str();
}

LinearCode from_gen_string(const std::string& text) {
    std::istringstream is(text);
    std::uint64_t q = 0, k = 0, n = 0;
    if (!(is >> q >> k >> n)) throw IoError("bad .gen header");
    if (q < 2 || k < 1 || n < 1) throw IoError("bad .gen dimensions");
    std::vector<Symbol> gen(k * n);
    for (auto& s : gen) {
        std::uint64_t v = 0;
        if (!(is >> v)) throw IoError(".gen matrix body truncated");
        if (v >= q) throw IoError(".gen entry out of range");
        s = Symbol(v);
    }
    std::uint64_t extra = 0;
    if (is >> extra) throw IoError("trailing data in .gen file");
    return LinearCode(Symbol(q), k, n, std::move(gen));
}

void save_generator(const LinearCode& code, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << to_gen_string(code);
    if (!f) throw IoError("write failed: " + path);
}

LinearCode load_generator(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return from_gen_string(buf.str());
}

}  // namespace ldlab
