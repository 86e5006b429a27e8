#pragma once

// Evaluation vectors, generator matrices and the exhaustive weight-spectrum
// oracle against which every closed form is checked.

#include "wdx/bigint.hpp"
#include "wdx/monomial_set.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace wdx {

/// Length-2^m bit vector packed into 64-bit words, bit j of word j/64.
class EvaluationVector {
public:
    EvaluationVector() = default;

    explicit EvaluationVector(int m) : m_(m), words_(word_count(m), 0)
    {
        check_variable_count(m);
    }

    static std::size_t word_count(int m) { return m >= 6 ? std::size_t{1} << (m - 6) : 1; }

    static EvaluationVector all_ones(int m)
    {
        EvaluationVector v(m);
        std::fill(v.words_.begin(), v.words_.end(), ~std::uint64_t{0});
        v.trim();
        return v;
    }

    int m() const { return m_; }
    std::size_t length() const { return std::size_t{1} << m_; }
    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

    bool get(std::size_t j) const { return words_[j >> 6] >> (j & 63) & 1u; }
    void set(std::size_t j, bool value = true)
    {
        const std::uint64_t bit = std::uint64_t{1} << (j & 63);
        if (value)
            words_[j >> 6] |= bit;
        else
            words_[j >> 6] &= ~bit;
    }

    int weight() const
    {
        int w = 0;
        for (auto x : words_)
            w += std::popcount(x);
        return w;
    }

    bool is_zero() const
    {
        return std::all_of(words_.begin(), words_.end(), [](auto x) { return x == 0; });
    }

    EvaluationVector& operator^=(const EvaluationVector& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] ^= o.words_[i];
        return *this;
    }

    EvaluationVector& operator&=(const EvaluationVector& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }

    friend EvaluationVector operator^(EvaluationVector a, const EvaluationVector& b) { return a ^= b; }
    friend EvaluationVector operator&(EvaluationVector a, const EvaluationVector& b) { return a &= b; }

    friend bool operator==(const EvaluationVector&, const EvaluationVector&) = default;
    friend auto operator<=>(const EvaluationVector&, const EvaluationVector&) = default;

    std::string to_string() const
    {
        std::string s;
        s.reserve(length());
        for (std::size_t j = 0; j < length(); ++j)
            s += get(j) ? '1' : '0';
        return s;
    }

private:
    void trim()
    {
        if (m_ < 6)
            words_[0] &= (std::uint64_t{1} << (std::size_t{1} << m_)) - 1;
    }

    int m_ = 1;
    std::vector<std::uint64_t> words_ = std::vector<std::uint64_t>(1, 0);
};

struct EvaluationVectorHash {
    std::size_t operator()(const EvaluationVector& v) const noexcept
    {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(v.m());
        for (auto w : v.words()) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return static_cast<std::size_t>(h ^ (h >> 33));
    }
};

/// ev(f): bit j is 1 iff j AND mask(f) = 0, i.e. row row_index(f) of the
/// m-fold Kronecker power of [[1,0],[1,1]].
inline EvaluationVector evaluate(const Monomial& f)
{
    EvaluationVector v(f.m());
    const std::uint32_t n = 1u << f.m();
    for (std::uint32_t j = 0; j < n; ++j)
        if ((j & f.mask()) == 0)
            v.set(j);
    return v;
}

/// Linear code C(I) for a decreasing monomial set I.
class CodeSpec {
public:
    explicit CodeSpec(MonomialSet info_set) : info_set_(std::move(info_set))
    {
        if (!is_decreasing(info_set_))
            throw InputError(decreasing_diagnostic(info_set_));
    }

    int m() const { return info_set_.m(); }
    std::size_t n() const { return std::size_t{1} << m(); }
    std::size_t k() const { return info_set_.size(); }
    int r() const { return info_set_.max_degree(); }
    const MonomialSet& info_set() const { return info_set_; }

    std::size_t w_min() const
    {
        if (info_set_.empty())
            throw InputError("w_min undefined for the zero code");
        return std::size_t{1} << (m() - r());
    }

    friend bool operator==(const CodeSpec&, const CodeSpec&) = default;

private:
    MonomialSet info_set_;
};

/// Sparse weight -> count map. Zero counts are never stored.
class WeightDistribution {
public:
    WeightDistribution() = default;
    WeightDistribution(std::size_t n, std::size_t k, bool complete) : n_(n), k_(k), complete_(complete) {}

    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    bool complete() const { return complete_; }
    void set_complete(bool c) { complete_ = c; }
    const std::map<std::size_t, BigInt>& counts() const { return counts_; }

    BigInt count(std::size_t w) const
    {
        auto it = counts_.find(w);
        return it == counts_.end() ? BigInt(0) : it->second;
    }

    void set(std::size_t w, const BigInt& c)
    {
        if (w > n_)
            throw InputError("weight " + std::to_string(w) + " exceeds length " + std::to_string(n_));
        if (c < 0)
            throw InputError("negative count at weight " + std::to_string(w));
        if (c == 0)
            counts_.erase(w);
        else
            counts_[w] = c;
    }

    void add(std::size_t w, const BigInt& c) { set(w, count(w) + c); }

    BigInt total() const
    {
        BigInt t = 0;
        for (const auto& [w, c] : counts_)
            t += c;
        return t;
    }

    /// Smallest nonzero weight with a nonzero count.
    std::optional<std::size_t> min_nonzero_weight() const
    {
        for (const auto& [w, c] : counts_)
            if (w > 0)
                return w;
        return std::nullopt;
    }

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

private:
    std::size_t n_ = 0;
    std::size_t k_ = 0;
    bool complete_ = false;
    std::map<std::size_t, BigInt> counts_;
};

/// Rows ev(f) for f in the information set, canonical order.
inline std::vector<EvaluationVector> generator_matrix(const CodeSpec& code)
{
    std::vector<EvaluationVector> rows;
    rows.reserve(code.k());
    for (const auto& f : code.info_set())
        rows.push_back(evaluate(f));
    return rows;
}

struct OracleOptions {
    unsigned max_k = 28;
    /// 0 = hardware concurrency.
    unsigned threads = 0;
};

/// Dimension cap from WDX_BRUTE_LIMIT when set, otherwise the fallback.
inline unsigned brute_limit_from_env(unsigned fallback = 28)
{
    if (const char* s = std::getenv("WDX_BRUTE_LIMIT")) {
        char* end = nullptr;
        const long v = std::strtol(s, &end, 10);
        if (end != s && *end == '\0' && v >= 0 && v <= 40)
            return static_cast<unsigned>(v);
        throw InputError(std::string("WDX_BRUTE_LIMIT must be an integer in [0, 40], got '") + s + "'");
    }
    return fallback;
}

namespace detail {

inline unsigned resolve_threads(unsigned requested)
{
    if (requested != 0)
        return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Histogram of weights over start + span{rows[0..low_bits)} in Gray order.
template <std::size_t W>
void gray_scan_fixed(const std::vector<std::array<std::uint64_t, W>>& rows, unsigned low_bits,
                     std::array<std::uint64_t, W> word, std::vector<std::uint64_t>& hist)
{
    auto weight = [&word] {
        unsigned w = 0;
        for (std::size_t i = 0; i < W; ++i)
            w += static_cast<unsigned>(std::popcount(word[i]));
        return w;
    };
    ++hist[weight()];
    const std::uint64_t steps = std::uint64_t{1} << low_bits;
    for (std::uint64_t s = 1; s < steps; ++s) {
        const auto& row = rows[static_cast<std::size_t>(std::countr_zero(s))];
        for (std::size_t i = 0; i < W; ++i)
            word[i] ^= row[i];
        ++hist[weight()];
    }
}

inline void gray_scan_dynamic(const std::vector<EvaluationVector>& rows, unsigned low_bits,
                              EvaluationVector word, std::vector<std::uint64_t>& hist)
{
    ++hist[static_cast<std::size_t>(word.weight())];
    const std::uint64_t steps = std::uint64_t{1} << low_bits;
    for (std::uint64_t s = 1; s < steps; ++s) {
        word ^= rows[static_cast<std::size_t>(std::countr_zero(s))];
        ++hist[static_cast<std::size_t>(word.weight())];
    }
}

/// The message space is split by fixing the top `high_bits` message bits;
/// each partition is a Gray-code walk over the remaining bits. Histograms are
/// merged by integer addition, so the result does not depend on scheduling.
template <std::size_t W>
std::vector<std::uint64_t> parallel_histogram(const std::vector<EvaluationVector>& rows, int m,
                                              unsigned threads)
{
    const auto k = static_cast<unsigned>(rows.size());
    const std::size_t n = std::size_t{1} << m;
    unsigned high_bits = 0;
    while (high_bits < k && high_bits < 12 && (1u << high_bits) < 8 * threads)
        ++high_bits;
    if (k - high_bits < 4)
        high_bits = 0;
    const unsigned low_bits = k - high_bits;
    const std::uint64_t partitions = std::uint64_t{1} << high_bits;

    std::vector<std::array<std::uint64_t, W>> packed;
    if constexpr (W > 0) {
        packed.resize(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t i = 0; i < W; ++i)
                packed[r][i] = rows[r].words()[i];
    }

    std::vector<std::uint64_t> total(n + 1, 0);
    std::mutex merge;
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        std::vector<std::uint64_t> hist(n + 1, 0);
        for (std::uint64_t p = next++; p < partitions; p = next++) {
            EvaluationVector start(m);
            for (unsigned b = 0; b < high_bits; ++b)
                if (p >> b & 1u)
                    start ^= rows[low_bits + b];
            if constexpr (W > 0) {
                std::array<std::uint64_t, W> word{};
                for (std::size_t i = 0; i < W; ++i)
                    word[i] = start.words()[i];
                gray_scan_fixed<W>(packed, low_bits, word, hist);
            } else {
                gray_scan_dynamic(rows, low_bits, start, hist);
            }
        }
        std::lock_guard lock(merge);
        for (std::size_t w = 0; w <= n; ++w)
            total[w] += hist[w];
    };

    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, partitions));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    return total;
}

} // namespace detail

/// Exact complete weight distribution by enumerating all 2^K codewords.
inline WeightDistribution brute_force_wd(const CodeSpec& code, const OracleOptions& options = {})
{
    if (code.k() > options.max_k)
        throw ResourceError("brute-force oracle: dimension K=" + std::to_string(code.k())
                            + " exceeds the configured limit " + std::to_string(options.max_k)
                            + "; raise the limit to at least " + std::to_string(code.k()));
    const auto rows = generator_matrix(code);
    const unsigned threads = detail::resolve_threads(options.threads);
    std::vector<std::uint64_t> hist;
    switch (EvaluationVector::word_count(code.m())) {
    case 1: hist = detail::parallel_histogram<1>(rows, code.m(), threads); break;
    case 2: hist = detail::parallel_histogram<2>(rows, code.m(), threads); break;
    case 4: hist = detail::parallel_histogram<4>(rows, code.m(), threads); break;
    case 8: hist = detail::parallel_histogram<8>(rows, code.m(), threads); break;
    default: hist = detail::parallel_histogram<0>(rows, code.m(), threads); break;
    }
    WeightDistribution wd(code.n(), code.k(), true);
    for (std::size_t w = 0; w < hist.size(); ++w)
        if (hist[w])
            wd.set(w, BigInt(hist[w]));
    return wd;
}

/// Every codeword of weight exactly w.
inline std::vector<EvaluationVector> weight_class(const CodeSpec& code, std::size_t w, unsigned max_k = 20)
{
    if (code.k() > max_k)
        throw ResourceError("weight_class: dimension K=" + std::to_string(code.k())
                            + " exceeds the structural limit " + std::to_string(max_k));
    const auto rows = generator_matrix(code);
    std::vector<EvaluationVector> out;
    EvaluationVector word(code.m());
    if (w == 0)
        out.push_back(word);
    const std::uint64_t steps = std::uint64_t{1} << rows.size();
    for (std::uint64_t s = 1; s < steps; ++s) {
        word ^= rows[static_cast<std::size_t>(std::countr_zero(s))];
        if (static_cast<std::size_t>(word.weight()) == w)
            out.push_back(word);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace wdx
