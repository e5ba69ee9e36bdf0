#include "copart/series.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace copart {

namespace {

void require_trunc(int N, const char* what)
{
    if (N < 0) {
        throw std::invalid_argument(std::string(what) + ": truncation must be >= 0, got " +
                                    std::to_string(N));
    }
}

std::size_t word_count(int trunc)
{
    return static_cast<std::size_t>(trunc) / ParitySeries::kWordBits + 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// ExactSeries

ExactSeries ExactSeries::one(int trunc)
{
    require_trunc(trunc, "ExactSeries::one");
    std::vector<BigInt> c(static_cast<std::size_t>(trunc) + 1);
    c[0] = 1;
    return ExactSeries(std::move(c));
}

ExactSeries ExactSeries::zero(int trunc)
{
    require_trunc(trunc, "ExactSeries::zero");
    return ExactSeries(std::vector<BigInt>(static_cast<std::size_t>(trunc) + 1));
}

ExactSeries ExactSeries::from_coeffs(std::vector<BigInt> coeffs)
{
    if (coeffs.empty()) {
        throw std::invalid_argument("ExactSeries needs at least one coefficient");
    }
    return ExactSeries(std::move(coeffs));
}

ExactSeries ExactSeries::truncated(int n) const
{
    if (n < 0 || n > trunc()) {
        throw std::invalid_argument("cannot truncate a series known through q^" +
                                    std::to_string(trunc()) + " at q^" + std::to_string(n));
    }
    return ExactSeries(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + n + 1));
}

// ---------------------------------------------------------------------------
// ParitySeries

ParitySeries ParitySeries::zero(int trunc)
{
    require_trunc(trunc, "ParitySeries::zero");
    return ParitySeries(std::vector<Word>(word_count(trunc), 0), trunc);
}

ParitySeries ParitySeries::one(int trunc)
{
    auto s = zero(trunc);
    s.words_[0] = 1;
    return s;
}

ParitySeries ParitySeries::indicator(std::span<const int> exponents, int trunc)
{
    auto s = zero(trunc);
    for (int e : exponents) {
        if (e < 0) {
            throw std::invalid_argument("indicator exponent must be >= 0");
        }
        if (e <= trunc) {
            s.set(e, true);
        }
    }
    return s;
}

ParitySeries ParitySeries::from_words(std::vector<Word> words, int trunc)
{
    require_trunc(trunc, "ParitySeries::from_words");
    if (words.size() != word_count(trunc)) {
        throw std::invalid_argument("word count does not match truncation");
    }
    ParitySeries s(std::move(words), trunc);
    s.clear_tail();
    return s;
}

bool ParitySeries::operator[](int n) const
{
    if (n < 0 || n > trunc_) {
        throw std::out_of_range("parity index " + std::to_string(n) + " outside [0, " +
                                std::to_string(trunc_) + "]");
    }
    return (words_[static_cast<std::size_t>(n) / kWordBits] >> (n % kWordBits)) & 1U;
}

void ParitySeries::set(int n, bool value)
{
    if (n < 0 || n > trunc_) {
        throw std::out_of_range("parity index outside the truncation");
    }
    const Word bit = Word{1} << (n % kWordBits);
    auto& w = words_[static_cast<std::size_t>(n) / kWordBits];
    w = value ? (w | bit) : (w & ~bit);
}

std::size_t ParitySeries::count_odd(int lo, int hi) const
{
    lo = std::max(lo, 0);
    hi = std::min(hi, trunc_);
    if (lo > hi) {
        return 0;
    }
    const std::size_t first = static_cast<std::size_t>(lo) / kWordBits;
    const std::size_t last = static_cast<std::size_t>(hi) / kWordBits;
    std::size_t total = 0;
    for (std::size_t i = first; i <= last; ++i) {
        Word w = words_[i];
        if (i == first) {
            w &= ~Word{0} << (lo % kWordBits);
        }
        if (i == last && hi % kWordBits != kWordBits - 1) {
            w &= (Word{1} << (hi % kWordBits + 1)) - 1;
        }
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

std::vector<int> ParitySeries::support() const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        Word w = words_[i];
        while (w != 0) {
            const int bit = std::countr_zero(w);
            out.push_back(static_cast<int>(i) * kWordBits + bit);
            w &= w - 1;
        }
    }
    return out;
}

ParitySeries ParitySeries::truncated(int n) const
{
    if (n < 0 || n > trunc_) {
        throw std::invalid_argument("cannot truncate a parity series known through q^" +
                                    std::to_string(trunc_) + " at q^" + std::to_string(n));
    }
    std::vector<Word> w(words_.begin(), words_.begin() + static_cast<std::ptrdiff_t>(word_count(n)));
    ParitySeries s(std::move(w), n);
    s.clear_tail();
    return s;
}

void ParitySeries::clear_tail()
{
    const int used = (trunc_ % kWordBits) + 1;
    if (used < kWordBits) {
        words_.back() &= (Word{1} << used) - 1;
    }
}

// words ^= words << shift, processed from the top so lower words are still unmodified
// when read.
void ParitySeries::xor_shifted_self(int shift)
{
    if (shift <= 0 || shift > trunc_) {
        return;
    }
    const std::size_t wshift = static_cast<std::size_t>(shift) / kWordBits;
    const int bshift = shift % kWordBits;
    for (std::size_t i = words_.size(); i-- > wshift;) {
        Word v = words_[i - wshift] << bshift;
        if (bshift != 0 && i > wshift) {
            v |= words_[i - wshift - 1] >> (kWordBits - bshift);
        }
        words_[i] ^= v;
    }
    clear_tail();
}

void ParitySeries::mul_binomial(int e)
{
    if (e < 1) {
        throw std::invalid_argument("binomial exponent must be >= 1");
    }
    xor_shifted_self(e);
}

void ParitySeries::div_binomial(int e)
{
    if (e < 1) {
        throw std::invalid_argument("binomial exponent must be >= 1");
    }
    for (long s = e; s <= trunc_; s *= 2) {
        xor_shifted_self(static_cast<int>(s));
    }
}

ParitySeries& ParitySeries::operator^=(const ParitySeries& other)
{
    if (other.trunc_ != trunc_) {
        throw std::invalid_argument("truncation mismatch: q^" + std::to_string(trunc_) +
                                    " vs q^" + std::to_string(other.trunc_));
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

// ---------------------------------------------------------------------------
// Factor expansion

FactorSpec FactorSpec::make(int c, int m, Kind kind)
{
    if (c < 1 || m < 1) {
        throw std::invalid_argument("factor (q^" + std::to_string(c) + ";q^" + std::to_string(m) +
                                    ") needs c >= 1 and m >= 1");
    }
    return FactorSpec{c, m, kind};
}

namespace {

void validate(std::span<const FactorSpec> factors)
{
    for (const auto& f : factors) {
        if (f.c < 1 || f.m < 1) {
            throw std::invalid_argument("invalid factor specification");
        }
    }
}

}  // namespace

ExactSeries expand_factors(std::span<const FactorSpec> factors, int N)
{
    require_trunc(N, "expand_factors");
    validate(factors);
    std::vector<BigInt> c(static_cast<std::size_t>(N) + 1);
    c[0] = 1;
    for (const auto& f : factors) {
        for (long e = f.c; e <= N; e += f.m) {
            const auto step = static_cast<std::size_t>(e);
            switch (f.kind) {
            case FactorSpec::Kind::reciprocal:
                for (std::size_t j = step; j <= static_cast<std::size_t>(N); ++j) {
                    c[j] += c[j - step];
                }
                break;
            case FactorSpec::Kind::pochhammer:
                for (std::size_t j = static_cast<std::size_t>(N); j >= step; --j) {
                    c[j] -= c[j - step];
                }
                break;
            case FactorSpec::Kind::negated_pochhammer:
                for (std::size_t j = static_cast<std::size_t>(N); j >= step; --j) {
                    c[j] += c[j - step];
                }
                break;
            }
        }
    }
    return ExactSeries::from_coeffs(std::move(c));
}

ParitySeries expand_factors_mod2(std::span<const FactorSpec> factors, int N)
{
    require_trunc(N, "expand_factors_mod2");
    validate(factors);
    auto s = ParitySeries::one(N);
    for (const auto& f : factors) {
        for (long e = f.c; e <= N; e += f.m) {
            if (f.kind == FactorSpec::Kind::reciprocal) {
                s.div_binomial(static_cast<int>(e));
            } else {
                // 1 - q^e and 1 + q^e agree mod 2.
                s.mul_binomial(static_cast<int>(e));
            }
        }
    }
    return s;
}

std::vector<FactorSpec> cp_factors(const CpParams& p)
{
    return {FactorSpec::reciprocal(p.a(), p.m()), FactorSpec::reciprocal(p.b(), p.m()),
            FactorSpec::pochhammer(p.a() + p.b(), p.m())};
}

ExactSeries cp_series(const CpParams& params, int N)
{
    return expand_factors(cp_factors(params), N);
}

ParitySeries cp_parity(const CpParams& params, int N)
{
    return expand_factors_mod2(cp_factors(params), N);
}

namespace {

FactorSpec scp_factor(int a, int m)
{
    if (a < 1 || m < 1) {
        throw std::invalid_argument("self-conjugate series needs a >= 1 and m >= 1");
    }
    return FactorSpec::negated_pochhammer(m + 2 * a, 2 * m);
}

}  // namespace

ExactSeries scp_series(int a, int m, int N)
{
    const FactorSpec f[] = {scp_factor(a, m)};
    return expand_factors(f, N);
}

ParitySeries scp_parity(int a, int m, int N)
{
    const FactorSpec f[] = {scp_factor(a, m)};
    return expand_factors_mod2(f, N);
}

ExactSeries theta_denominator_series(int a, int m, int N)
{
    require_trunc(N, "theta_denominator_series");
    if (a < 1 || m < 1 || a > m) {
        throw std::invalid_argument("theta_denominator_series needs 1 <= a <= m");
    }
    std::vector<BigInt> c(static_cast<std::size_t>(N) + 1);
    // n >= 0: exponent an + mn(n-1)/2 is increasing in n.
    for (long n = 0;; ++n) {
        const long e = a * n + m * n * (n - 1) / 2;
        if (e > N) {
            break;
        }
        c[static_cast<std::size_t>(e)] += (n % 2 == 0) ? 1 : -1;
    }
    // n = -j, j >= 1: exponent m j(j+1)/2 - a j, also increasing in j.
    for (long j = 1;; ++j) {
        const long e = m * j * (j + 1) / 2 - a * j;
        if (e > N) {
            break;
        }
        c[static_cast<std::size_t>(e)] += (j % 2 == 0) ? 1 : -1;
    }
    return ExactSeries::from_coeffs(std::move(c));
}

std::vector<int> pentagonal_support(int scale, int N)
{
    if (scale < 1) {
        throw std::invalid_argument("pentagonal_support needs scale >= 1");
    }
    std::vector<int> out;
    if (N < 0) {
        return out;
    }
    out.push_back(0);
    for (long k = 1;; ++k) {
        const long pos = scale * k * (3 * k - 1);
        const long neg = scale * k * (3 * k + 1);
        if (pos > N) {
            break;
        }
        out.push_back(static_cast<int>(pos));
        if (neg <= N) {
            out.push_back(static_cast<int>(neg));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

template <class S>
void check_mul_truncations(const S& x, const S& y, int N)
{
    if (x.trunc() != y.trunc()) {
        throw std::invalid_argument("truncation mismatch in product: q^" +
                                    std::to_string(x.trunc()) + " vs q^" +
                                    std::to_string(y.trunc()));
    }
    if (N < 0 || N > x.trunc()) {
        throw std::invalid_argument("product truncation q^" + std::to_string(N) +
                                    " exceeds the inputs' q^" + std::to_string(x.trunc()));
    }
}

}  // namespace

ExactSeries mul(const ExactSeries& x, const ExactSeries& y, int N)
{
    check_mul_truncations(x, y, N);
    std::vector<BigInt> c(static_cast<std::size_t>(N) + 1);
    for (int i = 0; i <= N; ++i) {
        if (x[i].is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= N; ++j) {
            if (!y[j].is_zero()) {
                c[static_cast<std::size_t>(i + j)] += x[i] * y[j];
            }
        }
    }
    return ExactSeries::from_coeffs(std::move(c));
}

ParitySeries mul(const ParitySeries& x, const ParitySeries& y, int N)
{
    check_mul_truncations(x, y, N);
    const auto xs = x.truncated(N);
    const auto src = xs.words();
    std::vector<ParitySeries::Word> acc(src.size(), 0);
    for (int i : y.truncated(N).support()) {
        // acc ^= xs << i
        const std::size_t wshift = static_cast<std::size_t>(i) / ParitySeries::kWordBits;
        const int bshift = i % ParitySeries::kWordBits;
        for (std::size_t k = wshift; k < acc.size(); ++k) {
            ParitySeries::Word v = src[k - wshift] << bshift;
            if (bshift != 0 && k > wshift) {
                v |= src[k - wshift - 1] >> (ParitySeries::kWordBits - bshift);
            }
            acc[k] ^= v;
        }
    }
    return ParitySeries::from_words(std::move(acc), N);
}

ParitySeries reduce_mod2(const ExactSeries& x)
{
    auto out = ParitySeries::zero(x.trunc());
    for (int n = 0; n <= x.trunc(); ++n) {
        if (x[n] % 2 != 0) {
            out.set(n, true);
        }
    }
    return out;
}

}  // namespace copart
