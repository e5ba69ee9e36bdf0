#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "copart/params.hpp"

namespace copart {

using BigInt = boost::multiprecision::cpp_int;

/// A power series known through q^trunc, with exact integer coefficients.
class ExactSeries {
public:
    /// The series 1 + 0q + ... + 0q^trunc.
    static ExactSeries one(int trunc);
    static ExactSeries zero(int trunc);
    /// Takes ownership of coefficients; trunc is coeffs.size() - 1.
    static ExactSeries from_coeffs(std::vector<BigInt> coeffs);

    int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    std::span<const BigInt> coeffs() const { return coeffs_; }

    /// Explicit narrowing; n must not exceed trunc().
    ExactSeries truncated(int n) const;

    friend bool operator==(const ExactSeries&, const ExactSeries&) = default;

private:
    explicit ExactSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {}
    std::vector<BigInt> coeffs_;
};

/// A power series over GF(2) known through q^trunc, packed 64 coefficients per word.
/// Bits above trunc in the last word are always zero.
class ParitySeries {
public:
    using Word = std::uint64_t;
    static constexpr int kWordBits = 64;

    static ParitySeries one(int trunc);
    static ParitySeries zero(int trunc);
    /// Builds the indicator series of a set of exponents; exponents above trunc are ignored.
    static ParitySeries indicator(std::span<const int> exponents, int trunc);

    int trunc() const { return trunc_; }
    bool operator[](int n) const;
    void set(int n, bool value);
    std::span<const Word> words() const { return words_; }

    /// Number of odd coefficients with exponent in [lo, hi].
    std::size_t count_odd(int lo, int hi) const;
    /// Exponents of odd coefficients, increasing.
    std::vector<int> support() const;

    ParitySeries truncated(int n) const;

    /// this *= (1 + q^e), in place.
    void mul_binomial(int e);
    /// this *= 1/(1 - q^e) = prod_k (1 + q^{e 2^k}) over GF(2), in place.
    void div_binomial(int e);

    ParitySeries& operator^=(const ParitySeries& other);

    friend bool operator==(const ParitySeries&, const ParitySeries&) = default;

    static ParitySeries from_words(std::vector<Word> words, int trunc);

private:
    ParitySeries(std::vector<Word> words, int trunc) : words_(std::move(words)), trunc_(trunc) {}
    void xor_shifted_self(int shift);
    void clear_tail();

    std::vector<Word> words_;
    int trunc_ = 0;
};

/// One infinite product factor in base q^c, step q^m.
struct FactorSpec {
    enum class Kind {
        pochhammer,          // (q^c; q^m)_inf
        reciprocal,          // 1 / (q^c; q^m)_inf
        negated_pochhammer,  // (-q^c; q^m)_inf
    };

    int c;
    int m;
    Kind kind;

    static FactorSpec pochhammer(int c, int m) { return make(c, m, Kind::pochhammer); }
    static FactorSpec reciprocal(int c, int m) { return make(c, m, Kind::reciprocal); }
    static FactorSpec negated_pochhammer(int c, int m) { return make(c, m, Kind::negated_pochhammer); }

    static FactorSpec make(int c, int m, Kind kind);
};

/// Product of the given infinite products, truncated at q^N.
ExactSeries expand_factors(std::span<const FactorSpec> factors, int N);
ParitySeries expand_factors_mod2(std::span<const FactorSpec> factors, int N);

/// The factor list (q^{a+b};q^m) / ((q^a;q^m)(q^b;q^m)).
std::vector<FactorSpec> cp_factors(const CpParams& params);

/// Generating function of cp_{a,b,m}(n) through q^N.
ExactSeries cp_series(const CpParams& params, int N);
ParitySeries cp_parity(const CpParams& params, int N);

/// (-q^{m+2a}; q^{2m})_inf: partitions into distinct parts congruent to m+2a mod 2m.
ExactSeries scp_series(int a, int m, int N);
ParitySeries scp_parity(int a, int m, int N);

/// Sum over all integers n of (-1)^n q^{an + mn(n-1)/2}, through q^N. Requires 1 <= a <= m
/// so that every exponent is nonnegative.
ExactSeries theta_denominator_series(int a, int m, int N);

/// { scale * k(3k-1) : k in Z } intersected with [0, N], increasing.
std::vector<int> pentagonal_support(int scale, int N);

/// Cauchy product truncated at q^N. Both inputs must share one truncation and N must not
/// exceed it.
ExactSeries mul(const ExactSeries& x, const ExactSeries& y, int N);
ParitySeries mul(const ParitySeries& x, const ParitySeries& y, int N);

ParitySeries reduce_mod2(const ExactSeries& x);

}  // namespace copart
