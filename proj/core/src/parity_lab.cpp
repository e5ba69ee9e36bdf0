#include "copart/parity_lab.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "copart/copartition.hpp"
#include "copart/number_theory.hpp"

namespace copart {

// ---------------------------------------------------------------------------
// Density

int round_thousandths(std::uint64_t num, std::uint64_t den)
{
    if (den == 0) {
        throw std::invalid_argument("density denominator must be >= 1");
    }
    return static_cast<int>((2000 * num + den) / (2 * den));
}

std::string format_thousandths(int thousandths)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%d.%03d", thousandths / 1000, thousandths % 1000);
    return buf;
}

double DensityReport::proportion(std::size_t i) const
{
    return static_cast<double>(even_counts.at(i)) / checkpoints.at(i);
}

int DensityReport::thousandths(std::size_t i) const
{
    return round_thousandths(even_counts.at(i), static_cast<std::uint64_t>(checkpoints.at(i)));
}

std::string DensityReport::rounded(std::size_t i) const
{
    return format_thousandths(thousandths(i));
}

std::string DensityReport::exact(std::size_t i) const
{
    return std::to_string(even_counts.at(i)) + "/" + std::to_string(checkpoints.at(i));
}

namespace {

void validate_checkpoints(std::span<const int> checkpoints)
{
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < 1 || (i > 0 && checkpoints[i] <= checkpoints[i - 1])) {
            throw std::invalid_argument("checkpoints must be positive and strictly increasing");
        }
    }
}

}  // namespace

DensityReport density_report(const CpParams& params, const ParitySeries& parity,
                             std::span<const int> checkpoints)
{
    validate_checkpoints(checkpoints);
    if (!checkpoints.empty() && checkpoints.back() > parity.trunc()) {
        throw std::invalid_argument("checkpoint " + std::to_string(checkpoints.back()) +
                                    " exceeds the parity series truncation");
    }
    DensityReport report{params, {checkpoints.begin(), checkpoints.end()}, {}};
    for (int n : checkpoints) {
        const auto odd = parity.count_odd(1, n);
        report.even_counts.push_back(static_cast<std::uint64_t>(n) - odd);
    }
    return report;
}

DensityReport density_report(const CpParams& params, std::span<const int> checkpoints)
{
    validate_checkpoints(checkpoints);
    const int top = checkpoints.empty() ? 0 : checkpoints.back();
    return density_report(params, cp_parity(params, top), checkpoints);
}

// ---------------------------------------------------------------------------
// Guarantees and progressions

bool even_guarantee_314(long long n)
{
    if (n < 0) {
        throw std::invalid_argument("even_guarantee_314 needs n >= 0");
    }
    return !rep_pred_two_squares(24 * static_cast<std::uint64_t>(n) + 5);
}

bool even_guarantee_516(long long n)
{
    if (n < 0) {
        throw std::invalid_argument("even_guarantee_516 needs n >= 0");
    }
    return !rep_pred_x2_3y2(6 * static_cast<std::uint64_t>(n) + 1);
}

const char* to_string(ProgressionTag tag)
{
    return tag == ProgressionTag::cp314 ? "cp314" : "cp516";
}

CpParams family_params(ProgressionTag tag)
{
    return tag == ProgressionTag::cp314 ? CpParams(3, 1, 4) : CpParams(5, 1, 6);
}

ProgressionFamily progression_family(ProgressionTag family, std::int64_t p)
{
    const bool is314 = family == ProgressionTag::cp314;
    const bool ok = p > 0 && is_prime(static_cast<std::uint64_t>(p)) &&
                    (is314 ? (p > 3 && p % 4 == 3) : (p > 2 && p % 3 == 2));
    if (!ok) {
        throw std::invalid_argument(std::string(to_string(family)) + " progressions need a prime " +
                                    (is314 ? "p > 3 with p = 3 mod 4" : "p > 2 with p = 2 mod 3") +
                                    ", got " + std::to_string(p));
    }
    const std::int64_t modulus = p * p;
    const std::int64_t delta = mod_inverse(is314 ? 24 : 6, modulus);
    const std::int64_t shift = (is314 ? 5 : 1) * delta;
    ProgressionFamily out{family, p, modulus, delta, {}};
    for (std::int64_t t = 1; t < p; ++t) {
        out.residues.push_back((((p * t - shift) % modulus) + modulus) % modulus);
    }
    std::sort(out.residues.begin(), out.residues.end());
    return out;
}

CheckResult verify_even_progression(const ParitySeries& parity, std::int64_t modulus,
                                    std::int64_t residue, int N)
{
    if (modulus < 1 || residue < 0 || residue >= modulus) {
        throw std::invalid_argument("progression needs 0 <= residue < modulus");
    }
    if (N > parity.trunc()) {
        throw std::invalid_argument("progression bound exceeds the parity series truncation");
    }
    if (residue > N) {
        return CheckResult::vacuous("no n <= " + std::to_string(N) + " with n = " +
                                    std::to_string(residue) + " mod " + std::to_string(modulus));
    }
    long long checked = 0;
    for (std::int64_t n = residue; n <= N; n += modulus) {
        if (parity[static_cast<int>(n)]) {
            return CheckResult::failed(n, "odd value at n=" + std::to_string(n));
        }
        ++checked;
    }
    return CheckResult::ok(std::to_string(checked) + " terms even");
}

CheckResult verify_even_progression(const CpParams& params, std::int64_t modulus,
                                    std::int64_t residue, int N)
{
    return verify_even_progression(cp_parity(params, std::max(N, 0)), modulus, residue, N);
}

// ---------------------------------------------------------------------------
// Identities

namespace {

CheckResult compare_bits(const ParitySeries& lhs, const ParitySeries& rhs, const std::string& what)
{
    for (int n = 0; n <= lhs.trunc(); ++n) {
        if (lhs[n] != rhs[n]) {
            return CheckResult::failed(n, what + " differs at q^" + std::to_string(n));
        }
    }
    return CheckResult::ok(what + " holds through q^" + std::to_string(lhs.trunc()));
}

}  // namespace

CheckResult verify_parity_gf(int a, int m, int N)
{
    return compare_bits(cp_parity(CpParams(a, a, m), N), scp_parity(a, m, N),
                        "cp_{a,a,m} vs self-conjugate series mod 2");
}

CheckResult verify_odd_indices_even(int a, int m, int N)
{
    if (m % 2 != 0) {
        throw std::invalid_argument("odd-index check needs even m");
    }
    const auto bits = cp_parity(CpParams(a, a, m), N);
    for (int n = 1; n <= N; n += 2) {
        if (bits[n]) {
            return CheckResult::failed(n, "odd value at odd index " + std::to_string(n));
        }
    }
    return CheckResult::ok();
}

CheckResult verify_odd_support_mod4(int a, int m, int N)
{
    if (m % 4 != 2 || a % 2 == 0) {
        throw std::invalid_argument("mod-4 support check needs m = 2 mod 4 and odd a");
    }
    for (int n : cp_parity(CpParams(a, a, m), N).support()) {
        if (n % 4 != 0) {
            return CheckResult::failed(n, "odd value at n=" + std::to_string(n) + " not 0 mod 4");
        }
    }
    return CheckResult::ok();
}

CheckResult lacunary_odd_support_check(int a, int N)
{
    if (a < 1 || a % 2 == 0) {
        throw std::invalid_argument("lacunary check needs odd a >= 1");
    }
    if (N < 0) {
        throw std::invalid_argument("lacunary check needs N >= 0");
    }
    const auto odd = cp_parity(CpParams(a, a, 2 * a), N).support();
    const auto expected = pentagonal_support(2 * a, N);
    if (odd == expected) {
        return CheckResult::ok(std::to_string(odd.size()) + " odd values, all at 2a k(3k-1)");
    }
    auto [it, jt] = std::mismatch(odd.begin(), odd.end(), expected.begin(), expected.end());
    const long long where = it != odd.end() ? *it : *jt;
    if (jt != expected.end() && (it == odd.end() || *jt < *it)) {
        return CheckResult::failed(*jt, "expected odd value at n=" + std::to_string(*jt));
    }
    return CheckResult::failed(where, "unexpected odd value at n=" + std::to_string(where));
}

CheckResult verify_mod2_identity_eq4(int a, int m, int N)
{
    if (a < 1 || a >= m) {
        throw std::invalid_argument("theta identity needs 1 <= a < m");
    }
    const auto lhs = mul(cp_parity(CpParams(a, m - a, m), N),
                         reduce_mod2(theta_denominator_series(a, m, N)), N);
    const auto rhs = ParitySeries::indicator(pentagonal_support(m, N), N);
    return compare_bits(lhs, rhs, "cp_{a,m-a,m} * theta vs sum q^{mk(3k-1)} mod 2");
}

CheckResult odd_term_count_check(int a, int m, int Nmax)
{
    if (a < 1 || 2 * a >= m) {
        throw std::invalid_argument("odd-term count needs 1 <= a < m/2");
    }
    if (Nmax < 1) {
        throw std::invalid_argument("odd-term count needs Nmax >= 1");
    }
    const long long limit = static_cast<long long>(m) * Nmax * Nmax / 2;
    if (limit > 50'000'000) {
        throw std::invalid_argument("odd-term count range too large");
    }
    const int L = static_cast<int>(limit);

    auto blocks = ParitySeries::zero(L);
    for (long long n = 0;; ++n) {
        const long long start = -a * n + m * n * (n + 1) / 2;
        if (start > L) {
            break;
        }
        const long long stop = std::min<long long>(start + a * (2 * n + 1) - 1, L);
        for (long long e = start; e <= stop; ++e) {
            if (blocks[static_cast<int>(e)]) {
                return CheckResult::failed(e, "geometric blocks overlap at q^" + std::to_string(e));
            }
            blocks.set(static_cast<int>(e), true);
        }
    }

    auto paired = reduce_mod2(theta_denominator_series(a, m, L));
    paired.div_binomial(1);
    if (auto same = compare_bits(blocks, paired, "block union vs theta/(1-q)"); !same.passed()) {
        return same;
    }

    for (long long N = 1; N <= Nmax; ++N) {
        const auto top = static_cast<int>(static_cast<long long>(m) * N * N / 2);
        const auto odd = static_cast<long long>(blocks.count_odd(0, top));
        if (odd != a * N * N) {
            return CheckResult::failed(N, "found " + std::to_string(odd) + " odd terms through q^" +
                                              std::to_string(top) + ", expected " +
                                              std::to_string(a * N * N));
        }
    }
    return CheckResult::ok("aN^2 odd terms for N = 1.." + std::to_string(Nmax));
}

CheckResult both_parities_prefix_check(int a, int m, int N, int witness_min)
{
    if (a < 1 || a >= m) {
        throw std::invalid_argument("both-parities check needs 1 <= a < m");
    }
    const auto bits = cp_parity(CpParams(a, m - a, m), N);
    const auto odd = static_cast<long long>(bits.count_odd(0, N));
    const long long even = static_cast<long long>(N) + 1 - odd;
    const std::string detail = std::to_string(even) + " even, " + std::to_string(odd) + " odd";
    if (odd < witness_min || even < witness_min) {
        return CheckResult::failed(odd < witness_min ? odd : even, detail);
    }
    return CheckResult::ok(detail);
}

CheckResult andrews_mod5_check(int N, std::span<const int> enum_sizes)
{
    for (int s : enum_sizes) {
        if (s < 4 || s > 24 || s % 5 != 4) {
            throw std::invalid_argument("crank sizes must come from {4,9,14,19,24}");
        }
    }
    const CpParams params(1, 1, 2);
    const auto series = cp_series(params, std::max(N, 0));
    for (int n = 4; n <= N; n += 5) {
        if (series[n] % 5 != 0) {
            return CheckResult::failed(n, "cp_{1,1,2}(" + std::to_string(n) + ") not divisible by 5");
        }
    }
    for (int s : enum_sizes) {
        const auto hist = crank_distribution(params, s, 5);
        const bool uniform = hist.size() == 5 &&
                             std::all_of(hist.begin(), hist.end(),
                                         [&](const auto& kv) { return kv.second == hist.begin()->second; });
        if (!uniform) {
            return CheckResult::failed(s, "crank not equidistributed mod 5 at size " + std::to_string(s));
        }
    }
    return CheckResult::ok();
}

}  // namespace copart
