#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "copart/check_result.hpp"
#include "copart/params.hpp"
#include "copart/series.hpp"

namespace copart {

// ---------------------------------------------------------------------------
// Density of even values

/// Proportion of even cp_{a,b,m}(k) for 1 <= k <= n at each checkpoint n. Proportions are
/// kept as exact counts; rounding happens only when formatting.
struct DensityReport {
    CpParams params;
    std::vector<int> checkpoints;
    std::vector<std::uint64_t> even_counts;

    double proportion(std::size_t i) const;
    /// Proportion in thousandths, rounded half away from zero.
    int thousandths(std::size_t i) const;
    /// "0.765"
    std::string rounded(std::size_t i) const;
    /// "766/1000"
    std::string exact(std::size_t i) const;
};

/// Round num/den to thousandths, half away from zero. Requires num >= 0, den >= 1.
int round_thousandths(std::uint64_t num, std::uint64_t den);
std::string format_thousandths(int thousandths);

DensityReport density_report(const CpParams& params, std::span<const int> checkpoints);
/// Same, reusing an already expanded parity series of the family.
DensityReport density_report(const CpParams& params, const ParitySeries& parity,
                             std::span<const int> checkpoints);

// ---------------------------------------------------------------------------
// Quadratic-form guarantees and progressions

/// True when 24n+5 has a prime = 3 mod 4 to an odd power; then cp_{3,1,4}(n) is even.
bool even_guarantee_314(long long n);
/// True when 6n+1 has a prime = 2 mod 3 to an odd power; then cp_{5,1,6}(n) is even.
bool even_guarantee_516(long long n);

enum class ProgressionTag { cp314, cp516 };

const char* to_string(ProgressionTag tag);
CpParams family_params(ProgressionTag tag);

/// Residues r mod p^2 with cp(p^2 k + r) always even, from the quadratic-form guarantee.
struct ProgressionFamily {
    ProgressionTag family;
    std::int64_t p;
    std::int64_t modulus;
    /// 24 delta = 1 (cp314) or 6 delta = 1 (cp516) mod p^2, in [0, p^2).
    std::int64_t delta;
    /// (p t - c delta) mod p^2 for t = 1..p-1, sorted; c = 5 for cp314 and 1 for cp516.
    std::vector<std::int64_t> residues;
};

ProgressionFamily progression_family(ProgressionTag family, std::int64_t p);

/// Bit n of the parity series is 0 for every n = residue mod modulus, n <= N. Vacuous when no
/// such n exists.
CheckResult verify_even_progression(const CpParams& params, std::int64_t modulus,
                                    std::int64_t residue, int N);
CheckResult verify_even_progression(const ParitySeries& parity, std::int64_t modulus,
                                    std::int64_t residue, int N);

// ---------------------------------------------------------------------------
// Identities and structural checks

/// cp_{a,a,m} and (-q^{m+2a};q^{2m}) agree mod 2 through q^N.
CheckResult verify_parity_gf(int a, int m, int N);

/// m even: cp_{a,a,m}(2n+1) is even for 2n+1 <= N.
CheckResult verify_odd_indices_even(int a, int m, int N);

/// m = 2 mod 4, a odd: every odd cp_{a,a,m}(n), n <= N, has n = 0 mod 4.
CheckResult verify_odd_support_mod4(int a, int m, int N);

/// a odd: the odd values of cp_{a,a,2a}(n), n <= N, sit exactly at 2a k(3k-1).
CheckResult lacunary_odd_support_check(int a, int N);

/// cp_{a,m-a,m}(q) times the theta denominator is congruent mod 2 to sum q^{mk(3k-1)},
/// bit for bit through q^N. Requires 1 <= a < m.
CheckResult verify_mod2_identity_eq4(int a, int m, int N);

/// The finite geometric blocks of the paired theta series divided by (1-q): block n covers
/// a(2n+1) exponents from -an + mn(n+1)/2. Checks the blocks are disjoint, that they agree
/// mod 2 with theta/(1-q), and that exactly aN^2 odd terms lie at exponents <= floor(mN^2/2)
/// for 1 <= N <= Nmax. Requires 1 <= a < m/2.
CheckResult odd_term_count_check(int a, int m, int Nmax);

/// Both parities of cp_{a,m-a,m}(n), 0 <= n <= N, occur at least witness_min times.
CheckResult both_parities_prefix_check(int a, int m, int N, int witness_min);

/// cp_{1,1,2}(5n+4) = 0 mod 5 for 5n+4 <= N (exact coefficients), and the crank is
/// equidistributed mod 5 on each enumerated size. Sizes must come from {4,9,14,19,24}.
CheckResult andrews_mod5_check(int N, std::span<const int> enum_sizes);

}  // namespace copart
