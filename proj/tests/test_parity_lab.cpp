#include <gtest/gtest.h>

#include "copart/copartition.hpp"
#include "copart/parity_lab.hpp"
#include "copart/verification.hpp"

using namespace copart;

namespace {

/// Even values among cp(1..n) from exact coefficients, independent of the GF(2) path.
std::uint64_t exact_even_count(const CpParams& p, int n)
{
    const auto s = cp_series(p, n);
    std::uint64_t even = 0;
    for (int k = 1; k <= n; ++k) {
        even += (s[k] % 2 == 0) ? 1 : 0;
    }
    return even;
}

}  // namespace

TEST(Rounding, HalfAwayFromZero)
{
    EXPECT_EQ(round_thousandths(766, 1000), 766);
    EXPECT_EQ(round_thousandths(5115, 10000), 512);
    EXPECT_EQ(round_thousandths(5114, 10000), 511);
    EXPECT_EQ(round_thousandths(0, 7), 0);
    EXPECT_EQ(round_thousandths(7, 7), 1000);
    EXPECT_EQ(format_thousandths(765), "0.765");
    EXPECT_EQ(format_thousandths(1000), "1.000");
    EXPECT_EQ(format_thousandths(5), "0.005");
}

TEST(Density, ThreeThreeFourAtOneThousand)
{
    const CpParams p(3, 3, 4);
    const int cps[] = {1000};
    const auto r = density_report(p, cps);
    const auto oracle = exact_even_count(p, 1000);
    EXPECT_EQ(r.even_counts[0], oracle);
    EXPECT_EQ(oracle, 766U);
    // Published as 0.765: one unit in the last place, a rounding-convention note.
    EXPECT_EQ(std::abs(r.thousandths(0) - 765), 1);
    EXPECT_EQ(r.rounded(0), "0.766");
    EXPECT_EQ(r.exact(0), "766/1000");
}

TEST(Density, OneOneSixAtFifteenThousand)
{
    const int cps[] = {15000};
    EXPECT_EQ(density_report(CpParams(1, 1, 6), cps).rounded(0), "0.875");
}

TEST(Density, OneTwoThreeAtOneThousand)
{
    const CpParams p(1, 2, 3);
    const int cps[] = {500, 1000};
    const auto r = density_report(p, cps);
    EXPECT_EQ(r.rounded(1), "0.504");
    EXPECT_EQ(r.even_counts[0], exact_even_count(p, 500));
    EXPECT_EQ(r.even_counts[1], exact_even_count(p, 1000));
}

TEST(Density, CountsNondecreasingAndBounded)
{
    const int cps[] = {10, 100, 1000, 5000};
    const auto r = density_report(CpParams(2, 5, 7), cps);
    for (std::size_t i = 0; i < r.even_counts.size(); ++i) {
        EXPECT_LE(r.even_counts[i], static_cast<std::uint64_t>(r.checkpoints[i]));
        if (i > 0) {
            EXPECT_GE(r.even_counts[i], r.even_counts[i - 1]);
        }
    }
    const int bad[] = {10, 10};
    EXPECT_THROW(density_report(CpParams(1, 1, 1), bad), std::invalid_argument);
}

TEST(Guarantees, CpThreeOneFour)
{
    EXPECT_TRUE(even_guarantee_314(3));
    EXPECT_EQ(count(CpParams(3, 1, 4), 3), 2U);
    EXPECT_FALSE(even_guarantee_314(0));
    EXPECT_TRUE(verify_guarantees(ProgressionTag::cp314, 5000).passed());
}

TEST(Guarantees, CpFiveOneSix)
{
    EXPECT_FALSE(even_guarantee_516(4));
    EXPECT_TRUE(even_guarantee_516(9));
    EXPECT_FALSE(cp_parity(CpParams(5, 1, 6), 9)[9]);
    // Sufficient only: no guarantee at n = 5, yet the value is even.
    EXPECT_FALSE(even_guarantee_516(5));
    EXPECT_EQ(cp_series(CpParams(5, 1, 6), 5)[5], 2);
    EXPECT_TRUE(verify_guarantees(ProgressionTag::cp516, 5000).passed());
}

TEST(Progressions, Families)
{
    const auto f7 = progression_family(ProgressionTag::cp314, 7);
    EXPECT_EQ(f7.modulus, 49);
    EXPECT_EQ(f7.delta * 24 % 49, 1);
    EXPECT_EQ(f7.residues, (std::vector<std::int64_t>{3, 17, 24, 31, 38, 45}));

    const auto f11 = progression_family(ProgressionTag::cp314, 11);
    EXPECT_EQ(f11.modulus, 121);
    EXPECT_EQ(f11.residues,
              (std::vector<std::int64_t>{3, 14, 36, 47, 58, 69, 80, 91, 102, 113}));

    const auto g5 = progression_family(ProgressionTag::cp516, 5);
    EXPECT_EQ(g5.modulus, 25);
    EXPECT_EQ(g5.delta * 6 % 25, 1);
    EXPECT_EQ(g5.residues, (std::vector<std::int64_t>{9, 14, 19, 24}));

    const auto g11 = progression_family(ProgressionTag::cp516, 11);
    EXPECT_EQ(g11.residues,
              (std::vector<std::int64_t>{9, 31, 42, 53, 64, 75, 86, 97, 108, 119}));

    EXPECT_THROW(progression_family(ProgressionTag::cp314, 5), std::invalid_argument);
    EXPECT_THROW(progression_family(ProgressionTag::cp314, 3), std::invalid_argument);
    EXPECT_THROW(progression_family(ProgressionTag::cp314, 15), std::invalid_argument);
    EXPECT_THROW(progression_family(ProgressionTag::cp516, 2), std::invalid_argument);
    EXPECT_THROW(progression_family(ProgressionTag::cp516, 7), std::invalid_argument);
}

TEST(Progressions, VerifyEven)
{
    EXPECT_EQ(verify_even_progression(CpParams(3, 1, 4), 49, 3, 5000).verdict,
              CheckResult::Verdict::pass);
    EXPECT_EQ(verify_even_progression(CpParams(5, 1, 6), 25, 9, 5000).verdict,
              CheckResult::Verdict::pass);
    const auto zero = verify_even_progression(CpParams(3, 1, 4), 49, 0, 5000);
    EXPECT_EQ(zero.verdict, CheckResult::Verdict::fail);
    ASSERT_TRUE(zero.counterexample.has_value());
    EXPECT_EQ(*zero.counterexample % 49, 0);
    EXPECT_EQ(verify_even_progression(CpParams(3, 1, 4), 49, 45, 40).verdict,
              CheckResult::Verdict::vacuous);
    EXPECT_THROW(verify_even_progression(CpParams(3, 1, 4), 49, 49, 100), std::invalid_argument);
    EXPECT_TRUE(verify_progressions(ProgressionTag::cp314, 19, 12100).passed());
    EXPECT_TRUE(verify_progressions(ProgressionTag::cp516, 17, 12100).passed());
}

TEST(ParityIdentities, SelfConjugateGeneratingFunction)
{
    for (int a = 1; a <= 3; ++a) {
        for (int m = 1; m <= 6; ++m) {
            EXPECT_TRUE(verify_parity_gf(a, m, 1000).passed()) << a << "," << m;
        }
    }
    // a != b families do not satisfy it.
    EXPECT_NE(cp_parity(CpParams(1, 2, 3), 200), scp_parity(1, 3, 200));
}

TEST(ParityIdentities, EvenModulusParity)
{
    for (int m : {2, 4, 6, 8}) {
        EXPECT_TRUE(verify_odd_indices_even(1, m, 3000).passed()) << m;
        EXPECT_TRUE(verify_odd_indices_even(2, m, 3000).passed()) << m;
    }
    for (int m : {2, 6, 10}) {
        EXPECT_TRUE(verify_odd_support_mod4(1, m, 3000).passed()) << m;
        EXPECT_TRUE(verify_odd_support_mod4(3, m, 3000).passed()) << m;
    }
    EXPECT_THROW(verify_odd_indices_even(1, 3, 10), std::invalid_argument);
    EXPECT_THROW(verify_odd_support_mod4(2, 6, 10), std::invalid_argument);
    // m = 0 mod 4 does not confine odd values to 0 mod 4.
    bool off = false;
    for (int n : cp_parity(CpParams(1, 1, 4), 200).support()) {
        off = off || n % 4 != 0;
    }
    EXPECT_TRUE(off);
}

TEST(ParityIdentities, Lacunary)
{
    EXPECT_TRUE(lacunary_odd_support_check(1, 5000).passed());
    EXPECT_TRUE(lacunary_odd_support_check(3, 5000).passed());
    EXPECT_TRUE(lacunary_odd_support_check(1, 0).passed());
    const auto odd = cp_parity(CpParams(1, 1, 2), 30).support();
    EXPECT_EQ(odd, (std::vector<int>{0, 4, 8, 20, 28}));
    EXPECT_THROW(lacunary_odd_support_check(2, 100), std::invalid_argument);
}

TEST(ParityIdentities, ThetaIdentity)
{
    EXPECT_TRUE(verify_mod2_identity_eq4(1, 4, 2000).passed());
    EXPECT_TRUE(verify_mod2_identity_eq4(3, 8, 2000).passed());
    EXPECT_TRUE(verify_mod2_identity_eq4(1, 2, 2000).passed());
    EXPECT_THROW(verify_mod2_identity_eq4(4, 4, 10), std::invalid_argument);
    // a = m/2 collapses to (q^{2m};q^{2m}) mod 2.
    const FactorSpec f[] = {FactorSpec::pochhammer(4, 4)};
    EXPECT_EQ(cp_parity(CpParams(1, 1, 2), 500), expand_factors_mod2(f, 500));
}

TEST(OddTermCount, Blocks)
{
    EXPECT_TRUE(odd_term_count_check(1, 4, 30).passed());
    EXPECT_TRUE(odd_term_count_check(2, 5, 30).passed());
    EXPECT_TRUE(odd_term_count_check(1, 3, 10).passed());
    EXPECT_THROW(odd_term_count_check(2, 4, 10), std::invalid_argument);
    EXPECT_THROW(odd_term_count_check(1, 4, 0), std::invalid_argument);
}

TEST(BothParities, Prefix)
{
    EXPECT_TRUE(both_parities_prefix_check(1, 4, 2000, 10).passed());
    EXPECT_TRUE(both_parities_prefix_check(1, 2, 2000, 10).passed());
    EXPECT_FALSE(both_parities_prefix_check(1, 2, 10, 10).passed());
}

TEST(Andrews, ModFive)
{
    const int sizes[] = {4, 9, 14};
    EXPECT_TRUE(andrews_mod5_check(504, sizes).passed());
    EXPECT_EQ(cp_series(CpParams(1, 1, 2), 4)[4], 5);
    const int bad[] = {5};
    EXPECT_THROW(andrews_mod5_check(10, bad), std::invalid_argument);
    // Not every residue class: 5n+3 fails somewhere.
    const auto s = cp_series(CpParams(1, 1, 2), 100);
    bool some_nonzero = false;
    for (int n = 3; n <= 100; n += 5) {
        some_nonzero = some_nonzero || s[n] % 5 != 0;
    }
    EXPECT_TRUE(some_nonzero);
}

TEST(Sweeps, OracleAndSelfConjugate)
{
    EXPECT_TRUE(verify_oracle(2, 2, 3, 15).passed());
    EXPECT_TRUE(verify_self_conjugate(1, 2, 24).passed());
    EXPECT_TRUE(verify_self_conjugate(2, 3, 24).passed());
    EXPECT_TRUE(verify_lemma13(3000).passed());
    EXPECT_TRUE(verify_predicates_vs_brute(5000).passed());
}
