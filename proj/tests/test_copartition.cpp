#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "copart/copartition.hpp"
#include "copart/series.hpp"
#include "oracles.hpp"

using namespace copart;

namespace {

Partition P(std::vector<int> parts)
{
    return Partition(std::move(parts));
}

std::vector<int> ones(int k)
{
    return std::vector<int>(static_cast<std::size_t>(k), 1);
}

}  // namespace

TEST(Enumerate, WorkedExampleInListedOrder)
{
    const CpParams p(2, 1, 3);
    const auto all = enumerate(p, 9);
    const std::vector<Copartition> expected = {
        Copartition::from_ground_and_sky(p, P({5, 2, 2}), P({})),
        Copartition::from_ground_and_sky(p, P({5}), P({1})),
        Copartition::from_ground_and_sky(p, P({2}), P({4})),
        Copartition::from_ground_and_sky(p, P({}), P({7, 1, 1})),
        Copartition::from_ground_and_sky(p, P({}), P({4, 4, 1})),
        Copartition::from_ground_and_sky(p, P({}), P({4, 1, 1, 1, 1, 1})),
        Copartition::from_ground_and_sky(p, P({}), P(ones(9))),
    };
    EXPECT_EQ(all, expected);
    EXPECT_EQ(all[1].rho(), P({3}));
    EXPECT_EQ(all[2].rho(), P({3}));
    EXPECT_EQ(all[1].to_string(), "({5},{3},{1})");
    EXPECT_EQ(all[0].to_string(), "({5,2^2},∅,∅)");
}

TEST(Enumerate, SizeZeroIsEmptyTriple)
{
    const CpParams p(3, 2, 7);
    const auto all = enumerate(p, 0);
    ASSERT_EQ(all.size(), 1U);
    EXPECT_EQ(all[0], Copartition::empty(p));
}

TEST(Enumerate, SmallFamily)
{
    const CpParams p(3, 1, 4);
    const std::vector<Copartition> expected = {
        Copartition::from_ground_and_sky(p, P({3}), P({})),
        Copartition::from_ground_and_sky(p, P({}), P({1, 1, 1})),
    };
    EXPECT_EQ(enumerate(p, 3), expected);
    EXPECT_THROW(enumerate(p, -1), std::invalid_argument);
}

TEST(Enumerate, EveryResultSatisfiesDefinition)
{
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            for (int m = 1; m <= 4; ++m) {
                const CpParams p(a, b, m);
                for (int n = 0; n <= 14; ++n) {
                    const auto all = enumerate(p, n);
                    for (const auto& cp : all) {
                        EXPECT_EQ(cp.size(), n);
                        for (int g : cp.gamma().parts()) {
                            EXPECT_TRUE(g >= a && (g - a) % m == 0);
                        }
                        for (int s : cp.sigma().parts()) {
                            EXPECT_TRUE(s >= b && (s - b) % m == 0);
                        }
                        if (!cp.gamma().empty()) {
                            EXPECT_EQ(cp.rho(), Partition::rectangle(cp.sigma().num_parts(),
                                                                     m * cp.gamma().num_parts()));
                        } else {
                            EXPECT_TRUE(cp.rho().empty());
                        }
                    }
                    // canonical order has no duplicates
                    for (std::size_t i = 1; i < all.size(); ++i) {
                        EXPECT_FALSE(all[i] == all[i - 1]);
                    }
                }
            }
        }
    }
}

TEST(Count, Examples)
{
    EXPECT_EQ(count(CpParams(2, 1, 3), 9), 7U);
    EXPECT_EQ(count(CpParams(1, 1, 2), 4), 5U);
    EXPECT_EQ(count(CpParams(5, 1, 6), 5), 2U);
}

TEST(Count, AgreesWithSeriesOnSmallGrid)
{
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            for (int m = 1; m <= 4; ++m) {
                const CpParams p(a, b, m);
                const auto s = cp_series(p, 16);
                for (int n = 0; n <= 16; ++n) {
                    EXPECT_EQ(s[n], count(p, n)) << p.label() << " n=" << n;
                }
            }
        }
    }
}

TEST(Copartition, RejectsInvalidTriples)
{
    const CpParams p(2, 1, 3);
    EXPECT_THROW(Copartition(p, P({3}), P({}), P({})), std::invalid_argument);
    EXPECT_THROW(Copartition(p, P({2}), P({}), P({1})), std::invalid_argument);
    EXPECT_THROW(Copartition(p, P({2}), P({6}), P({1})), std::invalid_argument);
    EXPECT_THROW(Copartition(p, P({}), P({3}), P({1})), std::invalid_argument);
    EXPECT_NO_THROW(Copartition(p, P({2}), P({3}), P({1})));
    EXPECT_THROW(P({0}), std::invalid_argument);
}

TEST(Conjugate, EmptyGround)
{
    const auto cp = Copartition::from_ground_and_sky(CpParams(2, 1, 3), P({}), P(ones(9)));
    const auto c = conjugate(cp);
    EXPECT_EQ(c.params(), CpParams(1, 2, 3));
    EXPECT_EQ(c.gamma(), P(ones(9)));
    EXPECT_TRUE(c.rho().empty());
    EXPECT_TRUE(c.sigma().empty());
    EXPECT_EQ(c.size(), 9);
}

TEST(Conjugate, DiagramExample)
{
    // ({3m+a,2m+a,2m+a,a},{4m,4m},{3m+b,2m+b}) with (a,b,m) = (2,1,3)
    const CpParams p(2, 1, 3);
    const Copartition cp(p, P({11, 8, 8, 2}), P({12, 12}), P({10, 7}));
    const auto c = conjugate(cp);
    EXPECT_EQ(c.params(), CpParams(1, 2, 3));
    EXPECT_EQ(c.gamma(), P({10, 7}));
    EXPECT_EQ(c.rho(), P({6, 6, 6, 6}));
    EXPECT_EQ(c.sigma(), P({11, 8, 8, 2}));
    EXPECT_EQ(c.size(), cp.size());
}

TEST(Conjugate, InvolutionAndBijection)
{
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            for (int m = 1; m <= 4; ++m) {
                const CpParams p(a, b, m);
                for (int n = 0; n <= 13; ++n) {
                    const auto here = enumerate(p, n);
                    auto there = enumerate(p.swapped(), n);
                    std::vector<Copartition> image;
                    for (const auto& cp : here) {
                        const auto c = conjugate(cp);
                        EXPECT_EQ(conjugate(c), cp);
                        EXPECT_EQ(c.size(), n);
                        EXPECT_EQ(crank(c), -crank(cp));
                        image.push_back(c);
                    }
                    auto key = [](const Copartition& x, const Copartition& y) {
                        return std::tie(x.gamma(), x.sigma()) < std::tie(y.gamma(), y.sigma());
                    };
                    std::sort(image.begin(), image.end(), key);
                    std::sort(there.begin(), there.end(), key);
                    EXPECT_EQ(image, there) << p.label() << " n=" << n;
                }
            }
        }
    }
}

TEST(SelfConjugate, Examples)
{
    const CpParams p(1, 1, 2);
    EXPECT_TRUE(is_self_conjugate(Copartition(p, P({1}), P({2}), P({1}))));
    EXPECT_TRUE(is_self_conjugate(Copartition::empty(p)));
    EXPECT_FALSE(is_self_conjugate(Copartition::from_ground_and_sky(p, P({3}), P({1}))));
    // a != b never has fixed points, not even the empty triple.
    const CpParams q(2, 1, 3);
    for (const auto& cp : enumerate(q, 9)) {
        EXPECT_FALSE(is_self_conjugate(cp));
    }
    EXPECT_FALSE(is_self_conjugate(Copartition::empty(q)));
}

TEST(Hooks, Examples)
{
    const CpParams p(1, 1, 2);
    const Copartition single(p, P({1}), P({2}), P({1}));
    EXPECT_EQ(hooks_to_distinct_parts(single), P({4}));
    EXPECT_EQ(distinct_parts_to_hooks(P({4}), 1, 2), single);
    EXPECT_EQ(hooks_to_distinct_parts(Copartition::empty(p)), P({}));
    EXPECT_EQ(distinct_parts_to_hooks(P({}), 1, 2), Copartition::empty(p));
    EXPECT_THROW(hooks_to_distinct_parts(Copartition::from_ground_and_sky(p, P({3}), P({1}))),
                 std::invalid_argument);
    EXPECT_THROW(distinct_parts_to_hooks(P({4, 4}), 1, 2), std::invalid_argument);
    EXPECT_THROW(distinct_parts_to_hooks(P({6}), 1, 2), std::invalid_argument);
}

TEST(Hooks, SizeEightImages)
{
    // Distinct parts = 0 mod 4 summing to 8, from a brute partition scan.
    std::vector<Partition> expected;
    oracle::for_each_partition(8, [&](const std::vector<int>& parts) {
        if (oracle::distinct(parts) &&
            oracle::all_parts(parts, [](int x) { return x % 4 == 0; })) {
            expected.emplace_back(parts);
        }
    });
    std::vector<Partition> images;
    for (const auto& cp : enumerate(CpParams(1, 1, 2), 8)) {
        if (is_self_conjugate(cp)) {
            images.push_back(hooks_to_distinct_parts(cp));
        }
    }
    std::sort(images.begin(), images.end());
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(images, expected);
    EXPECT_EQ(static_cast<long long>(images.size()), scp_series(1, 2, 8)[8].convert_to<long long>());
}

TEST(Hooks, RoundTripExhaustive)
{
    for (int m : {2, 4}) {
        const CpParams p(1, 1, m);
        for (int n = 0; n <= 30; ++n) {
            for (const auto& cp : enumerate(p, n)) {
                if (!is_self_conjugate(cp)) {
                    continue;
                }
                const auto hooks = hooks_to_distinct_parts(cp);
                EXPECT_EQ(hooks.size(), n);
                EXPECT_TRUE(hooks.has_distinct_parts());
                EXPECT_EQ(distinct_parts_to_hooks(hooks, 1, m), cp);
            }
        }
    }
    // And from the other side: every admissible distinct-part partition maps back.
    for (int n = 0; n <= 30; ++n) {
        oracle::for_each_partition(n, [&](const std::vector<int>& parts) {
            if (!oracle::distinct(parts) ||
                !oracle::all_parts(parts, [](int x) { return x >= 4 && (x - 4) % 4 == 0; })) {
                return;
            }
            const Partition p(parts);
            const auto cp = distinct_parts_to_hooks(p, 1, 2);
            EXPECT_TRUE(is_self_conjugate(cp));
            EXPECT_EQ(hooks_to_distinct_parts(cp), p);
        });
    }
}

TEST(Crank, Examples)
{
    const CpParams p(2, 1, 3);
    EXPECT_EQ(crank(Copartition::from_ground_and_sky(p, P({5, 2, 2}), P({}))), 3);
    EXPECT_EQ(crank(Copartition::from_ground_and_sky(p, P({}), P(ones(9)))), -9);

    std::vector<int> cranks;
    for (const auto& cp : enumerate(CpParams(1, 1, 2), 4)) {
        cranks.push_back(crank(cp));
    }
    std::sort(cranks.begin(), cranks.end());
    EXPECT_EQ(cranks, (std::vector<int>{-4, -2, 0, 2, 4}));
}

TEST(Crank, Distributions)
{
    const CpParams p(1, 1, 2);
    const std::map<int, std::uint64_t> uniform_one = {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}};
    EXPECT_EQ(crank_distribution(p, 4, 5), uniform_one);
    EXPECT_EQ(crank_distribution(CpParams(3, 2, 4), 0, 5), (std::map<int, std::uint64_t>{{0, 1}}));

    const auto nine = crank_distribution(p, 9, 5);
    ASSERT_EQ(nine.size(), 5U);
    for (const auto& [r, c] : nine) {
        EXPECT_EQ(c, nine.begin()->second) << "residue " << r;
    }
    EXPECT_THROW(crank_distribution(p, 4, 0), std::invalid_argument);
}
