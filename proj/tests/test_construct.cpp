#include "oracles.hpp"
#include "wdx/construct.hpp"
#include "wdx/verify.hpp"

#include <gtest/gtest.h>

using namespace wdx;

namespace {

Monomial mono(int m, std::initializer_list<int> idx) { return Monomial::from_indices(m, idx); }

std::vector<std::pair<int, int>> pairs(const std::vector<Monomial>& v)
{
    std::vector<std::pair<int, int>> out;
    for (const auto& f : v) {
        const auto idx = f.indices();
        out.emplace_back(idx[0], idx[1]);
    }
    return out;
}

std::vector<int> level_sizes(int m)
{
    std::vector<int> out;
    for (const auto& l : poset_levels(m))
        out.push_back(static_cast<int>(l.members.size()));
    return out;
}

} // namespace

TEST(Beta, Examples)
{
    EXPECT_TRUE(beta_leq(mono(7, {2, 5}), mono(7, {0, 6})));
    EXPECT_FALSE(beta_leq(mono(7, {0, 6}), mono(7, {2, 5})));
    EXPECT_TRUE(beta_leq(mono(7, {3, 4}), mono(7, {3, 4})));
    EXPECT_TRUE(beta_leq(mono(4, {1, 2}), mono(4, {0, 3})));
}

TEST(Beta, Coefficients)
{
    const BetaSum b(mono(9, {0, 4, 5, 8}));
    EXPECT_EQ(b.coefficients(), (std::array<std::int64_t, 4>{1 + 2 + 4, 2, 0, 0}));
}

TEST(Beta, ExactOrderMatchesHighPrecision)
{
    for (int m = 1; m <= 8; ++m) {
        const auto all = all_monomials(m);
        for (const auto& f : all)
            for (const auto& g : all) {
                const auto c = BetaSum(f) <=> BetaSum(g);
                const auto vf = oracle::beta_value(f.mask(), m), vg = oracle::beta_value(g.mask(), m);
                if (f == g)
                    ASSERT_EQ(c, std::strong_ordering::equal);
                else
                    ASSERT_EQ(c < 0, vf < vg) << f.to_string() << " " << g.to_string();
            }
    }
}

TEST(Beta, MonotoneUnderMonomialOrder)
{
    for (int m = 1; m <= 8; ++m) {
        const auto all = all_monomials(m);
        for (const auto& f : all)
            for (const auto& g : all)
                if (leq(f, g))
                    ASSERT_TRUE(beta_leq(f, g)) << f.to_string() << " " << g.to_string();
    }
}

TEST(Beta, LargeIndicesUseSlowPath)
{
    const auto a = mono(16, {15, 14, 13, 12, 0}), b = mono(16, {15, 14, 13, 11, 10, 9});
    const auto va = oracle::beta_value(a.mask(), 16), vb = oracle::beta_value(b.mask(), 16);
    EXPECT_EQ(beta_leq(a, b), va <= vb);
    EXPECT_EQ(beta_leq(b, a), vb <= va);
}

TEST(WminOrder, Examples)
{
    EXPECT_TRUE(wmin_leq(mono(7, {0, 6}), mono(7, {2, 5})));
    EXPECT_FALSE(wmin_leq(mono(6, {2, 3}), mono(6, {1, 4})));
    EXPECT_FALSE(wmin_leq(mono(6, {1, 4}), mono(6, {2, 3})));
    EXPECT_FALSE(wmin_leq(mono(6, {1, 4}), mono(6, {1, 4})));
    EXPECT_THROW(wmin_leq(mono(6, {1}), mono(6, {1, 4})), InputError);
}

TEST(Poset, Levels)
{
    EXPECT_EQ(level_sizes(7), (std::vector<int>{1, 1, 2, 2, 3, 3, 3, 2, 2, 1, 1}));
    EXPECT_EQ(level_sizes(6), (std::vector<int>{1, 1, 2, 2, 3, 2, 2, 1, 1}));
    EXPECT_EQ(level_sizes(3), (std::vector<int>{1, 1, 1}));
    const auto l3 = poset_levels(3);
    EXPECT_EQ(l3[0].members[0], mono(3, {0, 1}));
    EXPECT_EQ(l3[1].members[0], mono(3, {0, 2}));
    EXPECT_EQ(l3[2].members[0], mono(3, {1, 2}));
    EXPECT_THROW(poset_levels(2), InputError);
    for (int m = 3; m <= 9; ++m) {
        const auto s = level_sizes(m);
        for (int l = 0; l <= m - 2; ++l)
            ASSERT_EQ(s[static_cast<std::size_t>(l)], (l + 2) / 2);
        for (std::size_t l = 0; l < s.size(); ++l)
            ASSERT_EQ(s[l], s[s.size() - 1 - l]);
    }
}

TEST(Poset, BlendedOrder)
{
    EXPECT_EQ(pairs(blended_order(5)),
              (std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {2, 3}, {1, 4}, {2, 4}, {3, 4}}));
    for (int m = 3; m <= 9; ++m) {
        const auto order = blended_order(m);
        EXPECT_EQ(order.front(), mono(m, {0, 1}));
        EXPECT_EQ(order.size(), static_cast<std::size_t>(m * (m - 1) / 2));
        VerifyOptions opt;
        opt.m = m;
        EXPECT_TRUE(verify_poset(opt).passed());
    }
    const auto o7 = blended_order(7);
    const auto pos = [&](const Monomial& f) { return std::find(o7.begin(), o7.end(), f) - o7.begin(); };
    EXPECT_LT(pos(mono(7, {0, 6})), pos(mono(7, {2, 5})));
}

TEST(Construct, ReedMuller)
{
    EXPECT_EQ(construct_rm(2, 7).k(), 29u);
    EXPECT_EQ(construct_rm(5, 5).k(), 32u);
    EXPECT_EQ(construct_rm(0, 5).k(), 1u);
    EXPECT_THROW(construct_rm(6, 5), InputError);
    EXPECT_THROW(construct_rm(-1, 5), InputError);
}

TEST(Construct, Polar)
{
    const auto p = construct_polar(7, 25);
    EXPECT_EQ(p.w_min(), 16u);
    EXPECT_EQ(construct_polar(5, 32).k(), 32u);
    const auto p8 = construct_polar(8, 30);
    EXPECT_EQ(p8.w_min(), 32u);
    EXPECT_THROW(construct_polar(5, 33), InputError);
    EXPECT_THROW(construct_polar(5, -1), InputError);
    for (int m = 1; m <= 8; ++m)
        for (long long k = 0; k <= (1LL << m); ++k)
            ASSERT_TRUE(is_decreasing(construct_polar(m, k).info_set()));
}

TEST(Construct, RmxPolar)
{
    const auto c = construct_rmxpolar(7, 25);
    EXPECT_EQ(c.info_set().layer(2).size(), 17u);
    EXPECT_EQ(c.info_set().layer(1).size(), 7u);
    for (int m = 2; m <= 8; ++m) {
        for (int r = 0; r <= m; ++r)
            EXPECT_EQ(construct_rmxpolar(m, rm_dimension(m, r)).info_set(), construct_rm(r, m).info_set());
        EXPECT_EQ(construct_rmxpolar(m, 1).k(), 1u);
        for (long long k = 0; k <= (1LL << m); ++k)
            ASSERT_TRUE(is_decreasing(construct_rmxpolar(m, k).info_set()));
    }
    EXPECT_EQ(construct_rmxpolar(7, 29).info_set(), construct_rm(2, 7).info_set());
}

TEST(Construct, WminBeta)
{
    const auto c9 = construct_wmin_beta(7, 9);
    EXPECT_EQ(c9.info_set().layer(2), (std::vector<Monomial>{mono(7, {0, 1})}));
    const auto c15 = construct_wmin_beta(6, 15).info_set();
    const auto l2 = c15.layer(2);
    EXPECT_EQ(l2.size(), 8u);
    EXPECT_TRUE(c15.contains(mono(6, {2, 3})));
    EXPECT_TRUE(c15.contains(mono(6, {1, 4})));
    EXPECT_FALSE(c15.contains(mono(6, {0, 5})));
    EXPECT_EQ(construct_wmin_beta(6, 7).info_set(), monomials_up_to_degree(6, 1));
    EXPECT_THROW(construct_wmin_beta(6, 6), InputError);
    EXPECT_THROW(construct_wmin_beta(6, 23), InputError);
    for (int m = 3; m <= 9; ++m)
        for (long long k = 1 + m; k <= 1 + m + m * (m - 1) / 2; ++k)
            ASSERT_TRUE(is_decreasing(construct_wmin_beta(m, k).info_set()));
}

TEST(CodeOrder, Examples)
{
    const auto k16 = construct_wmin_beta(6, 16).info_set();
    EXPECT_TRUE(code_leq_w(k16, k16, 0, 64));
    const auto k15 = construct_wmin_beta(6, 15).info_set();
    EXPECT_FALSE(code_leq_w(k15, k16, 16, 16));
    EXPECT_TRUE(code_leq_w(k16, k15, 16, 16));

    std::vector<MonomialSet> removals;
    for (const auto& f : {mono(6, {2, 3}), mono(6, {1, 4}), mono(6, {0, 5})}) {
        std::vector<Monomial> keep;
        for (const auto& g : k16)
            if (g != f)
                keep.push_back(g);
        removals.emplace_back(6, keep);
    }
    for (const auto& a : removals)
        for (const auto& b : removals) {
            EXPECT_TRUE(code_leq_w(a, b, 0, 64));
            EXPECT_EQ(complete_wd_rm2_subcode(a), complete_wd_rm2_subcode(b));
        }
}

TEST(CodeOrder, RejectsUncertifiableWeights)
{
    const auto r3 = monomials_up_to_degree(7, 3);
    EXPECT_THROW(code_leq_w(r3, r3, 16, 32), InputError);
    EXPECT_NO_THROW(code_leq_w(r3, r3, 16, 24));
    EXPECT_THROW(code_leq_w(r3, monomials_up_to_degree(6, 3), 16, 16), InputError);
}
