#include "oracles.hpp"
#include "wdx/construct.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

using namespace wdx;

namespace {

Monomial mono(int m, std::initializer_list<int> idx) { return Monomial::from_indices(m, idx); }

std::string bits(const EvaluationVector& v)
{
    std::string s;
    for (std::size_t j = 0; j < v.length(); ++j)
        s += v.get(j) ? '1' : '0';
    return s;
}

std::map<std::size_t, BigInt> as_big(const std::map<std::size_t, std::uint64_t>& h)
{
    std::map<std::size_t, BigInt> out;
    for (const auto& [w, c] : h)
        out[w] = c;
    return out;
}

std::vector<std::uint32_t> masks(const MonomialSet& s)
{
    std::vector<std::uint32_t> out;
    for (const auto& f : s)
        out.push_back(f.mask());
    return out;
}

CodeSpec example4() { return construct_wmin_beta(5, 12); }

} // namespace

TEST(Evaluate, TableRows)
{
    EXPECT_EQ(bits(evaluate(mono(3, {0}))), "10101010");
    EXPECT_EQ(bits(evaluate(mono(3, {1, 2}))), "11000000");
    EXPECT_EQ(bits(evaluate(Monomial::one(3))), "11111111");
}

TEST(Evaluate, MatchesKroneckerPower)
{
    for (int m = 1; m <= 8; ++m) {
        const auto g = oracle::kronecker_power(m);
        for (std::uint32_t i = 0; i < (1u << m); ++i) {
            const auto v = evaluate(row_monomial(m, i));
            for (std::size_t j = 0; j < v.length(); ++j)
                ASSERT_EQ(v.get(j), g[i][j] == 1) << m << " " << i << " " << j;
        }
    }
}

TEST(Evaluate, WeightAndDefinition)
{
    for (int m = 1; m <= 9; ++m)
        for (const auto& f : all_monomials(m)) {
            const auto v = evaluate(f);
            ASSERT_EQ(v.weight(), 1 << (m - f.degree()));
            if (m <= 6) {
                const auto ref = oracle::evaluate(f.mask(), m);
                for (std::size_t j = 0; j < v.length(); ++j)
                    ASSERT_EQ(v.get(j), ref[j] == 1);
            }
        }
}

TEST(EvaluationVector, SmallLengthsStayTrimmed)
{
    const auto ones = EvaluationVector::all_ones(2);
    EXPECT_EQ(ones.weight(), 4);
    auto v = ones ^ evaluate(mono(2, {0}));
    EXPECT_EQ(v.weight(), 2);
}

TEST(CodeSpec, RejectsNonDecreasing)
{
    EXPECT_THROW(CodeSpec(MonomialSet(4, {mono(4, {3})})), InputError);
    const CodeSpec c = construct_rm(2, 5);
    EXPECT_EQ(c.n(), 32u);
    EXPECT_EQ(c.k(), 16u);
    EXPECT_EQ(c.r(), 2);
    EXPECT_EQ(c.w_min(), 8u);
}

TEST(GeneratorMatrix, Rows)
{
    const auto full = construct_rm(3, 3);
    const auto rows = generator_matrix(full);
    ASSERT_EQ(rows.size(), 8u);
    const auto g = oracle::kronecker_power(3);
    std::set<std::string> expected, actual;
    for (const auto& row : g) {
        std::string s;
        for (int b : row)
            s += b ? '1' : '0';
        expected.insert(s);
    }
    for (const auto& r : rows)
        actual.insert(bits(r));
    EXPECT_EQ(actual, expected);

    const auto rep = generator_matrix(construct_rm(0, 4));
    ASSERT_EQ(rep.size(), 1u);
    EXPECT_EQ(rep[0].weight(), 16);

    std::multiset<int> weights;
    for (const auto& r : generator_matrix(construct_rm(1, 3)))
        weights.insert(r.weight());
    EXPECT_EQ(weights, (std::multiset<int>{8, 4, 4, 4}));
}

TEST(BruteForce, Examples)
{
    const auto wd = brute_force_wd(example4());
    const std::map<std::size_t, BigInt> expected{{0, 1}, {8, 108}, {12, 576}, {16, 2726}, {20, 576}, {24, 108}, {32, 1}};
    EXPECT_EQ(wd.counts(), expected);
    EXPECT_TRUE(wd.complete());

    EXPECT_EQ(brute_force_wd(construct_rm(1, 3)).counts(),
              (std::map<std::size_t, BigInt>{{0, 1}, {4, 14}, {8, 1}}));

    const CodeSpec empty(MonomialSet(4));
    EXPECT_EQ(brute_force_wd(empty).counts(), (std::map<std::size_t, BigInt>{{0, 1}}));
}

TEST(BruteForce, LimitNamesRequiredValue)
{
    try {
        brute_force_wd(construct_rm(2, 5), {10, 1});
        FAIL();
    } catch (const ResourceError& e) {
        EXPECT_NE(std::string(e.what()).find("16"), std::string::npos);
    }
}

TEST(BruteForce, MatchesNaiveEnumeration)
{
    std::mt19937 rng(7);
    for (int m = 2; m <= 7; ++m)
        for (int trial = 0; trial < 6; ++trial) {
            std::uniform_int_distribution<std::uint32_t> d(0, (1u << m) - 1);
            const auto set = decreasing_closure(m, {Monomial(m, d(rng)), Monomial(m, d(rng))});
            if (set.size() > 14)
                continue;
            const auto wd = brute_force_wd(CodeSpec(set));
            ASSERT_EQ(wd.counts(), as_big(oracle::weight_distribution(m, masks(set))));
        }
}

TEST(BruteForce, ThreadCountDoesNotMatter)
{
    const auto code = construct_rmxpolar(7, 20);
    const auto one = brute_force_wd(code, {28, 1});
    for (unsigned t : {2u, 3u, 8u})
        EXPECT_EQ(brute_force_wd(code, {28, t}), one);
}

TEST(BruteForce, Invariants)
{
    for (int m = 2; m <= 6; ++m)
        for (std::uint32_t g = 1; g < (1u << m); ++g) {
            const auto set = decreasing_closure(m, {Monomial(m, g)});
            if (set.size() > 20)
                continue;
            const CodeSpec code(set);
            const auto wd = brute_force_wd(code);
            ASSERT_EQ(wd.total(), pow2(static_cast<unsigned>(code.k())));
            ASSERT_EQ(wd.count(code.n()), 1);
            ASSERT_EQ(*wd.min_nonzero_weight(), code.w_min());
        }
}

TEST(BruteForce, EnvironmentLimit)
{
    ::setenv("WDX_BRUTE_LIMIT", "12", 1);
    EXPECT_EQ(brute_limit_from_env(28), 12u);
    ::setenv("WDX_BRUTE_LIMIT", "junk", 1);
    EXPECT_THROW(brute_limit_from_env(28), InputError);
    ::unsetenv("WDX_BRUTE_LIMIT");
    EXPECT_EQ(brute_limit_from_env(28), 28u);
}

TEST(WeightClass, Examples)
{
    const auto rm13 = construct_rm(1, 3);
    const auto top = weight_class(rm13, 8);
    ASSERT_EQ(top.size(), 1u);
    EXPECT_EQ(top[0], EvaluationVector::all_ones(3));
    EXPECT_EQ(weight_class(example4(), 8).size(), 108u);
    const auto zero = weight_class(example4(), 0);
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_TRUE(zero[0].is_zero());
    EXPECT_THROW(weight_class(construct_rm(2, 6), 16), ResourceError);
}

TEST(WeightClass, OneAndAHalfMinimumIsSumOfTwoMinimum)
{
    const auto code = example4();
    const auto low = weight_class(code, 8);
    const auto mid = weight_class(code, 12);
    std::set<EvaluationVector> sums;
    for (std::size_t i = 0; i < low.size(); ++i)
        for (std::size_t j = i + 1; j < low.size(); ++j)
            sums.insert(low[i] ^ low[j]);
    for (const auto& v : mid)
        EXPECT_TRUE(sums.count(v));
}

TEST(WeightDistribution, RejectsBadEntries)
{
    WeightDistribution wd(8, 2, false);
    EXPECT_THROW(wd.set(9, 1), InputError);
    EXPECT_THROW(wd.set(3, -1), InputError);
    wd.set(3, 0);
    EXPECT_TRUE(wd.counts().empty());
}
