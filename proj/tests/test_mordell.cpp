#include "orbi/mordell.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace orbi;

namespace {

// Trial-division oracle.
bool p_full_oracle(long n, long p) {
    if (n < 0) n = -n;
    for (long d = 2; d * d <= n; ++d) {
        long e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0 && e < p) return false;
    }
    return n == 1 || p <= 1;
}

bool perfect_power_oracle(long n, long k, long& root) {
    for (long r = 0; r <= n; ++r) {
        long v = 1;
        for (long i = 0; i < k && v <= n; ++i) v *= r;
        if (v == n) {
            root = r;
            return true;
        }
        if (v > n) return false;
    }
    return false;
}

} // namespace

TEST(Mordell, GeneralTypeTriples) {
    EXPECT_TRUE(is_general_type_triple({2, 3, 7}));
    EXPECT_FALSE(is_general_type_triple({2, 3, 5}));
    EXPECT_FALSE(is_general_type_triple({2, 3, 6}));
    EXPECT_THROW(OrbifoldP1Triple(1, 3, 7), DomainError);
}

TEST(Mordell, PFullOracle) {
    for (long p = 1; p <= 5; ++p)
        for (long n = -100000; n <= 100000; n += (n > -2000 && n < 2000) ? 1 : 37) {
            if (n == 0) continue;
            ASSERT_EQ(is_p_full(Integer(n), p), p_full_oracle(n, p)) << n << ' ' << p;
        }
    EXPECT_THROW(is_p_full(Integer(0), 2), DomainError);
    EXPECT_TRUE(is_p_full(Integer(1), 7));
    // Large cofactors: 2^3 * 1000003^3 is 3-full, 2^3 * 1000003^2 is not.
    Integer big = pow(Integer(1000003), 3) * 8;
    EXPECT_TRUE(is_p_full(big, 3));
    EXPECT_FALSE(is_p_full(pow(Integer(1000003), 2) * 8, 3));
}

TEST(Mordell, Factorization) {
    EXPECT_EQ(factorization_string(Integer(72)), "2^3*3^2");
    EXPECT_EQ(factorization_string(Integer(1)), "1");
    EXPECT_EQ(factorization_string(Integer(-12)), "2^2*3");
    auto f = factorize(Integer(2) * 2 * 7919);
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f[1].first, 7919);
}

TEST(Mordell, EnumerationMatchesFilter) {
    for (long p = 2; p <= 4; ++p) {
        std::vector<std::uint64_t> expected;
        for (long n = 1; n <= 10000; ++n)
            if (p_full_oracle(n, p)) expected.push_back(n);
        EXPECT_EQ(enumerate_p_full_sieve(10000, p), expected);
        EXPECT_EQ(enumerate_p_full_generated(10000, p), expected);
        EXPECT_EQ(enumerate_p_full(10000, p), expected);
    }
    EXPECT_EQ(enumerate_p_full(100, 2),
              (std::vector<std::uint64_t>{1, 4, 8, 9, 16, 25, 27, 32, 36, 49, 64, 72, 81, 100}));
}

TEST(Mordell, SieveAndGenerationAgreeAtScale) {
    EXPECT_EQ(enumerate_p_full_sieve(2000000, 2), enumerate_p_full_generated(2000000, 2));
    EXPECT_EQ(enumerate_p_full_sieve(2000000, 3), enumerate_p_full_generated(2000000, 3));
}

TEST(Mordell, Multiplicativity) {
    std::mt19937 rng(5);
    auto full = enumerate_p_full(5000, 2);
    std::uniform_int_distribution<std::size_t> pick(0, full.size() - 1);
    for (int i = 0; i < 2000; ++i) {
        std::uint64_t a = full[pick(rng)], b = full[pick(rng)];
        if (std::gcd(a, b) != 1) continue;
        EXPECT_TRUE(is_p_full(Integer(static_cast<unsigned long>(a * b)), 2));
    }
}

TEST(Mordell, DensitySlope) {
    auto r2 = density_report(1000000, 2);
    EXPECT_NEAR(r2.slope, 0.5, 0.08);
    auto r3 = density_report(1000000, 3);
    EXPECT_NEAR(r3.slope, 1.0 / 3.0, 0.08);
    EXPECT_EQ(r2.checkpoints.back().first, 1000000u);
    EXPECT_THROW(density_report(100, 2), DomainError);
}

TEST(Mordell, SearchContainsKnownPoints) {
    auto pts = search_points({2, 7, 3}, 100, 100);
    EXPECT_NE(std::find(pts.begin(), pts.end(), RationalPoint{9, 8, 1}), pts.end());
    auto pts2 = search_points({2, 3, 7}, 100, 100);
    EXPECT_NE(std::find(pts2.begin(), pts2.end(), RationalPoint{9, 1, 8}), pts2.end());
}

// Independent brute force over all a, b in range.
TEST(Mordell, SearchAgreesWithBruteForce) {
    for (auto sign : {SearchSign::Minus, SearchSign::Plus}) {
        OrbifoldP1Triple t{2, 2, 3};
        std::vector<RationalPoint> expected;
        for (long b = 1; b <= 300; ++b)
            for (long a = 1; a <= 400; ++a) {
                if (a == b || std::gcd(a, b) != 1) continue;
                if (!p_full_oracle(a, 2) || !p_full_oracle(b, 3)) continue;
                long c = sign == SearchSign::Minus ? std::abs(a - b) : a + b;
                if (p_full_oracle(c, 2)) expected.push_back({a, b, c});
            }
        EXPECT_EQ(search_points(t, 400, 300, sign), expected);
    }
}

TEST(Mordell, ShardMergeDeterminism) {
    OrbifoldP1Triple t{2, 2, 2};
    auto one = search_points(t, 3000, 3000, SearchSign::Minus, 1);
    for (std::size_t shards : {2u, 3u, 4u, 7u}) EXPECT_EQ(search_points(t, 3000, 3000, SearchSign::Minus, shards), one);

    auto ranges = split_range(3000, 4);
    ASSERT_EQ(ranges.size(), 4u);
    EXPECT_EQ(ranges.front().lo, 1u);
    EXPECT_EQ(ranges.back().hi, 3000u);
    std::vector<std::vector<RationalPoint>> parts;
    for (auto it = ranges.rbegin(); it != ranges.rend(); ++it)
        parts.push_back(search_points_shard(t, 3000, *it, SearchSign::Minus));
    EXPECT_EQ(merge_shards(parts), one);
    EXPECT_EQ(split_range(2, 4).size(), 4u);
}

TEST(Mordell, ClassicalSearch) {
    auto ws = search_classical({3, 2, 3}, 10, 10);
    EXPECT_NE(std::find(ws.begin(), ws.end(), ClassicalWitness{1, 2, 3}), ws.end());
    EXPECT_THROW(search_classical({3, 2, 3}, 1, 0), DomainError);
    // Brute force for (2,3,7) with bounds 3.
    std::vector<ClassicalWitness> expected;
    for (long a = 1; a <= 3; ++a)
        for (long b = 1; b <= 3; ++b) {
            long root = 0;
            long v = a * a + b * b * b * b * b * b * b;
            if (std::gcd(a, b) == 1 && perfect_power_oracle(v, 3, root)) expected.push_back({a, b, root});
        }
    EXPECT_EQ(search_classical({2, 3, 7}, 3, 3), expected);
}

TEST(Mordell, ClassicalInsideNonClassicalUnderPlus) {
    for (OrbifoldP1Triple t : {OrbifoldP1Triple{3, 2, 3}, OrbifoldP1Triple{2, 2, 2}, OrbifoldP1Triple{2, 3, 2}}) {
        auto ws = search_classical(t, 12, 12);
        ASSERT_FALSE(ws.empty());
        Integer max_a = 0, max_b = 0;
        for (const auto& w : ws) {
            max_a = std::max(max_a, pow(w.alpha, t.p));
            max_b = std::max(max_b, pow(w.beta, t.r));
        }
        auto pts = search_points(t, max_a.get_ui(), max_b.get_ui(), SearchSign::Plus);
        for (const auto& w : ws) {
            RationalPoint expected{pow(w.alpha, t.p), pow(w.beta, t.r), pow(w.gamma, t.q)};
            if (expected.a == expected.b) continue;
            EXPECT_NE(std::find(pts.begin(), pts.end(), expected), pts.end());
        }
    }
}
