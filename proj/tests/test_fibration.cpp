#include "orbi/fibration.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <numeric>
#include <random>

using namespace orbi;

namespace {

Multiplicity M(long v) { return Multiplicity(v); }
const Multiplicity kInf = Multiplicity::infinity();
constexpr long kInfOracle = std::numeric_limits<long>::max();

FiberComponent part(long t, Multiplicity m) { return FiberComponent(Integer(t), m); }

// Plain-integer oracle for min over s * t * m, with kInfOracle absorbing.
long scaled(long a, long b) { return a == kInfOracle || b == kInfOracle ? kInfOracle : a * b; }

Multiplicity from_oracle(long v) { return v == kInfOracle ? kInf : Multiplicity(v); }

} // namespace

TEST(Fibration, InfVersusGcdOnDegreeTwelveFibre) {
    FibrationData fd({{"c0", {part(2, M(1)), part(2, M(1)), part(2, M(1)), part(3, M(1)), part(3, M(1))}}});
    EXPECT_EQ(base_multiplicity(fd, "c0", BaseMode::Inf), M(2));
    EXPECT_EQ(base_multiplicity(fd, "c0", BaseMode::Gcd), M(1));
    EXPECT_EQ(orbifold_base(fd, BaseMode::Inf), (OrbifoldDivisor{{"c0", M(2)}}));
    EXPECT_TRUE(orbifold_base(fd, BaseMode::Gcd).empty());
}

TEST(Fibration, MultipleFibresGiveBaseMarks) {
    FibrationData::Map fibers;
    for (int i = 1; i <= 6; ++i) fibers["b" + std::to_string(i)] = {part(2, M(1))};
    FibrationData fd(fibers);
    auto base = orbifold_base(fd, BaseMode::Inf);
    EXPECT_EQ(base.size(), 6u);
    EXPECT_EQ(base, orbifold_base(fd, BaseMode::Gcd));
}

TEST(Fibration, InfiniteComponents) {
    FibrationData fd({{"a", {part(3, kInf), part(2, M(5))}}, {"b", {part(1, kInf)}}});
    EXPECT_EQ(base_multiplicity(fd, "a", BaseMode::Inf), M(10));
    EXPECT_EQ(base_multiplicity(fd, "b", BaseMode::Inf), kInf);
    EXPECT_THROW(base_multiplicity(fd, "a", BaseMode::Gcd), DomainError);
    FibrationData frac({{"a", {part(1, Multiplicity(make_rational(3, 2)))}}});
    EXPECT_THROW(base_multiplicity(frac, "a", BaseMode::Gcd), DomainError);
    EXPECT_EQ(base_multiplicity(frac, "a", BaseMode::Inf), Multiplicity(make_rational(3, 2)));
}

TEST(Fibration, Validation) {
    EXPECT_THROW(FiberComponent(Integer(0), M(2)), DomainError);
    EXPECT_THROW(FibrationData(FibrationData::Map{{"a", {}}}), DomainError);
    FibrationData fd({{"a", {part(1, M(2))}}});
    EXPECT_THROW(fd.over("missing"), DomainError);
    EXPECT_THROW(TwoStageData(fd, {{"z", {{Integer(1), "missing"}}}}), DomainError);
    EXPECT_THROW(TwoStageData(fd, {{"z", {}}}), DomainError);
}

TEST(Fibration, GcdOracle) {
    for (long a = 1; a <= 12; ++a)
        for (long b = 1; b <= 12; ++b)
            for (long t = 1; t <= 4; ++t) {
                FibrationData fd({{"x", {part(t, M(a)), part(1, M(b))}}});
                EXPECT_EQ(base_multiplicity(fd, "x", BaseMode::Gcd), M(std::gcd(t * a, b)));
                EXPECT_EQ(base_multiplicity(fd, "x", BaseMode::Inf), M(std::min(t * a, b)));
            }
}

// Randomized two-stage instances against a flattened integer oracle.
TEST(Fibration, CompositionRuleRandomized) {
    std::mt19937 rng(77);
    std::uniform_int_distribution<long> coef(1, 20), mult(1, 13), count(1, 3);
    for (int trial = 0; trial < 3000; ++trial) {
        FibrationData::Map upper;
        std::map<std::string, std::vector<std::pair<long, long>>> raw;
        for (int y = 0; y < 3; ++y) {
            std::string label = "y" + std::to_string(y);
            long n = count(rng);
            for (long k = 0; k < n; ++k) {
                long t = coef(rng), m = mult(rng);
                long mv = m == 13 ? kInfOracle : m;
                upper[label].push_back(part(t, from_oracle(mv)));
                raw[label].emplace_back(t, mv);
            }
        }
        TwoStageData::LowerMap lower;
        std::map<std::string, long> expected;
        for (int z = 0; z < 2; ++z) {
            std::string label = "z" + std::to_string(z);
            long best = kInfOracle;
            long n = count(rng);
            for (long k = 0; k < n; ++k) {
                long s = coef(rng);
                std::string y = "y" + std::to_string(rng() % 3);
                lower[label].push_back({Integer(s), y});
                for (auto [t, m] : raw[y]) best = std::min(best, scaled(s * t, m));
            }
            expected[label] = best;
        }
        auto bases = compose_base(TwoStageData(FibrationData(upper), lower));
        ASSERT_EQ(bases.direct, bases.staged);
        for (const auto& [z, v] : expected) EXPECT_EQ(bases.direct.multiplicity(z), from_oracle(v));
    }
}

TEST(Fibration, MorphismModes) {
    MorphismData md{{{"E", "D", Integer(2)}}, {{"D", M(3)}}, {{"E", M(4)}}};
    auto inf = check_orbifold_morphism(md, MorphismMode::Inf);
    EXPECT_TRUE(inf.ok);
    EXPECT_EQ(inf.checks.at(0).lhs, M(6));
    EXPECT_EQ(inf.checks.at(0).rhs, M(4));
    EXPECT_FALSE(check_orbifold_morphism(md, MorphismMode::Classical).ok);

    MorphismData divisible{{{"E", "D", Integer(2)}}, {{"D", M(3)}}, {{"E", M(3)}}};
    EXPECT_TRUE(check_orbifold_morphism(divisible, MorphismMode::Classical).ok);

    MorphismData logarithmic{{{"E", "D", Integer(1)}}, {{"D", kInf}}, {{"E", kInf}}};
    EXPECT_TRUE(check_orbifold_morphism(logarithmic, MorphismMode::Inf).ok);
    EXPECT_TRUE(check_orbifold_morphism(logarithmic, MorphismMode::Classical).ok);

    MorphismData fractional{{{"E", "D", Integer(1)}}, {{"D", Multiplicity(make_rational(3, 2))}}, {}};
    EXPECT_THROW(check_orbifold_morphism(fractional, MorphismMode::Classical), DomainError);
}

// Inf-mode morphism checks agree with t*m_X >= m_Y; classical with divisibility.
TEST(Fibration, MorphismOracle) {
    for (long t = 1; t <= 6; ++t)
        for (long mx = 1; mx <= 8; ++mx)
            for (long my = 1; my <= 8; ++my) {
                MorphismData md{{{"E", "D", Integer(t)}}, {{"D", M(mx)}}, {{"E", M(my)}}};
                EXPECT_EQ(check_orbifold_morphism(md, MorphismMode::Inf).ok, t * mx >= my);
                EXPECT_EQ(check_orbifold_morphism(md, MorphismMode::Classical).ok, (t * mx) % my == 0);
            }
}
