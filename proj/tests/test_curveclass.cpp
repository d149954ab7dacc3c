#include "orbi/curveclass.hpp"

#include <gtest/gtest.h>

using namespace orbi;

namespace {

Multiplicity M(long v) { return Multiplicity(v); }
const Multiplicity kInf = Multiplicity::infinity();

// Independent oracle: 2g - 2 + sum (1 - 1/m) with plain rationals.
Rational degree_oracle(long g, const std::vector<long>& ms, long infinite_points = 0) {
    Rational d(2 * g - 2 + infinite_points);
    for (long m : ms) d += Rational(1) - Rational(1, m);
    d.canonicalize();
    return d;
}

} // namespace

TEST(CurveClass, TriangleGroup237) {
    auto c = make_curve(0, {M(2), M(3), M(7)});
    EXPECT_EQ(canonical_degree(c), make_rational(1, 42));
    EXPECT_EQ(kappa_curve(c), Kappa::One);
    EXPECT_FALSE(is_special_curve(c));
    EXPECT_FALSE(is_rational_orbifold_curve(c));
}

TEST(CurveClass, TrichotomyBoundaries) {
    EXPECT_EQ(kappa_curve(make_curve(0, {M(2), M(3), M(6)})), Kappa::Zero);
    EXPECT_EQ(kappa_curve(make_curve(0, {M(2), M(4), M(4)})), Kappa::Zero);
    EXPECT_EQ(kappa_curve(make_curve(0, {M(3), M(3), M(3)})), Kappa::Zero);
    EXPECT_EQ(kappa_curve(make_curve(0, {M(2), M(2), M(2), M(2)})), Kappa::Zero);
    EXPECT_EQ(kappa_curve(make_curve(0, {M(2), M(3), M(5)})), Kappa::NegativeInfinity);
    EXPECT_EQ(kappa_curve(make_curve(0, {kInf, kInf})), Kappa::Zero);
    EXPECT_EQ(kappa_curve(make_curve(0, {kInf, kInf, M(2)})), Kappa::One);
    EXPECT_EQ(kappa_curve(make_curve(1, {})), Kappa::Zero);
    EXPECT_EQ(kappa_curve(make_curve(1, {M(2)})), Kappa::One);
    EXPECT_EQ(kappa_curve(make_curve(2, {})), Kappa::One);
    EXPECT_EQ(kappa_curve(make_curve(0, {})), Kappa::NegativeInfinity);
}

TEST(CurveClass, DegreeMatchesOracle) {
    for (long g = 0; g <= 2; ++g)
        for (long a = 2; a <= 9; ++a)
            for (long b = a; b <= 9; ++b)
                for (long c = b; c <= 9; ++c) {
                    auto curve = make_curve(g, {M(a), M(b), M(c)});
                    Rational d = degree_oracle(g, {a, b, c});
                    EXPECT_EQ(canonical_degree(curve), d);
                    Kappa expected = d < 0 ? Kappa::NegativeInfinity : (d == 0 ? Kappa::Zero : Kappa::One);
                    EXPECT_EQ(kappa_curve(curve), expected);
                    EXPECT_EQ(is_special_curve(curve), d <= 0);
                }
    EXPECT_EQ(canonical_degree(make_curve(0, {kInf, M(3)})), degree_oracle(0, {3}, 1));
}

TEST(CurveClass, OrbitSizesWeightDegree) {
    OrbifoldDivisor marks{{"pair", M(2)}, {"single", M(3)}};
    CurveOrbifold c(0, marks);
    c.orbit_sizes["pair"] = 2;
    EXPECT_EQ(c.geometric_support_size(), 3);
    EXPECT_EQ(canonical_degree(c), degree_oracle(0, {2, 2, 3}));
}

TEST(CurveClass, RejectsNegativeGenus) { EXPECT_THROW(CurveOrbifold(-1, {}), DomainError); }

TEST(CurveClass, SphericalFamilies) {
    EXPECT_EQ(spherical_profile(make_curve(0, {M(2), M(2), M(11)})).family, "(2,2,n)");
    EXPECT_EQ(spherical_profile(make_curve(0, {M(2), M(3), M(3)})).family, "(2,3,3)");
    EXPECT_EQ(spherical_profile(make_curve(0, {M(3), M(2), M(4)})).family, "(2,3,4)");
    EXPECT_EQ(spherical_profile(make_curve(0, {M(2), M(3), M(5)})).family, "(2,3,5)");
    auto two = spherical_profile(make_curve(0, {M(4), M(9)}));
    EXPECT_TRUE(two.rational);
    EXPECT_FALSE(two.family.has_value());
    auto hyper = spherical_profile(make_curve(0, {M(2), M(3), M(7)}));
    EXPECT_FALSE(hyper.rational);
    EXPECT_FALSE(hyper.family.has_value());
    EXPECT_THROW(spherical_profile(make_curve(1, {M(2)})), DomainError);
    EXPECT_THROW(spherical_profile(make_curve(0, {kInf})), DomainError);
}

// Brute-force oracle: among triples 2 <= p <= q <= r <= 30, the spherical
// ones are exactly (2,2,n), (2,3,3), (2,3,4), (2,3,5).
TEST(CurveClass, SphericalTriplesAreTheKnownList) {
    for (long p = 2; p <= 30; ++p)
        for (long q = p; q <= 30; ++q)
            for (long r = q; r <= 30; ++r) {
                bool listed = (p == 2 && q == 2) || (p == 2 && q == 3 && r <= 5);
                EXPECT_EQ(is_rational_orbifold_curve(make_curve(0, {M(p), M(q), M(r)})), listed)
                    << p << ',' << q << ',' << r;
            }
}
