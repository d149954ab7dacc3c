#include "orbi/curverestrict.hpp"
#include "orbi/dsl.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace orbi;

namespace {

const std::vector<std::string> kST{"s", "u"};
const std::vector<std::string> kX{"x0", "x1", "x2"};

ParamPlaneCurve curve(const char* x0, const char* x1, const char* x2) {
    return ParamPlaneCurve::from_polys(dsl::parse_polynomial(x0, kST), dsl::parse_polynomial(x1, kST),
                                       dsl::parse_polynomial(x2, kST));
}

PlaneDivisorComponent comp(const std::string& label, const char* form, Multiplicity m) {
    return {label, dsl::parse_polynomial(form, kX), m};
}

std::vector<PlaneDivisorComponent> general_lines(const std::vector<long>& ms) {
    static const char* forms[] = {"x0", "x1", "x2", "x0 + x1 + x2"};
    std::vector<PlaneDivisorComponent> out;
    for (std::size_t i = 0; i < ms.size(); ++i) out.push_back(comp("L" + std::to_string(i + 1), forms[i], Multiplicity(ms[i])));
    return out;
}

// Oracle: canonical degree of P^1 with the given Z-multiplicities per point,
// where a point meeting lines with multiplicities m_j (contact 1) gets lcm m_j.
Rational degree_from_points(const std::vector<std::vector<long>>& points) {
    Rational d(-2);
    for (const auto& ms : points) {
        long l = 1;
        for (long m : ms) l = std::lcm(l, m);
        d += Rational(1) - Rational(1, l);
    }
    d.canonicalize();
    return d;
}

const Multiplicity kInf = Multiplicity::infinity();

} // namespace

TEST(ParamCurve, Validation) {
    EXPECT_THROW(curve("s", "s", "s^2"), DomainError);          // unequal degrees
    EXPECT_THROW(curve("s*u", "s^2", "s*(s + u)"), DomainError);  // common factor s
    EXPECT_THROW(curve("s*u", "u^2", "s*u + u^2"), DomainError);   // common factor u
    EXPECT_THROW(curve("0", "0", "0"), DomainError);
    EXPECT_NO_THROW(curve("0", "s", "u"));
    EXPECT_EQ(curve("s^2", "s*u", "u^2").degree(), 2);
}

TEST(ContactOrders, LineAgainstConic) {
    auto conic = std::vector{comp("C", "x0*x2 - x1^2", kInf)};
    auto tangent = contact_orders(curve("0", "s", "u"), conic);
    ASSERT_EQ(tangent.size(), 1u);
    EXPECT_EQ(tangent[0].contact.at("C"), 2);
    auto secant = contact_orders(curve("s", "0", "u"), conic);
    ASSERT_EQ(secant.size(), 2u);
    EXPECT_EQ(secant[0].contact.at("C"), 1);
    EXPECT_EQ(secant[1].contact.at("C"), 1);
    EXPECT_THROW(contact_orders(curve("s^2", "s*u", "u^2"), conic), DomainError);
}

TEST(ContactOrders, IrrationalPointsFormOneOrbit) {
    auto conic = std::vector{comp("C", "x0^2 + x1^2 - x2^2", Multiplicity(3L))};
    auto records = contact_orders(curve("s", "u", "0"), conic);
    ASSERT_EQ(records.size(), 1u);
    EXPECT_EQ(records[0].orbit_size(), 2);
    EXPECT_EQ(records[0].contact.at("C"), 1);
    auto restricted = restrict_z(curve("s", "u", "0"), conic);
    EXPECT_EQ(restricted.geometric_support_size(), 2);
    EXPECT_EQ(canonical_degree(restricted), make_rational(-2, 3));
}

TEST(Restriction, ZAndQVariants) {
    // Line x0 = 0 as the curve (0, s, u) meets the conic x0 x2 = x1^2 with
    // contact 2; with m = 3: Z gives 3/gcd(3,2) = 3, Q gives max(1, 3/2).
    auto conic = std::vector{comp("C", "x0*x2 - x1^2", Multiplicity(3L))};
    auto z = restrict_z(curve("0", "s", "u"), conic);
    EXPECT_EQ(z.marks.entries().begin()->second, Multiplicity(3L));
    bool clamped = true;
    auto q = restrict_q(curve("0", "s", "u"), conic, clamped);
    EXPECT_EQ(q.marks.entries().begin()->second, Multiplicity(make_rational(3, 2)));
    EXPECT_FALSE(clamped);

    // m = 2 with contact 4: Q would give 1/2, clamped to 1.
    auto line = std::vector{comp("L", "x1", Multiplicity(2L))};
    auto cusp = curve("s^4", "u^4", "s*u^3");
    EXPECT_EQ(contact_orders(cusp, line).at(0).contact.at("L"), 4);
    auto q2 = restrict_q(cusp, line, clamped);
    EXPECT_TRUE(clamped);
    EXPECT_TRUE(q2.marks.empty());
    EXPECT_TRUE(restrict_z(cusp, line).marks.empty());
}

TEST(Restriction, CuspidalCubicAgainstLogLine) {
    auto cusp_tangent = std::vector{comp("D", "x1", kInf)};
    EXPECT_TRUE(is_delta_rational(curve("s^2*u", "s^3", "u^3"), cusp_tangent, RestrictionVariant::Z));
    EXPECT_FALSE(is_delta_rational(curve("s^3", "s^2*u", "u^3"), cusp_tangent, RestrictionVariant::Z));
}

// Lines through a node of three general lines are Delta-rational for every
// multiplicity triple; the degree agrees with the lcm oracle.
TEST(Restriction, ThreeLinesNodeFamilies) {
    auto node12 = curve("s", "2*s", "u");        // through x0 = x1 = 0
    auto node13 = curve("3*u", "s + u", "2*u");  // through x0 = x2 = 0
    for (long a = 2; a <= 12; ++a)
        for (long b = 2; b <= 12; ++b)
            for (long c = 2; c <= 12; ++c) {
                auto arr = general_lines({a, b, c});
                auto r12 = restrict_z(node12, arr);
                EXPECT_EQ(canonical_degree(r12), degree_from_points({{a, b}, {c}}));
                EXPECT_EQ(kappa_curve(r12), Kappa::NegativeInfinity);
                EXPECT_EQ(canonical_degree(restrict_z(node13, arr)), degree_from_points({{a, c}, {b}}));
            }
}

TEST(Restriction, FourLinesOnlyTheAbNodeSurvives) {
    auto node_ab = curve("s + u", "-s + 2*u", "3*u");  // through (1:-1:0) = L3 and L4
    auto node_12 = curve("s", "2*s", "u");             // through L1 and L2
    auto node_13 = curve("3*u", "s + u", "2*u");       // through L1 and L3
    for (long a = 4; a <= 12; ++a)
        for (long b = a; b <= 12; ++b) {
            auto arr = general_lines({2, 2, a, b});
            EXPECT_TRUE(is_delta_rational(node_ab, arr, RestrictionVariant::Z));
            EXPECT_FALSE(is_delta_rational(node_12, arr, RestrictionVariant::Z));
            EXPECT_FALSE(is_delta_rational(node_13, arr, RestrictionVariant::Z));
            EXPECT_EQ(canonical_degree(restrict_z(node_13, arr)), degree_from_points({{2, a}, {2}, {b}}));
        }
    // Below a = 4 the node of the two double lines still carries a family.
    EXPECT_TRUE(is_delta_rational(node_12, general_lines({2, 2, 3, 3}), RestrictionVariant::Z));
    EXPECT_FALSE(is_delta_rational(node_13, general_lines({2, 2, 3, 3}), RestrictionVariant::Z));
}

TEST(Restriction, CurveInsideSupportIsRejected) {
    auto arr = std::vector{comp("D", "x2", kInf)};
    EXPECT_THROW(restrict_z(curve("s", "u", "0"), arr), DomainError);
}
