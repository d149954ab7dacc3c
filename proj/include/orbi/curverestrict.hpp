#pragma once

#include "orbi/core.hpp"
#include "orbi/curveclass.hpp"
#include "orbi/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace orbi {

/// g: P^1 -> P^2, (s:u) |-> (x0(s,u) : x1(s,u) : x2(s,u)). The coordinates
/// share a degree d >= 1 and have no common factor (no base points).
class ParamPlaneCurve {
public:
    ParamPlaneCurve(BinaryForm x0, BinaryForm x1, BinaryForm x2);
    /// Builds from polynomials in (s, u); zero coordinates take the common degree.
    static ParamPlaneCurve from_polys(const MPoly& x0, const MPoly& x1, const MPoly& x2);

    int degree() const { return degree_; }
    const std::vector<BinaryForm>& coords() const { return coords_; }

private:
    int degree_ = 0;
    std::vector<BinaryForm> coords_;
};

/// A component D_j of Delta, cut out by a squarefree form in x0, x1, x2.
struct PlaneDivisorComponent {
    std::string label;
    MPoly form;
    Multiplicity mult;
};

/// A Galois orbit of points of P^1 (an irreducible factor over Q of some
/// pullback) and its order of contact with each component passing through it.
struct ContactRecord {
    BinaryForm point;
    std::map<std::string, long> contact;

    /// Number of geometric points in the orbit.
    int orbit_size() const { return point.degree(); }
    std::string label() const;
};

enum class RestrictionVariant { Z, Q };
std::string to_string(RestrictionVariant v);

/// Substitutes the parametrization into the component's form. Throws when the
/// curve lies inside the component.
BinaryForm pullback(const ParamPlaneCurve& curve, const PlaneDivisorComponent& comp);

/// Contact orders of the curve with the arrangement, one record per point
/// orbit, ordered by the canonical point factor.
std::vector<ContactRecord> contact_orders(const ParamPlaneCurve& curve,
                                          const std::vector<PlaneDivisorComponent>& arrangement);

/// Minimal integral orbifold divisor: m_C(a) = lcm_j m_j / gcd(m_j, t_{j,a}).
CurveOrbifold restrict_z(const ParamPlaneCurve& curve, const std::vector<PlaneDivisorComponent>& arrangement);

/// Rational variant: m_C(a) = max(1, max_j m_j / t_{j,a}).
CurveOrbifold restrict_q(const ParamPlaneCurve& curve, const std::vector<PlaneDivisorComponent>& arrangement);

/// Same as restrict_q but also reports whether any value was clamped up to 1.
CurveOrbifold restrict_q(const ParamPlaneCurve& curve, const std::vector<PlaneDivisorComponent>& arrangement,
                         bool& clamped);

CurveOrbifold restrict(const ParamPlaneCurve& curve, const std::vector<PlaneDivisorComponent>& arrangement,
                       RestrictionVariant variant);

bool is_delta_rational(const ParamPlaneCurve& curve, const std::vector<PlaneDivisorComponent>& arrangement,
                       RestrictionVariant variant);

} // namespace orbi
