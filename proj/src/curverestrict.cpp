#include "orbi/curverestrict.hpp"

#include "orbi/factor.hpp"

#include <algorithm>

namespace orbi {

namespace {

/// Canonical ordering key of a point factor: degree, then coefficients from s^d down.
bool point_less(const BinaryForm& a, const BinaryForm& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
    return false;
}

} // namespace

std::string to_string(RestrictionVariant v) { return v == RestrictionVariant::Z ? "Z" : "Q"; }

ParamPlaneCurve::ParamPlaneCurve(BinaryForm x0, BinaryForm x1, BinaryForm x2) {
    coords_ = {std::move(x0), std::move(x1), std::move(x2)};
    degree_ = coords_[0].degree();
    for (const auto& c : coords_)
        if (c.degree() != degree_) throw DomainError("parametrization coordinates have different degrees");
    if (degree_ < 1) throw DomainError("parametrization degree must be at least 1");

    // No common factor: the u-orders cannot all be positive and the
    // dehomogenized coordinates must be coprime.
    int min_u = degree_ + 1;
    QPoly g;
    bool any = false;
    for (const auto& c : coords_) {
        if (c.is_zero()) continue;
        any = true;
        min_u = std::min(min_u, c.u_order());
        g = gcd(g, c.dehomogenize());
    }
    if (!any) throw DomainError("parametrization has only zero coordinates");
    if (min_u > 0 || g.degree() > 0) throw DomainError("parametrization has a base point (coordinates share a factor)");
}

ParamPlaneCurve ParamPlaneCurve::from_polys(const MPoly& x0, const MPoly& x1, const MPoly& x2) {
    int d = -1;
    for (const MPoly* p : {&x0, &x1, &x2}) {
        int pd = p->homogeneous_degree();
        if (pd == -2) throw DomainError("coordinate is not homogeneous: " + p->to_string());
        if (pd == -1) continue;
        if (d != -1 && pd != d) throw DomainError("parametrization coordinates have different degrees");
        d = pd;
    }
    if (d < 1) throw DomainError("parametrization degree must be at least 1");
    return ParamPlaneCurve(to_binary_form(x0, d), to_binary_form(x1, d), to_binary_form(x2, d));
}

std::string ContactRecord::label() const { return "[" + point.to_string() + "]"; }

BinaryForm pullback(const ParamPlaneCurve& curve, const PlaneDivisorComponent& comp) {
    if (comp.form.vars().size() != 3) throw DomainError("component " + comp.label + " needs a form in x0, x1, x2");
    BinaryForm pb = substitute(comp.form, curve.coords(), curve.degree());
    if (pb.is_zero()) throw DomainError("curve lies inside the support component " + comp.label);
    return pb;
}

std::vector<ContactRecord> contact_orders(const ParamPlaneCurve& curve,
                                          const std::vector<PlaneDivisorComponent>& arrangement) {
    std::vector<ContactRecord> records;
    for (const auto& comp : arrangement) {
        for (const auto& ff : factor_form(pullback(curve, comp))) {
            auto it = std::find_if(records.begin(), records.end(),
                                   [&](const ContactRecord& r) { return r.point == ff.form; });
            if (it == records.end()) {
                records.push_back({ff.form, {}});
                it = std::prev(records.end());
            }
            it->contact[comp.label] += ff.multiplicity;
        }
    }
    std::sort(records.begin(), records.end(),
              [](const ContactRecord& a, const ContactRecord& b) { return point_less(a.point, b.point); });
    return records;
}

namespace {

const PlaneDivisorComponent& find_component(const std::vector<PlaneDivisorComponent>& arrangement,
                                            const std::string& label) {
    for (const auto& c : arrangement)
        if (c.label == label) return c;
    throw DomainError("unknown component " + label);
}

CurveOrbifold from_records(const std::vector<ContactRecord>& records,
                           const std::vector<std::pair<std::string, Multiplicity>>& mults) {
    CurveOrbifold out;
    out.genus = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (mults[i].second.is_one()) continue;
        out.marks.set(mults[i].first, mults[i].second);
        if (records[i].orbit_size() != 1) out.orbit_sizes[mults[i].first] = records[i].orbit_size();
    }
    return out;
}

} // namespace

CurveOrbifold restrict_z(const ParamPlaneCurve& curve, const std::vector<PlaneDivisorComponent>& arrangement) {
    for (const auto& c : arrangement)
        if (!c.mult.is_integral())
            throw DomainError("integral restriction needs integral multiplicities, " + c.label + " has " +
                              c.mult.to_string());
    auto records = contact_orders(curve, arrangement);
    std::vector<std::pair<std::string, Multiplicity>> mults;
    for (const auto& r : records) {
        Multiplicity m;
        for (const auto& [label, t] : r.contact) {
            const Multiplicity& mj = find_component(arrangement, label).mult;
            if (mj.is_infinite()) {
                m = Multiplicity::infinity();
                continue;
            }
            Integer mi = *mj.as_integer();
            m = lcm(m, Multiplicity(Rational(mi / gcd(mi, Integer(t)))));
        }
        mults.emplace_back(r.label(), m);
    }
    return from_records(records, mults);
}

CurveOrbifold restrict_q(const ParamPlaneCurve& curve, const std::vector<PlaneDivisorComponent>& arrangement,
                         bool& clamped) {
    clamped = false;
    auto records = contact_orders(curve, arrangement);
    std::vector<std::pair<std::string, Multiplicity>> mults;
    for (const auto& r : records) {
        Multiplicity m;
        for (const auto& [label, t] : r.contact) {
            const Multiplicity& mj = find_component(arrangement, label).mult;
            auto ratio = mj.divided_by(Integer(t));
            if (!ratio) {
                m = Multiplicity::infinity();
            } else if (*ratio < 1) {
                clamped = true;
            } else {
                m = max(m, Multiplicity(*ratio));
            }
        }
        mults.emplace_back(r.label(), m);
    }
    return from_records(records, mults);
}

CurveOrbifold restrict_q(const ParamPlaneCurve& curve, const std::vector<PlaneDivisorComponent>& arrangement) {
    bool clamped = false;
    return restrict_q(curve, arrangement, clamped);
}

CurveOrbifold restrict(const ParamPlaneCurve& curve, const std::vector<PlaneDivisorComponent>& arrangement,
                       RestrictionVariant variant) {
    return variant == RestrictionVariant::Z ? restrict_z(curve, arrangement) : restrict_q(curve, arrangement);
}

bool is_delta_rational(const ParamPlaneCurve& curve, const std::vector<PlaneDivisorComponent>& arrangement,
                       RestrictionVariant variant) {
    return kappa_curve(restrict(curve, arrangement, variant)) == Kappa::NegativeInfinity;
}

} // namespace orbi
