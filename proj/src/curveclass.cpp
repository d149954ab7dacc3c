#include "orbi/curveclass.hpp"

#include <algorithm>
#include <vector>

namespace orbi {

std::string to_string(Kappa k) {
    switch (k) {
    case Kappa::NegativeInfinity: return "-inf";
    case Kappa::Zero: return "0";
    case Kappa::One: return "1";
    }
    return "?";
}

CurveOrbifold::CurveOrbifold(long g, OrbifoldDivisor m) : genus(g), marks(std::move(m)) {
    if (genus < 0) throw DomainError("genus must be nonnegative");
}

long CurveOrbifold::orbit_size(const std::string& label) const {
    auto it = orbit_sizes.find(label);
    return it == orbit_sizes.end() ? 1 : it->second;
}

long CurveOrbifold::geometric_support_size() const {
    long n = 0;
    for (const auto& [label, m] : marks.entries()) n += orbit_size(label);
    return n;
}

CurveOrbifold make_curve(long genus, std::initializer_list<Multiplicity> marks) {
    OrbifoldDivisor d;
    int i = 1;
    for (const auto& m : marks) d.set("P" + std::to_string(i++), m);
    return CurveOrbifold(genus, std::move(d));
}

Rational canonical_degree(const CurveOrbifold& c) {
    Rational deg(2 * c.genus - 2);
    for (const auto& [label, m] : c.marks.entries()) deg += coefficient(m) * c.orbit_size(label);
    deg.canonicalize();
    return deg;
}

Kappa kappa_curve(const CurveOrbifold& c) {
    int s = sgn(canonical_degree(c));
    if (s < 0) return Kappa::NegativeInfinity;
    if (s == 0) return Kappa::Zero;
    return Kappa::One;
}

bool is_special_curve(const CurveOrbifold& c) { return canonical_degree(c) <= 0; }

bool is_rational_orbifold_curve(const CurveOrbifold& c) {
    return c.genus == 0 && canonical_degree(c) < 0;
}

SphericalProfile spherical_profile(const CurveOrbifold& c) {
    if (c.genus != 0) throw DomainError("spherical profile needs a genus-0 curve");
    std::vector<Integer> mults;
    for (const auto& [label, m] : c.marks.entries()) {
        auto v = m.as_integer();
        if (!v) throw DomainError("spherical profile needs finite integral marks, got " + m.to_string());
        for (long i = 0; i < c.orbit_size(label); ++i) mults.push_back(*v);
    }
    SphericalProfile out;
    out.degree = canonical_degree(c);
    out.rational = out.degree < 0;
    out.support_size = static_cast<long>(mults.size());
    if (out.rational && mults.size() == 3) {
        std::sort(mults.begin(), mults.end());
        if (mults[0] == 2 && mults[1] == 2)
            out.family = "(2,2,n)";
        else if (mults[0] == 2 && mults[1] == 3 && mults[2] <= 5)
            out.family = "(2,3," + mults[2].get_str() + ")";
    }
    return out;
}

} // namespace orbi
