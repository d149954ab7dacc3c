#include "orbi/fibration.hpp"

namespace orbi {

std::string to_string(BaseMode m) { return m == BaseMode::Inf ? "inf" : "gcd"; }
std::string to_string(MorphismMode m) { return m == MorphismMode::Inf ? "inf" : "classical"; }

FiberComponent::FiberComponent(Integer t_, Multiplicity m_) : t(std::move(t_)), m(std::move(m_)) {
    if (t < 1) throw DomainError("fibre coefficient t must be a positive integer");
}

FibrationData::FibrationData(Map fibers) : fibers_(std::move(fibers)) {
    for (const auto& [label, comps] : fibers_) {
        if (comps.empty()) throw DomainError("no fibre components over " + label);
        for (const auto& c : comps)
            if (c.t < 1) throw DomainError("fibre coefficient t must be a positive integer over " + label);
    }
}

const std::vector<FiberComponent>& FibrationData::over(const std::string& label) const {
    auto it = fibers_.find(label);
    if (it == fibers_.end()) throw DomainError("no fibre data over " + label);
    return it->second;
}

Multiplicity base_multiplicity(const FibrationData& fd, const std::string& label, BaseMode mode) {
    const auto& comps = fd.over(label);
    if (mode == BaseMode::Inf) {
        Multiplicity best = Multiplicity::infinity();
        for (const auto& c : comps) best = min(best, c.product());
        return best;
    }
    Integer g = 0;
    for (const auto& c : comps) {
        Multiplicity tm = c.product();
        auto v = tm.as_integer();
        if (!v)
            throw DomainError("gcd multiplicity over " + label + " needs finite integral t*m, got " + tm.to_string());
        g = gcd(g, *v);
    }
    return Multiplicity(Rational(g));
}

OrbifoldDivisor orbifold_base(const FibrationData& fd, BaseMode mode) {
    OrbifoldDivisor out;
    for (const auto& [label, comps] : fd.fibers()) out.set(label, base_multiplicity(fd, label, mode));
    return out;
}

TwoStageData::TwoStageData(FibrationData upper, LowerMap lower) : upper_(std::move(upper)), lower_(std::move(lower)) {
    for (const auto& [z, terms] : lower_) {
        if (terms.empty()) throw DomainError("no pullback terms over " + z);
        for (const auto& term : terms) {
            if (term.s < 1) throw DomainError("pullback coefficient s must be a positive integer over " + z);
            if (!upper_.has(term.y_label))
                throw DomainError("divisor " + term.y_label + " referenced over " + z + " has no fibre data");
        }
    }
}

ComposedBases compose_base(const TwoStageData& ts) {
    ComposedBases out;
    for (const auto& [z, terms] : ts.lower()) {
        Multiplicity direct = Multiplicity::infinity();
        Multiplicity staged = Multiplicity::infinity();
        for (const auto& term : terms) {
            for (const auto& c : ts.upper().over(term.y_label)) direct = min(direct, c.m.times(term.s * c.t));
            staged = min(staged, base_multiplicity(ts.upper(), term.y_label, BaseMode::Inf).times(term.s));
        }
        out.direct.set(z, direct);
        out.staged.set(z, staged);
    }
    return out;
}

MorphismReport check_orbifold_morphism(const MorphismData& md, MorphismMode mode) {
    if (mode == MorphismMode::Classical && (!md.delta_x.is_integral() || !md.delta_y.is_integral()))
        throw DomainError("classical orbifold morphisms need integral divisors");
    MorphismReport report;
    for (const auto& pair : md.pairs) {
        if (pair.t < 1) throw DomainError("contact coefficient t must be a positive integer");
        MorphismPairCheck check{pair, md.delta_x.multiplicity(pair.x_label).times(pair.t),
                                md.delta_y.multiplicity(pair.y_label), false};
        check.ok = mode == MorphismMode::Inf ? check.lhs >= check.rhs : divides(check.rhs, check.lhs);
        report.ok = report.ok && check.ok;
        report.checks.push_back(std::move(check));
    }
    return report;
}

} // namespace orbi
