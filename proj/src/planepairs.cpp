#include "orbi/planepairs.hpp"

#include <set>

namespace orbi {

PlaneArrangementPair::PlaneArrangementPair(std::vector<PlaneComponent> components) {
    std::set<std::string> seen;
    for (auto& c : components) {
        if (c.degree < 1) throw DomainError("component " + c.label + " has degree below 1");
        if (!seen.insert(c.label).second) throw DomainError("duplicate component label " + c.label);
        if (c.mult.is_one()) continue;
        components_.push_back(std::move(c));
    }
}

PlaneArrangementPair PlaneArrangementPair::lines(std::initializer_list<long> mults) {
    std::vector<PlaneComponent> comps;
    int i = 1;
    for (long m : mults) comps.push_back({"L" + std::to_string(i++), 1, Multiplicity(m)});
    return PlaneArrangementPair(std::move(comps));
}

bool PlaneArrangementPair::lines_only() const {
    for (const auto& c : components_)
        if (c.degree != 1) return false;
    return true;
}

Rational anticanonical_degree(const PlaneArrangementPair& p) {
    Rational a(3);
    for (const auto& c : p.components()) a -= coefficient(c.mult) * c.degree;
    a.canonicalize();
    return a;
}

bool is_fano(const PlaneArrangementPair& p) { return anticanonical_degree(p) > 0; }

namespace {

void require_divisible_lines(const PlaneArrangementPair& p, long degree) {
    if (degree < 1) throw DomainError("curve degree must be positive");
    for (const auto& c : p.components()) {
        if (c.degree != 1) throw DomainError("component " + c.label + " is not a line");
        auto m = c.mult.as_integer();
        if (!m) throw DomainError("component " + c.label + " needs a finite integral multiplicity");
        if (degree % m->get_si() != 0)
            throw DomainError("multiplicity " + m->get_str() + " of " + c.label + " does not divide degree " +
                              std::to_string(degree));
    }
}

Integer conditions(const PlaneArrangementPair& p, long degree) {
    Integer total = 0;
    for (const auto& c : p.components()) {
        Integer m = *c.mult.as_integer();
        // deg/m tangency points, each imposing m - 1 conditions.
        total += Integer(degree) / m * (m - 1);
    }
    return total;
}

} // namespace

Integer expected_family_dim(const PlaneArrangementPair& p, long degree) {
    require_divisible_lines(p, degree);
    return Integer(3 * degree - 1) - conditions(p, degree);
}

bool adjunction_identity_check(const PlaneArrangementPair& p, long degree) {
    Rational rhs = anticanonical_degree(p) * degree - 1;
    rhs.canonicalize();
    return Rational(expected_family_dim(p, degree)) == rhs;
}

FamilyDimReport family_dim_report(const PlaneArrangementPair& p, long degree) {
    require_divisible_lines(p, degree);
    FamilyDimReport r;
    r.parameters = 3 * degree - 1;
    r.conditions = conditions(p, degree);
    r.dimension = r.parameters - r.conditions;
    r.anticanonical = anticanonical_degree(p);
    r.identity_holds = adjunction_identity_check(p, degree);
    Integer l = 1;
    for (const auto& c : p.components()) l = lcm(l, *c.mult.as_integer());
    if (Integer(degree) % l == 0) {
        r.n = Integer(degree) / l;
        r.shortcut_3n_minus_1 = 3 * *r.n - 1;
        r.shortcut_matches = *r.shortcut_3n_minus_1 == r.dimension;
    }
    return r;
}

} // namespace orbi
