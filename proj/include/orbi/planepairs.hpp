#pragma once

#include "orbi/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbi {

struct PlaneComponent {
    std::string label;
    long degree = 1;
    Multiplicity mult;

    friend bool operator==(const PlaneComponent&, const PlaneComponent&) = default;
};

/// (P^2|Delta) for an arrangement of plane curves in general position. Only
/// the numerical data (degree, multiplicity) is kept; general position is
/// assumed, never checked. Multiplicity-1 components are dropped.
class PlaneArrangementPair {
public:
    PlaneArrangementPair() = default;
    explicit PlaneArrangementPair(std::vector<PlaneComponent> components);

    /// k lines labeled L1..Lk with the given multiplicities.
    static PlaneArrangementPair lines(std::initializer_list<long> mults);

    const std::vector<PlaneComponent>& components() const { return components_; }
    bool lines_only() const;

    friend bool operator==(const PlaneArrangementPair&, const PlaneArrangementPair&) = default;

private:
    std::vector<PlaneComponent> components_;
};

/// 3 - sum_j d_j (1 - 1/m_j): the degree of -(K + Delta) against a line.
Rational anticanonical_degree(const PlaneArrangementPair& p);
bool is_fano(const PlaneArrangementPair& p);

/// (3 deg - 1) parameters minus sum_j deg (1 - 1/m_j) contact conditions for
/// rational curves of degree `degree` with all contact orders along line j
/// divisible by m_j. Requires lines with finite integral m_j dividing degree.
Integer expected_family_dim(const PlaneArrangementPair& p, long degree);

/// Checks expected_family_dim == degree * anticanonical_degree - 1 exactly.
bool adjunction_identity_check(const PlaneArrangementPair& p, long degree);

struct FamilyDimReport {
    Integer parameters;  // 3 deg - 1
    Integer conditions;  // sum deg (1 - 1/m_j)
    Integer dimension;
    Rational anticanonical;
    bool identity_holds = false;
    /// Set when lcm(m_j) divides the degree: N = degree / lcm.
    std::optional<Integer> n;
    /// The shortcut estimate 3N - 1 and whether it agrees with `dimension`.
    std::optional<Integer> shortcut_3n_minus_1;
    bool shortcut_matches = false;
};

FamilyDimReport family_dim_report(const PlaneArrangementPair& p, long degree);

} // namespace orbi
