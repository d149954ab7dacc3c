#pragma once

#include "orbi/core.hpp"

#include <map>
#include <optional>
#include <string>

namespace orbi {

/// Canonical dimension of a one-dimensional orbifold.
enum class Kappa { NegativeInfinity, Zero, One };

std::string to_string(Kappa k);

/// A pair (C|Delta): a smooth projective curve of given genus with marked points.
///
/// A mark may stand for a Galois orbit of several geometric points that all
/// carry the same multiplicity (this is how restrictions to parametrized
/// curves report points defined over a number field). `orbit_sizes` holds the
/// number of geometric points per label; absent labels count once.
struct CurveOrbifold {
    long genus = 0;
    OrbifoldDivisor marks;
    std::map<std::string, long> orbit_sizes;

    CurveOrbifold() = default;
    CurveOrbifold(long genus, OrbifoldDivisor marks);

    long orbit_size(const std::string& label) const;
    /// Number of geometric points in the support.
    long geometric_support_size() const;

    friend bool operator==(const CurveOrbifold&, const CurveOrbifold&) = default;
};

/// Convenience constructor for a genus-g curve with marks labeled P1, P2, ...
CurveOrbifold make_curve(long genus, std::initializer_list<Multiplicity> marks);

/// 2g - 2 + sum of coefficients over marks (weighted by orbit sizes).
Rational canonical_degree(const CurveOrbifold& c);
Kappa kappa_curve(const CurveOrbifold& c);
bool is_special_curve(const CurveOrbifold& c);
bool is_rational_orbifold_curve(const CurveOrbifold& c);

struct SphericalProfile {
    bool rational = false;
    Rational degree;
    long support_size = 0;
    /// For exactly three marks on a rational orbifold: "(2,2,n)", "(2,3,3)",
    /// "(2,3,4)" or "(2,3,5)".
    std::optional<std::string> family;
};

/// Requires genus 0 and finite integral marks.
SphericalProfile spherical_profile(const CurveOrbifold& c);

} // namespace orbi
