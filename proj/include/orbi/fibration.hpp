#pragma once

#include "orbi/core.hpp"

#include <map>
#include <string>
#include <vector>

namespace orbi {

enum class BaseMode { Inf, Gcd };
enum class MorphismMode { Inf, Classical };

std::string to_string(BaseMode m);
std::string to_string(MorphismMode m);

/// One component E_k of f^*D: its coefficient t_k and its Delta-multiplicity.
/// f-exceptional components are not representable.
struct FiberComponent {
    Integer t = 1;
    Multiplicity m;

    FiberComponent() = default;
    FiberComponent(Integer t, Multiplicity m);

    /// t * m, exact.
    Multiplicity product() const { return m.times(t); }

    friend bool operator==(const FiberComponent&, const FiberComponent&) = default;
};

/// Multiple-fibre data of a fibration f: (X|Delta) -> Y, keyed by base divisor.
class FibrationData {
public:
    using Map = std::map<std::string, std::vector<FiberComponent>>;

    FibrationData() = default;
    explicit FibrationData(Map fibers);

    const Map& fibers() const { return fibers_; }
    const std::vector<FiberComponent>& over(const std::string& label) const;
    bool has(const std::string& label) const { return fibers_.count(label) != 0; }

    friend bool operator==(const FibrationData&, const FibrationData&) = default;

private:
    Map fibers_;
};

/// inf_k(t_k m_k) or gcd_k(t_k m_k) over the components above `label`.
Multiplicity base_multiplicity(const FibrationData& fd, const std::string& label, BaseMode mode);

/// The orbifold base divisor of the fibration (multiplicity-1 labels dropped).
OrbifoldDivisor orbifold_base(const FibrationData& fd, BaseMode mode);

/// g^*F = sum_l s_l D_l, one entry per D_l.
struct LowerTerm {
    Integer s = 1;
    std::string y_label;

    friend bool operator==(const LowerTerm&, const LowerTerm&) = default;
};

/// Data of X -f-> Y -g-> Z: the fibres of f over Y-divisors and the
/// decomposition of g-pullbacks of Z-divisors.
class TwoStageData {
public:
    using LowerMap = std::map<std::string, std::vector<LowerTerm>>;

    TwoStageData(FibrationData upper, LowerMap lower);

    const FibrationData& upper() const { return upper_; }
    const LowerMap& lower() const { return lower_; }

private:
    FibrationData upper_;
    LowerMap lower_;
};

struct ComposedBases {
    OrbifoldDivisor direct;  // base of g o f from flattened components
    OrbifoldDivisor staged;  // base of g over (Y | Delta_f)
};

/// Both evaluation orders of the composed orbifold base (inf multiplicities).
ComposedBases compose_base(const TwoStageData& ts);

struct MorphismPair {
    std::string y_label;
    std::string x_label;
    Integer t = 1;

    friend bool operator==(const MorphismPair&, const MorphismPair&) = default;
};

struct MorphismData {
    std::vector<MorphismPair> pairs;
    OrbifoldDivisor delta_x;
    OrbifoldDivisor delta_y;

    friend bool operator==(const MorphismData&, const MorphismData&) = default;
};

struct MorphismPairCheck {
    MorphismPair pair;
    Multiplicity lhs;  // t * m_X(D)
    Multiplicity rhs;  // m_Y(E)
    bool ok = false;
};

struct MorphismReport {
    bool ok = true;
    std::vector<MorphismPairCheck> checks;
};

/// Inf mode: t m_X(D) >= m_Y(E). Classical mode: m_Y(E) divides t m_X(D),
/// which requires both divisors integral.
MorphismReport check_orbifold_morphism(const MorphismData& md, MorphismMode mode);

} // namespace orbi
