#pragma once

#include "orbi/core.hpp"

#include <cstddef>
#include <vector>

namespace orbi {

/// (J) = (J_1, ..., J_N): N subsets of {1..p} of cardinality q, kept sorted
/// (the tensor factors are ordered, so (J) is a multiset of subsets).
/// Subsets are stored as sorted 1-based index vectors.
class MultiIndexJ {
public:
    MultiIndexJ(int p, int q, std::vector<std::vector<int>> subsets);

    int p() const { return p_; }
    int q() const { return q_; }
    int n() const { return static_cast<int>(subsets_.size()); }
    const std::vector<std::vector<int>>& subsets() const { return subsets_; }

private:
    int p_;
    int q_;
    std::vector<std::vector<int>> subsets_;
};

/// k_j = number of l with j in J_l, for j = 1..p. Sums to N q.
std::vector<long> occupancy(const MultiIndexJ& j);

struct ExponentProfile {
    std::vector<long> occupancy;
    std::vector<Integer> ceil_exp;   // ceil(k_j / m_j)
    std::vector<Integer> floor_exp;  // floor(k_j (1 - 1/m_j))
};

/// Exponents of the local generator attached to an occupancy vector. Throws
/// when an integral m_j violates floor(k(1-1/m)) = k - ceil(k/m).
ExponentProfile generator_exponents(const std::vector<long>& k, const std::vector<Multiplicity>& mults);

/// floor(k (1 - 1/m)) for finite m.
Integer floor_exponent(long k, const Multiplicity& m);

struct EnumerationLimits {
    /// Upper bound on p * N * q for any enumerated N.
    long max_pnq = 4096;
    /// Upper bound on the number of multi-indices enumerated per N.
    long max_indices = 5'000'000;
};

/// Default limits, honouring the ORBI_SYMDIFF_LIMIT environment variable
/// (an override for max_pnq).
EnumerationLimits default_limits();

struct PositiveFloorReport {
    int p = 0;
    int q = 0;
    std::vector<Multiplicity> mults;
    long threshold = 0;  // ceil(p / (q (1 - 1/m))), m = min m_j
    struct Level {
        long n = 0;
        long enumerated = 0;
        long counterexamples = 0;
    };
    std::vector<Level> levels;
    /// Occupancy vectors of counterexamples (empty when the lemma holds).
    std::vector<std::vector<long>> counterexamples;

    long total_enumerated() const;
    long total_counterexamples() const;
};

/// Enumerates every multi-index for N = threshold .. threshold + extra_levels
/// and checks that some j has floor(k_j (1 - 1/m_j)) > 0. Requires all
/// m_j > 1 finite. Work is sharded by the first subset J_1.
PositiveFloorReport check_positive_floor(int p, int q, const std::vector<Multiplicity>& mults, int extra_levels = 1,
                                         const EnumerationLimits& limits = default_limits());

/// Smallest N with N >= p / (q (1 - 1/m)).
long positive_floor_threshold(int p, int q, const std::vector<Multiplicity>& mults);

struct RelativeExponent {
    Integer value;   // k'_j
    Integer lower;   // floor(k(0) (1 - 1/m))
    Integer upper;   // q + lower
    bool within_bounds = false;
};

/// k'_j = floor(k_j (1 - 1/m)) - sum_{r=1..q} floor(k_j(r) (1 - 1/m)) for a
/// decomposition (k(0), ..., k(q)) of k_j.
RelativeExponent relative_exponent(long kj, const std::vector<long>& decomposition, const Multiplicity& m, int q);

/// floor(sum x_r) - sum floor(x_r) for nonnegative rationals.
Integer floor_defect(const std::vector<Rational>& xs);

} // namespace orbi
