#include "orbi/symdiff.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <string>

namespace orbi {

MultiIndexJ::MultiIndexJ(int p, int q, std::vector<std::vector<int>> subsets) : p_(p), q_(q), subsets_(std::move(subsets)) {
    if (q_ < 1 || q_ > p_) throw DomainError("need 1 <= q <= p");
    for (auto& s : subsets_) {
        std::sort(s.begin(), s.end());
        if (static_cast<int>(s.size()) != q_) throw DomainError("every J_l must have cardinality q");
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw DomainError("J_l has a repeated index");
        if (s.front() < 1 || s.back() > p_) throw DomainError("J_l index outside 1..p");
    }
    std::sort(subsets_.begin(), subsets_.end());
}

std::vector<long> occupancy(const MultiIndexJ& j) {
    std::vector<long> k(j.p(), 0);
    for (const auto& s : j.subsets())
        for (int idx : s) ++k[idx - 1];
    return k;
}

Integer floor_exponent(long k, const Multiplicity& m) {
    if (k < 0) throw DomainError("occupancy must be nonnegative");
    return floor_of(Rational(k) * coefficient(m));
}

ExponentProfile generator_exponents(const std::vector<long>& k, const std::vector<Multiplicity>& mults) {
    if (k.size() != mults.size()) throw DomainError("occupancy and multiplicity vectors differ in length");
    ExponentProfile out;
    out.occupancy = k;
    for (std::size_t j = 0; j < k.size(); ++j) {
        if (mults[j].is_infinite()) throw DomainError("generator exponents need finite multiplicities");
        Rational ratio = Rational(k[j]) / mults[j].value();
        ratio.canonicalize();
        out.ceil_exp.push_back(ceil_of(ratio));
        out.floor_exp.push_back(floor_exponent(k[j], mults[j]));
        if (mults[j].is_integral() && out.floor_exp.back() != Integer(k[j]) - out.ceil_exp.back())
            throw DomainError("floor/ceil exponent identity fails at k=" + std::to_string(k[j]) +
                              " m=" + mults[j].to_string());
    }
    return out;
}

EnumerationLimits default_limits() {
    EnumerationLimits limits;
    if (const char* env = std::getenv("ORBI_SYMDIFF_LIMIT")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) limits.max_pnq = v;
    }
    return limits;
}

long PositiveFloorReport::total_enumerated() const {
    long n = 0;
    for (const auto& l : levels) n += l.enumerated;
    return n;
}

long PositiveFloorReport::total_counterexamples() const {
    long n = 0;
    for (const auto& l : levels) n += l.counterexamples;
    return n;
}

long positive_floor_threshold(int p, int q, const std::vector<Multiplicity>& mults) {
    if (q < 1 || q > p) throw DomainError("need 1 <= q <= p");
    if (static_cast<int>(mults.size()) != p) throw DomainError("need one multiplicity per coordinate");
    Multiplicity m = Multiplicity::infinity();
    for (const auto& mj : mults) {
        if (mj.is_infinite()) throw DomainError("positive-floor check needs finite multiplicities");
        if (mj.is_one()) throw DomainError("positive-floor check needs every m_j > 1");
        m = min(m, mj);
    }
    Rational bound = Rational(p) / (Rational(q) * coefficient(m));
    bound.canonicalize();
    return ceil_of(bound).get_si();
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int p, int q) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(q);
    for (int i = 0; i < q; ++i) cur[i] = i + 1;
    for (;;) {
        out.push_back(cur);
        int i = q - 1;
        while (i >= 0 && cur[i] == p - q + i + 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < q; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

struct ShardResult {
    long enumerated = 0;
    std::vector<std::vector<long>> counterexamples;
};

/// All nondecreasing index sequences of length n whose first entry is `first`.
ShardResult run_shard(const std::vector<std::vector<int>>& subsets, int p, long n, std::size_t first,
                      const std::vector<std::vector<bool>>& positive) {
    ShardResult out;
    std::vector<long> k(p, 0);
    auto apply = [&](std::size_t s, long delta) {
        for (int idx : subsets[s]) k[idx - 1] += delta;
    };
    auto check = [&] {
        ++out.enumerated;
        for (int j = 0; j < p; ++j)
            if (positive[j][k[j]]) return;
        out.counterexamples.push_back(k);
    };
    // Iterative odometer over the remaining n - 1 entries, each >= previous.
    std::vector<std::size_t> seq(n, first);
    for (long i = 0; i < n; ++i) apply(first, 1);
    for (;;) {
        check();
        long i = n - 1;
        while (i >= 1 && seq[i] == subsets.size() - 1) --i;
        if (i < 1) break;
        std::size_t next = seq[i] + 1;
        for (long j = i; j < n; ++j) {
            apply(seq[j], -1);
            seq[j] = next;
            apply(next, 1);
        }
    }
    return out;
}

Integer multiset_count(long kinds, long n) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(kinds + n - 1), static_cast<unsigned long>(n));
    return c;
}

} // namespace

PositiveFloorReport check_positive_floor(int p, int q, const std::vector<Multiplicity>& mults, int extra_levels,
                                         const EnumerationLimits& limits) {
    if (extra_levels < 0) throw DomainError("extra levels must be nonnegative");
    PositiveFloorReport report;
    report.p = p;
    report.q = q;
    report.mults = mults;
    report.threshold = positive_floor_threshold(p, q, mults);

    const long top = report.threshold + extra_levels;
    const auto subsets = subsets_of_size(p, q);
    if (static_cast<long>(p) * top * q > limits.max_pnq)
        throw DomainError("enumeration limit exceeded: p*N*q = " + std::to_string(static_cast<long>(p) * top * q) +
                          " > " + std::to_string(limits.max_pnq));
    for (long n = report.threshold; n <= top; ++n)
        if (multiset_count(static_cast<long>(subsets.size()), n) > limits.max_indices)
            throw DomainError("enumeration limit exceeded: more than " + std::to_string(limits.max_indices) +
                              " multi-indices at N=" + std::to_string(n));

    for (long n = report.threshold; n <= top; ++n) {
        std::vector<std::vector<bool>> positive(p, std::vector<bool>(n + 1));
        for (int j = 0; j < p; ++j)
            for (long k = 0; k <= n; ++k) positive[j][k] = floor_exponent(k, mults[j]) > 0;

        std::vector<std::future<ShardResult>> shards;
        for (std::size_t first = 0; first < subsets.size(); ++first)
            shards.push_back(std::async(std::launch::async, run_shard, std::cref(subsets), p, n, first,
                                        std::cref(positive)));
        PositiveFloorReport::Level level{n, 0, 0};
        for (auto& f : shards) {
            ShardResult r = f.get();
            level.enumerated += r.enumerated;
            level.counterexamples += static_cast<long>(r.counterexamples.size());
            for (auto& c : r.counterexamples) report.counterexamples.push_back(std::move(c));
        }
        report.levels.push_back(level);
    }
    std::sort(report.counterexamples.begin(), report.counterexamples.end());
    return report;
}

RelativeExponent relative_exponent(long kj, const std::vector<long>& decomposition, const Multiplicity& m, int q) {
    if (q < 0) throw DomainError("q must be nonnegative");
    if (static_cast<int>(decomposition.size()) != q + 1) throw DomainError("decomposition needs q + 1 parts");
    if (!m.is_integral() || m.is_infinite()) throw DomainError("relative exponent needs a finite integral multiplicity");
    long sum = 0;
    for (long part : decomposition) {
        if (part < 0) throw DomainError("decomposition parts must be nonnegative");
        sum += part;
    }
    if (sum != kj) throw DomainError("decomposition does not sum to k_j");
    RelativeExponent out;
    out.value = floor_exponent(kj, m);
    for (int r = 1; r <= q; ++r) out.value -= floor_exponent(decomposition[r], m);
    out.lower = floor_exponent(decomposition[0], m);
    out.upper = out.lower + q;
    out.within_bounds = out.lower <= out.value && out.value <= out.upper;
    return out;
}

Integer floor_defect(const std::vector<Rational>& xs) {
    Rational total(0);
    Integer floors = 0;
    for (const auto& x : xs) {
        if (x < 0) throw DomainError("floor defect needs nonnegative inputs");
        total += x;
        floors += floor_of(x);
    }
    return floor_of(total) - floors;
}

} // namespace orbi
