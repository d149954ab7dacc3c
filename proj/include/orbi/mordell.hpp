#pragma once

#include "orbi/core.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace orbi {

/// (P^1 | (1-1/p){0} + (1-1/q){1} + (1-1/r){inf}).
struct OrbifoldP1Triple {
    long p = 2;
    long q = 2;
    long r = 2;

    OrbifoldP1Triple() = default;
    OrbifoldP1Triple(long p, long q, long r);

    friend bool operator==(const OrbifoldP1Triple&, const OrbifoldP1Triple&) = default;
};

/// 1/p + 1/q + 1/r < 1, decided via the genus-0 curve classification.
bool is_general_type_triple(const OrbifoldP1Triple& t);

/// Every prime dividing n divides it at least p times. Throws for n = 0.
bool is_p_full(const Integer& n, long p);
bool is_p_full(std::uint64_t n, long p);

/// Prime factorization of |n| (n != 0) as (prime, exponent), ascending.
std::vector<std::pair<Integer, unsigned long>> factorize(const Integer& n);

/// "2^3*3^2", or "1".
std::string factorization_string(const Integer& n);

/// All p-full n in [1, limit], ascending. Picks the sieve filter for small
/// limits and generation from prime-power patterns above 10^6.
std::vector<std::uint64_t> enumerate_p_full(std::uint64_t limit, long p);
/// Sieve of smallest prime factors, then filter.
std::vector<std::uint64_t> enumerate_p_full_sieve(std::uint64_t limit, long p);
/// Depth-first products of prime powers with exponents >= p.
std::vector<std::uint64_t> enumerate_p_full_generated(std::uint64_t limit, long p);

struct DensityReport {
    std::uint64_t count = 0;
    /// count / limit^(1/p)
    double ratio = 0;
    /// Least-squares slope of log(count) against log(X) over the checkpoints.
    double slope = 0;
    /// (X, count(X)) at X = limit / 2^k, down to sqrt(limit).
    std::vector<std::pair<std::uint64_t, std::uint64_t>> checkpoints;
};

DensityReport density_report(std::uint64_t limit, long p);

enum class SearchSign { Minus, Plus };
std::string to_string(SearchSign s);

/// x = a/b with a, b coprime positive integers, a != b.
struct RationalPoint {
    Integer a;
    Integer b;
    /// |a - b| or a + b depending on the search sign.
    Integer c;

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// Inclusive range of denominators b handled by one shard.
struct Shard {
    std::uint64_t lo = 1;
    std::uint64_t hi = 1;
};

/// Splits [1, max_b] into `count` contiguous shards (some may be empty).
std::vector<Shard> split_range(std::uint64_t max_b, std::size_t count);

/// Non-classical points with b restricted to the shard, ordered by (b, a).
std::vector<RationalPoint> search_points_shard(const OrbifoldP1Triple& t, std::uint64_t max_a, const Shard& shard,
                                               SearchSign sign);

/// Merges shard outputs into the canonical (b, a) order.
std::vector<RationalPoint> merge_shards(std::vector<std::vector<RationalPoint>> parts);

/// All non-classical points: a p-full <= max_a, b r-full <= max_b, coprime,
/// a != b, and |a - b| (minus) or a + b (plus) q-full. Runs `shards`
/// independent shards concurrently; the output does not depend on the count.
std::vector<RationalPoint> search_points(const OrbifoldP1Triple& t, std::uint64_t max_a, std::uint64_t max_b,
                                         SearchSign sign = SearchSign::Minus, std::size_t shards = 4);

struct ClassicalWitness {
    Integer alpha;
    Integer beta;
    Integer gamma;

    friend bool operator==(const ClassicalWitness&, const ClassicalWitness&) = default;
};

/// Coprime alpha in [1, max_alpha], beta in [1, max_beta] with
/// alpha^p + beta^r = gamma^q, ordered by (alpha, beta).
std::vector<ClassicalWitness> search_classical(const OrbifoldP1Triple& t, long max_alpha, long max_beta);

} // namespace orbi
