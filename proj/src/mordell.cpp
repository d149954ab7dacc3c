#include "orbi/mordell.hpp"

#include "orbi/curveclass.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <sstream>

namespace orbi {

OrbifoldP1Triple::OrbifoldP1Triple(long p_, long q_, long r_) : p(p_), q(q_), r(r_) {
    if (p < 2 || q < 2 || r < 2) throw DomainError("orbifold P1 triple needs p, q, r >= 2");
}

bool is_general_type_triple(const OrbifoldP1Triple& t) {
    OrbifoldDivisor marks;
    marks.set("0", Multiplicity(t.p));
    marks.set("1", Multiplicity(t.q));
    marks.set("inf", Multiplicity(t.r));
    return kappa_curve(CurveOrbifold(0, marks)) == Kappa::One;
}

namespace {

void require_exponent(long p) {
    if (p < 1) throw DomainError("fullness exponent must be positive");
}

bool is_perfect_power_at_least(const Integer& m, long p) {
    // m > 1: is m = x^e for some e >= p?
    std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    Integer root;
    for (unsigned long e = static_cast<unsigned long>(p); e <= bits; ++e)
        if (exact_root(m, e, root)) return true;
    return false;
}

} // namespace

bool is_p_full(const Integer& n, long p) {
    require_exponent(p);
    if (n == 0) throw DomainError("0 has no fullness");
    Integer m = abs(n);
    if (m == 1) return true;
    // Past n^(1/2p) at most one distinct prime can remain.
    Integer bound;
    mpz_root(bound.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(2 * p));
    for (Integer d = 2; d <= bound && m > 1; ++d) {
        if (!mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) continue;
        long e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
            m /= d;
            ++e;
        }
        if (e < p) return false;
    }
    return m == 1 || is_perfect_power_at_least(m, p);
}

bool is_p_full(std::uint64_t n, long p) {
    require_exponent(p);
    if (n == 0) throw DomainError("0 has no fullness");
    if (n == 1) return true;
    Integer big;
    mpz_set_ui(big.get_mpz_t(), n);
    Integer root;
    mpz_root(root.get_mpz_t(), big.get_mpz_t(), static_cast<unsigned long>(2 * p));
    std::uint64_t bound = root.get_ui();
    std::uint64_t m = n;
    for (std::uint64_t d = 2; d <= bound && m > 1; ++d) {
        if (m % d != 0) continue;
        long e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        if (e < p) return false;
    }
    if (m == 1) return true;
    mpz_set_ui(big.get_mpz_t(), m);
    return is_perfect_power_at_least(big, p);
}

std::vector<std::pair<Integer, unsigned long>> factorize(const Integer& n) {
    if (n == 0) throw DomainError("cannot factor 0");
    std::vector<std::pair<Integer, unsigned long>> out;
    Integer m = abs(n);
    for (Integer d = 2; d * d <= m; ++d) {
        unsigned long e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
            m /= d;
            ++e;
        }
        if (e > 0) out.emplace_back(d, e);
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

std::string factorization_string(const Integer& n) {
    auto f = factorize(n);
    if (f.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) os << '*';
        os << f[i].first.get_str();
        if (f[i].second > 1) os << '^' << f[i].second;
    }
    return os.str();
}

std::vector<std::uint64_t> enumerate_p_full_sieve(std::uint64_t limit, long p) {
    require_exponent(p);
    if (limit < 1) throw DomainError("limit must be at least 1");
    std::vector<std::uint32_t> spf(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf[i] != 0) continue;
        for (std::uint64_t j = i; j <= limit; j += i)
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
    std::vector<std::uint64_t> out{1};
    for (std::uint64_t n = 2; n <= limit; ++n) {
        std::uint64_t m = n;
        bool full = true;
        while (m > 1 && full) {
            std::uint32_t q = spf[m];
            long e = 0;
            while (m % q == 0) {
                m /= q;
                ++e;
            }
            full = e >= p;
        }
        if (full) out.push_back(n);
    }
    return out;
}

namespace {

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<bool> composite(n + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return primes;
}

void generate(const std::vector<std::uint64_t>& primes, std::size_t from, std::uint64_t cur, std::uint64_t limit, long p,
              std::vector<std::uint64_t>& out) {
    out.push_back(cur);
    for (std::size_t i = from; i < primes.size(); ++i) {
        const std::uint64_t q = primes[i];
        // cur * q^p <= limit
        std::uint64_t v = cur;
        bool fits = true;
        for (long e = 0; e < p && fits; ++e) {
            if (v > limit / q)
                fits = false;
            else
                v *= q;
        }
        if (!fits) break;
        for (;;) {
            generate(primes, i + 1, v, limit, p, out);
            if (v > limit / q) break;
            v *= q;
        }
    }
}

} // namespace

std::vector<std::uint64_t> enumerate_p_full_generated(std::uint64_t limit, long p) {
    require_exponent(p);
    if (limit < 1) throw DomainError("limit must be at least 1");
    Integer big;
    mpz_set_ui(big.get_mpz_t(), limit);
    Integer root;
    mpz_root(root.get_mpz_t(), big.get_mpz_t(), static_cast<unsigned long>(p));
    std::vector<std::uint64_t> out;
    generate(primes_up_to(root.get_ui()), 0, 1, limit, p, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> enumerate_p_full(std::uint64_t limit, long p) {
    return limit <= 1'000'000 ? enumerate_p_full_sieve(limit, p) : enumerate_p_full_generated(limit, p);
}

DensityReport density_report(std::uint64_t limit, long p) {
    if (limit < 1000) throw DomainError("density report needs limit >= 1000");
    auto values = enumerate_p_full(limit, p);
    DensityReport r;
    r.count = values.size();
    r.ratio = static_cast<double>(r.count) / std::pow(static_cast<double>(limit), 1.0 / static_cast<double>(p));
    for (std::uint64_t x = limit; x >= 1 && static_cast<long double>(x) * x >= static_cast<long double>(limit); x /= 2) {
        auto n = static_cast<std::uint64_t>(std::upper_bound(values.begin(), values.end(), x) - values.begin());
        r.checkpoints.emplace_back(x, n);
    }
    std::reverse(r.checkpoints.begin(), r.checkpoints.end());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double k = static_cast<double>(r.checkpoints.size());
    for (const auto& [x, n] : r.checkpoints) {
        double lx = std::log(static_cast<double>(x));
        double ly = std::log(static_cast<double>(n));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    r.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    return r;
}

std::string to_string(SearchSign s) { return s == SearchSign::Minus ? "minus" : "plus"; }

std::vector<Shard> split_range(std::uint64_t max_b, std::size_t count) {
    if (count == 0) throw DomainError("need at least one shard");
    std::vector<Shard> out;
    std::uint64_t width = (max_b + count - 1) / count;
    if (width == 0) width = 1;
    for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t lo = 1 + i * width;
        std::uint64_t hi = std::min<std::uint64_t>(max_b, lo + width - 1);
        out.push_back({lo, hi});  // lo > hi marks an empty shard
    }
    return out;
}

namespace {

struct SearchTables {
    std::vector<std::uint64_t> a_values;  // p-full up to max_a
    std::vector<std::uint64_t> b_values;  // r-full up to max_b
    std::vector<std::uint64_t> c_values;  // q-full up to max_a + max_b
};

SearchTables build_tables(const OrbifoldP1Triple& t, std::uint64_t max_a, std::uint64_t max_b) {
    if (max_a < 1 || max_b < 1) throw DomainError("search bounds must be at least 1");
    return {enumerate_p_full(max_a, t.p), enumerate_p_full(max_b, t.r), enumerate_p_full(max_a + max_b, t.q)};
}

std::vector<RationalPoint> scan(const SearchTables& tables, const Shard& shard, SearchSign sign) {
    std::vector<RationalPoint> out;
    auto b_begin = std::lower_bound(tables.b_values.begin(), tables.b_values.end(), shard.lo);
    auto b_end = std::upper_bound(tables.b_values.begin(), tables.b_values.end(), shard.hi);
    for (auto bi = b_begin; bi < b_end; ++bi) {
        const std::uint64_t b = *bi;
        for (std::uint64_t a : tables.a_values) {
            if (a == b || std::gcd(a, b) != 1) continue;
            std::uint64_t c = sign == SearchSign::Minus ? (a > b ? a - b : b - a) : a + b;
            if (!std::binary_search(tables.c_values.begin(), tables.c_values.end(), c)) continue;
            RationalPoint pt;
            mpz_set_ui(pt.a.get_mpz_t(), a);
            mpz_set_ui(pt.b.get_mpz_t(), b);
            mpz_set_ui(pt.c.get_mpz_t(), c);
            out.push_back(std::move(pt));
        }
    }
    return out;
}

} // namespace

std::vector<RationalPoint> search_points_shard(const OrbifoldP1Triple& t, std::uint64_t max_a, const Shard& shard,
                                               SearchSign sign) {
    if (shard.lo > shard.hi) return {};
    return scan(build_tables(t, max_a, shard.hi), shard, sign);
}

std::vector<RationalPoint> merge_shards(std::vector<std::vector<RationalPoint>> parts) {
    std::vector<RationalPoint> out;
    for (auto& part : parts)
        for (auto& pt : part) out.push_back(std::move(pt));
    std::sort(out.begin(), out.end(), [](const RationalPoint& x, const RationalPoint& y) {
        if (x.b != y.b) return x.b < y.b;
        return x.a < y.a;
    });
    return out;
}

std::vector<RationalPoint> search_points(const OrbifoldP1Triple& t, std::uint64_t max_a, std::uint64_t max_b,
                                         SearchSign sign, std::size_t shards) {
    const SearchTables tables = build_tables(t, max_a, max_b);
    std::vector<std::future<std::vector<RationalPoint>>> jobs;
    for (const auto& shard : split_range(max_b, shards))
        jobs.push_back(std::async(std::launch::async, [&tables, shard, sign] {
            return shard.lo > shard.hi ? std::vector<RationalPoint>{} : scan(tables, shard, sign);
        }));
    std::vector<std::vector<RationalPoint>> parts;
    for (auto& j : jobs) parts.push_back(j.get());
    return merge_shards(std::move(parts));
}

std::vector<ClassicalWitness> search_classical(const OrbifoldP1Triple& t, long max_alpha, long max_beta) {
    if (max_alpha < 1 || max_beta < 1) throw DomainError("search bounds must be at least 1");
    std::vector<ClassicalWitness> out;
    for (long alpha = 1; alpha <= max_alpha; ++alpha) {
        Integer ap = pow(Integer(alpha), static_cast<unsigned long>(t.p));
        for (long beta = 1; beta <= max_beta; ++beta) {
            if (std::gcd(alpha, beta) != 1) continue;
            Integer sum = ap + pow(Integer(beta), static_cast<unsigned long>(t.r));
            Integer gamma;
            if (exact_root(sum, static_cast<unsigned long>(t.q), gamma)) out.push_back({Integer(alpha), Integer(beta), gamma});
        }
    }
    return out;
}

} // namespace orbi
