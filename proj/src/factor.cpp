#include "orbi/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace orbi {

namespace {

using i64 = std::int64_t;

// ------------------------------------------------------------ polynomials over F_p

/// Coefficients low to high in [0, p), no trailing zeros.
using ModPoly = std::vector<i64>;

struct Field {
    i64 p;

    i64 norm(i64 a) const {
        a %= p;
        return a < 0 ? a + p : a;
    }
    i64 mul(i64 a, i64 b) const { return a * b % p; }
    i64 pow(i64 a, i64 e) const {
        i64 r = 1;
        a = norm(a);
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    i64 inv(i64 a) const {
        if (norm(a) == 0) throw DomainError("inverting zero modulo p");
        return pow(a, p - 2);
    }

    static void trim(ModPoly& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    static int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

    ModPoly reduce(const ZPoly& f) const {
        ModPoly out;
        out.reserve(f.coeffs().size());
        for (const auto& c : f.coeffs()) {
            Integer r;
            mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
            out.push_back(r.get_si());
        }
        trim(out);
        return out;
    }

    ModPoly add(const ModPoly& a, const ModPoly& b) const {
        ModPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = norm(r[i] + b[i]);
        trim(r);
        return r;
    }
    ModPoly sub(const ModPoly& a, const ModPoly& b) const {
        ModPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = norm(r[i] - b[i]);
        trim(r);
        return r;
    }
    ModPoly mul(const ModPoly& a, const ModPoly& b) const {
        if (a.empty() || b.empty()) return {};
        ModPoly r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
        trim(r);
        return r;
    }
    ModPoly scale(const ModPoly& a, i64 c) const {
        ModPoly r = a;
        for (auto& x : r) x = mul(x, norm(c));
        trim(r);
        return r;
    }
    std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) const {
        if (b.empty()) throw DomainError("modular division by zero");
        ModPoly r = a;
        int db = deg(b);
        if (deg(a) < db) return {{}, a};
        ModPoly q(deg(a) - db + 1, 0);
        i64 lead_inv = inv(b.back());
        for (int k = deg(a); k >= db; --k) {
            i64 c = mul(r[k], lead_inv);
            q[k - db] = c;
            if (c == 0) continue;
            for (int j = 0; j <= db; ++j) r[k - db + j] = norm(r[k - db + j] - mul(c, b[j]));
        }
        r.resize(db);
        trim(r);
        trim(q);
        return {q, r};
    }
    ModPoly rem(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }
    ModPoly monic(const ModPoly& a) const { return a.empty() ? a : scale(a, inv(a.back())); }
    ModPoly gcd(ModPoly a, ModPoly b) const {
        while (!b.empty()) {
            ModPoly r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }
    ModPoly derivative(const ModPoly& a) const {
        if (a.size() <= 1) return {};
        ModPoly r(a.size() - 1);
        for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], norm(static_cast<i64>(i)));
        trim(r);
        return r;
    }
    /// base^e mod m
    ModPoly powmod(ModPoly base, const Integer& e, const ModPoly& m) const {
        ModPoly result{1};
        base = rem(base, m);
        std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (std::size_t i = bits; i-- > 0;) {
            result = rem(mul(result, result), m);
            if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base), m);
        }
        return result;
    }
    /// s*a + t*b = 1 for coprime a, b.
    void bezout(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) const {
        ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
        while (!r1.empty()) {
            auto [q, r] = divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(r);
            ModPoly s2 = sub(s0, mul(q, s1));
            ModPoly t2 = sub(t0, mul(q, t1));
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (deg(r0) != 0) throw DomainError("Hensel lifting needs coprime factors");
        i64 c = inv(r0[0]);
        s = scale(s0, c);
        t = scale(t0, c);
    }
};

/// Splits a squarefree monic polynomial into distinct-degree blocks (block, d).
std::vector<std::pair<ModPoly, int>> distinct_degree(const Field& F, ModPoly f) {
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly x{0, 1};
    ModPoly h = x;
    for (int d = 1; 2 * d <= Field::deg(f); ++d) {
        h = F.powmod(h, Integer(F.p), f);
        ModPoly g = F.gcd(F.sub(h, x), f);
        if (Field::deg(g) > 0) {
            out.emplace_back(g, d);
            f = F.divmod(f, g).first;
            h = F.rem(h, f);
        }
    }
    if (Field::deg(f) > 0) out.emplace_back(F.monic(f), Field::deg(f));
    return out;
}

/// Cantor-Zassenhaus equal-degree splitting (odd p).
void equal_degree(const Field& F, const ModPoly& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
    int n = Field::deg(f);
    if (n == d) {
        out.push_back(F.monic(f));
        return;
    }
    Integer e = (pow(Integer(F.p), static_cast<unsigned long>(d)) - 1) / 2;
    std::uniform_int_distribution<i64> coin(0, F.p - 1);
    for (;;) {
        ModPoly a(n);
        for (auto& c : a) c = coin(rng);
        Field::trim(a);
        if (Field::deg(a) < 1) continue;
        ModPoly b = F.sub(F.powmod(a, e, f), ModPoly{1});
        ModPoly g = F.gcd(b, f);
        int dg = Field::deg(g);
        if (dg > 0 && dg < n) {
            equal_degree(F, g, d, rng, out);
            equal_degree(F, F.divmod(f, g).first, d, rng, out);
            return;
        }
    }
}

// ------------------------------------------------------------ Hensel lifting

using BigPoly = std::vector<Integer>;

void trim(BigPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

BigPoly to_big(const ModPoly& a) { return BigPoly(a.begin(), a.end()); }

BigPoly big_mul(const BigPoly& a, const BigPoly& b) {
    if (a.empty() || b.empty()) return {};
    BigPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

void reduce_mod(BigPoly& a, const Integer& m) {
    for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    trim(a);
}

ModPoly to_mod(const BigPoly& a, const Field& F) {
    ModPoly out;
    for (const auto& c : a) {
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(F.p));
        out.push_back(r.get_si());
    }
    Field::trim(out);
    return out;
}

/// Lifts f = g*h (mod p) to f = G*H (mod modulus) with G monic and lc(H) = lc(f).
/// f is only known modulo `modulus`, a power of p.
std::pair<BigPoly, BigPoly> lift_pair(const BigPoly& f, const ModPoly& g, const ModPoly& h, const Field& F,
                                      const Integer& modulus) {
    ModPoly s, t;
    F.bezout(g, h, s, t);
    BigPoly G = to_big(g);
    BigPoly H = to_big(h);
    H.back() = f.back();
    Integer m = F.p;
    while (m < modulus) {
        BigPoly D = f;
        BigPoly GH = big_mul(G, H);
        D.resize(std::max(D.size(), GH.size()), Integer(0));
        for (std::size_t i = 0; i < GH.size(); ++i) D[i] -= GH[i];
        for (auto& c : D) {
            if (!mpz_divisible_p(c.get_mpz_t(), m.get_mpz_t())) throw DomainError("Hensel invariant broken");
            c /= m;
        }
        trim(D);
        ModPoly e = to_mod(D, F);
        auto [q, dg] = F.divmod(F.mul(t, e), g);
        ModPoly dh = F.add(F.mul(s, e), F.mul(q, h));
        Integer next = m * F.p;
        G.resize(std::max(G.size(), dg.size()), Integer(0));
        for (std::size_t i = 0; i < dg.size(); ++i) G[i] += m * dg[i];
        H.resize(std::max(H.size(), dh.size()), Integer(0));
        for (std::size_t i = 0; i < dh.size(); ++i) H[i] += m * dh[i];
        reduce_mod(G, next);
        reduce_mod(H, next);
        m = next;
    }
    return {G, H};
}

BigPoly symmetric(BigPoly a, const Integer& m) {
    Integer half = m / 2;
    for (auto& c : a) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half) c -= m;
    }
    trim(a);
    return a;
}

bool is_small_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Integer coefficient_bound(const ZPoly& f) {
    Integer sq = 0;
    for (const auto& c : f.coeffs()) sq += c * c;
    Integer norm;
    mpz_sqrt(norm.get_mpz_t(), sq.get_mpz_t());
    norm += 1;
    return pow(Integer(2), static_cast<unsigned long>(f.degree())) * norm * abs(f.leading());
}

} // namespace

std::vector<ZFactor> squarefree_decomposition(const QPoly& p) {
    if (p.is_zero()) throw DomainError("squarefree decomposition of zero");
    std::vector<ZFactor> out;
    if (p.degree() == 0) return out;
    QPoly f = p.monic();
    QPoly df = f.derivative();
    QPoly a0 = gcd(f, df);
    QPoly b = divmod(f, a0).quotient;
    QPoly c = divmod(df, a0).quotient;
    QPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        QPoly a = gcd(b, d);
        if (a.degree() > 0) out.push_back({primitive_part(a), i});
        b = divmod(b, a).quotient;
        c = divmod(d, a).quotient;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

std::vector<ZPoly> factor_squarefree(const ZPoly& input) {
    ZPoly f = input.primitive();
    if (f.degree() <= 0) return {};
    if (f.degree() == 1) return {f};

    // A prime keeping the degree and the squarefreeness.
    Field F{0};
    ModPoly fp;
    for (i64 p = 3;; p += 2) {
        if (!is_small_prime(p)) continue;
        if (p > 100000) throw DomainError("no suitable prime for modular factorization");
        Field cand{p};
        ModPoly red = cand.reduce(f);
        if (Field::deg(red) != f.degree()) continue;
        if (Field::deg(cand.gcd(red, cand.derivative(red))) != 0) continue;
        F = cand;
        fp = red;
        break;
    }

    std::mt19937_64 rng(0x5eed5eedULL);
    std::vector<ModPoly> modular;
    for (const auto& [block, d] : distinct_degree(F, F.monic(fp))) equal_degree(F, block, d, rng, modular);
    std::sort(modular.begin(), modular.end());
    if (modular.size() == 1) return {f};

    Integer bound = 2 * coefficient_bound(f) + 1;
    Integer modulus = F.p;
    while (modulus <= bound) modulus *= F.p;

    // Multifactor lift: peel one monic factor at a time.
    const Integer lc = f.leading();
    std::vector<BigPoly> lifted;
    BigPoly cur(f.coeffs().begin(), f.coeffs().end());
    reduce_mod(cur, modulus);
    cur.back() = lc;  // keep the exact leading coefficient
    for (std::size_t i = 0; i + 1 < modular.size(); ++i) {
        Integer lc_p;
        mpz_fdiv_r_ui(lc_p.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(F.p));
        ModPoly rest{lc_p.get_si()};
        for (std::size_t j = i + 1; j < modular.size(); ++j) rest = F.mul(rest, modular[j]);
        auto [G, H] = lift_pair(cur, modular[i], rest, F, modulus);
        lifted.push_back(std::move(G));
        cur = std::move(H);
    }
    {
        Integer inv;
        Integer lc_mod = lc;
        mpz_fdiv_r(lc_mod.get_mpz_t(), lc_mod.get_mpz_t(), modulus.get_mpz_t());
        if (mpz_invert(inv.get_mpz_t(), lc_mod.get_mpz_t(), modulus.get_mpz_t()) == 0)
            throw DomainError("leading coefficient not invertible modulo lifting modulus");
        for (auto& c : cur) c *= inv;
        reduce_mod(cur, modulus);
        lifted.push_back(std::move(cur));
    }

    // Recombination by subsets of increasing size.
    std::vector<ZPoly> factors;
    ZPoly remaining = f;
    std::vector<BigPoly> pool = lifted;
    std::size_t size = 1;
    while (2 * size <= pool.size()) {
        bool found = false;
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        for (;;) {
            BigPoly cand{remaining.leading()};
            for (std::size_t i : idx) {
                cand = big_mul(cand, pool[i]);
                reduce_mod(cand, modulus);
            }
            ZPoly g = ZPoly(symmetric(cand, modulus)).primitive();
            ZPoly q;
            if (g.degree() > 0 && divides_exactly(remaining, g, q)) {
                factors.push_back(g);
                remaining = q.primitive();
                for (std::size_t k = idx.size(); k-- > 0;) pool.erase(pool.begin() + static_cast<long>(idx[k]));
                found = true;
                break;
            }
            // next combination
            std::size_t k = size;
            while (k > 0 && idx[k - 1] == pool.size() - size + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++size;
    }
    if (remaining.degree() > 0) factors.push_back(remaining.primitive());
    std::sort(factors.begin(), factors.end());
    return factors;
}

std::vector<ZFactor> factor_over_q(const QPoly& p) {
    std::vector<ZFactor> out;
    for (const auto& sq : squarefree_decomposition(p))
        for (auto& g : factor_squarefree(sq.poly)) out.push_back({std::move(g), sq.multiplicity});
    std::sort(out.begin(), out.end(), [](const ZFactor& a, const ZFactor& b) {
        if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
        return a.poly < b.poly;
    });
    return out;
}

std::vector<FormFactor> factor_form(const BinaryForm& f) {
    if (f.is_zero()) throw DomainError("cannot factor the zero form");
    std::vector<FormFactor> out;
    int k = f.u_order();
    if (k > 0) out.push_back({BinaryForm::u(), k});
    for (const auto& zf : factor_over_q(f.dehomogenize()))
        out.push_back({BinaryForm::homogenize(zf.poly.to_q(), zf.poly.degree()), zf.multiplicity});
    return out;
}

} // namespace orbi
