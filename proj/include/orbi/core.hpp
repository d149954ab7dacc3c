#pragma once

#include "orbi/numeric.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>

namespace orbi {

/// Orbifold multiplicity: an exact rational >= 1, or infinity (the
/// logarithmic case). Construction rejects values below 1.
class Multiplicity {
public:
    Multiplicity() : value_(1) {}
    explicit Multiplicity(const Rational& value);
    explicit Multiplicity(long value) : Multiplicity(Rational(value)) {}

    static Multiplicity infinity();

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }
    bool is_one() const { return !infinite_ && value_ == 1; }
    /// Finite with denominator 1, or infinite.
    bool is_integral() const;

    /// Throws DomainError when infinite.
    const Rational& value() const;
    /// The integer value when finite and integral.
    std::optional<Integer> as_integer() const;

    /// t * m for a positive integer t; infinity absorbs.
    Multiplicity times(const Integer& t) const;
    /// m / t for a positive integer t; may drop below 1, so it returns a
    /// plain rational (nullopt for infinity).
    std::optional<Rational> divided_by(const Integer& t) const;

    /// "inf" or the canonical rational.
    std::string to_string() const;
    static Multiplicity parse(const std::string& text);

    friend bool operator==(const Multiplicity& a, const Multiplicity& b);
    friend std::strong_ordering operator<=>(const Multiplicity& a, const Multiplicity& b);

private:
    Rational value_;
    bool infinite_ = false;
};

/// 1 - 1/m, with infinity mapped to 1.
Rational coefficient(const Multiplicity& m);

/// Inverse of coefficient on [0, 1].
Multiplicity multiplicity_from_coefficient(const Rational& c);

Multiplicity min(const Multiplicity& a, const Multiplicity& b);
Multiplicity max(const Multiplicity& a, const Multiplicity& b);

/// lcm of integral multiplicities; infinity is its only own multiple.
Multiplicity lcm(const Multiplicity& a, const Multiplicity& b);

/// gcd of finite integral multiplicities; throws on infinite or fractional input.
Multiplicity gcd(const Multiplicity& a, const Multiplicity& b);

/// Whether a divides b among integral multiplicities (anything divides infinity,
/// infinity divides only infinity).
bool divides(const Multiplicity& a, const Multiplicity& b);

/// Finite formal sum of labeled prime divisors with multiplicities.
/// Multiplicity-1 entries are never stored; absent labels read as 1.
class OrbifoldDivisor {
public:
    using Map = std::map<std::string, Multiplicity>;

    OrbifoldDivisor() = default;
    OrbifoldDivisor(std::initializer_list<std::pair<const std::string, Multiplicity>> init);

    void set(const std::string& label, const Multiplicity& m);
    Multiplicity multiplicity(const std::string& label) const;
    bool contains(const std::string& label) const { return entries_.count(label) != 0; }

    const Map& entries() const { return entries_; }
    std::set<std::string> support() const;
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    bool is_integral() const;
    bool is_finite() const;
    bool is_logarithmic() const;

    /// "{A:2, B:inf}"
    std::string to_string() const;

    friend bool operator==(const OrbifoldDivisor&, const OrbifoldDivisor&) = default;

private:
    Map entries_;
};

/// Coefficientwise order: lhs <= rhs.
bool divisor_leq(const OrbifoldDivisor& lhs, const OrbifoldDivisor& rhs);

} // namespace orbi
