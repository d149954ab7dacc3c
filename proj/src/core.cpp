#include "orbi/core.hpp"

#include <sstream>

namespace orbi {

Multiplicity::Multiplicity(const Rational& value) : value_(value) {
    value_.canonicalize();
    if (value_ < 1) throw DomainError("multiplicity below 1: " + value_.get_str());
}

Multiplicity Multiplicity::infinity() {
    Multiplicity m;
    m.infinite_ = true;
    return m;
}

bool Multiplicity::is_integral() const { return infinite_ || value_.get_den() == 1; }

const Rational& Multiplicity::value() const {
    if (infinite_) throw DomainError("infinite multiplicity has no finite value");
    return value_;
}

std::optional<Integer> Multiplicity::as_integer() const {
    if (infinite_ || value_.get_den() != 1) return std::nullopt;
    return Integer(value_.get_num());
}

Multiplicity Multiplicity::times(const Integer& t) const {
    if (t < 1) throw DomainError("multiplicity scale factor must be a positive integer");
    if (infinite_) return *this;
    return Multiplicity(Rational(value_ * t));
}

std::optional<Rational> Multiplicity::divided_by(const Integer& t) const {
    if (t < 1) throw DomainError("divisor must be a positive integer");
    if (infinite_) return std::nullopt;
    Rational r = value_ / Rational(t);
    r.canonicalize();
    return r;
}

std::string Multiplicity::to_string() const { return infinite_ ? "inf" : value_.get_str(); }

Multiplicity Multiplicity::parse(const std::string& text) {
    if (text == "inf") return infinity();
    Rational r;
    if (r.set_str(text, 10) != 0) throw DomainError("malformed multiplicity: " + text);
    r.canonicalize();
    return Multiplicity(r);
}

bool operator==(const Multiplicity& a, const Multiplicity& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Multiplicity& a, const Multiplicity& b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational coefficient(const Multiplicity& m) {
    if (m.is_infinite()) return Rational(1);
    Rational c = 1 - 1 / m.value();
    c.canonicalize();
    return c;
}

Multiplicity multiplicity_from_coefficient(const Rational& c) {
    if (c < 0 || c > 1) throw DomainError("coefficient outside [0,1]: " + c.get_str());
    if (c == 1) return Multiplicity::infinity();
    Rational m = 1 / (1 - c);
    m.canonicalize();
    return Multiplicity(m);
}

Multiplicity min(const Multiplicity& a, const Multiplicity& b) { return b < a ? b : a; }
Multiplicity max(const Multiplicity& a, const Multiplicity& b) { return a < b ? b : a; }

Multiplicity lcm(const Multiplicity& a, const Multiplicity& b) {
    if (!a.is_integral() || !b.is_integral())
        throw DomainError("lcm needs integral multiplicities");
    if (a.is_infinite() || b.is_infinite()) return Multiplicity::infinity();
    return Multiplicity(Rational(lcm(*a.as_integer(), *b.as_integer())));
}

Multiplicity gcd(const Multiplicity& a, const Multiplicity& b) {
    if (a.is_infinite() || b.is_infinite()) throw DomainError("gcd involving an infinite multiplicity is undefined");
    if (!a.is_integral() || !b.is_integral()) throw DomainError("gcd needs integral multiplicities");
    return Multiplicity(Rational(gcd(*a.as_integer(), *b.as_integer())));
}

bool divides(const Multiplicity& a, const Multiplicity& b) {
    if (!a.is_integral() || !b.is_integral())
        throw DomainError("divisibility needs integral multiplicities");
    if (b.is_infinite()) return true;
    if (a.is_infinite()) return false;
    return mpz_divisible_p(b.as_integer()->get_mpz_t(), a.as_integer()->get_mpz_t()) != 0;
}

OrbifoldDivisor::OrbifoldDivisor(std::initializer_list<std::pair<const std::string, Multiplicity>> init) {
    for (const auto& [label, m] : init) set(label, m);
}

void OrbifoldDivisor::set(const std::string& label, const Multiplicity& m) {
    if (m.is_one())
        entries_.erase(label);
    else
        entries_.insert_or_assign(label, m);
}

Multiplicity OrbifoldDivisor::multiplicity(const std::string& label) const {
    auto it = entries_.find(label);
    return it == entries_.end() ? Multiplicity() : it->second;
}

std::set<std::string> OrbifoldDivisor::support() const {
    std::set<std::string> out;
    for (const auto& [label, m] : entries_) out.insert(label);
    return out;
}

bool OrbifoldDivisor::is_integral() const {
    for (const auto& [label, m] : entries_)
        if (!m.is_integral()) return false;
    return true;
}

bool OrbifoldDivisor::is_finite() const {
    for (const auto& [label, m] : entries_)
        if (m.is_infinite()) return false;
    return true;
}

bool OrbifoldDivisor::is_logarithmic() const {
    for (const auto& [label, m] : entries_)
        if (!m.is_infinite()) return false;
    return true;
}

std::string OrbifoldDivisor::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [label, m] : entries_) {
        if (!first) os << ", ";
        first = false;
        os << label << ':' << m.to_string();
    }
    os << '}';
    return os.str();
}

bool divisor_leq(const OrbifoldDivisor& lhs, const OrbifoldDivisor& rhs) {
    for (const auto& [label, m] : lhs.entries())
        if (rhs.multiplicity(label) < m) return false;
    return true;
}

} // namespace orbi
