#include "orbi/poly.hpp"

#include <algorithm>
#include <sstream>

namespace orbi {

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

QPoly QPoly::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPoly::coeff(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Rational(0);
}

QPoly QPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    Rational lc = leading();
    std::vector<Rational> v = coeffs_;
    for (auto& c : v) c /= lc;
    return QPoly(std::move(v));
}

Rational QPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    acc.canonicalize();
    return acc;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + Rational(-1) * b; }

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return QPoly(std::move(v));
}

QPoly operator*(const Rational& c, const QPoly& a) {
    std::vector<Rational> v = a.coeffs_;
    for (auto& x : v) x *= c;
    return QPoly(std::move(v));
}

QDivision divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    int db = b.degree();
    int da = a.degree();
    if (da < db) return {QPoly(), a};
    std::vector<Rational> q(da - db + 1, Rational(0));
    for (int k = da; k >= db; --k) {
        Rational c = r[k] / b.leading();
        q[k - db] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b.coeffs()[j];
    }
    r.resize(db);
    return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly r = divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::string to_string(const QPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(i);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        bool unit = a == 1;
        if (!unit || i == 0) os << a.get_str();
        if (i > 0) {
            if (!unit) os << '*';
            os << var;
            if (i > 1) os << '^' << i;
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------- ZPoly

ZPoly::ZPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void ZPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer ZPoly::coeff(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Integer(0);
}

Integer ZPoly::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) g = orbi::gcd(g, c);
    return g;
}

ZPoly ZPoly::primitive() const {
    if (is_zero()) return *this;
    Integer g = content();
    if (leading() < 0) g = -g;
    std::vector<Integer> v = coeffs_;
    for (auto& c : v) c /= g;
    return ZPoly(std::move(v));
}

QPoly ZPoly::to_q() const {
    std::vector<Rational> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.emplace_back(c);
    return QPoly(std::move(v));
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return ZPoly(std::move(v));
}

bool operator<(const ZPoly& a, const ZPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
    return false;
}

ZPoly primitive_part(const QPoly& p) {
    if (p.is_zero()) return {};
    Integer den = 1;
    for (const auto& c : p.coeffs()) den = lcm(den, c.get_den());
    std::vector<Integer> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(Integer(c.get_num() * (den / c.get_den())));
    return ZPoly(std::move(v)).primitive();
}

bool divides_exactly(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
    if (b.is_zero()) return false;
    if (a.is_zero()) {
        quotient = ZPoly();
        return true;
    }
    if (a.degree() < b.degree()) return false;
    std::vector<Integer> r = a.coeffs();
    std::vector<Integer> q(a.degree() - b.degree() + 1, Integer(0));
    int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
        if (r[k] == 0) continue;
        if (!mpz_divisible_p(r[k].get_mpz_t(), b.leading().get_mpz_t())) return false;
        Integer c = r[k] / b.leading();
        q[k - db] = c;
        for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b.coeffs()[j];
    }
    for (int i = 0; i < db; ++i)
        if (r[i] != 0) return false;
    quotient = ZPoly(std::move(q));
    return true;
}

// ---------------------------------------------------------------- BinaryForm

BinaryForm::BinaryForm(int degree, std::vector<Rational> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree_ < 0) throw DomainError("binary form degree must be nonnegative");
    if (static_cast<int>(coeffs_.size()) != degree_ + 1)
        throw DomainError("binary form coefficient count does not match its degree");
    for (auto& c : coeffs_) c.canonicalize();
}

BinaryForm BinaryForm::zero(int degree) { return BinaryForm(degree, std::vector<Rational>(degree + 1, Rational(0))); }
BinaryForm BinaryForm::s() { return BinaryForm(1, {Rational(0), Rational(1)}); }
BinaryForm BinaryForm::u() { return BinaryForm(1, {Rational(1), Rational(0)}); }

bool BinaryForm::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

QPoly BinaryForm::dehomogenize() const { return QPoly(coeffs_); }

int BinaryForm::u_order() const {
    if (is_zero()) throw DomainError("zero form has no order");
    return degree_ - dehomogenize().degree();
}

BinaryForm BinaryForm::homogenize(const QPoly& p, int degree) {
    if (p.degree() > degree) throw DomainError("polynomial degree exceeds form degree");
    std::vector<Rational> v(degree + 1, Rational(0));
    for (int i = 0; i <= p.degree(); ++i) v[i] = p.coeff(i);
    return BinaryForm(degree, std::move(v));
}

std::string BinaryForm::to_string() const {
    MPoly m({"s", "u"});
    for (int i = 0; i <= degree_; ++i) m.add_term({static_cast<unsigned>(i), static_cast<unsigned>(degree_ - i)}, coeffs_[i]);
    return m.to_string();
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    std::vector<Rational> v(a.degree_ + b.degree_ + 1, Rational(0));
    for (int i = 0; i <= a.degree_; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (int j = 0; j <= b.degree_; ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return BinaryForm(a.degree_ + b.degree_, std::move(v));
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    if (a.degree_ != b.degree_) throw DomainError("adding binary forms of different degrees");
    std::vector<Rational> v = a.coeffs_;
    for (int i = 0; i <= a.degree_; ++i) v[i] += b.coeffs_[i];
    return BinaryForm(a.degree_, std::move(v));
}

BinaryForm operator*(const Rational& c, const BinaryForm& a) {
    std::vector<Rational> v = a.coeffs_;
    for (auto& x : v) x *= c;
    return BinaryForm(a.degree_, std::move(v));
}

BinaryForm pow(const BinaryForm& f, unsigned e) {
    BinaryForm result(0, {Rational(1)});
    for (unsigned i = 0; i < e; ++i) result = result * f;
    return result;
}

// ---------------------------------------------------------------- MPoly

MPoly::MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MPoly MPoly::constant(std::vector<std::string> vars, const Rational& c) {
    MPoly p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

MPoly MPoly::variable(std::vector<std::string> vars, std::size_t index) {
    MPoly p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e.at(index) = 1;
    p.add_term(e, Rational(1));
    return p;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != vars_.size()) throw DomainError("exponent vector does not match variable count");
    if (c == 0) return;
    Rational& slot = terms_[e];
    slot += c;
    slot.canonicalize();
    if (slot == 0) terms_.erase(e);
}

int MPoly::homogeneous_degree() const {
    if (terms_.empty()) return -1;
    int deg = -1;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (unsigned x : e) d += static_cast<int>(x);
        if (deg == -1)
            deg = d;
        else if (d != deg)
            return -2;
    }
    return deg;
}

MPoly MPoly::operator-() const {
    MPoly out(vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    if (a.vars_ != b.vars_) throw DomainError("mixing polynomials over different variables");
    MPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.vars_ != b.vars_) throw DomainError("mixing polynomials over different variables");
    MPoly out(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            MPoly::Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly result = constant(vars_, Rational(1));
    for (unsigned i = 0; i < e; ++i) result = result * *this;
    return result;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, Rational>> ordered(terms_.begin(), terms_.end());
    auto total = [](const Exponents& e) {
        unsigned d = 0;
        for (unsigned x : e) d += x;
        return d;
    };
    std::sort(ordered.begin(), ordered.end(), [&](const auto& l, const auto& r) {
        if (total(l.first) != total(r.first)) return total(l.first) > total(r.first);
        return l.first > r.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ordered) {
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        Rational a = abs(c);
        bool constant_term = total(e) == 0;
        bool need_star = false;
        if (a != 1 || constant_term) {
            os << a.get_str();
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << '*';
            os << vars_[i];
            if (e[i] > 1) os << '^' << e[i];
            need_star = true;
        }
    }
    return os.str();
}

BinaryForm to_binary_form(const MPoly& p, int degree) {
    if (p.vars().size() != 2) throw DomainError("binary form needs a polynomial in two variables");
    int d = p.homogeneous_degree();
    if (d == -2) throw DomainError("polynomial is not homogeneous: " + p.to_string());
    if (d >= 0 && d != degree)
        throw DomainError("polynomial " + p.to_string() + " has degree " + std::to_string(d) + ", expected " +
                          std::to_string(degree));
    std::vector<Rational> v(degree + 1, Rational(0));
    for (const auto& [e, c] : p.terms()) v[e[0]] = c;
    return BinaryForm(degree, std::move(v));
}

BinaryForm substitute(const MPoly& p, const std::vector<BinaryForm>& forms, int form_degree) {
    if (forms.size() != p.vars().size()) throw DomainError("substitution needs one form per variable");
    int d = p.homogeneous_degree();
    if (d == -2) throw DomainError("defining form is not homogeneous: " + p.to_string());
    if (d == -1) throw DomainError("defining form is zero");
    BinaryForm result = BinaryForm::zero(d * form_degree);
    for (const auto& [e, c] : p.terms()) {
        BinaryForm term(0, {c});
        for (std::size_t i = 0; i < e.size(); ++i) term = term * pow(forms[i], e[i]);
        result = result + term;
    }
    return result;
}

} // namespace orbi
