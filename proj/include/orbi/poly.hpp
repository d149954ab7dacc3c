#pragma once

#include "orbi/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace orbi {

/// Dense univariate polynomial over Q, coefficients from degree 0 upwards.
/// The zero polynomial has no coefficients and degree -1.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs);
    static QPoly monomial(const Rational& c, int degree);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int i) const;
    const Rational& leading() const { return coeffs_.back(); }

    QPoly derivative() const;
    QPoly monic() const;
    Rational eval(const Rational& x) const;

    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const Rational& c, const QPoly& a);
    friend bool operator==(const QPoly&, const QPoly&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct QDivision {
    QPoly quotient;
    QPoly remainder;
};

QDivision divmod(const QPoly& a, const QPoly& b);
/// Monic gcd (zero when both inputs are zero).
QPoly gcd(const QPoly& a, const QPoly& b);

/// Dense univariate polynomial over Z.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<Integer> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    Integer coeff(int i) const;
    const Integer& leading() const { return coeffs_.back(); }

    Integer content() const;
    /// Content removed, leading coefficient made positive.
    ZPoly primitive() const;
    QPoly to_q() const;

    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend bool operator==(const ZPoly&, const ZPoly&) = default;
    friend bool operator<(const ZPoly& a, const ZPoly& b);

private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// Clears denominators and content; the result is primitive with positive
/// leading coefficient and equals `p` up to a rational unit.
ZPoly primitive_part(const QPoly& p);

/// Exact division over Z; returns false when b does not divide a in Z[x].
bool divides_exactly(const ZPoly& a, const ZPoly& b, ZPoly& quotient);

/// Human-readable form in variable `var`, e.g. "2*s^2 - 3".
std::string to_string(const QPoly& p, const std::string& var);

/// Homogeneous form in s, u of fixed degree: coeffs[i] multiplies s^i u^(d-i).
/// The zero form keeps its nominal degree.
class BinaryForm {
public:
    BinaryForm() = default;
    BinaryForm(int degree, std::vector<Rational> coeffs);
    static BinaryForm zero(int degree);
    static BinaryForm s();
    static BinaryForm u();

    int degree() const { return degree_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    /// f(s, 1).
    QPoly dehomogenize() const;
    /// Power of u dividing the form (its order at the point s/u = infinity).
    int u_order() const;
    static BinaryForm homogenize(const QPoly& p, int degree);

    std::string to_string() const;

    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(const Rational& c, const BinaryForm& a);
    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

private:
    int degree_ = 0;
    std::vector<Rational> coeffs_{Rational(0)};
};

BinaryForm pow(const BinaryForm& f, unsigned e);

/// Sparse multivariate polynomial over Q in a fixed, named set of variables.
class MPoly {
public:
    using Exponents = std::vector<unsigned>;

    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars);
    static MPoly constant(std::vector<std::string> vars, const Rational& c);
    static MPoly variable(std::vector<std::string> vars, std::size_t index);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Total degree of a homogeneous polynomial; -1 for zero, -2 when not homogeneous.
    int homogeneous_degree() const;
    void add_term(const Exponents& e, const Rational& c);

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly pow(unsigned e) const;

    /// Canonical text: terms by descending total degree, then lexicographically
    /// descending exponents; e.g. "x0*x2 - x1^2".
    std::string to_string() const;

    friend bool operator==(const MPoly&, const MPoly&) = default;

private:
    std::vector<std::string> vars_;
    std::map<Exponents, Rational> terms_;
};

/// Interprets a polynomial in (s, u) as a binary form of the given degree.
BinaryForm to_binary_form(const MPoly& p, int degree);

/// Substitutes forms for the variables of a homogeneous polynomial.
BinaryForm substitute(const MPoly& p, const std::vector<BinaryForm>& forms, int form_degree);

} // namespace orbi
