/// Recursive-descent parser for orbifold specification files.
///
/// Grammar (whitespace and '#' comments are insignificant):
///
///   document   := decl*
///   decl       := 'curve' NAME '{' ('genus' INT ';' | 'point' LABEL 'mult' MULT ';')* '}'
///               | 'plane' NAME '{' ('component' LABEL 'degree' INT 'mult' MULT ['form' POLY] ';')* '}'
///               | 'fibration' NAME '{' ('over' LABEL '{' ('part' 't' INT 'mult' MULT ';')* '}' [';'])* '}'
///               | 'twostage' NAME '{' ('lower' LABEL '{' ('s' INT '->' LABEL ';')* '}' [';']
///                                    | 'upper' '=' NAME [';'])* '}'
///               | 'morphism' NAME '{' ('pair' LABEL LABEL 't' INT ';'
///                                    | ('dX' | 'dY') '{' (LABEL 'mult' MULT ';')* '}' [';'])* '}'
///               | 'paramcurve' NAME '{' (('x0' | 'x1' | 'x2') '=' POLY ';')* '}'
///               | 'mordell' NAME '{' (('p' | 'q' | 'r') INT ';')* '}'
///   MULT       := 'inf' | ['-'] NUMBER ['/' NUMBER]
///   POLY       := term (('+' | '-') term)*, term := unary (('*' | '/') unary)*,
///                 unary := '-' unary | atom ['^' INT], atom := NUMBER | VAR | '(' POLY ')'
///
/// Decimal literals are read exactly (0.5 is 1/2).
#include "orbi/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace orbi::dsl {

std::string Diagnostic::format(std::string_view source_name) const {
    std::ostringstream os;
    os << source_name << ':' << line << ':' << column << ": " << (severity == Severity::Error ? "error" : "warning")
       << ": " << message;
    return os.str();
}

std::string to_string(DeclKind k) {
    switch (k) {
    case DeclKind::Curve: return "curve";
    case DeclKind::Plane: return "plane";
    case DeclKind::Fibration: return "fibration";
    case DeclKind::TwoStage: return "twostage";
    case DeclKind::Morphism: return "morphism";
    case DeclKind::ParamCurve: return "paramcurve";
    case DeclKind::Mordell: return "mordell";
    }
    return "?";
}

PlaneArrangementPair PlaneDecl::pair() const {
    std::vector<PlaneComponent> comps;
    for (const auto& c : components) comps.push_back({c.label, c.degree, c.mult});
    return PlaneArrangementPair(std::move(comps));
}

std::vector<PlaneDivisorComponent> PlaneDecl::arrangement() const {
    std::vector<PlaneDivisorComponent> out;
    for (const auto& c : components) {
        if (c.mult.is_one()) continue;
        if (!c.form) throw DomainError("component " + c.label + " of plane " + name + " has no defining form");
        out.push_back({c.label, *c.form, c.mult});
    }
    return out;
}

std::optional<DeclKind> SpecDocument::kind_of(const std::string& name) const {
    for (const auto& [n, k] : order)
        if (n == name) return k;
    return std::nullopt;
}

namespace {

template <typename Decl>
const Decl& lookup(const std::vector<Decl>& decls, const SpecDocument& doc, const std::string& name, DeclKind kind) {
    auto k = doc.kind_of(name);
    if (!k) throw DomainError("unknown declaration '" + name + "'");
    if (*k != kind) throw DomainError("'" + name + "' is a " + to_string(*k) + ", not a " + to_string(kind));
    for (const auto& d : decls)
        if (d.name == name) return d;
    throw DomainError("unknown declaration '" + name + "'");
}

} // namespace

const CurveDecl& SpecDocument::curve(const std::string& n) const { return lookup(curves, *this, n, DeclKind::Curve); }
const PlaneDecl& SpecDocument::plane(const std::string& n) const { return lookup(planes, *this, n, DeclKind::Plane); }
const FibrationDecl& SpecDocument::fibration(const std::string& n) const {
    return lookup(fibrations, *this, n, DeclKind::Fibration);
}
const TwoStageDecl& SpecDocument::twostage(const std::string& n) const {
    return lookup(twostages, *this, n, DeclKind::TwoStage);
}
const MorphismDecl& SpecDocument::morphism(const std::string& n) const {
    return lookup(morphisms, *this, n, DeclKind::Morphism);
}
const ParamCurveDecl& SpecDocument::paramcurve(const std::string& n) const {
    return lookup(paramcurves, *this, n, DeclKind::ParamCurve);
}
const MordellDecl& SpecDocument::mordell(const std::string& n) const {
    return lookup(mordells, *this, n, DeclKind::Mordell);
}

TwoStageData SpecDocument::two_stage_data(const std::string& n) const {
    const auto& ts = twostage(n);
    return TwoStageData(fibration(ts.upper).data, ts.lower);
}

bool ParseResult::ok() const {
    for (const auto& d : diagnostics)
        if (d.severity == Severity::Error) return false;
    return true;
}

// ------------------------------------------------------------------ lexer

namespace {

enum class Tok { Ident, Number, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 1;
    int column = 1;
};

struct SyntaxError {
    int line;
    int column;
    std::string message;
};

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.column = col;
        std::size_t start = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            t.kind = Tok::Ident;
            t.text = std::string(src.substr(start, j - start));
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            if (j + 1 < src.size() && src[j] == '.' && std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
                ++j;
                while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            }
            t.kind = Tok::Number;
            t.text = std::string(src.substr(start, j - start));
            advance(j - i);
        } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
            t.kind = Tok::Punct;
            t.text = "->";
            advance(2);
        } else if (std::string_view("{};=+-*/^()").find(c) != std::string_view::npos) {
            t.kind = Tok::Punct;
            t.text = std::string(1, c);
            advance(1);
        } else {
            throw SyntaxError{line, col, std::string("unexpected character '") + c + "'"};
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = Tok::End;
    end.line = line;
    end.column = col;
    out.push_back(end);
    return out;
}

Rational number_value(const std::string& text) {
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(Integer(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac = text.size() - dot - 1;
    return make_rational(Integer(digits), pow(Integer(10), frac));
}

// ------------------------------------------------------------------ parser

const std::vector<std::string> kParamVars{"s", "u"};
const std::vector<std::string> kPlaneVars{"x0", "x1", "x2"};

class Parser {
public:
    Parser(std::vector<Token> tokens, ParseResult& result) : toks_(std::move(tokens)), result_(result) {}

    void document() {
        while (peek().kind != Tok::End) {
            std::size_t start = pos_;
            errors_in_decl_ = false;
            try {
                declaration();
            } catch (const SyntaxError& e) {
                result_.diagnostics.push_back({Severity::Error, e.line, e.column, e.message});
                synchronize(start);
            }
        }
    }

    MPoly standalone_polynomial(const std::vector<std::string>& vars) {
        MPoly p = polynomial(vars);
        if (peek().kind != Tok::End) fail(peek(), "unexpected '" + peek().text + "' after polynomial");
        return p;
    }

private:
    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    const Token& next() {
        const Token& t = peek();
        if (pos_ < toks_.size() - 1) ++pos_;
        return t;
    }
    [[noreturn]] static void fail(const Token& at, const std::string& msg) { throw SyntaxError{at.line, at.column, msg}; }
    bool is_punct(const std::string& p, std::size_t ahead = 0) const {
        return peek(ahead).kind == Tok::Punct && peek(ahead).text == p;
    }
    bool is_word(const std::string& w) const { return peek().kind == Tok::Ident && peek().text == w; }
    void expect_punct(const std::string& p) {
        if (!is_punct(p)) fail(peek(), "expected '" + p + "', found " + describe(peek()));
        next();
    }
    void expect_word(const std::string& w) {
        if (!is_word(w)) fail(peek(), "expected '" + w + "', found " + describe(peek()));
        next();
    }
    static std::string describe(const Token& t) {
        if (t.kind == Tok::End) return "end of input";
        return "'" + t.text + "'";
    }
    void semantic_error(const Token& at, const std::string& msg) {
        result_.diagnostics.push_back({Severity::Error, at.line, at.column, msg});
        errors_in_decl_ = true;
    }
    void optional_semicolon() {
        if (is_punct(";")) next();
    }

    /// Skips to just past the closing brace of the declaration starting at `start`.
    void synchronize(std::size_t start) {
        pos_ = start + 1;
        int depth = 0;
        while (peek().kind != Tok::End) {
            const Token& t = next();
            if (t.kind != Tok::Punct) continue;
            if (t.text == "{") ++depth;
            if (t.text == "}" && --depth <= 0) return;
        }
    }

    std::string name() {
        if (peek().kind != Tok::Ident) fail(peek(), "expected a name, found " + describe(peek()));
        return next().text;
    }
    std::string label() {
        if (peek().kind != Tok::Ident && peek().kind != Tok::Number)
            fail(peek(), "expected a label, found " + describe(peek()));
        return next().text;
    }
    long integer() {
        bool neg = false;
        if (is_punct("-")) {
            next();
            neg = true;
        }
        const Token& t = peek();
        if (t.kind != Tok::Number || t.text.find('.') != std::string::npos)
            fail(t, "expected an integer, found " + describe(t));
        next();
        Integer v(t.text);
        if (!v.fits_slong_p()) fail(t, "integer out of range");
        return neg ? -v.get_si() : v.get_si();
    }
    long positive_integer(const char* what) {
        const Token& at = peek();
        long v = integer();
        if (v < 1) semantic_error(at, std::string(what) + " must be a positive integer");
        return v;
    }
    Multiplicity multiplicity() {
        const Token& at = peek();
        if (is_word("inf")) {
            next();
            return Multiplicity::infinity();
        }
        bool neg = false;
        if (is_punct("-")) {
            next();
            neg = true;
        }
        if (peek().kind != Tok::Number) fail(peek(), "expected a multiplicity, found " + describe(peek()));
        Rational v = number_value(next().text);
        if (is_punct("/")) {
            next();
            if (peek().kind != Tok::Number) fail(peek(), "expected a denominator, found " + describe(peek()));
            const Token& dt = next();
            Rational den = number_value(dt.text);
            if (den == 0) fail(dt, "zero denominator");
            v /= den;
        }
        if (neg) v = -v;
        v.canonicalize();
        if (v < 1) {
            semantic_error(at, "multiplicity below 1: " + v.get_str());
            return Multiplicity();
        }
        return Multiplicity(v);
    }

    // polynomials ------------------------------------------------------------
    MPoly polynomial(const std::vector<std::string>& vars) {
        MPoly acc = poly_term(vars);
        while (is_punct("+") || is_punct("-")) {
            bool plus = next().text == "+";
            MPoly rhs = poly_term(vars);
            acc = plus ? acc + rhs : acc - rhs;
        }
        return acc;
    }
    MPoly poly_term(const std::vector<std::string>& vars) {
        MPoly acc = poly_unary(vars);
        while (is_punct("*") || is_punct("/")) {
            const Token& op = next();
            const Token& at = peek();
            MPoly rhs = poly_unary(vars);
            if (op.text == "*") {
                acc = acc * rhs;
                continue;
            }
            if (rhs.homogeneous_degree() != 0) fail(at, "division is only allowed by a nonzero constant");
            Rational c = rhs.terms().begin()->second;
            acc = acc * MPoly::constant(vars, 1 / c);
        }
        return acc;
    }
    MPoly poly_unary(const std::vector<std::string>& vars) {
        if (is_punct("-")) {
            next();
            return -poly_unary(vars);
        }
        MPoly base = poly_atom(vars);
        if (is_punct("^")) {
            next();
            const Token& at = peek();
            long e = integer();
            if (e < 0 || e > 64) fail(at, "exponent must be between 0 and 64");
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }
    MPoly poly_atom(const std::vector<std::string>& vars) {
        const Token& t = peek();
        if (t.kind == Tok::Number) {
            next();
            return MPoly::constant(vars, number_value(t.text));
        }
        if (t.kind == Tok::Ident) {
            for (std::size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == t.text) {
                    next();
                    return MPoly::variable(vars, i);
                }
            std::string allowed;
            for (const auto& v : vars) allowed += (allowed.empty() ? "" : ", ") + v;
            fail(t, "unknown variable '" + t.text + "' (expected one of " + allowed + ")");
        }
        if (is_punct("(")) {
            next();
            MPoly inner = polynomial(vars);
            expect_punct(")");
            return inner;
        }
        fail(t, "expected a polynomial term, found " + describe(t));
    }

    // declarations -----------------------------------------------------------
    void declaration() {
        const Token& kw = peek();
        if (kw.kind != Tok::Ident) fail(kw, "expected a declaration keyword, found " + describe(kw));
        static const std::map<std::string, DeclKind> kinds{
            {"curve", DeclKind::Curve},         {"plane", DeclKind::Plane},       {"fibration", DeclKind::Fibration},
            {"twostage", DeclKind::TwoStage},   {"morphism", DeclKind::Morphism}, {"paramcurve", DeclKind::ParamCurve},
            {"mordell", DeclKind::Mordell}};
        auto it = kinds.find(kw.text);
        if (it == kinds.end()) fail(kw, "unknown declaration keyword '" + kw.text + "'");
        next();
        const Token& name_tok = peek();
        std::string n = name();
        if (!names_.insert(n).second) semantic_error(name_tok, "duplicate declaration name '" + n + "'");
        expect_punct("{");
        switch (it->second) {
        case DeclKind::Curve: curve_body(n, name_tok); break;
        case DeclKind::Plane: plane_body(n); break;
        case DeclKind::Fibration: fibration_body(n); break;
        case DeclKind::TwoStage: twostage_body(n, name_tok); break;
        case DeclKind::Morphism: morphism_body(n); break;
        case DeclKind::ParamCurve: paramcurve_body(n, name_tok); break;
        case DeclKind::Mordell: mordell_body(n, name_tok); break;
        }
        if (!errors_in_decl_) result_.document.order.emplace_back(n, it->second);
    }

    void curve_body(const std::string& n, const Token& name_tok) {
        CurveDecl decl{n, {}};
        std::set<std::string> labels;
        bool have_genus = false;
        while (!is_punct("}")) {
            if (is_word("genus")) {
                const Token& kw = next();
                const Token& at = peek();
                long g = integer();
                if (have_genus) semantic_error(kw, "genus given twice");
                if (g < 0) semantic_error(at, "genus must be nonnegative");
                decl.curve.genus = g;
                have_genus = true;
            } else if (is_word("point")) {
                next();
                const Token& lt = peek();
                std::string l = label();
                expect_word("mult");
                Multiplicity m = multiplicity();
                if (!labels.insert(l).second) semantic_error(lt, "duplicate point label '" + l + "'");
                decl.curve.marks.set(l, m);
            } else {
                fail(peek(), "expected 'genus' or 'point', found " + describe(peek()));
            }
            expect_punct(";");
        }
        next();
        if (!have_genus) semantic_error(name_tok, "curve '" + n + "' has no genus");
        if (!errors_in_decl_) result_.document.curves.push_back(std::move(decl));
    }

    void plane_body(const std::string& n) {
        PlaneDecl decl{n, {}};
        std::set<std::string> labels;
        while (!is_punct("}")) {
            expect_word("component");
            const Token& lt = peek();
            PlaneComponentDecl c;
            c.label = label();
            expect_word("degree");
            c.degree = positive_integer("degree");
            expect_word("mult");
            c.mult = multiplicity();
            if (is_word("form")) {
                next();
                const Token& at = peek();
                MPoly f = polynomial(kPlaneVars);
                int d = f.homogeneous_degree();
                if (d == -1)
                    semantic_error(at, "defining form is zero");
                else if (d == -2)
                    semantic_error(at, "defining form is not homogeneous");
                else if (d != c.degree)
                    semantic_error(at, "defining form has degree " + std::to_string(d) + ", declared " +
                                           std::to_string(c.degree));
                c.form = std::move(f);
            }
            expect_punct(";");
            if (!labels.insert(c.label).second) semantic_error(lt, "duplicate component label '" + c.label + "'");
            decl.components.push_back(std::move(c));
        }
        next();
        if (!errors_in_decl_) result_.document.planes.push_back(std::move(decl));
    }

    void fibration_body(const std::string& n) {
        FibrationData::Map fibers;
        while (!is_punct("}")) {
            expect_word("over");
            const Token& lt = peek();
            std::string l = label();
            expect_punct("{");
            std::vector<FiberComponent> parts;
            while (!is_punct("}")) {
                expect_word("part");
                expect_word("t");
                long t = positive_integer("fibre coefficient t");
                expect_word("mult");
                Multiplicity m = multiplicity();
                expect_punct(";");
                if (t >= 1) parts.emplace_back(Integer(t), m);
            }
            next();
            optional_semicolon();
            if (parts.empty() && !errors_in_decl_) semantic_error(lt, "no parts over '" + l + "'");
            if (fibers.count(l)) semantic_error(lt, "duplicate base divisor '" + l + "'");
            fibers[l] = std::move(parts);
        }
        next();
        if (!errors_in_decl_) result_.document.fibrations.push_back({n, FibrationData(std::move(fibers))});
    }

    void twostage_body(const std::string& n, const Token& name_tok) {
        TwoStageDecl decl;
        decl.name = n;
        while (!is_punct("}")) {
            if (is_word("lower")) {
                next();
                const Token& lt = peek();
                std::string z = label();
                expect_punct("{");
                std::vector<LowerTerm> terms;
                while (!is_punct("}")) {
                    expect_word("s");
                    long s = positive_integer("pullback coefficient s");
                    expect_punct("->");
                    const Token& yt = peek();
                    std::string y = label();
                    expect_punct(";");
                    terms.push_back({Integer(s), y});
                    pending_refs_.push_back({n, y, yt});
                }
                next();
                optional_semicolon();
                if (terms.empty()) semantic_error(lt, "no terms over '" + z + "'");
                if (decl.lower.count(z)) semantic_error(lt, "duplicate divisor '" + z + "'");
                decl.lower[z] = std::move(terms);
            } else if (is_word("upper")) {
                const Token& kw = next();
                expect_punct("=");
                const Token& ut = peek();
                std::string u = name();
                optional_semicolon();
                if (!decl.upper.empty()) semantic_error(kw, "upper given twice");
                decl.upper = u;
                upper_refs_.push_back({n, u, ut});
            } else {
                fail(peek(), "expected 'lower' or 'upper', found " + describe(peek()));
            }
        }
        next();
        if (decl.upper.empty()) semantic_error(name_tok, "twostage '" + n + "' has no upper fibration");
        if (!errors_in_decl_) result_.document.twostages.push_back(std::move(decl));
    }

    OrbifoldDivisor divisor_block() {
        OrbifoldDivisor d;
        std::set<std::string> labels;
        expect_punct("{");
        while (!is_punct("}")) {
            const Token& lt = peek();
            std::string l = label();
            expect_word("mult");
            Multiplicity m = multiplicity();
            expect_punct(";");
            if (!labels.insert(l).second) semantic_error(lt, "duplicate label '" + l + "'");
            d.set(l, m);
        }
        next();
        optional_semicolon();
        return d;
    }

    void morphism_body(const std::string& n) {
        MorphismDecl decl;
        decl.name = n;
        while (!is_punct("}")) {
            if (is_word("pair")) {
                next();
                MorphismPair pr;
                pr.y_label = label();
                pr.x_label = label();
                expect_word("t");
                pr.t = positive_integer("contact coefficient t");
                expect_punct(";");
                decl.data.pairs.push_back(std::move(pr));
            } else if (is_word("dX")) {
                next();
                decl.data.delta_x = divisor_block();
            } else if (is_word("dY")) {
                next();
                decl.data.delta_y = divisor_block();
            } else {
                fail(peek(), "expected 'pair', 'dX' or 'dY', found " + describe(peek()));
            }
        }
        next();
        if (!errors_in_decl_) result_.document.morphisms.push_back(std::move(decl));
    }

    void paramcurve_body(const std::string& n, const Token& name_tok) {
        std::map<std::string, MPoly> coords;
        while (!is_punct("}")) {
            const Token& ct = peek();
            std::string c = name();
            if (c != "x0" && c != "x1" && c != "x2") fail(ct, "expected x0, x1 or x2, found '" + c + "'");
            expect_punct("=");
            MPoly p = polynomial(kParamVars);
            expect_punct(";");
            if (coords.count(c)) semantic_error(ct, "coordinate " + c + " given twice");
            coords.insert_or_assign(c, std::move(p));
        }
        next();
        for (const auto& c : kPlaneVars)
            if (!coords.count(c)) semantic_error(name_tok, "paramcurve '" + n + "' has no coordinate " + c);
        if (errors_in_decl_) return;
        ParamCurveDecl decl{n, coords["x0"], coords["x1"], coords["x2"]};
        try {
            (void)decl.curve();
        } catch (const DomainError& e) {
            semantic_error(name_tok, std::string("invalid parametrization: ") + e.what());
            return;
        }
        result_.document.paramcurves.push_back(std::move(decl));
    }

    void mordell_body(const std::string& n, const Token& name_tok) {
        std::map<std::string, long> vals;
        while (!is_punct("}")) {
            const Token& kt = peek();
            std::string k = name();
            if (k != "p" && k != "q" && k != "r") fail(kt, "expected p, q or r, found '" + k + "'");
            const Token& at = peek();
            long v = integer();
            expect_punct(";");
            if (vals.count(k)) semantic_error(kt, k + " given twice");
            if (v < 2) semantic_error(at, k + " must be at least 2");
            vals[k] = v;
        }
        next();
        for (const char* k : {"p", "q", "r"})
            if (!vals.count(k)) semantic_error(name_tok, std::string("mordell '") + n + "' has no " + k);
        if (!errors_in_decl_)
            result_.document.mordells.push_back({n, OrbifoldP1Triple(vals["p"], vals["q"], vals["r"])});
    }

public:
    struct Ref {
        std::string owner;
        std::string target;
        Token at;
    };
    std::vector<Ref> pending_refs_;  // lower y-labels
    std::vector<Ref> upper_refs_;

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    ParseResult& result_;
    std::set<std::string> names_;
    bool errors_in_decl_ = false;
};

/// Drops a declaration from the document after a failed cross-reference check.
void drop_twostage(SpecDocument& doc, const std::string& name) {
    std::erase_if(doc.twostages, [&](const TwoStageDecl& d) { return d.name == name; });
    std::erase_if(doc.order, [&](const auto& e) { return e.first == name; });
}

} // namespace

ParseResult parse(std::string_view source) {
    ParseResult result;
    std::vector<Token> tokens;
    try {
        tokens = lex(source);
    } catch (const SyntaxError& e) {
        result.diagnostics.push_back({Severity::Error, e.line, e.column, e.message});
        return result;
    }
    Parser parser(std::move(tokens), result);
    parser.document();

    // Cross-references: upper fibrations exist, lower labels have fibre data.
    auto& doc = result.document;
    std::set<std::string> broken;
    for (const auto& ref : parser.upper_refs_) {
        if (!doc.kind_of(ref.owner)) continue;
        auto k = doc.kind_of(ref.target);
        if (k != DeclKind::Fibration) {
            result.diagnostics.push_back({Severity::Error, ref.at.line, ref.at.column,
                                          "'" + ref.target + "' is not a declared fibration"});
            broken.insert(ref.owner);
        }
    }
    for (const auto& ref : parser.pending_refs_) {
        if (!doc.kind_of(ref.owner) || broken.count(ref.owner)) continue;
        const auto& ts = doc.twostage(ref.owner);
        if (!doc.fibration(ts.upper).data.has(ref.target)) {
            result.diagnostics.push_back({Severity::Error, ref.at.line, ref.at.column,
                                          "divisor '" + ref.target + "' has no fibre data in '" + ts.upper + "'"});
            broken.insert(ref.owner);
        }
    }
    for (const auto& b : broken) drop_twostage(doc, b);
    std::stable_sort(result.diagnostics.begin(), result.diagnostics.end(), [](const Diagnostic& a, const Diagnostic& b) {
        return std::pair(a.line, a.column) < std::pair(b.line, b.column);
    });
    return result;
}

MPoly parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
    ParseResult scratch;
    try {
        Parser parser(lex(text), scratch);
        return parser.standalone_polynomial(vars);
    } catch (const SyntaxError& e) {
        throw DomainError("polynomial syntax error at column " + std::to_string(e.column) + ": " + e.message);
    }
}

// ------------------------------------------------------------------ printer

std::string print(const SpecDocument& doc) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, kind] : doc.order) {
        if (!first) os << '\n';
        first = false;
        switch (kind) {
        case DeclKind::Curve: {
            const auto& d = doc.curve(name);
            os << "curve " << name << " {\n  genus " << d.curve.genus << ";\n";
            for (const auto& [l, m] : d.curve.marks.entries()) os << "  point " << l << " mult " << m.to_string() << ";\n";
            os << "}\n";
            break;
        }
        case DeclKind::Plane: {
            const auto& d = doc.plane(name);
            os << "plane " << name << " {\n";
            for (const auto& c : d.components) {
                os << "  component " << c.label << " degree " << c.degree << " mult " << c.mult.to_string();
                if (c.form) os << " form " << c.form->to_string();
                os << ";\n";
            }
            os << "}\n";
            break;
        }
        case DeclKind::Fibration: {
            const auto& d = doc.fibration(name);
            os << "fibration " << name << " {\n";
            for (const auto& [l, parts] : d.data.fibers()) {
                os << "  over " << l << " {\n";
                for (const auto& p : parts) os << "    part t " << p.t.get_str() << " mult " << p.m.to_string() << ";\n";
                os << "  }\n";
            }
            os << "}\n";
            break;
        }
        case DeclKind::TwoStage: {
            const auto& d = doc.twostage(name);
            os << "twostage " << name << " {\n";
            for (const auto& [z, terms] : d.lower) {
                os << "  lower " << z << " {\n";
                for (const auto& t : terms) os << "    s " << t.s.get_str() << " -> " << t.y_label << ";\n";
                os << "  }\n";
            }
            os << "  upper = " << d.upper << ";\n}\n";
            break;
        }
        case DeclKind::Morphism: {
            const auto& d = doc.morphism(name);
            os << "morphism " << name << " {\n";
            for (const auto& p : d.data.pairs)
                os << "  pair " << p.y_label << ' ' << p.x_label << " t " << p.t.get_str() << ";\n";
            auto block = [&](const char* kw, const OrbifoldDivisor& div) {
                os << "  " << kw << " {";
                if (div.empty()) {
                    os << " }\n";
                    return;
                }
                os << '\n';
                for (const auto& [l, m] : div.entries()) os << "    " << l << " mult " << m.to_string() << ";\n";
                os << "  }\n";
            };
            block("dX", d.data.delta_x);
            block("dY", d.data.delta_y);
            os << "}\n";
            break;
        }
        case DeclKind::ParamCurve: {
            const auto& d = doc.paramcurve(name);
            os << "paramcurve " << name << " {\n  x0 = " << d.x0.to_string() << ";\n  x1 = " << d.x1.to_string()
               << ";\n  x2 = " << d.x2.to_string() << ";\n}\n";
            break;
        }
        case DeclKind::Mordell: {
            const auto& d = doc.mordell(name);
            os << "mordell " << name << " {\n  p " << d.triple.p << ";\n  q " << d.triple.q << ";\n  r " << d.triple.r
               << ";\n}\n";
            break;
        }
        }
    }
    return os.str();
}

} // namespace orbi::dsl
