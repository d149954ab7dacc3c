#pragma once

#include "orbi/curveclass.hpp"
#include "orbi/curverestrict.hpp"
#include "orbi/fibration.hpp"
#include "orbi/mordell.hpp"
#include "orbi/planepairs.hpp"
#include "orbi/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbi::dsl {

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity = Severity::Error;
    int line = 1;
    int column = 1;
    std::string message;

    /// "<source>:line:col: error: message"
    std::string format(std::string_view source_name) const;
};

struct CurveDecl {
    std::string name;
    CurveOrbifold curve;
    friend bool operator==(const CurveDecl&, const CurveDecl&) = default;
};

struct PlaneComponentDecl {
    std::string label;
    long degree = 1;
    Multiplicity mult;
    std::optional<MPoly> form;  // in x0, x1, x2
    friend bool operator==(const PlaneComponentDecl&, const PlaneComponentDecl&) = default;
};

struct PlaneDecl {
    std::string name;
    std::vector<PlaneComponentDecl> components;

    PlaneArrangementPair pair() const;
    /// Throws DomainError when a component (of multiplicity > 1) lacks a form.
    std::vector<PlaneDivisorComponent> arrangement() const;
    friend bool operator==(const PlaneDecl&, const PlaneDecl&) = default;
};

struct FibrationDecl {
    std::string name;
    FibrationData data;
    friend bool operator==(const FibrationDecl&, const FibrationDecl&) = default;
};

struct TwoStageDecl {
    std::string name;
    TwoStageData::LowerMap lower;
    std::string upper;  // name of a fibration declaration
    friend bool operator==(const TwoStageDecl&, const TwoStageDecl&) = default;
};

struct MorphismDecl {
    std::string name;
    MorphismData data;
    friend bool operator==(const MorphismDecl&, const MorphismDecl&) = default;
};

struct ParamCurveDecl {
    std::string name;
    MPoly x0, x1, x2;  // in s, u

    ParamPlaneCurve curve() const { return ParamPlaneCurve::from_polys(x0, x1, x2); }
    friend bool operator==(const ParamCurveDecl&, const ParamCurveDecl&) = default;
};

struct MordellDecl {
    std::string name;
    OrbifoldP1Triple triple;
    friend bool operator==(const MordellDecl&, const MordellDecl&) = default;
};

enum class DeclKind { Curve, Plane, Fibration, TwoStage, Morphism, ParamCurve, Mordell };
std::string to_string(DeclKind k);

/// Parsed declarations, each kind in source order; names are unique across kinds.
struct SpecDocument {
    std::vector<CurveDecl> curves;
    std::vector<PlaneDecl> planes;
    std::vector<FibrationDecl> fibrations;
    std::vector<TwoStageDecl> twostages;
    std::vector<MorphismDecl> morphisms;
    std::vector<ParamCurveDecl> paramcurves;
    std::vector<MordellDecl> mordells;
    /// Declaration names in source order with their kind.
    std::vector<std::pair<std::string, DeclKind>> order;

    std::optional<DeclKind> kind_of(const std::string& name) const;
    /// Lookups throw DomainError for unknown names or a kind mismatch.
    const CurveDecl& curve(const std::string& name) const;
    const PlaneDecl& plane(const std::string& name) const;
    const FibrationDecl& fibration(const std::string& name) const;
    const TwoStageDecl& twostage(const std::string& name) const;
    const MorphismDecl& morphism(const std::string& name) const;
    const ParamCurveDecl& paramcurve(const std::string& name) const;
    const MordellDecl& mordell(const std::string& name) const;

    /// Resolves the upper fibration of a two-stage declaration.
    TwoStageData two_stage_data(const std::string& name) const;

    friend bool operator==(const SpecDocument&, const SpecDocument&) = default;
};

struct ParseResult {
    SpecDocument document;
    std::vector<Diagnostic> diagnostics;

    bool ok() const;
};

/// Parses the whole source; erroneous declarations are dropped and parsing
/// resumes after the closing brace of the declaration.
ParseResult parse(std::string_view source);

/// Parses a standalone polynomial over the given variables.
MPoly parse_polynomial(std::string_view text, const std::vector<std::string>& vars);

/// Canonical text of a document; parse(print(doc)) reproduces doc.
std::string print(const SpecDocument& doc);

} // namespace orbi::dsl
