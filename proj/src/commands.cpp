#include "orbi/commands.hpp"

#include "orbi/dsl.hpp"
#include "orbi/symdiff.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace orbi::cli {

namespace {

using nlohmann::json;

/// Raised for problems with the command line or the spec file itself.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string file;
    bool json = false;
    std::string name;
    std::string mode;
    std::string against;
    std::string variant = "Z";
    std::string sign = "minus";
    long degree = 0;
    std::uint64_t max_a = 0;
    std::uint64_t max_b = 0;
    long max = 0;
    std::size_t shards = 4;
    long p = 0;
    long q = 0;
    std::uint64_t limit = 0;
    bool density = false;
    bool list = false;
    std::string mults;
    int extra = 1;
};

json divisor_json(const OrbifoldDivisor& d) {
    json j = json::object();
    for (const auto& [l, m] : d.entries()) j[l] = m.to_string();
    return j;
}

std::string fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

const char* boolstr(bool b) { return b ? "true" : "false"; }

class Session {
public:
    Session(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

    /// Reads and parses the spec file; parse errors become exit code 2.
    bool load() {
        if (opt_.file.empty()) throw UsageError("this command needs a spec file (-f <file>)");
        std::ifstream in(opt_.file);
        if (!in) throw UsageError("cannot read '" + opt_.file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        auto result = dsl::parse(buf.str());
        for (const auto& d : result.diagnostics) err_ << d.format(opt_.file) << '\n';
        if (!result.ok()) return false;
        doc_ = std::move(result.document);
        return true;
    }

    const dsl::SpecDocument& doc() const { return doc_; }

    void emit(const json& j) { out_ << j.dump(2) << '\n'; }

    // ------------------------------------------------------------ commands
    void classify() {
        const auto& c = doc_.curve(opt_.name).curve;
        Rational deg = canonical_degree(c);
        Kappa k = kappa_curve(c);
        bool special = is_special_curve(c);
        std::optional<std::string> family;
        if (c.marks.is_finite() && c.marks.is_integral() && c.genus == 0) family = spherical_profile(c).family;
        if (opt_.json) {
            json j{{"name", opt_.name}, {"genus", c.genus},   {"marks", divisor_json(c.marks)},
                   {"degree", to_string(deg)}, {"kappa", to_string(k)}, {"special", special},
                   {"rational", is_rational_orbifold_curve(c)}};
            j["family"] = family ? json(*family) : json(nullptr);
            emit(j);
            return;
        }
        out_ << "kappa=" << to_string(k) << " degree=" << to_string(deg) << " special=" << boolstr(special);
        if (family) out_ << " family=" << *family;
        out_ << '\n';
    }

    void fano() {
        auto pair = doc_.plane(opt_.name).pair();
        Rational a = anticanonical_degree(pair);
        bool f = is_fano(pair);
        if (opt_.json) {
            emit({{"name", opt_.name}, {"anticanonical", to_string(a)}, {"fano", f}});
            return;
        }
        out_ << "anticanonical=" << to_string(a) << " fano=" << boolstr(f) << '\n';
    }

    void familydim() {
        auto r = family_dim_report(doc_.plane(opt_.name).pair(), opt_.degree);
        if (opt_.json) {
            json j{{"name", opt_.name},
                   {"degree", opt_.degree},
                   {"dimension", r.dimension.get_str()},
                   {"parameters", r.parameters.get_str()},
                   {"conditions", r.conditions.get_str()},
                   {"anticanonical", to_string(r.anticanonical)},
                   {"identity", r.identity_holds}};
            if (r.n) {
                j["n"] = r.n->get_str();
                j["shortcut_3n_minus_1"] = r.shortcut_3n_minus_1->get_str();
                j["shortcut_matches"] = r.shortcut_matches;
            }
            emit(j);
            return;
        }
        out_ << "dimension=" << r.dimension << " parameters=" << r.parameters << " conditions=" << r.conditions
             << " identity=" << boolstr(r.identity_holds) << '\n';
        if (r.n)
            out_ << "n=" << *r.n << " shortcut_3n_minus_1=" << *r.shortcut_3n_minus_1
                 << " shortcut_matches=" << boolstr(r.shortcut_matches) << '\n';
    }

    void base() {
        BaseMode mode = parse_base_mode(opt_.mode);
        const auto& fd = doc_.fibration(opt_.name).data;
        OrbifoldDivisor d = orbifold_base(fd, mode);
        if (opt_.json) {
            json per = json::object();
            for (const auto& [l, parts] : fd.fibers()) per[l] = base_multiplicity(fd, l, mode).to_string();
            emit({{"name", opt_.name}, {"mode", to_string(mode)}, {"multiplicities", per}, {"divisor", divisor_json(d)}});
            return;
        }
        for (const auto& [l, parts] : fd.fibers()) out_ << l << " mult=" << base_multiplicity(fd, l, mode).to_string() << '\n';
        out_ << "divisor=" << d.to_string() << '\n';
    }

    void compose() {
        auto bases = compose_base(doc_.two_stage_data(opt_.name));
        bool equal = bases.direct == bases.staged;
        if (opt_.json) {
            emit({{"name", opt_.name},
                  {"direct", divisor_json(bases.direct)},
                  {"staged", divisor_json(bases.staged)},
                  {"equal", equal}});
            return;
        }
        out_ << "direct=" << bases.direct.to_string() << '\n'
             << "staged=" << bases.staged.to_string() << '\n'
             << "equal=" << boolstr(equal) << '\n';
    }

    void morphism() {
        MorphismMode mode;
        if (opt_.mode == "inf")
            mode = MorphismMode::Inf;
        else if (opt_.mode == "classical")
            mode = MorphismMode::Classical;
        else
            throw UsageError("--mode must be inf or classical");
        auto rep = check_orbifold_morphism(doc_.morphism(opt_.name).data, mode);
        if (opt_.json) {
            json checks = json::array();
            for (const auto& c : rep.checks)
                checks.push_back({{"y", c.pair.y_label},
                                  {"x", c.pair.x_label},
                                  {"t", c.pair.t.get_str()},
                                  {"lhs", c.lhs.to_string()},
                                  {"rhs", c.rhs.to_string()},
                                  {"ok", c.ok}});
            emit({{"name", opt_.name}, {"mode", to_string(mode)}, {"checks", checks}, {"morphism", rep.ok}});
            return;
        }
        for (const auto& c : rep.checks)
            out_ << "pair " << c.pair.y_label << ' ' << c.pair.x_label << " t=" << c.pair.t << " lhs=" << c.lhs.to_string()
                 << " rhs=" << c.rhs.to_string() << " ok=" << boolstr(c.ok) << '\n';
        out_ << "morphism=" << boolstr(rep.ok) << '\n';
    }

    void restrict_cmd() {
        RestrictionVariant variant;
        if (opt_.variant == "Z")
            variant = RestrictionVariant::Z;
        else if (opt_.variant == "Q")
            variant = RestrictionVariant::Q;
        else
            throw UsageError("--variant must be Z or Q");
        auto curve = doc_.paramcurve(opt_.name).curve();
        auto arrangement = doc_.plane(opt_.against).arrangement();
        auto records = contact_orders(curve, arrangement);
        bool clamped = false;
        CurveOrbifold restricted =
            variant == RestrictionVariant::Z ? restrict_z(curve, arrangement) : restrict_q(curve, arrangement, clamped);
        Rational deg = canonical_degree(restricted);
        Kappa k = kappa_curve(restricted);
        if (opt_.json) {
            json pts = json::array();
            for (const auto& r : records) {
                json contact = json::object();
                for (const auto& [l, t] : r.contact) contact[l] = t;
                pts.push_back({{"point", r.label()},
                               {"orbit", r.orbit_size()},
                               {"contact", contact},
                               {"mult", restricted.marks.multiplicity(r.label()).to_string()}});
            }
            json j{{"name", opt_.name},   {"against", opt_.against}, {"variant", to_string(variant)},
                   {"points", pts},       {"degree", to_string(deg)}, {"kappa", to_string(k)},
                   {"rational", k == Kappa::NegativeInfinity}};
            if (variant == RestrictionVariant::Q) j["clamped"] = clamped;
            emit(j);
            return;
        }
        for (const auto& r : records) {
            out_ << "point " << r.label() << " orbit=" << r.orbit_size();
            for (const auto& [l, t] : r.contact) out_ << ' ' << l << '=' << t;
            out_ << " mult=" << restricted.marks.multiplicity(r.label()).to_string() << '\n';
        }
        out_ << "degree=" << to_string(deg) << " kappa=" << to_string(k)
             << " rational=" << boolstr(k == Kappa::NegativeInfinity);
        if (variant == RestrictionVariant::Q) out_ << " clamped=" << boolstr(clamped);
        out_ << '\n';
    }

    void rational() {
        auto curve = doc_.paramcurve(opt_.name).curve();
        auto arrangement = doc_.plane(opt_.against).arrangement();
        json j{{"name", opt_.name}, {"against", opt_.against}};
        for (auto v : {RestrictionVariant::Z, RestrictionVariant::Q}) {
            CurveOrbifold r = restrict(curve, arrangement, v);
            Rational deg = canonical_degree(r);
            Kappa k = kappa_curve(r);
            if (opt_.json) {
                j[to_string(v)] = {{"degree", to_string(deg)}, {"kappa", to_string(k)}, {"rational", k == Kappa::NegativeInfinity}};
            } else {
                out_ << to_string(v) << " rational=" << boolstr(k == Kappa::NegativeInfinity) << " kappa=" << to_string(k)
                     << " degree=" << to_string(deg) << '\n';
            }
        }
        if (opt_.json) emit(j);
    }

    void mordell_search() {
        SearchSign sign;
        if (opt_.sign == "minus")
            sign = SearchSign::Minus;
        else if (opt_.sign == "plus")
            sign = SearchSign::Plus;
        else
            throw UsageError("--sign must be minus or plus");
        if (opt_.shards < 1) throw UsageError("--shards must be positive");
        const auto& t = doc_.mordell(opt_.name).triple;
        auto points = search_points(t, opt_.max_a, opt_.max_b, sign, opt_.shards);
        if (opt_.json) {
            json arr = json::array();
            for (const auto& pt : points)
                arr.push_back({{"a", pt.a.get_str()},
                               {"b", pt.b.get_str()},
                               {"c", pt.c.get_str()},
                               {"witnesses",
                                {factorization_string(pt.a), factorization_string(pt.b), factorization_string(pt.c)}}});
            emit(arr);
            return;
        }
        for (const auto& pt : points)
            out_ << "a=" << pt.a << " b=" << pt.b << " c=" << pt.c << " witnesses=" << factorization_string(pt.a) << ','
                 << factorization_string(pt.b) << ',' << factorization_string(pt.c) << '\n';
        out_ << "count=" << points.size() << '\n';
    }

    void mordell_classical() {
        const auto& t = doc_.mordell(opt_.name).triple;
        auto ws = search_classical(t, opt_.max, opt_.max);
        if (opt_.json) {
            json arr = json::array();
            for (const auto& w : ws)
                arr.push_back({{"alpha", w.alpha.get_str()}, {"beta", w.beta.get_str()}, {"gamma", w.gamma.get_str()}});
            emit(arr);
            return;
        }
        for (const auto& w : ws) out_ << "alpha=" << w.alpha << " beta=" << w.beta << " gamma=" << w.gamma << '\n';
        out_ << "count=" << ws.size() << '\n';
    }

    void pfull() {
        if (opt_.p < 1) throw DomainError("p must be positive");
        if (opt_.limit < 1) throw DomainError("limit must be positive");
        auto values = enumerate_p_full(opt_.limit, opt_.p);
        std::optional<DensityReport> dens;
        if (opt_.density) dens = density_report(opt_.limit, opt_.p);
        if (opt_.json) {
            json j{{"p", opt_.p}, {"limit", opt_.limit}, {"count", values.size()}};
            if (opt_.list) j["values"] = values;
            if (dens) {
                json cps = json::array();
                for (const auto& [x, c] : dens->checkpoints) cps.push_back({{"x", x}, {"count", c}});
                j["density"] = {{"ratio", fixed(dens->ratio)}, {"slope", fixed(dens->slope)}, {"checkpoints", cps}};
            }
            emit(j);
            return;
        }
        out_ << "count=" << values.size() << '\n';
        if (opt_.list) {
            out_ << "values=";
            for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? " " : "") << values[i];
            out_ << '\n';
        }
        if (dens) {
            for (const auto& [x, c] : dens->checkpoints) out_ << "checkpoint x=" << x << " count=" << c << '\n';
            out_ << "ratio=" << fixed(dens->ratio) << " slope=" << fixed(dens->slope) << '\n';
        }
    }

    void symdiff_check() {
        std::vector<Multiplicity> mults;
        std::stringstream ss(opt_.mults);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) mults.push_back(Multiplicity::parse(item));
        auto rep = check_positive_floor(static_cast<int>(opt_.p), static_cast<int>(opt_.q), mults, opt_.extra);
        if (opt_.json) {
            json levels = json::array();
            for (const auto& l : rep.levels)
                levels.push_back({{"n", l.n}, {"enumerated", l.enumerated}, {"counterexamples", l.counterexamples}});
            emit({{"p", rep.p},
                  {"q", rep.q},
                  {"threshold", rep.threshold},
                  {"levels", levels},
                  {"counterexamples", rep.counterexamples}});
            return;
        }
        out_ << "threshold=" << rep.threshold << '\n';
        for (const auto& l : rep.levels)
            out_ << "N=" << l.n << " enumerated=" << l.enumerated << " counterexamples=" << l.counterexamples << '\n';
        out_ << "counterexamples=" << rep.total_counterexamples() << '\n';
    }

    void print_doc() { out_ << dsl::print(doc_); }

    void check() {
        if (opt_.json) {
            json decls = json::array();
            for (const auto& [n, k] : doc_.order) decls.push_back({{"name", n}, {"kind", dsl::to_string(k)}});
            emit({{"ok", true}, {"declarations", decls}});
            return;
        }
        for (const auto& [n, k] : doc_.order) out_ << dsl::to_string(k) << ' ' << n << '\n';
        out_ << "ok declarations=" << doc_.order.size() << '\n';
    }

private:
    static BaseMode parse_base_mode(const std::string& m) {
        if (m == "inf") return BaseMode::Inf;
        if (m == "gcd") return BaseMode::Gcd;
        throw UsageError("--mode must be inf or gcd");
    }

    const Options& opt_;
    std::ostream& out_;
    std::ostream& err_;
    dsl::SpecDocument doc_;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Orbifold pair calculus", "orbi"};
    app.require_subcommand(1);
    app.add_option("-f,--file", opt.file, "Spec file");
    app.add_flag("--json", opt.json, "Emit JSON");
    app.fallthrough();

    std::function<void(Session&)> action;
    bool needs_doc = true;

    auto named = [&](const char* cmd, const char* help, void (Session::*fn)()) {
        CLI::App* sub = app.add_subcommand(cmd, help);
        sub->add_option("name", opt.name, "Declaration name")->required();
        sub->callback([&action, fn] { action = [fn](Session& s) { (s.*fn)(); }; });
        return sub;
    };

    named("classify", "Classify a curve orbifold", &Session::classify);
    named("fano", "Anticanonical degree of a plane pair", &Session::fano);
    named("familydim", "Expected dimension of Delta-rational curve families", &Session::familydim)
        ->add_option("--degree", opt.degree, "Curve degree")
        ->required();
    named("base", "Orbifold base of a fibration", &Session::base)
        ->add_option("--mode", opt.mode, "inf or gcd")
        ->required();
    named("compose", "Compare direct and staged bases of a two-stage fibration", &Session::compose);
    named("morphism", "Check the orbifold morphism condition", &Session::morphism)
        ->add_option("--mode", opt.mode, "inf or classical")
        ->required();
    auto* restrict_sub = named("restrict", "Restrict a plane pair to a parametrized curve", &Session::restrict_cmd);
    restrict_sub->add_option("--against", opt.against, "Plane declaration")->required();
    restrict_sub->add_option("--variant", opt.variant, "Z or Q");
    named("rational", "Delta-rationality of a parametrized curve", &Session::rational)
        ->add_option("--against", opt.against, "Plane declaration")
        ->required();
    auto* ms = named("mordell-search", "Non-classical rational points", &Session::mordell_search);
    ms->add_option("--max-a", opt.max_a, "Bound on a")->required();
    ms->add_option("--max-b", opt.max_b, "Bound on b")->required();
    ms->add_option("--sign", opt.sign, "minus or plus");
    ms->add_option("--shards", opt.shards, "Number of denominator shards");
    named("mordell-classical", "Classical solutions of alpha^p + beta^r = gamma^q", &Session::mordell_classical)
        ->add_option("--max", opt.max, "Bound on alpha and beta")
        ->required();

    CLI::App* pf = app.add_subcommand("pfull", "Enumerate p-full integers");
    pf->add_option("--p", opt.p, "Exponent")->required();
    pf->add_option("--limit", opt.limit, "Upper bound")->required();
    pf->add_flag("--density", opt.density, "Report density checkpoints");
    pf->add_flag("--list", opt.list, "List the values");
    pf->callback([&] {
        needs_doc = false;
        action = [](Session& s) { s.pfull(); };
    });

    CLI::App* sd = app.add_subcommand("symdiff-check", "Exhaustive positive-floor check");
    sd->add_option("--p", opt.p, "Number of coordinates")->required();
    sd->add_option("--q", opt.q, "Subset size")->required();
    sd->add_option("--mults", opt.mults, "Comma-separated multiplicities")->required();
    sd->add_option("--extra", opt.extra, "Levels above the threshold");
    sd->callback([&] {
        needs_doc = false;
        action = [](Session& s) { s.symdiff_check(); };
    });

    app.add_subcommand("print", "Pretty-print the spec file")->callback([&] {
        action = [](Session& s) { s.print_doc(); };
    });
    app.add_subcommand("check", "Parse the spec file and list declarations")->callback([&] {
        action = [](Session& s) { s.check(); };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    Session session(opt, out, err);
    try {
        if (needs_doc && !session.load()) return kExitParse;
        action(session);
    } catch (const UsageError& e) {
        err << "orbi: error: " << e.what() << '\n';
        return kExitParse;
    } catch (const DomainError& e) {
        err << "orbi: error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitOk;
}

} // namespace orbi::cli
