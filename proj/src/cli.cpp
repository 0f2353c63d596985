#include "kra/cli.hpp"

#include "kra/builtins.hpp"
#include "kra/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#ifndef KRA_VERSION
#define KRA_VERSION "0.0.0"
#endif

namespace kra::cli {

namespace {

using report::Json;

struct Options {
    std::string builtin;
    int size = 0;
    std::string file;
    std::string path;
    int dim = 4;
    int n = 4;
    bool json = false;
    bool strict = false;
    bool strict_bounds = false;
    std::string profile;
    std::optional<int> loops;
    int ext = 0;
    int ext_A = 0;
    int ext_chi = 0;
    int ext_ghost = 0;
    int heat_max = 3;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Loaded {
    Json input;
    std::optional<KrajewskiDiagram> diagram;
    std::optional<ParseError> error;
    std::string text;
    std::string name;
};

Loaded load(const Options& o) {
    const std::string path = !o.file.empty() ? o.file : o.path;
    if (o.builtin.empty() == path.empty()) {
        throw UsageError("give exactly one of --builtin NAME or a .kra file");
    }
    Loaded l;
    if (!o.builtin.empty()) {
        std::string name = o.builtin;
        int param = o.size;
        if (const auto colon = name.find(':'); colon != std::string::npos) {
            try {
                param = std::stoi(name.substr(colon + 1));
            } catch (const std::exception&) {
                throw UsageError("bad builtin parameter in '" + name + "'");
            }
            name = name.substr(0, colon);
        }
        const auto names = builtin_names();
        if (std::find(names.begin(), names.end(), name) == names.end()) {
            throw UsageError("unknown builtin '" + name + "'");
        }
        if (name == "ym" && param < 1) {
            throw UsageError("builtin ym needs a size: --builtin ym:N or --size N");
        }
        l.input = {{"kind", "builtin"}, {"name", name}, {"param", name == "ym" ? Json(param) : Json(nullptr)}};
        l.diagram = builtin(name, param);
        return l;
    }
    l.input = {{"kind", "file"}, {"name", path}, {"param", nullptr}};
    l.name = path;
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        l.error = ParseError{{1, 1, 0}, "cannot read file '" + path + "'", {}};
        return l;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    l.text = buf.str();
    auto parsed = parse(l.text);
    if (auto* e = std::get_if<ParseError>(&parsed)) {
        l.error = *e;
    } else {
        l.diagram = std::move(std::get<KrajewskiDiagram>(parsed));
    }
    return l;
}

class Emitter {
public:
    Emitter(const Options& o, std::string command, std::ostream& out, std::ostream& err)
        : o_(o), command_(std::move(command)), out_(out), err_(err) {}

    void json(const Json& input, const Json& result, const std::vector<std::string>& warnings,
              const Json& error = nullptr) {
        Json env;
        env["tool"] = "kra";
        env["version"] = KRA_VERSION;
        env["command"] = command_;
        env["input"] = input;
        env["result"] = result;
        env["warnings"] = warnings;
        if (!error.is_null()) {
            env["error"] = error;
        }
        out_ << env.dump(2) << '\n';
    }

    std::ostream& out() { return out_; }
    std::ostream& err() { return err_; }
    [[nodiscard]] bool as_json() const { return o_.json; }

private:
    const Options& o_;
    std::string command_;
    std::ostream& out_;
    std::ostream& err_;
};

int run_builtins(Emitter& em) {
    Json list = Json::array();
    std::ostringstream text;
    for (const auto& name : builtin_names()) {
        const KrajewskiDiagram d = builtin(name, name == "ym" ? 2 : 0);
        const std::string shown = name == "ym" ? "ym:N" : name;
        list.push_back({{"name", shown},
                        {"kodim", d.kodim},
                        {"vertices", d.vertices.size()},
                        {"edge_pairs", d.edges.size()},
                        {"families", d.families}});
        text << "  " << shown << "  KO-dim " << d.kodim << ", " << d.vertices.size() << " vertices, "
             << d.edges.size() << " edge pairs\n";
    }
    if (em.as_json()) {
        em.json({{"kind", "none"}, {"name", nullptr}, {"param", nullptr}}, {{"builtins", list}}, {});
    } else {
        em.out() << text.str();
    }
    return Ok;
}

int run_powercount(const Options& o, Emitter& em) {
    check_expansion_order(o.n);
    Json result;
    std::ostringstream text;
    result["n"] = o.n;
    result["propagator_uv_degrees"] = propagator_uv_degrees(o.n);
    text << "propagator UV degree: " << -(o.n - 2) << " (gauge, higgs, ghost)\n";
    Json heat = Json::array();
    for (int k = 0; k <= o.heat_max; ++k) {
        const auto c = heat_kernel_coefficients(k);
        heat.push_back({{"k", k}, {"c", to_string(c.c)}, {"c_prime", to_string(c.c_prime)}});
        text << "c_" << k << " = " << to_string(c.c) << " * 1/(8 pi^2), c'_" << k << " = " << to_string(c.c_prime)
             << " * 1/(8 pi^2)\n";
    }
    result["heat_kernel"] = heat;
    result["omega_external"] = nullptr;
    result["profile"] = nullptr;
    if (o.loops) {
        const int ea = o.ext + o.ext_A;
        const long w = omega_external(*o.loops, ea, o.ext_chi, o.ext_ghost, o.n);
        result["omega_external"] = {{"L", *o.loops}, {"E", ea + o.ext_chi + o.ext_ghost}, {"value", w}};
        text << "omega <= " << w << " for L = " << *o.loops << ", E = " << ea + o.ext_chi + o.ext_ghost << '\n';
    }
    bool consistent = true;
    if (!o.profile.empty()) {
        std::ifstream in(o.profile);
        if (!in) {
            throw UsageError("cannot read profile '" + o.profile + "'");
        }
        Json pj;
        try {
            pj = Json::parse(in);
        } catch (const std::exception& ex) {
            throw UsageError(std::string("profile is not valid JSON: ") + ex.what());
        }
        const GraphProfile p = report::profile_from_json(pj);
        const ProfileReport r = validate_profile(p);
        consistent = r.ok();
        result["profile"] = report::profile_json(p, r, o.n);
        for (const auto& c : r.checks) {
            text << "  " << (c.holds() ? "ok    " : "FAIL  ") << c.name << ": " << c.lhs << " vs " << c.rhs << '\n';
        }
        for (const auto& problem : r.problems) {
            text << "  problem: " << problem << '\n';
        }
        const Json& pj_out = result["profile"];
        if (!pj_out["omega_bound"].is_null()) {
            text << "omega bound: " << pj_out["omega_bound"].get<long>() << '\n';
        }
        if (!pj_out["omega_external"].is_null()) {
            text << "omega <= " << pj_out["omega_external"].get<long>() << " from the external legs\n";
        }
    }
    if (em.as_json()) {
        em.json({{"kind", o.profile.empty() ? "none" : "file"},
                 {"name", o.profile.empty() ? Json(nullptr) : Json(o.profile)},
                 {"param", nullptr}},
                result, {});
    } else {
        em.out() << text.str();
    }
    return consistent || !o.strict ? Ok : NegativeVerdict;
}

int run_diagram_command(const std::string& command, const Options& o, Emitter& em) {
    Loaded l = load(o);
    if (l.error) {
        if (em.as_json()) {
            em.json(l.input, nullptr, {}, report::parse_error_json(*l.error));
        }
        em.err() << format_parse_error(*l.error, l.text, l.name);
        return ParseFailure;
    }
    const KrajewskiDiagram& d = *l.diagram;
    const ValidationReport v = validate(d);
    if (command == "validate" || !v.ok()) {
        if (em.as_json()) {
            Json error = nullptr;
            if (!v.ok()) {
                error = {{"kind", "validation"}, {"message", "diagram violates the axioms"}};
            }
            em.json(l.input, report::validation_json(d, v), v.warnings, error);
        } else {
            (v.ok() ? em.out() : em.err()) << report::validation_text(d, v);
            for (const auto& w : v.warnings) {
                em.err() << "warning: " << w << '\n';
            }
        }
        return v.ok() ? Ok : InvalidDiagram;
    }

    Json result;
    std::string text;
    bool negative = false;
    if (command == "fmt") {
        text = serialize(d);
        result = {{"text", text}};
    } else if (command == "gauge-algebra") {
        result = report::gauge_json(d);
        text = report::gauge_text(d);
    } else if (command == "fields") {
        const auto f = enumerate_fields(d);
        result = report::fields_json(d, f);
        text = report::fields_text(d, f);
    } else if (command == "action-terms") {
        const auto terms = action_terms(d);
        result = report::terms_json(d.algebra, terms);
        text = report::terms_text(d.algebra, terms);
    } else if (command == "counterterms") {
        const auto terms = required_counterterms(d);
        result = report::terms_json(d.algebra, terms);
        text = report::terms_text(d.algebra, terms);
    } else if (command == "coverage") {
        const auto c = counterterm_coverage(d);
        result = report::coverage_json(d.algebra, c);
        text = report::coverage_text(d.algebra, c);
        negative = !c.complete();
    } else if (command == "check-rconnect") {
        if (o.dim < 2) {
            throw UsageError("--dim must be at least 2");
        }
        const auto r = check_r_connected(d, o.dim, o.strict_bounds);
        result = report::rconnect_json(d, r);
        text = report::rconnect_text(d, r);
        negative = !r.verdict;
    } else if (command == "verdict") {
        const auto verdict = renorm_verdict(d, o.n, o.strict_bounds);
        result = report::verdict_json(d, verdict);
        text = report::verdict_text(d, verdict);
        negative = verdict.kind == VerdictKind::Inconclusive;
    }
    if (em.as_json()) {
        em.json(l.input, result, v.warnings);
    } else {
        em.out() << text;
        for (const auto& w : v.warnings) {
            em.err() << "warning: " << w << '\n';
        }
    }
    return negative && o.strict ? NegativeVerdict : Ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Analyse finite spectral triples given as Krajewski diagrams", "kra"};
    app.require_subcommand(1);
    app.set_version_flag("--version", KRA_VERSION);

    auto add_common = [&](CLI::App* sub, bool takes_input) {
        sub->add_flag("--json", o.json, "Emit a JSON report");
        sub->add_flag("--strict", o.strict, "Exit with code 4 on a negative result");
        if (takes_input) {
            sub->add_option("--builtin", o.builtin, "Builtin diagram: sm, chain, ym:N");
            sub->add_option("--size", o.size, "Matrix size for the ym builtin");
            sub->add_option("--file", o.file, "Path to a .kra file");
            sub->add_option("path", o.path, "Path to a .kra file");
        }
    };

    struct Command {
        const char* name;
        const char* help;
    };
    const Command diagram_commands[] = {
        {"validate", "Check the diagram axioms"},
        {"gauge-algebra", "Gauge Lie algebra and unimodularity"},
        {"fields", "Independent scalar field components"},
        {"action-terms", "Gauge-invariant terms generated by the spectral action"},
        {"counterterms", "Gauge-invariant counterterms required at order 4"},
        {"coverage", "Match required counterterms against generated terms"},
        {"check-rconnect", "Decide R-connectedness"},
        {"verdict", "Renormalizability verdict"},
        {"fmt", "Print the canonical .kra serialization"},
    };
    std::vector<std::pair<std::string, CLI::App*>> subs;
    for (const auto& c : diagram_commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        add_common(sub, true);
        subs.emplace_back(c.name, sub);
        if (std::string(c.name) == "check-rconnect") {
            sub->add_option("--dim", o.dim, "Dimension m (default 4)");
            sub->add_flag("--strict-bounds", o.strict_bounds, "Use lengths < m instead of <= m");
        }
        if (std::string(c.name) == "verdict") {
            sub->add_option("-n,--order", o.n, "Expansion order n (even, >= 4)");
            sub->add_flag("--strict-bounds", o.strict_bounds, "Use lengths < m instead of <= m");
        }
    }
    CLI::App* power = app.add_subcommand("powercount", "Power counting and heat-kernel coefficients");
    add_common(power, false);
    power->add_option("-n,--order", o.n, "Expansion order n (even, >= 4)");
    power->add_option("--loops", o.loops, "Loop order L for the external-leg bound");
    power->add_option("--ext", o.ext, "Total number of external lines");
    power->add_option("--ext-A", o.ext_A, "External gauge lines");
    power->add_option("--ext-chi", o.ext_chi, "External scalar lines");
    power->add_option("--ext-ghost", o.ext_ghost, "External ghost lines");
    power->add_option("--profile", o.profile, "Feynman-graph profile (JSON)");
    power->add_option("--heat-kernel", o.heat_max, "Largest k for heat-kernel coefficients");
    CLI::App* list = app.add_subcommand("builtins", "List builtin diagrams");
    add_common(list, false);

    std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rev.begin(), rev.end());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : Usage;
    }

    std::string command;
    for (const auto& [name, sub] : subs) {
        if (sub->parsed()) {
            command = name;
        }
    }
    if (power->parsed()) {
        command = "powercount";
    }
    if (list->parsed()) {
        command = "builtins";
    }
    Emitter em(o, command, out, err);
    try {
        if (command == "builtins") {
            return run_builtins(em);
        }
        if (command == "powercount") {
            return run_powercount(o, em);
        }
        return run_diagram_command(command, o, em);
    } catch (const UsageError& e) {
        err << "kra: " << e.what() << '\n';
        return Usage;
    } catch (const std::invalid_argument& e) {
        err << "kra: " << e.what() << '\n';
        return Usage;
    }
}

} // namespace kra::cli
