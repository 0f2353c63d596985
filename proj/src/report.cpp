#include "kra/report.hpp"

#include <sstream>

namespace kra::report {

namespace {

Json labels_json(const FiniteAlgebra& a, const std::vector<RepLabel>& labels) {
    Json out = Json::array();
    for (const auto& l : labels) {
        out.push_back(rep_name(a, l));
    }
    return out;
}

std::string walk_text(const FiniteAlgebra& a, const std::vector<RepLabel>& labels) {
    std::string out;
    for (const auto& l : labels) {
        out += rep_name(a, l) + " ";
    }
    return out.empty() ? out : out + rep_name(a, labels.front());
}

Json optional_witness(const KrajewskiDiagram& d, const std::optional<DiagramCycle>& c) {
    return c ? witness_json(d, *c) : Json(nullptr);
}

std::string pair_text(const FiniteAlgebra& a, const PairCheck& p) {
    return "{" + format_cycle(a, p.first) + ", " + format_cycle(a, p.second) + "}";
}

} // namespace

Json cycle_json(const FiniteAlgebra& a, const LabelCycle& c) {
    Json j;
    j["vertices"] = labels_json(a, c.vertices);
    j["text"] = format_cycle(a, c);
    return j;
}

Json witness_json(const KrajewskiDiagram& d, const DiagramCycle& c) {
    Json j;
    Json ids = Json::array();
    Json labels = Json::array();
    for (const auto v : c.vertices) {
        ids.push_back(d.vertices[v].id);
        labels.push_back(vertex_label(d, v));
    }
    Json edges = Json::array();
    for (const auto e : c.edges) {
        edges.push_back(d.edges[e].id);
    }
    j["vertices"] = ids;
    j["labels"] = labels;
    j["edges"] = edges;
    j["text"] = format_diagram_cycle(d, c);
    return j;
}

Json term_json(const FiniteAlgebra& a, const InvariantTerm& t) {
    Json j;
    j["kind"] = to_string(t.kind);
    j["origin"] = to_string(t.origin);
    j["text"] = render_term(a, t);
    j["degree"] = t.degree();
    j["gauge_factor"] = t.kind == TermKind::YangMillsF2 ? Json(t.gauge_factor) : Json(nullptr);
    Json blocks = Json::array();
    for (const auto& b : t.blocks) {
        Json block = Json::array();
        for (const auto& s : b) {
            block.push_back({{"from", rep_name(a, s.from)},
                             {"to", rep_name(a, s.to)},
                             {"p", s.p},
                             {"adjoint", s.adjoint()}});
        }
        blocks.push_back(block);
    }
    j["blocks"] = blocks;
    Json coeffs = Json::array();
    for (const auto& m : t.coefficients) {
        coeffs.push_back(render_monomial(m));
    }
    j["coefficients"] = coeffs;
    j["sources"] = t.sources;
    j["exemption"] = to_string(t.exemption);
    j["collapsed_walk"] = labels_json(a, t.collapsed_walk);
    return j;
}

Json validation_json(const KrajewskiDiagram& d, const ValidationReport& v) {
    Json j;
    j["ok"] = v.ok();
    Json checks = Json::array();
    for (const auto& c : v.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"messages", c.messages}});
    }
    j["checks"] = checks;
    if (!v.ok()) {
        return j;
    }
    j["hilbert_dimension"] = hilbert_dimension(d);
    const KOSigns s = d.signs();
    j["ko_signs"] = {{"n", s.n},
                     {"eps", s.eps},
                     {"eps_prime", s.eps_prime},
                     {"eps_double_prime", s.eps_double_prime ? Json(*s.eps_double_prime) : Json(nullptr)}};
    const auto dec = dirac_decomposition(d);
    auto ids = [&](const std::vector<std::size_t>& ks) {
        Json out = Json::array();
        for (const auto k : ks) {
            out.push_back(d.edges[k].id);
        }
        return out;
    };
    j["dirac"] = {{"D0", ids(dec.d0)}, {"Delta", ids(dec.delta)}, {"JDeltaJ", ids(dec.jdeltaj)}};
    return j;
}

Json gauge_json(const KrajewskiDiagram& d) {
    const auto dec = gauge_lie_algebra(d.algebra);
    Json j;
    j["description"] = describe(dec);
    Json factors = Json::array();
    for (const auto& f : dec.simple_factors) {
        factors.push_back({{"kind", to_string(f.kind)},
                           {"rank", f.rank},
                           {"factor", d.algebra.factors[f.factor_index].name},
                           {"dimension", lie_dimension(f)}});
    }
    j["simple_factors"] = factors;
    j["abelian_rank"] = dec.abelian_rank;
    j["dimension"] = algebra_dimension(dec);
    const auto mult = fundamental_multiplicities(d);
    const auto uni = unimodularity_relation(d.algebra, mult);
    Json constraint = Json::array();
    for (const auto& [k, c] : uni.constraint) {
        constraint.push_back({{"factor", d.algebra.factors[k].name}, {"coefficient", c}});
    }
    j["unimodularity"] = {{"constraint", constraint},
                          {"effective_abelian_rank", uni.effective_abelian_rank},
                          {"degenerate", uni.degenerate}};
    const auto irrep = irrep_correspondence_check(d.algebra);
    j["irrep_correspondence"] = {{"holds", irrep.holds}, {"diagnostic", irrep.diagnostic}};
    return j;
}

Json fields_json(const KrajewskiDiagram& d, const FieldSummary& f) {
    Json j;
    j["count"] = f.count;
    Json edges = Json::array();
    for (const auto& e : project(d).non_loop_edges()) {
        const auto dim = basis_dimension(e, d);
        edges.push_back({{"edge", {rep_name(d.algebra, e.first), rep_name(d.algebra, e.second)}},
                         {"dim_S", dim},
                         {"components", static_cast<long>(rep_dimension(d.algebra, e.first)) *
                                            rep_dimension(d.algebra, e.second) * static_cast<long>(dim)}});
    }
    j["edges"] = edges;
    Json comps = Json::array();
    for (const auto& c : f.components) {
        comps.push_back({{"edge", {rep_name(d.algebra, c.source), rep_name(d.algebra, c.target)}}, {"p", c.p}});
    }
    j["components"] = comps;
    return j;
}

Json terms_json(const FiniteAlgebra& a, const std::vector<InvariantTerm>& terms) {
    Json j;
    j["count"] = terms.size();
    Json arr = Json::array();
    for (const auto& t : terms) {
        arr.push_back(term_json(a, t));
    }
    j["terms"] = arr;
    return j;
}

Json coverage_json(const FiniteAlgebra& a, const CoverageReport& c) {
    Json j;
    j["complete"] = c.complete();
    j["missing_count"] = c.missing().size();
    Json entries = Json::array();
    for (const auto& e : c.entries) {
        entries.push_back({{"status", to_string(e.status)},
                           {"required", term_json(a, c.required[e.required])},
                           {"generator", e.generator ? term_json(a, c.generated[*e.generator]) : Json(nullptr)}});
    }
    j["entries"] = entries;
    return j;
}

Json rconnect_json(const KrajewskiDiagram& d, const RConnectReport& r) {
    Json j;
    j["verdict"] = r.verdict;
    j["dimension"] = r.dimension;
    j["strict_bounds"] = r.strict_bounds;
    j["bound"] = r.bound;
    Json c1 = Json::array();
    for (const auto& c : r.cond1) {
        c1.push_back({{"cycle", cycle_json(d.algebra, c.cycle)},
                      {"lifted", c.witness.has_value()},
                      {"witness", optional_witness(d, c.witness)}});
    }
    j["cond1"] = c1;
    Json c2 = Json::array();
    Json counter = Json::array();
    for (const auto& p : r.cond2) {
        Json entry = {{"first", cycle_json(d.algebra, p.first)},
                      {"second", cycle_json(d.algebra, p.second)},
                      {"status", to_string(p.status)},
                      {"exemption", to_string(p.exemption)},
                      {"witness", p.witness ? witness_json(d, p.witness->witness) : Json(nullptr)},
                      {"second_reversed", p.witness ? p.witness->second_reversed : false}};
        if (p.status == PairStatus::Failed) {
            counter.push_back({{"first", cycle_json(d.algebra, p.first)}, {"second", cycle_json(d.algebra, p.second)}});
        }
        c2.push_back(std::move(entry));
    }
    j["cond2"] = c2;
    Json c3 = Json::array();
    for (const auto& tuple : r.cond3) {
        Json t = Json::array();
        for (const auto& c : tuple) {
            t.push_back(cycle_json(d.algebra, c));
        }
        c3.push_back(t);
    }
    j["cond3"] = c3;
    j["counterexamples"] = counter;
    return j;
}

Json verdict_json(const KrajewskiDiagram& d, const Verdict& v) {
    Json j;
    j["verdict"] = to_string(v.kind);
    j["n"] = v.n;
    j["reason"] = v.reason;
    j["irrep_correspondence"] = {{"holds", v.irrep_ok}, {"diagnostic", v.irrep_diagnostic}};
    j["r_connected"] = v.rconnect.verdict;
    Json counter = Json::array();
    for (const auto* p : v.rconnect.counterexamples()) {
        counter.push_back({{"first", cycle_json(d.algebra, p->first)}, {"second", cycle_json(d.algebra, p->second)}});
    }
    j["counterexamples"] = counter;
    j["notes"] = v.notes;
    return j;
}

Json profile_json(const GraphProfile& p, const ProfileReport& r, int n) {
    Json j;
    j["consistent"] = r.ok();
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds()}});
    }
    j["checks"] = checks;
    j["problems"] = r.problems;
    j["omega_bound"] = nullptr;
    j["omega_external"] = nullptr;
    try {
        if (r.ok()) {
            j["omega_bound"] = omega_bound(p, n);
        }
    } catch (const std::invalid_argument&) {
    }
    if (p.L >= 0) {
        j["omega_external"] = omega_external(p.L, p.E_A, p.E_chi, p.E_ghost, n);
    }
    return j;
}

Json parse_error_json(const ParseError& e) {
    return {{"kind", "parse"},
            {"line", e.span.line},
            {"column", e.span.column},
            {"length", e.span.length},
            {"message", e.message},
            {"expected", e.expected}};
}

GraphProfile profile_from_json(const Json& j) {
    GraphProfile p;
    auto get = [&](const char* key) { return j.contains(key) ? j.at(key).get<int>() : 0; };
    p.L = get("L");
    p.I_A = get("I_A");
    p.I_chi = get("I_chi");
    p.I_ghost = get("I_ghost");
    p.V_ghostA = get("V_ghostA");
    p.V_ghostChi = get("V_ghostChi");
    p.E_A = get("E_A");
    p.E_chi = get("E_chi");
    p.E_ghost = get("E_ghost");
    if (j.contains("V")) {
        for (const auto& v : j.at("V")) {
            p.V[{v.at("i").get<int>(), v.at("j").get<int>()}] += v.at("count").get<int>();
        }
    }
    return p;
}

std::string validation_text(const KrajewskiDiagram& d, const ValidationReport& v) {
    std::ostringstream out;
    for (const auto& c : v.checks) {
        out << (c.passed ? "  ok    " : "  FAIL  ") << c.name << '\n';
        for (const auto& m : c.messages) {
            out << "          " << m << '\n';
        }
    }
    out << (v.ok() ? "valid" : "invalid") << '\n';
    if (v.ok()) {
        out << "Hilbert space dimension: " << hilbert_dimension(d) << '\n';
        const auto dec = dirac_decomposition(d);
        out << "Dirac components: D0 " << dec.d0.size() << ", Delta " << dec.delta.size() << ", JDeltaJ "
            << dec.jdeltaj.size() << '\n';
    }
    return out.str();
}

std::string gauge_text(const KrajewskiDiagram& d) {
    const auto dec = gauge_lie_algebra(d.algebra);
    std::ostringstream out;
    out << "gauge Lie algebra: " << describe(dec) << '\n';
    out << "dimension: " << algebra_dimension(dec) << '\n';
    const auto uni = unimodularity_relation(d.algebra, fundamental_multiplicities(d));
    out << "unimodularity:";
    for (std::size_t i = 0; i < uni.constraint.size(); ++i) {
        const auto& [k, c] = uni.constraint[i];
        if (i == 0) {
            out << ' ' << (c < 0 ? "-" : "") << (c < 0 ? -c : c);
        } else {
            out << ' ' << (c < 0 ? "- " : "+ ") << (c < 0 ? -c : c);
        }
        out << "*z[" << d.algebra.factors[k].name << "]";
    }
    out << " = 0, effective u(1) rank " << uni.effective_abelian_rank << '\n';
    const auto irrep = irrep_correspondence_check(d.algebra);
    out << "irrep correspondence: " << (irrep.holds ? "holds" : "fails: " + irrep.diagnostic) << '\n';
    return out.str();
}

std::string fields_text(const KrajewskiDiagram& d, const FieldSummary& f) {
    std::ostringstream out;
    for (const auto& e : project(d).non_loop_edges()) {
        out << "  {" << rep_name(d.algebra, e.first) << "," << rep_name(d.algebra, e.second)
            << "}: dim S = " << basis_dimension(e, d) << '\n';
    }
    out << "independent field components: " << f.count << '\n';
    return out.str();
}

std::string terms_text(const FiniteAlgebra& a, const std::vector<InvariantTerm>& terms) {
    std::ostringstream out;
    for (const auto& t : terms) {
        out << "  " << to_string(t.kind) << "  " << render_term(a, t);
        if (!t.coefficients.empty()) {
            out << "  ~ " << render_monomial(t.coefficients.front());
            if (t.coefficients.size() > 1) {
                out << " + " << t.coefficients.size() - 1 << " more";
            }
        }
        if (t.exempt()) {
            out << "  [exempt: " << to_string(t.exemption) << ", collapses to " << walk_text(a, t.collapsed_walk)
                << "]";
        }
        out << '\n';
    }
    out << terms.size() << " terms\n";
    return out.str();
}

std::string coverage_text(const FiniteAlgebra& a, const CoverageReport& c) {
    std::ostringstream out;
    for (const auto& e : c.entries) {
        const auto& r = c.required[e.required];
        out << "  " << to_string(e.status) << "  " << to_string(r.kind) << "  " << render_term(a, r);
        if (!r.sources.empty() && r.kind != TermKind::YangMillsF2) {
            out << "  from " << r.sources.front();
        }
        out << '\n';
    }
    out << (c.complete() ? "complete" : "incomplete: " + std::to_string(c.missing().size()) + " missing") << '\n';
    return out.str();
}

std::string rconnect_text(const KrajewskiDiagram& d, const RConnectReport& r) {
    std::ostringstream out;
    out << "condition 1 (cycles of length <= " << r.bound << "):\n";
    for (const auto& c : r.cond1) {
        out << "  " << format_cycle(d.algebra, c.cycle) << "  "
            << (c.witness ? "lifted by " + format_diagram_cycle(d, *c.witness) : std::string("NOT LIFTED")) << '\n';
    }
    out << "condition 2 (pairs of total length <= " << r.bound << "):\n";
    for (const auto& p : r.cond2) {
        out << "  " << pair_text(d.algebra, p) << "  ";
        switch (p.status) {
        case PairStatus::Exempt: out << "exempt (" << to_string(p.exemption) << ")"; break;
        case PairStatus::Lifted: out << "lifted by " << format_diagram_cycle(d, p.witness->witness); break;
        case PairStatus::Failed: out << "NOT LIFTED"; break;
        }
        out << '\n';
    }
    out << "condition 3: " << (r.cond3.empty() ? "satisfied" : std::to_string(r.cond3.size()) + " offending tuples")
        << '\n';
    out << (r.verdict ? "R-connected" : "not R-connected") << " in dimension " << r.dimension << '\n';
    return out.str();
}

std::string verdict_text(const KrajewskiDiagram& d, const Verdict& v) {
    std::ostringstream out;
    out << to_string(v.kind);
    if (!v.reason.empty()) {
        out << ": " << v.reason;
    }
    out << " (n = " << v.n << ")\n";
    for (const auto* p : v.rconnect.counterexamples()) {
        out << "  counterexample pair " << pair_text(d.algebra, *p) << '\n';
    }
    for (const auto& note : v.notes) {
        out << "  note: " << note << '\n';
    }
    return out.str();
}

} // namespace kra::report
