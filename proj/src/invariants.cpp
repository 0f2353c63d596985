#include "kra/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace kra {

std::string to_string(TermKind k) {
    switch (k) {
    case TermKind::YangMillsF2: return "YangMillsF2";
    case TermKind::ScalarMass: return "ScalarMass";
    case TermKind::ScalarKinetic: return "ScalarKinetic";
    case TermKind::Cubic: return "Cubic";
    case TermKind::Quartic: return "Quartic";
    case TermKind::HigherOrder: return "HigherOrder";
    }
    return "?";
}

std::string to_string(TermOrigin o) {
    switch (o) {
    case TermOrigin::Gauge: return "gauge";
    case TermOrigin::GammaCycle: return "diagram-cycle";
    case TermOrigin::Walk: return "diagram-walk";
    case TermOrigin::Required: return "required";
    }
    return "?";
}

std::string to_string(CoverageStatus s) {
    switch (s) {
    case CoverageStatus::Covered: return "covered";
    case CoverageStatus::Missing: return "missing";
    case CoverageStatus::Exempt: return "exempt";
    }
    return "?";
}

namespace {

bool is_field_edge(const KrajewskiDiagram& d, const EdgePair& e) {
    return d.vertices[e.source].col != d.vertices[e.target].col;
}

LabelEdge projected(const KrajewskiDiagram& d, const EdgePair& e) {
    return std::minmax(d.vertices[e.source].col, d.vertices[e.target].col);
}

// The edge operator as a map from the smaller projected label to the larger.
CMatrix oriented_matrix(const KrajewskiDiagram& d, const EdgePair& e) {
    const CMatrix& m = std::get<NumericOperator>(e.op).matrix;
    return d.vertices[e.source].col < d.vertices[e.target].col ? m : m.adjoint();
}

struct EdgeSpace {
    bool numeric = false;
    std::vector<std::string> labels; // symbolic mode, sorted
    std::vector<CMatrix> basis;      // numeric mode
    [[nodiscard]] std::size_t dimension() const { return numeric ? basis.size() : labels.size(); }
};

EdgeSpace edge_space(const KrajewskiDiagram& d, const LabelEdge& target) {
    if (target.first == target.second) {
        throw std::invalid_argument("dim S is defined on non-loop edges only");
    }
    EdgeSpace space;
    std::set<std::string> labels;
    std::vector<CMatrix> matrices;
    for (const auto& e : d.edges) {
        if (!is_field_edge(d, e) || projected(d, e) != target) {
            continue;
        }
        if (const auto* s = std::get_if<SymbolicOperator>(&e.op)) {
            labels.insert(s->label);
        } else {
            matrices.push_back(oriented_matrix(d, e));
        }
    }
    if (!labels.empty() && !matrices.empty()) {
        throw std::invalid_argument("symbolic and numeric operators mixed over one projected edge");
    }
    space.numeric = !matrices.empty();
    space.labels.assign(labels.begin(), labels.end());
    for (const auto k : span_basis(matrices)) {
        space.basis.push_back(matrices[k]);
    }
    return space;
}

std::vector<std::pair<std::size_t, ComplexRational>> coordinates_in(const KrajewskiDiagram& d, const EdgePair& e,
                                                                    const EdgeSpace& space) {
    std::vector<std::pair<std::size_t, ComplexRational>> out;
    if (!space.numeric) {
        const auto& label = std::get<SymbolicOperator>(e.op).label;
        const auto it = std::find(space.labels.begin(), space.labels.end(), label);
        out.emplace_back(static_cast<std::size_t>(it - space.labels.begin()) + 1, ComplexRational{1});
        return out;
    }
    const auto x = span_coordinates(space.basis, oriented_matrix(d, e));
    if (!x) {
        throw std::logic_error("edge operator outside the span of its own projected edge");
    }
    for (std::size_t p = 0; p < x->size(); ++p) {
        if (!(*x)[p].is_zero()) {
            out.emplace_back(p + 1, (*x)[p]);
        }
    }
    return out;
}

std::string field_name(const FiniteAlgebra& a, const TraceStep& s) {
    const RepLabel lo = std::min(s.from, s.to);
    const RepLabel hi = std::max(s.from, s.to);
    std::string out = "phi(" + rep_name(a, lo) + "," + rep_name(a, hi) + ")";
    if (s.p != 0) {
        out += "^" + std::to_string(s.p);
    }
    return s.adjoint() ? out + "*" : out;
}

std::vector<InvariantTerm> gauge_terms(const KrajewskiDiagram& d) {
    std::vector<InvariantTerm> out;
    const auto decomp = gauge_lie_algebra(d.algebra);
    for (const auto& f : decomp.simple_factors) {
        InvariantTerm t;
        t.kind = TermKind::YangMillsF2;
        t.origin = TermOrigin::Gauge;
        t.gauge_factor = lie_factor_name(f) + " [" + d.algebra.factors[f.factor_index].name + "]";
        out.push_back(std::move(t));
    }
    for (int k = 1; k <= decomp.abelian_rank; ++k) {
        InvariantTerm t;
        t.kind = TermKind::YangMillsF2;
        t.origin = TermOrigin::Gauge;
        t.gauge_factor = "u(1) #" + std::to_string(k);
        out.push_back(std::move(t));
    }
    return out;
}

TermKind kind_for_degree(int degree) {
    switch (degree) {
    case 3: return TermKind::Cubic;
    case 4: return TermKind::Quartic;
    default: return degree > 4 ? TermKind::HigherOrder : TermKind::ScalarMass;
    }
}

// Accumulates terms keyed by (kind, origin, canonical blocks), merging coefficients.
class TermTable {
public:
    void add(TermKind kind, TermOrigin origin, std::vector<TraceBlock> blocks, Monomial coefficient,
             const std::string& source) {
        for (auto& b : blocks) {
            b = canonical_block(b);
        }
        std::sort(blocks.begin(), blocks.end());
        std::sort(coefficient.begin(), coefficient.end());
        const auto key = std::make_tuple(static_cast<int>(kind), static_cast<int>(origin), blocks);
        auto it = index_.find(key);
        if (it == index_.end()) {
            InvariantTerm t;
            t.kind = kind;
            t.origin = origin;
            t.blocks = std::move(blocks);
            it = index_.emplace(key, terms_.size()).first;
            terms_.push_back(std::move(t));
        }
        auto& t = terms_[it->second];
        if (std::find(t.coefficients.begin(), t.coefficients.end(), coefficient) == t.coefficients.end()) {
            t.coefficients.push_back(std::move(coefficient));
        }
        if (std::find(t.sources.begin(), t.sources.end(), source) == t.sources.end()) {
            t.sources.push_back(source);
        }
    }

    std::vector<InvariantTerm> take() {
        for (auto& t : terms_) {
            std::sort(t.coefficients.begin(), t.coefficients.end());
            std::sort(t.sources.begin(), t.sources.end());
        }
        std::sort(terms_.begin(), terms_.end(), [](const InvariantTerm& a, const InvariantTerm& b) {
            return std::tie(a.kind, a.origin, a.blocks) < std::tie(b.kind, b.origin, b.blocks);
        });
        return std::move(terms_);
    }

private:
    std::map<std::tuple<int, int, std::vector<TraceBlock>>, std::size_t> index_;
    std::vector<InvariantTerm> terms_;
};

struct StepOption {
    TraceStep step;
    CoefficientFactor factor;
};

struct CycleStep {
    bool horizontal = false;
    bool vertical = false;
    std::vector<StepOption> options; // empty for diagonal edges
    CoefficientFactor constant;      // diagonal edges
};

CycleStep describe_step(const KrajewskiDiagram& d, std::size_t u, std::size_t w, std::size_t edge) {
    const EdgePair& e = d.edges[edge];
    const bool backward = e.source != u;
    CycleStep out;
    switch (classify_edge(d, e)) {
    case EdgeClass::Delta: {
        out.horizontal = true;
        for (const auto& [p, value] : edge_coordinates(d, edge)) {
            out.options.push_back({{d.vertices[u].col, d.vertices[w].col, p}, {e.id, p, backward}});
        }
        break;
    }
    case EdgeClass::JDeltaJ: {
        out.vertical = true;
        const auto m = mirror_edge(d, edge);
        if (!m) {
            throw std::logic_error("vertical edge '" + e.id + "' has no mirror");
        }
        for (const auto& [p, value] : edge_coordinates(d, *m)) {
            out.options.push_back({{d.vertices[u].row, d.vertices[w].row, p}, {d.edges[*m].id, p, !backward}});
        }
        break;
    }
    default:
        out.constant = {e.id, 0, backward};
        break;
    }
    return out;
}

void add_cycle_terms(const KrajewskiDiagram& d, const DiagramCycle& c, TermTable& table) {
    const std::size_t n = c.length();
    std::vector<CycleStep> steps;
    std::size_t h = 0;
    std::size_t v = 0;
    for (std::size_t k = 0; k < n; ++k) {
        steps.push_back(describe_step(d, c.vertices[k], c.vertices[(k + 1) % n], c.edges[k]));
        h += steps.back().horizontal ? 1 : 0;
        v += steps.back().vertical ? 1 : 0;
    }
    if (h == 0 || h > 4) {
        return;
    }
    const int degree = static_cast<int>(h + v);
    const std::string source = format_diagram_cycle(d, c);
    // Expand the product over basis indices of every field step.
    std::vector<std::size_t> choice(n, 0);
    for (;;) {
        TraceBlock hb;
        TraceBlock vb;
        Monomial coefficient;
        for (std::size_t k = 0; k < n; ++k) {
            const auto& s = steps[k];
            if (s.options.empty()) {
                coefficient.push_back(s.constant);
                continue;
            }
            const auto& opt = s.options[choice[k]];
            (s.horizontal ? hb : vb).push_back(opt.step);
            coefficient.push_back(opt.factor);
        }
        std::vector<TraceBlock> blocks{hb};
        if (!vb.empty()) {
            blocks.push_back(vb);
        }
        if (degree == 2) {
            table.add(TermKind::ScalarMass, TermOrigin::GammaCycle, blocks, coefficient, source);
            table.add(TermKind::ScalarKinetic, TermOrigin::GammaCycle, blocks, coefficient, source);
        } else {
            table.add(kind_for_degree(degree), TermOrigin::GammaCycle, blocks, coefficient, source);
        }
        std::size_t k = 0;
        while (k < n && (steps[k].options.empty() || ++choice[k] == steps[k].options.size())) {
            if (!steps[k].options.empty()) {
                choice[k] = 0;
            }
            ++k;
        }
        if (k == n) {
            break;
        }
    }
}

// Walks x -> w -> y -> w -> x over two distinct horizontal edge pairs at w.
void add_walk_terms(const KrajewskiDiagram& d, TermTable& table) {
    for (std::size_t w = 0; w < d.vertices.size(); ++w) {
        std::vector<std::size_t> incident;
        for (std::size_t k = 0; k < d.edges.size(); ++k) {
            const auto& e = d.edges[k];
            if (classify_edge(d, e) == EdgeClass::Delta && (e.source == w || e.target == w)) {
                incident.push_back(k);
            }
        }
        for (std::size_t a = 0; a < incident.size(); ++a) {
            for (std::size_t b = a + 1; b < incident.size(); ++b) {
                const auto& e1 = d.edges[incident[a]];
                const auto& e2 = d.edges[incident[b]];
                const std::size_t x = e1.source == w ? e1.target : e1.source;
                const std::size_t y = e2.source == w ? e2.target : e2.source;
                const auto o1 = edge_coordinates(d, incident[a]);
                const auto o2 = edge_coordinates(d, incident[b]);
                const RepLabel cw = d.vertices[w].col;
                const RepLabel cx = d.vertices[x].col;
                const RepLabel cy = d.vertices[y].col;
                const std::string source = d.vertices[x].id + " -> " + d.vertices[w].id + " -> " +
                                           d.vertices[y].id + " -> " + d.vertices[w].id + " -> " + d.vertices[x].id;
                for (const auto& [p1, z1] : o1) {
                    for (const auto& [q1, u1] : o1) {
                        for (const auto& [p2, z2] : o2) {
                            for (const auto& [q2, u2] : o2) {
                                TraceBlock block{{cx, cw, p1}, {cw, cy, p2}, {cy, cw, q2}, {cw, cx, q1}};
                                Monomial m{{e1.id, p1, e1.source != x},
                                           {e2.id, p2, e2.source != w},
                                           {e2.id, q2, e2.source == w},
                                           {e1.id, q1, e1.source == x}};
                                table.add(TermKind::Quartic, TermOrigin::Walk, {block}, m, source);
                            }
                        }
                    }
                }
            }
        }
    }
}

TraceBlock cycle_block(const std::vector<RepLabel>& labels) {
    TraceBlock b;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        b.push_back({labels[k], labels[(k + 1) % labels.size()], 0});
    }
    return b;
}

std::vector<RepLabel> rotate_to(const LabelCycle& c, const RepLabel& start) {
    std::vector<RepLabel> out = c.vertices;
    std::rotate(out.begin(), std::find(out.begin(), out.end(), start), out.end());
    return out;
}

std::vector<RepLabel> collapsed_walk(const LabelCycle& g1, const LabelCycle& g2, const FiniteAlgebra& a,
                                     Exemption reason) {
    std::optional<RepLabel> shared;
    for (const auto& x : g1.vertices) {
        if (std::find(g2.vertices.begin(), g2.vertices.end(), x) == g2.vertices.end()) {
            continue;
        }
        const bool trivial = is_trivial_complex(a, x);
        const bool quaternionic = a.factors[x.factor_index].kind == FieldKind::Quaternion;
        if ((reason == Exemption::SharedTrivialVertex && trivial) ||
            (reason == Exemption::PseudoRealDoublet && quaternionic)) {
            shared = x;
            break;
        }
    }
    std::vector<RepLabel> walk = rotate_to(g1, *shared);
    const auto tail = rotate_to(g2, *shared);
    walk.insert(walk.end(), tail.begin(), tail.end());
    return canonical_rotation_reversal(std::span<const RepLabel>(walk));
}

} // namespace

std::vector<std::pair<std::size_t, ComplexRational>> edge_coordinates(const KrajewskiDiagram& d, std::size_t edge) {
    const EdgePair& e = d.edges.at(edge);
    if (!is_field_edge(d, e)) {
        return {};
    }
    return coordinates_in(d, e, edge_space(d, projected(d, e)));
}

std::size_t basis_dimension(const LabelEdge& e, const KrajewskiDiagram& d) {
    return edge_space(d, std::minmax(e.first, e.second)).dimension();
}

FieldSummary enumerate_fields(const KrajewskiDiagram& d) {
    FieldSummary out;
    for (const auto& e : project(d).non_loop_edges()) {
        const std::size_t dim = basis_dimension(e, d);
        for (std::size_t p = 1; p <= dim; ++p) {
            out.components.push_back({e.first, e.second, p});
        }
        out.count += static_cast<long>(rep_dimension(d.algebra, e.first)) * rep_dimension(d.algebra, e.second) *
                     static_cast<long>(dim);
    }
    return out;
}

TraceBlock canonical_block(const TraceBlock& b) {
    TraceBlock rev;
    for (auto it = b.rbegin(); it != b.rend(); ++it) {
        rev.push_back({it->to, it->from, it->p});
    }
    TraceBlock best = b;
    const std::size_t n = b.size();
    for (const TraceBlock* src : {&b, static_cast<const TraceBlock*>(&rev)}) {
        for (std::size_t r = 0; r < n; ++r) {
            TraceBlock cand(n);
            for (std::size_t k = 0; k < n; ++k) {
                cand[k] = (*src)[(r + k) % n];
            }
            best = std::min(best, cand);
        }
    }
    return best;
}

std::vector<RepLabel> block_shape(const TraceBlock& b) {
    std::vector<RepLabel> labels;
    for (const auto& s : b) {
        labels.push_back(s.from);
    }
    return canonical_rotation_reversal(std::span<const RepLabel>(labels));
}

int InvariantTerm::degree() const {
    int deg = 0;
    for (const auto& b : blocks) {
        deg += static_cast<int>(b.size());
    }
    return deg;
}

std::string render_monomial(const Monomial& m) {
    std::string out;
    for (const auto& f : m) {
        out += out.empty() ? "" : " ";
        out += "M[" + f.edge + (f.p != 0 ? "^" + std::to_string(f.p) : std::string{}) + "]" + (f.conj ? "*" : "");
    }
    return out.empty() ? "1" : out;
}

std::string render_term(const FiniteAlgebra& a, const InvariantTerm& t) {
    if (t.kind == TermKind::YangMillsF2) {
        return "tr F_{mu nu} F^{mu nu}  (" + t.gauge_factor + ")";
    }
    std::string out;
    for (const auto& b : t.blocks) {
        out += out.empty() ? "tr[" : " tr[";
        for (std::size_t k = 0; k < b.size(); ++k) {
            const std::string f = field_name(a, b[k]);
            out += (k == 0 ? "" : " ") + (t.kind == TermKind::ScalarKinetic ? "D(" + f + ")" : f);
        }
        out += "]";
    }
    return out;
}

std::vector<InvariantTerm> action_terms(const KrajewskiDiagram& d) {
    std::vector<InvariantTerm> out = gauge_terms(d);
    TermTable table;
    for (const auto& c : enumerate_diagram_cycles(d, d.vertices.size())) {
        add_cycle_terms(d, c, table);
    }
    add_walk_terms(d, table);
    auto rest = table.take();
    out.insert(out.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
    return out;
}

std::vector<InvariantTerm> required_counterterms(const KrajewskiDiagram& d) {
    std::vector<InvariantTerm> out = gauge_terms(d);
    for (auto& t : out) {
        t.origin = TermOrigin::Required;
    }
    const ProjectedGraph g = project(d);
    auto required = [](TermKind kind, std::vector<TraceBlock> blocks, std::string source) {
        InvariantTerm t;
        t.kind = kind;
        t.origin = TermOrigin::Required;
        for (auto& b : blocks) {
            b = canonical_block(b);
        }
        std::sort(blocks.begin(), blocks.end());
        t.blocks = std::move(blocks);
        t.sources.push_back(std::move(source));
        return t;
    };

    for (const auto& e : g.non_loop_edges()) {
        const std::size_t dim = basis_dimension(e, d);
        const std::string source = format_cycle(d.algebra, LabelCycle{{e.first, e.second}});
        for (const TermKind kind : {TermKind::ScalarMass, TermKind::ScalarKinetic}) {
            for (std::size_t p1 = 1; p1 <= dim; ++p1) {
                for (std::size_t p2 = p1; p2 <= dim; ++p2) {
                    out.push_back(required(kind, {{{e.first, e.second, p1}, {e.second, e.first, p2}}}, source));
                }
            }
        }
    }
    const auto cycles = enumerate_cycles(g, 4);
    for (const auto& c : cycles) {
        if (c.length() == 3) {
            out.push_back(required(TermKind::Cubic, {cycle_block(c.vertices)}, format_cycle(d.algebra, c)));
        } else if (c.length() == 4) {
            out.push_back(required(TermKind::Quartic, {cycle_block(c.vertices)}, format_cycle(d.algebra, c)));
        }
    }
    for (std::size_t a = 0; a < cycles.size(); ++a) {
        for (std::size_t b = a; b < cycles.size(); ++b) {
            if (cycles[a].length() != 2 || cycles[b].length() != 2) {
                continue;
            }
            const std::string source =
                format_cycle(d.algebra, cycles[a]) + " x " + format_cycle(d.algebra, cycles[b]);
            const Exemption reason = exemption_reason(cycles[a], cycles[b], d.algebra);
            if (reason == Exemption::None) {
                out.push_back(required(TermKind::Quartic,
                                       {cycle_block(cycles[a].vertices), cycle_block(cycles[b].vertices)}, source));
            } else {
                auto walk = collapsed_walk(cycles[a], cycles[b], d.algebra, reason);
                auto t = required(TermKind::Quartic, {cycle_block(walk)}, source);
                t.exemption = reason;
                t.collapsed_walk = std::move(walk);
                out.push_back(std::move(t));
            }
        }
    }
    return out;
}

bool CoverageReport::complete() const {
    return std::none_of(entries.begin(), entries.end(),
                        [](const CoverageEntry& e) { return e.status == CoverageStatus::Missing; });
}

std::vector<const CoverageEntry*> CoverageReport::missing() const {
    std::vector<const CoverageEntry*> out;
    for (const auto& e : entries) {
        if (e.status == CoverageStatus::Missing) {
            out.push_back(&e);
        }
    }
    return out;
}

CoverageReport counterterm_coverage(const KrajewskiDiagram& d) {
    CoverageReport report;
    report.required = required_counterterms(d);
    report.generated = action_terms(d);

    auto shapes_of = [](const InvariantTerm& t) {
        std::vector<std::vector<RepLabel>> s;
        for (const auto& b : t.blocks) {
            s.push_back(block_shape(b));
        }
        std::sort(s.begin(), s.end());
        return s;
    };
    std::vector<std::vector<std::vector<RepLabel>>> generated_shapes;
    for (const auto& t : report.generated) {
        generated_shapes.push_back(shapes_of(t));
    }

    for (std::size_t r = 0; r < report.required.size(); ++r) {
        const auto& req = report.required[r];
        CoverageEntry entry{r, CoverageStatus::Missing, std::nullopt};
        auto search = [&](auto&& accept) -> std::optional<std::size_t> {
            // Prefer a generator of the same kind.
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t g = 0; g < report.generated.size(); ++g) {
                    if ((pass == 1 || report.generated[g].kind == req.kind) && accept(g)) {
                        return g;
                    }
                }
            }
            return std::nullopt;
        };
        if (req.kind == TermKind::YangMillsF2) {
            entry.generator = search([&](std::size_t g) {
                return report.generated[g].kind == TermKind::YangMillsF2 &&
                       report.generated[g].gauge_factor == req.gauge_factor;
            });
        } else if (req.exempt()) {
            entry.status = CoverageStatus::Exempt;
            const std::vector<std::vector<RepLabel>> walk{req.collapsed_walk};
            entry.generator = search([&](std::size_t g) { return generated_shapes[g] == walk; });
        } else if (req.blocks.size() == 2) {
            const auto want = shapes_of(req);
            entry.generator = search([&](std::size_t g) {
                return report.generated[g].origin == TermOrigin::GammaCycle && generated_shapes[g] == want;
            });
        } else {
            const auto want = block_shape(req.blocks.front());
            entry.generator = search([&](std::size_t g) {
                const auto& s = generated_shapes[g];
                return report.generated[g].origin == TermOrigin::GammaCycle &&
                       std::find(s.begin(), s.end(), want) != s.end();
            });
        }
        if (entry.status != CoverageStatus::Exempt) {
            entry.status = entry.generator ? CoverageStatus::Covered : CoverageStatus::Missing;
        }
        report.entries.push_back(entry);
    }
    return report;
}

} // namespace kra
