#include "kra/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace kra {

KOSigns ko_signs(int n) {
    if (n < 0 || n > 7) {
        throw std::out_of_range("KO-dimension must be in 0..7, got " + std::to_string(n));
    }
    static constexpr int eps[8] = {1, 1, -1, -1, -1, -1, 1, 1};
    static constexpr int eps_prime[8] = {1, -1, 1, 1, 1, -1, 1, 1};
    static constexpr int eps_double_prime[8] = {1, 0, -1, 0, 1, 0, -1, 0};
    KOSigns s;
    s.n = n;
    s.eps = eps[n];
    s.eps_prime = eps_prime[n];
    if (n % 2 == 0) {
        s.eps_double_prime = eps_double_prime[n];
    }
    return s;
}

std::optional<std::size_t> KrajewskiDiagram::vertex_index(const std::string& id) const {
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        if (vertices[k].id == id) {
            return k;
        }
    }
    return std::nullopt;
}

std::size_t KrajewskiDiagram::j(std::size_t v) const {
    if (v >= jmap.size() || !jmap[v]) {
        throw std::logic_error("j-involution unresolved at vertex " +
                               (v < vertices.size() ? vertices[v].id : std::to_string(v)));
    }
    return *jmap[v];
}

std::vector<std::string> resolve_jmap(KrajewskiDiagram& d) {
    d.jmap.resize(d.vertices.size());
    std::vector<std::string> unresolved;
    // Candidates are computed against the explicit assignments only, so the
    // result does not depend on vertex order.
    const auto explicit_map = d.jmap;
    auto taken = [&](std::size_t w) {
        for (const auto& m : explicit_map) {
            if (m && *m == w) {
                return true;
            }
        }
        return false;
    };
    for (std::size_t v = 0; v < d.vertices.size(); ++v) {
        if (explicit_map[v]) {
            continue;
        }
        std::vector<std::size_t> candidates;
        for (std::size_t w = 0; w < d.vertices.size(); ++w) {
            if (explicit_map[w] || taken(w)) {
                continue;
            }
            if (d.vertices[w].col == d.vertices[v].row && d.vertices[w].row == d.vertices[v].col) {
                candidates.push_back(w);
            }
        }
        if (candidates.size() == 1) {
            d.jmap[v] = candidates.front();
        } else {
            unresolved.push_back(d.vertices[v].id);
        }
    }
    return unresolved;
}

std::string vertex_label(const KrajewskiDiagram& d, std::size_t v) {
    const auto& x = d.vertices.at(v);
    return "(" + rep_name(d.algebra, x.col) + "," + rep_name(d.algebra, x.row) + "°)";
}

std::string to_string(EdgeClass c) {
    switch (c) {
    case EdgeClass::D0: return "D0";
    case EdgeClass::Delta: return "Delta";
    case EdgeClass::JDeltaJ: return "JDeltaJ";
    case EdgeClass::Invalid: return "invalid";
    }
    return "?";
}

EdgeClass classify_edge(const KrajewskiDiagram& d, const EdgePair& e) {
    const auto& s = d.vertices.at(e.source);
    const auto& t = d.vertices.at(e.target);
    const bool same_col = s.col == t.col;
    const bool same_row = s.row == t.row;
    if (same_col && same_row) {
        return EdgeClass::D0;
    }
    if (same_row) {
        return EdgeClass::Delta;
    }
    if (same_col) {
        return EdgeClass::JDeltaJ;
    }
    return EdgeClass::Invalid;
}

DiracDecomposition dirac_decomposition(const KrajewskiDiagram& d) {
    DiracDecomposition out;
    for (std::size_t k = 0; k < d.edges.size(); ++k) {
        switch (classify_edge(d, d.edges[k])) {
        case EdgeClass::D0: out.d0.push_back(k); break;
        case EdgeClass::Delta: out.delta.push_back(k); break;
        case EdgeClass::JDeltaJ: out.jdeltaj.push_back(k); break;
        case EdgeClass::Invalid:
            throw std::invalid_argument("edge '" + d.edges[k].id + "' violates the first-order condition");
        }
    }
    return out;
}

int hilbert_dimension(const KrajewskiDiagram& d) {
    int sum = 0;
    for (const auto& v : d.vertices) {
        sum += rep_dimension(d.algebra, v.col) * rep_dimension(d.algebra, v.row);
    }
    return d.families * sum;
}

std::vector<long> fundamental_multiplicities(const KrajewskiDiagram& d) {
    std::vector<long> mult(d.algebra.factors.size(), 0);
    for (const auto& v : d.vertices) {
        const long copies = static_cast<long>(rep_dimension(d.algebra, v.row)) * d.families;
        mult.at(v.col.factor_index) += v.col.conjugate ? -copies : copies;
    }
    return mult;
}

namespace {

bool operators_mirror(const KrajewskiDiagram& d, const EdgePair& e, const EdgePair& m) {
    const bool reversed = !(m.source == d.j(e.source) && m.target == d.j(e.target));
    if (std::holds_alternative<SymbolicOperator>(e.op) || std::holds_alternative<SymbolicOperator>(m.op)) {
        return e.op == m.op;
    }
    const CMatrix& a = std::get<NumericOperator>(e.op).matrix;
    const CMatrix& b = std::get<NumericOperator>(m.op).matrix;
    // D_{j(e)} = eps' J D_e J^{-1}: the reduced matrix is conj(A) up to sign,
    // or its adjoint when the mirror is stored with reversed orientation.
    const CMatrix expected = reversed ? a.transpose() : a.conj();
    return b == expected || b == expected.negated();
}

bool mirror_endpoints(const KrajewskiDiagram& d, const EdgePair& e, const EdgePair& m) {
    const std::size_t js = d.j(e.source);
    const std::size_t jt = d.j(e.target);
    return (m.source == js && m.target == jt) || (m.source == jt && m.target == js);
}

bool jmap_complete(const KrajewskiDiagram& d) {
    if (d.jmap.size() != d.vertices.size()) {
        return false;
    }
    return std::all_of(d.jmap.begin(), d.jmap.end(), [&](const auto& m) { return m && *m < d.vertices.size(); });
}

std::pair<std::size_t, std::size_t> expected_shape(const KrajewskiDiagram& d, const EdgePair& e) {
    const auto& s = d.vertices[e.source];
    const auto& t = d.vertices[e.target];
    switch (classify_edge(d, e)) {
    case EdgeClass::Delta:
        return {static_cast<std::size_t>(rep_dimension(d.algebra, t.col)),
                static_cast<std::size_t>(rep_dimension(d.algebra, s.col))};
    case EdgeClass::JDeltaJ:
        return {static_cast<std::size_t>(rep_dimension(d.algebra, t.row)),
                static_cast<std::size_t>(rep_dimension(d.algebra, s.row))};
    default:
        return {1, 1};
    }
}

} // namespace

std::optional<std::size_t> mirror_edge(const KrajewskiDiagram& d, std::size_t edge) {
    const auto& e = d.edges.at(edge);
    for (std::size_t k = 0; k < d.edges.size(); ++k) {
        if (mirror_endpoints(d, e, d.edges[k]) && operators_mirror(d, e, d.edges[k])) {
            return k;
        }
    }
    return std::nullopt;
}

bool ValidationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* ValidationReport::find(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

ValidationReport validate(const KrajewskiDiagram& d) {
    ValidationReport report;
    auto fail = [](CheckResult& c, std::string msg) {
        c.passed = false;
        c.messages.push_back(std::move(msg));
    };

    // Structure: ids, labels, endpoints. Every EdgePair carries both orientations.
    CheckResult structure{"edge_pairing", true, {}};
    try {
        d.algebra.check();
    } catch (const std::exception& ex) {
        fail(structure, ex.what());
    }
    if (d.kodim < 0 || d.kodim > 7) {
        fail(structure, "KO-dimension " + std::to_string(d.kodim) + " outside 0..7");
    }
    if (d.families < 1) {
        fail(structure, "families must be positive");
    }
    std::set<std::string> ids;
    for (const auto& v : d.vertices) {
        if (!ids.insert(v.id).second) {
            fail(structure, "duplicate vertex id '" + v.id + "'");
        }
        try {
            check_label(d.algebra, v.col);
            check_label(d.algebra, v.row);
        } catch (const std::exception& ex) {
            fail(structure, "vertex '" + v.id + "': " + ex.what());
        }
    }
    std::set<std::string> edge_ids;
    for (const auto& e : d.edges) {
        if (!edge_ids.insert(e.id).second) {
            fail(structure, "duplicate edge id '" + e.id + "'");
        }
        if (e.source >= d.vertices.size() || e.target >= d.vertices.size()) {
            fail(structure, "edge '" + e.id + "' has an endpoint outside the vertex list");
        }
        if (const auto* num = std::get_if<NumericOperator>(&e.op); num && num->matrix.is_zero()) {
            fail(structure, "edge '" + e.id + "' carries the zero operator");
        }
    }
    report.checks.push_back(structure);
    if (!structure.passed) {
        return report; // later checks index into the vertex list
    }

    if (d.kodim >= 2 && d.kodim <= 5) {
        report.warnings.push_back("KO-dimension " + std::to_string(d.kodim) +
                                  ": doubled-vertex real structure is not modelled; plain j-involution used");
    }

    CheckResult first_order{"first_order", true, {}};
    for (const auto& e : d.edges) {
        if (classify_edge(d, e) == EdgeClass::Invalid) {
            fail(first_order, "edge '" + e.id + "' " + vertex_label(d, e.source) + " -> " +
                                  vertex_label(d, e.target) + " changes both column and row");
        }
    }
    report.checks.push_back(first_order);

    CheckResult involution{"j_involution", true, {}};
    const bool have_j = jmap_complete(d);
    if (!have_j) {
        for (std::size_t v = 0; v < d.vertices.size(); ++v) {
            if (v >= d.jmap.size() || !d.jmap[v]) {
                fail(involution, "j(" + d.vertices[v].id + ") is not determined; give an explicit jmap");
            }
        }
    } else {
        for (std::size_t v = 0; v < d.vertices.size(); ++v) {
            const std::size_t w = d.j(v);
            if (d.j(w) != v) {
                fail(involution, "j is not involutive at '" + d.vertices[v].id + "'");
            }
            if (d.vertices[w].col != d.vertices[v].row || d.vertices[w].row != d.vertices[v].col) {
                fail(involution, "j(" + d.vertices[v].id + ") = " + d.vertices[w].id +
                                     " does not swap the representations");
            }
        }
    }
    report.checks.push_back(involution);

    CheckResult symmetry{"j_symmetry", true, {}};
    if (have_j) {
        std::map<std::pair<std::size_t, std::size_t>, int> count;
        auto key = [](std::size_t a, std::size_t b) { return std::pair<std::size_t, std::size_t>(std::minmax(a, b)); };
        for (const auto& e : d.edges) {
            ++count[key(e.source, e.target)];
        }
        for (const auto& [pair, n] : count) {
            const auto mirrored = key(d.j(pair.first), d.j(pair.second));
            const auto it = count.find(mirrored);
            const int m = it == count.end() ? 0 : it->second;
            if (m != n) {
                fail(symmetry, "edges between " + d.vertices[pair.first].id + " and " + d.vertices[pair.second].id +
                                   " have no matching mirror between " + d.vertices[mirrored.first].id + " and " +
                                   d.vertices[mirrored.second].id);
            }
        }
        for (std::size_t k = 0; k < d.edges.size(); ++k) {
            bool endpoints_ok = false;
            for (const auto& m : d.edges) {
                endpoints_ok = endpoints_ok || mirror_endpoints(d, d.edges[k], m);
            }
            if (endpoints_ok && !mirror_edge(d, k)) {
                fail(symmetry, "edge '" + d.edges[k].id + "' has no mirror with a compatible operator");
            }
        }
    } else {
        fail(symmetry, "skipped: j-involution unresolved");
    }
    report.checks.push_back(symmetry);

    CheckResult grading{"grading", true, {}};
    const KOSigns s = d.signs();
    if (s.even()) {
        for (std::size_t v = 0; v < d.vertices.size(); ++v) {
            if (!d.vertices[v].sign) {
                fail(grading, "vertex '" + d.vertices[v].id + "' has no sign (even KO-dimension)");
            }
        }
        if (grading.passed) {
            for (const auto& e : d.edges) {
                if (*d.vertices[e.source].sign == *d.vertices[e.target].sign) {
                    fail(grading, "edge '" + e.id + "' joins vertices of equal sign (" + d.vertices[e.source].id +
                                      ", " + d.vertices[e.target].id + ")");
                }
            }
            if (have_j) {
                for (std::size_t v = 0; v < d.vertices.size(); ++v) {
                    const int expect = *s.eps_double_prime * *d.vertices[v].sign;
                    if (*d.vertices[d.j(v)].sign != expect) {
                        fail(grading, "vertex '" + d.vertices[d.j(v)].id + "' should have sign " +
                                          (expect > 0 ? "+" : "-") + " as j-image of '" + d.vertices[v].id + "'");
                    }
                }
            }
        }
    } else {
        for (const auto& v : d.vertices) {
            if (v.sign) {
                fail(grading, "vertex '" + v.id + "' has a sign but KO-dimension is odd");
            }
        }
    }
    report.checks.push_back(grading);

    CheckResult dims{"operator_dimensions", true, {}};
    for (const auto& e : d.edges) {
        const auto* num = std::get_if<NumericOperator>(&e.op);
        if (!num || classify_edge(d, e) == EdgeClass::Invalid) {
            continue;
        }
        const auto [rows, cols] = expected_shape(d, e);
        if (num->matrix.rows() != rows || num->matrix.cols() != cols) {
            fail(dims, "edge '" + e.id + "' matrix is " + std::to_string(num->matrix.rows()) + "x" +
                           std::to_string(num->matrix.cols()) + ", expected " + std::to_string(rows) + "x" +
                           std::to_string(cols));
        }
    }
    report.checks.push_back(dims);

    CheckResult modes{"operator_modes", true, {}};
    std::map<std::pair<RepLabel, RepLabel>, std::size_t> mode_of;
    for (const auto& e : d.edges) {
        if (classify_edge(d, e) != EdgeClass::Delta) {
            continue;
        }
        const auto key = std::minmax(d.vertices[e.source].col, d.vertices[e.target].col);
        const auto [it, inserted] = mode_of.emplace(key, e.op.index());
        if (!inserted && it->second != e.op.index()) {
            fail(modes, "edge '" + e.id + "' mixes symbolic and numeric operators over the same projected edge");
        }
    }
    report.checks.push_back(modes);
    return report;
}

bool structurally_equal(const KrajewskiDiagram& a, const KrajewskiDiagram& b) {
    if (!(a.algebra == b.algebra) || a.kodim != b.kodim || a.families != b.families ||
        a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) {
        return false;
    }
    auto jid = [](const KrajewskiDiagram& d, std::size_t v) -> std::string {
        return v < d.jmap.size() && d.jmap[v] ? d.vertices[*d.jmap[v]].id : std::string{};
    };
    for (std::size_t k = 0; k < a.vertices.size(); ++k) {
        const auto other = b.vertex_index(a.vertices[k].id);
        if (!other || !(b.vertices[*other] == a.vertices[k]) || jid(a, k) != jid(b, *other)) {
            return false;
        }
    }
    for (const auto& e : a.edges) {
        const auto it = std::find_if(b.edges.begin(), b.edges.end(), [&](const EdgePair& f) { return f.id == e.id; });
        if (it == b.edges.end()) {
            return false;
        }
        if (a.vertices[e.source].id != b.vertices[it->source].id ||
            a.vertices[e.target].id != b.vertices[it->target].id || !(e.op == it->op)) {
            return false;
        }
    }
    return true;
}

} // namespace kra
