#include "kra/builtins.hpp"

#include <stdexcept>

namespace kra {

namespace {

class Builder {
public:
    Builder(FiniteAlgebra algebra, int kodim, int families) {
        d_.algebra = std::move(algebra);
        d_.kodim = kodim;
        d_.families = families;
    }

    Builder& vertex(const std::string& id, RepLabel col, RepLabel row, std::optional<int> sign) {
        d_.vertices.push_back({id, col, row, sign});
        d_.jmap.emplace_back();
        return *this;
    }

    Builder& edge(const std::string& id, const std::string& a, const std::string& b, const std::string& label) {
        d_.edges.push_back({id, index(a), index(b), SymbolicOperator{label}});
        return *this;
    }

    Builder& pair(const std::string& a, const std::string& b) {
        d_.jmap[index(a)] = index(b);
        d_.jmap[index(b)] = index(a);
        return *this;
    }

    KrajewskiDiagram finish() {
        for (std::size_t v = 0; v < d_.vertices.size(); ++v) {
            if (!d_.jmap[v]) {
                throw std::logic_error("builtin leaves j unresolved at " + d_.vertices[v].id);
            }
        }
        return std::move(d_);
    }

private:
    std::size_t index(const std::string& id) const {
        const auto k = d_.vertex_index(id);
        if (!k) {
            throw std::logic_error("builtin refers to unknown vertex " + id);
        }
        return *k;
    }

    KrajewskiDiagram d_;
};

FiniteAlgebra sm_algebra() {
    return FiniteAlgebra{{{"1", 1, FieldKind::Complex}, {"2", 1, FieldKind::Quaternion}, {"3", 3, FieldKind::Complex}}};
}

constexpr RepLabel one{0, false};
constexpr RepLabel one_bar{0, true};
constexpr RepLabel two{1, false};
constexpr RepLabel three{2, false};

KrajewskiDiagram standard_model() {
    Builder b(sm_algebra(), 6, 3);
    // Particles in rows 1 and 3, antiparticles in columns 1 and 3.
    b.vertex("L", two, one, +1)
        .vertex("nuR", one, one, -1)
        .vertex("eR", one_bar, one, -1)
        .vertex("Q", two, three, +1)
        .vertex("uR", one, three, -1)
        .vertex("dR", one_bar, three, -1)
        .vertex("Lc", one, two, -1)
        .vertex("nuRc", one, one, +1)
        .vertex("eRc", one, one_bar, +1)
        .vertex("Qc", three, two, -1)
        .vertex("uRc", three, one, +1)
        .vertex("dRc", three, one_bar, +1);
    b.pair("L", "Lc").pair("nuR", "nuRc").pair("eR", "eRc").pair("Q", "Qc").pair("uR", "uRc").pair("dR", "dRc");
    b.edge("yl_nu", "L", "nuR", "Y21")
        .edge("yl_e", "L", "eR", "Y21b")
        .edge("yq_u", "Q", "uR", "Y21")
        .edge("yq_d", "Q", "dR", "Y21b")
        .edge("yl_nu_c", "Lc", "nuRc", "Y21")
        .edge("yl_e_c", "Lc", "eRc", "Y21b")
        .edge("yq_u_c", "Qc", "uRc", "Y21")
        .edge("yq_d_c", "Qc", "dRc", "Y21b")
        .edge("majorana", "nuRc", "nuR", "YR");
    return b.finish();
}

KrajewskiDiagram chain() {
    Builder b(sm_algebra(), 0, 1);
    b.vertex("v11", one, one, +1)
        .vertex("v21", two, one, -1)
        .vertex("v1b1", one_bar, one, +1)
        .vertex("v31", three, one, -1)
        .vertex("v12", one, two, -1)
        .vertex("v11b", one, one_bar, +1)
        .vertex("v13", one, three, -1);
    b.pair("v11", "v11").pair("v21", "v12").pair("v1b1", "v11b").pair("v31", "v13");
    b.edge("h12", "v11", "v21", "a12")
        .edge("h21b", "v21", "v1b1", "a21b")
        .edge("h1b3", "v1b1", "v31", "a1b3")
        .edge("w12", "v11", "v12", "a12")
        .edge("w21b", "v12", "v11b", "a21b")
        .edge("w1b3", "v11b", "v13", "a1b3");
    return b.finish();
}

KrajewskiDiagram yang_mills(int n) {
    if (n < 1) {
        throw std::invalid_argument("ym needs a matrix size N >= 1");
    }
    Builder b(FiniteAlgebra{{{std::to_string(n), n, FieldKind::Complex}}}, 0, 1);
    b.vertex("v", RepLabel{0, false}, RepLabel{0, false}, +1).pair("v", "v");
    return b.finish();
}

} // namespace

std::vector<std::string> builtin_names() {
    return {"chain", "sm", "ym"};
}

KrajewskiDiagram builtin(const std::string& name, int param) {
    if (name == "sm") {
        return standard_model();
    }
    if (name == "chain") {
        return chain();
    }
    if (name == "ym") {
        return yang_mills(param);
    }
    throw std::invalid_argument("unknown builtin '" + name + "' (expected one of: chain, sm, ym)");
}

} // namespace kra
