#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace kra::testing {

std::vector<std::pair<int, int>> random_simple_graph(Rng& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (coin(rng)) {
                edges.emplace_back(a, b);
            }
        }
    }
    return edges;
}

std::vector<int> reference_canonical(const std::vector<int>& cycle) {
    std::vector<std::vector<int>> forms;
    const std::size_t n = cycle.size();
    std::vector<int> rev(cycle.rbegin(), cycle.rend());
    for (const std::vector<int>* base : {&cycle, static_cast<const std::vector<int>*>(&rev)}) {
        for (std::size_t r = 0; r < n; ++r) {
            std::vector<int> f;
            for (std::size_t k = 0; k < n; ++k) {
                f.push_back((*base)[(r + k) % n]);
            }
            forms.push_back(std::move(f));
        }
    }
    return *std::min_element(forms.begin(), forms.end());
}

std::set<std::vector<int>> brute_force_cycles(int n, const std::vector<std::pair<int, int>>& edges,
                                              std::size_t max_len) {
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : edges) {
        adj[a][b] = adj[b][a] = true;
    }
    std::set<std::vector<int>> found;
    if (max_len >= 2) {
        for (const auto& [a, b] : edges) {
            found.insert(reference_canonical({a, b}));
        }
    }
    std::vector<int> seq;
    std::vector<bool> used(n, false);
    std::function<void()> grow = [&] {
        if (seq.size() >= 3 && adj[seq.back()][seq.front()]) {
            found.insert(reference_canonical(seq));
        }
        if (seq.size() == max_len) {
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (!used[w] && (seq.empty() || adj[seq.back()][w])) {
                used[w] = true;
                seq.push_back(w);
                grow();
                seq.pop_back();
                used[w] = false;
            }
        }
    };
    grow();
    return found;
}

namespace {

const RepLabel kLabels[] = {{0, false}, {0, true}, {1, false}, {2, false}, {2, true}};
const char* const kLabelNames[] = {"1", "1b", "2", "3", "3b"};

} // namespace

KrajewskiDiagram random_diagram(Rng& rng, std::size_t max_vertices) {
    KrajewskiDiagram d;
    d.algebra = FiniteAlgebra{{{"1", 1, FieldKind::Complex}, {"2", 1, FieldKind::Quaternion}, {"3", 3, FieldKind::Complex}}};
    d.kodim = 0;
    d.families = 1;

    std::uniform_int_distribution<int> sign_pick(0, 1);
    int f[5];
    for (int& s : f) {
        s = sign_pick(rng) == 0 ? 1 : -1;
    }

    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 5; ++a) {
        for (int b = a; b < 5; ++b) {
            pairs.emplace_back(a, b);
        }
    }
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::uniform_int_distribution<std::size_t> target_pick(2, max_vertices);
    const std::size_t target = target_pick(rng);

    std::map<std::pair<int, int>, std::size_t> at;
    auto add_vertex = [&](int a, int b) {
        at[{a, b}] = d.vertices.size();
        d.vertices.push_back({std::string("v") + kLabelNames[a] + "_" + kLabelNames[b], kLabels[a], kLabels[b],
                              f[a] * f[b]});
        d.jmap.emplace_back();
    };
    for (const auto& [a, b] : pairs) {
        const std::size_t need = a == b ? 1 : 2;
        if (d.vertices.size() + need > target) {
            continue;
        }
        add_vertex(a, b);
        if (a != b) {
            add_vertex(b, a);
        }
    }
    for (const auto& [key, v] : at) {
        d.jmap[v] = at.at({key.second, key.first});
    }

    std::bernoulli_distribution keep(0.6);
    std::bernoulli_distribution shared(0.5);
    int next = 0;
    for (const auto& [ka, va] : at) {
        for (const auto& [kb, vb] : at) {
            const auto [a, r] = ka;
            const auto [b, r2] = kb;
            if (r != r2 || a >= b || f[a] == f[b] || !keep(rng)) {
                continue;
            }
            const std::string label = shared(rng) ? std::string("x") + kLabelNames[a] + kLabelNames[b]
                                                  : "y" + std::to_string(next);
            const std::string id = "h" + std::to_string(next++);
            d.edges.push_back({id, va, vb, SymbolicOperator{label}});
            d.edges.push_back({id + "_c", at.at({r, a}), at.at({r, b}), SymbolicOperator{label}});
        }
    }
    return d;
}

namespace {

std::vector<std::pair<RepLabel, RepLabel>> steps_of(const std::vector<RepLabel>& labels) {
    std::vector<std::pair<RepLabel, RepLabel>> out;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        const RepLabel& a = labels[k];
        const RepLabel& b = labels[(k + 1) % labels.size()];
        if (a != b) {
            out.emplace_back(a, b);
        }
    }
    return out;
}

} // namespace

std::vector<std::pair<RepLabel, RepLabel>> column_steps(const KrajewskiDiagram& d,
                                                        const std::vector<std::size_t>& vertices) {
    std::vector<RepLabel> labels;
    for (const auto v : vertices) {
        labels.push_back(d.vertices[v].col);
    }
    return steps_of(labels);
}

std::vector<std::pair<RepLabel, RepLabel>> row_steps(const KrajewskiDiagram& d,
                                                     const std::vector<std::size_t>& vertices) {
    std::vector<RepLabel> labels;
    for (const auto v : vertices) {
        labels.push_back(d.vertices[v].row);
    }
    return steps_of(labels);
}

bool steps_follow(const std::vector<std::pair<RepLabel, RepLabel>>& steps, const std::vector<RepLabel>& cycle) {
    const std::size_t k = cycle.size();
    if (steps.size() != k || k == 0) {
        return false;
    }
    for (std::size_t r = 0; r < k; ++r) {
        bool all = true;
        for (std::size_t j = 0; j < k && all; ++j) {
            all = steps[j].first == cycle[(r + j) % k] && steps[j].second == cycle[(r + j + 1) % k];
        }
        if (all) {
            return true;
        }
    }
    return false;
}

std::string verify_closed_walk(const KrajewskiDiagram& d, const DiagramCycle& w) {
    const std::size_t l = w.vertices.size();
    if (l < 2 || w.edges.size() != l) {
        return "witness has " + std::to_string(l) + " vertices and " + std::to_string(w.edges.size()) + " edges";
    }
    std::set<std::size_t> seen(w.vertices.begin(), w.vertices.end());
    if (seen.size() != l) {
        return "witness repeats a vertex";
    }
    for (std::size_t k = 0; k < l; ++k) {
        if (w.edges[k] >= d.edges.size() || w.vertices[k] >= d.vertices.size()) {
            return "witness index out of range";
        }
        const EdgePair& e = d.edges[w.edges[k]];
        const std::size_t a = w.vertices[k];
        const std::size_t b = w.vertices[(k + 1) % l];
        if (!((e.source == a && e.target == b) || (e.source == b && e.target == a))) {
            return "edge " + e.id + " does not join consecutive witness vertices";
        }
    }
    return {};
}

std::string verify_lift(const KrajewskiDiagram& d, const LabelCycle& g, const DiagramCycle& witness) {
    if (auto err = verify_closed_walk(d, witness); !err.empty()) {
        return err;
    }
    if (!steps_follow(column_steps(d, witness.vertices), g.vertices)) {
        return "column steps do not follow the cycle";
    }
    return {};
}

std::string verify_pair_lift(const KrajewskiDiagram& d, const LabelCycle& g1, const LabelCycle& g2,
                             const PairLift& lift) {
    if (auto err = verify_lift(d, g1, lift.witness); !err.empty()) {
        return err;
    }
    std::vector<RepLabel> second = g2.vertices;
    if (lift.second_reversed) {
        std::reverse(second.begin(), second.end());
    }
    if (!steps_follow(row_steps(d, lift.witness.vertices), second)) {
        return "row steps do not follow the second cycle";
    }
    return {};
}

BruteForceLifts::BruteForceLifts(const KrajewskiDiagram& d) : d_(d) {
    const std::size_t n = d.vertices.size();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& e : d.edges) {
        if (e.source != e.target) {
            adj[e.source][e.target] = adj[e.target][e.source] = true;
        }
    }
    std::vector<std::size_t> seq;
    std::vector<bool> used(n, false);
    std::function<void()> grow = [&] {
        if (seq.size() >= 2 && adj[seq.back()][seq.front()]) {
            walks_.push_back(seq);
        }
        for (std::size_t w = 0; w < n; ++w) {
            if (!used[w] && (seq.empty() || adj[seq.back()][w])) {
                used[w] = true;
                seq.push_back(w);
                grow();
                seq.pop_back();
                used[w] = false;
            }
        }
    };
    grow();
}

bool BruteForceLifts::lifts(const LabelCycle& g) const {
    return std::any_of(walks_.begin(), walks_.end(),
                       [&](const auto& w) { return steps_follow(column_steps(d_, w), g.vertices); });
}

bool BruteForceLifts::lifts_pair(const LabelCycle& g1, const LabelCycle& g2) const {
    std::vector<RepLabel> back(g2.vertices.rbegin(), g2.vertices.rend());
    return std::any_of(walks_.begin(), walks_.end(), [&](const auto& w) {
        if (!steps_follow(column_steps(d_, w), g1.vertices)) {
            return false;
        }
        const auto rows = row_steps(d_, w);
        return steps_follow(rows, g2.vertices) || steps_follow(rows, back);
    });
}

GraphProfile random_consistent_profile(Rng& rng) {
    std::uniform_int_distribution<int> small(0, 3);
    std::uniform_int_distribution<int> ghosts(0, 2);
    const std::pair<int, int> kinds[] = {{3, 0}, {4, 0}, {1, 2}, {2, 2}, {0, 3}, {0, 4}, {2, 1}};
    for (;;) {
        GraphProfile p;
        long gauge = 0;
        long scalar = 0;
        int vertices = 0;
        for (const auto& k : kinds) {
            const int c = small(rng);
            if (c > 0) {
                p.V[k] = c;
                gauge += static_cast<long>(k.first) * c;
                scalar += static_cast<long>(k.second) * c;
                vertices += c;
            }
        }
        p.V_ghostA = ghosts(rng);
        p.V_ghostChi = ghosts(rng);
        gauge += p.V_ghostA;
        scalar += p.V_ghostChi;
        const long ghost = 2L * (p.V_ghostA + p.V_ghostChi);
        vertices += p.V_ghostA + p.V_ghostChi;
        if (vertices == 0) {
            continue;
        }
        auto split = [&](long half_edges, int& internal, int& external) {
            std::uniform_int_distribution<long> pick(0, half_edges / 2);
            internal = static_cast<int>(pick(rng));
            external = static_cast<int>(half_edges - 2L * internal);
        };
        split(gauge, p.I_A, p.E_A);
        split(scalar, p.I_chi, p.E_chi);
        split(ghost, p.I_ghost, p.E_ghost);
        p.L = p.I_A + p.I_chi + p.I_ghost - vertices + 1;
        if (p.L >= 0) {
            return p;
        }
    }
}

GraphProfile mutate_profile(Rng& rng, GraphProfile p) {
    std::uniform_int_distribution<int> which(0, 9);
    switch (which(rng)) {
    case 0: ++p.L; break;
    case 1: ++p.I_A; break;
    case 2: ++p.I_chi; break;
    case 3: ++p.I_ghost; break;
    case 4: ++p.E_A; break;
    case 5: ++p.E_chi; break;
    case 6: ++p.E_ghost; break;
    case 7: ++p.V_ghostA; break;
    case 8: ++p.V_ghostChi; break;
    default: ++p.V[{3, 0}]; break;
    }
    return p;
}

} // namespace kra::testing
