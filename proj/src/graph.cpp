#include "kra/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace kra {

std::vector<LabelEdge> ProjectedGraph::non_loop_edges() const {
    std::vector<LabelEdge> out;
    std::copy_if(edges.begin(), edges.end(), std::back_inserter(out),
                 [](const LabelEdge& e) { return e.first != e.second; });
    return out;
}

ProjectedGraph project(const KrajewskiDiagram& d) {
    ProjectedGraph g;
    g.algebra = d.algebra;
    std::set<RepLabel> verts;
    for (const auto& v : d.vertices) {
        verts.insert(v.col);
    }
    g.vertices.assign(verts.begin(), verts.end());
    std::set<LabelEdge> edges;
    for (const auto& e : d.edges) {
        const LabelEdge image = std::minmax(d.vertices[e.source].col, d.vertices[e.target].col);
        g.psi.push_back(image);
        edges.insert(image);
    }
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

std::vector<RepLabel> canonical_cycle(std::span<const RepLabel> seq) {
    return canonical_rotation_reversal(seq);
}

std::vector<std::vector<int>> enumerate_cycles(int n, std::span<const std::pair<int, int>> edges, std::size_t max_len) {
    std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [a, b] : edges) {
        if (a != b) {
            adj[a].insert(b);
            adj[b].insert(a);
        }
    }
    std::set<std::vector<int>> found;
    if (max_len >= 2) {
        for (int a = 0; a < n; ++a) {
            for (const int b : adj[a]) {
                if (a < b) {
                    found.insert({a, b});
                }
            }
        }
    }
    std::vector<int> path;
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> dfs = [&](int start, int v) {
        for (const int w : adj[v]) {
            if (w == start && path.size() >= 3) {
                found.insert(canonical_rotation_reversal(std::span<const int>(path)));
            } else if (w > start && !on_path[w] && path.size() < max_len) {
                on_path[w] = 1;
                path.push_back(w);
                dfs(start, w);
                path.pop_back();
                on_path[w] = 0;
            }
        }
    };
    for (int s = 0; s < n && max_len >= 3; ++s) {
        path = {s};
        on_path[s] = 1;
        dfs(s, s);
        on_path[s] = 0;
    }
    return {found.begin(), found.end()};
}

std::vector<LabelCycle> enumerate_cycles(const ProjectedGraph& g, std::size_t max_len) {
    std::map<RepLabel, int> index;
    for (std::size_t k = 0; k < g.vertices.size(); ++k) {
        index[g.vertices[k]] = static_cast<int>(k);
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : g.edges) {
        edges.emplace_back(index.at(a), index.at(b));
    }
    std::vector<LabelCycle> out;
    for (const auto& c : enumerate_cycles(static_cast<int>(g.vertices.size()), edges, max_len)) {
        LabelCycle lc;
        for (const int v : c) {
            lc.vertices.push_back(g.vertices[static_cast<std::size_t>(v)]);
        }
        out.push_back(std::move(lc));
    }
    // Vertex indices follow label order, so index-canonical is label-canonical.
    std::sort(out.begin(), out.end(), [](const LabelCycle& a, const LabelCycle& b) {
        return a.length() != b.length() ? a.length() < b.length() : a < b;
    });
    return out;
}

std::string format_cycle(const FiniteAlgebra& a, const LabelCycle& c) {
    std::string out;
    const std::size_t n = c.vertices.size();
    for (std::size_t k = 0; k < n; ++k) {
        out += "(" + rep_name(a, c.vertices[k]) + " " + rep_name(a, c.vertices[(k + 1) % n]) + ")";
    }
    return out;
}

std::vector<DiagramCycle> enumerate_diagram_cycles(const KrajewskiDiagram& d, std::size_t max_len) {
    const std::size_t n = d.vertices.size();
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n); // (neighbour, edge)
    for (std::size_t k = 0; k < d.edges.size(); ++k) {
        const auto& e = d.edges[k];
        if (e.source == e.target) {
            continue;
        }
        adj[e.source].emplace_back(e.target, k);
        adj[e.target].emplace_back(e.source, k);
    }
    std::vector<DiagramCycle> out;
    DiagramCycle path;
    std::vector<char> on_path(n, 0);
    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t start, std::size_t v) {
        for (const auto& [w, e] : adj[v]) {
            if (w == start && path.vertices.size() >= 2) {
                // For l = 2 the closing edge may be the arrival edge: the back-and-forth walk.
                DiagramCycle c = path;
                c.edges.push_back(e);
                out.push_back(std::move(c));
            } else if (w > start && !on_path[w] && path.vertices.size() < max_len) {
                on_path[w] = 1;
                path.vertices.push_back(w);
                path.edges.push_back(e);
                dfs(start, w);
                path.edges.pop_back();
                path.vertices.pop_back();
                on_path[w] = 0;
            }
        }
    };
    for (std::size_t s = 0; s < n && max_len >= 2; ++s) {
        path = DiagramCycle{{s}, {}};
        on_path[s] = 1;
        dfs(s, s);
        on_path[s] = 0;
    }
    return out;
}

DiagramCycle reversed(const DiagramCycle& c) {
    DiagramCycle r;
    const std::size_t n = c.vertices.size();
    r.vertices.push_back(c.vertices[0]);
    for (std::size_t k = n - 1; k >= 1; --k) {
        r.vertices.push_back(c.vertices[k]);
    }
    for (std::size_t k = n; k-- > 0;) {
        r.edges.push_back(c.edges[k]);
    }
    return r;
}

std::optional<DiagramCycle> j_image(const KrajewskiDiagram& d, const DiagramCycle& c) {
    DiagramCycle out;
    for (const std::size_t v : c.vertices) {
        out.vertices.push_back(d.j(v));
    }
    for (const std::size_t e : c.edges) {
        const auto m = mirror_edge(d, e);
        if (!m) {
            return std::nullopt;
        }
        out.edges.push_back(*m);
    }
    return out;
}

namespace {

std::vector<RepLabel> merged_walk(std::vector<RepLabel> seq) {
    if (seq.empty() || std::all_of(seq.begin(), seq.end(), [&](const RepLabel& x) { return x == seq.front(); })) {
        return {};
    }
    while (seq.front() == seq.back()) {
        std::rotate(seq.begin(), seq.begin() + 1, seq.end());
    }
    std::vector<RepLabel> out;
    for (const auto& x : seq) {
        if (out.empty() || out.back() != x) {
            out.push_back(x);
        }
    }
    return out;
}

} // namespace

std::vector<RepLabel> column_walk(const KrajewskiDiagram& d, const DiagramCycle& c) {
    std::vector<RepLabel> seq;
    for (const std::size_t v : c.vertices) {
        seq.push_back(d.vertices[v].col);
    }
    return merged_walk(std::move(seq));
}

std::vector<RepLabel> row_walk(const KrajewskiDiagram& d, const DiagramCycle& c) {
    std::vector<RepLabel> seq;
    for (const std::size_t v : c.vertices) {
        seq.push_back(d.vertices[v].row);
    }
    return merged_walk(std::move(seq));
}

bool same_up_to_rotation(std::span<const RepLabel> a, std::span<const RepLabel> b) {
    if (a.size() != b.size()) {
        return false;
    }
    const std::size_t n = a.size();
    for (std::size_t r = 0; r < std::max<std::size_t>(n, 1); ++r) {
        bool ok = true;
        for (std::size_t k = 0; k < n && ok; ++k) {
            ok = a[k] == b[(k + r) % n];
        }
        if (ok) {
            return true;
        }
    }
    return false;
}

std::optional<DiagramCycle> lift_cycle(const LabelCycle& g, const KrajewskiDiagram& d,
                                       std::span<const DiagramCycle> cycles) {
    for (const auto& c : cycles) {
        if (same_up_to_rotation(column_walk(d, c), g.vertices)) {
            return c;
        }
    }
    return std::nullopt;
}

std::optional<DiagramCycle> lift_cycle(const LabelCycle& g, const KrajewskiDiagram& d) {
    const auto cycles = enumerate_diagram_cycles(d, 2 * d.vertices.size());
    return lift_cycle(g, d, cycles);
}

std::optional<PairLift> lift_pair(const LabelCycle& g1, const LabelCycle& g2, const KrajewskiDiagram& d,
                                  std::span<const DiagramCycle> cycles) {
    std::vector<RepLabel> g2_rev(g2.vertices.rbegin(), g2.vertices.rend());
    for (const auto& c : cycles) {
        if (!same_up_to_rotation(column_walk(d, c), g1.vertices)) {
            continue;
        }
        const auto rows = row_walk(d, c);
        if (same_up_to_rotation(rows, g2.vertices)) {
            return PairLift{c, false};
        }
        if (same_up_to_rotation(rows, g2_rev)) {
            return PairLift{c, true};
        }
    }
    return std::nullopt;
}

std::optional<PairLift> lift_pair(const LabelCycle& g1, const LabelCycle& g2, const KrajewskiDiagram& d) {
    const auto cycles = enumerate_diagram_cycles(d, 2 * d.vertices.size());
    return lift_pair(g1, g2, d, cycles);
}

std::string format_diagram_cycle(const KrajewskiDiagram& d, const DiagramCycle& c) {
    std::string out;
    for (const std::size_t v : c.vertices) {
        out += d.vertices[v].id + vertex_label(d, v) + " -> ";
    }
    return out + d.vertices[c.vertices.front()].id;
}

} // namespace kra
