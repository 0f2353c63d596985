// The projected graph of representation labels, cycle enumeration, and lifts
// of projected cycles back into the diagram.
#pragma once

#include "kra/diagram.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kra {

using LabelEdge = std::pair<RepLabel, RepLabel>; // ordered first <= second

struct ProjectedGraph {
    FiniteAlgebra algebra;
    std::vector<RepLabel> vertices;  // sorted
    std::vector<LabelEdge> edges;    // sorted, unique, loops included
    std::vector<LabelEdge> psi;      // per edge pair of the diagram

    [[nodiscard]] std::vector<LabelEdge> non_loop_edges() const;
};

ProjectedGraph project(const KrajewskiDiagram& d);

/// A cycle of the projected graph as its vertex sequence. Length 2 means the
/// back-and-forth walk over one edge.
struct LabelCycle {
    std::vector<RepLabel> vertices;

    [[nodiscard]] std::size_t length() const { return vertices.size(); }
    friend auto operator<=>(const LabelCycle&, const LabelCycle&) = default;
};

/// Least rotation of either orientation.
std::vector<RepLabel> canonical_cycle(std::span<const RepLabel> seq);
template <typename T>
std::vector<T> canonical_rotation_reversal(std::span<const T> seq);

std::vector<LabelCycle> enumerate_cycles(const ProjectedGraph& g, std::size_t max_len);

/// Cycles of a simple undirected graph on vertices 0..n-1, lengths 2..max_len,
/// each once in canonical form, sorted.
std::vector<std::vector<int>> enumerate_cycles(int n, std::span<const std::pair<int, int>> edges, std::size_t max_len);

std::string format_cycle(const FiniteAlgebra& a, const LabelCycle& c); // "(1 2)(2 1)"

/// An oriented cycle of the diagram: edges[k] joins vertices[k] to vertices[k+1 mod l].
struct DiagramCycle {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> edges;

    [[nodiscard]] std::size_t length() const { return vertices.size(); }
    friend bool operator==(const DiagramCycle&, const DiagramCycle&) = default;
};

/// All oriented simple cycles of the diagram (loops excluded), once per
/// rotation class, both orientations.
std::vector<DiagramCycle> enumerate_diagram_cycles(const KrajewskiDiagram& d, std::size_t max_len);

DiagramCycle reversed(const DiagramCycle& c);
/// The image under j (requires a resolved jmap and a j-symmetric edge set).
std::optional<DiagramCycle> j_image(const KrajewskiDiagram& d, const DiagramCycle& c);

/// Column (resp. row) labels along the cycle with cyclic runs merged: the
/// image under psi (resp. psi o j) with loop edges deleted.
std::vector<RepLabel> column_walk(const KrajewskiDiagram& d, const DiagramCycle& c);
std::vector<RepLabel> row_walk(const KrajewskiDiagram& d, const DiagramCycle& c);

/// Equality of cyclic sequences up to rotation.
bool same_up_to_rotation(std::span<const RepLabel> a, std::span<const RepLabel> b);

std::optional<DiagramCycle> lift_cycle(const LabelCycle& g, const KrajewskiDiagram& d);
std::optional<DiagramCycle> lift_cycle(const LabelCycle& g, const KrajewskiDiagram& d,
                                       std::span<const DiagramCycle> cycles);

struct PairLift {
    DiagramCycle witness;
    bool second_reversed = false; // the row walk matches g2 read backwards
};

std::optional<PairLift> lift_pair(const LabelCycle& g1, const LabelCycle& g2, const KrajewskiDiagram& d);
std::optional<PairLift> lift_pair(const LabelCycle& g1, const LabelCycle& g2, const KrajewskiDiagram& d,
                                  std::span<const DiagramCycle> cycles);

/// "L(2) -> nuR(1) -> L" style rendering with column labels.
std::string format_diagram_cycle(const KrajewskiDiagram& d, const DiagramCycle& c);

template <typename T>
std::vector<T> canonical_rotation_reversal(std::span<const T> seq) {
    std::vector<T> best(seq.begin(), seq.end());
    const std::size_t n = seq.size();
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t r = 0; r < n; ++r) {
            std::vector<T> cand(n);
            for (std::size_t k = 0; k < n; ++k) {
                cand[k] = dir == 0 ? seq[(r + k) % n] : seq[(r + n - k) % n];
            }
            if (cand < best) {
                best = std::move(cand);
            }
        }
    }
    return best;
}

} // namespace kra
