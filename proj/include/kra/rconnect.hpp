#pragma once

#include "kra/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kra {

enum class Exemption {
    None,
    SharedTrivialVertex, // both cycles pass through a one-dimensional complex label
    PseudoRealDoublet,   // both are 2-cycles from one quaternionic label to the two
                         // one-dimensional labels of a single complex factor
};

std::string to_string(Exemption e);

Exemption exemption_reason(const LabelCycle& g1, const LabelCycle& g2, const FiniteAlgebra& algebra);
bool exemption_check(const LabelCycle& g1, const LabelCycle& g2, const ProjectedGraph& g);

struct LiftCheck {
    LabelCycle cycle;
    std::optional<DiagramCycle> witness;
};

enum class PairStatus { Lifted, Failed, Exempt };

std::string to_string(PairStatus s);

struct PairCheck {
    LabelCycle first;
    LabelCycle second;
    PairStatus status = PairStatus::Failed;
    Exemption exemption = Exemption::None;
    std::optional<PairLift> witness;
};

struct RConnectReport {
    int dimension = 4;
    bool strict_bounds = false;
    std::size_t bound = 4; // maximal total cycle length examined
    std::vector<LiftCheck> cond1;
    std::vector<PairCheck> cond2;
    std::vector<std::vector<LabelCycle>> cond3; // offending tuples
    bool verdict = false;

    [[nodiscard]] bool cond1_ok() const;
    [[nodiscard]] bool cond2_ok() const;
    [[nodiscard]] std::vector<const PairCheck*> counterexamples() const;
};

/// Lengths up to m inclusive by default; `strict_bounds` uses m - 1.
RConnectReport check_r_connected(const KrajewskiDiagram& d, int m, bool strict_bounds = false);

} // namespace kra
