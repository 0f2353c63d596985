#include "kra/rconnect.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace kra {

std::string to_string(Exemption e) {
    switch (e) {
    case Exemption::None: return "none";
    case Exemption::SharedTrivialVertex: return "shared-trivial-vertex";
    case Exemption::PseudoRealDoublet: return "pseudo-real-doublet";
    }
    return "?";
}

std::string to_string(PairStatus s) {
    switch (s) {
    case PairStatus::Lifted: return "lifted";
    case PairStatus::Failed: return "failed";
    case PairStatus::Exempt: return "exempt";
    }
    return "?";
}

namespace {

// The non-quaternionic end of a 2-cycle through a quaternionic label q.
std::optional<RepLabel> doublet_partner(const LabelCycle& c, const RepLabel& q) {
    if (c.length() != 2) {
        return std::nullopt;
    }
    if (c.vertices[0] == q) {
        return c.vertices[1];
    }
    if (c.vertices[1] == q) {
        return c.vertices[0];
    }
    return std::nullopt;
}

} // namespace

Exemption exemption_reason(const LabelCycle& g1, const LabelCycle& g2, const FiniteAlgebra& algebra) {
    for (const auto& a : g1.vertices) {
        if (is_trivial_complex(algebra, a) &&
            std::find(g2.vertices.begin(), g2.vertices.end(), a) != g2.vertices.end()) {
            return Exemption::SharedTrivialVertex;
        }
    }
    for (const auto& q : g1.vertices) {
        if (algebra.factors.at(q.factor_index).kind != FieldKind::Quaternion) {
            continue;
        }
        const auto p1 = doublet_partner(g1, q);
        const auto p2 = doublet_partner(g2, q);
        if (p1 && p2 && is_trivial_complex(algebra, *p1) && is_trivial_complex(algebra, *p2) &&
            p1->factor_index == p2->factor_index) {
            return Exemption::PseudoRealDoublet;
        }
    }
    return Exemption::None;
}

bool exemption_check(const LabelCycle& g1, const LabelCycle& g2, const ProjectedGraph& g) {
    return exemption_reason(g1, g2, g.algebra) != Exemption::None;
}

bool RConnectReport::cond1_ok() const {
    return std::all_of(cond1.begin(), cond1.end(), [](const LiftCheck& c) { return c.witness.has_value(); });
}

bool RConnectReport::cond2_ok() const {
    return std::none_of(cond2.begin(), cond2.end(), [](const PairCheck& c) { return c.status == PairStatus::Failed; });
}

std::vector<const PairCheck*> RConnectReport::counterexamples() const {
    std::vector<const PairCheck*> out;
    for (const auto& c : cond2) {
        if (c.status == PairStatus::Failed) {
            out.push_back(&c);
        }
    }
    return out;
}

RConnectReport check_r_connected(const KrajewskiDiagram& d, int m, bool strict_bounds) {
    if (m < 2) {
        throw std::invalid_argument("R-connectedness needs dimension m >= 2");
    }
    RConnectReport report;
    report.dimension = m;
    report.strict_bounds = strict_bounds;
    report.bound = static_cast<std::size_t>(strict_bounds ? m - 1 : m);

    const ProjectedGraph g = project(d);
    const auto cycles = enumerate_cycles(g, report.bound);
    const auto lifts = enumerate_diagram_cycles(d, d.vertices.size());

    for (const auto& c : cycles) {
        report.cond1.push_back({c, lift_cycle(c, d, lifts)});
    }

    for (std::size_t a = 0; a < cycles.size(); ++a) {
        for (std::size_t b = a; b < cycles.size(); ++b) {
            if (cycles[a].length() + cycles[b].length() > report.bound) {
                continue;
            }
            PairCheck pc{cycles[a], cycles[b], PairStatus::Failed, Exemption::None, std::nullopt};
            pc.exemption = exemption_reason(cycles[a], cycles[b], d.algebra);
            if (pc.exemption != Exemption::None) {
                pc.status = PairStatus::Exempt;
            } else if ((pc.witness = lift_pair(cycles[a], cycles[b], d, lifts))) {
                pc.status = PairStatus::Lifted;
            }
            report.cond2.push_back(std::move(pc));
        }
    }

    // Multisets of at least three cycles within the bound in which some two
    // members fail to share a one-dimensional complex label.
    std::vector<std::size_t> pick;
    std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t from, std::size_t used) {
        if (pick.size() >= 3) {
            bool offending = false;
            for (std::size_t x = 0; x < pick.size() && !offending; ++x) {
                for (std::size_t y = x + 1; y < pick.size() && !offending; ++y) {
                    offending = exemption_reason(cycles[pick[x]], cycles[pick[y]], d.algebra) == Exemption::None;
                }
            }
            if (offending) {
                std::vector<LabelCycle> tuple;
                for (const auto k : pick) {
                    tuple.push_back(cycles[k]);
                }
                report.cond3.push_back(std::move(tuple));
            }
        }
        for (std::size_t k = from; k < cycles.size(); ++k) {
            if (used + cycles[k].length() <= report.bound) {
                pick.push_back(k);
                extend(k, used + cycles[k].length());
                pick.pop_back();
            }
        }
    };
    extend(0, 0);

    report.verdict = report.cond1_ok() && report.cond2_ok() && report.cond3.empty();
    return report;
}

} // namespace kra
