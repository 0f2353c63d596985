// Scalar field content, the gauge-invariant terms generated by the spectral
// action, the counterterms renormalizability requires, and their comparison.
#pragma once

#include "kra/graph.hpp"
#include "kra/rconnect.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kra {

/// phi^p on the projected edge {source, target}, source < target. The
/// component on the reversed edge is its adjoint.
struct FieldComponent {
    RepLabel source;
    RepLabel target;
    std::size_t p = 1;

    friend auto operator<=>(const FieldComponent&, const FieldComponent&) = default;
};

struct FieldSummary {
    std::vector<FieldComponent> components;
    long count = 0; // independent complex components
};

FieldSummary enumerate_fields(const KrajewskiDiagram& d);

/// dim S over a non-loop projected edge. Throws std::invalid_argument on a loop
/// or when symbolic and numeric operators are mixed over the edge.
std::size_t basis_dimension(const LabelEdge& e, const KrajewskiDiagram& d);

/// Nonzero coordinates (p, value) of the operator of horizontal edge `edge`
/// in the basis of its projected edge, oriented from the smaller label.
std::vector<std::pair<std::size_t, ComplexRational>> edge_coordinates(const KrajewskiDiagram& d, std::size_t edge);

enum class TermKind { YangMillsF2, ScalarMass, ScalarKinetic, Cubic, Quartic, HigherOrder };
enum class TermOrigin { Gauge, GammaCycle, Walk, Required };

std::string to_string(TermKind k);
std::string to_string(TermOrigin o);

/// One factor of a trace: phi^p from `from` to `to`, the adjoint when to < from.
/// p = 0 stands for an arbitrary basis index.
struct TraceStep {
    RepLabel from;
    RepLabel to;
    std::size_t p = 0;

    [[nodiscard]] bool adjoint() const { return to < from; }
    friend auto operator<=>(const TraceStep&, const TraceStep&) = default;
};

using TraceBlock = std::vector<TraceStep>;

/// Least rotation of the block or of its reversed adjoint.
TraceBlock canonical_block(const TraceBlock& b);
/// Canonical label cycle traversed by the block, ignoring basis indices.
std::vector<RepLabel> block_shape(const TraceBlock& b);

struct CoefficientFactor {
    std::string edge;
    std::size_t p = 0; // 0 for a constant (diagonal) edge
    bool conj = false;

    friend auto operator<=>(const CoefficientFactor&, const CoefficientFactor&) = default;
};

using Monomial = std::vector<CoefficientFactor>;

struct InvariantTerm {
    TermKind kind = TermKind::Quartic;
    TermOrigin origin = TermOrigin::Required;
    std::string gauge_factor;       // F^2 terms only
    std::vector<TraceBlock> blocks; // canonical, sorted
    std::vector<Monomial> coefficients;
    std::vector<std::string> sources; // rendered origin cycles or walks
    Exemption exemption = Exemption::None;
    std::vector<RepLabel> collapsed_walk; // exempt double traces only

    [[nodiscard]] int degree() const;
    [[nodiscard]] bool exempt() const { return exemption != Exemption::None; }
};

std::string render_term(const FiniteAlgebra& a, const InvariantTerm& t);
std::string render_monomial(const Monomial& m);

std::vector<InvariantTerm> action_terms(const KrajewskiDiagram& d);
std::vector<InvariantTerm> required_counterterms(const KrajewskiDiagram& d);

enum class CoverageStatus { Covered, Missing, Exempt };

std::string to_string(CoverageStatus s);

struct CoverageEntry {
    std::size_t required = 0;
    CoverageStatus status = CoverageStatus::Missing;
    std::optional<std::size_t> generator; // index into `generated`
};

struct CoverageReport {
    std::vector<InvariantTerm> required;
    std::vector<InvariantTerm> generated;
    std::vector<CoverageEntry> entries;

    [[nodiscard]] bool complete() const;
    [[nodiscard]] std::vector<const CoverageEntry*> missing() const;
};

CoverageReport counterterm_coverage(const KrajewskiDiagram& d);

} // namespace kra
