// Krajewski diagrams: the decorated graphs classifying finite real spectral
// triples, together with their axiom checks.
#pragma once

#include "kra/algebra.hpp"
#include "kra/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace kra {

/// Signs of J^2 = eps, JD = eps' DJ, J gamma = eps'' gamma J for KO-dimension n.
struct KOSigns {
    int n = 0;
    int eps = 1;
    int eps_prime = 1;
    std::optional<int> eps_double_prime; // absent for odd n

    [[nodiscard]] bool even() const { return eps_double_prime.has_value(); }
};

/// Throws std::out_of_range unless 0 <= n <= 7.
KOSigns ko_signs(int n);

/// A node C^{col} ⊗ C^{row°}. `row` is written unconjugated, as on the diagram's vertical axis.
struct DiagramVertex {
    std::string id;
    RepLabel col;
    RepLabel row;
    std::optional<int> sign;

    friend bool operator==(const DiagramVertex&, const DiagramVertex&) = default;
};

struct SymbolicOperator {
    std::string label;
    friend bool operator==(const SymbolicOperator&, const SymbolicOperator&) = default;
};

/// Reduced matrix of the edge operator: Hom(C^{col s}, C^{col t}) for horizontal
/// edges, Hom(C^{row s}, C^{row t}) for vertical ones, 1x1 for diagonal (D0) edges.
struct NumericOperator {
    CMatrix matrix;
    friend bool operator==(const NumericOperator&, const NumericOperator&) = default;
};

using OperatorSpec = std::variant<SymbolicOperator, NumericOperator>;

/// The pair e: source -> target and its reverse, with D_reverse = D_e^*.
struct EdgePair {
    std::string id;
    std::size_t source = 0;
    std::size_t target = 0;
    OperatorSpec op;

    friend bool operator==(const EdgePair&, const EdgePair&) = default;
};

struct KrajewskiDiagram {
    FiniteAlgebra algebra;
    int kodim = 0;
    std::vector<DiagramVertex> vertices;
    std::vector<EdgePair> edges;
    /// j(v) per vertex index; nullopt until resolved.
    std::vector<std::optional<std::size_t>> jmap;
    int families = 1;

    [[nodiscard]] std::optional<std::size_t> vertex_index(const std::string& id) const;
    [[nodiscard]] KOSigns signs() const { return ko_signs(kodim); }
    /// j(v); throws std::logic_error when unresolved.
    [[nodiscard]] std::size_t j(std::size_t v) const;
};

/// Fills unresolved jmap entries whose rep-swapped partner is unique.
/// Returns the ids of vertices that remain ambiguous or unmatched.
std::vector<std::string> resolve_jmap(KrajewskiDiagram& d);

struct CheckResult {
    std::string name;
    bool passed = true;
    std::vector<std::string> messages;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    std::vector<std::string> warnings;

    [[nodiscard]] bool ok() const;
    [[nodiscard]] const CheckResult* find(const std::string& name) const;
};

ValidationReport validate(const KrajewskiDiagram& d);

int hilbert_dimension(const KrajewskiDiagram& d);

enum class EdgeClass { D0, Delta, JDeltaJ, Invalid };

std::string to_string(EdgeClass c);
EdgeClass classify_edge(const KrajewskiDiagram& d, const EdgePair& e);

struct DiracDecomposition {
    std::vector<std::size_t> d0;
    std::vector<std::size_t> delta;
    std::vector<std::size_t> jdeltaj;
};

DiracDecomposition dirac_decomposition(const KrajewskiDiagram& d);

/// Net multiplicity of each factor's defining representation as a left module
/// (families * sum of row dimensions; conjugate columns count negatively for complex factors).
std::vector<long> fundamental_multiplicities(const KrajewskiDiagram& d);

/// Index of the j-mirror edge pair of `edge`, if one exists.
std::optional<std::size_t> mirror_edge(const KrajewskiDiagram& d, std::size_t edge);

/// Equality up to the order of the vertex and edge lists.
bool structurally_equal(const KrajewskiDiagram& a, const KrajewskiDiagram& b);

std::string vertex_label(const KrajewskiDiagram& d, std::size_t v); // "(2,1°)"

} // namespace kra
