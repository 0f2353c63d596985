// Finite algebras given by their Wedderburn data and the gauge Lie algebra
// they determine.
#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kra {

enum class FieldKind { Real, Complex, Quaternion };

char field_letter(FieldKind kind); // 'R', 'C', 'H'

/// One summand M_k(F) of the algebra. `name` is the identifier used in .kra files.
struct AlgebraFactor {
    std::string name;
    int size = 1;
    FieldKind kind = FieldKind::Complex;

    friend bool operator==(const AlgebraFactor&, const AlgebraFactor&) = default;
};

struct FiniteAlgebra {
    std::vector<AlgebraFactor> factors;

    /// Throws std::invalid_argument if the factor list is empty or a size is < 1.
    void check() const;
    [[nodiscard]] std::size_t complex_count() const;

    friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;
};

/// An irreducible representation: the defining representation of one factor,
/// or its complex conjugate (only distinct for complex factors).
struct RepLabel {
    std::size_t factor_index = 0;
    bool conjugate = false;

    friend auto operator<=>(const RepLabel&, const RepLabel&) = default;
};

/// Complex dimension of the representation (2k for M_k(H)).
int rep_dimension(const FiniteAlgebra& algebra, RepLabel label);
/// Factor name with a trailing '~' for conjugates.
std::string rep_name(const FiniteAlgebra& algebra, RepLabel label);
/// True for one-dimensional representations of a complex factor (the "1" and "1~" vertices).
bool is_trivial_complex(const FiniteAlgebra& algebra, RepLabel label);
/// Throws std::invalid_argument for out-of-range factors or conjugated real/quaternion labels.
void check_label(const FiniteAlgebra& algebra, RepLabel label);

enum class LieKind { O, SU, SP };

struct SimpleLieFactor {
    LieKind kind = LieKind::SU;
    int rank = 0;
    std::size_t factor_index = 0;

    friend bool operator==(const SimpleLieFactor&, const SimpleLieFactor&) = default;
};

struct GaugeAlgebraDecomposition {
    std::vector<SimpleLieFactor> simple_factors;
    int abelian_rank = 0;
};

std::string to_string(LieKind kind);
/// "su(3)", "sp(1)" ...
std::string lie_factor_name(const SimpleLieFactor& f);
/// Human readable sum, e.g. "sp(1) ⊕ su(3) ⊕ u(1)" with "sp(1) ≅ su(2)" noted.
std::string describe(const GaugeAlgebraDecomposition& decomp);

GaugeAlgebraDecomposition gauge_lie_algebra(const FiniteAlgebra& algebra);

int lie_dimension(const SimpleLieFactor& f);
int algebra_dimension(const GaugeAlgebraDecomposition& decomp);

struct UnimodularityRelation {
    /// (factor index, coefficient) over the complex factors: sum coefficient * z = 0.
    std::vector<std::pair<std::size_t, long>> constraint;
    int effective_abelian_rank = 0;
    /// Set when every complex coefficient vanishes and no constraint applies.
    bool degenerate = false;
    std::string warning;
};

/// `multiplicities` holds one entry per factor: the net number of times the
/// factor's defining representation occurs in the Hilbert space (conjugate
/// copies count negatively on the u(1) generator).
UnimodularityRelation unimodularity_relation(const FiniteAlgebra& algebra, std::span<const long> multiplicities);

struct IrrepCorrespondence {
    bool holds = true;
    std::string diagnostic;
};

IrrepCorrespondence irrep_correspondence_check(const FiniteAlgebra& algebra);

} // namespace kra
