#include "kra/algebra.hpp"

#include <stdexcept>

namespace kra {

char field_letter(FieldKind kind) {
    switch (kind) {
    case FieldKind::Real: return 'R';
    case FieldKind::Complex: return 'C';
    case FieldKind::Quaternion: return 'H';
    }
    return '?';
}

void FiniteAlgebra::check() const {
    if (factors.empty()) {
        throw std::invalid_argument("algebra has no factors");
    }
    for (const auto& f : factors) {
        if (f.size < 1) {
            throw std::invalid_argument("factor '" + f.name + "' has size < 1");
        }
    }
}

std::size_t FiniteAlgebra::complex_count() const {
    std::size_t c = 0;
    for (const auto& f : factors) {
        c += f.kind == FieldKind::Complex ? 1 : 0;
    }
    return c;
}

void check_label(const FiniteAlgebra& algebra, RepLabel label) {
    if (label.factor_index >= algebra.factors.size()) {
        throw std::invalid_argument("representation refers to unknown factor");
    }
    if (label.conjugate && algebra.factors[label.factor_index].kind != FieldKind::Complex) {
        throw std::invalid_argument("conjugate representation of non-complex factor '" +
                                    algebra.factors[label.factor_index].name + "'");
    }
}

int rep_dimension(const FiniteAlgebra& algebra, RepLabel label) {
    const auto& f = algebra.factors.at(label.factor_index);
    return f.kind == FieldKind::Quaternion ? 2 * f.size : f.size;
}

std::string rep_name(const FiniteAlgebra& algebra, RepLabel label) {
    return algebra.factors.at(label.factor_index).name + (label.conjugate ? "~" : "");
}

bool is_trivial_complex(const FiniteAlgebra& algebra, RepLabel label) {
    const auto& f = algebra.factors.at(label.factor_index);
    return f.kind == FieldKind::Complex && f.size == 1;
}

std::string to_string(LieKind kind) {
    switch (kind) {
    case LieKind::O: return "o";
    case LieKind::SU: return "su";
    case LieKind::SP: return "sp";
    }
    return "?";
}

std::string lie_factor_name(const SimpleLieFactor& f) {
    return to_string(f.kind) + "(" + std::to_string(f.rank) + ")";
}

std::string describe(const GaugeAlgebraDecomposition& decomp) {
    std::string out;
    auto append = [&out](const std::string& s) {
        if (!out.empty()) {
            out += " ⊕ ";
        }
        out += s;
    };
    for (const auto& f : decomp.simple_factors) {
        std::string name = lie_factor_name(f);
        if (f.kind == LieKind::SP && f.rank == 1) {
            name += " (≅ su(2))";
        }
        append(name);
    }
    if (decomp.abelian_rank == 1) {
        append("u(1)");
    } else if (decomp.abelian_rank > 1) {
        append("u(1)^" + std::to_string(decomp.abelian_rank));
    }
    return out.empty() ? std::string("0") : out;
}

GaugeAlgebraDecomposition gauge_lie_algebra(const FiniteAlgebra& algebra) {
    GaugeAlgebraDecomposition out;
    for (std::size_t i = 0; i < algebra.factors.size(); ++i) {
        const auto& f = algebra.factors[i];
        switch (f.kind) {
        case FieldKind::Real:
            if (f.size > 1) {
                out.simple_factors.push_back({LieKind::O, f.size, i});
            }
            break;
        case FieldKind::Complex:
            if (f.size > 1) {
                out.simple_factors.push_back({LieKind::SU, f.size, i});
            }
            break;
        case FieldKind::Quaternion:
            out.simple_factors.push_back({LieKind::SP, f.size, i});
            break;
        }
    }
    const auto c = static_cast<int>(algebra.complex_count());
    out.abelian_rank = c > 0 ? c - 1 : 0;
    return out;
}

int lie_dimension(const SimpleLieFactor& f) {
    const int k = f.rank;
    switch (f.kind) {
    case LieKind::O: return k * (k - 1) / 2;
    case LieKind::SU: return k * k - 1;
    case LieKind::SP: return k * (2 * k + 1);
    }
    return 0;
}

int algebra_dimension(const GaugeAlgebraDecomposition& decomp) {
    int dim = decomp.abelian_rank;
    for (const auto& f : decomp.simple_factors) {
        dim += lie_dimension(f);
    }
    return dim;
}

UnimodularityRelation unimodularity_relation(const FiniteAlgebra& algebra, std::span<const long> multiplicities) {
    if (multiplicities.size() != algebra.factors.size()) {
        throw std::invalid_argument("expected " + std::to_string(algebra.factors.size()) +
                                    " multiplicities, got " + std::to_string(multiplicities.size()));
    }
    UnimodularityRelation out;
    bool any_nonzero = false;
    for (std::size_t i = 0; i < algebra.factors.size(); ++i) {
        if (algebra.factors[i].kind != FieldKind::Complex) {
            continue;
        }
        out.constraint.emplace_back(i, multiplicities[i]);
        any_nonzero = any_nonzero || multiplicities[i] != 0;
    }
    const auto c = static_cast<int>(out.constraint.size());
    if (c == 0) {
        out.effective_abelian_rank = 0;
    } else if (any_nonzero) {
        out.effective_abelian_rank = c - 1;
    } else {
        out.effective_abelian_rank = c;
        out.degenerate = true;
        out.warning = "all complex factors have zero multiplicity; unimodularity imposes no constraint";
    }
    return out;
}

IrrepCorrespondence irrep_correspondence_check(const FiniteAlgebra& algebra) {
    bool has_complex = false;
    bool has_nontrivial_complex = false;
    for (const auto& f : algebra.factors) {
        if (f.kind == FieldKind::Real) {
            return {false, "factor '" + f.name + "' is real (M_" + std::to_string(f.size) + "(R))"};
        }
        if (f.kind == FieldKind::Complex) {
            has_complex = true;
            has_nontrivial_complex = has_nontrivial_complex || f.size > 1;
        }
    }
    if (has_complex && !has_nontrivial_complex) {
        std::string names;
        for (const auto& f : algebra.factors) {
            if (f.kind == FieldKind::Complex) {
                names += (names.empty() ? "" : ", ") + f.name;
            }
        }
        return {false, "complex factors (" + names + ") are all one-dimensional"};
    }
    return {true, ""};
}

} // namespace kra
