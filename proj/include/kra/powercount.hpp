// Superficial degree of divergence, heat-kernel coefficients and the
// renormalizability verdict.
#pragma once

#include "kra/diagram.hpp"
#include "kra/rational.hpp"
#include "kra/rconnect.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace kra {

struct GraphProfile {
    int L = 0;
    int I_A = 0;
    int I_chi = 0;
    int I_ghost = 0;
    std::map<std::pair<int, int>, int> V; // (gauge legs i, scalar legs j) -> count
    int V_ghostA = 0;
    int V_ghostChi = 0;
    int E_A = 0;
    int E_chi = 0;
    int E_ghost = 0;

    [[nodiscard]] int external_total() const { return E_A + E_chi + E_ghost; }
};

struct IdentityCheck {
    std::string name;
    long lhs = 0;
    long rhs = 0;
    [[nodiscard]] bool holds() const { return lhs == rhs; }
};

struct ProfileReport {
    std::vector<IdentityCheck> checks; // gauge, scalar and ghost half-edge counts, Euler
    std::vector<std::string> problems; // negative counts
    [[nodiscard]] bool ok() const;
};

ProfileReport validate_profile(const GraphProfile& p);

/// Throws std::invalid_argument unless n is even and >= 4.
void check_expansion_order(int n);

/// Throws std::invalid_argument for vertex valences outside 3..n.
long omega_bound(const GraphProfile& p, int n);
long omega_external(int L, int E_A, int E_chi, int E_ghost, int n);

struct HeatKernelCoefficients {
    Rational c;       // (k+1)! / ((2k+3)(2k+1)!)
    Rational c_prime; // k! / (2k+1)!
};

/// Rational parts; both carry the common factor 1/(8 pi^2).
HeatKernelCoefficients heat_kernel_coefficients(int k);

/// UV falloff exponent of the gauge, scalar and ghost propagators.
std::map<std::string, int> propagator_uv_degrees(int n);

enum class VerdictKind { Renormalizable, Superrenormalizable, Inconclusive };

std::string to_string(VerdictKind v);

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    int n = 4;
    bool irrep_ok = false;
    std::string irrep_diagnostic;
    RConnectReport rconnect;
    std::string reason; // failing hypothesis, empty otherwise
    std::vector<std::string> notes;
};

Verdict renorm_verdict(const KrajewskiDiagram& d, int n, bool strict_bounds = false);

} // namespace kra
