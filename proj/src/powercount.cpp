#include "kra/powercount.hpp"

#include <algorithm>
#include <stdexcept>

namespace kra {

bool ProfileReport::ok() const {
    return problems.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds(); });
}

ProfileReport validate_profile(const GraphProfile& p) {
    ProfileReport r;
    const std::pair<const char*, int> counts[] = {
        {"L", p.L},         {"I_A", p.I_A},           {"I_chi", p.I_chi}, {"I_ghost", p.I_ghost},
        {"V_ghostA", p.V_ghostA}, {"V_ghostChi", p.V_ghostChi}, {"E_A", p.E_A},   {"E_chi", p.E_chi},
        {"E_ghost", p.E_ghost}};
    for (const auto& [name, value] : counts) {
        if (value < 0) {
            r.problems.push_back(std::string(name) + " is negative");
        }
    }
    long gauge_legs = 0;
    long scalar_legs = 0;
    long vertices = 0;
    for (const auto& [ij, count] : p.V) {
        if (count < 0 || ij.first < 0 || ij.second < 0) {
            r.problems.push_back("V(" + std::to_string(ij.first) + "," + std::to_string(ij.second) + ") is negative");
        }
        gauge_legs += static_cast<long>(ij.first) * count;
        scalar_legs += static_cast<long>(ij.second) * count;
        vertices += count;
    }
    r.checks.push_back({"gauge half-edges", 2L * p.I_A + p.E_A, gauge_legs + p.V_ghostA});
    r.checks.push_back({"scalar half-edges", 2L * p.I_chi + p.E_chi, scalar_legs + p.V_ghostChi});
    r.checks.push_back({"ghost half-edges", 2L * p.I_ghost + p.E_ghost, 2L * p.V_ghostA + 2L * p.V_ghostChi});
    r.checks.push_back({"Euler", p.L,
                        static_cast<long>(p.I_A) + p.I_chi + p.I_ghost - vertices - p.V_ghostA - p.V_ghostChi + 1});
    return r;
}

void check_expansion_order(int n) {
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("expansion order n must be even and at least 4, got " + std::to_string(n));
    }
}

long omega_bound(const GraphProfile& p, int n) {
    check_expansion_order(n);
    long omega = 4L * p.L - static_cast<long>(n - 2) * (p.I_A + p.I_chi + p.I_ghost);
    for (const auto& [ij, count] : p.V) {
        const int valence = ij.first + ij.second;
        if (valence < 3 || valence > n) {
            throw std::invalid_argument("vertex (" + std::to_string(ij.first) + "," + std::to_string(ij.second) +
                                        ") has valence outside 3.." + std::to_string(n));
        }
        omega += static_cast<long>(count) * (n - valence);
    }
    omega += static_cast<long>(p.V_ghostA) * (n - 3) + static_cast<long>(p.V_ghostChi) * (n - 4);
    return omega;
}

long omega_external(int L, int E_A, int E_chi, int E_ghost, int n) {
    if (L < 0) {
        throw std::invalid_argument("loop order must be non-negative");
    }
    return static_cast<long>(4 - n) * (L - 1) + 4 - (E_A + E_chi + E_ghost);
}

HeatKernelCoefficients heat_kernel_coefficients(int k) {
    if (k < 0) {
        throw std::invalid_argument("heat-kernel index must be non-negative");
    }
    auto factorial = [](int m) {
        boost::multiprecision::cpp_int f = 1;
        for (int i = 2; i <= m; ++i) {
            f *= i;
        }
        return f;
    };
    HeatKernelCoefficients out;
    out.c = Rational(factorial(k + 1), (2 * k + 3) * factorial(2 * k + 1));
    out.c_prime = Rational(factorial(k), factorial(2 * k + 1));
    return out;
}

std::map<std::string, int> propagator_uv_degrees(int n) {
    check_expansion_order(n);
    return {{"gauge", -(n - 2)}, {"ghost", -(n - 2)}, {"higgs", -(n - 2)}};
}

std::string to_string(VerdictKind v) {
    switch (v) {
    case VerdictKind::Renormalizable: return "Renormalizable";
    case VerdictKind::Superrenormalizable: return "Superrenormalizable";
    case VerdictKind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

Verdict renorm_verdict(const KrajewskiDiagram& d, int n, bool strict_bounds) {
    check_expansion_order(n);
    Verdict v;
    v.n = n;
    const auto irrep = irrep_correspondence_check(d.algebra);
    v.irrep_ok = irrep.holds;
    v.irrep_diagnostic = irrep.diagnostic;
    v.rconnect = check_r_connected(d, 4, strict_bounds);
    if (!v.irrep_ok) {
        v.reason = "irreducible-representation hypothesis fails: " + irrep.diagnostic;
    } else if (!v.rconnect.verdict) {
        v.reason = "R-connectedness fails";
    }
    if (v.reason.empty()) {
        v.kind = n >= 8 ? VerdictKind::Superrenormalizable : VerdictKind::Renormalizable;
    } else {
        v.notes.push_back("the criterion is sufficient only; failure does not imply non-renormalizability");
    }
    v.notes.push_back("renormalizable as a gauge theory only, not multiplicatively: counterterm coefficients may "
                      "differ from those of the spectral action");
    if (n == 4) {
        v.notes.push_back("n = 4 is not strictly a higher-derivative gauge theory");
    }
    return v;
}

} // namespace kra
