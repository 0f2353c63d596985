// Acceptance suite: one PASS/FAIL line per criterion.
#include "kra/builtins.hpp"
#include "kra/dsl.hpp"
#include "kra/invariants.hpp"
#include "kra/powercount.hpp"
#include "kra/rconnect.hpp"
#include "oracles.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace kra;

namespace {

constexpr double kFastLimitSeconds = 1.0;
constexpr double kPropertyLimitSeconds = 30.0;

constexpr RepLabel one{0, false};
constexpr RepLabel one_bar{0, true};
constexpr RepLabel two{1, false};
constexpr RepLabel three{2, false};

constexpr std::uint64_t kSeed = 20240517;

struct Failure {
    std::vector<std::string> reasons;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            reasons.push_back(what);
        }
    }
};

bool all_witnessed(const RConnectReport& r) {
    for (const auto& c : r.cond1) {
        if (!c.witness) {
            return false;
        }
    }
    for (const auto& p : r.cond2) {
        if (p.status == PairStatus::Failed || (p.status == PairStatus::Lifted && !p.witness)) {
            return false;
        }
    }
    return true;
}

void standard_model(Failure& f) {
    const KrajewskiDiagram sm = builtin("sm");
    f.expect(validate(sm).ok(), "sm does not validate");
    f.expect(hilbert_dimension(sm) == 96, "Hilbert dimension " + std::to_string(hilbert_dimension(sm)) + " != 96");
    const auto g = gauge_lie_algebra(sm.algebra);
    const std::vector<SimpleLieFactor> expect{{LieKind::SP, 1, 1}, {LieKind::SU, 3, 2}};
    f.expect(g.simple_factors == expect, "simple factors are not {sp(1), su(3)}");
    f.expect(g.abelian_rank == 1, "abelian rank " + std::to_string(g.abelian_rank) + " != 1");
    const RConnectReport r = check_r_connected(sm, 4);
    f.expect(r.verdict, "not R-connected");
    f.expect(all_witnessed(r), "a condition lacks an explicit witness");
    for (const auto& c : r.cond1) {
        if (c.witness) {
            f.expect(testing::verify_lift(sm, c.cycle, *c.witness).empty(), "cond1 witness does not re-project");
        }
    }
    f.expect(renorm_verdict(sm, 4).kind == VerdictKind::Renormalizable, "verdict is not Renormalizable");
}

void chain(Failure& f) {
    const KrajewskiDiagram d = builtin("chain");
    f.expect(validate(d).ok(), "chain does not validate");
    const RConnectReport r = check_r_connected(d, 4);
    f.expect(!r.verdict, "chain reported R-connected");
    const auto bad = r.counterexamples();
    f.expect(bad.size() == 1, std::to_string(bad.size()) + " counterexample pairs, expected 1");
    if (bad.size() == 1) {
        const std::set<std::vector<RepLabel>> got{bad[0]->first.vertices, bad[0]->second.vertices};
        const std::set<std::vector<RepLabel>> want{{one, two}, {one_bar, three}};
        f.expect(got == want, "counterexample is not {(1 2)(2 1), (1~ 3)(3 1~)}");
    }
    const CoverageReport c = counterterm_coverage(d);
    const auto missing = c.missing();
    f.expect(missing.size() == 1, std::to_string(missing.size()) + " missing terms, expected 1");
    if (missing.size() == 1) {
        const InvariantTerm& t = c.required[missing[0]->required];
        f.expect(t.kind == TermKind::Quartic && t.blocks.size() == 2, "missing term is not a double-trace quartic");
    }
}

void yang_mills(Failure& f) {
    for (int n : {2, 3, 5}) {
        const KrajewskiDiagram d = builtin("ym", n);
        const std::string tag = "ym:" + std::to_string(n);
        f.expect(validate(d).ok(), tag + " does not validate");
        f.expect(check_r_connected(d, 4).verdict, tag + " not R-connected");
        f.expect(renorm_verdict(d, 8).kind == VerdictKind::Superrenormalizable, tag + " not Superrenormalizable at n=8");
    }
}

void power_counting(Failure& f) {
    const int orders[] = {4, 6, 8, 10};
    // (a) one loop, four external legs of any kind
    for (int n : orders) {
        for (int ea = 0; ea <= 4; ++ea) {
            for (int ec = 0; ea + ec <= 4; ++ec) {
                const int eg = 4 - ea - ec;
                const long w = omega_external(1, ea, ec, eg, n);
                f.expect(w <= 0, "(a) omega = " + std::to_string(w) + " at n=" + std::to_string(n));
            }
        }
    }
    // (b) more than four external legs
    for (int n : orders) {
        for (int L = 1; L <= 10; ++L) {
            for (int e = 5; e <= 20; ++e) {
                for (int ea = 0; ea <= e; ++ea) {
                    const long w = omega_external(L, ea, e - ea, 0, n);
                    f.expect(w < 0, "(b) omega = " + std::to_string(w) + " at n=" + std::to_string(n) +
                                        ", L=" + std::to_string(L) + ", E=" + std::to_string(e));
                }
                f.expect(omega_external(L, 0, 0, e, n) < 0, "(b) ghost legs only");
            }
        }
    }
    // (c) two or more loops at n >= 8
    for (int n : {8, 10, 12}) {
        for (int L = 2; L <= 10; ++L) {
            for (int e = 0; e <= 10; ++e) {
                const long w = omega_external(L, e, 0, 0, n);
                f.expect(w < 0, "(c) omega = " + std::to_string(w) + " at n=" + std::to_string(n) +
                                    ", L=" + std::to_string(L) + ", E=" + std::to_string(e));
            }
        }
    }
}

void coefficients(Failure& f) {
    const auto h = heat_kernel_coefficients(0);
    f.expect(h.c == Rational(1, 3), "c_0 = " + to_string(h.c));
    f.expect(h.c_prime == Rational(1), "c'_0 = " + to_string(h.c_prime));
    // f_0/(24 pi^2) = c_0 f_0/(8 pi^2) and f(0)/(8 pi^2) = c'_0 f(0)/(8 pi^2)
    f.expect(h.c / 8 == Rational(1, 24), "c_0/(8 pi^2) != 1/(24 pi^2)");
}

std::vector<std::pair<std::string, KrajewskiDiagram>> property_corpus(testing::Rng& rng) {
    std::vector<std::pair<std::string, KrajewskiDiagram>> corpus;
    for (const auto& name : builtin_names()) {
        if (name == "ym") {
            for (int n : {1, 2, 3, 5}) {
                corpus.emplace_back("ym:" + std::to_string(n), builtin(name, n));
            }
        } else {
            corpus.emplace_back(name, builtin(name));
        }
    }
    for (int k = 0; k < 50; ++k) {
        corpus.emplace_back("random #" + std::to_string(k), testing::random_diagram(rng, 8));
    }
    return corpus;
}

void properties(Failure& f) {
    testing::Rng rng(kSeed);

    // (a) cycle enumeration against brute force
    std::uniform_int_distribution<int> size(1, 7);
    std::uniform_real_distribution<double> density(0.15, 0.95);
    for (int k = 0; k < 200; ++k) {
        const int n = size(rng);
        const auto edges = testing::random_simple_graph(rng, n, density(rng));
        const auto got = enumerate_cycles(n, edges, static_cast<std::size_t>(n));
        const std::set<std::vector<int>> got_set(got.begin(), got.end());
        f.expect(got_set.size() == got.size() && got_set == testing::brute_force_cycles(n, edges, n),
                 "(a) cycle sets differ on random graph #" + std::to_string(k));
    }

    // (b) and (c) on builtins plus random diagrams
    for (const auto& [name, d] : property_corpus(rng)) {
        f.expect(validate(d).ok(), "(b) " + name + " does not validate");
        const RConnectReport r = check_r_connected(d, 4);
        const testing::BruteForceLifts oracle(d);
        for (const auto& c : r.cond1) {
            const bool ok = c.witness ? testing::verify_lift(d, c.cycle, *c.witness).empty() : !oracle.lifts(c.cycle);
            f.expect(ok, "(b) " + name + ": cycle lift disagrees with the verifier");
        }
        for (const auto& p : r.cond2) {
            bool ok = true;
            if (p.status == PairStatus::Lifted) {
                ok = p.witness && testing::verify_pair_lift(d, p.first, p.second, *p.witness).empty();
            } else if (p.status == PairStatus::Failed) {
                ok = !oracle.lifts_pair(p.first, p.second);
            }
            f.expect(ok, "(b) " + name + ": pair lift disagrees with the verifier");
        }
        const bool complete = counterterm_coverage(d).complete();
        f.expect(complete == (r.cond1_ok() && r.cond2_ok()), "(c) " + name + ": coverage and conditions disagree");
    }

    // (d) round trip of every fixture
    std::size_t fixtures = 0;
    for (const auto& entry : std::filesystem::directory_iterator(KRA_FIXTURE_DIR)) {
        if (entry.path().extension() != ".kra") {
            continue;
        }
        std::ifstream in(entry.path());
        std::ostringstream text;
        text << in.rdbuf();
        const auto parsed = parse(text.str());
        const std::string name = entry.path().filename().string();
        if (name == "nonsense.kra") {
            f.expect(std::holds_alternative<ParseError>(parsed), "(d) nonsense.kra parsed");
            continue;
        }
        ++fixtures;
        if (!std::holds_alternative<KrajewskiDiagram>(parsed)) {
            f.expect(false, "(d) " + name + " does not parse");
            continue;
        }
        const auto& d = std::get<KrajewskiDiagram>(parsed);
        const std::string canonical = serialize(d);
        const auto again = parse(canonical);
        f.expect(std::holds_alternative<KrajewskiDiagram>(again) &&
                     structurally_equal(d, std::get<KrajewskiDiagram>(again)) &&
                     serialize(std::get<KrajewskiDiagram>(again)) == canonical,
                 "(d) " + name + " does not round trip");
    }
    f.expect(fixtures >= 5, "(d) only " + std::to_string(fixtures) + " fixtures found");

    // (e) counting identities
    for (int k = 0; k < 500; ++k) {
        const GraphProfile p = testing::random_consistent_profile(rng);
        f.expect(validate_profile(p).ok(), "(e) consistent profile #" + std::to_string(k) + " rejected");
        f.expect(!validate_profile(testing::mutate_profile(rng, p)).ok(),
                 "(e) mutated profile #" + std::to_string(k) + " accepted");
    }
}

struct Criterion {
    std::string id;
    std::string title;
    double limit_seconds;
    std::function<void(Failure&)> body;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"1", "Standard Model pipeline", kFastLimitSeconds, standard_model},
        {"2", "counterexample pipeline", kFastLimitSeconds, chain},
        {"3", "Yang-Mills pipeline", kFastLimitSeconds, yang_mills},
        {"4", "power-counting table", kFastLimitSeconds, power_counting},
        {"5", "heat-kernel coefficient cross-check", kFastLimitSeconds, coefficients},
        {"6", "property suites", kPropertyLimitSeconds, properties},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Failure f;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(f);
        } catch (const std::exception& ex) {
            f.reasons.push_back(std::string("exception: ") + ex.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds >= c.limit_seconds) {
            f.reasons.push_back("took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s");
        }
        const bool pass = f.reasons.empty();
        failed += pass ? 0 : 1;
        std::cout << (pass ? "PASS" : "FAIL") << "  " << c.id << "  " << c.title << "  (" << static_cast<long>(seconds * 1000)
                  << " ms)";
        if (!pass) {
            std::cout << "  " << f.reasons.front();
            if (f.reasons.size() > 1) {
                std::cout << " [+" << f.reasons.size() - 1 << " more]";
            }
        }
        std::cout << '\n';
    }
    return failed == 0 ? 0 : 1;
}
