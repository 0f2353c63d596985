#include "kra/builtins.hpp"
#include "kra/dsl.hpp"
#include "kra/rconnect.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace kra;

namespace {

constexpr RepLabel one{0, false};
constexpr RepLabel one_bar{0, true};
constexpr RepLabel two{1, false};
constexpr RepLabel three{2, false};

KrajewskiDiagram load_fixture(const std::string& name) {
    std::ifstream in(std::string(KRA_FIXTURE_DIR) + "/" + name);
    std::ostringstream s;
    s << in.rdbuf();
    auto r = parse(s.str());
    REQUIRE(std::holds_alternative<KrajewskiDiagram>(r));
    return std::get<KrajewskiDiagram>(r);
}

void check_report_against_oracle(const KrajewskiDiagram& d, const RConnectReport& r) {
    const testing::BruteForceLifts oracle(d);
    for (const auto& c : r.cond1) {
        if (c.witness) {
            CHECK(testing::verify_lift(d, c.cycle, *c.witness).empty());
        } else {
            CHECK_FALSE(oracle.lifts(c.cycle));
        }
    }
    for (const auto& p : r.cond2) {
        switch (p.status) {
        case PairStatus::Lifted:
            REQUIRE(p.witness);
            CHECK(testing::verify_pair_lift(d, p.first, p.second, *p.witness).empty());
            break;
        case PairStatus::Failed:
            CHECK_FALSE(oracle.lifts_pair(p.first, p.second));
            break;
        case PairStatus::Exempt:
            CHECK(p.exemption != Exemption::None);
            break;
        }
    }
}

} // namespace

TEST_CASE("standard model is R-connected in dimension 4") {
    const KrajewskiDiagram sm = builtin("sm");
    const RConnectReport r = check_r_connected(sm, 4);
    CHECK(r.verdict);
    CHECK(r.bound == 4);
    REQUIRE(r.cond1.size() == 2);
    for (const auto& c : r.cond1) {
        CHECK(c.witness.has_value());
    }
    CHECK(r.cond1_ok());
    CHECK(r.cond2_ok());
    CHECK(r.counterexamples().empty());
    CHECK(r.cond3.empty());
    check_report_against_oracle(sm, r);
}

TEST_CASE("chain has a single counterexample pair") {
    const KrajewskiDiagram chain = builtin("chain");
    const RConnectReport r = check_r_connected(chain, 4);
    CHECK_FALSE(r.verdict);
    CHECK(r.cond1_ok());
    const auto bad = r.counterexamples();
    REQUIRE(bad.size() == 1);
    CHECK(bad[0]->first.vertices == std::vector<RepLabel>{one, two});
    CHECK(bad[0]->second.vertices == std::vector<RepLabel>{one_bar, three});
    check_report_against_oracle(chain, r);
}

TEST_CASE("repaired chain lifts the former counterexample") {
    const KrajewskiDiagram d = load_fixture("chain_repaired.kra");
    const RConnectReport r = check_r_connected(d, 4);
    CHECK(r.verdict);
    check_report_against_oracle(d, r);
}

TEST_CASE("strict bounds shrink the examined lengths") {
    const RConnectReport r = check_r_connected(builtin("chain"), 4, true);
    CHECK(r.bound == 3);
    CHECK(r.cond2.empty());
    CHECK(r.verdict);
    CHECK_THROWS_AS(check_r_connected(builtin("chain"), 1), std::invalid_argument);
}

TEST_CASE("Yang-Mills diagrams are trivially R-connected") {
    for (int n : {1, 2, 3, 5}) {
        const RConnectReport r = check_r_connected(builtin("ym", n), 4);
        CHECK(r.verdict);
        CHECK(r.cond1.empty());
        CHECK(r.cond2.empty());
    }
}

TEST_CASE("exemption reasons") {
    const FiniteAlgebra a = builtin("sm").algebra;
    const LabelCycle c12{{one, two}};
    const LabelCycle c1b2{{one_bar, two}};
    const LabelCycle c23{{two, three}};
    const LabelCycle c1b3{{one_bar, three}};
    CHECK(exemption_reason(c12, c12, a) == Exemption::SharedTrivialVertex);
    CHECK(exemption_reason(c12, c1b2, a) == Exemption::PseudoRealDoublet);
    CHECK(exemption_reason(c12, c1b3, a) == Exemption::None);
    CHECK(exemption_reason(c23, c23, a) == Exemption::None);
    CHECK(exemption_reason(c1b2, c1b3, a) == Exemption::SharedTrivialVertex);
    CHECK(exemption_check(c12, c12, project(builtin("sm"))));
}

TEST_CASE("witnesses on random diagrams re-project and failures are genuine") {
    testing::Rng rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        CAPTURE(trial);
        const KrajewskiDiagram d = testing::random_diagram(rng, 8);
        REQUIRE(validate(d).ok());
        check_report_against_oracle(d, check_r_connected(d, 4));
    }
}
