#include <algorithm>

#include "doctest.h"
#include "kites/enumerate.hpp"
#include "kites/lattice.hpp"
#include "support/oracle.hpp"

using namespace kites;

TEST_CASE("construction validates table shapes and entry ranges") {
    CHECK_THROWS_AS(FiniteResLat(2, 0, {0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 1}, {1, 1, 0, 1},
                                 {1, 1, 0, 1}),
                    StructuralError);
    CHECK_THROWS_AS(FiniteResLat(2, 0, {0, 0, 0, 7}, {0, 0, 0, 1}, {0, 0, 0, 1}, {1, 1, 0, 1},
                                 {1, 1, 0, 1}),
                    StructuralError);
    CHECK_THROWS_AS(FiniteResLat(2, 5, {0, 0, 0, 1}, {0, 1, 1, 1}, {0, 0, 0, 1}, {1, 1, 0, 1},
                                 {1, 1, 0, 1}),
                    StructuralError);
    CHECK_NOTHROW(chain2());
}

TEST_CASE("default construction is the one-element algebra") {
    FiniteResLat g;
    CHECK(g.trivial());
    CHECK(g.unit() == 0);
    CHECK(g.mul(0, 0) == 0);
    CHECK(verify_axioms(g).pass);
}

TEST_CASE("every builtin instance satisfies the axioms") {
    for (const auto& [name, g] : builtin_lattices()) {
        CAPTURE(name);
        const auto rep = verify_axioms(g);
        if (!rep.pass) {
            const auto* f = rep.first_failure();
            REQUIRE(f != nullptr);
            FAIL("axiom failed: ", f->law, " ", f->detail);
        }
        CHECK(rep.pass);
    }
}

TEST_CASE("axiom checker pinpoints broken tables") {
    // chain2 with mul corrupted so that 1*1 = 0: the unit law fails.
    FiniteResLat broken(2, 1, {0, 0, 0, 1}, {0, 1, 1, 1}, {0, 0, 0, 0}, {1, 1, 1, 1},
                        {1, 1, 1, 1});
    const auto rep = verify_axioms(broken);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.first_failure() != nullptr);
}

TEST_CASE("order, bottom and unit behave on the 3-element chain") {
    const auto g = lukasiewicz_chain(3);
    CHECK(g.size() == 3);
    CHECK(g.unit() == 2);
    CHECK(g.bottom() == 0);
    CHECK(g.leq(0, 1));
    CHECK(g.leq(1, 2));
    CHECK_FALSE(g.leq(2, 1));
    // integrality: unit is the top
    for (int x = 0; x < 3; ++x) CHECK(g.leq(x, g.unit()));
}

TEST_CASE("stored residual tables equal the max characterization") {
    for (const auto& [name, g] : builtin_lattices()) {
        CAPTURE(name);
        CHECK(oracle::residual_tables_match(g));
    }
}

TEST_CASE("adjointness holds in every builtin, checked from first principles") {
    for (const auto& [name, g] : builtin_lattices()) {
        CAPTURE(name);
        CHECK(oracle::adjointness_holds(g));
    }
}

TEST_CASE("multiplication table of the 3-element Lukasiewicz chain") {
    const auto g = lukasiewicz_chain(3);
    // mul(x, y) = max(x + y - 2, 0)
    CHECK(g.mul(1, 1) == 0);
    CHECK(g.mul(1, 2) == 1);
    CHECK(g.mul(2, 2) == 2);
    CHECK(g.ldiv(1, 0) == 1);  // 1 \ 0 = max{y : mul(1,y) <= 0} = 1
    CHECK(g.ldiv(2, 1) == 1);
}

TEST_CASE("conjugates witness non-commutativity of nc4") {
    const auto g = nc4();
    bool mul_comm = true;
    for (int x = 0; x < g.size() && mul_comm; ++x)
        for (int y = 0; y < g.size(); ++y)
            if (g.mul(x, y) != g.mul(y, x)) {
                mul_comm = false;
                break;
            }
    CHECK_FALSE(mul_comm);
    bool conj_differ = false;
    for (int x = 0; x < g.size() && !conj_differ; ++x)
        for (int y = 0; y < g.size(); ++y)
            if (left_conjugate(g, y, x) != right_conjugate(g, y, x)) conj_differ = true;
    CHECK(conj_differ);
    // In any commutative instance both conjugates fix their argument's class:
    const auto l3 = lukasiewicz_chain(3);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            CHECK(left_conjugate(l3, y, x) == right_conjugate(l3, y, x));
            CHECK(l3.leq(x, left_conjugate(l3, y, x)));
        }
}

TEST_CASE("identity checks: divisibility") {
    CHECK(check_identity(lukasiewicz_chain(3), Identity::Divisibility).holds);
    CHECK(check_identity(godel_chain(4), Identity::Divisibility).holds);
    const auto bad = check_identity(nd4(), Identity::Divisibility);
    CHECK_FALSE(bad.holds);
    // the witness really violates one of the two divisibility equations
    const auto g = nd4();
    const int x = bad.witness[0], y = bad.witness[1];
    const bool left = g.mul(x, g.ldiv(x, y)) == g.meet(x, y);
    const bool right = g.mul(g.rdiv(y, x), x) == g.meet(x, y);
    CHECK((!left || !right));
}

TEST_CASE("identity checks: prelinearity") {
    CHECK(check_identity(lukasiewicz_chain(4), Identity::Prelinearity).holds);
    CHECK(check_identity(boolean_2x2(), Identity::Prelinearity).holds);
    const auto bad = check_identity(nonprelinear5(), Identity::Prelinearity);
    CHECK_FALSE(bad.holds);
    const auto g = nonprelinear5();
    const int x = bad.witness[0], y = bad.witness[1];
    const bool first = g.join(g.ldiv(x, y), g.ldiv(y, x)) == g.unit();
    const bool second = g.join(g.rdiv(y, x), g.rdiv(x, y)) == g.unit();
    CHECK((!first || !second));
}

TEST_CASE("no 4-element instance fails prelinearity") {
    for (const auto& g : enumerate_residuated_lattices(4))
        CHECK(check_identity(g, Identity::Prelinearity).holds);
}

TEST_CASE("classification flags") {
    const auto l3 = classify_algebra(lukasiewicz_chain(3));
    CHECK(l3.integral_rl);
    CHECK(l3.mv);
    CHECK(l3.pseudo_mv);
    CHECK(l3.pseudo_bl);
    CHECK(l3.commutative);
    CHECK(l3.prelinear);
    CHECK(l3.divisible);

    const auto g3 = classify_algebra(godel_chain(3));
    CHECK(g3.integral_rl);
    CHECK(g3.gbl);
    CHECK(g3.basic_pseudo_hoop);
    CHECK(g3.pseudo_bl);
    CHECK_FALSE(g3.pseudo_mv);  // double division does not recover joins

    const auto nd = classify_algebra(nd4());
    CHECK(nd.integral_rl);
    CHECK_FALSE(nd.divisible);
    CHECK(nd.prelinear);

    const auto nc = classify_algebra(nc4());
    CHECK_FALSE(nc.commutative);

    const auto np = classify_algebra(nonprelinear5());
    CHECK_FALSE(np.prelinear);
    CHECK_FALSE(np.basic_pseudo_hoop);

    CHECK_FALSE(classify_algebra(boolean_2x2()).to_string().empty());
}
