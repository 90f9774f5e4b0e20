#include <set>

#include "doctest.h"
#include "kites/enumerate.hpp"
#include "support/oracle.hpp"

using namespace kites;

TEST_CASE("counts of integral residuated lattices up to isomorphism") {
    CHECK(enumerate_residuated_lattices(1).size() == 1);
    CHECK(enumerate_residuated_lattices(2).size() == 1);
    CHECK(enumerate_residuated_lattices(3).size() == 2);
    // size 4: eight chains (unit laws force the diamond's monoid to be meet,
    // the chain admits 8 associative monotone integral products) plus the
    // Boolean square.
    CHECK(enumerate_residuated_lattices(4).size() == 9);
    CHECK_THROWS_AS(enumerate_residuated_lattices(0), DomainError);
    CHECK_THROWS_AS(enumerate_residuated_lattices(5), DomainError);
}

TEST_CASE("every enumerated algebra is valid and they are pairwise non-isomorphic") {
    for (int n = 1; n <= 4; ++n) {
        const auto all = enumerate_residuated_lattices(n);
        std::set<std::string> forms;
        for (const auto& g : all) {
            CHECK(g.size() == n);
            CHECK(verify_axioms(g).pass);
            CHECK(oracle::adjointness_holds(g));
            CHECK(oracle::residual_tables_match(g));
            forms.insert(canonical_form(g));
        }
        CHECK(forms.size() == all.size());
    }
}

TEST_CASE("the named 4-element instances all appear in the enumeration") {
    const auto all = enumerate_residuated_lattices(4);
    for (const auto& pinned :
         {lukasiewicz_chain(4), godel_chain(4), boolean_2x2(), nc4(), nd4()}) {
        bool found = false;
        for (const auto& g : all)
            if (lattice_isomorphism(pinned, g)) {
                found = true;
                break;
            }
        CHECK(found);
    }
}

TEST_CASE("canonical form separates the two 3-element instances") {
    CHECK(canonical_form(lukasiewicz_chain(3)) != canonical_form(godel_chain(3)));
    CHECK(canonical_form(lukasiewicz_chain(3)) == canonical_form(lukasiewicz_chain(3)));
}

TEST_CASE("lattice_isomorphism finds a relabeling and respects structure") {
    // relabel chain2 by swapping 0 and 1 in every table: 0 becomes the unit
    FiniteResLat swapped(2, 0, {0, 1, 1, 1}, {0, 0, 0, 1}, {0, 1, 1, 1}, {0, 1, 0, 0},
                         {0, 0, 1, 0});
    CHECK(verify_axioms(swapped).pass);
    const auto iso = lattice_isomorphism(chain2(), swapped);
    REQUIRE(iso.has_value());
    CHECK((*iso)[0] == 1);
    CHECK((*iso)[1] == 0);
    CHECK_FALSE(lattice_isomorphism(lukasiewicz_chain(3), godel_chain(3)).has_value());
    CHECK_FALSE(lattice_isomorphism(chain2(), lukasiewicz_chain(3)).has_value());
}

TEST_CASE("builtin corpus resolves by name and is consistent") {
    const auto all = builtin_lattices();
    CHECK(all.size() >= 10);
    std::set<std::string> names;
    for (const auto& [name, g] : all) {
        names.insert(name);
        const auto looked = builtin_lattice(name);
        REQUIRE(looked.has_value());
        CHECK(*looked == g);
    }
    CHECK(names.size() == all.size());
    CHECK_FALSE(builtin_lattice("no-such-algebra").has_value());
}

TEST_CASE("the drastic chain is the unique divisibility failure of its size's chains") {
    // nd4 fails divisibility; the Lukasiewicz and Godel chains of size 4 pass.
    CHECK_FALSE(check_identity(nd4(), Identity::Divisibility).holds);
    CHECK(check_identity(lukasiewicz_chain(4), Identity::Divisibility).holds);
    CHECK(check_identity(godel_chain(4), Identity::Divisibility).holds);
}

TEST_CASE("nonprelinear5 is a 5-element witness against prelinearity") {
    const auto g = nonprelinear5();
    CHECK(g.size() == 5);
    CHECK(verify_axioms(g).pass);
    CHECK_FALSE(check_identity(g, Identity::Prelinearity).holds);
}
