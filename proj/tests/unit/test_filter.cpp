#include <algorithm>

#include "doctest.h"
#include "kites/enumerate.hpp"
#include "kites/filter.hpp"
#include "support/oracle.hpp"

using namespace kites;

TEST_CASE("filter laws on the 4-element Godel chain") {
    const auto g = godel_chain(4);  // 0 < 1 < 2 < e=3, mul = min
    CHECK(is_filter(g, {3}));
    CHECK(is_filter(g, {2, 3}));
    CHECK(is_filter(g, {0, 1, 2, 3}));
    CHECK_FALSE(is_filter(g, {2}));        // does not contain the unit
    CHECK_FALSE(is_filter(g, {1, 3}));     // not upward closed (2 missing)
    CHECK_FALSE(is_filter(g, {0, 3}));     // not upward closed
    // the Lukasiewicz 4-chain kills multiplicative closure: 2*2 = 1
    const auto l = lukasiewicz_chain(4);
    CHECK_FALSE(is_filter(l, {2, 3}));
    CHECK(is_filter(l, {3}));
    CHECK(is_filter(l, {0, 1, 2, 3}));
}

TEST_CASE("normality adds conjugation closure") {
    // every filter of a commutative instance is normal
    const auto g = godel_chain(4);
    CHECK(is_normal_filter(g, {2, 3}));
    // nc4: 0 < a=1 < b=2 < e=3 with 1*2 = 0, 2*1 = 1, 2*2 = 2.
    const auto n = nc4();
    CHECK(is_filter(n, {2, 3}));
    const bool normal23 = is_normal_filter(n, {2, 3});
    // cross-check against the subset oracle
    const auto oracle_filters = oracle::normal_filters_by_subsets(n);
    const bool oracle23 = std::count(oracle_filters.begin(), oracle_filters.end(),
                                     std::vector<int>{2, 3}) > 0;
    CHECK(normal23 == oracle23);
}

TEST_CASE("all_normal_filters agrees with the subset oracle on every builtin") {
    for (const auto& [name, g] : builtin_lattices()) {
        CAPTURE(name);
        const auto got = all_normal_filters(g);
        auto want = oracle::normal_filters_by_subsets(g);
        CHECK(got.size() == want.size());
        for (const auto& f : got) {
            CHECK(std::count(want.begin(), want.end(), f.members) == 1);
            CHECK(is_normal_filter(g, f.members));
        }
    }
}

TEST_CASE("filter_generated produces the least closure") {
    const auto g = godel_chain(4);
    CHECK(filter_generated(g, {}, true).members == std::vector<int>{3});
    CHECK(filter_generated(g, {2}, true).members == std::vector<int>{2, 3});
    CHECK(filter_generated(g, {0}, true).members == std::vector<int>{0, 1, 2, 3});
    const auto l = lukasiewicz_chain(4);
    // 2*2 = 1, 1*1 = 0 so the filter generated by 2 is everything
    CHECK(filter_generated(l, {2}, true).members == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("congruence from a filter, and back") {
    const auto g = godel_chain(4);
    const LatticeFilter f{{2, 3}};
    const auto c = congruence_from_filter(g, f);
    CHECK(is_congruence(g, c));
    CHECK(c.classes == 3);  // {0}, {1}, {2,3}
    CHECK(c.class_of[2] == c.class_of[3]);
    CHECK(c.class_of[0] != c.class_of[1]);
    CHECK(filter_from_congruence(g, c) == f);
}

TEST_CASE("quotient of the Godel 4-chain by its upper filter is the Godel 3-chain") {
    const auto g = godel_chain(4);
    const auto q = quotient(g, LatticeFilter{{2, 3}});
    CHECK(q.size() == 3);
    CHECK(verify_axioms(q).pass);
    CHECK(lattice_isomorphism(q, godel_chain(3)).has_value());
    // quotient by the trivial filter is the algebra itself
    const auto same = quotient(g, LatticeFilter{{3}});
    CHECK(lattice_isomorphism(same, g).has_value());
    // quotient by everything is trivial
    CHECK(quotient(g, LatticeFilter{{0, 1, 2, 3}}).trivial());
}

TEST_CASE("subdirect irreducibility matches the partition oracle") {
    for (const auto& [name, g] : builtin_lattices()) {
        CAPTURE(name);
        const auto got = is_subdirectly_irreducible(g);
        const auto want = oracle::si_by_partitions(g);
        CHECK(got.si == want.si);
        if (got.si) REQUIRE(got.monolith.has_value());
    }
    for (int n = 1; n <= 4; ++n)
        for (const auto& g : enumerate_residuated_lattices(n)) {
            CHECK(is_subdirectly_irreducible(g).si == oracle::si_by_partitions(g).si);
        }
}

TEST_CASE("known subdirect irreducibility verdicts") {
    CHECK(is_subdirectly_irreducible(chain2()).si);
    CHECK(is_subdirectly_irreducible(lukasiewicz_chain(3)).si);
    CHECK(is_subdirectly_irreducible(lukasiewicz_chain(4)).si);
    const auto t = is_subdirectly_irreducible(trivial_lattice());
    CHECK_FALSE(t.si);
    CHECK(t.trivial_algebra);
    // the Boolean square decomposes as chain2 x chain2
    CHECK_FALSE(is_subdirectly_irreducible(boolean_2x2()).si);
    // the Godel chain of size >= 3 has the congruence chain, still si
    CHECK(is_subdirectly_irreducible(godel_chain(3)).si);
}

TEST_CASE("direct products multiply sizes and lose irreducibility") {
    const auto p = direct_product({chain2(), chain2()});
    CHECK(p.size() == 4);
    CHECK(verify_axioms(p).pass);
    CHECK(lattice_isomorphism(p, boolean_2x2()).has_value());
    CHECK_FALSE(is_subdirectly_irreducible(p).si);
    const auto q = direct_product({lukasiewicz_chain(3), chain2()});
    CHECK(q.size() == 6);
    CHECK(verify_axioms(q).pass);
    CHECK(oracle::adjointness_holds(q));
    CHECK_THROWS_AS(direct_product({godel_chain(4), godel_chain(4)}, 10), ResourceError);
}
