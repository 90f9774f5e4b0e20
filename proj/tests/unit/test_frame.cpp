#include <set>

#include "doctest.h"
#include "kites/frame.hpp"
#include "support/oracle.hpp"

using namespace kites;

TEST_CASE("finite frame construction is validated") {
    // lambda must be injective
    CHECK_THROWS_AS(Frame::finite(3, {0, 1}, {{0, 2}, {1, 2}}), StructuralError);
    // lambda domain must equal i1
    CHECK_THROWS_AS(Frame::finite(3, {0, 1}, {{0, 1}}), StructuralError);
    CHECK_THROWS_AS(Frame::finite(3, {0}, {{0, 1}, {1, 2}}), StructuralError);
    // vertices must be in range
    CHECK_THROWS_AS(Frame::finite(2, {0, 5}, {{0, 1}, {5, 0}}), StructuralError);
    CHECK_THROWS_AS(Frame::finite(2, {0}, {{0, 9}}), StructuralError);
    CHECK_NOTHROW(Frame::finite(3, {0, 1}, {{0, 1}, {1, 2}}));
}

TEST_CASE("level sets of finite frames follow the recursion") {
    const auto p = path_frame(4);  // 0 -> 1 -> 2 -> 3
    CHECK(p.level_elems(0) == std::vector<int>{0, 1, 2, 3});
    CHECK(p.level_elems(1) == std::vector<int>{0, 1, 2});
    CHECK(p.level_elems(2) == std::vector<int>{0, 1});
    CHECK(p.level_elems(3) == std::vector<int>{0});
    CHECK(p.level_elems(4).empty());
    CHECK(p.level_elems(7).empty());

    const auto c = cycle_frame(3);
    for (int n = 0; n <= 5; ++n) CHECK(c.level_elems(n) == std::vector<int>{0, 1, 2});

    const auto t = singleton_tail();
    CHECK(t.level_elems(0) == std::vector<int>{0});
    CHECK(t.level_elems(1).empty());
    CHECK(t.level_elems(2).empty());

    const auto l = singleton_loop();
    CHECK(l.level_elems(5) == std::vector<int>{0});

    CHECK(empty_frame().level_elems(0).empty());
}

TEST_CASE("level sets of the symbolic frames in closed form") {
    const auto z = Frame::z_shift();
    const auto nf = Frame::n_forward();
    const auto nb = Frame::n_backward();
    for (long long n = 0; n <= 4; ++n) {
        CHECK(z.level_set(n) == IndexSet::all_z());
        CHECK(nf.level_set(n) == IndexSet::from_n(0));
        CHECK(nb.level_set(n) == IndexSet::from_n(n));
    }
    CHECK(z.level_set(2).contains(-17));
    CHECK(nb.level_set(2).contains(2));
    CHECK_FALSE(nb.level_set(2).contains(1));
}

TEST_CASE("lambda powers and their inverses") {
    const auto p = path_frame(4);
    CHECK(p.lambda_power(2, 0) == 2);
    CHECK(p.lambda_power(3, 0) == 3);
    CHECK_FALSE(p.lambda_power(2, 2).has_value());  // walks off the end
    CHECK(p.lambda_power_inv(2, 2) == 0);
    CHECK_FALSE(p.lambda_power_inv(1, 0).has_value());  // 0 has no predecessor

    const auto z = Frame::z_shift();
    CHECK(z.lambda_power(5, -3) == 2);
    CHECK(z.lambda_power_inv(5, 2) == -3);

    const auto nf = Frame::n_forward();
    CHECK(nf.lambda_power(2, 1) == 3);
    CHECK(nf.lambda_power_inv(2, 1).has_value() == false);  // would be negative
    CHECK(nf.lambda_power_inv(2, 5) == 3);

    const auto nb = Frame::n_backward();
    CHECK(nb.lambda_power(2, 5) == 3);
    CHECK_FALSE(nb.lambda_power(2, 1).has_value());  // 0 leaves I1
    CHECK(nb.lambda_power_inv(2, 1) == 3);
}

TEST_CASE("level images of lambda") {
    const auto p = path_frame(4);
    // I_1 = {0,1,2}; lambda(I_1) = {1,2,3}
    CHECK(p.lambda_level_image(1, 1) == IndexSet::explicit_set({1, 2, 3}));
    CHECK(p.lambda_level_image(1, 2) == IndexSet::explicit_set({1, 2}));
    CHECK(p.lambda_level_image(2, 2) == IndexSet::explicit_set({2, 3}));
    CHECK(p.lambda_level_image(0, 1) == IndexSet::explicit_set({0, 1, 2}));

    CHECK(Frame::z_shift().lambda_level_image(3, 4) == IndexSet::all_z());
    CHECK(Frame::n_forward().lambda_level_image(2, 3) == IndexSet::from_n(2));
    CHECK(Frame::n_backward().lambda_level_image(2, 3) == IndexSet::from_n(1));
}

TEST_CASE("connectivity matches the brute-force orbit search") {
    for (int m = 1; m <= 5; ++m)
        for (const auto& f : enumerate_frames(m)) {
            CAPTURE(canonical_frame_form(f));
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    CHECK(connected(f, i, j) == oracle::orbit_connected(f, i, j));
            CHECK(static_cast<int>(connected_components(f).size()) ==
                  oracle::weak_component_count(f));
        }
    // symbolic frames are connected everywhere
    CHECK(connected(Frame::z_shift(), -4, 9));
    CHECK(connected(Frame::n_forward(), 0, 7));
    CHECK(connected(Frame::n_backward(), 3, 0));
}

TEST_CASE("orbit connectivity equals weak connectivity on injective frames") {
    // Because lambda is injective, every weak component is a single path or
    // cycle, so two vertices in one component always have meeting orbits.
    for (int m = 1; m <= 5; ++m)
        for (const auto& f : enumerate_frames(m)) {
            oracle::UnionFind uf(m);
            for (int i : f.i1()) uf.unite(i, f.lambda(i));
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    CHECK(oracle::orbit_connected(f, i, j) == (uf.find(i) == uf.find(j)));
        }
}

TEST_CASE("frame classification tags") {
    CHECK(classify_frame(empty_frame()).tag == FrameTag::Empty);
    CHECK(classify_frame(singleton_loop()).tag == FrameTag::SingletonLoop);
    CHECK(classify_frame(singleton_tail()).tag == FrameTag::SingletonTail);
    const auto c = classify_frame(cycle_frame(4));
    CHECK(c.tag == FrameTag::Cycle);
    CHECK(c.cycle_len == 4);
    const auto p = classify_frame(path_frame(3));
    CHECK(p.tag == FrameTag::Path);
    CHECK(p.path_len == 3);
    CHECK(classify_frame(loops_frame(2)).tag == FrameTag::Disconnected);
    CHECK(classify_frame(Frame::z_shift()).tag == FrameTag::ZShift);
    CHECK(classify_frame(Frame::n_forward()).tag == FrameTag::NForward);
    CHECK(classify_frame(Frame::n_backward()).tag == FrameTag::NBackward);
}

TEST_CASE("si_shape is exactly connectedness") {
    for (int m = 0; m <= 6; ++m)
        for (const auto& f : enumerate_frames(m)) {
            CAPTURE(canonical_frame_form(f));
            const bool connected_frame = m == 0 || oracle::weak_component_count(f) == 1;
            CHECK(classify_frame(f).si_shape == connected_frame);
        }
}

TEST_CASE("coverage invariant I0 = I1 + image holds except at the singleton tail") {
    CHECK(i0_covered_by_i1_and_image(cycle_frame(5)));
    CHECK(i0_covered_by_i1_and_image(path_frame(2)));
    CHECK(i0_covered_by_i1_and_image(path_frame(4)));
    CHECK(i0_covered_by_i1_and_image(singleton_loop()));
    CHECK(i0_covered_by_i1_and_image(empty_frame()));
    CHECK_FALSE(i0_covered_by_i1_and_image(singleton_tail()));
    // and fails exactly on frames with an isolated vertex
    for (int m = 1; m <= 5; ++m)
        for (const auto& f : enumerate_frames(m)) {
            bool isolated = false;
            for (const auto& comp : connected_components(f))
                if (comp.size() == 1 && !f.in_i1(comp[0])) isolated = true;
            CHECK(i0_covered_by_i1_and_image(f) == !isolated);
        }
}

TEST_CASE("frame isomorphisms: found, validated, refused") {
    // a 4-cycle with scrambled labels
    const auto scrambled = Frame::finite(4, {0, 1, 2, 3}, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
    const auto t = find_frame_isomorphism(cycle_frame(4), scrambled);
    REQUIRE(t.has_value());
    CHECK(frame_isomorphic(cycle_frame(4), scrambled, *t));
    CHECK(frame_isomorphic(cycle_frame(4), scrambled));

    CHECK_FALSE(find_frame_isomorphism(cycle_frame(3), path_frame(3)).has_value());
    CHECK_FALSE(frame_isomorphic(cycle_frame(3), cycle_frame(4)));
    CHECK_FALSE(frame_isomorphic(loops_frame(2), cycle_frame(2)));

    // an invalid witness is rejected even between isomorphic frames
    CHECK_FALSE(frame_isomorphic(cycle_frame(4), cycle_frame(4), {0, 2, 1, 3}));
    CHECK(frame_isomorphic(cycle_frame(4), cycle_frame(4), {1, 2, 3, 0}));

    // symbolic frames compare by kind
    CHECK(frame_isomorphic(Frame::z_shift(), Frame::z_shift()));
    CHECK_FALSE(frame_isomorphic(Frame::z_shift(), Frame::n_forward()));
}

TEST_CASE("canonical forms name the component multiset") {
    CHECK(canonical_frame_form(cycle_frame(3)) == "finite:C3");
    CHECK(canonical_frame_form(path_frame(3)) == "finite:P3");
    CHECK(canonical_frame_form(singleton_loop()) == "finite:C1");
    CHECK(canonical_frame_form(singleton_tail()) == "finite:P1");
    CHECK(canonical_frame_form(loops_frame(2)) == "finite:C1,C1");
    CHECK(canonical_frame_form(empty_frame()) == "finite:");
    CHECK(canonical_frame_form(Frame::z_shift()) == "z-shift");
    // canonical form is a complete isomorphism invariant for injective frames
    for (int m = 1; m <= 5; ++m) {
        const auto all = enumerate_frames(m);
        for (size_t a = 0; a < all.size(); ++a)
            for (size_t b = 0; b < all.size(); ++b)
                CHECK((canonical_frame_form(all[a]) == canonical_frame_form(all[b])) ==
                      frame_isomorphic(all[a], all[b]));
    }
}

TEST_CASE("frame enumeration counts two-colored partitions") {
    // components are paths or cycles, so frames on m vertices up to
    // isomorphism correspond to partitions of m with parts colored C or P:
    // 1, 2, 5, 10, 20, 36, 65 for m = 0..6.
    const int expected[] = {1, 2, 5, 10, 20, 36, 65};
    for (int m = 0; m <= 6; ++m) {
        const auto all = enumerate_frames(m);
        CHECK(static_cast<int>(all.size()) == expected[m]);
        std::set<std::string> forms;
        for (const auto& f : all) forms.insert(canonical_frame_form(f));
        CHECK(forms.size() == all.size());
    }
    CHECK_THROWS_AS(enumerate_frames(8), DomainError);
}

TEST_CASE("restricting to one component relabels it") {
    // loops + a 2-cycle: vertices 0 (loop), 1-2 (cycle)
    const auto f = Frame::finite(3, {0, 1, 2}, {{0, 0}, {1, 2}, {2, 1}});
    const auto comps = connected_components(f);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0});
    CHECK(comps[1] == std::vector<int>{1, 2});
    CHECK(frame_isomorphic(restrict_to_component(f, comps[0]), singleton_loop()));
    CHECK(frame_isomorphic(restrict_to_component(f, comps[1]), cycle_frame(2)));
}

TEST_CASE("index sets compare and print") {
    CHECK(IndexSet::from_n(2).contains(2));
    CHECK_FALSE(IndexSet::from_n(2).contains(1));
    CHECK(IndexSet::all_z().contains(-1000));
    CHECK(IndexSet::explicit_set({1, 4}).contains(4));
    CHECK_FALSE(IndexSet::explicit_set({1, 4}).contains(2));
    CHECK(IndexSet::explicit_set({}).empty());
    CHECK_FALSE(IndexSet::from_n(0).empty());
    CHECK_FALSE(IndexSet::explicit_set({1}).to_string().empty());
}
