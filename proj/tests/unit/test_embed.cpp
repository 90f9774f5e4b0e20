#include "doctest.h"
#include "kites/embed.hpp"
#include "kites/enumerate.hpp"

using namespace kites;

namespace {

// Flip the entry at the largest vertex of every level-`level` factor window.
TruncatedProductElement flip_tails(const TruncatedProduct& p, TruncatedProductElement x,
                                   int value) {
    for (int k = p.k_lo(); k <= p.K(); ++k) {
        auto& f = x.factor(k);
        if (!f.values.empty()) f.values.back() = value;
    }
    return x;
}

}  // namespace

TEST_CASE("truncated products operate factor-by-factor") {
    const auto g = lukasiewicz_chain(3);
    const TruncatedProduct p(g, FactorFamily::ForwardPath, 5, 4);
    CHECK(p.K() == 5);
    CHECK(p.k_lo() == 1);
    const auto top = p.top();
    CHECK(p.valid(top));
    Rng rng(21);
    const auto x = p.sample(rng, 1);
    CHECK(p.valid(x));
    CHECK(p.mul(top, x) == x);
    CHECK(p.mul(x, top) == x);
    // factor-wise agreement with the factor kites
    const auto y = p.sample(rng, 1);
    const auto prod = p.mul(x, y);
    for (int k = 1; k <= 5; ++k)
        CHECK(prod.factor(k) == p.factor(k).mul(x.factor(k), y.factor(k)));
    // operands from another window are refused
    const TruncatedProduct q(g, FactorFamily::ForwardPath, 4, 4);
    CHECK_THROWS_AS(p.mul(top, q.top()), DomainError);
}

TEST_CASE("tail agreement: identical, tail-flipped and head-flipped pairs") {
    const auto g = lukasiewicz_chain(3);
    const TruncatedProduct p(g, FactorFamily::ForwardPath, 6, 4);
    const auto a = p.all_e(0);

    const auto same = approx1(p, a, a);
    CHECK(same.related);
    REQUIRE(same.witness.has_value());
    CHECK(same.witness->d == 0);

    const auto b = flip_tails(p, a, 0);
    const auto tail = approx1(p, a, b);
    CHECK(tail.related);
    REQUIRE(tail.witness.has_value());
    CHECK(tail.witness->d == 1);
    CHECK(tail.witness->k0 == 1);

    // flipping a fixed head vertex separates the elements permanently
    auto c = a;
    for (int k = 1; k <= 6; ++k) c.factor(k).values.front() = 0;
    CHECK_FALSE(approx1(p, a, c).related);

    // explicit witnesses are verified, not trusted
    CHECK(approx1(p, a, b, ApproxWitness{1, 1}).related);
    CHECK_FALSE(approx1(p, a, b, ApproxWitness{1, 0}).related);
    CHECK_THROWS_AS(approx1(p, a, b, ApproxWitness{0, 1}), DomainError);  // d > k0 - level

    // level mismatch is never related
    CHECK_FALSE(approx1(p, a, p.all_e(1)).related);

    // approx1 refuses non-forward-path products
    const TruncatedProduct cyc(g, FactorFamily::Cycle, 4, 4);
    CHECK_THROWS_AS(approx1(cyc, cyc.top(), cyc.top()), DomainError);
}

TEST_CASE("tail agreement on backward-path products") {
    const auto g = chain2();
    const TruncatedProduct p(g, FactorFamily::BackwardPath, 6, 4);
    const auto a = p.all_e(1);
    const auto b = flip_tails(p, a, 0);
    const auto res = approx3(p, a, b);
    CHECK(res.related);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->d == 1);
    CHECK_THROWS_AS(approx3(p, a, b, ApproxWitness{0, 0}), DomainError);  // k0 < level
    CHECK_THROWS_AS(approx1(p, a, b), DomainError);  // wrong family
}

TEST_CASE("composed transitivity witnesses validate in a real product") {
    const auto g = lukasiewicz_chain(3);
    const TruncatedProduct p(g, FactorFamily::ForwardPath, 6, 4);
    const auto a = p.all_e(0);
    const auto b = flip_tails(p, a, 1);
    const auto c = flip_tails(p, a, 0);
    const ApproxWitness w1{1, 1}, w2{1, 1};
    REQUIRE(approx1(p, a, b, w1).related);
    REQUIRE(approx1(p, b, c, w2).related);
    const auto w = approx1_transitivity_witness(w1, w2, 0);
    CHECK(approx1(p, a, c, w).related);
}

TEST_CASE("witness composition respects the structural bounds") {
    for (int level : {0, 1, 2}) {
        for (int d1 = 0; d1 <= 2; ++d1)
            for (int d2 = 0; d2 <= 2; ++d2) {
                const ApproxWitness w1{level + d1 + 1, d1};
                const ApproxWitness w2{level + d2 + 2, d2};
                for (const auto& w : {approx1_transitivity_witness(w1, w2, level),
                                      approx1_lattice_witness(w1, w2, level),
                                      approx3_transitivity_witness(w1, w2, level),
                                      approx3_lattice_witness(w1, w2, level)}) {
                    CHECK(w.k0 >= level);
                    CHECK(w.d >= 0);
                    CHECK(w.d <= w.k0 - level);
                }
            }
    }
    // residual compositions enforce the level side conditions
    CHECK_THROWS_AS(approx1_ldiv_witness(ApproxWitness{3, 0}, 2, ApproxWitness{3, 0}, 1),
                    DomainError);
    CHECK_THROWS_AS(approx1_rdiv_witness(ApproxWitness{3, 0}, 1, ApproxWitness{3, 0}, 2),
                    DomainError);
}

TEST_CASE("forward-path embedding restricts to prefixes") {
    const auto g = chain2();
    const Phi1Embedding phi(g, 6);
    const SparseElement x{0, {{1, 0}}};
    const auto img = phi.map(x);
    CHECK(img.level == 0);
    CHECK(img.factor(1).values == std::vector<int>{1, 0});
    CHECK(img.factor(3).values == std::vector<int>{1, 0, 1, 1});
    // the top maps to the product top
    CHECK(phi.map(phi.source().top()) == phi.product().top());
    // levels above the truncation are refused
    CHECK_THROWS_AS(phi.map(SparseElement{7, {}}), DomainError);
}

TEST_CASE("cycle embedding uses the pinned index convention") {
    const auto g = chain2();
    const Phi2Embedding phi(g, 4);
    const SparseElement x{0, {{0, 0}}};
    const auto img = phi.map(x);
    // factor k holds the source value of index 0 at vertex 2k
    CHECK(img.factor(1).values == std::vector<int>{1, 1, 0});
    CHECK(img.factor(2).values == std::vector<int>{1, 1, 1, 1, 0});
    CHECK(Phi2Embedding::support_radius(SparseElement{1, {{-3, 0}, {2, 0}}}) == 3);
    CHECK(Phi2Embedding::calibrated_bound(SparseElement{1, {{-3, 0}}}, SparseElement{2, {}}) ==
          3 + 1 + 2 + 1);
    CHECK_THROWS_AS(phi.map(SparseElement{0, {{9, 0}}}), DomainError);
}

TEST_CASE("backward-path embedding restricts to suffixes") {
    const auto g = chain2();
    const Phi3Embedding phi(g, 6);
    const SparseElement x{1, {{2, 0}}};
    const auto img = phi.map(x);
    CHECK(img.level == 1);
    CHECK(img.factor(3).values == std::vector<int>{1, 0, 1});
    CHECK(img.factor(1).values == std::vector<int>{1});
    CHECK(phi.map(phi.source().top()) == phi.product().top());
}

TEST_CASE("embedding property suites pass at unit-test scale") {
    EmbedCheckConfig cfg;
    cfg.trunc_k = 8;
    cfg.depth = 2;
    cfg.support = 3;
    cfg.samples = 120;
    for (const auto& g : {chain2(), lukasiewicz_chain(3)}) {
        const auto r1 = check_embedding_phi1(g, cfg);
        CAPTURE(r1.to_text());
        CHECK(r1.pass());
        const auto r2 = check_embedding_phi2(g, cfg);
        CAPTURE(r2.to_text());
        CHECK(r2.pass());
        const auto r3 = check_embedding_phi3(g, cfg);
        CAPTURE(r3.to_text());
        CHECK(r3.pass());
    }
}

TEST_CASE("tail-agreement congruence suites pass at unit-test scale") {
    EmbedCheckConfig cfg;
    cfg.trunc_k = 8;
    cfg.depth = 2;
    cfg.support = 3;
    cfg.samples = 120;
    CHECK(check_congruence(ApproxKind::Approx1, chain2(), cfg).pass());
    CHECK(check_congruence(ApproxKind::Approx3, chain2(), cfg).pass());
    CHECK(check_congruence(ApproxKind::Approx1, lukasiewicz_chain(3), cfg).pass());
    CHECK(check_congruence(ApproxKind::Approx3, lukasiewicz_chain(3), cfg).pass());
}
