#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kites/kite.hpp"
#include "kites/report.hpp"
#include "kites/rng.hpp"
#include "kites/symbolic.hpp"

namespace kites {

// ---------------------------------------------------------------------------
// Truncated direct products of finite-dimensional kites.
//
// The three infinite symbolic kites (forward shift on N, shift on Z, backward
// shift on N) embed into direct products of finite-dimensional kites taken
// over a growing family of frames.  At desk scale the product is truncated to
// factors k = k_lo .. K; every statement about "all factors k >= k0" is then
// checked on the finite window and reported as refuted or as holding up to K,
// never as proven.
// ---------------------------------------------------------------------------

// Element of a truncated product: one factor per k in [k_lo, k_hi], all
// factors at the same level.
struct TruncatedProductElement {
    int level = 0;
    int k_lo = 1;
    std::vector<KiteElement> factors;  // factors[k - k_lo]

    int k_hi() const { return k_lo + static_cast<int>(factors.size()) - 1; }
    const KiteElement& factor(int k) const { return factors.at(static_cast<size_t>(k - k_lo)); }
    KiteElement& factor(int k) { return factors.at(static_cast<size_t>(k - k_lo)); }
    bool operator==(const TruncatedProductElement&) const = default;
};

// Families of factor frames used by the three embeddings.
//   ForwardPath : factor k is the kite over the path 0 -> 1 -> ... -> k
//                 (I_1 = {0..k-1}, lambda(i) = i+1, level sets {0..k-m}).
//   Cycle       : factor k is the kite over the (2k+1)-cycle with
//                 lambda(i) = i+1 mod 2k+1 (level sets = all vertices).
//   BackwardPath: factor k is the kite over vertices {0..k} with
//                 I_1 = {1..k}, lambda(i) = i-1 (level sets {m..k}).
enum class FactorFamily { ForwardPath, Cycle, BackwardPath };

// A truncated product with its factor kites materialised once.  Operations
// act factor-by-factor; operands must share the same window [k_lo, K].
class TruncatedProduct {
public:
    // factor_max_level bounds the levels representable inside each factor
    // kite; it must be at least as large as any element or operation result
    // level used (maps need >= the source element level, products of two
    // level-d elements need >= 2d).
    TruncatedProduct(FiniteResLat g, FactorFamily family, int K, int factor_max_level);

    const FiniteResLat& algebra() const { return g_; }
    FactorFamily family() const { return family_; }
    int K() const { return K_; }
    int k_lo() const { return k_lo_; }
    int factor_max_level() const { return factor_max_level_; }
    const Kite& factor(int k) const;

    bool valid(const TruncatedProductElement& e) const;
    TruncatedProductElement all_e(int level) const;
    TruncatedProductElement top() const { return all_e(0); }

    // Factor-wise operations (same operand order as the Kite methods:
    // ldiv(divisor, dividend) = divisor \ dividend, rdiv(dividend, divisor)
    // = dividend / divisor).
    TruncatedProductElement meet(const TruncatedProductElement& a, const TruncatedProductElement& b) const;
    TruncatedProductElement join(const TruncatedProductElement& a, const TruncatedProductElement& b) const;
    TruncatedProductElement mul(const TruncatedProductElement& a, const TruncatedProductElement& b) const;
    TruncatedProductElement ldiv(const TruncatedProductElement& a, const TruncatedProductElement& b) const;
    TruncatedProductElement rdiv(const TruncatedProductElement& a, const TruncatedProductElement& b) const;

    // Uniform random element at the given level (every factor entry drawn
    // independently).
    TruncatedProductElement sample(Rng& rng, int level) const;

    std::string to_string(const TruncatedProductElement& e) const;
    // Per-factor difference table: "factor k, vertex i: lhs=…, rhs=…" lines,
    // at most max_lines of them; empty string when equal.
    std::string diff_string(const TruncatedProductElement& a, const TruncatedProductElement& b,
                            int max_lines = 4) const;

private:
    FiniteResLat g_;
    FactorFamily family_;
    int K_;
    int k_lo_;
    int factor_max_level_;
    std::vector<Kite> kites_;  // kites_[k - k_lo_]

    template <typename F>
    TruncatedProductElement zip(const TruncatedProductElement& a, const TruncatedProductElement& b,
                                F&& op) const;
};

// ---------------------------------------------------------------------------
// Tail-agreement relations on truncated products.
//
// Two product elements of equal level m are related when, from some factor
// k0 >= m on, their factor entries agree everywhere except possibly in the
// last d positions of each factor's level window (0 <= d <= k0 - m).  Over
// ForwardPath factors the window at level m is the vertex range
// {0..k-m}, so agreement is required at vertices 0..k-m-d; over BackwardPath
// factors the window is {m..k} and agreement is required at vertices m..k-d.
// In both cases "the last d positions" are the d largest vertices, so the
// two relations share one implementation over the sorted factor labels.
// ---------------------------------------------------------------------------

struct ApproxWitness {
    int k0 = 0;  // agreement holds in every factor k >= k0; k0 >= level
    int d = 0;   // trailing positions excluded from agreement; 0 <= d <= k0 - level
};

struct ApproxResult {
    bool related = false;                  // consistent with relation on every factor <= K
    std::optional<ApproxWitness> witness;  // validated input witness, or minimal (d, k0) found
    std::string reason;                    // first failure site / why unrelated
};

// Verify a given witness, or search for the lexicographically minimal (d, k0)
// witness with d <= d_max and k0 <= K (d_max < 0 means K - level).  A
// successful verdict means "holds in every factor of the truncated window";
// the relation quantifies over all k, so the window can only refute or
// support it.  approx1 requires a ForwardPath product, approx3 a
// BackwardPath product; witnesses violating the bounds above are refused.
ApproxResult approx1(const TruncatedProduct& p, const TruncatedProductElement& a,
                     const TruncatedProductElement& b,
                     std::optional<ApproxWitness> w = std::nullopt, int d_max = -1);
ApproxResult approx3(const TruncatedProduct& p, const TruncatedProductElement& a,
                     const TruncatedProductElement& b,
                     std::optional<ApproxWitness> w = std::nullopt, int d_max = -1);

// Witness arithmetic used when the relations are shown to be congruences:
// from premise witnesses for two related pairs, each helper returns the
// witness under which the conclusion pair is verified.  Operand order and
// level arguments mirror the product operations (ldiv(divisor@n, dividend@m)
// with n <= m, rdiv(dividend@n, divisor@m) with m <= n).  k0 is clamped up
// to level + d where the textbook formula would fall below the witness
// bounds; a larger k0 only weakens the claim being checked.
ApproxWitness approx1_transitivity_witness(ApproxWitness w1, ApproxWitness w2, int level);
ApproxWitness approx1_lattice_witness(ApproxWitness w1, ApproxWitness w2, int level);
ApproxWitness approx1_mul_witness(ApproxWitness wa, int m, ApproxWitness wb, int n);
ApproxWitness approx1_ldiv_witness(ApproxWitness w_divisor, int n, ApproxWitness w_dividend, int m);
ApproxWitness approx1_rdiv_witness(ApproxWitness w_dividend, int n, ApproxWitness w_divisor, int m);

ApproxWitness approx3_transitivity_witness(ApproxWitness w1, ApproxWitness w2, int level);
ApproxWitness approx3_lattice_witness(ApproxWitness w1, ApproxWitness w2, int level);
ApproxWitness approx3_mul_witness(ApproxWitness wa, int m, ApproxWitness wb, int n);
ApproxWitness approx3_ldiv_witness(ApproxWitness w_divisor, int n, ApproxWitness w_dividend, int m);
ApproxWitness approx3_rdiv_witness(ApproxWitness w_dividend, int n, ApproxWitness w_divisor, int m);

// ---------------------------------------------------------------------------
// The three embeddings.
// ---------------------------------------------------------------------------

// Forward-shift kite on N into the ForwardPath product: factor k restricts
// the element to the prefix {0..k-m} (empty when k < m).  Elements of level
// above K are refused.
class Phi1Embedding {
public:
    Phi1Embedding(const FiniteResLat& g, int K, int factor_max_level = -1);
    const SymbolicKite& source() const { return source_; }
    const TruncatedProduct& product() const { return product_; }
    TruncatedProductElement map(const SparseElement& x) const;

private:
    SymbolicKite source_;
    TruncatedProduct product_;
};

// Shift kite on Z into the Cycle product: factor k has 2k+1 vertices; the
// entry at vertex p is the source value at the centred representative of
// p+1 mod 2k+1, i.e. at the unique index in {-k..k} congruent to p+1.  The
// convention is pinned by the calibration record of check_embedding_phi2.
// Elements supported outside {-K..K} are refused.
class Phi2Embedding {
public:
    Phi2Embedding(const FiniteResLat& g, int K, int factor_max_level = -1);
    const SymbolicKite& source() const { return source_; }
    const TruncatedProduct& product() const { return product_; }
    TruncatedProductElement map(const SparseElement& x) const;

    // Largest |i| over the support (0 for unit-valued elements).
    static long long support_radius(const SparseElement& x);
    // Smallest factor index from which the factor-wise operations are exact
    // for operands shaped like a and b: support radius + level sum + 1.
    // Below it a (2k+1)-cycle can wrap an index difference of m+n around
    // into the support, so pointwise exactness is impossible for any
    // convention; at and above it the factor windows are injective on every
    // index the operations touch.
    static int calibrated_bound(const SparseElement& a, const SparseElement& b);

private:
    SymbolicKite source_;
    TruncatedProduct product_;
};

// Backward-shift kite on N into the BackwardPath product: factor k restricts
// the element to {m..k} (empty when k < m).  Elements of level above K are
// refused.
class Phi3Embedding {
public:
    Phi3Embedding(const FiniteResLat& g, int K, int factor_max_level = -1);
    const SymbolicKite& source() const { return source_; }
    const TruncatedProduct& product() const { return product_; }
    TruncatedProductElement map(const SparseElement& x) const;

private:
    SymbolicKite source_;
    TruncatedProduct product_;
};

// ---------------------------------------------------------------------------
// Property-test harnesses.
// ---------------------------------------------------------------------------

struct EmbedCheckConfig {
    int trunc_k = 12;          // product truncation K
    int depth = 3;             // maximum source element level sampled
    int support = 4;           // support radius / maximum non-unit entries
    long long samples = 1000;  // sampled pairs per record
    std::uint64_t seed = 1;
};

// Sampled verification that the maps preserve the operations:
//  - phi1: meet, join, mul and rdiv exactly; ldiv modulo approx1 under the
//    witness (dividend level + 1, divisor level), plus a minimal-witness
//    search bounded by that d; injectivity both directly (images differ in
//    every factor k >= max(m, j+m) for the first differing index j) and as
//    failed approx1 witness search.
//  - phi2: meet and join exactly in every factor; mul, ldiv and rdiv exactly
//    in every factor k >= calibrated_bound(a, b), with the first-exact onset
//    recorded, a calibration record pinning the index convention and a
//    wrap-around record demonstrating why small factors are excluded;
//    injectivity directly (images differ in every factor k >= |j|).
//  - phi3: meet, join, mul exactly; ldiv exactly (= approx3 witness d 0);
//    rdiv modulo approx3 under the witness (dividend level, divisor level)
//    plus minimal-witness search; injectivity directly (every factor
//    k >= first differing vertex) and as failed approx3 search.
Report check_embedding_phi1(const FiniteResLat& g, const EmbedCheckConfig& cfg);
Report check_embedding_phi2(const FiniteResLat& g, const EmbedCheckConfig& cfg);
Report check_embedding_phi3(const FiniteResLat& g, const EmbedCheckConfig& cfg);

// Sampled congruence-law suite for the tail-agreement relations: premise
// pairs are built by perturbing factor entries outside a random witness's
// agreement windows, then reflexivity, symmetry, transitivity and
// compatibility with mul/ldiv/rdiv/meet/join are verified under the composed
// witnesses above.
enum class ApproxKind { Approx1, Approx3 };
Report check_congruence(ApproxKind kind, const FiniteResLat& g, const EmbedCheckConfig& cfg);

}  // namespace kites
