#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kites/filter.hpp"
#include "kites/frame.hpp"
#include "kites/lattice.hpp"
#include "kites/report.hpp"
#include "kites/rng.hpp"

namespace kites {

// One element of a kite: a tuple over the level-`level` index set I_n,
// `values` aligned positionally with the sorted labels of I_n.
struct KiteElement {
    int level = 0;
    std::vector<int> values;
    bool operator==(const KiteElement&) const = default;
};

// Kite algebra of a finite integral residuated lattice `g` over a finite
// frame, materialized for levels 0..max_level.  The universe is the disjoint
// union of G^{I_n}; an element at a deeper level lies strictly below every
// element at a shallower level, and same-level elements compare pointwise.
//
//   mul : (x@m, y@n) -> level m+n, entry i of I_{m+n} is x[lambda^n(i)] * y[i]
//   ldiv: divisor y@n, dividend x@m -> top if n > m, else level m-n with
//         entry i = y[lambda^{m-n}(i)] \ x[i] on I_m and e elsewhere
//   rdiv: dividend y@n, divisor x@m -> top if m > n, else level n-m with
//         entry j = y[i] / x[i] where lambda^m(i) = j, i in I_n, e elsewhere
//
// Residuation: mul(x,y) <= z  iff  y <= ldiv(x,z)  iff  x <= rdiv(z,y).
class Kite {
public:
    Kite(FiniteResLat g, Frame f, int max_level);

    const FiniteResLat& algebra() const { return g_; }
    const Frame& frame() const { return f_; }
    int max_level() const { return max_level_; }

    int dimension(int level) const;               // |I_level|
    const std::vector<int>& labels(int level) const;  // sorted I_level
    int position(int level, int label) const;     // index into values, -1 if absent

    bool valid(const KiteElement& x) const;
    KiteElement all_e(int level) const;
    KiteElement top() const { return all_e(0); }  // also the monoid unit

    bool leq(const KiteElement& x, const KiteElement& y) const;
    KiteElement meet(const KiteElement& x, const KiteElement& y) const;
    KiteElement join(const KiteElement& x, const KiteElement& y) const;
    KiteElement mul(const KiteElement& x, const KiteElement& y) const;
    // ldiv(x, z) = x \ z (divisor x); rdiv(z, y) = z / y (divisor y).
    KiteElement ldiv(const KiteElement& x, const KiteElement& z) const;
    KiteElement rdiv(const KiteElement& z, const KiteElement& y) const;

    bool adjointness_holds(const KiteElement& x, const KiteElement& y,
                           const KiteElement& z) const;

    // Element counting/indexing for exhaustive scans (saturating at 2^62).
    long long elements_at_level(int level) const;
    long long total_elements(int max_level) const;
    KiteElement element_at(int level, long long index) const;
    KiteElement element_by_rank(long long rank, int max_level) const;
    KiteElement sample(Rng& rng, int max_level) const;

    std::string to_string(const KiteElement& x) const;

private:
    FiniteResLat g_;
    Frame f_;
    int max_level_;
    std::vector<std::vector<int>> labels_;   // labels_[n] = sorted I_n
    std::vector<std::vector<int>> pos_;      // pos_[n][vertex] -> index or -1
    void check_level(int level) const;
};

// Predicates describing normal-filter-style subsets used in the
// irreducibility analysis.  All built-in kinds select level-0 elements.
struct KiteFilterPredicate {
    enum class Kind {
        MaxLevel0,  // the whole level-0 block
        Lifted,     // level 0, every entry in a fixed normal filter of G
        Component,  // level 0, entry e at every vertex of `positions`
        Custom,
    };
    Kind kind = Kind::MaxLevel0;
    std::string name = "level0";
    LatticeFilter base;           // Lifted
    std::vector<int> positions;   // Component: union of weak components
    std::function<bool(const Kite&, const KiteElement&)> fn;  // Custom

    bool contains(const Kite& k, const KiteElement& x) const;
    // A random member (used to make closure sampling non-vacuous).
    KiteElement sample_member(const Kite& k, Rng& rng) const;

    static KiteFilterPredicate max_level0();
    static KiteFilterPredicate lifted(LatticeFilter base, std::string name);
    // `positions` must be a union of weak components of the kite's frame.
    static KiteFilterPredicate component(std::vector<int> positions, std::string name);
};

// Sampled evidence that the predicate behaves as a normal filter: contains
// the top, upward closed, closed under meet and product, and closed under
// both conjugations by arbitrary elements.
Report validate_filter_predicate(const Kite& k, const KiteFilterPredicate& p,
                                 const RunConfig& cfg);

struct SiKiteResult {
    bool si = false;
    bool used_connectivity = false;  // verdict came from the pairwise test
    std::string reason;
};

// The kite is subdirectly irreducible iff G is trivial, or the frame is
// empty, or G is subdirectly irreducible and all index pairs are connected.
SiKiteResult is_si_kite(const FiniteResLat& g, const Frame& f);

// Adjointness of both residuals, associativity and unit laws over element
// triples at levels <= cfg.depth; exhaustive when the triple space fits
// cfg.budget (or cfg.samples == 0), sampled otherwise.  The kite must be
// built with max_level >= 3 * cfg.depth.
Report kite_axiom_suite(const Kite& k, const RunConfig& cfg);

// (x \ y) v (y \ x) = top and the mirror law over sampled/exhaustive pairs.
Report prelinearity_transfer_check(const Kite& k, const RunConfig& cfg);

struct DivisibilityViolation {
    KiteElement x, y, lhs, rhs;
    std::string law;  // which of the two divisibility equations failed
};

// First pair (scanning levels shallow-to-deep) with x*(x\y) != x^y or
// (y/x)*x != x^y, if any, up to `budget` pairs.
std::optional<DivisibilityViolation> find_divisibility_violation(const Kite& k,
                                                                 int max_level,
                                                                 long long budget);
// Same scan for (x\y) v (y\x) != top or (x/y) v (y/x) != top.
struct PrelinearityViolation {
    KiteElement x, y, value;
    std::string law;
};
std::optional<PrelinearityViolation> find_prelinearity_violation(const Kite& k,
                                                                 int max_level,
                                                                 long long budget);

// Projection onto the kite over one weak component (vertices of `component`
// relabeled in sorted order): drop all coordinates outside the component.
KiteElement component_projection(const Kite& big, const std::vector<int>& component,
                                 const Kite& small, const KiteElement& x);

// Recognized degenerate shapes whose kites are isomorphic to classical
// constructions; check_structural_example verifies the op tables match the
// closed-form model up to cfg.depth.
enum class StructuralExample {
    NegativeCone,    // empty frame: kite = negative cone of Z (levels add)
    AntilexProduct,  // singleton loop: G x Z^- ordered antilexicographically
    OrdinalSum,      // singleton tail: Z^- chain glued below G
};

Report check_structural_example(const FiniteResLat& g, StructuralExample which,
                                const RunConfig& cfg);

}  // namespace kites
