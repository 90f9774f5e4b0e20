#pragma once

#include <string>
#include <vector>

#include "kites/frame.hpp"
#include "kites/kite.hpp"
#include "kites/report.hpp"
#include "kites/symbolic.hpp"

namespace kites {

// ---------------------------------------------------------------------------
// Maps between frames and the kite homomorphisms they induce.
//
// A map t : I0 -> J0 between the index sets of a source frame (I0, I1,
// lambda) and a target frame (J0, J1, kappa) is a frame transformation when
//   (1) the t-preimage of J1 is exactly I1,
//   (2) the t-preimage of kappa(J1) is exactly lambda(I1),
//   (3) t(lambda(i)) = kappa(t(i)) for every i in I1.
// Every frame transformation contravariantly induces a homomorphism from the
// kite over the target frame to the kite over the source frame, acting by
// entry substitution: the entry at i of the induced image is the original
// entry at t(i).
// ---------------------------------------------------------------------------

struct FrameTransformation {
    enum class MapKind {
        Explicit,     // finite -> finite, one table entry per source vertex
        Shift,        // symbolic -> symbolic of the same kind, t(i) = i + shift
        ModCollapse,  // two-sided shift frame -> canonical cycle, t(i) = i mod size
    };

    Frame source;  // (I0, I1, lambda)
    Frame target;  // (J0, J1, kappa)
    MapKind kind = MapKind::Explicit;
    std::vector<int> table;  // Explicit
    long long shift = 0;     // Shift

    long long apply(long long i) const;

    // Factories validate totality and range (structural errors, not
    // condition violations): explicit tables must cover I0 and land in J0,
    // shifts on the one-sided frames must be nonnegative, and mod collapse
    // requires the canonical cycle frame as target.
    static FrameTransformation explicit_map(Frame source, Frame target, std::vector<int> table);
    static FrameTransformation shift_map(Frame source, Frame target, long long shift);
    static FrameTransformation mod_collapse(Frame source, Frame target);
};

std::string to_string(const FrameTransformation& t);

struct TransformationViolation {
    int condition = 0;      // 1, 2 or 3 as numbered above
    long long witness = 0;  // smallest index exhibiting the failure
    std::string detail;
};

struct TransformationCheck {
    bool valid = true;
    std::vector<TransformationViolation> violations;  // at most one per condition
    std::string note;                                 // how symbolic cases were decided
};

// Itemized check of conditions (1)-(3): exhaustive on finite frames, closed
// form (plus an equivariance window) on symbolic ones.
TransformationCheck is_transformation(const FrameTransformation& t);

// Finite-depth verification of the supporting facts the induced map rests
// on, for all n <= depth and m <= n:
//   - level-set-preimage:     t-preimage of J_n equals I_n;
//   - inverse-transport:      lambda^{-1}(i) exists iff kappa^{-1}(t(i))
//                             does, and t carries one to the other;
//   - level-image-recursion:  i lies in lambda^{m+1}(I_{n+1}) iff i lies in
//                             I_{n-m} and lambda^{-1}(i) lies in
//                             lambda^m(I_n)  (checked on both frames);
//   - level-image-preimage:   t-preimage of kappa^m(J_n) equals
//                             lambda^m(I_n).
// Finite frames are checked exhaustively; symbolic ones compare closed-form
// index sets where representable and fall back to a stated window.
Report lemma_checks(const FrameTransformation& t, int depth);

// Contravariantly induced maps, one per element representation: dense
// finite-frame elements, finitely supported symbolic elements (shift maps),
// and periodic two-sided elements (mod collapse).
KiteElement induced_hom(const FrameTransformation& t, const Kite& target_kite,
                        const Kite& source_kite, const KiteElement& x);
SparseElement induced_hom(const FrameTransformation& t, const SymbolicKite& target_kite,
                          const SymbolicKite& source_kite, const SparseElement& x);
PeriodicElement induced_hom(const FrameTransformation& t, const Kite& target_kite,
                            const PeriodicZKite& source_kite, const KiteElement& x);

// Preservation suite for the induced map: condition check, pointwise
// well-definedness on level sets, unit preservation, and preservation of
// meet, join, mul, ldiv and rdiv over target-kite element pairs at levels
// <= cfg.depth (exhaustive when the pair space fits cfg.budget or when
// cfg.samples == 0, sampled otherwise).  Runs the preservation records even
// for invalid maps so counterexamples demonstrate the conditions are not
// vacuous.
Report check_hom(const FrameTransformation& t, const FiniteResLat& g, const RunConfig& cfg);

// Composite map i -> outer(inner(i)) for inner : F -> F', outer : F' -> F''.
// Supported when both are explicit, both are shifts, or a zero shift feeds a
// mod collapse.
FrameTransformation compose(const FrameTransformation& outer, const FrameTransformation& inner);

// Empirical check that validity is preserved under composition and that the
// induced map of the composite equals the composite of the induced maps.
// Composition of transformations is not part of the established theory; the
// outcome is reported as an observation, never relied upon elsewhere.
Report check_composition(const FrameTransformation& outer, const FrameTransformation& inner,
                         const FiniteResLat& g, const RunConfig& cfg);

}  // namespace kites
