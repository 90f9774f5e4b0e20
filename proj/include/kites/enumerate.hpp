#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kites/lattice.hpp"

namespace kites {

// Lexicographically least serialization of (unit, meet, join, mul, ldiv,
// rdiv) over all relabelings of the carrier.  Equal strings iff isomorphic.
// Guarded for carriers beyond 8 elements (factorial scan).
std::string canonical_form(const FiniteResLat& g);

// A bijection b with b(op(x,y)) = op(b(x), b(y)) for all five tables and
// b(unit) = unit, if one exists.
std::optional<std::vector<int>> lattice_isomorphism(const FiniteResLat& a,
                                                    const FiniteResLat& b);

// Every integral residuated lattice with `n` elements, up to isomorphism,
// sorted by canonical form.  Supported for n in [1, 4]: lattice orders are
// scanned exhaustively, monoid tables filled by backtracking, residuals
// forced by the max characterization, and every emitted algebra passes
// verify_axioms.
std::vector<FiniteResLat> enumerate_residuated_lattices(int n);

// Pinned instances.
FiniteResLat trivial_lattice();
FiniteResLat chain2();
FiniteResLat lukasiewicz_chain(int n);  // n >= 2; mul(x,y) = max(x+y-(n-1), 0)
FiniteResLat godel_chain(int n);        // n >= 2; mul = min
FiniteResLat boolean_2x2();             // chain2 x chain2
// Non-commutative chain 0 < a < b < e with aa = 0, ab = 0, ba = a, bb = b.
FiniteResLat nc4();
// Drastic chain 0 < a < b < e (products of non-units collapse to 0);
// fails divisibility.
FiniteResLat nd4();
// Smallest non-prelinear instance: min-product on the 5-element lattice
// 0 < a,b < m < e with a,b incomparable.  No size-4 instance can fail
// prelinearity (every 4-element carrier is a chain or the Boolean square).
FiniteResLat nonprelinear5();

// Named corpus used by tests and the CLI (name, algebra) in fixed order.
std::vector<std::pair<std::string, FiniteResLat>> builtin_lattices();
std::optional<FiniteResLat> builtin_lattice(const std::string& name);

}  // namespace kites
