#pragma once

#include <map>
#include <string>
#include <vector>

#include "kites/frame.hpp"
#include "kites/lattice.hpp"
#include "kites/rng.hpp"

namespace kites {

// Finitely-supported element of a kite over an infinite frame: entries not
// present in `support` equal the coefficient algebra's unit.
struct SparseElement {
    long long level = 0;
    std::map<long long, int> support;
    bool operator==(const SparseElement&) const = default;
};

// Kite over one of the three symbolic frames, with all operations computed
// through the frame's closed-form level sets and lambda powers.  Closed on
// finitely-supported elements because u\v, v\u, u/v and v/u are trivial
// whenever both arguments equal the unit.
class SymbolicKite {
public:
    SymbolicKite(FiniteResLat g, Frame f);

    const FiniteResLat& algebra() const { return g_; }
    const Frame& frame() const { return f_; }

    bool valid(const SparseElement& x) const;
    SparseElement normalize(SparseElement x) const;  // drop unit entries
    int get(const SparseElement& x, long long i) const;

    SparseElement top() const { return {0, {}}; }
    SparseElement all_e(long long level) const { return {level, {}}; }

    bool leq(const SparseElement& x, const SparseElement& y) const;
    SparseElement meet(const SparseElement& x, const SparseElement& y) const;
    SparseElement join(const SparseElement& x, const SparseElement& y) const;
    SparseElement mul(const SparseElement& x, const SparseElement& y) const;
    // ldiv(x, z) = x \ z; rdiv(z, y) = z / y.
    SparseElement ldiv(const SparseElement& x, const SparseElement& z) const;
    SparseElement rdiv(const SparseElement& z, const SparseElement& y) const;

    // Random element: level in [0, max_level], at most `max_entries`
    // non-unit values placed within `radius` of the level set's start (the
    // full window [-radius, radius] on the two-sided frame).
    SparseElement sample(Rng& rng, int max_level, int radius, int max_entries) const;

    std::string to_string(const SparseElement& x) const;

private:
    FiniteResLat g_;
    Frame f_;
};

// Element of the kite over the bijective-shift frame whose entries repeat
// with a fixed period: entry at index i is vals[i mod period].
struct PeriodicElement {
    long long level = 0;
    long long period = 1;
    std::vector<int> vals;
    bool operator==(const PeriodicElement&) const = default;
};

// Operations on periodic elements of the two-sided shift kite; results carry
// period lcm(p, q), so all comparisons are exact.
class PeriodicZKite {
public:
    explicit PeriodicZKite(FiniteResLat g, long long period_cap = 1 << 20);

    const FiniteResLat& algebra() const { return g_; }

    bool valid(const PeriodicElement& x) const;
    int get(const PeriodicElement& x, long long i) const;
    PeriodicElement top() const { return {0, 1, {g_.unit()}}; }

    bool equal(const PeriodicElement& x, const PeriodicElement& y) const;
    bool leq(const PeriodicElement& x, const PeriodicElement& y) const;
    PeriodicElement meet(const PeriodicElement& x, const PeriodicElement& y) const;
    PeriodicElement join(const PeriodicElement& x, const PeriodicElement& y) const;
    PeriodicElement mul(const PeriodicElement& x, const PeriodicElement& y) const;
    PeriodicElement ldiv(const PeriodicElement& x, const PeriodicElement& z) const;
    PeriodicElement rdiv(const PeriodicElement& z, const PeriodicElement& y) const;

    std::string to_string(const PeriodicElement& x) const;

private:
    FiniteResLat g_;
    long long period_cap_;
    long long joint_period(const PeriodicElement& x, const PeriodicElement& y) const;
};

}  // namespace kites
