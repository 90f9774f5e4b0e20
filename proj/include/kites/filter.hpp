#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kites/lattice.hpp"

namespace kites {

// A subset of the carrier, kept sorted ascending.
struct LatticeFilter {
    std::vector<int> members;

    bool contains(int x) const;
    bool is_trivial(const FiniteResLat& g) const {  // == {unit}
        return members.size() == 1 && members[0] == g.unit();
    }
    bool is_full(const FiniteResLat& g) const {
        return static_cast<int>(members.size()) == g.size();
    }
    bool operator==(const LatticeFilter&) const = default;
    std::string to_string() const;
};

// Filter laws: contains the unit, closed upward, closed under mul.
bool is_filter(const FiniteResLat& g, const std::vector<int>& members);
// Normality adds closure under both conjugations by arbitrary elements.
bool is_normal_filter(const FiniteResLat& g, const std::vector<int>& members);

// Least (normal) filter containing the generators: fixpoint closure under
// unit/upward/product and, when `normal`, conjugation.
LatticeFilter filter_generated(const FiniteResLat& g, const std::vector<int>& generators,
                               bool normal);

// Every normal filter, by exhaustive subset scan.  Deterministic order:
// ascending size, then lexicographic membership.  Guarded for carriers
// beyond 20 elements.
std::vector<LatticeFilter> all_normal_filters(const FiniteResLat& g);

// Partition of the carrier; class ids are assigned by the least member of
// each class, in ascending order of that least member.
struct Congruence {
    std::vector<int> class_of;
    int classes = 0;
    bool operator==(const Congruence&) const = default;
};

// x ~ y  iff  rdiv(x,y) and rdiv(y,x) both lie in f.  Precondition: f normal.
Congruence congruence_from_filter(const FiniteResLat& g, const LatticeFilter& f);
// The class of the unit.
LatticeFilter filter_from_congruence(const FiniteResLat& g, const Congruence& c);
// True when the partition is compatible with all five operations.
bool is_congruence(const FiniteResLat& g, const Congruence& c);

// Quotient by a normal filter; class indices follow Congruence ordering.
FiniteResLat quotient(const FiniteResLat& g, const LatticeFilter& f);

struct SiResult {
    bool si = false;
    bool trivial_algebra = false;
    std::optional<LatticeFilter> monolith;  // least non-trivial normal filter when si
    std::string detail;
};

// Subdirect irreducibility: the intersection of all non-trivial normal
// filters is itself non-trivial.  The one-element algebra is flagged
// trivial and reported not subdirectly irreducible.
SiResult is_subdirectly_irreducible(const FiniteResLat& g);

// Componentwise product; element i encodes mixed-radix digits over the
// factors (last factor fastest).  Throws ResourceError above size_cap.
FiniteResLat direct_product(const std::vector<FiniteResLat>& factors, long long size_cap = 4096);

}  // namespace kites
