#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here is written directly from first principles (brute force,
// union-find, partition enumeration) and deliberately shares no code with
// the checked implementations.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "kites/frame.hpp"
#include "kites/lattice.hpp"

namespace kites::oracle {

// --- residuals from the max characterization --------------------------------

// x \ z as max{y : x*y <= z} under the meet-table order; nullopt if the set
// has no maximum (not a residuated structure).
inline std::optional<int> max_ldiv(const FiniteResLat& g, int x, int z) {
    std::vector<int> sols;
    for (int y = 0; y < g.size(); ++y)
        if (g.leq(g.mul(x, y), z)) sols.push_back(y);
    for (int cand : sols) {
        bool top = true;
        for (int other : sols)
            if (!g.leq(other, cand)) {
                top = false;
                break;
            }
        if (top) return cand;
    }
    return std::nullopt;
}

// z / y as max{x : x*y <= z}.
inline std::optional<int> max_rdiv(const FiniteResLat& g, int z, int y) {
    std::vector<int> sols;
    for (int x = 0; x < g.size(); ++x)
        if (g.leq(g.mul(x, y), z)) sols.push_back(x);
    for (int cand : sols) {
        bool top = true;
        for (int other : sols)
            if (!g.leq(other, cand)) {
                top = false;
                break;
            }
        if (top) return cand;
    }
    return std::nullopt;
}

// Both stored residual tables agree with the max characterization everywhere.
inline bool residual_tables_match(const FiniteResLat& g) {
    for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b) {
            const auto l = max_ldiv(g, a, b);
            const auto r = max_rdiv(g, a, b);
            if (!l || *l != g.ldiv(a, b)) return false;
            if (!r || *r != g.rdiv(a, b)) return false;
        }
    return true;
}

// Adjointness stated directly: x*y <= z iff y <= x\z iff x <= z/y.
inline bool adjointness_holds(const FiniteResLat& g) {
    for (int x = 0; x < g.size(); ++x)
        for (int y = 0; y < g.size(); ++y)
            for (int z = 0; z < g.size(); ++z) {
                const bool a = g.leq(g.mul(x, y), z);
                const bool b = g.leq(y, g.ldiv(x, z));
                const bool c = g.leq(x, g.rdiv(z, y));
                if (a != b || b != c) return false;
            }
    return true;
}

// --- kite operations on map-backed elements ----------------------------------

// Element of the kite over a finite frame with vertex->value entries; the
// key set must be exactly the frame's level set at `level`.
struct MapElement {
    int level = 0;
    std::map<int, int> vals;
    bool operator==(const MapElement&) const = default;
};

inline MapElement map_all_e(const FiniteResLat& g, const Frame& f, int level) {
    MapElement out;
    out.level = level;
    for (int i : f.level_elems(level)) out.vals[i] = g.unit();
    return out;
}

// n-fold application of lambda by stepping, nullopt when it walks out.
inline std::optional<int> step_lambda(const Frame& f, int times, int i) {
    int cur = i;
    for (int s = 0; s < times; ++s) {
        if (!f.in_i1(cur)) return std::nullopt;
        cur = f.lambda(cur);
    }
    return cur;
}

// Unique preimage under n-fold lambda found by scanning all vertices.
inline std::optional<int> unstep_lambda(const Frame& f, int times, int j) {
    for (int i = 0; i < f.size(); ++i)
        if (const auto r = step_lambda(f, times, i); r && *r == j) return i;
    return std::nullopt;
}

inline MapElement map_mul(const FiniteResLat& g, const Frame& f, const MapElement& x,
                          const MapElement& y) {
    MapElement out;
    out.level = x.level + y.level;
    for (int i : f.level_elems(out.level)) {
        const auto up = step_lambda(f, y.level, i);
        out.vals[i] = g.mul(x.vals.at(*up), y.vals.at(i));
    }
    return out;
}

// x \ z with the divisor x first; top when the divisor sits deeper.
inline MapElement map_ldiv(const FiniteResLat& g, const Frame& f, const MapElement& x,
                           const MapElement& z) {
    if (x.level > z.level) return map_all_e(g, f, 0);
    MapElement out;
    out.level = z.level - x.level;
    for (int j : f.level_elems(out.level)) {
        if (z.vals.count(j)) {
            const auto up = step_lambda(f, out.level, j);
            out.vals[j] = g.ldiv(x.vals.at(*up), z.vals.at(j));
        } else {
            out.vals[j] = g.unit();
        }
    }
    return out;
}

// z / y with the dividend z first; top when the divisor sits deeper.
inline MapElement map_rdiv(const FiniteResLat& g, const Frame& f, const MapElement& z,
                           const MapElement& y) {
    if (y.level > z.level) return map_all_e(g, f, 0);
    MapElement out;
    out.level = z.level - y.level;
    for (int j : f.level_elems(out.level)) {
        const auto i = unstep_lambda(f, y.level, j);
        if (i && z.vals.count(*i))
            out.vals[j] = g.rdiv(z.vals.at(*i), y.vals.at(*i));
        else
            out.vals[j] = g.unit();
    }
    return out;
}

// Order with whole levels stacked: deeper elements are strictly smaller.
inline bool map_leq(const FiniteResLat& g, const MapElement& x, const MapElement& y) {
    if (x.level != y.level) return x.level > y.level;
    for (const auto& [i, v] : x.vals)
        if (!g.leq(v, y.vals.at(i))) return false;
    return true;
}

inline MapElement map_meet(const FiniteResLat& g, const MapElement& x, const MapElement& y) {
    if (x.level != y.level) return x.level > y.level ? x : y;
    MapElement out;
    out.level = x.level;
    for (const auto& [i, v] : x.vals) out.vals[i] = g.meet(v, y.vals.at(i));
    return out;
}

inline MapElement map_join(const FiniteResLat& g, const MapElement& x, const MapElement& y) {
    if (x.level != y.level) return x.level > y.level ? y : x;
    MapElement out;
    out.level = x.level;
    for (const auto& [i, v] : x.vals) out.vals[i] = g.join(v, y.vals.at(i));
    return out;
}

// --- frame connectivity ------------------------------------------------------

// Orbit meeting: some forward lambda-orbit of one vertex reaches the other.
inline bool orbit_connected(const Frame& f, int i, int j) {
    for (int start : {i, j}) {
        const int goal = start == i ? j : i;
        int cur = start;
        for (int steps = 0; steps <= f.size(); ++steps) {
            if (cur == goal) return true;
            if (!f.in_i1(cur)) break;
            cur = f.lambda(cur);
        }
    }
    return false;
}

inline bool all_pairs_orbit_connected(const Frame& f) {
    for (int i = 0; i < f.size(); ++i)
        for (int j = i + 1; j < f.size(); ++j)
            if (!orbit_connected(f, i, j)) return false;
    return true;
}

// Weak connectivity by union-find over the edges i -- lambda(i).
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

inline int weak_component_count(const Frame& f) {
    if (f.size() == 0) return 0;
    UnionFind uf(f.size());
    for (int i : f.i1()) uf.unite(i, f.lambda(i));
    std::set<int> roots;
    for (int i = 0; i < f.size(); ++i) roots.insert(uf.find(i));
    return static_cast<int>(roots.size());
}

// --- congruence / SI oracle by partition enumeration --------------------------

// All partitions of {0..n-1} as restricted growth strings.
inline std::vector<std::vector<int>> all_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> rgs(static_cast<size_t>(n), 0);
    while (true) {
        out.push_back(rgs);
        int i = n - 1;
        for (; i > 0; --i) {
            int cap = 0;
            for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[static_cast<size_t>(j)]);
            if (rgs[static_cast<size_t>(i)] <= cap) break;
        }
        if (i == 0) return out;
        ++rgs[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j) rgs[static_cast<size_t>(j)] = 0;
    }
}

// Compatibility of a partition with every binary operation of the algebra.
inline bool is_congruence_partition(const FiniteResLat& g, const std::vector<int>& cls) {
    const int n = g.size();
    auto tab = [&](int which, int a, int b) {
        switch (which) {
            case 0: return g.meet(a, b);
            case 1: return g.join(a, b);
            case 2: return g.mul(a, b);
            case 3: return g.ldiv(a, b);
            default: return g.rdiv(a, b);
        }
    };
    for (int which = 0; which < 5; ++which)
        for (int x = 0; x < n; ++x)
            for (int x2 = 0; x2 < n; ++x2) {
                if (cls[static_cast<size_t>(x)] != cls[static_cast<size_t>(x2)]) continue;
                for (int y = 0; y < n; ++y)
                    for (int y2 = 0; y2 < n; ++y2) {
                        if (cls[static_cast<size_t>(y)] != cls[static_cast<size_t>(y2)]) continue;
                        if (cls[static_cast<size_t>(tab(which, x, y))] !=
                            cls[static_cast<size_t>(tab(which, x2, y2))])
                            return false;
                    }
            }
    return true;
}

inline bool is_identity_partition(const std::vector<int>& cls) {
    for (size_t i = 0; i < cls.size(); ++i)
        for (size_t j = i + 1; j < cls.size(); ++j)
            if (cls[i] == cls[j]) return false;
    return true;
}

// Common refinement of two partitions, renumbered.
inline std::vector<int> partition_meet(const std::vector<int>& a, const std::vector<int>& b) {
    std::map<std::pair<int, int>, int> ids;
    std::vector<int> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        const auto key = std::make_pair(a[i], b[i]);
        const auto it = ids.find(key);
        if (it == ids.end()) {
            const int id = static_cast<int>(ids.size());
            ids.emplace(key, id);
            out[i] = id;
        } else {
            out[i] = it->second;
        }
    }
    return out;
}

struct SiOracle {
    bool si = false;
    std::vector<int> monolith;  // least nontrivial congruence when si
};

// Subdirect irreducibility from the full congruence lattice: the meet of all
// nontrivial congruences is itself nontrivial.
inline SiOracle si_by_partitions(const FiniteResLat& g) {
    SiOracle out;
    if (g.size() == 1) return out;  // trivial algebra: not si
    std::optional<std::vector<int>> meet_all;
    for (const auto& cls : all_partitions(g.size())) {
        if (is_identity_partition(cls)) continue;
        if (!is_congruence_partition(g, cls)) continue;
        meet_all = meet_all ? partition_meet(*meet_all, cls) : cls;
    }
    if (!meet_all || is_identity_partition(*meet_all)) return out;
    out.si = true;
    out.monolith = *meet_all;
    return out;
}

// --- normal filters by subset enumeration -------------------------------------

// All normal filters of g found by checking every subset: contains the unit,
// upward closed, closed under the product and under both conjugations.
inline std::vector<std::vector<int>> normal_filters_by_subsets(const FiniteResLat& g) {
    const int n = g.size();
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (!(mask >> g.unit() & 1u)) continue;
        std::vector<int> elems;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) elems.push_back(i);
        bool ok = true;
        for (int x : elems) {
            for (int y = 0; y < n && ok; ++y)
                if (g.leq(x, y) && !(mask >> y & 1u)) ok = false;
            for (int y : elems)
                if (!(mask >> g.mul(x, y) & 1u)) ok = false;
            for (int y = 0; y < n && ok; ++y) {
                const int lam = g.ldiv(y, g.mul(x, y));   // y \ (x*y)
                const int rho = g.rdiv(g.mul(y, x), y);   // (y*x) / y
                if (!(mask >> lam & 1u)) ok = false;
                if (!(mask >> rho & 1u)) ok = false;
            }
            if (!ok) break;
        }
        if (ok) out.push_back(std::move(elems));
    }
    return out;
}

}  // namespace kites::oracle
