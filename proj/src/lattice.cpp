#include "kites/lattice.hpp"

#include <algorithm>

namespace kites {

namespace {

void check_table(const Table& t, int n, const char* name) {
    if (static_cast<int>(t.size()) != n * n)
        throw StructuralError(std::string(name) + " table has " + std::to_string(t.size()) +
                              " entries, expected " + std::to_string(n * n));
    for (std::size_t k = 0; k < t.size(); ++k)
        if (t[k] < 0 || t[k] >= n)
            throw StructuralError(std::string(name) + " table entry " + std::to_string(k) +
                                  " = " + std::to_string(t[k]) + " out of range [0, " +
                                  std::to_string(n) + ")");
}

}  // namespace

FiniteResLat::FiniteResLat(int size, int unit, Table meet, Table join, Table mul, Table ldiv,
                           Table rdiv)
    : n_(size),
      e_(unit),
      meet_(std::move(meet)),
      join_(std::move(join)),
      mul_(std::move(mul)),
      ldiv_(std::move(ldiv)),
      rdiv_(std::move(rdiv)) {
    if (n_ < 1) throw StructuralError("carrier size must be >= 1");
    if (e_ < 0 || e_ >= n_) throw StructuralError("unit index out of range");
    check_table(meet_, n_, "meet");
    check_table(join_, n_, "join");
    check_table(mul_, n_, "mul");
    check_table(ldiv_, n_, "ldiv");
    check_table(rdiv_, n_, "rdiv");
    // Candidate bottom: the meet of everything.  Only meaningful once the
    // lattice laws hold, but cheap and total either way.
    int b = 0;
    for (int x = 1; x < n_; ++x) b = meet_[idx(b, x)];
    bottom_ = b;
}

namespace {

using Law = LawCheck;

template <typename F>
void scan_pairs(int n, Law& law, F&& bad) {
    for (int x = 0; x < n && law.pass; ++x)
        for (int y = 0; y < n && law.pass; ++y)
            if (bad(x, y)) {
                law.pass = false;
                law.witness = {x, y, -1};
            }
}

template <typename F>
void scan_triples(int n, Law& law, F&& bad) {
    for (int x = 0; x < n && law.pass; ++x)
        for (int y = 0; y < n && law.pass; ++y)
            for (int z = 0; z < n && law.pass; ++z)
                if (bad(x, y, z)) {
                    law.pass = false;
                    law.witness = {x, y, z};
                }
}

}  // namespace

AxiomReport verify_axioms(const FiniteResLat& g) {
    AxiomReport rep;
    const int n = g.size();
    const int e = g.unit();
    auto add = [&rep](Law l) {
        rep.pass = rep.pass && l.pass;
        rep.laws.push_back(std::move(l));
    };

    {
        Law l{"meet-idempotent"};
        for (int x = 0; x < n && l.pass; ++x)
            if (g.meet(x, x) != x) {
                l.pass = false;
                l.witness = {x, -1, -1};
            }
        add(std::move(l));
    }
    {
        Law l{"meet-commutative"};
        scan_pairs(n, l, [&](int x, int y) { return g.meet(x, y) != g.meet(y, x); });
        add(std::move(l));
    }
    {
        Law l{"meet-associative"};
        scan_triples(n, l, [&](int x, int y, int z) {
            return g.meet(g.meet(x, y), z) != g.meet(x, g.meet(y, z));
        });
        add(std::move(l));
    }
    {
        Law l{"join-idempotent"};
        for (int x = 0; x < n && l.pass; ++x)
            if (g.join(x, x) != x) {
                l.pass = false;
                l.witness = {x, -1, -1};
            }
        add(std::move(l));
    }
    {
        Law l{"join-commutative"};
        scan_pairs(n, l, [&](int x, int y) { return g.join(x, y) != g.join(y, x); });
        add(std::move(l));
    }
    {
        Law l{"join-associative"};
        scan_triples(n, l, [&](int x, int y, int z) {
            return g.join(g.join(x, y), z) != g.join(x, g.join(y, z));
        });
        add(std::move(l));
    }
    {
        Law l{"absorption"};
        scan_pairs(n, l, [&](int x, int y) {
            return g.meet(x, g.join(x, y)) != x || g.join(x, g.meet(x, y)) != x;
        });
        add(std::move(l));
    }
    {
        Law l{"mul-associative"};
        scan_triples(n, l, [&](int x, int y, int z) {
            return g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z));
        });
        add(std::move(l));
    }
    {
        Law l{"unit"};
        for (int x = 0; x < n && l.pass; ++x)
            if (g.mul(e, x) != x || g.mul(x, e) != x) {
                l.pass = false;
                l.witness = {x, -1, -1};
            }
        add(std::move(l));
    }
    {
        Law l{"integrality"};
        for (int x = 0; x < n && l.pass; ++x)
            if (!g.leq(x, e)) {
                l.pass = false;
                l.witness = {x, -1, -1};
                l.detail = "element not below the unit";
            }
        add(std::move(l));
    }
    {
        Law l{"adjointness-ldiv"};  // x*y <= z  iff  y <= ldiv(x,z)
        scan_triples(n, l, [&](int x, int y, int z) {
            return g.leq(g.mul(x, y), z) != g.leq(y, g.ldiv(x, z));
        });
        add(std::move(l));
    }
    {
        Law l{"adjointness-rdiv"};  // x*y <= z  iff  x <= rdiv(z,y)
        scan_triples(n, l, [&](int x, int y, int z) {
            return g.leq(g.mul(x, y), z) != g.leq(x, g.rdiv(z, y));
        });
        add(std::move(l));
    }
    {
        // Stored tables must agree with the max characterization; this is
        // deliberately redundant with adjointness so corrupted tables get a
        // pinpointed diagnosis.
        Law l{"ldiv-max-characterization"};
        scan_pairs(n, l, [&](int x, int z) {
            int best = -1;
            for (int y = 0; y < n; ++y)
                if (g.leq(g.mul(x, y), z) && (best < 0 || g.leq(best, y))) best = y;
            // best is the max iff it dominates every member.
            bool is_max = best >= 0;
            for (int y = 0; y < n && is_max; ++y)
                if (g.leq(g.mul(x, y), z) && !g.leq(y, best)) is_max = false;
            return !is_max || best != g.ldiv(x, z);
        });
        add(std::move(l));
    }
    {
        Law l{"rdiv-max-characterization"};
        scan_pairs(n, l, [&](int z, int y) {
            int best = -1;
            for (int x = 0; x < n; ++x)
                if (g.leq(g.mul(x, y), z) && (best < 0 || g.leq(best, x))) best = x;
            bool is_max = best >= 0;
            for (int x = 0; x < n && is_max; ++x)
                if (g.leq(g.mul(x, y), z) && !g.leq(x, best)) is_max = false;
            return !is_max || best != g.rdiv(z, y);
        });
        add(std::move(l));
    }
    return rep;
}

int left_conjugate(const FiniteResLat& g, int y, int x) { return g.ldiv(y, g.mul(x, y)); }

int right_conjugate(const FiniteResLat& g, int y, int x) { return g.rdiv(g.mul(y, x), y); }

IdentityCheck check_identity(const FiniteResLat& g, Identity id) {
    IdentityCheck res;
    const int n = g.size();
    const int e = g.unit();
    auto fail = [&res](int x, int y, std::string detail) {
        res.holds = false;
        res.witness = {x, y};
        res.detail = std::move(detail);
    };
    for (int x = 0; x < n && res.holds; ++x) {
        for (int y = 0; y < n && res.holds; ++y) {
            switch (id) {
                case Identity::Divisibility:
                    if (g.mul(x, g.ldiv(x, y)) != g.meet(x, y))
                        fail(x, y, "x*(x\\y) != meet(x,y)");
                    else if (g.mul(g.rdiv(y, x), x) != g.meet(x, y))
                        fail(x, y, "(y/x)*x != meet(x,y)");
                    break;
                case Identity::Prelinearity:
                    if (g.join(g.ldiv(x, y), g.ldiv(y, x)) != e)
                        fail(x, y, "(x\\y) v (y\\x) != e");
                    else if (g.join(g.rdiv(y, x), g.rdiv(x, y)) != e)
                        fail(x, y, "(y/x) v (x/y) != e");
                    break;
                case Identity::Commutativity:
                    if (g.mul(x, y) != g.mul(y, x)) fail(x, y, "x*y != y*x");
                    break;
                case Identity::PseudoMv:
                    if (g.rdiv(x, g.ldiv(y, x)) != g.join(x, y))
                        fail(x, y, "x/(y\\x) != join(x,y)");
                    else if (g.ldiv(g.rdiv(x, y), x) != g.join(x, y))
                        fail(x, y, "(x/y)\\x != join(x,y)");
                    break;
            }
        }
    }
    return res;
}

AlgebraClass classify_algebra(const FiniteResLat& g) {
    AlgebraClass c;
    c.integral_rl = true;
    c.divisible = check_identity(g, Identity::Divisibility).holds;
    c.prelinear = check_identity(g, Identity::Prelinearity).holds;
    c.commutative = check_identity(g, Identity::Commutativity).holds;
    const bool pmv = check_identity(g, Identity::PseudoMv).holds;
    c.gbl = c.divisible;
    c.basic_pseudo_hoop = c.divisible && c.prelinear;
    c.pseudo_bl = c.divisible && c.prelinear;  // finite carrier: bottom exists
    c.pseudo_mv = pmv;
    c.mv = pmv && c.commutative;
    return c;
}

std::string AlgebraClass::to_string() const {
    std::string s = "integral-rl";
    if (gbl) s += " gbl";
    if (basic_pseudo_hoop) s += " basic-pseudo-hoop";
    if (pseudo_bl) s += " pseudo-bl";
    if (pseudo_mv) s += " pseudo-mv";
    if (mv) s += " mv";
    if (commutative) s += " commutative";
    if (prelinear) s += " prelinear";
    if (divisible) s += " divisible";
    return s;
}

}  // namespace kites
