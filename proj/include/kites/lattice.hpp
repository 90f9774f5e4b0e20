#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kites/error.hpp"

namespace kites {

using Table = std::vector<int>;  // n*n row-major operation table

// Finite integral residuated lattice (L; meet, join, mul, ldiv, rdiv, unit).
//
// All five operation tables are stored explicitly.  Construction validates
// shape and index range only; the algebraic laws (lattice axioms, monoid
// axioms, adjointness x*y <= z  iff  y <= ldiv(x,z)  iff  x <= rdiv(z,y),
// integrality x <= unit) are checked by verify_axioms, which also
// cross-checks the stored residual tables against their max characterization
//   ldiv(x,z) = max{y : x*y <= z},   rdiv(z,y) = max{x : x*y <= z}.
class FiniteResLat {
public:
    // One-element algebra.
    FiniteResLat() : FiniteResLat(1, 0, {0}, {0}, {0}, {0}, {0}) {}
    FiniteResLat(int size, int unit, Table meet, Table join, Table mul, Table ldiv, Table rdiv);

    int size() const { return n_; }
    int unit() const { return e_; }
    bool trivial() const { return n_ == 1; }

    int meet(int x, int y) const { return meet_[idx(x, y)]; }
    int join(int x, int y) const { return join_[idx(x, y)]; }
    int mul(int x, int y) const { return mul_[idx(x, y)]; }
    // ldiv(x, z) = x \ z : the residual with x as divisor.
    int ldiv(int x, int z) const { return ldiv_[idx(x, z)]; }
    // rdiv(z, y) = z / y : the residual with y as divisor.
    int rdiv(int z, int y) const { return rdiv_[idx(z, y)]; }

    bool leq(int x, int y) const { return meet_[idx(x, y)] == x; }

    // Least element under leq; every finite lattice with valid tables has one.
    int bottom() const { return bottom_; }

    const Table& meet_table() const { return meet_; }
    const Table& join_table() const { return join_; }
    const Table& mul_table() const { return mul_; }
    const Table& ldiv_table() const { return ldiv_; }
    const Table& rdiv_table() const { return rdiv_; }

    bool operator==(const FiniteResLat& o) const = default;

private:
    int idx(int x, int y) const { return x * n_ + y; }

    int n_;
    int e_;
    int bottom_;
    Table meet_, join_, mul_, ldiv_, rdiv_;
};

// One algebraic law; witness entries are element indices (-1 = unused slot).
struct LawCheck {
    std::string law;
    bool pass = true;
    std::array<int, 3> witness{-1, -1, -1};
    std::string detail;
};

struct AxiomReport {
    std::vector<LawCheck> laws;
    bool pass = true;
    const LawCheck* first_failure() const {
        for (const auto& l : laws)
            if (!l.pass) return &l;
        return nullptr;
    }
};

AxiomReport verify_axioms(const FiniteResLat& g);

// lambda_y(x) = y \ (x*y)
int left_conjugate(const FiniteResLat& g, int y, int x);
// rho_y(x) = (y*x) / y
int right_conjugate(const FiniteResLat& g, int y, int x);

enum class Identity {
    Divisibility,   // x*(x\y) = meet(x,y) = (y/x)*x
    Prelinearity,   // (x\y) v (y\x) = e = (y/x) v (x/y)
    Commutativity,  // x*y = y*x
    PseudoMv,       // x/(y\x) = x v y = (x/y)\x
};

struct IdentityCheck {
    bool holds = true;
    std::array<int, 2> witness{-1, -1};
    std::string detail;
};

IdentityCheck check_identity(const FiniteResLat& g, Identity id);

// Variety membership flags.  Precondition: verify_axioms(g) passes.
// For finite carriers a bottom always exists, so the bounded classes
// (pseudo BL, pseudo MV) only add their defining identities here.
struct AlgebraClass {
    bool integral_rl = false;
    bool gbl = false;                // divisibility
    bool basic_pseudo_hoop = false;  // divisibility + prelinearity
    bool pseudo_bl = false;          // divisibility + prelinearity + bottom
    bool pseudo_mv = false;          // bottom + the pseudo MV identity
    bool mv = false;                 // pseudo MV + commutativity
    bool commutative = false;
    bool prelinear = false;
    bool divisible = false;
    std::string to_string() const;
};

AlgebraClass classify_algebra(const FiniteResLat& g);

}  // namespace kites
