#pragma once

#include "tetra/a_ring.hpp"
#include "tetra/sl2.hpp"

#include <string>

namespace tetra {

// Element of the two-dimensional center C in the basis (c, c'). The third
// distinguished element c'' is -c - c', so c + c' + c'' = 0 holds identically.
struct CentralVec {
    Scalar c, cp;

    static CentralVec zero() { return {Scalar(0), Scalar(0)}; }
    static CentralVec c_unit() { return {Scalar(1), Scalar(0)}; }
    static CentralVec cp_unit() { return {Scalar(0), Scalar(1)}; }
    static CentralVec cpp_unit() { return {Scalar(-1), Scalar(-1)}; }

    bool is_zero() const { return c.is_zero() && cp.is_zero(); }

    CentralVec operator-() const { return {-c, -cp}; }
    friend CentralVec operator+(const CentralVec& a, const CentralVec& b) { return {a.c + b.c, a.cp + b.cp}; }
    friend CentralVec operator-(const CentralVec& a, const CentralVec& b) { return {a.c - b.c, a.cp - b.cp}; }
    friend CentralVec operator*(const Scalar& s, const CentralVec& v) { return {s * v.c, s * v.cp}; }
    friend bool operator==(const CentralVec& a, const CentralVec& b) { return a.c == b.c && a.cp == b.cp; }
    friend bool operator!=(const CentralVec& a, const CentralVec& b) { return !(a == b); }

    std::string str() const;  // e.g. "4*c - 4*c'"
};

// Cocycle value on a pair of symmetric-basis elements f^i, g^j with
// f, g in {t, t', t''} and i, j >= 1. Same-variable pairs give zero.
CentralVec cocycle_table(TVar f, unsigned i, TVar g, unsigned j);

// Bilinear extension of the table through symmetric-basis coordinates.
CentralVec cocycle(const AElem& a, const AElem& b);

// Element of the loop algebra L = sl2 (x) A in equitable coordinates:
// x (x) X + y (x) Y + z (x) Z with A-coefficients.
struct LElem {
    AElem x, y, z;

    bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
    unsigned degree() const;
    const AElem& coeff(int i) const;

    LElem operator-() const { return {-x, -y, -z}; }
    friend LElem operator+(const LElem& a, const LElem& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend LElem operator-(const LElem& a, const LElem& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend LElem operator*(const Scalar& s, const LElem& v) { return {s * v.x, s * v.y, s * v.z}; }
    friend bool operator==(const LElem& a, const LElem& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
    friend bool operator!=(const LElem& a, const LElem& b) { return !(a == b); }

    std::string str() const;
};

// [x (x) a, y (x) b] = [x,y] (x) ab, extended bilinearly.
LElem l_bracket(const LElem& u, const LElem& v);

// x (x) a as an LElem.
LElem tensor(const Sl2Vec& v, const AElem& a);

// Element of L-hat = L (+) C.
struct LHatElem {
    LElem loop;
    CentralVec central;

    static LHatElem from_loop(LElem l) { return {std::move(l), CentralVec::zero()}; }
    static LHatElem from_central(CentralVec c) { return {LElem{}, std::move(c)}; }

    bool is_zero() const { return loop.is_zero() && central.is_zero(); }
    unsigned degree() const { return loop.degree(); }

    LHatElem operator-() const { return {-loop, -central}; }
    friend LHatElem operator+(const LHatElem& a, const LHatElem& b) { return {a.loop + b.loop, a.central + b.central}; }
    friend LHatElem operator-(const LHatElem& a, const LHatElem& b) { return {a.loop - b.loop, a.central - b.central}; }
    friend LHatElem operator*(const Scalar& s, const LHatElem& v) { return {s * v.loop, s * v.central}; }
    friend bool operator==(const LHatElem& a, const LHatElem& b) { return a.loop == b.loop && a.central == b.central; }
    friend bool operator!=(const LHatElem& a, const LHatElem& b) { return !(a == b); }

    // "T(X, <a>) + T(Y, <a>) + T(Z, <a>) + p*c + q*c'" with zero parts omitted.
    std::string str() const;
};

// [u, v] in L-hat: loop part [loop(u), loop(v)], central part
// sum_{i,j} (B_i | B_j) <a_i, b_j> over the equitable coordinates. Central
// arguments contribute nothing.
LHatElem lhat_bracket(const LHatElem& u, const LHatElem& v);

// The projection L-hat -> L with kernel C.
LElem pi_projection(const LHatElem& u);

}  // namespace tetra
