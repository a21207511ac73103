#pragma once

#include "tetra/scalar.hpp"

#include <array>
#include <string>

namespace tetra {

// sl2 in the equitable basis X, Y, Z with [X,Y] = 2X+2Y, [Y,Z] = 2Y+2Z,
// [Z,X] = 2Z+2X.
struct Sl2Vec {
    Scalar x, y, z;

    static Sl2Vec X() { return {Scalar(1), Scalar(0), Scalar(0)}; }
    static Sl2Vec Y() { return {Scalar(0), Scalar(1), Scalar(0)}; }
    static Sl2Vec Z() { return {Scalar(0), Scalar(0), Scalar(1)}; }
    static Sl2Vec basis(int i);  // 0 -> X, 1 -> Y, 2 -> Z

    bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
    const Scalar& coord(int i) const;

    Sl2Vec operator-() const { return {-x, -y, -z}; }
    friend Sl2Vec operator+(const Sl2Vec& a, const Sl2Vec& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Sl2Vec operator-(const Sl2Vec& a, const Sl2Vec& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Sl2Vec operator*(const Scalar& s, const Sl2Vec& v) { return {s * v.x, s * v.y, s * v.z}; }
    friend bool operator==(const Sl2Vec& a, const Sl2Vec& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
    friend bool operator!=(const Sl2Vec& a, const Sl2Vec& b) { return !(a == b); }

    std::string str() const;  // e.g. "2*X - 1/2*Z"
};

// sl2 in the canonical basis e, f, h with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
struct CanonicalSl2Vec {
    Scalar e, f, h;
};

// Change of basis along X = 2e - h, Y = -2f - h, Z = h.
Sl2Vec from_canonical(const CanonicalSl2Vec& v);

Sl2Vec sl2_bracket(const Sl2Vec& u, const Sl2Vec& v);

using Mat3 = std::array<std::array<Scalar, 3>, 3>;

// Matrix of ad u in the equitable basis (columns are [u, X], [u, Y], [u, Z]).
Mat3 adjoint_matrix(const Sl2Vec& u);

// Killing form trace(ad u . ad v).
Scalar killing(const Sl2Vec& u, const Sl2Vec& v);

// Gram matrix of the Killing form on (X, Y, Z), computed once.
const Mat3& killing_gram();

}  // namespace tetra
