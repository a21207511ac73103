#include "tetra/sl2.hpp"

#include "tetra/term_format.hpp"

#include <stdexcept>

namespace tetra {

Sl2Vec Sl2Vec::basis(int i) {
    switch (i) {
        case 0: return X();
        case 1: return Y();
        case 2: return Z();
    }
    throw std::out_of_range("Sl2Vec::basis: index must be 0, 1 or 2");
}

const Scalar& Sl2Vec::coord(int i) const {
    switch (i) {
        case 0: return x;
        case 1: return y;
        case 2: return z;
    }
    throw std::out_of_range("Sl2Vec::coord: index must be 0, 1 or 2");
}

std::string Sl2Vec::str() const {
    if (is_zero())
        return "0";
    std::string out;
    append_signed_term(out, x, "X");
    append_signed_term(out, y, "Y");
    append_signed_term(out, z, "Z");
    return out;
}

Sl2Vec from_canonical(const CanonicalSl2Vec& v) {
    // e = (X+Z)/2, f = -(Y+Z)/2, h = Z
    const Scalar half(1, 2);
    return {half * v.e,
            -(half * v.f),
            half * v.e - half * v.f + v.h};
}

Sl2Vec sl2_bracket(const Sl2Vec& u, const Sl2Vec& v) {
    const Scalar xy = u.x * v.y - u.y * v.x;
    const Scalar yz = u.y * v.z - u.z * v.y;
    const Scalar zx = u.z * v.x - u.x * v.z;
    const Scalar two(2);
    return {two * (xy + zx), two * (xy + yz), two * (yz + zx)};
}

Mat3 adjoint_matrix(const Sl2Vec& u) {
    Mat3 m;
    for (int j = 0; j < 3; ++j) {
        const Sl2Vec col = sl2_bracket(u, Sl2Vec::basis(j));
        for (int i = 0; i < 3; ++i)
            m[i][j] = col.coord(i);
    }
    return m;
}

Scalar killing(const Sl2Vec& u, const Sl2Vec& v) {
    const Mat3 a = adjoint_matrix(u);
    const Mat3 b = adjoint_matrix(v);
    Scalar tr(0);
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            tr += a[i][k] * b[k][i];
    return tr;
}

const Mat3& killing_gram() {
    static const Mat3 gram = [] {
        Mat3 g;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                g[i][j] = killing(Sl2Vec::basis(i), Sl2Vec::basis(j));
        return g;
    }();
    return gram;
}

}  // namespace tetra
