#include "tetra/lhat.hpp"

#include "tetra/term_format.hpp"

#include <stdexcept>

namespace tetra {

namespace {

Scalar neg_one_pow(unsigned k) {
    return (k % 2 == 0) ? Scalar(1) : Scalar(-1);
}

CentralVec central_unit(TVar f) {
    switch (f) {
        case TVar::T: return CentralVec::c_unit();
        case TVar::TPrime: return CentralVec::cp_unit();
        case TVar::TSecond: return CentralVec::cpp_unit();
    }
    throw std::logic_error("central_unit: bad TVar");
}

}  // namespace

std::string CentralVec::str() const {
    if (is_zero())
        return "0";
    std::string out;
    append_signed_term(out, c, "c");
    append_signed_term(out, cp, "c'");
    return out;
}

CentralVec cocycle_table(TVar f, unsigned i, TVar g, unsigned j) {
    if (i == 0 || j == 0)
        throw std::invalid_argument("cocycle_table: exponents must be >= 1");
    if (f == g)
        return CentralVec::zero();
    if (g == next_var(f)) {
        // <f^i, (f')^j> = (-1)^i i binom(j,i) times the unit attached to f
        return (neg_one_pow(i) * Scalar(static_cast<long>(i)) * binomial(j, i)) * central_unit(f);
    }
    // g is the predecessor of f: <f^i, g^j> = (-1)^(j+1) j binom(i,j) unit(g)
    return (neg_one_pow(j + 1) * Scalar(static_cast<long>(j)) * binomial(i, j)) * central_unit(g);
}

CentralVec cocycle(const AElem& a, const AElem& b) {
    const SymCoords sa = a.to_sym();
    const SymCoords sb = b.to_sym();
    CentralVec r = CentralVec::zero();
    constexpr TVar vars[] = {TVar::T, TVar::TPrime, TVar::TSecond};
    for (TVar f : vars) {
        for (TVar g : vars) {
            if (f == g)
                continue;
            for (const auto& [i, ca] : sa.powers(f))
                for (const auto& [j, cb] : sb.powers(g))
                    r = r + (ca * cb) * cocycle_table(f, i, g, j);
        }
    }
    return r;
}

unsigned LElem::degree() const {
    return std::max(x.degree(), std::max(y.degree(), z.degree()));
}

const AElem& LElem::coeff(int i) const {
    switch (i) {
        case 0: return x;
        case 1: return y;
        case 2: return z;
    }
    throw std::out_of_range("LElem::coeff: index must be 0, 1 or 2");
}

std::string LElem::str() const {
    return LHatElem::from_loop(*this).str();
}

LElem tensor(const Sl2Vec& v, const AElem& a) {
    return {v.x * a, v.y * a, v.z * a};
}

LElem l_bracket(const LElem& u, const LElem& v) {
    LElem r;
    for (int i = 0; i < 3; ++i) {
        if (u.coeff(i).is_zero())
            continue;
        for (int j = 0; j < 3; ++j) {
            if (i == j || v.coeff(j).is_zero())
                continue;
            const Sl2Vec s = sl2_bracket(Sl2Vec::basis(i), Sl2Vec::basis(j));
            const AElem prod = u.coeff(i) * v.coeff(j);
            r.x += s.x * prod;
            r.y += s.y * prod;
            r.z += s.z * prod;
        }
    }
    return r;
}

LHatElem lhat_bracket(const LHatElem& u, const LHatElem& v) {
    LHatElem r = LHatElem::from_loop(l_bracket(u.loop, v.loop));
    const Mat3& gram = killing_gram();
    for (int i = 0; i < 3; ++i) {
        if (u.loop.coeff(i).is_zero())
            continue;
        for (int j = 0; j < 3; ++j) {
            if (v.loop.coeff(j).is_zero())
                continue;
            r.central = r.central + gram[i][j] * cocycle(u.loop.coeff(i), v.loop.coeff(j));
        }
    }
    return r;
}

LElem pi_projection(const LHatElem& u) {
    return u.loop;
}

std::string LHatElem::str() const {
    if (is_zero())
        return "0";
    std::string out;
    const char* names[] = {"X", "Y", "Z"};
    for (int i = 0; i < 3; ++i) {
        const AElem& a = loop.coeff(i);
        if (a.is_zero())
            continue;
        out += out.empty() ? "" : " + ";
        out += "T(";
        out += names[i];
        out += ", ";
        out += a.str();
        out += ")";
    }
    append_signed_term(out, central.c, "c");
    append_signed_term(out, central.cp, "c'");
    return out;
}

}  // namespace tetra
