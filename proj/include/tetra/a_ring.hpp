#pragma once

#include "tetra/scalar.hpp"

#include <map>
#include <optional>
#include <string>

namespace tetra {

// The three distinguished generators of A whose powers form the symmetric
// basis: t, t' = 1 - 1/t and t'' = 1/(1 - t).
enum class TVar { T, TPrime, TSecond };

TVar next_var(TVar v);   // t -> t' -> t'' -> t
std::string tvar_str(TVar v);

struct SymCoords;

// Element of A = F[t, 1/t, 1/(t-1)] in partial-fraction coordinates: a
// constant, a polynomial part sum_k a_k t^k (k >= 1), a pole part at 0
// sum_k b_k t^-k and a pole part at 1 sum_k c_k (t-1)^-k. No zero
// coefficients are ever stored, so equality is structural and each element
// has exactly one representation.
class AElem {
public:
    using CoeffMap = std::map<unsigned, Scalar>;  // exponent (>= 1) -> coefficient

    AElem() = default;
    explicit AElem(Scalar constant);
    AElem(long n) : AElem(Scalar(n)) {}

    static AElem t() { return t_power(1); }
    static AElem t_prime() { return t().prime(); }
    static AElem t_second() { return t().prime().prime(); }

    // t^k for any integer k; k = 0 gives 1.
    static AElem t_power(int k);
    // (t-1)^-k, k >= 1.
    static AElem pole1_power(unsigned k);
    // the generator of TVar as an element
    static AElem var(TVar v);

    const Scalar& const_term() const { return const_; }
    const CoeffMap& pos() const { return pos_; }
    const CoeffMap& pole0() const { return pole0_; }
    const CoeffMap& pole1() const { return pole1_; }

    bool is_zero() const;
    bool is_constant() const { return pos_.empty() && pole0_.empty() && pole1_.empty(); }
    // max pole order / polynomial degree, 0 for constants
    unsigned degree() const;

    AElem operator-() const;
    AElem& operator+=(const AElem& o);
    AElem& operator-=(const AElem& o);
    friend AElem operator+(AElem a, const AElem& b) { return a += b; }
    friend AElem operator-(AElem a, const AElem& b) { return a -= b; }
    friend AElem operator*(const AElem& a, const AElem& b);
    friend AElem operator*(const Scalar& s, AElem a);

    friend bool operator==(const AElem& a, const AElem& b);
    friend bool operator!=(const AElem& a, const AElem& b) { return !(a == b); }

    // The unique algebra automorphism with t -> 1 - 1/t; it has order 3.
    AElem prime() const;

    // a^n; for n < 0 the element must be a unit of A (a scalar multiple of
    // t^p (t-1)^q), otherwise std::domain_error.
    AElem pow(int n) const;
    // Inverse when the element is a unit of A, std::nullopt otherwise.
    std::optional<AElem> try_invert() const;

    SymCoords to_sym() const;
    static AElem from_sym(const SymCoords& s);

    // Canonical text form, e.g. "-1 + 2*t^2 + 1/2*t^-1 - 3*(t-1)^-2".
    // Terms are ordered constant, ascending t^k, ascending t^-k, ascending
    // (t-1)^-k; parseable by the expression grammar.
    std::string str() const;

private:
    Scalar const_;
    CoeffMap pos_;
    CoeffMap pole0_;
    CoeffMap pole1_;

    void add_term(int sector, unsigned k, const Scalar& coeff);  // sector: 0 pos, 1 pole0, 2 pole1
    friend struct AElemBuilder;
};

// Coordinates in the symmetric basis {1} u {t^i, (t')^i, (t'')^i : i >= 1}.
struct SymCoords {
    Scalar const_term;
    AElem::CoeffMap t_pow;
    AElem::CoeffMap tp_pow;
    AElem::CoeffMap tpp_pow;

    const AElem::CoeffMap& powers(TVar v) const;
    friend bool operator==(const SymCoords& a, const SymCoords& b);
    friend bool operator!=(const SymCoords& a, const SymCoords& b) { return !(a == b); }
};

}  // namespace tetra
