#pragma once

#include <gmpxx.h>

#include <string>

namespace tetra {

// Exact rational scalar over arbitrary-precision integers. Always kept in
// lowest terms with positive denominator; every operation is exact.
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(long n) : v_(n) {}
    Scalar(long num, long den);
    explicit Scalar(mpq_class q);

    // Accepts "n" or "n/d".
    static Scalar from_string(const std::string& text);

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Scalar operator-() const { return Scalar(mpq_class(-v_)); }

    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }

    Scalar reciprocal() const;

    // "n" or "n/d", denominator omitted when 1.
    std::string str() const;

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

// binom(n, k), zero when k > n.
Scalar binomial(unsigned long n, unsigned long k);

}  // namespace tetra
