#include "tetra/scalar.hpp"

#include <stdexcept>

namespace tetra {

Scalar::Scalar(long num, long den) {
    if (den == 0)
        throw std::domain_error("Scalar: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Scalar::Scalar(mpq_class q) : v_(std::move(q)) {
    v_.canonicalize();
}

Scalar Scalar::from_string(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("Scalar: bad rational literal '" + text + "'");
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero())
        throw std::domain_error("Scalar: division by zero");
    v_ /= o.v_;
    return *this;
}

Scalar Scalar::reciprocal() const {
    if (is_zero())
        throw std::domain_error("Scalar: reciprocal of zero");
    return Scalar(mpq_class(1) / v_);
}

std::string Scalar::str() const {
    return v_.get_str();
}

Scalar binomial(unsigned long n, unsigned long k) {
    if (k > n)
        return Scalar(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Scalar(mpq_class(b));
}

}  // namespace tetra
