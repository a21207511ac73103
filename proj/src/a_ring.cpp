#include "tetra/a_ring.hpp"

#include "tetra/term_format.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

namespace tetra {

namespace {

enum Sector { kPoly = 0, kPole0 = 1, kPole1 = 2 };

Scalar neg_one_pow(unsigned k) {
    return (k % 2 == 0) ? Scalar(1) : Scalar(-1);
}

}  // namespace

TVar next_var(TVar v) {
    switch (v) {
        case TVar::T: return TVar::TPrime;
        case TVar::TPrime: return TVar::TSecond;
        case TVar::TSecond: return TVar::T;
    }
    throw std::logic_error("next_var: bad TVar");
}

std::string tvar_str(TVar v) {
    switch (v) {
        case TVar::T: return "t";
        case TVar::TPrime: return "t'";
        case TVar::TSecond: return "t''";
    }
    throw std::logic_error("tvar_str: bad TVar");
}

AElem::AElem(Scalar constant) : const_(std::move(constant)) {}

AElem AElem::t_power(int k) {
    AElem r;
    if (k == 0)
        r.const_ = Scalar(1);
    else if (k > 0)
        r.pos_[static_cast<unsigned>(k)] = Scalar(1);
    else
        r.pole0_[static_cast<unsigned>(-k)] = Scalar(1);
    return r;
}

AElem AElem::pole1_power(unsigned k) {
    if (k == 0)
        return AElem(Scalar(1));
    AElem r;
    r.pole1_[k] = Scalar(1);
    return r;
}

AElem AElem::var(TVar v) {
    switch (v) {
        case TVar::T: return t();
        case TVar::TPrime: return t_prime();
        case TVar::TSecond: return t_second();
    }
    throw std::logic_error("AElem::var: bad TVar");
}

bool AElem::is_zero() const {
    return const_.is_zero() && pos_.empty() && pole0_.empty() && pole1_.empty();
}

unsigned AElem::degree() const {
    unsigned d = 0;
    if (!pos_.empty())
        d = std::max(d, pos_.rbegin()->first);
    if (!pole0_.empty())
        d = std::max(d, pole0_.rbegin()->first);
    if (!pole1_.empty())
        d = std::max(d, pole1_.rbegin()->first);
    return d;
}

void AElem::add_term(int sector, unsigned k, const Scalar& coeff) {
    if (coeff.is_zero())
        return;
    if (k == 0) {
        const_ += coeff;
        return;
    }
    CoeffMap& m = sector == kPoly ? pos_ : sector == kPole0 ? pole0_ : pole1_;
    auto it = m.find(k);
    if (it == m.end()) {
        m.emplace(k, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero())
        m.erase(it);
}

AElem AElem::operator-() const {
    AElem r;
    r.const_ = -const_;
    for (const auto& [k, c] : pos_) r.pos_.emplace(k, -c);
    for (const auto& [k, c] : pole0_) r.pole0_.emplace(k, -c);
    for (const auto& [k, c] : pole1_) r.pole1_.emplace(k, -c);
    return r;
}

AElem& AElem::operator+=(const AElem& o) {
    const_ += o.const_;
    for (const auto& [k, c] : o.pos_) add_term(kPoly, k, c);
    for (const auto& [k, c] : o.pole0_) add_term(kPole0, k, c);
    for (const auto& [k, c] : o.pole1_) add_term(kPole1, k, c);
    return *this;
}

AElem& AElem::operator-=(const AElem& o) {
    return *this += -o;
}

bool operator==(const AElem& a, const AElem& b) {
    return a.const_ == b.const_ && a.pos_ == b.pos_ && a.pole0_ == b.pole0_ &&
           a.pole1_ == b.pole1_;
}

AElem operator*(const Scalar& s, AElem a) {
    if (s.is_zero())
        return AElem();
    a.const_ *= s;
    for (auto& [k, c] : a.pos_) c *= s;
    for (auto& [k, c] : a.pole0_) c *= s;
    for (auto& [k, c] : a.pole1_) c *= s;
    return a;
}

namespace {

// (t-1)^d expanded into powers of t.
AElem u_power(unsigned d) {
    AElem r;
    for (unsigned i = 0; i <= d; ++i) {
        Scalar c = binomial(d, i) * neg_one_pow(d - i);
        if (i == 0)
            r += AElem(c);
        else
            r += c * AElem::t_power(static_cast<int>(i));
    }
    return r;
}

AElem mixed_pole_product(unsigned i, unsigned j);

// Canonical form of the basis-term product; exponents: kPoly e >= 0 means
// t^e, kPole0 e >= 1 means t^-e, kPole1 e >= 1 means (t-1)^-e.
AElem term_product(int s1, unsigned k1, int s2, unsigned k2) {
    if (s1 > s2)
        return term_product(s2, k2, s1, k1);
    if (s1 == kPoly && s2 == kPoly)
        return AElem::t_power(static_cast<int>(k1 + k2));
    if (s1 == kPoly && s2 == kPole0)
        return AElem::t_power(static_cast<int>(k1) - static_cast<int>(k2));
    if (s1 == kPoly && s2 == kPole1) {
        // t^k (t-1)^-j via t^k = sum_m binom(k,m) (t-1)^m
        AElem r;
        for (unsigned m = 0; m <= k1; ++m) {
            Scalar c = binomial(k1, m);
            if (m >= k2)
                r += c * u_power(m - k2);
            else
                r += c * AElem::pole1_power(k2 - m);
        }
        return r;
    }
    if (s1 == kPole0 && s2 == kPole0)
        return AElem::t_power(-static_cast<int>(k1 + k2));
    if (s1 == kPole0 && s2 == kPole1)
        return mixed_pole_product(k1, k2);
    if (s1 == kPole1 && s2 == kPole1)
        return AElem::pole1_power(k1 + k2);
    throw std::logic_error("term_product: bad sectors");
}

// t^-i (t-1)^-j reduced to partial fractions by peeling off copies of
// 1/(t(t-1)) = 1/(t-1) - 1/t. Memoized; recursion strictly decreases i+j.
AElem mixed_pole_product(unsigned i, unsigned j) {
    if (i == 0 && j == 0)
        return AElem(Scalar(1));
    if (i == 0)
        return AElem::pole1_power(j);
    if (j == 0)
        return AElem::t_power(-static_cast<int>(i));

    static std::map<std::pair<unsigned, unsigned>, AElem> cache;
    static std::mutex cache_mu;
    const std::pair<unsigned, unsigned> key{i, j};
    {
        std::lock_guard<std::mutex> lock(cache_mu);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
    }

    const AElem base = AElem::pole1_power(1) - AElem::t_power(-1);
    AElem r = mixed_pole_product(i - 1, j - 1) * base;

    std::lock_guard<std::mutex> lock(cache_mu);
    cache.emplace(key, r);
    return r;
}

// Visits every stored term as (sector, exponent, coeff); the constant is
// reported as (kPoly, 0, c).
template <typename Fn>
void for_each_term(const AElem& a, Fn&& fn) {
    if (!a.const_term().is_zero())
        fn(kPoly, 0u, a.const_term());
    for (const auto& [k, c] : a.pos()) fn(kPoly, k, c);
    for (const auto& [k, c] : a.pole0()) fn(kPole0, k, c);
    for (const auto& [k, c] : a.pole1()) fn(kPole1, k, c);
}

}  // namespace

AElem operator*(const AElem& a, const AElem& b) {
    AElem r;
    for_each_term(a, [&](int s1, unsigned k1, const Scalar& c1) {
        for_each_term(b, [&](int s2, unsigned k2, const Scalar& c2) {
            r += (c1 * c2) * term_product(s1, k1, s2, k2);
        });
    });
    return r;
}

AElem AElem::prime() const {
    AElem r(const_);
    // t^k -> (1 - 1/t)^k
    for (const auto& [k, c] : pos_)
        for (unsigned m = 0; m <= k; ++m)
            r.add_term(kPole0, m, c * binomial(k, m) * neg_one_pow(m));
    // t^-k -> (t')^-k = (1 + 1/(t-1))^k
    for (const auto& [k, c] : pole0_)
        for (unsigned m = 0; m <= k; ++m)
            r.add_term(kPole1, m, c * binomial(k, m));
    // (t-1)^-k -> (t'-1)^-k = (-t)^k
    for (const auto& [k, c] : pole1_)
        r.add_term(kPoly, k, c * neg_one_pow(k));
    return r;
}

AElem AElem::pow(int n) const {
    if (n == 0)
        return AElem(Scalar(1));
    AElem base = *this;
    if (n < 0) {
        auto inv = try_invert();
        if (!inv)
            throw std::domain_error("AElem::pow: negative power of a non-unit");
        base = *inv;
        n = -n;
    }
    AElem r = base;
    for (int i = 1; i < n; ++i)
        r = r * base;
    return r;
}

std::optional<AElem> AElem::try_invert() const {
    if (is_zero())
        return std::nullopt;
    // The units of A are exactly c * t^p (t-1)^q. Clear both poles, then
    // factor the resulting polynomial by t and t-1 and demand a constant
    // remainder.
    const int n = static_cast<int>(degree());
    AElem f = *this * t_power(n) * u_power(static_cast<unsigned>(n));
    if (!f.pole0_.empty() || !f.pole1_.empty())
        throw std::logic_error("AElem::try_invert: pole clearing failed");

    std::map<unsigned, Scalar> coeffs;
    if (!f.const_.is_zero())
        coeffs[0] = f.const_;
    for (const auto& [k, c] : f.pos_) coeffs[k] = c;

    const unsigned alpha = coeffs.begin()->first;  // multiplicity of the root 0
    std::map<unsigned, Scalar> shifted;
    for (const auto& [k, c] : coeffs) shifted[k - alpha] = c;

    // substitute u = t-1: g_m = sum_k c_k binom(k, m)
    std::map<unsigned, Scalar> g;
    const unsigned deg = shifted.rbegin()->first;
    for (unsigned m = 0; m <= deg; ++m) {
        Scalar acc(0);
        for (const auto& [k, c] : shifted) acc += c * binomial(k, m);
        if (!acc.is_zero())
            g[m] = acc;
    }
    const unsigned beta = g.begin()->first;  // multiplicity of the root 1
    if (g.size() != 1)
        return std::nullopt;  // a third irreducible factor survives

    const Scalar lead = g.begin()->second;
    AElem inv = AElem(lead.reciprocal()) * t_power(n - static_cast<int>(alpha));
    const int q = n - static_cast<int>(beta);
    if (q >= 0)
        inv = inv * u_power(static_cast<unsigned>(q));
    else
        inv = inv * pole1_power(static_cast<unsigned>(-q));
    return inv;
}

SymCoords AElem::to_sym() const {
    SymCoords s;
    s.const_term = const_;
    s.t_pow = pos_;
    // t^-k = (1 - t')^k
    for (const auto& [k, c] : pole0_) {
        for (unsigned m = 0; m <= k; ++m) {
            Scalar add = c * binomial(k, m) * neg_one_pow(m);
            if (m == 0) {
                s.const_term += add;
                continue;
            }
            auto it = s.tp_pow.find(m);
            if (it == s.tp_pow.end())
                s.tp_pow.emplace(m, add);
            else if ((it->second += add).is_zero())
                s.tp_pow.erase(it);
        }
    }
    // (t-1)^-k = (-1)^k (t'')^k
    for (const auto& [k, c] : pole1_)
        s.tpp_pow.emplace(k, c * neg_one_pow(k));
    return s;
}

AElem AElem::from_sym(const SymCoords& s) {
    AElem r(s.const_term);
    for (const auto& [k, c] : s.t_pow) r.add_term(kPoly, k, c);
    // (t')^i = (1 - 1/t)^i
    for (const auto& [i, c] : s.tp_pow)
        for (unsigned m = 0; m <= i; ++m)
            r.add_term(kPole0, m, c * binomial(i, m) * neg_one_pow(m));
    // (t'')^i = (-1)^i (t-1)^-i
    for (const auto& [i, c] : s.tpp_pow)
        r.add_term(kPole1, i, c * neg_one_pow(i));
    return r;
}

std::string AElem::str() const {
    if (is_zero())
        return "0";
    std::string out;
    append_signed_term(out, const_, "");
    for (const auto& [k, c] : pos_)
        append_signed_term(out, c, k == 1 ? "t" : "t^" + std::to_string(k));
    for (const auto& [k, c] : pole0_)
        append_signed_term(out, c, "t^-" + std::to_string(k));
    for (const auto& [k, c] : pole1_)
        append_signed_term(out, c, "(t-1)^-" + std::to_string(k));
    return out;
}

const AElem::CoeffMap& SymCoords::powers(TVar v) const {
    switch (v) {
        case TVar::T: return t_pow;
        case TVar::TPrime: return tp_pow;
        case TVar::TSecond: return tpp_pow;
    }
    throw std::logic_error("SymCoords::powers: bad TVar");
}

bool operator==(const SymCoords& a, const SymCoords& b) {
    return a.const_term == b.const_term && a.t_pow == b.t_pow &&
           a.tp_pow == b.tp_pow && a.tpp_pow == b.tpp_pow;
}

}  // namespace tetra
