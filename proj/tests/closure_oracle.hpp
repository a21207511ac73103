#pragma once

// Brute-force closure oracle, independent of the SpanBasis machinery: naive
// repeated bracketing with rank tracked by fraction-free (Bareiss) elimination
// over arbitrary-precision integers. Used to derive and pin the truncated
// closure dimensions checked by the regression and acceptance suites.

#include "tetra/lhat.hpp"

#include <gmpxx.h>

#include <vector>

namespace tetra::oracle {

// Own flattening, deliberately ordered differently from the library's
// coordinate enumeration (central block first, pole sectors interleaved).
inline std::vector<mpq_class> flatten(const LHatElem& u, unsigned cap) {
    std::vector<mpq_class> v;
    v.push_back(u.central.c.raw());
    v.push_back(u.central.cp.raw());
    for (int b = 0; b < 3; ++b) {
        const AElem& a = u.loop.coeff(b);
        v.push_back(a.const_term().raw());
        for (unsigned k = 1; k <= cap; ++k) {
            const auto at = [](const AElem::CoeffMap& m, unsigned key) {
                auto it = m.find(key);
                return it == m.end() ? mpq_class(0) : it->second.raw();
            };
            v.push_back(at(a.pos(), k));
            v.push_back(at(a.pole0(), k));
            v.push_back(at(a.pole1(), k));
        }
    }
    return v;
}

// Rank by Bareiss fraction-free elimination after clearing denominators.
inline int rank(std::vector<std::vector<mpq_class>> m) {
    if (m.empty())
        return 0;
    const size_t cols = m[0].size();
    std::vector<std::vector<mpz_class>> a;
    for (auto& row : m) {
        mpz_class lcm(1);
        for (const auto& q : row)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        std::vector<mpz_class> r;
        for (const auto& q : row)
            r.push_back(mpz_class(q.get_num() * (lcm / q.get_den())));
        a.push_back(std::move(r));
    }
    const size_t rows = a.size();
    mpz_class prev(1);
    size_t rank_count = 0;
    for (size_t col = 0; col < cols && rank_count < rows; ++col) {
        size_t pivot = rank_count;
        while (pivot < rows && a[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[rank_count], a[pivot]);
        for (size_t r = rank_count + 1; r < rows; ++r) {
            for (size_t c = col + 1; c < cols; ++c)
                a[r][c] = (a[rank_count][col] * a[r][c] - a[r][col] * a[rank_count][c]) / prev;
            a[r][col] = 0;
        }
        prev = a[rank_count][col];
        ++rank_count;
    }
    return static_cast<int>(rank_count);
}

struct Closure {
    std::vector<LHatElem> elements;  // spanning set, raw (not reduced)
    int dimension;
};

inline Closure closure(std::vector<LHatElem> gens, unsigned cap) {
    std::vector<std::vector<mpq_class>> flat;
    std::vector<LHatElem> kept;
    const auto try_add = [&](const LHatElem& u) {
        if (u.is_zero() || u.degree() > cap)
            return false;
        flat.push_back(flatten(u, cap));
        if (rank(flat) == static_cast<int>(kept.size())) {
            flat.pop_back();
            return false;
        }
        kept.push_back(u);
        return true;
    };
    for (const LHatElem& g : gens)
        try_add(g);
    bool grew = true;
    while (grew) {
        grew = false;
        const size_t n = kept.size();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (try_add(lhat_bracket(kept[i], kept[j])))
                    grew = true;
    }
    return {kept, static_cast<int>(kept.size())};
}

}  // namespace tetra::oracle
