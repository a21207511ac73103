#include "tetra/span_lab.hpp"

#include "tetra/presentation.hpp"

#include <algorithm>

namespace tetra {

namespace {

unsigned a_block_dim(DegreeCap cap) {
    return 3 * cap.cap + 1;
}

const char* coord_names[] = {"X", "Y", "Z"};

}  // namespace

unsigned truncated_dim(DegreeCap cap) {
    return 3 * a_block_dim(cap) + 2;
}

std::vector<Scalar> coordinates(const LHatElem& u, DegreeCap cap) {
    const unsigned block = a_block_dim(cap);
    std::vector<Scalar> v(truncated_dim(cap), Scalar(0));
    for (int b = 0; b < 3; ++b) {
        const AElem& a = u.loop.coeff(b);
        const unsigned base = static_cast<unsigned>(b) * block;
        const auto check = [&](unsigned k, const char* what) {
            if (k > cap.cap)
                throw DegreeOverflow(std::string("coordinates: term ") + coord_names[b] +
                                     " (x) " + what + "^" + std::to_string(k) +
                                     " exceeds cap " + std::to_string(cap.cap));
        };
        v[base] = a.const_term();
        for (const auto& [k, c] : a.pos()) {
            check(k, "t");
            v[base + k] = c;
        }
        for (const auto& [k, c] : a.pole0()) {
            check(k, "t^-1 order");
            v[base + cap.cap + k] = c;
        }
        for (const auto& [k, c] : a.pole1()) {
            check(k, "(t-1)^-1 order");
            v[base + 2 * cap.cap + k] = c;
        }
    }
    v[3 * block] = u.central.c;
    v[3 * block + 1] = u.central.cp;
    return v;
}

LHatElem from_coordinates(const std::vector<Scalar>& coords, DegreeCap cap) {
    const unsigned block = a_block_dim(cap);
    if (coords.size() != truncated_dim(cap))
        throw std::invalid_argument("from_coordinates: wrong length");
    LHatElem u;
    for (int b = 0; b < 3; ++b) {
        const unsigned base = static_cast<unsigned>(b) * block;
        AElem a(coords[base]);
        for (unsigned k = 1; k <= cap.cap; ++k) {
            a += coords[base + k] * AElem::t_power(static_cast<int>(k));
            a += coords[base + cap.cap + k] * AElem::t_power(-static_cast<int>(k));
            a += coords[base + 2 * cap.cap + k] * AElem::pole1_power(k);
        }
        u.loop = u.loop + tensor(Sl2Vec::basis(b), a);
    }
    u.central = CentralVec{coords[3 * block], coords[3 * block + 1]};
    return u;
}

std::vector<Scalar> SpanBasis::residual(const LHatElem& u) const {
    std::vector<Scalar> v = coordinates(u, cap_);
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& factor = v[leads_[r]];
        if (factor.is_zero())
            continue;
        const Scalar f = factor;  // rows are normalized to a unit pivot
        for (size_t c = leads_[r]; c < v.size(); ++c)
            v[c] -= f * rows_[r][c];
    }
    return v;
}

bool SpanBasis::contains(const LHatElem& u) const {
    const std::vector<Scalar> v = residual(u);
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool SpanBasis::insert(const LHatElem& u) {
    std::vector<Scalar> v = residual(u);
    size_t lead = v.size();
    for (size_t c = 0; c < v.size(); ++c) {
        if (!v[c].is_zero()) {
            lead = c;
            break;
        }
    }
    if (lead == v.size())
        return false;
    const Scalar pivot = v[lead];
    for (size_t c = lead; c < v.size(); ++c)
        v[c] /= pivot;
    // eliminate the new lead from existing rows, then place in order
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar f = rows_[r][lead];
        if (f.is_zero())
            continue;
        for (size_t c = lead; c < v.size(); ++c)
            rows_[r][c] -= f * v[c];
    }
    const auto pos = std::lower_bound(leads_.begin(), leads_.end(), lead);
    const size_t idx = static_cast<size_t>(pos - leads_.begin());
    leads_.insert(pos, lead);
    rows_.insert(rows_.begin() + static_cast<long>(idx), std::move(v));
    return true;
}

std::vector<LHatElem> SpanBasis::elements() const {
    std::vector<LHatElem> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_)
        out.push_back(from_coordinates(row, cap_));
    return out;
}

SpanBasis row_reduce(const std::vector<LHatElem>& vectors, DegreeCap cap) {
    SpanBasis basis(cap);
    for (const LHatElem& v : vectors)
        basis.insert(v);
    return basis;
}

int sum_dimension(const SpanBasis& a, const SpanBasis& b) {
    std::vector<LHatElem> joined = a.elements();
    const std::vector<LHatElem> more = b.elements();
    joined.insert(joined.end(), more.begin(), more.end());
    return row_reduce(joined, a.cap()).dimension();
}

int intersection_dimension(const SpanBasis& a, const SpanBasis& b) {
    return a.dimension() + b.dimension() - sum_dimension(a, b);
}

SpanBasis subalgebra_closure(const std::vector<LHatElem>& generators, DegreeCap cap) {
    SpanBasis basis = row_reduce(generators, cap);
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<LHatElem> elems = basis.elements();
        for (size_t i = 0; i < elems.size(); ++i) {
            for (size_t j = i + 1; j < elems.size(); ++j) {
                const LHatElem w = lhat_bracket(elems[i], elems[j]);
                if (w.degree() > cap.cap)
                    continue;  // discarded by the truncation semantics
                if (basis.insert(w))
                    grew = true;
            }
        }
    }
    return basis;
}

SpanBasis center_at_cap(DegreeCap cap) {
    if (cap.cap < 1)
        throw std::invalid_argument("center_at_cap: cap must be >= 1");
    const DegreeCap outer{cap.cap + 1};
    const unsigned n = truncated_dim(cap);
    const unsigned m = truncated_dim(outer);

    std::vector<LHatElem> gen_images;
    for (const GenSym& g : all_generators())
        gen_images.push_back(sigma_hat(g));

    // columns: bracket of each coordinate basis vector with every generator
    std::vector<std::vector<Scalar>> matrix;  // rows indexed later by RREF
    matrix.reserve(n);
    for (unsigned col = 0; col < n; ++col) {
        std::vector<Scalar> unit(n, Scalar(0));
        unit[col] = Scalar(1);
        const LHatElem e = from_coordinates(unit, cap);
        std::vector<Scalar> stacked;
        stacked.reserve(gen_images.size() * m);
        for (const LHatElem& g : gen_images) {
            const std::vector<Scalar> w = coordinates(lhat_bracket(e, g), outer);
            stacked.insert(stacked.end(), w.begin(), w.end());
        }
        matrix.push_back(std::move(stacked));
    }

    // kernel of the stacked map via Gauss-Jordan on the transposed system
    const size_t rows_n = gen_images.size() * m;
    std::vector<size_t> pivot_of_col(n, SIZE_MAX);
    std::vector<std::vector<Scalar>> rref;  // each row has n entries
    for (size_t r = 0; r < rows_n; ++r) {
        std::vector<Scalar> row(n, Scalar(0));
        for (unsigned c = 0; c < n; ++c)
            row[c] = matrix[c][r];
        // reduce against existing rref rows
        for (size_t k = 0; k < rref.size(); ++k) {
            size_t lead = 0;
            while (rref[k][lead].is_zero())
                ++lead;
            if (!row[lead].is_zero()) {
                const Scalar f = row[lead];
                for (unsigned c = 0; c < n; ++c)
                    row[c] -= f * rref[k][c];
            }
        }
        size_t lead = n;
        for (unsigned c = 0; c < n; ++c) {
            if (!row[c].is_zero()) {
                lead = c;
                break;
            }
        }
        if (lead == n)
            continue;
        const Scalar pivot = row[lead];
        for (unsigned c = 0; c < n; ++c)
            row[c] /= pivot;
        for (auto& existing : rref) {
            if (!existing[lead].is_zero()) {
                const Scalar f = existing[lead];
                for (unsigned c = 0; c < n; ++c)
                    existing[c] -= f * row[c];
            }
        }
        pivot_of_col[lead] = rref.size();
        rref.push_back(std::move(row));
    }

    // free columns parameterize the kernel
    std::vector<LHatElem> kernel;
    for (unsigned c = 0; c < n; ++c) {
        if (pivot_of_col[c] != SIZE_MAX)
            continue;
        std::vector<Scalar> v(n, Scalar(0));
        v[c] = Scalar(1);
        for (unsigned lead = 0; lead < n; ++lead) {
            if (pivot_of_col[lead] == SIZE_MAX)
                continue;
            v[lead] = -rref[pivot_of_col[lead]][c];
        }
        kernel.push_back(from_coordinates(v, cap));
    }
    return row_reduce(kernel, cap);
}

OnsagerSummary onsager_summary(DegreeCap cap) {
    const auto pair_images = [](int i1, int j1, int i2, int j2) {
        return std::make_pair(sigma_hat(GenSym{xgen(i1, j1)}), sigma_hat(GenSym{xgen(i2, j2)}));
    };
    const std::array<std::pair<LHatElem, LHatElem>, 3> pairs = {
        pair_images(0, 1, 2, 3), pair_images(0, 2, 1, 3), pair_images(0, 3, 1, 2)};

    OnsagerSummary s{};
    const auto dolan_grady = [](const LHatElem& a, const LHatElem& b) {
        const LHatElem lhs = lhat_bracket(a, lhat_bracket(a, lhat_bracket(a, b)));
        const LHatElem rhs = Scalar(4) * lhat_bracket(a, b);
        return (lhs - rhs).is_zero();
    };
    for (const auto& [a, b] : pairs) {
        s.dolan_grady.push_back(dolan_grady(a, b));
        s.dolan_grady.push_back(dolan_grady(b, a));
    }

    std::array<SpanBasis, 3> closures = {
        subalgebra_closure({pairs[0].first, pairs[0].second}, cap),
        subalgebra_closure({pairs[1].first, pairs[1].second}, cap),
        subalgebra_closure({pairs[2].first, pairs[2].second}, cap)};
    const SpanBasis center = row_reduce({LHatElem::from_central(CentralVec::c_unit()),
                                         LHatElem::from_central(CentralVec::cp_unit())},
                                        cap);

    s.dim_o = closures[0].dimension();
    s.dim_op = closures[1].dimension();
    s.dim_opp = closures[2].dimension();

    s.pairwise_disjoint = true;
    const std::array<const SpanBasis*, 4> spaces = {&closures[0], &closures[1], &closures[2], &center};
    for (size_t i = 0; i < spaces.size(); ++i)
        for (size_t j = i + 1; j < spaces.size(); ++j)
            if (intersection_dimension(*spaces[i], *spaces[j]) != 0)
                s.pairwise_disjoint = false;

    std::vector<LHatElem> all;
    for (const SpanBasis* sp : spaces) {
        const auto elems = sp->elements();
        all.insert(all.end(), elems.begin(), elems.end());
    }
    s.dim_sum = row_reduce(all, cap).dimension();
    s.direct_sum = s.dim_sum == s.dim_o + s.dim_op + s.dim_opp + 2;
    return s;
}

VerificationReport onsager_report(DegreeCap cap) {
    if (cap.cap < 2)
        throw std::invalid_argument("onsager_report: cap must be >= 2");
    const OnsagerSummary s = onsager_summary(cap);
    VerificationReport report;
    report.suite = "onsager";
    const char* pair_names[] = {"(X_{0,1},X_{2,3})", "(X_{0,2},X_{1,3})", "(X_{0,3},X_{1,2})"};
    for (int p = 0; p < 3; ++p) {
        report.add(std::string("dolan-grady ") + pair_names[p] + " forward",
                   s.dolan_grady[static_cast<size_t>(2 * p)]);
        report.add(std::string("dolan-grady ") + pair_names[p] + " reverse",
                   s.dolan_grady[static_cast<size_t>(2 * p + 1)]);
    }
    report.add("pairwise intersections zero at cap " + std::to_string(cap.cap),
               s.pairwise_disjoint);
    report.add("dim(O+O'+O''+C) = dim O + dim O' + dim O'' + 2 at cap " + std::to_string(cap.cap),
               s.direct_sum,
               std::to_string(s.dim_sum),
               std::to_string(s.dim_o + s.dim_op + s.dim_opp + 2),
               std::to_string(s.dim_sum - s.dim_o - s.dim_op - s.dim_opp - 2));
    return report;
}

}  // namespace tetra
