#pragma once

#include "tetra/lhat.hpp"
#include "tetra/report.hpp"

#include <stdexcept>
#include <vector>

namespace tetra {

// Maximum pole order / polynomial degree retained when an element of L-hat
// is flattened to coordinates. The truncated A-space has dimension 3*cap+1,
// so truncated L-hat has dimension 3*(3*cap+1) + 2.
struct DegreeCap {
    unsigned cap;
};

unsigned truncated_dim(DegreeCap cap);

struct DegreeOverflow : std::runtime_error {
    explicit DegreeOverflow(const std::string& what) : std::runtime_error(what) {}
};

// Coordinates in the enumerated basis: for each of X, Y, Z the A-basis
// (1, t^1..t^cap, t^-1..t^-cap, (t-1)^-1..(t-1)^-cap), with the central
// block (c, c') last. Throws DegreeOverflow naming the offending term when
// degree(u) > cap.
std::vector<Scalar> coordinates(const LHatElem& u, DegreeCap cap);
LHatElem from_coordinates(const std::vector<Scalar>& coords, DegreeCap cap);

// Reduced row-echelon basis of a span of L-hat elements. Rows are linearly
// independent with strictly increasing leading coordinates, so equal spans
// produce identical bases.
class SpanBasis {
public:
    SpanBasis(DegreeCap cap) : cap_(cap) {}

    DegreeCap cap() const { return cap_; }
    int dimension() const { return static_cast<int>(rows_.size()); }

    // Inserts the vector if it enlarges the span; returns true when it did.
    bool insert(const LHatElem& u);
    bool contains(const LHatElem& u) const;

    const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
    std::vector<LHatElem> elements() const;

    friend bool operator==(const SpanBasis& a, const SpanBasis& b) {
        return a.cap_.cap == b.cap_.cap && a.rows_ == b.rows_;
    }

private:
    std::vector<Scalar> residual(const LHatElem& u) const;
    DegreeCap cap_;
    std::vector<std::vector<Scalar>> rows_;  // RREF, leads_ strictly increasing
    std::vector<size_t> leads_;
};

SpanBasis row_reduce(const std::vector<LHatElem>& vectors, DegreeCap cap);

// dim(U + V) via a reduced basis of the concatenation.
int sum_dimension(const SpanBasis& a, const SpanBasis& b);
// dim(U ∩ V) = dim U + dim V - dim(U + V).
int intersection_dimension(const SpanBasis& a, const SpanBasis& b);

// Least subspace containing the generators and closed under brackets whose
// results stay within the cap; brackets of basis elements that exceed the
// cap are discarded, so the result is a subspace of the true subalgebra.
SpanBasis subalgebra_closure(const std::vector<LHatElem>& generators, DegreeCap cap);

// Elements of degree <= cap commuting with all 15 sigma-hat generator
// images; brackets are evaluated at cap+1 so no truncation loss occurs.
SpanBasis center_at_cap(DegreeCap cap);

struct OnsagerSummary {
    std::vector<bool> dolan_grady;     // six relation checks
    int dim_o, dim_op, dim_opp;        // closures of the three generator pairs
    int dim_sum;                       // dim(O + O' + O'' + C)
    bool pairwise_disjoint;            // all pairwise intersections zero
    bool direct_sum;                   // dim_sum == dim_o + dim_op + dim_opp + 2
};

OnsagerSummary onsager_summary(DegreeCap cap);
VerificationReport onsager_report(DegreeCap cap);

}  // namespace tetra
