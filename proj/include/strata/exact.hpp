#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <vector>

// Exact integer/rational linear algebra: Hermite normal form, lattice
// membership, rank, and a rational feasibility test for "zero lies in the
// relative interior of a convex hull".  No floating point anywhere.

namespace strata::exact {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Int>;
using RationalVector = std::vector<Rat>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    IntVector row(std::size_t r) const;

    bool operator==(const IntMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> a_;
};

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

struct HnfResult {
    IntMatrix h;  // row-style HNF: pivots positive, entries above pivots reduced
    IntMatrix u;  // unimodular, u * input = h
};

// Row-style Hermite normal form.  Pivot columns increase strictly, pivot
// entries are positive, entries above a pivot lie in [0, pivot), zero rows
// are collected at the bottom.  The nonzero rows are a canonical basis of
// the row lattice, so lattice equality is testable by comparing forms.
HnfResult hermite_normal_form(const IntMatrix& m);

std::size_t hnf_rank(const IntMatrix& h);

// Membership of v in the row lattice of an HNF matrix, by back-substitution.
bool hnf_contains(const IntMatrix& h, const IntVector& v);

// Coefficients c with c * h = v (nonzero rows of h only), if any.
std::optional<IntVector> hnf_solve(const IntMatrix& h, const IntVector& v);

// True iff v is an integer combination of the rows of basis.
// Throws std::invalid_argument on dimension mismatch.
bool lattice_contains(const IntMatrix& basis, const IntVector& v);

// Coefficients c with c * basis = v, if v lies in the row lattice.
std::optional<IntVector> lattice_solve(const IntMatrix& basis, const IntVector& v);

// Rank over Q (= rank of the row lattice).
std::size_t integer_rank(const IntMatrix& m);

// True iff there exist strictly positive rationals lambda_p with
// sum lambda_p = 1 and sum lambda_p * p = 0, i.e. 0 lies in the relative
// interior of the convex hull of the points.  Decided by an exact-rational
// simplex.  Throws std::invalid_argument on empty input.
bool zero_in_relative_interior(const std::vector<IntVector>& points);

// Same decision, returning the witness coefficients when feasible.
std::optional<RationalVector>
relative_interior_certificate(const std::vector<IntVector>& points);

// Exact simplex: maximize c.x subject to a*x = b, x >= 0, for problems with
// a bounded optimum (all uses here are).  Bland's rule, two phases.
// Returns nullopt when infeasible.
struct LpSolution {
    Rat value;
    RationalVector x;
};
std::optional<LpSolution> simplex_maximize(std::vector<RationalVector> a,
                                           RationalVector b,
                                           RationalVector c);

}  // namespace strata::exact
