#include "strata/exact.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace strata::exact {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t r) const {
    IntVector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
    return v;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: inner dimensions differ");
    IntMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

namespace {

Int floor_div(const Int& a, const Int& b) {
    // b > 0 assumed; cpp_int division truncates toward zero
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
    if (f == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += f * m.at(src, j);
}

void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

void swap_rows(IntMatrix& m, std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r1, j), m.at(r2, j));
}

// Extended gcd: returns (g, x, y) with x*a + y*b = g, g >= 0.
std::tuple<Int, Int, Int> xgcd(Int a, Int b) {
    Int old_r = std::move(a), r = std::move(b);
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        old_r -= q * r; std::swap(old_r, r);
        old_s -= q * s; std::swap(old_s, s);
        old_t -= q * t; std::swap(old_t, t);
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

// Apply the 2x2 unimodular transform [[x, y], [-b/g, a/g]] to rows (r1, r2)
// of both h and u, where a = h(r1, col), b = h(r2, col), g = gcd.
void gcd_rows(IntMatrix& h, IntMatrix& u, std::size_t r1, std::size_t r2, std::size_t col) {
    const Int a = h.at(r1, col), b = h.at(r2, col);
    if (b == 0) return;
    if (a == 0) {
        swap_rows(h, r1, r2);
        swap_rows(u, r1, r2);
        return;
    }
    auto [g, x, y] = xgcd(a, b);
    const Int p = a / g, q = b / g;
    for (auto* m : {&h, &u}) {
        for (std::size_t j = 0; j < m->cols(); ++j) {
            Int v1 = m->at(r1, j), v2 = m->at(r2, j);
            m->at(r1, j) = x * v1 + y * v2;
            m->at(r2, j) = -q * v1 + p * v2;
        }
    }
}

}  // namespace

HnfResult hermite_normal_form(const IntMatrix& m) {
    HnfResult res{m, IntMatrix::identity(m.rows())};
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;
    std::size_t r = 0;
    for (std::size_t j = 0; j < h.cols() && r < h.rows(); ++j) {
        for (std::size_t i = r + 1; i < h.rows(); ++i)
            gcd_rows(h, u, r, i, j);
        if (h.at(r, j) == 0) continue;
        if (h.at(r, j) < 0) { negate_row(h, r); negate_row(u, r); }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(h.at(i, j), h.at(r, j));
            add_row_multiple(h, i, r, -q);
            add_row_multiple(u, i, r, -q);
        }
        ++r;
    }
    return res;
}

std::size_t hnf_rank(const IntMatrix& h) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (h.at(i, j) != 0) { nonzero = true; break; }
        if (nonzero) ++r;
    }
    return r;
}

std::optional<IntVector> hnf_solve(const IntMatrix& h, const IntVector& v) {
    if (v.size() != h.cols())
        throw std::invalid_argument("hnf_solve: dimension mismatch");
    const std::size_t rank = hnf_rank(h);
    IntVector rem = v;
    IntVector coeff(rank);
    std::size_t row = 0;
    for (std::size_t j = 0; j < h.cols(); ++j) {
        if (row < rank && h.at(row, j) != 0) {
            if (rem[j] % h.at(row, j) != 0) return std::nullopt;
            const Int c = rem[j] / h.at(row, j);
            for (std::size_t k = j; k < h.cols(); ++k) rem[k] -= c * h.at(row, k);
            coeff[row] = c;
            ++row;
        } else if (rem[j] != 0) {
            return std::nullopt;
        }
    }
    return coeff;
}

bool hnf_contains(const IntMatrix& h, const IntVector& v) {
    return hnf_solve(h, v).has_value();
}

bool lattice_contains(const IntMatrix& basis, const IntVector& v) {
    if (v.size() != basis.cols())
        throw std::invalid_argument("lattice_contains: dimension mismatch");
    return hnf_contains(hermite_normal_form(basis).h, v);
}

std::optional<IntVector> lattice_solve(const IntMatrix& basis, const IntVector& v) {
    if (v.size() != basis.cols())
        throw std::invalid_argument("lattice_solve: dimension mismatch");
    auto hnf = hermite_normal_form(basis);
    auto coeff = hnf_solve(hnf.h, v);
    if (!coeff) return std::nullopt;
    // c * H = v and H = U * M, so (c * U) * M = v.
    IntVector out(basis.rows());
    for (std::size_t k = 0; k < coeff->size(); ++k)
        for (std::size_t i = 0; i < basis.rows(); ++i)
            out[i] += (*coeff)[k] * hnf.u.at(k, i);
    return out;
}

std::size_t integer_rank(const IntMatrix& m) {
    return hnf_rank(hermite_normal_form(m).h);
}

namespace {

// Dense tableau simplex over exact rationals, Bland's rule.
class Simplex {
public:
    Simplex(std::vector<RationalVector> a, RationalVector b)
        : m_(a.size()), n_(m_ == 0 ? 0 : a.front().size()), a_(std::move(a)), b_(std::move(b)) {
        for (std::size_t i = 0; i < m_; ++i)
            if (b_[i] < 0) {
                for (auto& x : a_[i]) x = -x;
                b_[i] = -b_[i];
            }
    }

    std::optional<LpSolution> maximize(const RationalVector& c) {
        // Phase 1: artificial basis.
        std::size_t total = n_ + m_;
        tab_.assign(m_, RationalVector(total + 1));
        basis_.assign(m_, 0);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) tab_[i][j] = a_[i][j];
            tab_[i][n_ + i] = 1;
            tab_[i][total] = b_[i];
            basis_[i] = n_ + i;
        }
        RationalVector phase1(total);
        for (std::size_t j = n_; j < total; ++j) phase1[j] = -1;
        run(phase1, total);
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] >= n_ && tab_[i][total] != 0) return std::nullopt;
        // Pivot leftover artificials (value 0) out of the basis, or drop
        // redundant rows.
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            std::size_t piv = n_;
            for (std::size_t j = 0; j < n_; ++j)
                if (tab_[i][j] != 0) { piv = j; break; }
            if (piv < n_) pivot(i, piv, total);
        }
        // Phase 2.
        RationalVector c2(total);
        for (std::size_t j = 0; j < n_; ++j) c2[j] = c[j];
        run(c2, total, /*forbid_artificial=*/true);
        LpSolution sol;
        sol.x.assign(n_, Rat(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) sol.x[basis_[i]] = tab_[i][total];
        sol.value = 0;
        for (std::size_t j = 0; j < n_; ++j) sol.value += c[j] * sol.x[j];
        return sol;
    }

private:
    void pivot(std::size_t row, std::size_t col, std::size_t total) {
        const Rat p = tab_[row][col];
        for (std::size_t j = 0; j <= total; ++j) tab_[row][j] /= p;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || tab_[i][col] == 0) continue;
            const Rat f = tab_[i][col];
            for (std::size_t j = 0; j <= total; ++j) tab_[i][j] -= f * tab_[row][j];
        }
        basis_[row] = col;
    }

    void run(const RationalVector& c, std::size_t total, bool forbid_artificial = false) {
        for (;;) {
            // Reduced costs; entering = smallest index with positive cost.
            std::size_t enter = total;
            for (std::size_t j = 0; j < total; ++j) {
                if (forbid_artificial && j >= n_) break;
                bool basic = false;
                for (std::size_t i = 0; i < m_; ++i)
                    if (basis_[i] == j) { basic = true; break; }
                if (basic) continue;
                Rat red = c[j];
                for (std::size_t i = 0; i < m_; ++i)
                    if (c[basis_[i]] != 0) red -= c[basis_[i]] * tab_[i][j];
                if (red > 0) { enter = j; break; }
            }
            if (enter == total) return;
            // Leaving: min ratio, ties by smallest basis index (Bland).
            std::size_t leave = m_;
            Rat best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (tab_[i][enter] <= 0) continue;
                Rat ratio = tab_[i][total] / tab_[i][enter];
                if (leave == m_ || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m_) return;  // unbounded; bounded by construction here
            pivot(leave, enter, total);
        }
    }

    std::size_t m_, n_;
    std::vector<RationalVector> a_;
    RationalVector b_;
    std::vector<RationalVector> tab_;
    std::vector<std::size_t> basis_;
};

}  // namespace

std::optional<LpSolution> simplex_maximize(std::vector<RationalVector> a,
                                           RationalVector b,
                                           RationalVector c) {
    Simplex s(std::move(a), std::move(b));
    return s.maximize(c);
}

std::optional<RationalVector>
relative_interior_certificate(const std::vector<IntVector>& points) {
    if (points.empty())
        throw std::invalid_argument("zero_in_relative_interior: empty point set");
    const std::size_t m = points.size();
    const std::size_t d = points.front().size();
    for (const auto& p : points)
        if (p.size() != d)
            throw std::invalid_argument("zero_in_relative_interior: mixed dimensions");

    // lambda_p = mu_p + t with mu, t >= 0; maximize t.  Strict positivity of
    // some lambda is equivalent to optimum t > 0 (t is bounded by 1/m).
    std::vector<RationalVector> a(d + 1, RationalVector(m + 1));
    RationalVector b(d + 1);
    for (std::size_t i = 0; i < d; ++i) {
        Int s = 0;
        for (std::size_t p = 0; p < m; ++p) {
            a[i][p] = Rat(points[p][i]);
            s += points[p][i];
        }
        a[i][m] = Rat(s);
    }
    for (std::size_t p = 0; p < m; ++p) a[d][p] = 1;
    a[d][m] = Rat(m);
    b[d] = 1;

    RationalVector c(m + 1);
    c[m] = 1;
    auto sol = simplex_maximize(std::move(a), std::move(b), std::move(c));
    if (!sol || sol->value <= 0) return std::nullopt;
    RationalVector lambda(m);
    for (std::size_t p = 0; p < m; ++p) lambda[p] = sol->x[p] + sol->x[m];
    return lambda;
}

bool zero_in_relative_interior(const std::vector<IntVector>& points) {
    return relative_interior_certificate(points).has_value();
}

}  // namespace strata::exact
