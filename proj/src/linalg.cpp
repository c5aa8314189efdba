#include "ncrat/linalg.hpp"

#include <utility>

#include "ncrat/errors.hpp"

namespace ncrat {

namespace {

/// Clears denominators row by row, returning an integer matrix with the same
/// row space (and kernel) as the input.
std::vector<std::vector<mpz_class>> cleared_rows(const Mat& m) {
    std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        mpz_class lcm = 1;
        for (int j = 0; j < m.cols(); ++j) {
            mpz_class den = m.at(i, j).get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (int j = 0; j < m.cols(); ++j) {
            const Rational& e = m.at(i, j);
            rows[i][j] = e.get_num() * (lcm / e.get_den());
        }
    }
    return rows;
}

}  // namespace

int exact_rank(const Mat& m) {
    auto a = cleared_rows(m);
    int rows = m.rows(), cols = m.cols();
    int rank = 0;
    mpz_class prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        // Bareiss step: entries stay integral, divisions are exact.
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                mpz_class t = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

Rational exact_det(const Mat& m) {
    if (!m.is_square()) throw DimensionMismatch("determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) return Rational(1);
    auto a = cleared_rows(m);
    // Track the denominators cleared per row: det(original) = det(cleared) / prod(lcm_i).
    Rational scale(1);
    for (int i = 0; i < n; ++i) {
        mpz_class lcm = 1;
        for (int j = 0; j < n; ++j) {
            mpz_class den = m.at(i, j).get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        scale *= Rational(lcm);
    }
    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (a[i][k] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != k) {
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_class t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rational det(a[n - 1][n - 1] * sign);
    det /= scale;
    return det;
}

Rref rref(const Mat& m) {
    Rref out;
    out.reduced = m;
    Mat& a = out.reduced;
    int rows = a.rows(), cols = a.cols();
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (a.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(pivot, j));
        Rational inv = 1 / a.at(r, col);
        for (int j = col; j < cols; ++j) a.at(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a.at(i, col) == 0) continue;
            Rational f = a.at(i, col);
            for (int j = col; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        out.pivots.push_back(col);
        ++r;
    }
    return out;
}

Mat inverse(const Mat& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
    int n = m.rows();
    Mat aug = hstack(m, Mat::identity(n));
    Rref f = rref(aug);
    if (static_cast<int>(f.pivots.size()) < n || (n > 0 && f.pivots[n - 1] >= n))
        throw SingularMatrix();
    return f.reduced.block(0, n, n, n);
}

std::optional<Mat> solve_right(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("solve_right shape mismatch");
    Rref f = rref(hstack(a, b));
    // Inconsistent iff some pivot falls in the b-columns.
    for (int p : f.pivots)
        if (p >= a.cols()) return std::nullopt;
    Mat x(a.cols(), b.cols());
    for (std::size_t r = 0; r < f.pivots.size(); ++r)
        for (int j = 0; j < b.cols(); ++j)
            x.at(f.pivots[r], j) = f.reduced.at(static_cast<int>(r), a.cols() + j);
    // Free variables are set to zero; verify the candidate exactly.
    if (a * x != b) return std::nullopt;
    return x;
}

std::optional<Mat> solve_left(const Mat& a, const Mat& b) {
    auto xt = solve_right(a.transpose(), b.transpose());
    if (!xt) return std::nullopt;
    return xt->transpose();
}

Mat kernel_basis(const Mat& a) {
    Rref f = rref(a);
    int rank = static_cast<int>(f.pivots.size());
    std::vector<int> free_cols;
    {
        std::vector<bool> is_pivot(a.cols(), false);
        for (int p : f.pivots) is_pivot[p] = true;
        for (int j = 0; j < a.cols(); ++j)
            if (!is_pivot[j]) free_cols.push_back(j);
    }
    Mat basis(a.cols(), static_cast<int>(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        basis.at(fc, static_cast<int>(k)) = 1;
        for (int r = 0; r < rank; ++r)
            basis.at(f.pivots[r], static_cast<int>(k)) = -f.reduced.at(r, fc);
    }
    return basis;
}

RankFactorization rank_factor(const Mat& m) {
    Rref f = rref(m);
    int rank = static_cast<int>(f.pivots.size());
    RankFactorization out;
    out.pivots = f.pivots;
    out.left = Mat(m.rows(), rank);
    for (int r = 0; r < rank; ++r)
        for (int i = 0; i < m.rows(); ++i) out.left.at(i, r) = m.at(i, f.pivots[r]);
    out.right = f.reduced.block(0, 0, rank, m.cols());
    return out;
}

}  // namespace ncrat
