#include "ncrat/matrix.hpp"

#include <utility>

#include "ncrat/errors.hpp"

namespace ncrat {

Mat::Mat(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(rows) * cols)
        throw DimensionMismatch("matrix entry count does not match shape");
}

Mat Mat::from_int_rows(const std::vector<std::vector<long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Mat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw DimensionMismatch("ragged matrix literal");
        for (int j = 0; j < c; ++j) m.at(i, j) = rat(rows[i][j]);
    }
    return m;
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::scalar(int n, const Rational& value) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = value;
    return m;
}

bool Mat::is_zero() const {
    for (const Rational& e : entries_)
        if (e != 0) return false;
    return true;
}

Mat Mat::transpose() const {
    Mat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Mat Mat::block(int row0, int col0, int nrows, int ncols) const {
    if (row0 < 0 || col0 < 0 || row0 + nrows > rows_ || col0 + ncols > cols_)
        throw DimensionMismatch("block extraction out of range");
    Mat out(nrows, ncols);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) out.at(i, j) = at(row0 + i, col0 + j);
    return out;
}

void Mat::set_block(int row0, int col0, const Mat& sub) {
    if (row0 + sub.rows() > rows_ || col0 + sub.cols() > cols_)
        throw DimensionMismatch("block assignment out of range");
    for (int i = 0; i < sub.rows(); ++i)
        for (int j = 0; j < sub.cols(); ++j) at(row0 + i, col0 + j) = sub.at(i, j);
}

Mat Mat::operator+(const Mat& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("matrix addition shape mismatch");
    Mat out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        out.entries_[k] = entries_[k] + other.entries_[k];
    return out;
}

Mat Mat::operator-(const Mat& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("matrix subtraction shape mismatch");
    Mat out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        out.entries_[k] = entries_[k] - other.entries_[k];
    return out;
}

Mat Mat::operator-() const {
    Mat out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = -entries_[k];
    return out;
}

Mat Mat::operator*(const Mat& other) const {
    if (cols_ != other.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Mat out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < other.cols_; ++j) {
                const Rational& bkj = other.at(k, j);
                if (bkj != 0) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

Mat Mat::operator*(const Rational& scalar) const {
    Mat out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] * scalar;
    return out;
}

bool Mat::operator==(const Mat& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

std::string Mat::to_string() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
        s += i == 0 ? "[" : ", [";
        for (int j = 0; j < cols_; ++j) {
            if (j > 0) s += ", ";
            s += rat_to_string(at(i, j));
        }
        s += "]";
    }
    return s + "]";
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const Rational& aij = a.at(i, j);
            if (aij == 0) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) {
                    const Rational& bkl = b.at(k, l);
                    if (bkl != 0) out.at(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
                }
        }
    return out;
}

Mat assemble_blocks(const std::vector<std::vector<Mat>>& grid) {
    int gridRows = static_cast<int>(grid.size());
    if (gridRows == 0) return Mat();
    int gridCols = static_cast<int>(grid[0].size());
    int totalRows = 0, totalCols = 0;
    for (int i = 0; i < gridRows; ++i) {
        if (static_cast<int>(grid[i].size()) != gridCols)
            throw DimensionMismatch("ragged block grid");
        totalRows += grid[i][0].rows();
    }
    for (int j = 0; j < gridCols; ++j) totalCols += grid[0][j].cols();
    Mat out(totalRows, totalCols);
    int r0 = 0;
    for (int i = 0; i < gridRows; ++i) {
        int c0 = 0;
        for (int j = 0; j < gridCols; ++j) {
            if (grid[i][j].rows() != grid[i][0].rows() || grid[i][j].cols() != grid[0][j].cols())
                throw DimensionMismatch("block grid shapes do not conform");
            out.set_block(r0, c0, grid[i][j]);
            c0 += grid[0][j].cols();
        }
        r0 += grid[i][0].rows();
    }
    return out;
}

Mat hstack(const Mat& a, const Mat& b) { return assemble_blocks({{a, b}}); }

Mat vstack(const Mat& a, const Mat& b) { return assemble_blocks({{a}, {b}}); }

Mat commutation_matrix(int p, int n) {
    // Block (i,j) is E_ij^T, so the single 1 of global row (i-1)n + a sits in
    // column (a-1)p + i. As an operator: P(p,n) (v (x) u) = u (x) v for
    // u in F^p, v in F^n.
    Mat out(p * n, p * n);
    for (int i = 0; i < p; ++i)
        for (int a = 0; a < n; ++a) out.at(i * n + a, a * p + i) = 1;
    return out;
}

}  // namespace ncrat
