#include "ncrat/jet.hpp"

#include "ncrat/errors.hpp"

namespace ncrat {

Jet Jet::inv() const {
    if (c0 == 0) throw SingularMatrix("jet is not a unit");
    Rational a = 1 / c0;
    Rational b = -c1 * a * a;
    Rational c = (c1 * c1 / c0 - c2) * a * a;
    return {a, b, c};
}

JetMat JetMat::identity(int n) {
    JetMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Jet(Rational(1));
    return m;
}

JetMat JetMat::from_line(const Mat& z, const Mat& w) {
    JetMat m(z.rows(), z.cols());
    for (int i = 0; i < z.rows(); ++i)
        for (int j = 0; j < z.cols(); ++j) m.at(i, j) = Jet(z.at(i, j), w.at(i, j), Rational(0));
    return m;
}

JetMat JetMat::operator+(const JetMat& o) const {
    if (rows != o.rows || cols != o.cols) throw DimensionMismatch("jet matrix addition");
    JetMat out(rows, cols);
    for (std::size_t k = 0; k < entries.size(); ++k) out.entries[k] = entries[k] + o.entries[k];
    return out;
}

JetMat JetMat::operator*(const JetMat& o) const {
    if (cols != o.rows) throw DimensionMismatch("jet matrix product");
    JetMat out(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Jet& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols; ++j) {
                const Jet& b = o.at(k, j);
                if (!b.is_zero()) out.at(i, j) = out.at(i, j) + a * b;
            }
        }
    return out;
}

Mat JetMat::coeff(int k) const {
    Mat out(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const Jet& e = at(i, j);
            out.at(i, j) = k == 0 ? e.c0 : (k == 1 ? e.c1 : e.c2);
        }
    return out;
}

JetMat jet_inverse(const JetMat& m) {
    if (m.rows != m.cols) throw DimensionMismatch("jet inverse of non-square matrix");
    int n = m.rows;
    JetMat a = m;
    JetMat inv = JetMat::identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (a.at(i, col).is_unit()) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw SingularMatrix("no unit pivot over Q[t]/(t^3)");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(col, j), a.at(pivot, j));
                std::swap(inv.at(col, j), inv.at(pivot, j));
            }
        Jet pi = a.at(col, col).inv();
        for (int j = 0; j < n; ++j) {
            a.at(col, j) = pi * a.at(col, j);
            inv.at(col, j) = pi * inv.at(col, j);
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            Jet f = a.at(i, col);
            for (int j = 0; j < n; ++j) {
                a.at(i, j) = a.at(i, j) - f * a.at(col, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

namespace {

JetMat kron_const_jet(const Mat& c, const JetMat& m) {
    JetMat out(c.rows() * m.rows, c.cols() * m.cols);
    for (int i = 0; i < c.rows(); ++i)
        for (int j = 0; j < c.cols(); ++j) {
            if (c.at(i, j) == 0) continue;
            Jet f(c.at(i, j));
            for (int k = 0; k < m.rows; ++k)
                for (int l = 0; l < m.cols; ++l)
                    out.at(i * m.rows + k, j * m.cols + l) = f * m.at(k, l);
        }
    return out;
}

JetMat eval_jet_rec(const RatExpr& e, const std::vector<JetMat>& zjets, int n) {
    switch (e.kind()) {
        case NodeKind::Poly: {
            JetMat acc(e.rows() * n, e.cols() * n);
            for (const auto& [w, c] : e.poly().terms()) {
                JetMat m = JetMat::identity(n);
                for (int letter : w.letters())
                    m = m * zjets[static_cast<std::size_t>(letter - 1)];
                acc = acc + kron_const_jet(c, m);
            }
            return acc;
        }
        case NodeKind::Add:
            return eval_jet_rec(e.lhs(), zjets, n) + eval_jet_rec(e.rhs(), zjets, n);
        case NodeKind::Mul:
            return eval_jet_rec(e.lhs(), zjets, n) * eval_jet_rec(e.rhs(), zjets, n);
        case NodeKind::Inv: return jet_inverse(eval_jet_rec(e.inner(), zjets, n));
        case NodeKind::Block: {
            int cr = e.cell(0, 0).rows() * n, cc = e.cell(0, 0).cols() * n;
            JetMat out(e.rows() * n, e.cols() * n);
            for (int i = 0; i < e.grid_rows(); ++i)
                for (int j = 0; j < e.grid_cols(); ++j) {
                    JetMat cell = eval_jet_rec(e.cell(i, j), zjets, n);
                    for (int a = 0; a < cr; ++a)
                        for (int b = 0; b < cc; ++b) out.at(i * cr + a, j * cc + b) = cell.at(a, b);
                }
            return out;
        }
        case NodeKind::Tensor:
        case NodeKind::Iota:
            throw DimensionMismatch("jet evaluation expects an arity-1 expression");
    }
    throw Error("unreachable expression kind");
}

}  // namespace

JetMat evaluate_jet(const RatExpr& e, const EvalPoint& z, const std::vector<Mat>& w) {
    if (e.arity() != 1) throw DimensionMismatch("jet evaluation expects an arity-1 expression");
    if (static_cast<int>(w.size()) != e.d())
        throw DimensionMismatch("need one direction matrix per letter");
    std::vector<JetMat> zjets;
    for (int j = 0; j < e.d(); ++j)
        zjets.push_back(JetMat::from_line(z.mats[static_cast<std::size_t>(j)],
                                          w[static_cast<std::size_t>(j)]));
    return eval_jet_rec(e, zjets, z.n);
}

}  // namespace ncrat
