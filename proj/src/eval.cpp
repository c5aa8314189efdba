#include "ncrat/eval.hpp"

#include <numeric>

#include "ncrat/errors.hpp"
#include "ncrat/linalg.hpp"

namespace ncrat {

namespace {

struct PathTracker {
    std::vector<std::string> segments;
    std::string joined() const {
        std::string s;
        for (const auto& seg : segments) {
            if (!s.empty()) s += "/";
            s += seg;
        }
        return s;
    }
};

struct PathScope {
    PathTracker& tracker;
    PathScope(PathTracker& t, const std::string& seg) : tracker(t) {
        tracker.segments.push_back(seg);
    }
    ~PathScope() { tracker.segments.pop_back(); }
};

int mix_index(const std::vector<int>& dims, const std::vector<int>& idx) {
    int flat = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) flat = flat * dims[k] + idx[k];
    return flat;
}

/// Word evaluation Z^w = Z_{w_1} ... Z_{w_k}.
Mat word_value(const EvalPoint& z, const Word& w) {
    Mat acc = Mat::identity(z.n);
    for (int letter : w.letters()) acc = acc * z.mats[letter - 1];
    return acc;
}

TensorValue eval_rec(const RatExpr& e, const MultiPoint& points, PathTracker& path);

TensorValue eval_poly(const RatExpr& e, const MultiPoint& points) {
    int slot = e.slot();
    int pre = 1, post = 1;
    for (int k = 0; k < slot - 1; ++k) pre *= points[k].n;
    for (int k = slot; k < e.arity(); ++k) post *= points[k].n;
    const EvalPoint& z = points[slot - 1];
    Mat acc = Mat::zero(e.rows() * pre * z.n * post, e.cols() * pre * z.n * post);
    Mat ipre = Mat::identity(pre), ipost = Mat::identity(post);
    for (const auto& [w, c] : e.poly().terms())
        acc = acc + kron(kron(kron(c, ipre), word_value(z, w)), ipost);
    TensorValue out;
    out.rows = e.rows();
    out.cols = e.cols();
    for (const EvalPoint& p : points) out.sizes.push_back(p.n);
    out.data = std::move(acc);
    return out;
}

TensorValue eval_rec(const RatExpr& e, const MultiPoint& points, PathTracker& path) {
    switch (e.kind()) {
        case NodeKind::Poly: return eval_poly(e, points);
        case NodeKind::Add: {
            TensorValue a, b;
            {
                PathScope s(path, "add.l");
                a = eval_rec(e.lhs(), points, path);
            }
            {
                PathScope s(path, "add.r");
                b = eval_rec(e.rhs(), points, path);
            }
            a.data = a.data + b.data;
            a.cols = e.cols();
            a.rows = e.rows();
            return a;
        }
        case NodeKind::Mul: {
            TensorValue a, b;
            {
                PathScope s(path, "mul.l");
                a = eval_rec(e.lhs(), points, path);
            }
            {
                PathScope s(path, "mul.r");
                b = eval_rec(e.rhs(), points, path);
            }
            TensorValue out;
            out.rows = e.rows();
            out.cols = e.cols();
            out.sizes = a.sizes;
            out.data = a.data * b.data;
            return out;
        }
        case NodeKind::Inv: {
            PathScope s(path, "inv");
            TensorValue v = eval_rec(e.inner(), points, path);
            try {
                v.data = inverse(v.data);
            } catch (const SingularMatrix&) {
                throw NotInDomain(path.joined(), v.total_size());
            }
            return v;
        }
        case NodeKind::Block: {
            std::vector<std::vector<Mat>> grid(static_cast<std::size_t>(e.grid_rows()));
            TensorValue sample;
            for (int i = 0; i < e.grid_rows(); ++i)
                for (int j = 0; j < e.grid_cols(); ++j) {
                    PathScope s(path, "block[" + std::to_string(i + 1) + "," +
                                          std::to_string(j + 1) + "]");
                    sample = eval_rec(e.cell(i, j), points, path);
                    grid[static_cast<std::size_t>(i)].push_back(sample.data);
                }
            TensorValue out;
            out.rows = e.rows();
            out.cols = e.cols();
            out.sizes = sample.sizes;
            out.data = assemble_blocks(grid);
            return out;
        }
        case NodeKind::Tensor: {
            int t = e.lhs().arity();
            MultiPoint left_pts(points.begin(), points.begin() + t);
            MultiPoint right_pts(points.begin() + t, points.end());
            TensorValue a, b;
            {
                PathScope s(path, "tensor.l");
                a = eval_rec(e.lhs(), left_pts, path);
            }
            {
                PathScope s(path, "tensor.r");
                b = eval_rec(e.rhs(), right_pts, path);
            }
            // kron gives factor order (p, N_L, p', N_R); the canonical order
            // is (p, p', N_L, N_R). Swapping the middle factors is exactly
            // conjugation by I (x) P(p', N_L) (x) I commutation matrices.
            int nl = a.total_size(), nr = b.total_size();
            Mat raw = kron(a.data, b.data);
            TensorValue out;
            out.rows = e.rows();
            out.cols = e.cols();
            out.sizes = a.sizes;
            out.sizes.insert(out.sizes.end(), b.sizes.begin(), b.sizes.end());
            out.data = reorder_axes(raw, {a.rows, nl, b.rows, nr}, {a.cols, nl, b.cols, nr},
                                    {0, 2, 1, 3});
            return out;
        }
        case NodeKind::Iota: {
            // Trivial slot sits before the last: evaluate the inner expression
            // without it, then insert an identity factor there.
            int arity = e.arity();
            MultiPoint inner_pts(points.begin(), points.begin() + (arity - 2));
            inner_pts.push_back(points.back());
            TensorValue v;
            {
                PathScope s(path, "iota");
                v = eval_rec(e.inner(), inner_pts, path);
            }
            int n_ins = points[static_cast<std::size_t>(arity - 2)].n;
            int n_last = points.back().n;
            int pre = 1;
            for (std::size_t k = 0; k + 1 < v.sizes.size(); ++k) pre *= v.sizes[k];
            Mat raw = kron(v.data, Mat::identity(n_ins));
            TensorValue out;
            out.rows = e.rows();
            out.cols = e.cols();
            out.sizes.assign(v.sizes.begin(), v.sizes.end() - 1);
            out.sizes.push_back(n_ins);
            out.sizes.push_back(n_last);
            out.data = reorder_axes(raw, {e.rows() * pre, n_last, n_ins},
                                    {e.cols() * pre, n_last, n_ins}, {0, 2, 1});
            return out;
        }
    }
    throw Error("unreachable expression kind");
}

}  // namespace

Mat reorder_axes(const Mat& m, const std::vector<int>& row_dims,
                 const std::vector<int>& col_dims, const std::vector<int>& perm) {
    std::vector<int> new_row_dims, new_col_dims;
    for (int p : perm) {
        new_row_dims.push_back(row_dims[static_cast<std::size_t>(p)]);
        new_col_dims.push_back(col_dims[static_cast<std::size_t>(p)]);
    }
    Mat out(m.rows(), m.cols());
    std::vector<int> ridx(row_dims.size(), 0), cidx(col_dims.size(), 0);
    std::vector<int> pr(perm.size()), pc(perm.size());
    for (int r = 0; r < m.rows(); ++r) {
        {
            int rem = r;
            for (int k = static_cast<int>(row_dims.size()) - 1; k >= 0; --k) {
                ridx[static_cast<std::size_t>(k)] = rem % row_dims[static_cast<std::size_t>(k)];
                rem /= row_dims[static_cast<std::size_t>(k)];
            }
        }
        for (std::size_t k = 0; k < perm.size(); ++k)
            pr[k] = ridx[static_cast<std::size_t>(perm[k])];
        int new_r = mix_index(new_row_dims, pr);
        for (int c = 0; c < m.cols(); ++c) {
            const Rational& v = m.at(r, c);
            if (v == 0) continue;
            int rem = c;
            for (int k = static_cast<int>(col_dims.size()) - 1; k >= 0; --k) {
                cidx[static_cast<std::size_t>(k)] = rem % col_dims[static_cast<std::size_t>(k)];
                rem /= col_dims[static_cast<std::size_t>(k)];
            }
            for (std::size_t k = 0; k < perm.size(); ++k)
                pc[k] = cidx[static_cast<std::size_t>(perm[k])];
            out.at(new_r, mix_index(new_col_dims, pc)) = v;
        }
    }
    return out;
}

TensorValue evaluate_multi(const RatExpr& e, const MultiPoint& points) {
    if (static_cast<int>(points.size()) != e.arity())
        throw DimensionMismatch("expected one evaluation point per tuple slot");
    for (const EvalPoint& p : points)
        if (p.d != e.d())
            throw DimensionMismatch("evaluation point has wrong indeterminate count");
    PathTracker path;
    return eval_rec(e, points, path);
}

Mat evaluate(const RatExpr& e, const EvalPoint& z) {
    if (e.arity() != 1) throw DimensionMismatch("evaluate expects an arity-1 expression");
    return evaluate_multi(e, {z}).data;
}

Mat contract(const TensorValue& v, const std::vector<Mat>& directions) {
    const std::vector<int>& s = v.sizes;
    int ell = static_cast<int>(s.size()) - 1;
    if (static_cast<int>(directions.size()) != ell)
        throw DimensionMismatch("contract: need one direction per inner slot pair");
    for (int k = 0; k < ell; ++k)
        if (directions[static_cast<std::size_t>(k)].rows() != s[static_cast<std::size_t>(k)] ||
            directions[static_cast<std::size_t>(k)].cols() != s[static_cast<std::size_t>(k) + 1])
            throw DimensionMismatch("contract: direction " + std::to_string(k + 1) +
                                    " has wrong shape");
    Mat cur = v.data;
    int rt_cols = s.back();
    // Fold from the right: factor k, direction H_k and the trailing factor
    // merge into A^(k) H_k G, leaving one rectangular trailing factor.
    for (int k = ell - 1; k >= 0; --k) {
        const Mat& h = directions[static_cast<std::size_t>(k)];
        int mid = 1;
        for (int t = 0; t < k; ++t) mid *= s[static_cast<std::size_t>(t)];
        int sk = s[static_cast<std::size_t>(k)], sk1 = s[static_cast<std::size_t>(k) + 1];
        Mat next(v.rows * mid * sk, v.cols * mid * rt_cols);
        for (int i = 0; i < v.rows * mid; ++i)
            for (int rp = 0; rp < sk; ++rp)
                for (int j = 0; j < v.cols * mid; ++j)
                    for (int b = 0; b < rt_cols; ++b) {
                        Rational sum(0);
                        for (int c = 0; c < sk; ++c)
                            for (int r = 0; r < sk1; ++r) {
                                const Rational& hv = h.at(c, r);
                                if (hv == 0) continue;
                                sum += cur.at((i * sk + rp) * sk1 + r, (j * sk + c) * rt_cols + b) *
                                       hv;
                            }
                        next.at(i * sk + rp, j * rt_cols + b) = sum;
                    }
        cur = std::move(next);
    }
    return cur;
}

bool in_domain(const RatExpr& e, const MultiPoint& points) {
    try {
        evaluate_multi(e, points);
        return true;
    } catch (const NotInDomain&) {
        return false;
    }
}

bool in_domain(const RatExpr& e, const EvalPoint& z) { return in_domain(e, MultiPoint{z}); }

bool regular_at_zero(const RatExpr& e) {
    MultiPoint zeros(static_cast<std::size_t>(e.arity()), zero_point(e.d(), 1));
    return in_domain(e, zeros);
}

}  // namespace ncrat
