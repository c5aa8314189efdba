#include "ncrat/realize.hpp"

#include <map>

#include "ncrat/errors.hpp"
#include "ncrat/eval.hpp"
#include "ncrat/linalg.hpp"

namespace ncrat {

FmRealization FmRealization::constant(int d, const Mat& value) {
    FmRealization r;
    r.d = d;
    r.p = value.rows();
    r.q = value.cols();
    r.m = 0;
    r.A.assign(static_cast<std::size_t>(d), Mat::zero(0, 0));
    r.B.assign(static_cast<std::size_t>(d), Mat::zero(0, value.cols()));
    r.C = Mat::zero(value.rows(), 0);
    r.D = value;
    return r;
}

void FmRealization::check_shapes() const {
    if (static_cast<int>(A.size()) != d || static_cast<int>(B.size()) != d)
        throw DimensionMismatch("realization needs d state and input matrices");
    for (const Mat& a : A)
        if (a.rows() != m || a.cols() != m)
            throw DimensionMismatch("A_j must be m x m");
    for (const Mat& b : B)
        if (b.rows() != m || b.cols() != q)
            throw DimensionMismatch("B_j must be m x q");
    if (C.rows() != p || C.cols() != m) throw DimensionMismatch("C must be p x m");
    if (D.rows() != p || D.cols() != q) throw DimensionMismatch("D must be p x q");
}

namespace {

/// Shift-register realization of a matrix polynomial over the suffix tree of
/// its support: state blocks are indexed by nonempty suffixes u, B_j feeds
/// block [j], A_i prepends the letter i, and C reads off the coefficients.
FmRealization realize_poly(const MatPoly& poly) {
    int d = poly.d(), p = poly.rows(), q = poly.cols();
    std::map<Word, int, DegLexLess> index;  // suffix -> block position
    for (const auto& [w, c] : poly.terms())
        for (int start = 0; start < w.length(); ++start) {
            Word u = w.suffix_from(start);
            index.emplace(u, 0);
        }
    int pos = 0;
    for (auto& [u, idx] : index) idx = pos++;
    int blocks = pos;

    FmRealization r;
    r.d = d;
    r.p = p;
    r.q = q;
    r.m = blocks * q;
    r.A.assign(static_cast<std::size_t>(d), Mat::zero(r.m, r.m));
    r.B.assign(static_cast<std::size_t>(d), Mat::zero(r.m, q));
    r.C = Mat::zero(p, r.m);
    r.D = poly.constant_term();
    Mat iq = Mat::identity(q);
    for (const auto& [u, idx] : index) {
        if (u.length() == 1) r.B[static_cast<std::size_t>(u.at(0) - 1)].set_block(idx * q, 0, iq);
        for (int i = 1; i <= d; ++i) {
            Word extended = Word::letter(i).concat(u);
            auto it = index.find(extended);
            if (it != index.end())
                r.A[static_cast<std::size_t>(i - 1)].set_block(it->second * q, idx * q, iq);
        }
        Mat coeff = poly.coeff(u);
        if (!coeff.is_zero()) r.C.set_block(0, idx * q, coeff);
    }
    return r;
}

FmRealization realize_sum(const FmRealization& a, const FmRealization& b) {
    FmRealization r;
    r.d = a.d;
    r.p = a.p;
    r.q = a.q;
    r.m = a.m + b.m;
    for (int j = 0; j < a.d; ++j) {
        Mat aj = Mat::zero(r.m, r.m);
        aj.set_block(0, 0, a.A[static_cast<std::size_t>(j)]);
        aj.set_block(a.m, a.m, b.A[static_cast<std::size_t>(j)]);
        r.A.push_back(aj);
        r.B.push_back(vstack(a.B[static_cast<std::size_t>(j)], b.B[static_cast<std::size_t>(j)]));
    }
    r.C = hstack(a.C, b.C);
    r.D = a.D + b.D;
    return r;
}

FmRealization realize_product(const FmRealization& a, const FmRealization& b) {
    FmRealization r;
    r.d = a.d;
    r.p = a.p;
    r.q = b.q;
    r.m = a.m + b.m;
    for (int j = 0; j < a.d; ++j) {
        Mat aj = Mat::zero(r.m, r.m);
        aj.set_block(0, 0, a.A[static_cast<std::size_t>(j)]);
        aj.set_block(0, a.m, a.B[static_cast<std::size_t>(j)] * b.C);
        aj.set_block(a.m, a.m, b.A[static_cast<std::size_t>(j)]);
        r.A.push_back(aj);
        r.B.push_back(vstack(a.B[static_cast<std::size_t>(j)] * b.D,
                             b.B[static_cast<std::size_t>(j)]));
    }
    r.C = hstack(a.C, a.D * b.C);
    r.D = a.D * b.D;
    return r;
}

FmRealization realize_inverse(const FmRealization& a, const std::string& path) {
    Mat dinv;
    try {
        dinv = inverse(a.D);
    } catch (const SingularMatrix&) {
        throw NotRegularAtZero(path);
    }
    FmRealization r;
    r.d = a.d;
    r.p = a.p;
    r.q = a.q;
    r.m = a.m;
    for (int j = 0; j < a.d; ++j) {
        const Mat& aj = a.A[static_cast<std::size_t>(j)];
        const Mat& bj = a.B[static_cast<std::size_t>(j)];
        r.A.push_back(aj - bj * dinv * a.C);
        r.B.push_back(bj * dinv);
    }
    r.C = -(dinv * a.C);
    r.D = dinv;
    return r;
}

FmRealization realize_block(const std::vector<std::vector<FmRealization>>& grid, int p1, int q1,
                            int d) {
    int gr = static_cast<int>(grid.size());
    int gc = static_cast<int>(grid[0].size());
    FmRealization r;
    r.d = d;
    r.p = gr * p1;
    r.q = gc * q1;
    r.m = 0;
    for (const auto& row : grid)
        for (const FmRealization& cell : row) r.m += cell.m;
    r.A.assign(static_cast<std::size_t>(d), Mat::zero(r.m, r.m));
    r.B.assign(static_cast<std::size_t>(d), Mat::zero(r.m, r.q));
    r.C = Mat::zero(r.p, r.m);
    r.D = Mat::zero(r.p, r.q);
    int offset = 0;
    for (int i = 0; i < gr; ++i)
        for (int j = 0; j < gc; ++j) {
            const FmRealization& cell = grid[static_cast<std::size_t>(i)]
                                            [static_cast<std::size_t>(j)];
            for (int k = 0; k < d; ++k) {
                r.A[static_cast<std::size_t>(k)].set_block(offset, offset,
                                                           cell.A[static_cast<std::size_t>(k)]);
                // input selector: the cell sees input block j
                r.B[static_cast<std::size_t>(k)].set_block(offset, j * q1,
                                                           cell.B[static_cast<std::size_t>(k)]);
            }
            r.C.set_block(i * p1, offset, cell.C);
            r.D.set_block(i * p1, j * q1, cell.D);
            offset += cell.m;
        }
    return r;
}

FmRealization realize_rec(const RatExpr& e, std::vector<std::string>& path) {
    auto joined = [&path]() {
        std::string s;
        for (const auto& seg : path) {
            if (!s.empty()) s += "/";
            s += seg;
        }
        return s;
    };
    switch (e.kind()) {
        case NodeKind::Poly: return realize_poly(e.poly());
        case NodeKind::Add: {
            path.push_back("add.l");
            FmRealization a = realize_rec(e.lhs(), path);
            path.back() = "add.r";
            FmRealization b = realize_rec(e.rhs(), path);
            path.pop_back();
            return realize_sum(a, b);
        }
        case NodeKind::Mul: {
            path.push_back("mul.l");
            FmRealization a = realize_rec(e.lhs(), path);
            path.back() = "mul.r";
            FmRealization b = realize_rec(e.rhs(), path);
            path.pop_back();
            return realize_product(a, b);
        }
        case NodeKind::Inv: {
            path.push_back("inv");
            FmRealization a = realize_rec(e.inner(), path);
            std::string where = joined();
            path.pop_back();
            return realize_inverse(a, where);
        }
        case NodeKind::Block: {
            std::vector<std::vector<FmRealization>> grid(
                static_cast<std::size_t>(e.grid_rows()));
            for (int i = 0; i < e.grid_rows(); ++i)
                for (int j = 0; j < e.grid_cols(); ++j) {
                    path.push_back("block[" + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + "]");
                    grid[static_cast<std::size_t>(i)].push_back(realize_rec(e.cell(i, j), path));
                    path.pop_back();
                }
            return realize_block(grid, e.cell(0, 0).rows(), e.cell(0, 0).cols(), e.d());
        }
        case NodeKind::Tensor:
        case NodeKind::Iota:
            throw DimensionMismatch("realize expects an arity-1 expression");
    }
    throw Error("unreachable expression kind");
}

}  // namespace

FmRealization realize(const RatExpr& e) {
    if (e.arity() != 1) throw DimensionMismatch("realize expects an arity-1 expression");
    std::vector<std::string> path;
    return realize_rec(e, path);
}

RatExpr transfer_expr(const FmRealization& r) {
    r.check_shapes();
    RatExpr dexpr = make_poly(1, 1, MatPoly::constant(r.d, r.D));
    if (r.m == 0) return dexpr;
    MatPoly pencil(r.d, r.m, r.m);
    pencil.add_term(Word::empty(), Mat::identity(r.m));
    MatPoly input(r.d, r.m, r.q);
    for (int j = 1; j <= r.d; ++j) {
        pencil.add_term(Word::letter(j), -r.A[static_cast<std::size_t>(j - 1)]);
        input.add_term(Word::letter(j), r.B[static_cast<std::size_t>(j - 1)]);
    }
    RatExpr resolvent = make_inv(make_poly(1, 1, pencil), MultiPoint{zero_point(r.d, 1)});
    RatExpr cexpr = make_poly(1, 1, MatPoly::constant(r.d, r.C));
    return make_add(dexpr, make_mul(make_mul(cexpr, resolvent), make_poly(1, 1, input)));
}

TruncSeries fm_series(const FmRealization& r, int order) {
    r.check_shapes();
    TruncSeries out;
    out.d = r.d;
    out.rows = r.p;
    out.cols = r.q;
    out.order = order;
    out.add_coeff(Word::empty(), r.D);
    if (r.m == 0 || order < 1) return out;
    // breadth-first over prefixes: carries C A^u for |u| <= order-1
    std::map<Word, Mat, DegLexLess> front;
    front.emplace(Word::empty(), r.C);
    for (int len = 1; len <= order; ++len) {
        std::map<Word, Mat, DegLexLess> next;
        for (const auto& [u, cau] : front) {
            for (int j = 1; j <= r.d; ++j) {
                out.add_coeff(u.concat(Word::letter(j)),
                              cau * r.B[static_cast<std::size_t>(j - 1)]);
                if (len < order)
                    next.emplace(u.concat(Word::letter(j)),
                                 cau * r.A[static_cast<std::size_t>(j - 1)]);
            }
        }
        front = std::move(next);
    }
    return out;
}

Mat controllability_basis(const FmRealization& r) {
    Mat basis(r.m, 0);
    std::vector<Mat> fresh;  // newly admitted columns
    auto try_add = [&](const Mat& col) {
        Mat cand = basis.cols() == 0 ? col : hstack(basis, col);
        if (exact_rank(cand) > basis.cols()) {
            basis = cand;
            fresh.push_back(col);
        }
    };
    for (int j = 0; j < r.d; ++j)
        for (int c = 0; c < r.q; ++c) try_add(r.B[static_cast<std::size_t>(j)].block(0, c, r.m, 1));
    std::size_t head = 0;
    while (head < fresh.size()) {
        Mat v = fresh[head++];
        for (int j = 0; j < r.d; ++j) try_add(r.A[static_cast<std::size_t>(j)] * v);
    }
    return basis;
}

Mat observability_basis(const FmRealization& r) {
    Mat basis(0, r.m);
    std::vector<Mat> fresh;
    auto try_add = [&](const Mat& row) {
        Mat cand = basis.rows() == 0 ? row : vstack(basis, row);
        if (exact_rank(cand) > basis.rows()) {
            basis = cand;
            fresh.push_back(row);
        }
    };
    for (int i = 0; i < r.p; ++i) try_add(r.C.block(i, 0, 1, r.m));
    std::size_t head = 0;
    while (head < fresh.size()) {
        Mat v = fresh[head++];
        for (int j = 0; j < r.d; ++j) try_add(v * r.A[static_cast<std::size_t>(j)]);
    }
    return basis;
}

FmRealization minimize(const FmRealization& r) {
    r.check_shapes();
    // 1. restrict to the controllable subspace
    Mat s = controllability_basis(r);
    int mc = s.cols();
    if (mc == 0) return FmRealization::constant(r.d, r.D);
    FmRealization rc;
    rc.d = r.d;
    rc.p = r.p;
    rc.q = r.q;
    rc.m = mc;
    for (int j = 0; j < r.d; ++j) {
        auto aj = solve_right(s, r.A[static_cast<std::size_t>(j)] * s);
        auto bj = solve_right(s, r.B[static_cast<std::size_t>(j)]);
        if (!aj || !bj) throw Error("controllable subspace is not invariant");
        rc.A.push_back(*aj);
        rc.B.push_back(*bj);
    }
    rc.C = r.C * s;
    rc.D = r.D;
    // 2. quotient by the unobservable subspace
    Mat qrows = observability_basis(rc);
    int mo = qrows.rows();
    if (mo == 0) return FmRealization::constant(r.d, r.D);
    FmRealization out;
    out.d = r.d;
    out.p = r.p;
    out.q = r.q;
    out.m = mo;
    for (int j = 0; j < r.d; ++j) {
        auto aj = solve_left(qrows, qrows * rc.A[static_cast<std::size_t>(j)]);
        if (!aj) throw Error("observability row space is not invariant");
        out.A.push_back(*aj);
        out.B.push_back(qrows * rc.B[static_cast<std::size_t>(j)]);
    }
    auto c = solve_left(qrows, rc.C);
    if (!c) throw Error("C does not lie in the observability row space");
    out.C = *c;
    out.D = r.D;
    return out;
}

FmRealization hankel_realize(const TruncSeries& s, int m_bound) {
    if (s.order < 2 * m_bound + 1)
        throw InsufficientOrder("hankel_realize needs order >= 2*bound+1 (have " +
                                std::to_string(s.order) + ", bound " + std::to_string(m_bound) +
                                ")");
    int p = s.rows, q = s.cols, d = s.d;
    std::vector<Word> rows_words = words_up_to(d, m_bound);
    std::vector<Word> col_words;
    for (const Word& v : words_up_to(d, m_bound + 1))
        if (!v.is_empty()) col_words.push_back(v);

    Mat h(static_cast<int>(rows_words.size()) * p, static_cast<int>(col_words.size()) * q);
    for (std::size_t iu = 0; iu < rows_words.size(); ++iu)
        for (std::size_t iv = 0; iv < col_words.size(); ++iv)
            h.set_block(static_cast<int>(iu) * p, static_cast<int>(iv) * q,
                        s.coeff(rows_words[iu].concat(col_words[iv])));

    RankFactorization rf = rank_factor(h);
    int m = rf.left.cols();
    if (m > m_bound)
        throw RankMismatch("Hankel rank " + std::to_string(m) + " exceeds the bound " +
                           std::to_string(m_bound));
    FmRealization r;
    r.d = d;
    r.p = p;
    r.q = q;
    r.m = m;
    if (m == 0) {
        r = FmRealization::constant(d, s.coeff(Word::empty()));
    } else {
        std::map<Word, int, DegLexLess> col_index;
        for (std::size_t iv = 0; iv < col_words.size(); ++iv)
            col_index.emplace(col_words[iv], static_cast<int>(iv));
        // columns of G for |v| <= bound and their letter-prepended shifts
        std::vector<int> sub_cols;
        for (std::size_t iv = 0; iv < col_words.size(); ++iv)
            if (col_words[iv].length() <= m_bound) sub_cols.push_back(static_cast<int>(iv));
        Mat gsub(m, static_cast<int>(sub_cols.size()) * q);
        for (std::size_t k = 0; k < sub_cols.size(); ++k)
            gsub.set_block(0, static_cast<int>(k) * q,
                           rf.right.block(0, sub_cols[k] * q, m, q));
        for (int j = 1; j <= d; ++j) {
            Mat gshift(m, static_cast<int>(sub_cols.size()) * q);
            for (std::size_t k = 0; k < sub_cols.size(); ++k) {
                Word shifted = Word::letter(j).concat(col_words[static_cast<std::size_t>(
                    sub_cols[k])]);
                int idx = col_index.at(shifted);
                gshift.set_block(0, static_cast<int>(k) * q, rf.right.block(0, idx * q, m, q));
            }
            auto aj = solve_left(gsub, gshift);
            if (!aj)
                throw RankMismatch("columns up to the bound do not span the Hankel row space");
            r.A.push_back(*aj);
            r.B.push_back(rf.right.block(0, col_index.at(Word::letter(j)) * q, m, q));
        }
        r.C = rf.left.block(0, 0, p, m);
        r.D = s.coeff(Word::empty());
    }
    if (!(fm_series(r, s.order) == s))
        throw RankMismatch("series is not generated by a realization of dimension <= bound");
    return r;
}

namespace {

/// Stack of C A^w over all |w| <= m-1 in deglex order; word-aligned between
/// realizations so that O2 S = O1 characterizes the intertwiner.
Mat observability_stack(const FmRealization& r) {
    std::vector<Word> words = words_up_to(r.d, r.m > 0 ? r.m - 1 : 0);
    Mat out(static_cast<int>(words.size()) * r.p, r.m);
    for (std::size_t k = 0; k < words.size(); ++k) {
        Mat row = r.C;
        for (int letter : words[k].letters()) row = row * r.A[static_cast<std::size_t>(letter - 1)];
        out.set_block(static_cast<int>(k) * r.p, 0, row);
    }
    return out;
}

}  // namespace

std::optional<Mat> similarity(const FmRealization& r1, const FmRealization& r2) {
    r1.check_shapes();
    r2.check_shapes();
    if (minimize(r1).m != r1.m) throw NotMinimal("first realization is not minimal");
    if (minimize(r2).m != r2.m) throw NotMinimal("second realization is not minimal");
    if (r1.d != r2.d || r1.p != r2.p || r1.q != r2.q) return std::nullopt;
    if (r1.m != r2.m) return std::nullopt;
    if (r1.D != r2.D) return std::nullopt;
    int m = r1.m;
    if (m == 0) return Mat::zero(0, 0);
    Mat o1 = observability_stack(r1), o2 = observability_stack(r2);
    auto sm = solve_right(o2, o1);
    if (!sm) return std::nullopt;
    const Mat& s = *sm;
    if (exact_rank(s) != m) return std::nullopt;
    for (int j = 0; j < r1.d; ++j) {
        if (s * r1.A[static_cast<std::size_t>(j)] != r2.A[static_cast<std::size_t>(j)] * s)
            return std::nullopt;
        if (s * r1.B[static_cast<std::size_t>(j)] != r2.B[static_cast<std::size_t>(j)])
            return std::nullopt;
    }
    if (r1.C != r2.C * s) return std::nullopt;
    return s;
}

bool pencil_domain_check(const FmRealization& r, const EvalPoint& z) {
    r.check_shapes();
    if (z.d != r.d) throw DimensionMismatch("point and realization disagree on d");
    if (r.m == 0) return true;
    Mat pencil = Mat::identity(r.m * z.n);
    for (int j = 0; j < r.d; ++j)
        pencil = pencil - kron(r.A[static_cast<std::size_t>(j)], z.mats[static_cast<std::size_t>(j)]);
    return exact_det(pencil) != 0;
}

}  // namespace ncrat
