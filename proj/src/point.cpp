#include "ncrat/point.hpp"

#include "ncrat/errors.hpp"

namespace ncrat {

EvalPoint::EvalPoint(int d_, int n_, std::vector<Mat> mats_)
    : d(d_), n(n_), mats(std::move(mats_)) {
    if (static_cast<int>(mats.size()) != d)
        throw DimensionMismatch("evaluation point needs exactly d matrices");
    for (const Mat& m : mats)
        if (m.rows() != n || m.cols() != n)
            throw DimensionMismatch("evaluation point matrices must be n x n");
}

EvalPoint zero_point(int d, int n) {
    std::vector<Mat> mats(static_cast<std::size_t>(d), Mat::zero(n, n));
    return EvalPoint(d, n, std::move(mats));
}

EvalPoint staircase_point(int d, const Word& w) {
    int n = w.length() + 1;
    std::vector<Mat> mats(static_cast<std::size_t>(d), Mat::zero(n, n));
    for (int i = 0; i < w.length(); ++i) mats[w.at(i) - 1].at(i, i + 1) = 1;
    return EvalPoint(d, n, std::move(mats));
}

EvalPoint direct_sum(const EvalPoint& a, const EvalPoint& b) {
    if (a.d != b.d) throw DimensionMismatch("direct sum of points with different d");
    std::vector<Mat> mats;
    mats.reserve(a.mats.size());
    for (int j = 0; j < a.d; ++j) {
        Mat m = Mat::zero(a.n + b.n, a.n + b.n);
        m.set_block(0, 0, a.mats[j]);
        m.set_block(a.n, a.n, b.mats[j]);
        mats.push_back(m);
    }
    return EvalPoint(a.d, a.n + b.n, std::move(mats));
}

}  // namespace ncrat
