#include "ncrat/series.hpp"

#include "ncrat/errors.hpp"
#include "ncrat/linalg.hpp"

namespace ncrat {

Mat TruncSeries::coeff(const Word& w) const {
    auto it = coeffs.find(w);
    if (it == coeffs.end()) return Mat::zero(rows, cols);
    return it->second;
}

void TruncSeries::add_coeff(const Word& w, const Mat& value) {
    if (w.length() > order || value.is_zero()) return;
    auto it = coeffs.find(w);
    if (it == coeffs.end()) {
        coeffs.emplace(w, value);
        return;
    }
    it->second = it->second + value;
    if (it->second.is_zero()) coeffs.erase(it);
}

bool TruncSeries::operator==(const TruncSeries& other) const {
    return d == other.d && rows == other.rows && cols == other.cols && order == other.order &&
           coeffs == other.coeffs;
}

TruncSeries TruncSeries::operator+(const TruncSeries& other) const {
    if (rows != other.rows || cols != other.cols)
        throw DimensionMismatch("series addition shape mismatch");
    TruncSeries out = *this;
    out.order = std::min(order, other.order);
    for (const auto& [w, c] : other.coeffs) out.add_coeff(w, c);
    // drop terms beyond the common order
    for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
        it = it->first.length() > out.order ? out.coeffs.erase(it) : std::next(it);
    return out;
}

TruncSeries TruncSeries::operator*(const TruncSeries& other) const {
    if (cols != other.rows) throw DimensionMismatch("series product shape mismatch");
    TruncSeries out;
    out.d = d;
    out.rows = rows;
    out.cols = other.cols;
    out.order = std::min(order, other.order);
    for (const auto& [u, a] : coeffs)
        for (const auto& [v, b] : other.coeffs)
            if (u.length() + v.length() <= out.order) out.add_coeff(u.concat(v), a * b);
    return out;
}

bool WordTupleLess::operator()(const std::vector<Word>& a, const std::vector<Word>& b) const {
    int ta = 0, tb = 0;
    for (const Word& w : a) ta += w.length();
    for (const Word& w : b) tb += w.length();
    if (ta != tb) return ta < tb;
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] == b[k]) continue;
        return deglex_less(a[k], b[k]);
    }
    return false;
}

Mat MultiSeries::coeff(const std::vector<Word>& key) const {
    auto it = coeffs.find(key);
    if (it == coeffs.end()) return Mat::zero(rows, cols);
    return it->second;
}

void MultiSeries::add_coeff(const std::vector<Word>& key, const Mat& value) {
    int total = 0;
    for (const Word& w : key) total += w.length();
    if (total > order || value.is_zero()) return;
    auto it = coeffs.find(key);
    if (it == coeffs.end()) {
        coeffs.emplace(key, value);
        return;
    }
    it->second = it->second + value;
    if (it->second.is_zero()) coeffs.erase(it);
}

namespace {

struct SeriesPath {
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

MultiSeries zero_series(const RatExpr& e, int order) {
    MultiSeries out;
    out.d = e.d();
    out.rows = e.rows();
    out.cols = e.cols();
    out.arity = e.arity();
    out.order = order;
    return out;
}

std::vector<Word> empty_key(int arity) {
    return std::vector<Word>(static_cast<std::size_t>(arity), Word::empty());
}

MultiSeries mul_series(const MultiSeries& a, const MultiSeries& b) {
    MultiSeries out;
    out.d = a.d;
    out.rows = a.rows;
    out.cols = b.cols;
    out.arity = a.arity;
    out.order = std::min(a.order, b.order);
    for (const auto& [u, ca] : a.coeffs)
        for (const auto& [v, cb] : b.coeffs) {
            std::vector<Word> key(u.size());
            for (std::size_t k = 0; k < u.size(); ++k) key[k] = u[k].concat(v[k]);
            out.add_coeff(key, ca * cb);
        }
    return out;
}

/// Neumann-series inversion: s = C (1 + N) with N of positive total degree,
/// so s^{-1} = (sum_k (-N)^k) C^{-1}, truncated at the order.
MultiSeries invert_series(const MultiSeries& s, const std::string& where) {
    Mat c = s.coeff(empty_key(s.arity));
    Mat ci;
    try {
        ci = inverse(c);
    } catch (const SingularMatrix&) {
        throw NotRegularAtZero(where);
    }
    MultiSeries nser;
    nser.d = s.d;
    nser.rows = s.rows;
    nser.cols = s.cols;
    nser.arity = s.arity;
    nser.order = s.order;
    for (const auto& [key, coeff] : s.coeffs) {
        bool is_const = true;
        for (const Word& w : key)
            if (!w.is_empty()) is_const = false;
        if (!is_const) nser.add_coeff(key, ci * coeff);
    }
    MultiSeries acc = nser;  // will hold sum_{k>=1} (-N)^k
    acc.coeffs.clear();
    MultiSeries power = nser;
    int sign = -1;
    for (int k = 1; k <= s.order && !power.coeffs.empty(); ++k) {
        for (const auto& [key, coeff] : power.coeffs)
            acc.add_coeff(key, sign > 0 ? coeff : Mat(-coeff));
        power = mul_series(power, nser);
        sign = -sign;
    }
    acc.add_coeff(empty_key(s.arity), Mat::identity(s.rows));
    // multiply by the constant C^{-1} on the right
    MultiSeries out;
    out.d = s.d;
    out.rows = s.rows;
    out.cols = s.cols;
    out.arity = s.arity;
    out.order = s.order;
    for (const auto& [key, coeff] : acc.coeffs) out.add_coeff(key, coeff * ci);
    return out;
}

MultiSeries expand_rec(const RatExpr& e, int order, SeriesPath& path);

MultiSeries expand_poly(const RatExpr& e, int order) {
    MultiSeries out = zero_series(e, order);
    int slot = e.slot() - 1;
    for (const auto& [w, c] : e.poly().terms()) {
        if (w.length() > order) continue;
        std::vector<Word> key = empty_key(e.arity());
        key[static_cast<std::size_t>(slot)] = w;
        out.add_coeff(key, c);
    }
    return out;
}

MultiSeries expand_rec(const RatExpr& e, int order, SeriesPath& path) {
    switch (e.kind()) {
        case NodeKind::Poly: return expand_poly(e, order);
        case NodeKind::Add: {
            path.segments.push_back("add.l");
            MultiSeries a = expand_rec(e.lhs(), order, path);
            path.segments.back() = "add.r";
            MultiSeries b = expand_rec(e.rhs(), order, path);
            path.segments.pop_back();
            for (const auto& [key, coeff] : b.coeffs) a.add_coeff(key, coeff);
            return a;
        }
        case NodeKind::Mul: {
            path.segments.push_back("mul.l");
            MultiSeries a = expand_rec(e.lhs(), order, path);
            path.segments.back() = "mul.r";
            MultiSeries b = expand_rec(e.rhs(), order, path);
            path.segments.pop_back();
            return mul_series(a, b);
        }
        case NodeKind::Inv: {
            path.segments.push_back("inv");
            MultiSeries inner = expand_rec(e.inner(), order, path);
            std::string where = path.joined();
            path.segments.pop_back();
            return invert_series(inner, where);
        }
        case NodeKind::Block: {
            MultiSeries out = zero_series(e, order);
            int cr = e.cell(0, 0).rows(), cc = e.cell(0, 0).cols();
            for (int i = 0; i < e.grid_rows(); ++i)
                for (int j = 0; j < e.grid_cols(); ++j) {
                    path.segments.push_back("block[" + std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + "]");
                    MultiSeries cellSeries = expand_rec(e.cell(i, j), order, path);
                    path.segments.pop_back();
                    for (const auto& [key, coeff] : cellSeries.coeffs) {
                        Mat big = Mat::zero(e.rows(), e.cols());
                        big.set_block(i * cr, j * cc, coeff);
                        out.add_coeff(key, big);
                    }
                }
            return out;
        }
        case NodeKind::Tensor: {
            path.segments.push_back("tensor.l");
            MultiSeries a = expand_rec(e.lhs(), order, path);
            path.segments.back() = "tensor.r";
            MultiSeries b = expand_rec(e.rhs(), order, path);
            path.segments.pop_back();
            MultiSeries out = zero_series(e, order);
            for (const auto& [u, ca] : a.coeffs)
                for (const auto& [v, cb] : b.coeffs) {
                    std::vector<Word> key = u;
                    key.insert(key.end(), v.begin(), v.end());
                    out.add_coeff(key, kron(ca, cb));
                }
            return out;
        }
        case NodeKind::Iota: {
            path.segments.push_back("iota");
            MultiSeries inner = expand_rec(e.inner(), order, path);
            path.segments.pop_back();
            // coefficient at (w_1..w_{A-2}, empty, w_last), nothing else
            MultiSeries out = zero_series(e, order);
            for (const auto& [key, coeff] : inner.coeffs) {
                std::vector<Word> expanded(key.begin(), key.end() - 1);
                expanded.push_back(Word::empty());
                expanded.push_back(key.back());
                out.add_coeff(expanded, coeff);
            }
            return out;
        }
    }
    throw Error("unreachable expression kind");
}

}  // namespace

MultiSeries expand_multi(const RatExpr& e, int order) {
    SeriesPath path;
    return expand_rec(e, order, path);
}

TruncSeries expand(const RatExpr& e, int order) {
    if (e.arity() != 1) throw DimensionMismatch("expand expects an arity-1 expression");
    MultiSeries ms = expand_multi(e, order);
    TruncSeries out;
    out.d = ms.d;
    out.rows = ms.rows;
    out.cols = ms.cols;
    out.order = order;
    for (const auto& [key, coeff] : ms.coeffs) out.add_coeff(key[0], coeff);
    return out;
}

TruncSeries series_invert(const TruncSeries& s, int order) {
    if (s.rows != s.cols) throw DimensionMismatch("series inverse needs a square series");
    Mat ci;
    try {
        ci = inverse(s.coeff(Word::empty()));
    } catch (const SingularMatrix&) {
        throw SingularConstantTerm();
    }
    TruncSeries t;
    t.d = s.d;
    t.rows = s.rows;
    t.cols = s.cols;
    t.order = order;
    t.add_coeff(Word::empty(), ci);
    for (const Word& w : words_up_to(s.d, order)) {
        if (w.is_empty()) continue;
        Mat sum = Mat::zero(s.rows, s.cols);
        for (const auto& [u, v] : w.splittings()) {
            if (u.is_empty()) continue;
            sum = sum + s.coeff(u) * t.coeff(v);
        }
        t.add_coeff(w, Mat(-(ci * sum)));
    }
    return t;
}

}  // namespace ncrat
