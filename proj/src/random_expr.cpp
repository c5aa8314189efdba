#include "ncrat/random_expr.hpp"

#include "ncrat/errors.hpp"
#include "ncrat/eval.hpp"
#include "ncrat/linalg.hpp"
#include "ncrat/rng.hpp"

namespace ncrat {

namespace {

class Generator {
  public:
    Generator(Rng rng, const GenOptions& opt) : rng_(rng), opt_(opt) {}

    RatExpr gen(int depth, int rows, int cols) {
        if (depth <= 0) return gen_poly(rows, cols);
        switch (rng_.int_in(0, 9)) {
            case 0:
            case 1: return gen_poly(rows, cols);
            case 2:
            case 3: return make_add(gen(depth - 1, rows, cols), gen(depth - 1, rows, cols));
            case 4:
            case 5: {
                int k = static_cast<int>(rng_.int_in(1, 2));
                return make_mul(gen(depth - 1, rows, k), gen(depth - 1, k, cols));
            }
            case 6:
            case 7:
                if (rows == cols) return gen_inv(depth, rows);
                return gen_poly(rows, cols);
            case 8: {
                int gr = rows % 2 == 0 ? 2 : 1;
                int gc = cols % 2 == 0 ? 2 : 1;
                if (gr == 1 && gc == 1) return gen_poly(rows, cols);
                std::vector<std::vector<RatExpr>> grid(static_cast<std::size_t>(gr));
                for (int i = 0; i < gr; ++i)
                    for (int j = 0; j < gc; ++j)
                        grid[static_cast<std::size_t>(i)].push_back(
                            gen(depth - 1, rows / gr, cols / gc));
                return make_block(grid);
            }
            default: return gen_poly(rows, cols);
        }
    }

  private:
    RatExpr gen_poly(int rows, int cols) {
        MatPoly p(opt_.d, rows, cols);
        int terms = static_cast<int>(rng_.int_in(1, opt_.max_poly_terms));
        for (int t = 0; t < terms; ++t) {
            int len = static_cast<int>(rng_.int_in(0, opt_.max_poly_degree));
            std::vector<int> letters;
            for (int k = 0; k < len; ++k)
                letters.push_back(static_cast<int>(rng_.int_in(1, opt_.d)));
            Mat c(rows, cols);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j)
                    c.at(i, j) = rng_.rational_in(-opt_.coeff_range, opt_.coeff_range);
            p.add_term(Word(letters), c);
        }
        return make_poly(1, 1, p);
    }

    RatExpr gen_inv(int depth, int n) {
        RatExpr inner = gen(depth - 1, n, n);
        if (opt_.require_regular_at_zero) {
            // Shift by s*I until the value at zero becomes invertible; at most
            // n shifts can fail, so this terminates quickly.
            Mat at_zero = evaluate(inner, zero_point(opt_.d, 1));
            long s = 0;
            while (exact_det(at_zero + Mat::scalar(at_zero.rows(), rat(s))) == 0) ++s;
            if (s != 0)
                inner = make_add(inner, make_poly(1, 1, MatPoly::constant(
                                                            opt_.d, Mat::scalar(n, rat(s)))));
            return make_inv(inner, MultiPoint{zero_point(opt_.d, 1)});
        }
        for (int attempt = 0; attempt < 64; ++attempt) {
            EvalPoint pt = random_point(1 + static_cast<int>(attempt % 3));
            try {
                if (exact_det(evaluate(inner, pt)) != 0)
                    return make_inv(inner, MultiPoint{pt});
            } catch (const NotInDomain&) {
            }
        }
        throw GenerationFailed("no invertibility witness found within 64 attempts");
    }

    EvalPoint random_point(int n) {
        std::vector<Mat> mats;
        for (int j = 0; j < opt_.d; ++j) {
            Mat m(n, n);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) m.at(a, b) = rng_.rational_in(-4, 4);
            mats.push_back(std::move(m));
        }
        return EvalPoint(opt_.d, n, std::move(mats));
    }

    Rng rng_;
    const GenOptions& opt_;
};

}  // namespace

RatExpr random_expr(std::uint64_t seed, const GenOptions& options) {
    // Regular-at-zero expressions are evaluable at zero by construction; an
    // inverse of something singular even after shifting cannot occur, so the
    // only failure mode is the witness budget in the free mode.
    Generator g(Rng(seed), options);
    RatExpr e = g.gen(options.depth, options.rows, options.cols);
    return e;
}

RatExpr random_expr(std::uint64_t seed, int d, int depth, int rows, int cols) {
    GenOptions opt;
    opt.d = d;
    opt.depth = depth;
    opt.rows = rows;
    opt.cols = cols;
    return random_expr(seed, opt);
}

}  // namespace ncrat
