#include "ncrat/parser.hpp"

#include <cctype>

#include "ncrat/errors.hpp"
#include "ncrat/eval.hpp"
#include "ncrat/linalg.hpp"
#include "ncrat/rng.hpp"

namespace ncrat {

namespace {

enum class Tok { Number, Var, Plus, Minus, Star, Caret, Slash, LParen, RParen,
                 LBracket, RBracket, Comma, Inv, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        cur_.pos = pos_;
        if (pos_ >= src_.size()) {
            cur_ = {Tok::End, "", pos_};
            return;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            cur_ = {Tok::Number, src_.substr(start, pos_ - start), start};
            return;
        }
        if (c == 'z') {
            std::size_t start = pos_++;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            if (pos_ == start + 1) throw SyntaxError(start, "variable index after 'z'", "'z'");
            cur_ = {Tok::Var, src_.substr(start + 1, pos_ - start - 1), start};
            return;
        }
        if (c == 'i' && src_.compare(pos_, 3, "inv") == 0) {
            cur_ = {Tok::Inv, "inv", pos_};
            pos_ += 3;
            return;
        }
        static const struct { char c; Tok t; } singles[] = {
            {'+', Tok::Plus},     {'-', Tok::Minus},    {'*', Tok::Star},
            {'^', Tok::Caret},    {'/', Tok::Slash},    {'(', Tok::LParen},
            {')', Tok::RParen},   {'[', Tok::LBracket}, {']', Tok::RBracket},
            {',', Tok::Comma},
        };
        for (const auto& s : singles)
            if (s.c == c) {
                cur_ = {s.t, std::string(1, c), pos_++};
                return;
            }
        throw SyntaxError(pos_, "expression token", "'" + std::string(1, c) + "'");
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    Token cur_;
};

class Parser {
  public:
    Parser(const std::string& src, int d) : lex_(src), d_(d), witness_rng_(0x5eed) {}

    RatExpr run() {
        RatExpr e = parse_expr();
        expect(Tok::End, "end of input");
        return e;
    }

  private:
    Token expect(Tok kind, const std::string& what) {
        if (lex_.peek().kind != kind)
            throw SyntaxError(lex_.peek().pos, what,
                              lex_.peek().kind == Tok::End ? "end of input"
                                                           : "'" + lex_.peek().text + "'");
        return lex_.take();
    }

    RatExpr parse_expr() {
        bool neg = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            neg = true;
        }
        RatExpr acc = parse_term();
        if (neg) acc = negate(acc);
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            bool minus = lex_.take().kind == Tok::Minus;
            RatExpr rhs = parse_term();
            acc = minus ? sub(acc, rhs) : make_add(acc, rhs);
        }
        return acc;
    }

    RatExpr parse_term() {
        RatExpr acc = parse_factor();
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            acc = make_mul(acc, parse_factor());
        }
        return acc;
    }

    RatExpr parse_factor() {
        RatExpr base = parse_atom();
        if (lex_.peek().kind == Tok::Caret) {
            lex_.take();
            Token t = expect(Tok::Number, "positive integer exponent");
            long k = std::stol(t.text);
            if (k < 1) throw SyntaxError(t.pos, "positive integer exponent", t.text);
            RatExpr acc = base;
            for (long i = 1; i < k; ++i) acc = make_mul(acc, base);
            return acc;
        }
        return base;
    }

    RatExpr parse_atom() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Tok::Number: {
                Token num = lex_.take();
                Rational r(mpz_class(num.text));
                if (lex_.peek().kind == Tok::Slash) {
                    lex_.take();
                    Token den = expect(Tok::Number, "positive integer denominator");
                    r = Rational(mpz_class(num.text), mpz_class(den.text));
                    r.canonicalize();
                }
                return scalar_expr(d_, r);
            }
            case Tok::Var: {
                Token var = lex_.take();
                int j = static_cast<int>(std::stol(var.text));
                if (j < 1 || j > d_)
                    throw SyntaxError(var.pos, "variable index in 1.." + std::to_string(d_),
                                      "z" + var.text);
                return var_expr(d_, j);
            }
            case Tok::LParen: {
                lex_.take();
                RatExpr inner = parse_expr();
                expect(Tok::RParen, "')'");
                return inner;
            }
            case Tok::Inv: {
                lex_.take();
                expect(Tok::LParen, "'(' after inv");
                RatExpr inner = parse_expr();
                expect(Tok::RParen, "')'");
                return make_inv_with_witness(inner);
            }
            case Tok::LBracket: return parse_matrix();
            default:
                throw SyntaxError(t.pos, "rational, variable, '(', '[' or inv",
                                  t.kind == Tok::End ? "end of input" : "'" + t.text + "'");
        }
    }

    RatExpr parse_matrix() {
        expect(Tok::LBracket, "'['");
        std::vector<std::vector<RatExpr>> grid;
        while (true) {
            expect(Tok::LBracket, "'[' starting a row");
            std::vector<RatExpr> row;
            row.push_back(parse_expr());
            while (lex_.peek().kind == Tok::Comma) {
                lex_.take();
                row.push_back(parse_expr());
            }
            expect(Tok::RBracket, "']' closing a row");
            grid.push_back(std::move(row));
            if (lex_.peek().kind != Tok::Comma) break;
            lex_.take();
        }
        expect(Tok::RBracket, "']' closing the matrix");
        return make_block(grid);
    }

    RatExpr make_inv_with_witness(const RatExpr& inner) {
        if (!inner.is_square()) throw ShapeError("inv: expression must be square");
        // Try the zero tuple first (cheap and canonical for regular-at-zero
        // expressions), then random points of sizes 1..3.
        EvalPoint zero = zero_point(d_, 1);
        if (value_invertible(inner, zero)) return make_inv(inner, MultiPoint{zero});
        for (int attempt = 0; attempt < 64; ++attempt) {
            int n = 1 + static_cast<int>(attempt % 3);
            std::vector<Mat> mats;
            for (int j = 0; j < d_; ++j) {
                Mat m(n, n);
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) m.at(a, b) = witness_rng_.rational_in(-9, 9);
                mats.push_back(std::move(m));
            }
            EvalPoint pt(d_, n, std::move(mats));
            if (value_invertible(inner, pt)) return make_inv(inner, MultiPoint{pt});
        }
        throw DegenerateInverse("no invertible point found for inv(...)");
    }

    static bool value_invertible(const RatExpr& inner, const EvalPoint& pt) {
        try {
            Mat v = evaluate(inner, pt);
            return exact_det(v) != 0;
        } catch (const NotInDomain&) {
            return false;
        }
    }

    Lexer lex_;
    int d_;
    Rng witness_rng_;
};

}  // namespace

RatExpr parse(const std::string& text, int d) {
    if (d < 1) throw ShapeError("indeterminate count must be at least 1");
    return Parser(text, d).run();
}

namespace {

std::string word_to_text(const Word& w, int slot) {
    std::string primes(static_cast<std::size_t>(slot - 1), '\'');
    std::string s;
    for (int letter : w.letters()) {
        if (!s.empty()) s += "*";
        s += "z" + std::to_string(letter) + primes;
    }
    return s;
}

/// Prints a scalar polynomial; sets `atomic` when the result needs no parens
/// inside a product.
std::string scalar_poly_to_text(const MatPoly& p, int slot, bool& atomic) {
    if (p.is_zero()) {
        atomic = true;
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        Rational r = c.at(0, 0);
        bool negative = r < 0;
        Rational a = negative ? Rational(-r) : r;
        std::string piece;
        if (w.is_empty())
            piece = rat_to_string(a);
        else if (a == 1)
            piece = word_to_text(w, slot);
        else
            piece = rat_to_string(a) + "*" + word_to_text(w, slot);
        if (first)
            out = (negative ? "-" : "") + piece;
        else
            out += (negative ? " - " : " + ") + piece;
        first = false;
    }
    atomic = p.terms().size() == 1 && out[0] != '-';
    return out;
}

/// A product by the constant -I, as produced by negation and subtraction.
bool is_negation(const RatExpr& e) {
    if (e.kind() != NodeKind::Mul || !e.lhs().is_poly()) return false;
    const MatPoly& p = e.lhs().poly();
    return p.terms().size() == 1 &&
           p.constant_term() == Mat::scalar(e.lhs().rows(), Rational(-1));
}

std::string format_rec(const RatExpr& e, int prec, int slot_offset);

/// prec 0 = sum context, 1 = sum operand / left product factor,
/// 2 = right product factor. The printer keeps sums and products
/// left-associated and spells negation via the minus sugar, so parsing the
/// output reproduces the tree exactly.
std::string format_rec(const RatExpr& e, int prec, int slot_offset) {
    switch (e.kind()) {
        case NodeKind::Poly: {
            if (e.rows() == 1 && e.cols() == 1) {
                bool atomic = false;
                std::string s = scalar_poly_to_text(e.poly(), slot_offset + e.slot(), atomic);
                return (prec >= 1 && !atomic) ? "(" + s + ")" : s;
            }
            // matrix polynomial prints as a block literal of scalar entries
            std::string s = "[";
            for (int i = 0; i < e.rows(); ++i) {
                s += i == 0 ? "[" : ", [";
                for (int j = 0; j < e.cols(); ++j) {
                    bool atomic = false;
                    if (j > 0) s += ", ";
                    s += scalar_poly_to_text(e.poly().entry(i, j), slot_offset + e.slot(),
                                             atomic);
                }
                s += "]";
            }
            return s + "]";
        }
        case NodeKind::Add: {
            std::string rhs = is_negation(e.rhs())
                                  ? " - " + format_rec(e.rhs().rhs(), 2, slot_offset)
                                  : " + " + format_rec(e.rhs(), 1, slot_offset);
            std::string s = format_rec(e.lhs(), 0, slot_offset) + rhs;
            return prec >= 1 ? "(" + s + ")" : s;
        }
        case NodeKind::Mul: {
            if (is_negation(e)) {
                std::string s = "-" + format_rec(e.rhs(), 2, slot_offset);
                return prec >= 1 ? "(" + s + ")" : s;
            }
            std::string s = format_rec(e.lhs(), 1, slot_offset) + " * " +
                            format_rec(e.rhs(), 2, slot_offset);
            return prec >= 2 ? "(" + s + ")" : s;
        }
        case NodeKind::Inv: return "inv(" + format_rec(e.inner(), 0, slot_offset) + ")";
        case NodeKind::Block: {
            std::string s = "[";
            for (int i = 0; i < e.grid_rows(); ++i) {
                s += i == 0 ? "[" : ", [";
                for (int j = 0; j < e.grid_cols(); ++j) {
                    if (j > 0) s += ", ";
                    s += format_rec(e.cell(i, j), 0, slot_offset);
                }
                s += "]";
            }
            return s + "]";
        }
        case NodeKind::Tensor:
            return "tensor(" + format_rec(e.lhs(), 0, slot_offset) + ", " +
                   format_rec(e.rhs(), 0, slot_offset + e.lhs().arity()) + ")";
        case NodeKind::Iota: return "iota(" + format_rec(e.inner(), 0, slot_offset) + ")";
    }
    return "";
}

}  // namespace

std::string format(const RatExpr& e) { return format_rec(e, 0, 0); }

ExprFile parse_expr_file(const std::string& contents) {
    std::size_t eol = contents.find('\n');
    std::string header = eol == std::string::npos ? contents : contents.substr(0, eol);
    std::size_t eq = header.find('=');
    if (header.rfind("d", 0) != 0 || eq == std::string::npos)
        throw IoError("expression file must start with a 'd=<count>' header line");
    int d = static_cast<int>(std::stol(header.substr(eq + 1)));
    std::string body = eol == std::string::npos ? "" : contents.substr(eol + 1);
    return ExprFile{d, parse(body, d)};
}

std::string format_expr_file(const RatExpr& e) {
    return "d=" + std::to_string(e.d()) + "\n" + format(e) + "\n";
}

}  // namespace ncrat
