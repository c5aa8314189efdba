#include "ncrat/rational.hpp"

#include "ncrat/errors.hpp"

namespace ncrat {

Rational rat_from_string(const std::string& text) {
    if (text.empty()) throw IoError("empty rational literal");
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Rational r{mpz_class(text)};
            r.canonicalize();
            return r;
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den <= 0) throw IoError("rational denominator must be positive: " + text);
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw IoError("malformed rational literal: " + text);
    }
}

std::string rat_to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace ncrat
