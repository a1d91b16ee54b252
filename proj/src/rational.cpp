#include "weilbund/rational.hpp"

#include <cctype>

#include "weilbund/errors.hpp"

namespace weilbund {

Rational parse_rational(const std::string& text) {
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        return j;
    };
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t num_end = digits(i);
    if (num_end == i)
        throw ParseError("expected integer in rational '" + text + "'", i, {"int"});
    i = num_end;
    if (i < text.size() && text[i] == '/') {
        ++i;
        std::size_t den_end = digits(i);
        if (den_end == i)
            throw ParseError("expected denominator in rational '" + text + "'", i, {"uint"});
        i = den_end;
    }
    if (i != text.size())
        throw ParseError("trailing characters in rational '" + text + "'", i, {"end"});

    Rational q;
    if (q.set_str(text, 10) != 0)
        throw ParseError("malformed rational '" + text + "'", 0, {"rational"});
    if (sgn(q.get_den()) == 0)
        throw ParseError("zero denominator in rational '" + text + "'", 0, {"nonzero denominator"});
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace weilbund
