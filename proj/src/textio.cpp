#include "cyclex/textio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace cyclex {

namespace {

std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace((unsigned char)c)) out.push_back(c);
    return out;
}

std::uint64_t parse_uint(std::string_view s, const char* what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        fail(Errc::ParseError, std::string("invalid ") + what + ": '" + std::string(s) + "'");
    return v;
}

Elem parse_coeff(const Field& F, std::string_view s) {
    std::uint64_t v = parse_uint(s, "coefficient");
    if (v >= F.q())
        fail(Errc::ParseError,
             "coefficient " + std::string(s) + " out of range for q=" + std::to_string(F.q()));
    return (Elem)v;
}

} // namespace

Poly parse_poly(const Field& F, std::string_view text) {
    std::string s = strip_spaces(text);
    if (s.empty()) fail(Errc::ParseError, "empty polynomial");

    if (s.find(',') != std::string::npos) {
        std::vector<Elem> coeffs;
        std::size_t start = 0;
        while (start <= s.size()) {
            std::size_t comma = s.find(',', start);
            std::size_t end = comma == std::string::npos ? s.size() : comma;
            coeffs.push_back(parse_coeff(F, std::string_view(s).substr(start, end - start)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return Poly::from_coeffs(F, std::move(coeffs));
    }

    Poly acc = Poly::zero(F);
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t plus = s.find('+', start);
        std::size_t end = plus == std::string::npos ? s.size() : plus;
        std::string_view term = std::string_view(s).substr(start, end - start);
        if (term.empty()) fail(Errc::ParseError, "empty term in '" + s + "'");

        std::size_t xpos = term.find('x');
        Elem coeff = 1;
        std::uint64_t exp = 0;
        if (xpos == std::string_view::npos) {
            coeff = parse_coeff(F, term);
        } else {
            if (xpos > 0) coeff = parse_coeff(F, term.substr(0, xpos));
            std::string_view rest = term.substr(xpos + 1);
            if (rest.empty()) {
                exp = 1;
            } else if (rest[0] == '^') {
                exp = parse_uint(rest.substr(1), "exponent");
            } else {
                fail(Errc::ParseError, "bad term '" + std::string(term) + "'");
            }
        }
        acc = acc + Poly::monomial(F, exp, coeff);
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    return acc;
}

std::string format_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        Elem c = f.coeff(i);
        if (c == 0) continue;
        if (!out.empty()) out.push_back('+');
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out.push_back('x');
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Field parse_field(std::string_view text, std::uint64_t size_limit) {
    std::string s = strip_spaces(text);
    if (s.rfind("q=", 0) == 0) s = s.substr(2);
    if (s.empty()) fail(Errc::ParseError, "empty field designation");
    std::size_t caret = s.find('^');
    if (caret != std::string::npos) {
        std::uint64_t p = parse_uint(std::string_view(s).substr(0, caret), "characteristic");
        std::uint64_t m = parse_uint(std::string_view(s).substr(caret + 1), "extension degree");
        if (m < 1 || m > 64) fail(Errc::ParseError, "extension degree out of range");
        return Field::make(p, (std::uint32_t)m, size_limit);
    }
    std::uint64_t q = parse_uint(s, "field size");
    if (q < 2) fail(Errc::ParseError, "field size must be >= 2");
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t m = 0;
    std::uint64_t t = q;
    while (t % p == 0) {
        t /= p;
        ++m;
    }
    if (t != 1)
        fail(Errc::NotPrime, std::to_string(q) + " is not a prime power");
    return Field::make(p, m, size_limit);
}

} // namespace cyclex
