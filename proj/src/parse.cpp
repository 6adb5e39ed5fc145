#include "koppel/parse.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <stdexcept>

namespace koppel {

namespace {

Family conj_family(Family f) {
    switch (f) {
        case Family::Zeta: return Family::ZetaBar;
        case Family::ZetaBar: return Family::Zeta;
        case Family::Z: return Family::ZBar;
        case Family::ZBar: return Family::Z;
        default: return f;
    }
}

struct Parser {
    const VarSpace& vs;
    const std::string& s;
    Family lower;
    size_t pos = 0;

    Parser(const VarSpace& v, const std::string& text, Family lo) : vs(v), s(text), lower(lo) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) { ++pos; return true; }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg +
                                 " in \"" + s + "\"");
    }

    Rational integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return Rational(s.substr(start, pos - start));
    }

    long small_int() {
        Rational r = integer();
        return static_cast<long>(boost::multiprecision::numerator(r));
    }

    MultiPoly expr() {
        MultiPoly acc = accept('-') ? -term() : term();
        for (;;) {
            if (accept('+')) acc = acc + term();
            else if (accept('-')) acc = acc - term();
            else return acc;
        }
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    MultiPoly factor() {
        MultiPoly base = primary();
        if (accept('^')) {
            long e = small_int();
            if (e < 0) fail("negative exponent");
            MultiPoly out = MultiPoly::constant(vs, GaussianRational(1));
            for (long k = 0; k < e; ++k) out = out * base;
            return out;
        }
        return base;
    }

    MultiPoly primary() {
        char c = peek();
        if (c == '(') {
            ++pos;
            MultiPoly inner = expr();
            expect(')');
            return inner;
        }
        if (c == '-') { ++pos; return -primary(); }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational n = integer();
            if (accept('/')) n = n / integer();
            return MultiPoly::constant(vs, GaussianRational(n));
        }
        if (c == 'i') { ++pos; return MultiPoly::constant(vs, GaussianRational::i()); }
        if (c == 'z' || c == 'Z' || c == 'w') {
            ++pos;
            long j = small_int();
            if (j > vs.N) fail("variable index out of range");
            Family f = c == 'w' ? Family::W : (c == 'z' ? lower : conj_family(lower));
            return MultiPoly::var(vs, f, static_cast<int>(j));
        }
        fail("unexpected character");
    }
};

} // namespace

MultiPoly parse_poly(const VarSpace& vs, const std::string& text, Family lower) {
    Parser p(vs, text, lower);
    MultiPoly out = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

nlohmann::json poly_to_json(const MultiPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms) {
        nlohmann::json mono = nlohmann::json::object();
        for (size_t v = 0; v < e.size(); ++v)
            if (e[v] != 0) mono[p.vs.name(static_cast<int>(v))] = e[v];
        terms.push_back({{"coeff_re", c.re.str()}, {"coeff_im", c.im.str()}, {"monomial", mono}});
    }
    return {{"N", p.vs.N}, {"terms", terms}};
}

nlohmann::json rational_to_json(const RationalFn& r) {
    return {{"num", poly_to_json(r.num)}, {"den", poly_to_json(r.den)}};
}

} // namespace koppel
