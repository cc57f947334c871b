#include "cskein/parse.hpp"

#include <cctype>

namespace cskein {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    const Ctx& ctx;

    Parser(const std::string& text, const Ctx& c) : s(text), ctx(c) {}

    void skip() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }

    RationalFn expr() {
        RationalFn v = term();
        for (;;) {
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else return v;
        }
    }
    RationalFn term() {
        RationalFn v = factor();
        for (;;) {
            if (eat('*')) v = v * factor();
            else if (eat('/')) v = v / factor();
            else return v;
        }
    }
    RationalFn factor() {
        if (eat('-')) return -factor();
        RationalFn b = base();
        if (eat('^')) {
            bool neg = eat('-');
            int64_t e = integer();
            return b.pow(neg ? -e : e);
        }
        return b;
    }
    int64_t integer() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (start == pos) throw parse_error("expected integer at position " + std::to_string(pos));
        return std::stoll(s.substr(start, pos - start));
    }
    RationalFn base() {
        skip();
        if (pos >= s.size()) throw parse_error("unexpected end of expression");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            RationalFn v = expr();
            if (!eat(')')) throw parse_error("missing ')'");
            return v;
        }
        if (std::isdigit((unsigned char)c)) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            return RationalFn::constant(ctx, Int(s.substr(start, pos - start)));
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
            std::string name = s.substr(start, pos - start);
            for (size_t i = 0; i < ctx->vars.size(); ++i)
                if (ctx->vars[i] == name) return RationalFn::variable(ctx, (int)i);
            throw parse_error("unknown variable '" + name + "'");
        }
        throw parse_error(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

RationalFn parse_rational(const std::string& text, const Ctx& ctx) {
    Parser p(text, ctx);
    RationalFn v = p.expr();
    p.skip();
    if (p.pos != text.size())
        throw parse_error("trailing input at position " + std::to_string(p.pos));
    return v;
}

} // namespace cskein
