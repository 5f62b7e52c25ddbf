#include "roadmap/parse.hpp"

#include <cctype>
#include <optional>

namespace roadmap {
namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, Newline, End };

struct Token {
    Tok kind;
    std::string text;
    size_t line;
    size_t column;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    size_t line = 1, col = 1;
    size_t i = 0;
    auto push = [&](Tok k, std::string s) { out.push_back({k, std::move(s), line, col}); };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            out.push_back({Tok::Newline, "\n", line, col});
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            ++col;
            continue;
        }
        if (c == '#') {  // comment to end of line
            while (i < text.size() && text[i] != '\n') { ++i; ++col; }
            continue;
        }
        // Unicode minus sign, tolerated as '-'.
        if (static_cast<unsigned char>(c) == 0xE2 && i + 2 < text.size() &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            push(Tok::Minus, "-");
            i += 3;
            ++col;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = i;
            size_t startcol = col;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) { ++i; ++col; }
            out.push_back({Tok::Number, text.substr(start, i - start), line, startcol});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = i;
            size_t startcol = col;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                ++i;
                ++col;
            }
            out.push_back({Tok::Ident, text.substr(start, i - start), line, startcol});
            continue;
        }
        switch (c) {
            case '+': push(Tok::Plus, "+"); break;
            case '-': push(Tok::Minus, "-"); break;
            case '*': push(Tok::Star, "*"); break;
            case '^': push(Tok::Caret, "^"); break;
            case '/': push(Tok::Slash, "/"); break;
            case '(': push(Tok::LParen, "("); break;
            case ')': push(Tok::RParen, ")"); break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        ++i;
        ++col;
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

/// Recursive-descent parser over a fixed variable list; stops at Newline/End.
class PolyParser {
public:
    PolyParser(const std::vector<Token>& toks, size_t pos, const std::vector<std::string>& vars)
        : toks_(toks), pos_(pos), vars_(vars) {}

    MultiPoly<Rational> parse_expr() {
        bool neg = false;
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            if (take().kind == Tok::Minus) neg = !neg;
        }
        MultiPoly<Rational> acc = parse_term();
        if (neg) acc = -acc;
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool minus = take().kind == Tok::Minus;
            MultiPoly<Rational> t = parse_term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    size_t pos() const { return pos_; }

private:
    MultiPoly<Rational> parse_term() {
        MultiPoly<Rational> acc = parse_power();
        while (peek().kind == Tok::Star) {
            take();
            acc *= parse_power();
        }
        return acc;
    }

    MultiPoly<Rational> parse_power() {
        MultiPoly<Rational> base = parse_atom();
        if (peek().kind == Tok::Caret) {
            take();
            const Token& t = expect(Tok::Number, "exponent");
            unsigned long e = std::stoul(t.text);
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    MultiPoly<Rational> parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Minus:
                take();
                return -parse_atom();
            case Tok::Number: {
                take();
                Rational num = Rational::from_string(t.text);
                if (peek().kind == Tok::Slash) {
                    take();
                    const Token& d = expect(Tok::Number, "denominator");
                    Rational den = Rational::from_string(d.text);
                    if (den.is_zero()) throw ParseError("zero denominator", d.line, d.column);
                    num = num / den;
                }
                return MultiPoly<Rational>::constant(vars_, num);
            }
            case Tok::Ident: {
                take();
                for (size_t i = 0; i < vars_.size(); ++i)
                    if (vars_[i] == t.text) return MultiPoly<Rational>::variable(vars_, i);
                throw ParseError("unknown variable " + t.text, t.line, t.column);
            }
            case Tok::LParen: {
                take();
                MultiPoly<Rational> inner = parse_expr();
                expect(Tok::RParen, "')'");
                return inner;
            }
            default:
                throw ParseError("unexpected '" + describe(t) + "'", t.line, t.column);
        }
    }

    static std::string describe(const Token& t) {
        if (t.kind == Tok::End) return "end of input";
        if (t.kind == Tok::Newline) return "end of line";
        return t.text;
    }

    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }
    const Token& expect(Tok kind, const std::string& what) {
        const Token& t = take();
        if (t.kind != kind)
            throw ParseError("expected " + what + ", got '" + describe(t) + "'", t.line, t.column);
        return t;
    }

    const std::vector<Token>& toks_;
    size_t pos_;
    const std::vector<std::string>& vars_;
};

}  // namespace

std::vector<std::string> coordinate_vars(size_t k) {
    std::vector<std::string> v;
    v.reserve(k);
    for (size_t i = 1; i <= k; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

MultiPoly<Rational> parse_poly(const std::string& text, const std::vector<std::string>& vars) {
    std::vector<Token> toks = tokenize(text);
    PolyParser p(toks, 0, vars);
    MultiPoly<Rational> r = p.parse_expr();
    const Token& t = toks[p.pos()];
    if (t.kind != Tok::End && t.kind != Tok::Newline)
        throw ParseError("unexpected '" + t.text + "'", t.line, t.column);
    return r;
}

ParsedSystem parse_system(const std::string& text) {
    std::vector<Token> toks = tokenize(text);
    // First pass: infer k from the highest well-formed coordinate name.
    size_t k = 0;
    for (const Token& t : toks) {
        if (t.kind != Tok::Ident) continue;
        const std::string& s = t.text;
        if (s.size() >= 2 && s[0] == 'x' && s[1] != '0' &&
            s.find_first_not_of("0123456789", 1) == std::string::npos) {
            k = std::max(k, static_cast<size_t>(std::stoul(s.substr(1))));
        }
    }
    ParsedSystem sys;
    sys.k = k;
    std::vector<std::string> vars = coordinate_vars(k);
    size_t pos = 0;
    while (toks[pos].kind != Tok::End) {
        if (toks[pos].kind == Tok::Newline) {
            ++pos;
            continue;
        }
        PolyParser p(toks, pos, vars);
        sys.polys.push_back(p.parse_expr());
        pos = p.pos();
        if (toks[pos].kind == Tok::Newline) {
            ++pos;
        } else if (toks[pos].kind != Tok::End) {
            throw ParseError("unexpected '" + toks[pos].text + "'", toks[pos].line, toks[pos].column);
        }
    }
    return sys;
}

}  // namespace roadmap
