#include "integrabilis/parse.hpp"

#include <cctype>
#include <vector>

namespace integrabilis {

namespace {

struct Token {
    enum class Kind { Number, Symbol, Op, End };
    Kind kind;
    std::string text;
    int col; // 1-based
};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        int col = static_cast<int>(i) + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Token::Kind::Number, src.substr(i, j - i), col});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Token::Kind::Symbol, src.substr(i, j - i), col});
            i = j;
        } else if (std::string("+-*/^()").find(c) != std::string::npos) {
            out.push_back({Token::Kind::Op, std::string(1, c), col});
            ++i;
        } else {
            throw SyntaxError(col, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Token::Kind::End, "", static_cast<int>(src.size()) + 1});
    return out;
}

// expr   := term (('+'|'-') term)*
// term   := unary (('*'|'/') unary)*
// unary  := '-' unary | power
// power  := primary ('^' ['-'] integer)*
// primary := number | symbol | '(' expr ')'
template <class Elab>
class ExprParser {
public:
    using V = typename Elab::V;

    ExprParser(const std::string& src, Elab elab)
        : toks_(lex(src)), elab_(std::move(elab)) {
        if (toks_.size() == 1)
            throw SyntaxError(1, "empty expression");
    }

    V run() {
        V v = expr();
        if (peek().kind != Token::Kind::End)
            throw SyntaxError(peek().col, "unexpected trailing input '" + peek().text + "'");
        return v;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    bool accept_op(const char* op) {
        if (peek().kind == Token::Kind::Op && peek().text == op) {
            ++pos_;
            return true;
        }
        return false;
    }

    V expr() {
        V v = term();
        while (true) {
            if (accept_op("+")) v = elab_.add(v, term());
            else if (accept_op("-")) v = elab_.sub(v, term());
            else return v;
        }
    }

    V term() {
        V v = unary();
        while (true) {
            if (accept_op("*")) v = elab_.mul(v, unary());
            else if (accept_op("/")) v = elab_.div(v, unary());
            else return v;
        }
    }

    V unary() {
        if (accept_op("-")) return elab_.neg(unary());
        return power();
    }

    V power() {
        V v = primary();
        while (accept_op("^")) v = elab_.pow(v, exponent());
        return v;
    }

    long exponent() {
        bool negative = accept_op("-");
        const Token& t = peek();
        if (t.kind != Token::Kind::Number)
            throw SyntaxError(t.col, "exponent must be an integer literal");
        next();
        try {
            long e = std::stol(t.text);
            return negative ? -e : e;
        } catch (const std::out_of_range&) {
            throw SyntaxError(t.col, "exponent out of range");
        }
    }

    V primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::Number: {
                next();
                return elab_.number(Rat(Int(t.text)));
            }
            case Token::Kind::Symbol:
                next();
                return elab_.symbol(t.text, t.col);
            case Token::Kind::Op:
                if (t.text == "(") {
                    next();
                    V v = expr();
                    if (!accept_op(")"))
                        throw SyntaxError(peek().col, "expected ')'");
                    return v;
                }
                throw SyntaxError(t.col, "unexpected operator '" + t.text + "'");
            case Token::Kind::End:
                throw SyntaxError(t.col, "unexpected end of input");
        }
        throw SyntaxError(t.col, "unexpected token");
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
    Elab elab_;
};

[[noreturn]] void context_error(const std::string& sym, int col, const std::string& why) {
    fail(Errc::Context, "symbol '" + sym + "' " + why + " (column " + std::to_string(col) + ")");
}

struct RatElab {
    using V = RatFn;
    unsigned order;
    bool allow_vars;

    V number(const Rat& r) const { return RatFn::constant(order, r); }
    V symbol(const std::string& s, int col) const {
        if (s == "x" || s == "y") {
            if (!allow_vars) context_error(s, col, "is not allowed in a constants context");
            return RatFn::variable(order, s == "x" ? Var::x : Var::y);
        }
        if (s == "z") return RatFn::constant(order, Cyclo::zeta(order));
        if (s == "l") context_error(s, col, "is only allowed in an extension context");
        context_error(s, col, "is not known");
    }
    V add(const V& a, const V& b) const { return a + b; }
    V sub(const V& a, const V& b) const { return a - b; }
    V mul(const V& a, const V& b) const { return a * b; }
    V div(const V& a, const V& b) const { return a / b; }
    V neg(const V& a) const { return -a; }
    V pow(const V& a, long e) const { return a.pow(e); }
};

ExtElem ext_pow(ExtElem a, long e) {
    if (e < 0) {
        a = ext_inv(a);
        e = -e;
    }
    ExtElem r = ExtElem::one(a.desc());
    while (e > 0) {
        if (e & 1) r = r * a;
        a = a * a;
        e >>= 1;
    }
    return r;
}

struct ExtElab {
    using V = ExtElem;
    ExtDescriptor desc;

    V number(const Rat& r) const {
        return ExtElem::from_base(desc, RatFn::constant(desc.k.order(), r));
    }
    V symbol(const std::string& s, int col) const {
        unsigned order = desc.k.order();
        if (s == "x" || s == "y")
            return ExtElem::from_base(desc, RatFn::variable(order, s == "x" ? Var::x : Var::y));
        if (s == "z")
            return ExtElem::from_base(desc, RatFn::constant(order, Cyclo::zeta(order)));
        if (s == "l") return ExtElem::ell(desc);
        context_error(s, col, "is not known");
    }
    V add(const V& a, const V& b) const { return a + b; }
    V sub(const V& a, const V& b) const { return a - b; }
    V mul(const V& a, const V& b) const { return a * b; }
    V div(const V& a, const V& b) const { return a / b; }
    V neg(const V& a) const { return -a; }
    V pow(const V& a, long e) const { return ext_pow(a, e); }
};

} // namespace

RatFn parse_ratfn(const std::string& src, unsigned order) {
    return ExprParser<RatElab>(src, RatElab{order, true}).run();
}

Cyclo parse_cyclo(const std::string& src, unsigned order) {
    RatFn f = ExprParser<RatElab>(src, RatElab{order, false}).run();
    return f.constant_value();
}

ExtElem parse_ext(const std::string& src, const ExtDescriptor& desc) {
    return ExprParser<ExtElab>(src, ExtElab{desc}).run();
}

} // namespace integrabilis
