#include "rrlab/text.hpp"

#include <cctype>

namespace rrlab {

ParseError::ParseError(int line_, int col_, const std::string& expected_,
                       const std::string& got_)
    : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                         std::to_string(col_) + ": expected " + expected_ +
                         ", got " + got_),
      line(line_), col(col_), expected(expected_), got(got_) {}

std::string Token::describe() const {
    switch (kind) {
    case ident: return "identifier '" + text + "'";
    case integer: return "number '" + text + "'";
    case punct: return "'" + text + "'";
    case eof: return "end of input";
    }
    return "?";
}

Lexer::Lexer(std::string src) : src_(std::move(src)) {}

void Lexer::advance() {
    // skip whitespace and comments
    while (pos_ < src_.size()) {
        char c = src_[pos_];
        if (c == '#') {
            while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
        } else if (c == '\n') {
            ++pos_, ++line_, col_ = 1;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos_, ++col_;
        } else {
            break;
        }
    }
    cur_ = Token{};
    cur_.line = line_;
    cur_.col = col_;
    if (pos_ >= src_.size()) {
        cur_.kind = Token::eof;
        return;
    }
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        cur_.kind = Token::ident;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            cur_.text += src_[pos_++];
            ++col_;
        }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
        cur_.kind = Token::integer;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            cur_.text += src_[pos_++];
            ++col_;
        }
    } else {
        cur_.kind = Token::punct;
        cur_.text = std::string(1, c);
        ++pos_, ++col_;
    }
}

const Token& Lexer::peek() {
    if (!have_) {
        advance();
        have_ = true;
    }
    return cur_;
}

Token Lexer::next() {
    Token t = peek();
    have_ = false;
    return t;
}

Token Lexer::expect_punct(const std::string& p) {
    const Token& t = peek();
    if (t.kind != Token::punct || t.text != p) fail("'" + p + "'");
    return next();
}

Token Lexer::expect_ident() {
    if (peek().kind != Token::ident) fail("identifier");
    return next();
}

Token Lexer::expect_integer() {
    if (peek().kind != Token::integer) fail("number");
    return next();
}

void Lexer::fail(const std::string& expected) {
    const Token& t = peek();
    throw ParseError(t.line, t.col, expected, t.describe());
}

namespace {

unsigned parse_exponent(Lexer& lx) {
    Token t = lx.expect_integer();
    unsigned long e = std::stoul(t.text);
    if (e > Monomial::kMaxExp)
        throw ParseError(t.line, t.col, "exponent <= " + std::to_string(Monomial::kMaxExp),
                         "'" + t.text + "'");
    return static_cast<unsigned>(e);
}

Poly parse_primary(Lexer& lx, const RingPtr& ring) {
    const Token& t = lx.peek();
    if (t.kind == Token::integer) {
        Token num = lx.next();
        mpq_class q(num.text);
        if (lx.peek().kind == Token::punct && lx.peek().text == "/") {
            lx.next();
            Token den = lx.expect_integer();
            if (den.text.find_first_not_of('0') == std::string::npos)
                throw ParseError(den.line, den.col, "nonzero denominator", "'" + den.text + "'");
            q /= mpq_class(den.text);
        }
        return Poly::constant(ring, Coeff::from_mpq(ring->field, q));
    }
    if (t.kind == Token::ident) {
        Token v = lx.next();
        int i = ring->var_index(v.text);
        if (i < 0)
            throw ParseError(v.line, v.col, "ring variable", "'" + v.text + "'");
        return Poly::var(ring, i);
    }
    if (t.kind == Token::punct && t.text == "(") {
        lx.next();
        Poly p = parse_poly_expr(lx, ring);
        lx.expect_punct(")");
        return p;
    }
    lx.fail("polynomial");
}

Poly parse_factor(Lexer& lx, const RingPtr& ring) {
    Poly p = parse_primary(lx, ring);
    if (lx.peek().kind == Token::punct && lx.peek().text == "^") {
        lx.next();
        p = p.pow(parse_exponent(lx));
    }
    return p;
}

Poly parse_term(Lexer& lx, const RingPtr& ring) {
    Poly p = parse_factor(lx, ring);
    while (lx.peek().kind == Token::punct && lx.peek().text == "*") {
        lx.next();
        p *= parse_factor(lx, ring);
    }
    return p;
}

}  // namespace

Poly parse_poly_expr(Lexer& lx, const RingPtr& ring) {
    bool neg = false;
    if (lx.peek().kind == Token::punct && lx.peek().text == "-") {
        lx.next();
        neg = true;
    }
    Poly p = parse_term(lx, ring);
    if (neg) p = -p;
    while (lx.peek().kind == Token::punct &&
           (lx.peek().text == "+" || lx.peek().text == "-")) {
        bool minus = lx.next().text == "-";
        Poly q = parse_term(lx, ring);
        p = minus ? p - q : p + q;
    }
    return p;
}

Poly parse_poly_str(const RingPtr& ring, const std::string& text) {
    Lexer lx(text);
    Poly p = parse_poly_expr(lx, ring);
    if (lx.peek().kind != Token::eof) lx.fail("end of input");
    return p;
}

Poly parse_poly(const RingPtr& r, const std::string& text) { return parse_poly_str(r, text); }

namespace {

std::string monomial_str(const RingPtr& ring, const Monomial& m) {
    std::string s;
    for (int i = 0; i < m.nvars(); ++i) {
        if (!m.exp(i)) continue;
        if (!s.empty()) s += "*";
        s += ring->vars[i];
        if (m.exp(i) > 1) s += "^" + std::to_string(m.exp(i));
    }
    return s;
}

}  // namespace

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < t_.size(); ++i) {
        const Term& t = t_[i];
        Coeff mag = t.c.abs();
        if (i == 0) {
            if (t.c.is_negative()) s += "-";
        } else {
            s += t.c.is_negative() ? " - " : " + ";
        }
        std::string ms = monomial_str(ring_, t.mono);
        if (ms.empty()) {
            s += mag.str();
        } else if (mag.is_one()) {
            s += ms;
        } else {
            s += mag.str() + "*" + ms;
        }
    }
    return s;
}

}  // namespace rrlab
