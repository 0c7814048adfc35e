#pragma once

#include <stdexcept>
#include <string>

#include "rrlab/poly.hpp"

namespace rrlab {

// Parse failure with source position and what the parser wanted to see.
struct ParseError : std::runtime_error {
    ParseError(int line, int col, const std::string& expected, const std::string& got);
    int line, col;
    std::string expected, got;
};

struct Token {
    enum Kind { ident, integer, punct, eof };
    Kind kind = eof;
    std::string text;
    int line = 0, col = 0;
    std::string describe() const;
};

// Shared tokenizer for polynomial strings and session scripts.  '#' starts a
// comment running to end of line.
class Lexer {
public:
    explicit Lexer(std::string src);
    const Token& peek();
    Token next();
    // Consume a token that must match, else throw ParseError.
    Token expect_punct(const std::string& p);
    Token expect_ident();
    Token expect_integer();
    [[noreturn]] void fail(const std::string& expected);

private:
    void advance();
    std::string src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_;
    bool have_ = false;
};

// Polynomial expression parser: + - * ^ with parentheses, integer and
// rational literals, ring variables by name.  Stops at the first token that
// cannot extend the expression.
Poly parse_poly_expr(Lexer& lx, const RingPtr& ring);

// Parse a complete string as one polynomial.
Poly parse_poly_str(const RingPtr& ring, const std::string& text);

}  // namespace rrlab
