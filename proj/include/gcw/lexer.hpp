#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gcw {

/// Token stream for the algebroid and field expression grammars.
/// Columns are 1-based byte offsets, which is what the diagnostics print.
struct Token {
    enum class Kind { ident, nat, plus, minus, star, caret, slash, lparen, rparen, equals, lbracket, rbracket, end, bad };
    Kind kind = Kind::end;
    std::string text;
    std::size_t col = 0;
};

struct LexError {
    std::size_t col;
    std::string cls; // "syntax" or "bad-literal"
    std::string message;
};

/// Tokenizes one line. Malformed characters produce `bad` tokens plus an
/// entry in `errors`; a decimal point is classified as a bad-literal since
/// only exact rationals are accepted.
std::vector<Token> lex_line(const std::string& line, std::vector<LexError>& errors);

} // namespace gcw
