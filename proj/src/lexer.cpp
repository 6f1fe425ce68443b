#include "gcw/lexer.hpp"

#include <cctype>

namespace gcw {

std::vector<Token> lex_line(const std::string& line, std::vector<LexError>& errors) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = line.size();
    auto push = [&](Token::Kind k, std::string text, std::size_t col) {
        out.push_back({k, std::move(text), col});
    };
    while (i < n) {
        const char c = line[i];
        const std::size_t col = i + 1;
        if (c == '#') break; // comment to end of line
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < n && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
            push(Token::Kind::ident, line.substr(i, j - i), col);
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < n && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
            if (j < n && line[j] == '.') {
                std::size_t k = j + 1;
                while (k < n && std::isdigit(static_cast<unsigned char>(line[k]))) ++k;
                errors.push_back({col, "bad-literal",
                                  "non-rational literal '" + line.substr(i, k - i) +
                                      "' (write an exact fraction p/q)"});
                push(Token::Kind::bad, line.substr(i, k - i), col);
                i = k;
                continue;
            }
            push(Token::Kind::nat, line.substr(i, j - i), col);
            i = j;
            continue;
        }
        switch (c) {
        case '+': push(Token::Kind::plus, "+", col); break;
        case '-': push(Token::Kind::minus, "-", col); break;
        case '*': push(Token::Kind::star, "*", col); break;
        case '^': push(Token::Kind::caret, "^", col); break;
        case '/': push(Token::Kind::slash, "/", col); break;
        case '(': push(Token::Kind::lparen, "(", col); break;
        case ')': push(Token::Kind::rparen, ")", col); break;
        case '=': push(Token::Kind::equals, "=", col); break;
        case '[': push(Token::Kind::lbracket, "[", col); break;
        case ']': push(Token::Kind::rbracket, "]", col); break;
        default:
            errors.push_back({col, "syntax", std::string("unexpected character '") + c + "'"});
            push(Token::Kind::bad, std::string(1, c), col);
            break;
        }
        ++i;
    }
    push(Token::Kind::end, "", n + 1);
    return out;
}

} // namespace gcw
