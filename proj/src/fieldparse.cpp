#include "gcw/aksz.hpp"
#include "gcw/lexer.hpp"

#include <set>
#include <sstream>

namespace gcw {

namespace {

/// Field expression grammar; extends the model grammar with coordinate
/// differentials (dU for coordinate U), sin(K U)/cos(K U) with frequency in
/// full turns, and interval monomials T^M.
class FieldExprParser {
  public:
    FieldExprParser(const std::vector<Token>& toks, const WvPtr& wv,
                    std::vector<ParseError>& errors, std::size_t line)
        : toks_(toks), wv_(wv), errors_(errors), line_(line) {}

    std::optional<FieldForm> parse() {
        FieldForm f = parse_expr();
        if (!failed_ && peek().kind != Token::Kind::end)
            error("syntax", "unexpected trailing input '" + peek().text + "'");
        if (failed_) return std::nullopt;
        return f;
    }

  private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }
    bool accept(Token::Kind k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }
    void error(const std::string& cls, const std::string& msg) {
        if (!failed_) errors_.push_back({line_, peek().col, cls, msg});
        failed_ = true;
    }

    FieldForm parse_expr() {
        bool neg = false;
        if (accept(Token::Kind::minus))
            neg = true;
        else
            accept(Token::Kind::plus);
        FieldForm acc = parse_term();
        if (neg) acc = -acc;
        while (!failed_) {
            if (accept(Token::Kind::plus))
                acc += parse_term();
            else if (accept(Token::Kind::minus))
                acc -= parse_term();
            else
                break;
        }
        return acc;
    }

    FieldForm parse_term() {
        FieldForm acc = parse_atom();
        while (!failed_ && accept(Token::Kind::star)) acc = acc * parse_atom();
        return acc;
    }

    FieldForm parse_power(FieldForm base) {
        if (!accept(Token::Kind::caret)) return base;
        if (peek().kind != Token::Kind::nat) {
            error("syntax", "expected exponent after '^'");
            return base;
        }
        const std::string etext = advance().text;
        if (etext.size() > 4) {
            error("bad-literal", "exponent out of range");
            return base;
        }
        const unsigned long e = std::stoul(etext);
        FieldForm acc = FieldForm::constant(wv_, Rat(1));
        for (unsigned long i = 0; i < e; ++i) acc = acc * base;
        return acc;
    }

    FieldForm parse_atom() {
        const FieldForm zero = FieldForm::zero(wv_);
        if (failed_) return zero;
        const Token& t = peek();
        switch (t.kind) {
        case Token::Kind::nat: {
            advance();
            Rat num(t.text);
            if (accept(Token::Kind::slash)) {
                if (peek().kind != Token::Kind::nat) {
                    error("syntax", "expected denominator after '/'");
                    return zero;
                }
                const Rat den(advance().text);
                if (den == 0) {
                    error("bad-literal", "zero denominator");
                    return zero;
                }
                num /= den;
            }
            return FieldForm::constant(wv_, num);
        }
        case Token::Kind::ident: {
            if (t.text == "sin" || t.text == "cos") return parse_trig();
            advance();
            // dU: differential of a declared coordinate
            if (t.text.size() > 1 && t.text[0] == 'd') {
                if (auto idx = wv_->find(t.text.substr(1)))
                    return parse_power(FieldForm::differential(wv_, *idx));
            }
            if (auto idx = wv_->find(t.text)) {
                if (wv_->factor(*idx).kind != FactorKind::interval) {
                    errors_.push_back({line_, t.col, "syntax",
                                       "circle coordinate '" + t.text +
                                           "' may appear only inside sin(..)/cos(..)"});
                    failed_ = true;
                    return zero;
                }
                return parse_power(FieldForm::interval_power(wv_, *idx, 1));
            }
            errors_.push_back({line_, t.col, "unknown-identifier",
                               "unknown coordinate or differential '" + t.text + "'"});
            failed_ = true;
            return zero;
        }
        case Token::Kind::lparen: {
            advance();
            FieldForm inner = parse_expr();
            if (!accept(Token::Kind::rparen)) error("syntax", "expected ')'");
            return parse_power(std::move(inner));
        }
        default:
            error("syntax", "expected a rational, sin/cos, coordinate or '('");
            return zero;
        }
    }

    FieldForm parse_trig() {
        const FieldForm zero = FieldForm::zero(wv_);
        const bool is_cos = peek().text == "cos";
        advance();
        if (!accept(Token::Kind::lparen)) {
            error("syntax", "expected '(' after sin/cos");
            return zero;
        }
        if (peek().kind != Token::Kind::nat) {
            error("syntax", "expected an integer frequency");
            return zero;
        }
        const std::string ftext = advance().text;
        if (ftext.size() > 6) {
            error("bad-literal", "frequency out of range");
            return zero;
        }
        const unsigned long freq = std::stoul(ftext);
        if (freq == 0) {
            error("bad-literal", "trig frequency must be >= 1");
            return zero;
        }
        if (peek().kind != Token::Kind::ident) {
            error("syntax", "expected a coordinate name");
            return zero;
        }
        const Token coord = advance();
        auto idx = wv_->find(coord.text);
        if (!idx) {
            errors_.push_back({line_, coord.col, "unknown-identifier",
                               "unknown coordinate '" + coord.text + "'"});
            failed_ = true;
            return zero;
        }
        if (wv_->factor(*idx).kind != FactorKind::circle) {
            errors_.push_back({line_, coord.col, "syntax",
                               "sin/cos expects a circle coordinate, got '" + coord.text + "'"});
            failed_ = true;
            return zero;
        }
        if (!accept(Token::Kind::rparen)) {
            error("syntax", "expected ')'");
            return zero;
        }
        return parse_power(
            FieldForm::trig(wv_, *idx, is_cos, static_cast<std::uint32_t>(freq)));
    }

    const std::vector<Token>& toks_;
    WvPtr wv_;
    std::vector<ParseError>& errors_;
    std::size_t line_;
    std::size_t pos_ = 0;
    bool failed_ = false;
};

} // namespace

std::optional<FieldForm> parse_field_expr(const std::string& text, const WvPtr& wv,
                                          std::vector<ParseError>& errors, std::size_t line) {
    std::vector<LexError> lex_errors;
    auto toks = lex_line(text, lex_errors);
    for (const auto& e : lex_errors) errors.push_back({line, e.col, e.cls, e.message});
    if (!lex_errors.empty()) return std::nullopt;
    return FieldExprParser(toks, wv, errors, line).parse();
}

FieldParseResult parse_field_spec(const std::string& text) {
    FieldParseResult result;
    FieldSpec spec;
    auto& errors = result.errors;

    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    bool saw_wv = false;
    std::set<std::string> image_names;

    while (std::getline(is, line)) {
        ++lineno;
        std::vector<LexError> lex_errors;
        auto toks = lex_line(line, lex_errors);
        for (const auto& e : lex_errors) errors.push_back({lineno, e.col, e.cls, e.message});
        if (!lex_errors.empty()) continue;
        if (toks.front().kind == Token::Kind::end) continue;

        auto syntax = [&](std::size_t col, const std::string& msg) {
            errors.push_back({lineno, col, "syntax", msg});
        };

        if (toks[0].kind == Token::Kind::ident && toks[0].text == "worldvolume") {
            if (saw_wv) syntax(toks[0].col, "duplicate 'worldvolume' line");
            saw_wv = true;
            std::size_t pos = 1;
            if (toks[pos].kind != Token::Kind::equals) {
                syntax(toks[pos].col, "expected '=' after 'worldvolume'");
                continue;
            }
            ++pos;
            bool ok = true;
            while (ok) {
                if (toks[pos].kind != Token::Kind::ident ||
                    (toks[pos].text != "circle" && toks[pos].text != "interval")) {
                    syntax(toks[pos].col, "expected 'circle(NAME)' or 'interval(NAME)'");
                    ok = false;
                    break;
                }
                const FactorKind kind =
                    toks[pos].text == "circle" ? FactorKind::circle : FactorKind::interval;
                ++pos;
                if (toks[pos].kind != Token::Kind::lparen ||
                    toks[pos + 1].kind != Token::Kind::ident ||
                    toks[pos + 2].kind != Token::Kind::rparen) {
                    syntax(toks[pos].col, "expected '(NAME)'");
                    ok = false;
                    break;
                }
                spec.factors.push_back({kind, toks[pos + 1].text});
                pos += 3;
                if (toks[pos].kind == Token::Kind::star) {
                    ++pos;
                    continue;
                }
                if (toks[pos].kind == Token::Kind::end) break;
                syntax(toks[pos].col, "expected '*' or end of line");
                ok = false;
            }
            continue;
        }
        if (toks[0].kind == Token::Kind::ident && toks[0].text == "A") {
            // A[GEN] = EXPR
            if (toks.size() < 5 || toks[1].kind != Token::Kind::lbracket ||
                toks[2].kind != Token::Kind::ident || toks[3].kind != Token::Kind::rbracket ||
                toks[4].kind != Token::Kind::equals) {
                syntax(toks[0].col, "expected 'A[GENERATOR] = EXPR'");
                continue;
            }
            if (!image_names.insert(toks[2].text).second) {
                errors.push_back({lineno, toks[2].col, "duplicate-generator",
                                  "image of '" + toks[2].text + "' already given"});
                continue;
            }
            const auto eq = line.find('=');
            spec.images.push_back({toks[2].text, line.substr(eq + 1), {lineno, toks[4].col + 1}});
            continue;
        }
        syntax(toks[0].col, "unrecognized directive '" + toks[0].text + "'");
    }

    if (!saw_wv) errors.push_back({1, 1, "structure", "missing 'worldvolume = ...' line"});

    if (errors.empty()) {
        // Validate the worldvolume and expressions eagerly for full
        // line/column diagnostics.
        try {
            auto wv = std::make_shared<Worldvolume>(spec.factors);
            for (const auto& img : spec.images) {
                std::vector<ParseError> expr_errors;
                parse_field_expr(img.expr, wv, expr_errors, img.loc.line);
                errors.insert(errors.end(), expr_errors.begin(), expr_errors.end());
            }
        } catch (const Error& e) {
            errors.push_back({1, 1, "structure", e.what()});
        }
    }

    if (errors.empty()) result.spec = std::move(spec);
    return result;
}

FieldConfiguration build_field_configuration(const FieldSpec& spec,
                                             std::shared_ptr<const SymplecticModel> model) {
    auto wv = std::make_shared<Worldvolume>(spec.factors);
    const auto& sig = *model->ce()->signature();
    std::vector<FieldForm> images(sig.size(), FieldForm::zero(wv));
    for (const auto& img : spec.images) {
        auto id = sig.find(img.gen);
        if (!id) throw BuildError("field file assigns unknown generator '" + img.gen + "'");
        std::vector<ParseError> errors;
        auto f = parse_field_expr(img.expr, wv, errors, img.loc.line);
        if (!f || !errors.empty())
            throw BuildError("unparsed field expression for '" + img.gen + "'");
        images[*id] = *f;
    }
    return FieldConfiguration(wv, std::move(model), std::move(images));
}

} // namespace gcw
