#include "gcw/models.hpp"

#include "gcw/lexer.hpp"
#include "gcw/render.hpp"

#include <set>
#include <sstream>

namespace gcw {

namespace {

/// Recursive-descent parser for the element expression grammar:
///   expr   ::= ['+'|'-'] term (('+'|'-') term)*
///   term   ::= atom ('*' atom)*
///   atom   ::= RATIONAL | IDENT ('^' NAT)? | '(' expr ')'
///   RATIONAL ::= NAT ('/' NAT)?
class ExprParser {
  public:
    ExprParser(const std::vector<Token>& toks, const SigPtr& sig, std::vector<ParseError>& errors,
               std::size_t line)
        : toks_(toks), sig_(sig), errors_(errors), line_(line) {}

    std::optional<Element> parse() {
        Element e = parse_expr();
        if (!failed_ && peek().kind != Token::Kind::end) {
            error("syntax", "unexpected trailing input '" + peek().text + "'");
        }
        if (failed_) return std::nullopt;
        return e;
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

    Element parse_expr() {
        bool neg = false;
        if (accept(Token::Kind::minus))
            neg = true;
        else
            accept(Token::Kind::plus);
        Element acc = parse_term();
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

    Element parse_term() {
        Element acc = parse_atom();
        while (!failed_ && accept(Token::Kind::star)) acc = acc * parse_atom();
        return acc;
    }

    Element parse_atom() {
        const Element zero = Element::zero(sig_);
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
            return Element::constant(sig_, num);
        }
        case Token::Kind::ident: {
            advance();
            auto id = sig_->find(t.text);
            if (!id) {
                errors_.push_back({line_, t.col, "unknown-identifier",
                                   "unknown generator '" + t.text + "'"});
                failed_ = true;
                return zero;
            }
            Element g = Element::generator(sig_, *id);
            if (accept(Token::Kind::caret)) {
                if (peek().kind != Token::Kind::nat) {
                    error("syntax", "expected exponent after '^'");
                    return zero;
                }
                const std::string etext = advance().text;
                if (etext.size() > 4) {
                    error("bad-literal", "exponent out of range");
                    return zero;
                }
                const unsigned long e = std::stoul(etext);
                Element acc = Element::unit(sig_);
                for (unsigned long i = 0; i < e; ++i) acc = acc * g;
                return acc;
            }
            return g;
        }
        case Token::Kind::lparen: {
            advance();
            Element inner = parse_expr();
            if (!accept(Token::Kind::rparen)) error("syntax", "expected ')'");
            return inner;
        }
        default:
            error("syntax", "expected a rational, generator or '('");
            return zero;
        }
    }

    const std::vector<Token>& toks_;
    SigPtr sig_;
    std::vector<ParseError>& errors_;
    std::size_t line_;
    std::size_t pos_ = 0;
    bool failed_ = false;
};

std::optional<Rat> parse_rat_tokens(const std::vector<Token>& toks, std::size_t& pos) {
    bool neg = false;
    if (toks[pos].kind == Token::Kind::minus) {
        neg = true;
        ++pos;
    } else if (toks[pos].kind == Token::Kind::plus) {
        ++pos;
    }
    if (toks[pos].kind != Token::Kind::nat) return std::nullopt;
    Rat num(toks[pos].text);
    ++pos;
    if (toks[pos].kind == Token::Kind::slash) {
        ++pos;
        if (toks[pos].kind != Token::Kind::nat) return std::nullopt;
        const Rat den(toks[pos].text);
        if (den == 0) return std::nullopt;
        num /= den;
        ++pos;
    }
    return neg ? Rat(-num) : num;
}

} // namespace

std::optional<Element> parse_element_expr(const std::string& text, const SigPtr& sig,
                                          std::vector<ParseError>& errors, std::size_t line) {
    std::vector<LexError> lex_errors;
    auto toks = lex_line(text, lex_errors);
    for (const auto& e : lex_errors) errors.push_back({line, e.col, e.cls, e.message});
    if (!lex_errors.empty()) return std::nullopt;
    return ExprParser(toks, sig, errors, line).parse();
}

SpecParseResult parse_spec(const std::string& text) {
    SpecParseResult result;
    AlgebroidSpec spec;
    auto& errors = result.errors;

    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    bool saw_header = false;
    bool in_symplectic = false;
    std::set<std::string> gen_names;
    std::set<std::string> diff_names;

    while (std::getline(is, line)) {
        ++lineno;
        std::vector<LexError> lex_errors;
        auto toks = lex_line(line, lex_errors);
        for (const auto& e : lex_errors) errors.push_back({lineno, e.col, e.cls, e.message});
        if (!lex_errors.empty()) continue;
        if (toks.front().kind == Token::Kind::end) continue; // blank / comment

        auto is_kw = [&](const char* kw) {
            return toks[0].kind == Token::Kind::ident && toks[0].text == kw;
        };
        auto syntax = [&](std::size_t col, const std::string& msg) {
            errors.push_back({lineno, col, "syntax", msg});
        };

        if (is_kw("algebroid")) {
            if (saw_header) syntax(toks[0].col, "duplicate 'algebroid' header");
            if (toks.size() < 3 || toks[1].kind != Token::Kind::ident ||
                toks[2].kind != Token::Kind::end) {
                syntax(toks[0].col, "expected 'algebroid NAME'");
                continue;
            }
            spec.name = toks[1].text;
            saw_header = true;
            continue;
        }
        if (is_kw("generator")) {
            // generator IDENT grade NAT
            if (toks.size() < 5 || toks[1].kind != Token::Kind::ident ||
                toks[2].kind != Token::Kind::ident || toks[2].text != "grade") {
                syntax(toks[0].col, "expected 'generator NAME grade N'");
                continue;
            }
            if (toks[3].kind == Token::Kind::minus) {
                errors.push_back({lineno, toks[3].col, "bad-grade",
                                  "negative grade (only ℕ-graded generators are supported)"});
                continue;
            }
            if (toks[3].kind != Token::Kind::nat || toks[4].kind != Token::Kind::end) {
                syntax(toks[3].col, "expected a natural number grade");
                continue;
            }
            if (!gen_names.insert(toks[1].text).second) {
                errors.push_back({lineno, toks[1].col, "duplicate-generator",
                                  "generator '" + toks[1].text + "' already declared"});
                continue;
            }
            if (toks[3].text.size() > 6) {
                errors.push_back({lineno, toks[3].col, "bad-grade", "grade out of range"});
                continue;
            }
            spec.generators.push_back(
                {toks[1].text, std::stoi(toks[3].text), {lineno, toks[1].col}});
            continue;
        }
        if (is_kw("d")) {
            // d IDENT = EXPR
            if (toks.size() < 3 || toks[1].kind != Token::Kind::ident ||
                toks[2].kind != Token::Kind::equals) {
                syntax(toks[0].col, "expected 'd NAME = EXPR'");
                continue;
            }
            if (!gen_names.count(toks[1].text)) {
                errors.push_back({lineno, toks[1].col, "unknown-identifier",
                                  "differential for undeclared generator '" + toks[1].text + "'"});
                continue;
            }
            if (!diff_names.insert(toks[1].text).second) {
                errors.push_back({lineno, toks[1].col, "duplicate-differential",
                                  "differential of '" + toks[1].text + "' already given"});
                continue;
            }
            const auto eq = line.find('=');
            spec.differentials.push_back(
                {toks[1].text, line.substr(eq + 1), {lineno, toks[2].col + 1}});
            continue;
        }
        if (is_kw("symplectic")) {
            // symplectic grade NAT
            if (toks.size() < 4 || toks[1].kind != Token::Kind::ident || toks[1].text != "grade" ||
                toks[2].kind != Token::Kind::nat || toks[3].kind != Token::Kind::end) {
                syntax(toks[0].col, "expected 'symplectic grade N'");
                continue;
            }
            if (spec.symplectic_grade)
                syntax(toks[0].col, "duplicate 'symplectic' block");
            if (toks[2].text.size() > 6) {
                syntax(toks[2].col, "grade out of range");
                continue;
            }
            spec.symplectic_grade = std::stoi(toks[2].text);
            in_symplectic = true;
            continue;
        }
        if (is_kw("pair")) {
            if (!in_symplectic) {
                errors.push_back({lineno, toks[0].col, "structure",
                                  "'pair' outside a 'symplectic' block"});
                continue;
            }
            if (toks.size() < 5 || toks[1].kind != Token::Kind::ident ||
                toks[2].kind != Token::Kind::ident || toks[3].kind != Token::Kind::equals) {
                syntax(toks[0].col, "expected 'pair NAME NAME = RATIONAL'");
                continue;
            }
            for (int k = 1; k <= 2; ++k) {
                if (!gen_names.count(toks[k].text))
                    errors.push_back({lineno, toks[k].col, "unknown-identifier",
                                      "unknown generator '" + toks[k].text + "' in pairing"});
            }
            std::size_t pos = 4;
            auto value = parse_rat_tokens(toks, pos);
            if (!value || toks[pos].kind != Token::Kind::end) {
                syntax(toks[4].col, "expected a rational pairing value");
                continue;
            }
            spec.pairs.push_back({toks[1].text, toks[2].text, *value, {lineno, toks[1].col}});
            continue;
        }
        syntax(toks[0].col, "unrecognized directive '" + toks[0].text + "'");
    }

    if (!saw_header) errors.push_back({1, 1, "structure", "missing 'algebroid NAME' header"});

    // Resolve differential expressions now so that unknown identifiers are
    // reported at parse time.
    if (errors.empty()) {
        std::vector<std::pair<std::string, int>> gens;
        for (const auto& g : spec.generators) gens.emplace_back(g.name, g.grade);
        SigPtr sig = make_signature(gens);
        for (const auto& d : spec.differentials) {
            std::vector<ParseError> expr_errors;
            parse_element_expr(d.expr, sig, expr_errors, d.loc.line);
            errors.insert(errors.end(), expr_errors.begin(), expr_errors.end());
        }
    }

    if (errors.empty()) result.spec = std::move(spec);
    return result;
}

ModelBuildResult build_from_spec(const AlgebroidSpec& spec) {
    ModelBuildResult result;
    std::vector<std::pair<std::string, int>> gens;
    for (const auto& g : spec.generators) gens.emplace_back(g.name, g.grade);
    SigPtr sig = make_signature(gens);

    Derivation d(sig, 1, "d_CE");
    bool degree_ok = true;
    for (const auto& dl : spec.differentials) {
        std::vector<ParseError> errors;
        auto img = parse_element_expr(dl.expr, sig, errors, dl.loc.line);
        if (!img) throw BuildError("unparsed differential expression for '" + dl.gen + "'");
        try {
            d.set_image(sig->require(dl.gen), *img);
        } catch (const DegreeMismatchError& e) {
            degree_ok = false;
            result.checks.add("differential_degree", false, e.what());
        }
    }
    if (degree_ok) result.checks.add("differential_degree", true);

    try {
        result.ce = std::make_shared<CEAlgebra>(spec.name, sig, d);
        result.checks.add("ce_nilpotent", true);
    } catch (const BuildError& e) {
        result.checks.add("ce_nilpotent", false, e.what());
        return result;
    }

    if (!spec.symplectic_grade) return result;
    const int n = *spec.symplectic_grade;

    // Assemble the pairing matrix; unlisted mirror entries are completed
    // with the graded sign, conflicting entries are rejected.
    const std::size_t m = sig->size();
    RatMatrix pairing(m, std::vector<Rat>(m, 0));
    std::vector<std::vector<bool>> given(m, std::vector<bool>(m, false));
    bool pairs_ok = true;
    for (const auto& p : spec.pairs) {
        const GenId a = sig->require(p.a);
        const GenId b = sig->require(p.b);
        if (given[a][b] && pairing[a][b] != p.value) {
            result.checks.add("pairing_consistency", false,
                              "conflicting entries for (" + p.a + "," + p.b + ")");
            pairs_ok = false;
            continue;
        }
        pairing[a][b] = p.value;
        given[a][b] = true;
        const int sgn = ((1 + sig->gen(a).weight) * (1 + sig->gen(b).weight)) % 2 == 0 ? 1 : -1;
        const Rat mirror = sgn == 1 ? p.value : Rat(-p.value);
        if (given[b][a] && pairing[b][a] != mirror) {
            result.checks.add("pairing_consistency", false,
                              "entries for (" + p.a + "," + p.b + ") and (" + p.b + "," + p.a +
                                  ") violate the graded symmetry");
            pairs_ok = false;
            continue;
        }
        pairing[b][a] = mirror;
        given[b][a] = true;
    }
    if (pairs_ok) result.checks.add("pairing_consistency", true);

    CheckReport val = validate(*result.ce, n, pairing);
    result.checks.items.insert(result.checks.items.end(), val.items.begin(), val.items.end());
    if (result.checks.all_pass())
        result.model = std::make_shared<SymplecticModel>(result.ce, n, pairing);
    return result;
}

std::string serialize(const SymplecticModel& m, const std::string& name) {
    std::ostringstream os;
    const auto& sig = *m.ce()->signature();
    os << "algebroid " << name << "\n";
    for (GenId g = 0; g < sig.size(); ++g)
        os << "generator " << sig.gen(g).name << " grade " << sig.gen(g).weight << "\n";
    for (GenId g = 0; g < sig.size(); ++g) {
        const Element& img = m.ce()->differential().image(g);
        if (!img.is_zero()) os << "d " << sig.gen(g).name << " = " << render_grammar(img) << "\n";
    }
    os << "symplectic grade " << m.grade() << "\n";
    for (std::size_t a = 0; a < sig.size(); ++a)
        for (std::size_t b = a; b < sig.size(); ++b)
            if (m.pairing()[a][b] != 0)
                os << "pair " << sig.gen(static_cast<GenId>(a)).name << " "
                   << sig.gen(static_cast<GenId>(b)).name << " = " << to_string(m.pairing()[a][b])
                   << "\n";
    return os.str();
}

namespace {

std::shared_ptr<const SymplecticModel> build_or_throw(const AlgebroidSpec& spec) {
    auto result = build_from_spec(spec);
    if (!result.ok() || !result.model) {
        std::ostringstream os;
        os << "model '" << spec.name << "' failed:";
        for (const auto& item : result.checks.items)
            if (!item.pass) os << " [" << item.name << "] " << item.detail;
        throw BuildError(os.str());
    }
    return result.model;
}

} // namespace

std::shared_ptr<const SymplecticModel> lie_algebra_model(
    const std::vector<std::vector<std::vector<Rat>>>& C, const RatMatrix& P,
    const std::string& name) {
    const std::size_t m = C.size();
    if (P.size() != m) throw BuildError("lie_algebra_model: C and P disagree on the dimension");
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c)
                if (C[a][b][c] != -C[a][c][b])
                    throw BuildError(
                        "lie_algebra_model: structure constants not antisymmetric in the lower "
                        "indices");

    AlgebroidSpec spec;
    spec.name = name;
    std::vector<std::pair<std::string, int>> gens;
    for (std::size_t a = 0; a < m; ++a) {
        spec.generators.push_back({"t" + std::to_string(a + 1), 1, {}});
        gens.emplace_back(spec.generators.back().name, 1);
    }
    SigPtr sig = make_signature(gens);
    for (std::size_t a = 0; a < m; ++a) {
        Element img = Element::zero(sig);
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c) {
                if (C[a][b][c] == 0) continue;
                img += scale(-C[a][b][c] / 2, Element::generator(sig, static_cast<GenId>(b)) *
                                                  Element::generator(sig, static_cast<GenId>(c)));
            }
        if (!img.is_zero())
            spec.differentials.push_back({spec.generators[a].name, render_grammar(img), {}});
    }
    spec.symplectic_grade = 2;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a; b < m; ++b)
            if (P[a][b] != 0)
                spec.pairs.push_back(
                    {spec.generators[a].name, spec.generators[b].name, P[a][b], {}});
    return build_or_throw(spec);
}

std::shared_ptr<const SymplecticModel> so3_model() {
    std::vector C(3, std::vector(3, std::vector<Rat>(3, 0)));
    C[0][1][2] = 1;
    C[0][2][1] = -1;
    C[1][2][0] = 1;
    C[1][0][2] = -1;
    C[2][0][1] = 1;
    C[2][1][0] = -1;
    RatMatrix P(3, std::vector<Rat>(3, 0));
    for (int i = 0; i < 3; ++i) P[i][i] = 1;
    return lie_algebra_model(C, P, "so3");
}

std::shared_ptr<const SymplecticModel> poisson_model(
    std::size_t m, const std::vector<std::vector<std::string>>& tensor, const std::string& name) {
    if (tensor.size() != m) throw BuildError("poisson_model: tensor must be m×m");
    AlgebroidSpec spec;
    spec.name = name;
    std::vector<std::pair<std::string, int>> gens;
    for (std::size_t i = 0; i < m; ++i) {
        spec.generators.push_back({"x" + std::to_string(i + 1), 0, {}});
        gens.emplace_back(spec.generators.back().name, 0);
    }
    for (std::size_t i = 0; i < m; ++i) {
        spec.generators.push_back({"del" + std::to_string(i + 1), 1, {}});
        gens.emplace_back(spec.generators.back().name, 1);
    }
    SigPtr sig = make_signature(gens);

    std::vector<std::vector<Element>> pi(m, std::vector<Element>(m, Element::zero(sig)));
    for (std::size_t i = 0; i < m; ++i) {
        if (tensor[i].size() != m) throw BuildError("poisson_model: tensor must be m×m");
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<ParseError> errors;
            auto e = parse_element_expr(tensor[i][j], sig, errors);
            if (!e || !errors.empty())
                throw BuildError("poisson_model: cannot parse tensor entry (" +
                                 std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            if (!e->is_zero() && !e->homogeneous_of_weight(0))
                throw BuildError("poisson_model: tensor entries must be functions of the x's");
            pi[i][j] = *e;
        }
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (!(pi[i][j] == -pi[j][i]))
                throw BuildError("poisson_model: tensor is not antisymmetric");

    // d x^i = -pi^{ij} del_j ; d del_i = -1/2 (d pi^{jk} / d x^i) del_j del_k.
    // The relative sign of the two rules is forced: with opposite signs,
    // d^2 x^i = -(pi^{im} d_m pi^{kl}) del_k del_l survives even when the
    // tensor satisfies the Jacobi identity.
    for (std::size_t i = 0; i < m; ++i) {
        Element img = Element::zero(sig);
        for (std::size_t j = 0; j < m; ++j)
            img += -(pi[i][j] * Element::generator(sig, static_cast<GenId>(m + j)));
        if (!img.is_zero())
            spec.differentials.push_back({spec.generators[i].name, render_grammar(img), {}});
    }
    for (std::size_t i = 0; i < m; ++i) {
        Element img = Element::zero(sig);
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                Element dp = partial_left(sig, static_cast<GenId>(i)).apply(pi[j][k]);
                if (dp.is_zero()) continue;
                img += scale(Rat(-1, 2), dp * Element::generator(sig, static_cast<GenId>(m + j)) *
                                             Element::generator(sig, static_cast<GenId>(m + k)));
            }
        if (!img.is_zero())
            spec.differentials.push_back({spec.generators[m + i].name, render_grammar(img), {}});
    }
    spec.symplectic_grade = 1;
    for (std::size_t i = 0; i < m; ++i)
        spec.pairs.push_back({spec.generators[i].name, spec.generators[m + i].name, 1, {}});
    return build_or_throw(spec);
}

std::shared_ptr<const SymplecticModel> courant_model(
    std::size_t m, std::size_t r, const RatMatrix& g,
    const std::vector<std::vector<std::string>>& P,
    const std::vector<std::vector<std::vector<std::string>>>& T, const std::string& name) {
    AlgebroidSpec spec;
    spec.name = name;
    std::vector<std::pair<std::string, int>> gens;
    for (std::size_t i = 0; i < m; ++i) gens.emplace_back("q" + std::to_string(i + 1), 0);
    for (std::size_t a = 0; a < r; ++a) gens.emplace_back("xi" + std::to_string(a + 1), 1);
    for (std::size_t i = 0; i < m; ++i) gens.emplace_back("p" + std::to_string(i + 1), 2);
    for (const auto& [n_, w_] : gens) spec.generators.push_back({n_, w_, {}});
    SigPtr sig = make_signature(gens);
    const auto qid = [&](std::size_t i) { return static_cast<GenId>(i); };
    const auto xid = [&](std::size_t a) { return static_cast<GenId>(m + a); };
    const auto pid = [&](std::size_t i) { return static_cast<GenId>(m + r + i); };

    if (g.size() != r) throw BuildError("courant_model: g must be r×r");
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            if (g[a][b] != g[b][a]) throw BuildError("courant_model: g is not symmetric");
    auto ginv = invert(g);
    if (!ginv) throw BuildError("courant_model: pairing g is singular");

    auto parse_entry = [&](const std::string& text, const char* what) {
        std::vector<ParseError> errors;
        auto e = parse_element_expr(text, sig, errors);
        if (!e || !errors.empty())
            throw BuildError(std::string("courant_model: cannot parse ") + what + " entry '" +
                             text + "'");
        if (!e->is_zero() && !e->homogeneous_of_weight(0))
            throw BuildError(std::string("courant_model: ") + what +
                             " entries must be functions of the q's");
        return *e;
    };

    std::vector<std::vector<Element>> anchor(m, std::vector<Element>(r, Element::zero(sig)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t a = 0; a < r; ++a) anchor[i][a] = parse_entry(P[i][a], "anchor");
    std::vector torsion(r, std::vector(r, std::vector<Element>(r, Element::zero(sig))));
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            for (std::size_t c = 0; c < r; ++c) torsion[a][b][c] = parse_entry(T[a][b][c], "torsion");
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            for (std::size_t c = 0; c < r; ++c) {
                if (!(torsion[a][b][c] == -torsion[b][a][c]) ||
                    !(torsion[a][b][c] == -torsion[a][c][b]))
                    throw BuildError("courant_model: torsion is not totally antisymmetric");
            }

    // d q^i = P^i_a xi^a
    for (std::size_t i = 0; i < m; ++i) {
        Element img = Element::zero(sig);
        for (std::size_t a = 0; a < r; ++a) img += anchor[i][a] * Element::generator(sig, xid(a));
        if (!img.is_zero())
            spec.differentials.push_back({sig->gen(qid(i)).name, render_grammar(img), {}});
    }
    // d xi^a = g^{ab} (P^i_b p_i - 1/2 T_bcd xi^c xi^d)
    for (std::size_t a = 0; a < r; ++a) {
        Element img = Element::zero(sig);
        for (std::size_t b = 0; b < r; ++b) {
            if ((*ginv)[a][b] == 0) continue;
            Element inner = Element::zero(sig);
            for (std::size_t i = 0; i < m; ++i)
                inner += anchor[i][b] * Element::generator(sig, pid(i));
            for (std::size_t c = 0; c < r; ++c)
                for (std::size_t d2 = 0; d2 < r; ++d2)
                    inner += scale(Rat(-1, 2), torsion[b][c][d2] * Element::generator(sig, xid(c)) *
                                                   Element::generator(sig, xid(d2)));
            img += scale((*ginv)[a][b], inner);
        }
        if (!img.is_zero())
            spec.differentials.push_back({sig->gen(xid(a)).name, render_grammar(img), {}});
    }
    // d p_i = -(d P^j_a / d q^i) xi^a p_j + 1/6 (d T_abc / d q^i) xi^a xi^b xi^c
    for (std::size_t i = 0; i < m; ++i) {
        Element img = Element::zero(sig);
        const Derivation dq = partial_left(sig, qid(i));
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t a = 0; a < r; ++a) {
                Element dp = dq.apply(anchor[j][a]);
                if (dp.is_zero()) continue;
                img += -(dp * Element::generator(sig, xid(a)) * Element::generator(sig, pid(j)));
            }
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b)
                for (std::size_t c = 0; c < r; ++c) {
                    Element dt = dq.apply(torsion[a][b][c]);
                    if (dt.is_zero()) continue;
                    img += scale(Rat(1, 6), dt * Element::generator(sig, xid(a)) *
                                                Element::generator(sig, xid(b)) *
                                                Element::generator(sig, xid(c)));
                }
        if (!img.is_zero())
            spec.differentials.push_back({sig->gen(pid(i)).name, render_grammar(img), {}});
    }

    spec.symplectic_grade = 2;
    // omega = dp_i dq^i + 1/2 g_ab dxi^a dxi^b
    for (std::size_t i = 0; i < m; ++i)
        spec.pairs.push_back({sig->gen(pid(i)).name, sig->gen(qid(i)).name, 1, {}});
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a; b < r; ++b)
            if (g[a][b] != 0)
                spec.pairs.push_back({sig->gen(xid(a)).name, sig->gen(xid(b)).name, g[a][b], {}});
    return build_or_throw(spec);
}

std::shared_ptr<const SymplecticModel> line_model_of_weight(int weight) {
    if (weight < 1) throw BuildError("line model: weight must be positive");
    if (weight % 2 == 0)
        throw BuildError("line model: weight " + std::to_string(weight) +
                         " is even, where the only binary invariant polynomial is 0");
    AlgebroidSpec spec;
    spec.name = "line" + std::to_string((weight - 1) / 2);
    spec.generators.push_back({"c", weight, {}});
    spec.symplectic_grade = 2 * weight;
    spec.pairs.push_back({"c", "c", 2, {}});
    return build_or_throw(spec);
}

std::shared_ptr<const SymplecticModel> line_model(int k) {
    if (k < 0) throw BuildError("line_model: k must be a natural number");
    return line_model_of_weight(2 * k + 1);
}

} // namespace gcw
