#include "gcw/render.hpp"

#include <cctype>
#include <functional>
#include <sstream>

namespace gcw {

namespace {

std::string coeff_prefix(const Rat& c, bool first) {
    const bool neg = c < 0;
    const Rat a = neg ? Rat(-c) : c;
    std::string out;
    if (first)
        out = neg ? "-" : "";
    else
        out = neg ? " - " : " + ";
    if (a != 1) out += to_string(a) + "*";
    return out;
}

std::string render_with(const Element& e, const std::function<std::string(const std::string&)>& gen_name,
                        const char* mul, bool latex_powers) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        if (m.is_unit()) {
            // bare rational term
            const bool neg = c < 0;
            const Rat a = neg ? Rat(-c) : c;
            os << (first ? (neg ? "-" : "") : (neg ? " - " : " + ")) << to_string(a);
            first = false;
            continue;
        }
        os << coeff_prefix(c, first);
        first = false;
        bool first_factor = true;
        for (const auto& f : m.factors()) {
            if (!first_factor) os << mul;
            first_factor = false;
            os << gen_name(e.signature()->gen(f.gen).name);
            if (f.exp > 1) {
                if (latex_powers)
                    os << "^{" << f.exp << "}";
                else
                    os << "^" << f.exp;
            }
        }
    }
    return os.str();
}

} // namespace

std::string render_plain(const Element& e) {
    return render_with(e, [](const std::string& n) { return n; }, "*", false);
}

std::string render_grammar(const Element& e) {
    const auto& sig = *e.signature();
    for (const auto& [m, c] : e.terms())
        for (const auto& f : m.factors())
            if (sig.gen(f.gen).shifted)
                throw Error("render_grammar: shifted generator outside the spec grammar");
    return render_plain(e);
}

std::string latex_generator(const std::string& name) {
    static const std::string bold_d = "𝐝";
    std::string base = name;
    std::string prefix;
    if (base.rfind(bold_d, 0) == 0) {
        prefix = "\\mathbf{d}";
        base = base.substr(bold_d.size());
    }
    std::size_t split = base.size();
    while (split > 0 && std::isdigit(static_cast<unsigned char>(base[split - 1]))) --split;
    std::string stem = base.substr(0, split);
    std::string digits = base.substr(split);

    bool subscript = false;
    if (stem == "del") {
        stem = "\\partial";
        subscript = true;
    } else if (stem == "xi") {
        stem = "\\xi";
    } else if (stem == "gamma") {
        stem = "\\gamma";
    } else if (stem == "eta") {
        stem = "\\eta";
        subscript = true;
    } else if (stem == "p") {
        subscript = true;
    }
    std::string out = prefix + stem;
    if (!digits.empty()) out += (subscript ? "_{" : "^{") + digits + "}";
    return out;
}

std::string render_latex(const Element& e) {
    return render_with(e, latex_generator, " \\wedge ", true);
}

std::string StructuredReport::to_text() const {
    std::ostringstream os;
    for (const auto& [k, v] : lines) os << k << " = " << v << "\n";
    return os.str();
}

StructuredReport parse_structured(const std::string& text) {
    StructuredReport rep;
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto sep = line.find(" = ");
        if (sep == std::string::npos)
            throw Error("structured report: malformed line " + std::to_string(lineno));
        rep.lines.emplace_back(line.substr(0, sep), line.substr(sep + 3));
    }
    return rep;
}

} // namespace gcw
