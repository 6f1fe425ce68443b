#include "gcw/element.hpp"

#include <algorithm>

namespace gcw {

namespace {
thread_local std::size_t g_term_budget = 0;

void check_budget(std::size_t n) {
    if (g_term_budget != 0 && n > g_term_budget)
        throw TermBudgetError("expression exceeded term budget of " + std::to_string(g_term_budget) +
                              " terms");
}
} // namespace

std::size_t term_budget() noexcept { return g_term_budget; }
void set_term_budget(std::size_t n) noexcept { g_term_budget = n; }

Monomial::Monomial(const AlgebraSignature& sig, std::vector<Factor> factors)
    : factors_(std::move(factors)) {
    GenId prev = 0;
    bool first = true;
    for (const auto& f : factors_) {
        const auto& g = sig.gen(f.gen);
        if (!first && f.gen <= prev) throw Error("monomial factors out of order");
        if (f.exp == 0) throw Error("monomial factor with zero exponent");
        if (g.odd() && f.exp > 1) throw Error("odd generator '" + g.name + "' with exponent > 1");
        prev = f.gen;
        first = false;
        degree_ += static_cast<int>(f.exp) * g.total_degree();
        weight_ += static_cast<int>(f.exp) * g.weight;
    }
}

std::pair<int, Monomial> normalize(const AlgebraSignature& sig, std::span<const GenId> word) {
    int sign = 1;
    std::vector<GenId> sorted;
    sorted.reserve(word.size());
    for (GenId g : word) {
        const int d = sig.gen(g).total_degree();
        std::size_t pos = sorted.size();
        while (pos > 0 && sorted[pos - 1] > g) {
            if (d % 2 != 0 && sig.gen(sorted[pos - 1]).total_degree() % 2 != 0) sign = -sign;
            --pos;
        }
        sorted.insert(sorted.begin() + static_cast<std::ptrdiff_t>(pos), g);
    }
    std::vector<Monomial::Factor> factors;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        const auto exp = static_cast<std::uint32_t>(j - i);
        if (exp > 1 && sig.gen(sorted[i]).odd()) return {0, Monomial()};
        factors.push_back({sorted[i], exp});
        i = j;
    }
    return {sign, Monomial(sig, std::move(factors))};
}

std::pair<int, Monomial> multiply(const AlgebraSignature& sig, const Monomial& a, const Monomial& b) {
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    // Parity of the total degree of a's suffix starting at index i: a factor
    // of b hopping past that suffix picks up the Koszul sign.
    std::vector<int> suffix_par(fa.size() + 1, 0);
    for (std::size_t i = fa.size(); i-- > 0;) {
        const int d = static_cast<int>(fa[i].exp) * sig.gen(fa[i].gen).total_degree();
        suffix_par[i] = (suffix_par[i + 1] + d) % 2;
    }

    int sign = 1;
    std::vector<Monomial::Factor> out;
    out.reserve(fa.size() + fb.size());
    std::size_t i = 0, j = 0;
    while (i < fa.size() && j < fb.size()) {
        if (fa[i].gen < fb[j].gen) {
            out.push_back(fa[i++]);
        } else if (fa[i].gen > fb[j].gen) {
            const int d = static_cast<int>(fb[j].exp) * sig.gen(fb[j].gen).total_degree();
            if (d % 2 != 0 && suffix_par[i] != 0) sign = -sign;
            out.push_back(fb[j++]);
        } else {
            if (sig.gen(fa[i].gen).odd()) return {0, Monomial()};
            out.push_back({fa[i].gen, fa[i].exp + fb[j].exp});
            ++i;
            ++j;
        }
    }
    while (i < fa.size()) out.push_back(fa[i++]);
    while (j < fb.size()) out.push_back(fb[j++]);
    return {sign, Monomial(sig, std::move(out))};
}

Element Element::zero(SigPtr sig) {
    Element e;
    e.sig_ = std::move(sig);
    if (!e.sig_) throw Error("Element: null signature");
    return e;
}

Element Element::constant(SigPtr sig, Rat c) {
    Element e = zero(std::move(sig));
    e.add_term(Monomial(), c);
    return e;
}

Element Element::generator(SigPtr sig, GenId g) {
    Element e = zero(std::move(sig));
    e.add_term(Monomial(*e.sig_, {{g, 1}}), 1);
    return e;
}

Element Element::monomial(SigPtr sig, Monomial m, Rat c) {
    Element e = zero(std::move(sig));
    e.add_term(m, c);
    return e;
}

void Element::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    check_budget(terms_.size());
}

std::optional<int> Element::degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
        if (!d)
            d = m.degree();
        else if (*d != m.degree())
            return std::nullopt;
    }
    return d;
}

std::optional<int> Element::weight() const {
    std::optional<int> w;
    for (const auto& [m, c] : terms_) {
        if (!w)
            w = m.weight();
        else if (*w != m.weight())
            return std::nullopt;
    }
    return w;
}

bool Element::homogeneous_of_degree(int d) const {
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

bool Element::homogeneous_of_weight(int w) const {
    for (const auto& [m, c] : terms_)
        if (m.weight() != w) return false;
    return true;
}

std::map<int, Element> Element::by_degree() const {
    std::map<int, Element> out;
    for (const auto& [m, c] : terms_) {
        auto [it, inserted] = out.try_emplace(m.degree(), zero(sig_));
        it->second.add_term(m, c);
    }
    return out;
}

Element Element::operator-() const {
    Element out = zero(sig_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Element& Element::operator+=(const Element& o) {
    if (!same_signature(sig_, o.sig_)) throw SignatureMismatchError("add: signature mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    if (!same_signature(sig_, o.sig_)) throw SignatureMismatchError("subtract: signature mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Element operator*(const Element& a, const Element& b) {
    if (!same_signature(a.sig_, b.sig_))
        throw SignatureMismatchError("multiply: signature mismatch");
    Element out = Element::zero(a.sig_);
    const auto& sig = *a.sig_;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            auto [sign, m] = multiply(sig, ma, mb);
            if (sign == 0) continue;
            out.add_term(m, sign > 0 ? ca * cb : -(ca * cb));
        }
    }
    return out;
}

bool Element::operator==(const Element& o) const {
    return same_signature(sig_, o.sig_) && terms_ == o.terms_;
}

Element scale(const Rat& q, Element a) {
    if (q == 0) return Element::zero(a.signature());
    Element out = Element::zero(a.signature());
    for (const auto& [m, c] : a.terms()) out.add_term(m, q * c);
    return out;
}

Element substitute(const Element& w, const std::vector<std::optional<Element>>& images,
                   SigPtr target, DegreeCheck check) {
    if (!target) throw Error("substitute: null target signature");
    const auto& sig = *w.signature();

    auto image_of = [&](GenId g) -> const Element& {
        if (g >= images.size() || !images[g])
            throw Error("substitute: missing image for generator '" + sig.gen(g).name + "'");
        const Element& img = *images[g];
        if (!same_signature(img.signature(), target))
            throw SignatureMismatchError("substitute: image of '" + sig.gen(g).name +
                                         "' lives in a different signature");
        return img;
    };

    if (check == DegreeCheck::strict) {
        std::vector<bool> checked(images.size(), false);
        for (const auto& [m, c] : w.terms()) {
            for (const auto& f : m.factors()) {
                if (f.gen < checked.size() && checked[f.gen]) continue;
                const Element& img = image_of(f.gen);
                const int want = sig.gen(f.gen).total_degree();
                if (!img.is_zero() && !img.homogeneous_of_degree(want))
                    throw DegreeMismatchError("substitute: image of '" + sig.gen(f.gen).name +
                                              "' is not homogeneous of degree " +
                                              std::to_string(want));
                if (f.gen < checked.size()) checked[f.gen] = true;
            }
        }
    }

    Element out = Element::zero(target);
    for (const auto& [m, c] : w.terms()) {
        Element acc = Element::constant(target, c);
        for (const auto& f : m.factors()) {
            const Element& img = image_of(f.gen);
            for (std::uint32_t e = 0; e < f.exp; ++e) {
                acc = acc * img;
                if (acc.is_zero()) break;
            }
            if (acc.is_zero()) break;
        }
        out += acc;
    }
    return out;
}

} // namespace gcw
