#include "gcw/derivation.hpp"

namespace gcw {

Derivation::Derivation(SigPtr sig, int degree, std::string label)
    : sig_(std::move(sig)), degree_(degree), label_(std::move(label)) {
    if (!sig_) throw Error("Derivation: null signature");
    images_.assign(sig_->size(), Element::zero(sig_));
}

void Derivation::set_image(GenId g, Element img) {
    if (g >= images_.size()) throw UnknownGeneratorError("set_image: generator id out of range");
    if (!same_signature(img.signature(), sig_))
        throw SignatureMismatchError("set_image: image in wrong signature");
    const int want = sig_->gen(g).total_degree() + degree_;
    if (!img.is_zero() && !img.homogeneous_of_degree(want))
        throw DegreeMismatchError("image of '" + sig_->gen(g).name + "' under " + label_ +
                                  " must be homogeneous of degree " + std::to_string(want));
    images_[g] = std::move(img);
}

const Element& Derivation::image(GenId g) const {
    if (g >= images_.size()) throw UnknownGeneratorError("image: generator id out of range");
    return images_[g];
}

bool Derivation::has_nonzero_image(GenId g) const { return !image(g).is_zero(); }

Element Derivation::apply(const Element& w) const {
    if (!same_signature(w.signature(), sig_))
        throw SignatureMismatchError("derivation " + label_ + ": signature mismatch");
    Element out = Element::zero(sig_);
    const bool odd_deriv = degree_ % 2 != 0;
    for (const auto& [mono, coeff] : w.terms()) {
        const auto& factors = mono.factors();
        int prefix_deg = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const auto& f = factors[i];
            const Element& img = images_[f.gen];
            if (!img.is_zero()) {
                // coeff * e_i * (factors before i) * D(g_i) * g_i^{e_i-1} * (factors after i),
                // with the Leibniz sign for moving D past the prefix.
                Rat c = coeff * f.exp;
                if (odd_deriv && prefix_deg % 2 != 0) c = -c;
                std::vector<Monomial::Factor> pre(factors.begin(),
                                                  factors.begin() + static_cast<std::ptrdiff_t>(i));
                std::vector<Monomial::Factor> post;
                if (f.exp > 1) post.push_back({f.gen, f.exp - 1});
                post.insert(post.end(), factors.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                            factors.end());
                Element term = Element::monomial(sig_, Monomial(*sig_, std::move(pre)), c);
                term = term * img;
                term = term * Element::monomial(sig_, Monomial(*sig_, std::move(post)), 1);
                out += term;
            }
            prefix_deg += static_cast<int>(f.exp) * sig_->gen(f.gen).total_degree();
        }
    }
    return out;
}

bool Derivation::is_vector_field() const {
    for (GenId g = 0; g < sig_->size(); ++g) {
        const auto& img = images_[g];
        if (sig_->gen(g).shifted) {
            if (!img.is_zero()) return false;
            continue;
        }
        for (const auto& [m, c] : img.terms())
            for (const auto& f : m.factors())
                if (sig_->gen(f.gen).shifted) return false;
    }
    return true;
}

bool Derivation::operator==(const Derivation& o) const {
    if (!same_signature(sig_, o.sig_) || degree_ != o.degree_) return false;
    for (GenId g = 0; g < sig_->size(); ++g)
        if (!(images_[g] == o.images_[g])) return false;
    return true;
}

Derivation commutator(const Derivation& d1, const Derivation& d2) {
    if (!same_signature(d1.signature(), d2.signature()))
        throw SignatureMismatchError("commutator: signature mismatch");
    const auto& sig = d1.signature();
    const bool flip = (d1.degree() * d2.degree()) % 2 != 0;
    Derivation out(sig, d1.degree() + d2.degree(),
                   "[" + d1.label() + "," + d2.label() + "]");
    for (GenId g = 0; g < sig->size(); ++g) {
        Element img = d1.apply(d2.image(g));
        Element rev = d2.apply(d1.image(g));
        img += flip ? rev : -rev;
        out.set_image(g, std::move(img));
    }
    return out;
}

Derivation scale(const Rat& q, const Derivation& d) {
    Derivation out(d.signature(), d.degree(), to_string(q) + "*" + d.label());
    for (GenId g = 0; g < d.signature()->size(); ++g) out.set_image(g, scale(q, d.image(g)));
    return out;
}

Derivation shift_differential(SigPtr sig) {
    if (!sig->has_partners())
        throw Error("shift_differential requires a Weil-type signature");
    Derivation d(sig, 1, "𝐝");
    for (GenId g = 0; g < sig->size(); ++g) {
        const auto& decl = sig->gen(g);
        if (!decl.shifted) d.set_image(g, Element::generator(sig, *decl.partner));
    }
    return d;
}

Derivation contraction(const Derivation& v) {
    if (!v.is_vector_field())
        throw Error("contraction: '" + v.label() + "' is not a vector field");
    const auto& sig = v.signature();
    if (!sig->has_partners()) throw Error("contraction requires a Weil-type signature");
    Derivation out(sig, v.degree() - 1, "ι_" + v.label());
    for (GenId g = 0; g < sig->size(); ++g) {
        const auto& decl = sig->gen(g);
        if (decl.shifted) out.set_image(g, v.image(*decl.partner));
    }
    return out;
}

Derivation euler_field(SigPtr sig) {
    Derivation e(sig, 0, "ε");
    for (GenId g = 0; g < sig->size(); ++g) {
        const auto& decl = sig->gen(g);
        if (!decl.shifted && decl.weight != 0)
            e.set_image(g, scale(decl.weight, Element::generator(sig, g)));
    }
    return e;
}

Derivation euler_contraction(SigPtr sig) {
    auto out = contraction(euler_field(sig));
    return out;
}

Derivation lie_derivative(const Derivation& v) {
    return commutator(contraction(v), shift_differential(v.signature()));
}

Derivation partial_left(SigPtr sig, GenId g) {
    const auto& decl = sig->gen(g);
    if (decl.shifted)
        throw Error("partial_left: '" + decl.name + "' is a shifted generator");
    Derivation d(sig, -decl.total_degree(), "∂/∂" + decl.name);
    d.set_image(g, Element::unit(sig));
    return d;
}

Element partial_right(const Element& f, GenId g) {
    const auto& sig = f.signature();
    const int dg = sig->gen(g).total_degree();
    const Derivation left = partial_left(sig, g);
    Element out = Element::zero(sig);
    for (const auto& [deg, part] : f.by_degree()) {
        Element d = left.apply(part);
        const bool neg = (dg * (deg + dg)) % 2 != 0;
        out += neg ? -d : d;
    }
    return out;
}

Element poincare_primitive(const Element& w, int n) {
    if (n < 1) throw DomainError("poincare_primitive: weight must be positive");
    if (!w.homogeneous_of_weight(n))
        throw DomainError("poincare_primitive: form is not homogeneous of weight " +
                          std::to_string(n));
    const auto& sig = w.signature();
    const Derivation d = shift_differential(sig);
    if (!d.apply(w).is_zero()) throw DomainError("poincare_primitive: form is not closed");
    Element lambda = scale(Rat(1, n), euler_contraction(sig).apply(w));
    if (!(d.apply(lambda) == w))
        throw Error("poincare_primitive: internal defect, d(lambda) != w");
    return lambda;
}

} // namespace gcw
