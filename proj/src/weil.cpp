#include "gcw/weil.hpp"

#include "gcw/render.hpp"

namespace gcw {

std::optional<std::pair<GenId, Element>> nilpotency_witness(const Derivation& d) {
    const auto& sig = d.signature();
    for (GenId g = 0; g < sig->size(); ++g) {
        Element dd = d.apply(d.image(g));
        if (!dd.is_zero()) return std::make_pair(g, std::move(dd));
    }
    return std::nullopt;
}

CEAlgebra::CEAlgebra(std::string name, SigPtr sig, Derivation d_ce)
    : name_(std::move(name)), sig_(std::move(sig)), d_ce_(std::move(d_ce)) {
    if (!same_signature(sig_, d_ce_.signature()))
        throw SignatureMismatchError("CEAlgebra: differential lives in a different signature");
    if (d_ce_.degree() != 1) throw BuildError("CEAlgebra: differential must have degree +1");
    for (GenId g = 0; g < sig_->size(); ++g) {
        if (sig_->gen(g).shifted)
            throw BuildError("CEAlgebra: signature must contain unshifted generators only");
        for (const auto& [m, c] : d_ce_.image(g).terms())
            for (const auto& f : m.factors())
                if (sig_->gen(f.gen).shifted)
                    throw BuildError("CEAlgebra: image of '" + sig_->gen(g).name +
                                     "' involves shifted generators");
    }
    if (auto w = nilpotency_witness(d_ce_))
        throw BuildError("CEAlgebra '" + name_ + "': d^2 != 0 on generator '" +
                         sig_->gen(w->first).name + "': d(d(" + sig_->gen(w->first).name +
                         ")) = " + render_plain(w->second));
}

namespace {

Derivation lift_vector_field(const CEAlgebra& ce, const SigPtr& weil_sig) {
    const auto n = static_cast<GenId>(ce.signature()->size());
    Derivation v(weil_sig, 1, "v");
    std::vector<std::optional<Element>> incl(n);
    for (GenId g = 0; g < n; ++g) incl[g] = Element::generator(weil_sig, g);
    for (GenId g = 0; g < n; ++g)
        v.set_image(g, substitute(ce.differential().image(g), incl, weil_sig));
    return v;
}

} // namespace

WeilAlgebra::WeilAlgebra(CEPtr ce)
    : ce_(std::move(ce)),
      sig_(weil_extension(ce_->signature())),
      d_w_(sig_, 1, "d_W"),
      shift_d_(shift_differential(sig_)),
      v_(lift_vector_field(*ce_, sig_)),
      iota_v_(contraction(v_)),
      iota_eps_(euler_contraction(sig_)) {
    const auto n = static_cast<GenId>(base_size());
    for (GenId g = 0; g < n; ++g) {
        Element vg = v_.image(g);
        d_w_.set_image(g, vg + Element::generator(sig_, shifted_id(g)));
        d_w_.set_image(shifted_id(g), -shift_d_.apply(vg));
    }
    // The generator rules must reproduce d + L_v, and d_W must square to
    // zero; both fail exactly when d_CE was not a differential, which the
    // CEAlgebra constructor already excludes — checked again as a defect
    // guard.
    const Derivation cartan = commutator(iota_v_, shift_d_);
    for (GenId g = 0; g < sig_->size(); ++g) {
        Element alt = shift_d_.image(g) + cartan.image(g);
        if (!(alt == d_w_.image(g)))
            throw BuildError("WeilAlgebra: generator rules disagree with 𝐝 + L_v on '" +
                             sig_->gen(g).name + "'");
    }
    if (auto w = nilpotency_witness(d_w_))
        throw BuildError("WeilAlgebra '" + ce_->name() + "': d_W^2 != 0 on generator '" +
                         sig_->gen(w->first).name + "'");
}

Element WeilAlgebra::include(const Element& ce_elem) const {
    if (!same_signature(ce_elem.signature(), ce_->signature()))
        throw SignatureMismatchError("include: element is not in the CE algebra");
    const auto n = static_cast<GenId>(base_size());
    std::vector<std::optional<Element>> images(n);
    for (GenId g = 0; g < n; ++g) images[g] = Element::generator(sig_, g);
    return substitute(ce_elem, images, sig_);
}

Element WeilAlgebra::project_ce(const Element& w) const {
    if (!same_signature(w.signature(), sig_))
        throw SignatureMismatchError("project_ce: element is not in the Weil algebra");
    const auto n = static_cast<GenId>(base_size());
    const auto& ce_sig = ce_->signature();
    std::vector<std::optional<Element>> images(sig_->size());
    for (GenId g = 0; g < n; ++g) {
        images[g] = Element::generator(ce_sig, g);
        images[shifted_id(g)] = Element::zero(ce_sig);
    }
    return substitute(w, images, ce_sig);
}

WeilPtr build_weil(CEPtr ce) { return std::make_shared<WeilAlgebra>(std::move(ce)); }

HorizontalityReport is_horizontal(const WeilAlgebra& W, const Element& w) {
    HorizontalityReport rep;
    const auto& sig = *W.signature();
    for (const auto& [m, c] : w.terms()) {
        bool ok = true;
        for (const auto& f : m.factors())
            if (!sig.gen(f.gen).shifted) ok = false;
        if (!ok) {
            rep.horizontal = false;
            rep.offending.push_back(m);
        }
    }
    return rep;
}

InvariantPolynomialReport is_invariant_polynomial(const WeilAlgebra& W, const Element& w) {
    InvariantPolynomialReport rep;
    rep.closed = W.differential().apply(w).is_zero();
    rep.horizontal = is_horizontal(W, w).horizontal;
    return rep;
}

} // namespace gcw
