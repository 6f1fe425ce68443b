#include "gcw/aksz.hpp"

namespace gcw {

FieldConfiguration::FieldConfiguration(WvPtr wv, std::shared_ptr<const SymplecticModel> model,
                                       std::vector<FieldForm> images)
    : wv_(std::move(wv)), model_(std::move(model)), images_(std::move(images)) {
    if (!wv_ || !model_) throw Error("FieldConfiguration: null worldvolume or model");
    const auto& sig = *model_->ce()->signature();
    if (images_.size() != sig.size())
        throw Error("FieldConfiguration: expected one image per generator");
    for (GenId g = 0; g < sig.size(); ++g) {
        if (!same_worldvolume(images_[g].worldvolume(), wv_))
            throw SignatureMismatchError("image of '" + sig.gen(g).name +
                                         "' lives on a different worldvolume");
        const int want = sig.gen(g).total_degree();
        if (!images_[g].is_zero() && !images_[g].homogeneous_of_degree(want))
            throw DegreeMismatchError("image of '" + sig.gen(g).name + "' must be a " +
                                      std::to_string(want) + "-form");
    }
    // F^a = d(A^a) - A(d_CE x^a); d_CE x^a involves coordinates only, so the
    // evaluation below never recurses into curvatures.
    curvatures_.reserve(sig.size());
    for (GenId g = 0; g < sig.size(); ++g)
        curvatures_.push_back(d_dR(images_[g]) - evaluate(model_->weil()->include(
                                                      model_->ce()->differential().image(g))));
}

bool FieldConfiguration::is_flat() const {
    for (const auto& f : curvatures_)
        if (!f.is_zero()) return false;
    return true;
}

FieldForm FieldConfiguration::evaluate(const Element& w) const {
    const auto& weil = *model_->weil();
    if (!same_signature(w.signature(), weil.signature()))
        throw SignatureMismatchError("evaluate: element is not in the Weil algebra");
    const auto base = weil.base_size();
    FieldForm out = FieldForm::zero(wv_);
    for (const auto& [mono, coeff] : w.terms()) {
        FieldForm acc = FieldForm::constant(wv_, coeff);
        for (const auto& f : mono.factors()) {
            const FieldForm& img = f.gen < base ? images_.at(f.gen) : curvatures_.at(f.gen - base);
            for (std::uint32_t e = 0; e < f.exp && !acc.is_zero(); ++e) acc = acc * img;
            if (acc.is_zero()) break;
        }
        out += acc;
    }
    return out;
}

FieldConfiguration FieldConfiguration::restrict_to_end(int endpoint) const {
    WvPtr bwv = wv_->boundary();
    std::vector<FieldForm> images;
    images.reserve(images_.size());
    for (const auto& f : images_) images.push_back(gcw::restrict_to_end(f, endpoint));
    return FieldConfiguration(bwv, model_, std::move(images));
}

ActionReport aksz_action(const FieldConfiguration& A) {
    const auto& model = *A.model();
    const int n = model.grade();
    const auto& wv = *A.worldvolume();
    if (wv.dimension() != static_cast<std::size_t>(n) + 1)
        throw DomainError("aksz_action: worldvolume dimension " + std::to_string(wv.dimension()) +
                          " does not match grade + 1 = " + std::to_string(n + 1));

    ActionReport rep;
    rep.closed = wv.closed();

    const Element cs = chern_simons_element(model);
    rep.cs_form = A.evaluate(cs);
    rep.value_cs = integrate(rep.cs_form);

    const Element pi = hamiltonian(model);
    const auto& sig = *model.ce()->signature();
    FieldForm kinetic = FieldForm::zero(A.worldvolume());
    for (GenId a = 0; a < sig.size(); ++a) {
        for (GenId b = 0; b < sig.size(); ++b) {
            const Rat& w = model.pairing()[a][b];
            if (w == 0) continue;
            kinetic += scale(w / 2, A.image(a) * d_dR(A.image(b)));
        }
    }
    const FieldForm pulled_pi = A.evaluate(model.weil()->include(pi));
    rep.kinetic_term = integrate(kinetic);
    rep.hamiltonian_term = integrate(pulled_pi);
    rep.lagrangian_form = kinetic - pulled_pi;
    rep.value_lagrangian = rep.kinetic_term - rep.hamiltonian_term;
    rep.difference = rep.value_cs - rep.value_lagrangian;
    return rep;
}

bool StokesReport::equal() const { return (boundary_value - bulk_value).is_zero(); }

StokesReport stokes_check(const FieldConfiguration& A) {
    const auto& model = *A.model();
    const int n = model.grade();
    const auto& wv = *A.worldvolume();
    const auto interval = wv.interval_index();
    if (!interval) throw DomainError("stokes_check: worldvolume must contain an interval factor");
    if (wv.dimension() != static_cast<std::size_t>(n) + 2)
        throw DomainError("stokes_check: worldvolume dimension must be grade + 2");

    StokesReport rep;
    // Moving dt from its factor position to the front of the orientation
    // costs one transposition per preceding circle factor.
    rep.orientation_sign = *interval % 2 == 0 ? 1 : -1;

    const Element cs = chern_simons_element(model);
    rep.at_end1 = integrate(A.restrict_to_end(1).evaluate(cs));
    rep.at_end0 = integrate(A.restrict_to_end(0).evaluate(cs));
    CircleScalar oriented = rep.at_end1 - rep.at_end0;
    rep.boundary_value = rep.orientation_sign > 0 ? oriented : -oriented;
    rep.bulk_value = integrate(A.evaluate(model.omega()));
    return rep;
}

} // namespace gcw
