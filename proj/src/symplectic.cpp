#include "gcw/symplectic.hpp"

#include "gcw/render.hpp"

#include <sstream>

namespace gcw {

Element omega_element(const WeilAlgebra& W, const RatMatrix& pairing) {
    const auto& sig = W.signature();
    const auto n = W.base_size();
    Element omega = Element::zero(sig);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const Rat& w = pairing[a][b];
            if (w == 0) continue;
            Element term = Element::generator(sig, W.shifted_id(static_cast<GenId>(a))) *
                           Element::generator(sig, W.shifted_id(static_cast<GenId>(b)));
            omega += scale(w / 2, term);
        }
    }
    return omega;
}

CheckReport validate(const CEAlgebra& ce, int n, const RatMatrix& pairing) {
    CheckReport rep;
    const auto& sig = *ce.signature();
    const std::size_t m = sig.size();

    rep.add("positive_grade", n >= 1, n >= 1 ? "" : "grade n = " + std::to_string(n));

    bool shape = pairing.size() == m;
    for (const auto& row : pairing)
        if (row.size() != m) shape = false;
    rep.add("pairing_shape", shape, shape ? "" : "pairing must be a square matrix over the generators");
    if (!shape) return rep;

    {
        std::ostringstream bad;
        bool ok = true;
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                if (pairing[a][b] == 0) continue;
                const int ws = sig.gen(static_cast<GenId>(a)).weight +
                               sig.gen(static_cast<GenId>(b)).weight;
                if (ws != n) {
                    ok = false;
                    bad << " (" << sig.gen(static_cast<GenId>(a)).name << ","
                        << sig.gen(static_cast<GenId>(b)).name << ") has weight sum " << ws;
                }
            }
        rep.add("darboux_grade_condition", ok, ok ? "" : "nonzero entries off grade n:" + bad.str());
    }

    {
        std::ostringstream bad;
        bool ok = true;
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a; b < m; ++b) {
                const int sgn_exp = (1 + sig.gen(static_cast<GenId>(a)).weight) *
                                    (1 + sig.gen(static_cast<GenId>(b)).weight);
                const Rat expect = sgn_exp % 2 == 0 ? pairing[b][a] : Rat(-pairing[b][a]);
                if (pairing[a][b] != expect) {
                    ok = false;
                    bad << " (" << sig.gen(static_cast<GenId>(a)).name << ","
                        << sig.gen(static_cast<GenId>(b)).name << ")";
                }
            }
        rep.add("graded_symmetry", ok, ok ? "" : "entries violating the graded symmetry:" + bad.str());
    }

    const auto inv = invert(pairing);
    rep.add("nondegenerate", inv.has_value(), inv ? "" : "pairing matrix is singular");

    // Closure and invariance: with constant coefficients d(omega) = 0 holds
    // term by term, so d_W(omega) = L_v(omega); check the full d_W anyway.
    try {
        auto weil = build_weil(std::make_shared<CEAlgebra>(ce.name(), ce.signature(), ce.differential()));
        Element omega = omega_element(*weil, pairing);
        Element dw = weil->differential().apply(omega);
        rep.add("dw_closed", dw.is_zero(),
                dw.is_zero() ? "" : "d_W(omega) = " + render_plain(dw));
        auto ip = is_invariant_polynomial(*weil, omega);
        rep.add("invariant_polynomial", ip.invariant(),
                ip.invariant() ? "" : "closed=" + std::string(ip.closed ? "yes" : "no") +
                                          " horizontal=" + std::string(ip.horizontal ? "yes" : "no"));
    } catch (const Error& e) {
        rep.add("weil_construction", false, e.what());
    }
    return rep;
}

SymplecticModel::SymplecticModel(CEPtr ce, int n, RatMatrix pairing)
    : ce_(std::move(ce)), n_(n), pairing_(std::move(pairing)) {
    CheckReport rep = ::gcw::validate(*ce_, n_, pairing_);
    if (!rep.all_pass()) {
        std::ostringstream os;
        os << "symplectic model '" << ce_->name() << "' failed validation:";
        for (const auto& item : rep.items)
            if (!item.pass) os << " [" << item.name << "] " << item.detail;
        throw BuildError(os.str());
    }
    weil_ = build_weil(ce_);
    pairing_inv_ = *invert(pairing_);
    omega_ = omega_element(*weil_, pairing_);
}

Element poisson_bracket(const SymplecticModel& m, const Element& f, const Element& g) {
    const auto& sig = m.ce()->signature();
    if (!same_signature(f.signature(), sig) || !same_signature(g.signature(), sig))
        throw SignatureMismatchError("poisson_bracket: arguments must live in the CE algebra");
    const auto size = static_cast<GenId>(sig->size());
    Element out = Element::zero(sig);
    for (GenId a = 0; a < size; ++a) {
        Element fa = partial_right(f, a);
        if (fa.is_zero()) continue;
        for (GenId b = 0; b < size; ++b) {
            const Rat& w = m.pairing_inverse()[a][b];
            if (w == 0) continue;
            Element gb = partial_left(sig, b).apply(g);
            if (gb.is_zero()) continue;
            out += scale(w, fa * gb);
        }
    }
    return out;
}

Element hamiltonian(const SymplecticModel& m) {
    const auto& W = *m.weil();
    const int n = m.grade();
    Element pi_weil = scale(Rat(1, n + 1), W.iota_euler().apply(W.iota_v().apply(m.omega())));
    Element pi = W.project_ce(pi_weil);

    // d(pi) = iota_v omega: the defining Hamiltonian property.
    if (!(W.shift().apply(W.include(pi)) == W.iota_v().apply(m.omega())))
        throw Error("hamiltonian: defect, d(pi) != iota_v(omega)");
    // pi is a cocycle.
    if (!m.ce()->differential().apply(pi).is_zero())
        throw Error("hamiltonian: defect, d_CE(pi) != 0");
    // Local coordinate formula: pi = omega_ab deg(x^a) x^a v^b / (n+1).
    const auto& sig = m.ce()->signature();
    const auto size = static_cast<GenId>(sig->size());
    Element local = Element::zero(sig);
    for (GenId a = 0; a < size; ++a) {
        const int wa = sig->gen(a).weight;
        if (wa == 0) continue;
        for (GenId b = 0; b < size; ++b) {
            const Rat& w = m.pairing()[a][b];
            if (w == 0) continue;
            local += scale(w * wa, Element::generator(sig, a) * m.ce()->differential().image(b));
        }
    }
    local = scale(Rat(1, n + 1), local);
    if (!(local == pi)) throw Error("hamiltonian: defect, intrinsic and local formulas differ");
    return pi;
}

Element chern_simons_element(const SymplecticModel& m) {
    const auto& W = *m.weil();
    const int n = m.grade();
    const Element pi = hamiltonian(m);
    Element cs = scale(Rat(1, n), W.iota_euler().apply(m.omega()) + W.include(pi));

    if (!(W.differential().apply(cs) == m.omega()))
        throw Error("chern_simons_element: defect, d_W(cs) != omega");
    if (!(W.project_ce(cs) == scale(Rat(1, n), pi)))
        throw Error("chern_simons_element: defect, i*(cs) != pi/n");

    // Both local forms from the coordinate picture.
    const auto& sig = W.signature();
    const auto size = static_cast<GenId>(m.ce()->signature()->size());
    Element local1 = Element::zero(sig);
    Element local2 = Element::zero(sig);
    for (GenId a = 0; a < size; ++a) {
        const int wa = m.ce()->signature()->gen(a).weight;
        if (wa == 0) continue;
        for (GenId b = 0; b < size; ++b) {
            const Rat& w = m.pairing()[a][b];
            if (w == 0) continue;
            Element xa = Element::generator(sig, a);
            local1 += scale(w * wa, xa * Element::generator(sig, W.shifted_id(b)));
            local2 += scale(w * wa, xa * W.differential().image(b));
        }
    }
    const Element pi_w = W.include(pi);
    local1 = scale(Rat(1, n), local1 + pi_w);
    local2 = scale(Rat(1, n), local2 - scale(n, pi_w));
    if (!(local1 == cs) || !(local2 == cs))
        throw Error("chern_simons_element: defect, local coordinate forms disagree");
    return cs;
}

TransgressionReport verify_transgression(const WeilAlgebra& W, const Element& cs,
                                         const Element& inv, const Element& mu) {
    TransgressionReport rep{false, false, Element::zero(W.signature()),
                            Element::zero(W.ce()->signature())};
    rep.differential_defect = W.differential().apply(cs) - inv;
    rep.differential_matches = rep.differential_defect.is_zero();
    rep.projection_defect = W.project_ce(cs) - mu;
    rep.projection_matches = rep.projection_defect.is_zero();
    return rep;
}

std::vector<BracketProbe> hamiltonian_bracket_probe(const SymplecticModel& m) {
    const Element pi = hamiltonian(m);
    const auto& sig = m.ce()->signature();
    std::vector<BracketProbe> out;
    for (GenId g = 0; g < sig->size(); ++g) {
        Element br = poisson_bracket(m, pi, Element::generator(sig, g));
        const Element& v = m.ce()->differential().image(g);
        out.push_back({g, br == v, br == -v});
    }
    return out;
}

} // namespace gcw
