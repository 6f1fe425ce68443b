#pragma once

#include "gcw/weil.hpp"

namespace gcw {

/// A CE algebra with a constant-coefficient grade-n symplectic pairing,
/// validated as a symplectic Lie n-algebroid. Input to the Chern-Weil
/// pipeline (Hamiltonian cocycle, Chern-Simons element, transgression).
class SymplecticModel {
  public:
    /// Throws BuildError with the failed checks rendered when validation
    /// fails; use `validate` first for a non-throwing report.
    SymplecticModel(CEPtr ce, int n, RatMatrix pairing);

    const CEPtr& ce() const { return ce_; }
    const WeilPtr& weil() const { return weil_; }
    int grade() const { return n_; }
    const RatMatrix& pairing() const { return pairing_; }
    const RatMatrix& pairing_inverse() const { return pairing_inv_; }

    /// omega = 1/2 dx^a w_ab dx^b in the Weil algebra.
    const Element& omega() const { return omega_; }

  private:
    CEPtr ce_;
    WeilPtr weil_;
    int n_ = 0;
    RatMatrix pairing_;
    RatMatrix pairing_inv_;
    Element omega_;
};

/// The symplectic-form element determined by a pairing matrix, in the Weil
/// signature of `W`.
Element omega_element(const WeilAlgebra& W, const RatMatrix& pairing);

/// Non-throwing axiom check: positive grade, Darboux grade condition,
/// graded symmetry, nondegeneracy, closure/invariance d_W(omega) = 0, and
/// the invariant-polynomial property. Witnesses are rendered into failing
/// items.
CheckReport validate(const CEAlgebra& ce, int n, const RatMatrix& pairing);

inline CheckReport validate(const SymplecticModel& m) {
    return validate(*m.ce(), m.grade(), m.pairing());
}

/// {f,g} = (f dbar/dbar x^a) w^{ab} (d g / d x^b); decreases weight by n.
/// Both arguments must be free of shifted generators and live in the CE
/// signature of the model.
Element poisson_bracket(const SymplecticModel& m, const Element& f, const Element& g);

/// The canonical cocycle pi = iota_e iota_v omega / (n+1), returned in the
/// CE signature. Verifies d(pi) = iota_v omega, d_CE pi = 0 and the local
/// coordinate formula before returning.
Element hamiltonian(const SymplecticModel& m);

/// cs = (iota_e omega + pi)/n in the Weil signature. Verifies
/// d_W cs = omega, i* cs = pi/n and both local coordinate forms.
Element chern_simons_element(const SymplecticModel& m);

struct TransgressionReport {
    bool differential_matches = false; // d_W cs = inv
    bool projection_matches = false;   // i* cs = mu
    Element differential_defect;
    Element projection_defect;
    bool pass() const { return differential_matches && projection_matches; }
};

/// Checks an arbitrary user triple (cs, inv, mu) for the two transgression
/// identities; cs and inv in the Weil signature, mu in the CE signature.
TransgressionReport verify_transgression(const WeilAlgebra& W, const Element& cs,
                                         const Element& inv, const Element& mu);

struct BracketProbe {
    GenId gen;
    bool matches_plus = false;  // {pi, x} == d_ce x
    bool matches_minus = false; // {pi, x} == -d_ce x
};

/// Exploratory comparison of {pi, x^a} against ±d_CE x^a per generator.
/// Informational only; no identity of this shape is promised.
std::vector<BracketProbe> hamiltonian_bracket_probe(const SymplecticModel& m);

} // namespace gcw
