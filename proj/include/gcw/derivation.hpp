#pragma once

#include "gcw/element.hpp"

#include <string>

namespace gcw {

/// A graded derivation, stored by its images on generators and extended to
/// arbitrary elements by the signed Leibniz rule
///   D(ab) = D(a) b + (-1)^{deg(D) |a|} a D(b).
/// Houses the homological vector field, contractions, Lie derivatives, the
/// de Rham shift differential and partial derivatives.
class Derivation {
  public:
    Derivation(SigPtr sig, int degree, std::string label);

    const SigPtr& signature() const { return sig_; }
    int degree() const { return degree_; }
    const std::string& label() const { return label_; }

    /// Sets D(g); the image must be zero or homogeneous of degree |g| + deg(D).
    void set_image(GenId g, Element img);
    const Element& image(GenId g) const;
    bool has_nonzero_image(GenId g) const;

    Element apply(const Element& w) const;
    Element operator()(const Element& w) const { return apply(w); }

    /// True when every image involves unshifted generators only and all
    /// shifted generators map to zero (the derivation is a vector field).
    bool is_vector_field() const;

    bool operator==(const Derivation& o) const;

  private:
    SigPtr sig_;
    int degree_;
    std::string label_;
    std::vector<Element> images_;
};

/// Graded commutator [D1, D2] = D1 D2 - (-1)^{deg1 deg2} D2 D1, returned
/// through its generator images.
Derivation commutator(const Derivation& d1, const Derivation& d2);

Derivation scale(const Rat& q, const Derivation& d);

/// The de Rham differential of the shifted tangent bundle: x -> dx, dx -> 0.
/// Requires a Weil-type signature.
Derivation shift_differential(SigPtr sig);

/// Contraction along a vector field v: x -> 0, dx -> v(x). Degree deg(v) - 1.
Derivation contraction(const Derivation& v);

/// The Euler vector field e(x) = weight(x) * x on unshifted generators.
Derivation euler_field(SigPtr sig);

/// iota_e: dx -> weight(x) * x. Degree-0 coordinates contribute zero.
Derivation euler_contraction(SigPtr sig);

/// Cartan formula L_v = [iota_v, d].
Derivation lie_derivative(const Derivation& v);

/// Left partial derivative by an unshifted generator; degree -|g|.
Derivation partial_left(SigPtr sig, GenId g);

/// Right graded derivative: (f d-bar/d-bar g) = (-1)^{|g|(|f|+|g|)} d_left f,
/// applied per homogeneous component of f.
Element partial_right(const Element& f, GenId g);

/// Primitive of a d-closed form of positive weight n: lambda = iota_e(w)/n
/// with d(lambda) = w, verified before returning.
Element poincare_primitive(const Element& w, int n);

} // namespace gcw
