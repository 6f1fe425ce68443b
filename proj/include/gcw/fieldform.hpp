#pragma once

#include "gcw/scalar.hpp"
#include "gcw/worldvolume.hpp"

#include <map>

namespace gcw {

/// One sin/cos factor on a circle coordinate; frequency counts full turns.
struct TrigFactor {
    bool is_cos = false;
    std::uint32_t freq = 0; // >= 1 in stored terms
    bool operator==(const TrigFactor&) const = default;
    auto operator<=>(const TrigFactor&) const = default;
};

/// Basis datum of one term: per-coordinate trig factor (circle directions,
/// at most one factor each after product-to-sum reduction), monomial power
/// (interval direction), and the set of coordinate differentials, stored
/// ascending with the sign normalized into the coefficient.
struct FieldKey {
    std::vector<std::optional<TrigFactor>> trig;
    std::vector<std::uint32_t> tpow;
    std::uint64_t dmask = 0;

    bool operator==(const FieldKey&) const = default;
    auto operator<=>(const FieldKey&) const = default;

    int form_degree() const;
};

/// Exact differential forms on a worldvolume: finite ℚ[2π]-combinations of
/// products of sin(2πk·θ)/cos(2πk·θ), interval monomials t^m and coordinate
/// differentials. Closed under wedge, d and integration.
class FieldForm {
  public:
    FieldForm() = default; // invalid; use factories
    static FieldForm zero(WvPtr wv);
    static FieldForm constant(WvPtr wv, CircleScalar c);
    static FieldForm constant(WvPtr wv, Rat q) { return constant(std::move(wv), CircleScalar::rational(std::move(q))); }
    static FieldForm differential(WvPtr wv, std::size_t coord);
    static FieldForm trig(WvPtr wv, std::size_t coord, bool is_cos, std::uint32_t freq);
    static FieldForm interval_power(WvPtr wv, std::size_t coord, std::uint32_t m);

    const WvPtr& worldvolume() const { return wv_; }
    const std::map<FieldKey, CircleScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Form degree when all terms agree; nullopt for mixed or zero.
    std::optional<int> degree() const;
    bool homogeneous_of_degree(int d) const;

    FieldForm operator-() const;
    FieldForm& operator+=(const FieldForm& o);
    FieldForm& operator-=(const FieldForm& o);
    friend FieldForm operator+(FieldForm a, const FieldForm& b) { return a += b; }
    friend FieldForm operator-(FieldForm a, const FieldForm& b) { return a -= b; }

    /// Wedge product.
    friend FieldForm operator*(const FieldForm& a, const FieldForm& b);

    bool operator==(const FieldForm& o) const;

    void add_term(const FieldKey& k, const CircleScalar& c);

  private:
    WvPtr wv_;
    std::map<FieldKey, CircleScalar> terms_;
};

FieldForm scale(const CircleScalar& c, const FieldForm& f);
FieldForm scale(const Rat& q, const FieldForm& f);

/// Exterior derivative; d∘d = 0, graded Leibniz over the wedge.
FieldForm d_dR(const FieldForm& f);

/// Exact integral over the whole worldvolume. Every term must be of top
/// degree; circle directions keep the constant Fourier coefficient,
/// interval directions integrate monomials.
CircleScalar integrate(const FieldForm& f);

/// Pullback to the boundary slice t = 0 or t = 1 of the interval factor;
/// result lives on worldvolume->boundary().
FieldForm restrict_to_end(const FieldForm& f, int endpoint);

/// Tensor-product quadrature at double precision: trapezoid sums on circle
/// directions (enough nodes for the occurring frequencies), Gauss-Legendre
/// on the interval. Independent numeric cross-check of `integrate`.
double quadrature(const FieldForm& f);

std::string to_string(const FieldForm& f);

} // namespace gcw
