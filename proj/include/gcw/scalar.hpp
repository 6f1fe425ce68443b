#pragma once

#include "gcw/rational.hpp"

namespace gcw {

/// Exact scalars for worldvolume integration: polynomials in the circle
/// constant 2π with rational coefficients. The symbol enters through
/// exterior derivatives of the trigonometric basis and never cancels
/// against rationals, so ℚ[2π] is closed under everything the evaluator
/// does.
class CircleScalar {
  public:
    CircleScalar() = default; // zero
    static CircleScalar rational(Rat q);
    /// coeff * (2π)^power
    static CircleScalar tau(Rat coeff, unsigned power);

    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coefficients() const { return c_; }

    CircleScalar& operator+=(const CircleScalar& o);
    CircleScalar& operator-=(const CircleScalar& o);
    friend CircleScalar operator+(CircleScalar a, const CircleScalar& b) { return a += b; }
    friend CircleScalar operator-(CircleScalar a, const CircleScalar& b) { return a -= b; }
    friend CircleScalar operator*(const CircleScalar& a, const CircleScalar& b);
    CircleScalar operator-() const;

    bool operator==(const CircleScalar& o) const { return c_ == o.c_; }

    /// Numeric value with 2π at double precision.
    double to_double() const;

    /// "0", "3/2", "-2π", "1/2*(2π)^2", "3 + 2*2π".
    std::string to_string() const;

  private:
    void trim();
    std::vector<Rat> c_; // c_[k] multiplies (2π)^k; no trailing zeros
};

CircleScalar operator*(const Rat& q, const CircleScalar& s);

} // namespace gcw
