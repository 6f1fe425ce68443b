#pragma once

#include "gcw/rational.hpp"
#include "gcw/signature.hpp"

#include <map>
#include <span>
#include <vector>

namespace gcw {

/// Sorted power product of generators. Normal form: factors ascend in
/// declaration order, exponents are >= 1, and an odd-degree generator never
/// carries an exponent above 1. The empty product is the unit.
class Monomial {
  public:
    struct Factor {
        GenId gen;
        std::uint32_t exp;
        bool operator==(const Factor&) const = default;
        auto operator<=>(const Factor&) const = default;
    };

    Monomial() = default; // unit

    /// Caller guarantees factors are already in normal form.
    Monomial(const AlgebraSignature& sig, std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }
    int degree() const { return degree_; }
    int weight() const { return weight_; }
    int form_degree() const { return degree_ - weight_; }

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }

    /// Graded-lex order: total degree first, then factor sequence. Gives the
    /// deterministic term order used by every renderer.
    bool operator<(const Monomial& o) const {
        if (degree_ != o.degree_) return degree_ < o.degree_;
        return factors_ < o.factors_;
    }

  private:
    std::vector<Factor> factors_;
    int degree_ = 0;
    int weight_ = 0;
};

/// Koszul-sign normalization of an unsorted generator word. Returns sign 0
/// (with unit monomial) when an odd generator repeats.
std::pair<int, Monomial> normalize(const AlgebraSignature& sig, std::span<const GenId> word);

/// Product of two normal forms: (sign, monomial); sign 0 means the product
/// vanished on an odd square.
std::pair<int, Monomial> multiply(const AlgebraSignature& sig, const Monomial& a, const Monomial& b);

/// Finite sum of monomials with nonzero rational coefficients over a fixed
/// signature. The universal value type: CE/Weil algebra members, structure
/// functions, cocycles, Chern-Simons elements all live here.
class Element {
  public:
    Element() = default; // invalid; use the factories
    static Element zero(SigPtr sig);
    static Element unit(SigPtr sig) { return constant(std::move(sig), 1); }
    static Element constant(SigPtr sig, Rat c);
    static Element generator(SigPtr sig, GenId g);
    static Element monomial(SigPtr sig, Monomial m, Rat c = 1);

    const SigPtr& signature() const { return sig_; }
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Total degree when all terms agree on it; nullopt for mixed-degree
    /// sums. Zero has every degree, reported as nullopt.
    std::optional<int> degree() const;
    std::optional<int> weight() const;
    bool homogeneous_of_degree(int d) const;
    bool homogeneous_of_weight(int w) const;

    /// Splits into homogeneous components keyed by total degree.
    std::map<int, Element> by_degree() const;

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Element& a, const Element& b);

    bool operator==(const Element& o) const;

    void add_term(const Monomial& m, const Rat& c);

  private:
    SigPtr sig_;
    std::map<Monomial, Rat> terms_;
};

Element scale(const Rat& q, Element a);
inline Element operator*(const Rat& q, Element a) { return scale(q, std::move(a)); }

enum class DegreeCheck { strict, off };

/// The unique algebra-morphism extension of a generator assignment. Every
/// generator occurring in `w` must have an image in `images` (images of
/// generators absent from `w` are ignored); images live in `target`.
/// With DegreeCheck::strict each used image must be zero or homogeneous of
/// its generator's total degree.
Element substitute(const Element& w, const std::vector<std::optional<Element>>& images,
                   SigPtr target, DegreeCheck check = DegreeCheck::strict);

} // namespace gcw
