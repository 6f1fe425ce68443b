#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gcw/fieldform.hpp"
#include "gcw/sampling.hpp"

#include <cmath>

using namespace gcw;

namespace {

WvPtr t3() { return make_torus({"x", "y", "z"}); }

WvPtr cylinder3() {
    return std::make_shared<Worldvolume>(std::vector<WorldvolumeFactor>{
        {FactorKind::interval, "t"}, {FactorKind::circle, "u"}, {FactorKind::circle, "v"}});
}

FieldForm random_form(Sampler& s, const WvPtr& wv, int max_terms) {
    FieldForm f = FieldForm::zero(wv);
    const int n = s.uniform(1, max_terms);
    for (int i = 0; i < n; ++i) {
        FieldForm term = FieldForm::constant(wv, s.small_rat());
        for (std::size_t c = 0; c < wv->dimension(); ++c) {
            if (wv->factor(c).kind == FactorKind::circle) {
                if (s.chance(0.5))
                    term = term * FieldForm::trig(wv, c, s.chance(0.5),
                                                  static_cast<std::uint32_t>(s.uniform(1, 2)));
            } else if (s.chance(0.6)) {
                term = term *
                       FieldForm::interval_power(wv, c, static_cast<std::uint32_t>(s.uniform(1, 3)));
            }
            if (s.chance(0.4)) term = term * FieldForm::differential(wv, c);
        }
        f += term;
    }
    return f;
}

} // namespace

TEST_CASE("scalar ring: arithmetic and printing in the 2π symbol") {
    CircleScalar a = CircleScalar::rational(Rat(3, 2));
    CircleScalar b = CircleScalar::tau(Rat(-1), 1);
    CHECK((a + b).to_string() == "3/2 - 2π");
    CHECK((b * b).to_string() == "(2π)^2");
    CHECK(CircleScalar::tau(Rat(1, 2), 2).to_string() == "1/2*(2π)^2");
    CHECK((a - a).is_zero());
    CHECK((a - a).to_string() == "0");
    CHECK(b.to_double() == doctest::Approx(-2 * std::acos(-1.0)).epsilon(1e-14));
}

TEST_CASE("wedge: nilpotent differentials, anticommutativity, interleave signs") {
    auto wv = t3();
    FieldForm dx = FieldForm::differential(wv, 0);
    FieldForm dy = FieldForm::differential(wv, 1);
    FieldForm dz = FieldForm::differential(wv, 2);

    CHECK((dx * dx).is_zero());
    CHECK(dx * dy == -(dy * dx));
    // dz ∧ (dx ∧ dy) = + dx ∧ dy ∧ dz (two transpositions)
    CHECK(dz * (dx * dy) == dx * (dy * dz));
}

TEST_CASE("wedge: product-to-sum on one coordinate is exact") {
    auto wv = t3();
    FieldForm s1 = FieldForm::trig(wv, 2, false, 1);
    FieldForm c1 = FieldForm::trig(wv, 2, true, 1);
    FieldForm c2 = FieldForm::trig(wv, 2, true, 2);

    // sin^2 = 1/2 - 1/2 cos(2)
    CHECK(s1 * s1 == scale(Rat(1, 2), FieldForm::constant(wv, Rat(1))) - scale(Rat(1, 2), c2));
    // sin·cos = 1/2 sin(2)
    CHECK(s1 * c1 == scale(Rat(1, 2), FieldForm::trig(wv, 2, false, 2)));
    // cos(1)cos(2) = 1/2 cos(1) + 1/2 cos(3)
    CHECK(c1 * c2 == scale(Rat(1, 2), FieldForm::trig(wv, 2, true, 1)) +
                         scale(Rat(1, 2), FieldForm::trig(wv, 2, true, 3)));
}

TEST_CASE("exterior derivative: named cases") {
    auto cyl = cylinder3();
    // d(t) = dt
    CHECK(d_dR(FieldForm::interval_power(cyl, 0, 1)) == FieldForm::differential(cyl, 0));
    // d(t^3) = 3 t^2 dt
    CHECK(d_dR(FieldForm::interval_power(cyl, 0, 3)) ==
          scale(Rat(3), FieldForm::interval_power(cyl, 0, 2) * FieldForm::differential(cyl, 0)));

    auto wv = t3();
    // d(cos(1 z) dx) = -2π sin(1 z) dz ∧ dx = +2π sin(1 z) dx ∧ dz
    FieldForm got = d_dR(FieldForm::trig(wv, 2, true, 1) * FieldForm::differential(wv, 0));
    FieldForm expect = scale(CircleScalar::tau(Rat(1), 1),
                             FieldForm::trig(wv, 2, false, 1) * FieldForm::differential(wv, 0) *
                                 FieldForm::differential(wv, 2));
    CHECK(got == expect);
    // frequency scales the derivative
    CHECK(d_dR(FieldForm::trig(wv, 1, false, 3)) ==
          scale(CircleScalar::tau(Rat(3), 1),
                FieldForm::trig(wv, 1, true, 3) * FieldForm::differential(wv, 1)));
}

TEST_CASE("property: d∘d = 0 and the graded Leibniz rule on random forms") {
    Sampler s(101);
    for (const auto& wv : {t3(), cylinder3()}) {
        for (int i = 0; i < 60; ++i) {
            FieldForm a = random_form(s, wv, 3);
            FieldForm b = random_form(s, wv, 3);
            CHECK(d_dR(d_dR(a)).is_zero());
            // split a by degree to apply the sign
            FieldForm rhs = FieldForm::zero(wv);
            std::map<int, FieldForm> parts;
            for (const auto& [k, c] : a.terms()) {
                auto [it, ins] = parts.try_emplace(k.form_degree(), FieldForm::zero(wv));
                it->second.add_term(k, c);
            }
            for (const auto& [deg, part] : parts) {
                FieldForm piece = part * d_dR(b);
                rhs += deg % 2 != 0 ? -piece : piece;
            }
            CHECK(d_dR(a * b) == d_dR(a) * b + rhs);
        }
    }
}

TEST_CASE("integrate: Fourier constant term, interval monomials, orientation") {
    auto wv = t3();
    FieldForm vol = FieldForm::differential(wv, 0) * FieldForm::differential(wv, 1) *
                    FieldForm::differential(wv, 2);
    CHECK(integrate(vol) == CircleScalar::rational(1));
    CHECK(integrate(FieldForm::trig(wv, 0, false, 1) * vol).is_zero());
    // cos^2 integrates to 1/2
    FieldForm c = FieldForm::trig(wv, 0, true, 1);
    CHECK(integrate(c * c * vol) == CircleScalar::rational(Rat(1, 2)));
    // orientation: dz ∧ dy ∧ dx = -vol
    FieldForm rev = FieldForm::differential(wv, 2) * FieldForm::differential(wv, 1) *
                    FieldForm::differential(wv, 0);
    CHECK(integrate(rev) == -CircleScalar::rational(1));

    CHECK_THROWS_AS(integrate(FieldForm::differential(wv, 0)), DomainError);

    auto cyl = cylinder3();
    FieldForm cvol = FieldForm::differential(cyl, 0) * FieldForm::differential(cyl, 1) *
                     FieldForm::differential(cyl, 2);
    CHECK(integrate(FieldForm::interval_power(cyl, 0, 2) * cvol) ==
          CircleScalar::rational(Rat(1, 3)));
}

TEST_CASE("golden: ∫_{T3} C ∧ dC = -2π for the winding field") {
    auto wv = t3();
    FieldForm C = FieldForm::trig(wv, 2, true, 1) * FieldForm::differential(wv, 0) +
                  FieldForm::trig(wv, 2, false, 1) * FieldForm::differential(wv, 1);
    CHECK(integrate(C * d_dR(C)) == CircleScalar::tau(Rat(-1), 1));
}

TEST_CASE("restrict_to_end: slices, t-powers, dt terms die") {
    auto cyl = cylinder3();
    FieldForm f = FieldForm::interval_power(cyl, 0, 2) * FieldForm::trig(cyl, 1, true, 1) *
                      FieldForm::differential(cyl, 1) +
                  FieldForm::differential(cyl, 0) * FieldForm::trig(cyl, 2, false, 1);
    auto bwv = cyl->boundary();
    FieldForm at1 = restrict_to_end(f, 1);
    FieldForm at0 = restrict_to_end(f, 0);
    FieldForm expect1 = FieldForm::trig(bwv, 0, true, 1) * FieldForm::differential(bwv, 0);
    CHECK(at1 == expect1);
    CHECK(at0.is_zero());

    // Stokes on the cylinder: ∫_N d(α) = orientation-corrected boundary sum.
    Sampler s(103);
    for (int i = 0; i < 40; ++i) {
        FieldForm sample = random_form(s, cyl, 4);
        FieldForm alpha = FieldForm::zero(cyl);
        // keep the 2-form part
        for (const auto& [k, c] : sample.terms())
            if (k.form_degree() == 2) alpha.add_term(k, c);
        CircleScalar bulk = integrate(d_dR(alpha));
        CircleScalar boundary =
            integrate(restrict_to_end(alpha, 1)) - integrate(restrict_to_end(alpha, 0));
        CHECK(bulk == boundary); // interval first: orientation sign +1
    }
}

TEST_CASE("quadrature agrees with exact integration to 1e-9 relative") {
    Sampler s(107);
    for (const auto& wv : {t3(), cylinder3()}) {
        for (int i = 0; i < 40; ++i) {
            FieldForm f = random_form(s, wv, 4);
            FieldForm top = FieldForm::zero(wv);
            for (const auto& [k, c] : f.terms())
                if (static_cast<std::size_t>(k.form_degree()) == wv->dimension())
                    top.add_term(k, c);
            const double exact = integrate(top).to_double();
            const double quad = quadrature(top);
            CHECK(std::abs(quad - exact) <= 1e-9 * std::max(1.0, std::abs(exact)));
        }
    }
}

TEST_CASE("worldvolume validation") {
    CHECK_THROWS_AS(Worldvolume({}), Error);
    CHECK_THROWS_AS(Worldvolume({{FactorKind::circle, "u"}, {FactorKind::circle, "u"}}), Error);
    CHECK_THROWS_AS(Worldvolume({{FactorKind::interval, "s"}, {FactorKind::interval, "t"}}), Error);
    CHECK_THROWS_AS(FieldForm::trig(cylinder3(), 0, true, 1), DomainError);
    CHECK_THROWS_AS(FieldForm::interval_power(t3(), 0, 1), DomainError);
}
