#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gcw/render.hpp"
#include "test_support.hpp"

using namespace gcw;
using namespace gcw::testing;

namespace {

CEPtr abelian_one() {
    auto sig = make_signature({{"t", 1}});
    return std::make_shared<CEAlgebra>("abelian1", sig, Derivation(sig, 1, "d_CE"));
}

CEPtr line_ce(int weight) {
    auto sig = make_signature({{"c", weight}});
    return std::make_shared<CEAlgebra>("line", sig, Derivation(sig, 1, "d_CE"));
}

} // namespace

TEST_CASE("CE construction rejects non-nilpotent differentials with a witness") {
    auto sig = make_signature({{"t1", 1}, {"t2", 1}, {"t3", 1}, {"t4", 1}});
    Derivation d(sig, 1, "d_CE");
    d.set_image(0, -(gen(sig, "t2") * gen(sig, "t3")));
    d.set_image(1, -(gen(sig, "t3") * gen(sig, "t4")));
    d.set_image(2, -(gen(sig, "t4") * gen(sig, "t1")));
    d.set_image(3, -(gen(sig, "t1") * gen(sig, "t2")));
    CHECK(nilpotency_witness(d).has_value());
    CHECK_THROWS_WITH_AS(std::make_shared<CEAlgebra>("bad", sig, d),
                         doctest::Contains("d^2 != 0"), BuildError);
}

TEST_CASE("build_weil: abelian generator rules") {
    auto W = build_weil(abelian_one());
    const auto& sig = W->signature();
    CHECK(W->differential().image(0) == gen(sig, shifted_name("t")));
    CHECK(W->differential().image(1).is_zero());
}

TEST_CASE("build_weil: line algebra is the free dg-algebra on one generator") {
    auto W = build_weil(line_ce(5));
    const auto& sig = W->signature();
    // d_W c = (shifted copy), d_W (shifted copy) = 0
    CHECK(W->differential().apply(gen(sig, "c")) == gen(sig, shifted_name("c")));
    CHECK(W->differential().apply(gen(sig, shifted_name("c"))).is_zero());
}

TEST_CASE("build_weil: so(3) shifted-generator rule matches -d(d_CE image)") {
    auto so3 = so3_model();
    const auto& W = *so3->weil();
    for (GenId a = 0; a < 3; ++a) {
        Element expect = -W.shift().apply(W.vector_field().image(a));
        CHECK(W.differential().image(W.shifted_id(a)) == expect);
    }
}

TEST_CASE("i*: kills shifted generators, fixes coordinates, dg-morphism on random input") {
    auto so3 = so3_model();
    const auto& W = *so3->weil();
    const auto& wsig = W.signature();
    const auto& csig = W.ce()->signature();

    CHECK(W.project_ce(gen(wsig, shifted_name("t1"))).is_zero());
    CHECK(W.project_ce(gen(wsig, "t2")) == gen(csig, "t2"));
    CHECK(W.project_ce(so3->omega()).is_zero());

    Sampler s(53);
    for (const auto& model : {so3, poisson_constant(), courant_exact_line(), line_model(1)}) {
        const auto& WM = *model->weil();
        for (int i = 0; i < 200; ++i) {
            Element w = s.random_element(WM.signature(), 4, 4);
            CHECK(WM.project_ce(WM.differential().apply(w)) ==
                  WM.ce()->differential().apply(WM.project_ce(w)));
        }
    }
}

TEST_CASE("include then project is the identity on the CE algebra") {
    auto so3 = so3_model();
    const auto& W = *so3->weil();
    Sampler s(59);
    for (int i = 0; i < 50; ++i) {
        Element w = s.random_element(W.ce()->signature(), 4, 4);
        CHECK(W.project_ce(W.include(w)) == w);
    }
}

TEST_CASE("the two presentations of d_W agree on random elements") {
    auto so3 = so3_model();
    const auto& W = *so3->weil();
    const Derivation cartan = commutator(W.iota_v(), W.shift());
    Sampler s(61);
    for (int i = 0; i < 100; ++i) {
        Element w = s.random_element(W.signature(), 4, 4);
        CHECK(W.differential().apply(w) == W.shift().apply(w) + cartan.apply(w));
    }
}

TEST_CASE("is_horizontal: shifted products, mixed monomials, the unit") {
    auto so3 = so3_model();
    const auto& W = *so3->weil();
    const auto& sig = W.signature();

    CHECK(is_horizontal(W, so3->omega()).horizontal);
    CHECK(is_horizontal(W, Element::unit(sig)).horizontal);

    Element mixed = gen(sig, "t1") * gen(sig, shifted_name("t1"));
    auto rep = is_horizontal(W, mixed);
    CHECK(!rep.horizontal);
    CHECK(rep.offending.size() == 1);

    // strict reading: degree-0 coordinate factors break horizontality
    auto cl = courant_exact_line();
    const auto& WC = *cl->weil();
    Element qterm = gen(WC.signature(), "q1") * gen(WC.signature(), shifted_name("xi1")) *
                    gen(WC.signature(), shifted_name("xi2"));
    CHECK(!is_horizontal(WC, qterm).horizontal);
}

TEST_CASE("is_invariant_polynomial: omega yes, dc∧dc yes, CE generator no") {
    auto so3 = so3_model();
    auto rep = is_invariant_polynomial(*so3->weil(), so3->omega());
    CHECK(rep.closed);
    CHECK(rep.horizontal);

    auto l1 = line_model(1);
    auto rep2 = is_invariant_polynomial(*l1->weil(), l1->omega());
    CHECK(rep2.closed);
    CHECK(rep2.horizontal);

    Element t1 = gen(so3->weil()->signature(), "t1");
    auto rep3 = is_invariant_polynomial(*so3->weil(), t1);
    CHECK(!rep3.closed);
    CHECK(!rep3.horizontal);
}

TEST_CASE("flatness criterion: i* kills exactly the monomials with curvature factors") {
    auto so3 = so3_model();
    const auto& W = *so3->weil();
    Sampler s(67);
    for (int i = 0; i < 100; ++i) {
        Element w = s.random_element(W.signature(), 4, 4);
        Element killed = Element::zero(W.signature());
        Element kept = Element::zero(W.signature());
        for (const auto& [m, c] : w.terms()) {
            bool has_shifted = false;
            for (const auto& f : m.factors())
                if (W.signature()->gen(f.gen).shifted) has_shifted = true;
            (has_shifted ? killed : kept).add_term(m, c);
        }
        CHECK(W.project_ce(killed).is_zero());
        CHECK(W.include(W.project_ce(kept)) == kept);
    }
}

TEST_CASE("d_W is nilpotent on every randomized Jacobi-passing model") {
    int count = 0;
    for_each_random_lie_model(71, 25, [&](const std::shared_ptr<const SymplecticModel>& m) {
        CHECK(nilpotency_witness(m->weil()->differential()) == std::nullopt);
        ++count;
    });
    CHECK(count == 25);
}
