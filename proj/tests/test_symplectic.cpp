#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gcw/render.hpp"
#include "test_support.hpp"

using namespace gcw;
using namespace gcw::testing;

namespace {

CEPtr so3_ce() { return so3_model()->ce(); }

Element expected_so3_pi(const SigPtr& sig) {
    return -(Element::generator(sig, 0) * Element::generator(sig, 1) *
             Element::generator(sig, 2));
}

} // namespace

TEST_CASE("validate: so(3) passes every axiom at grade 2") {
    RatMatrix P = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    auto rep = validate(*so3_ce(), 2, P);
    CHECK(rep.all_pass());
}

TEST_CASE("validate: grade 0 is rejected") {
    RatMatrix P = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    auto rep = validate(*so3_ce(), 0, P);
    CHECK(!rep.all_pass());
    bool found = false;
    for (const auto& item : rep.items)
        if (item.name == "positive_grade" && !item.pass) found = true;
    CHECK(found);
}

TEST_CASE("validate: Darboux grade condition and symmetry violations are itemized") {
    auto ce = so3_ce();
    SUBCASE("wrong grade") {
        RatMatrix P = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        auto rep = validate(*ce, 3, P); // weight sum is 2, not 3
        bool found = false;
        for (const auto& item : rep.items)
            if (item.name == "darboux_grade_condition" && !item.pass) found = true;
        CHECK(found);
    }
    SUBCASE("broken graded symmetry") {
        RatMatrix P = {{1, 2, 0}, {0, 1, 0}, {0, 0, 1}}; // P symmetric required for odd gens
        auto rep = validate(*ce, 2, P);
        bool found = false;
        for (const auto& item : rep.items)
            if (item.name == "graded_symmetry" && !item.pass) found = true;
        CHECK(found);
    }
    SUBCASE("singular pairing") {
        RatMatrix P = {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}};
        auto rep = validate(*ce, 2, P);
        bool found = false;
        for (const auto& item : rep.items)
            if (item.name == "nondegenerate" && !item.pass) found = true;
        CHECK(found);
    }
    SUBCASE("non-invariant pairing fails dw_closed") {
        RatMatrix P = {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}; // not ad-invariant for so(3)
        auto rep = validate(*ce, 2, P);
        bool found = false;
        for (const auto& item : rep.items)
            if (item.name == "dw_closed" && !item.pass) found = true;
        CHECK(found);
    }
}

TEST_CASE("poisson bracket: Darboux pairs, grade drop, shifted inputs rejected") {
    auto so3 = so3_model();
    const auto& sig = so3->ce()->signature();

    // {t^a, t^b} = w^{ab} = delta for the identity pairing
    for (GenId a = 0; a < 3; ++a)
        for (GenId b = 0; b < 3; ++b) {
            Element br = poisson_bracket(*so3, Element::generator(sig, a),
                                         Element::generator(sig, b));
            if (a == b)
                CHECK(br == Element::unit(sig));
            else
                CHECK(br.is_zero());
        }

    Sampler s(73);
    for (int i = 0; i < 100; ++i) {
        Element f = s.random_homogeneous(sig, 3, 3);
        Element g = s.random_homogeneous(sig, 3, 3);
        if (f.is_zero() || g.is_zero()) continue;
        Element br = poisson_bracket(*so3, f, g);
        if (br.is_zero()) continue;
        CHECK(br.homogeneous_of_weight(*f.weight() + *g.weight() - so3->grade()));
    }

    CHECK_THROWS_AS(poisson_bracket(*so3, so3->omega(), so3->omega()), SignatureMismatchError);
}

TEST_CASE("poisson bracket is bilinear") {
    auto so3 = so3_model();
    const auto& sig = so3->ce()->signature();
    Sampler s(79);
    for (int i = 0; i < 40; ++i) {
        Element f = s.random_element(sig, 3, 3);
        Element g = s.random_element(sig, 3, 3);
        Element h = s.random_element(sig, 3, 3);
        const Rat c = s.small_rat();
        CHECK(poisson_bracket(*so3, f + scale(c, g), h) ==
              poisson_bracket(*so3, f, h) + scale(c, poisson_bracket(*so3, g, h)));
        CHECK(poisson_bracket(*so3, f, g + scale(c, h)) ==
              poisson_bracket(*so3, f, g) + scale(c, poisson_bracket(*so3, f, h)));
    }
}

TEST_CASE("hamiltonian: golden elements for the four families") {
    SUBCASE("so(3): pi = -t1 t2 t3") {
        auto so3 = so3_model();
        CHECK(hamiltonian(*so3) == expected_so3_pi(so3->ce()->signature()));
    }
    SUBCASE("line models: pi = 0") {
        for (int k : {0, 1, 2}) CHECK(hamiltonian(*line_model(k)).is_zero());
    }
    SUBCASE("poisson constant: pi = -del1 del2") {
        auto pc = poisson_constant();
        const auto& sig = pc->ce()->signature();
        CHECK(hamiltonian(*pc) == -(gen(sig, "del1") * gen(sig, "del2")));
    }
    SUBCASE("courant line: pi = xi1 p1") {
        auto cl = courant_exact_line();
        const auto& sig = cl->ce()->signature();
        CHECK(hamiltonian(*cl) == gen(sig, "xi1") * gen(sig, "p1"));
    }
}

TEST_CASE("hamiltonian identities: d pi = iota_v omega, d_CE pi = 0, coordinate identity") {
    std::vector<std::shared_ptr<const SymplecticModel>> models = {
        so3_model(), poisson_constant(), poisson_lie_so3(), courant_exact_line(),
        courant_so3_double(), line_model(0), line_model(1)};
    for (const auto& m : models) {
        const auto& W = *m->weil();
        Element pi = hamiltonian(*m);
        CHECK(W.shift().apply(W.include(pi)) == W.iota_v().apply(m->omega()));
        CHECK(m->ce()->differential().apply(pi).is_zero());

        // omega_ab v^b = d pi / d x^a for every a
        const auto& sig = m->ce()->signature();
        for (GenId a = 0; a < sig->size(); ++a) {
            Element lhs = Element::zero(sig);
            for (GenId b = 0; b < sig->size(); ++b) {
                const Rat& w = m->pairing()[a][b];
                if (w == 0) continue;
                lhs += scale(w, m->ce()->differential().image(b));
            }
            CHECK(lhs == partial_left(sig, a).apply(pi));
        }
    }
}

TEST_CASE("chern-simons element: golden forms and transgression identities") {
    SUBCASE("so(3), both paper presentations") {
        auto so3 = so3_model();
        const auto& W = *so3->weil();
        const auto& sig = W.signature();
        Element cs = chern_simons_element(*so3);

        Element form1 = Element::zero(sig);
        for (GenId a = 0; a < 3; ++a)
            form1 += Element::generator(sig, a) * Element::generator(sig, W.shifted_id(a));
        form1 = scale(Rat(1, 2), form1 + W.include(expected_so3_pi(so3->ce()->signature())));
        CHECK(cs == form1);

        Element form2 = Element::zero(sig);
        for (GenId a = 0; a < 3; ++a)
            form2 += Element::generator(sig, a) * W.differential().image(a);
        // + (1/3) C_abc t^a t^b t^c = + 2 t1 t2 t3
        Element cubic = Element::generator(sig, 0) * Element::generator(sig, 1) *
                        Element::generator(sig, 2);
        form2 = scale(Rat(1, 2), form2 + scale(Rat(2), cubic));
        CHECK(cs == form2);
    }
    SUBCASE("poisson constant: cs = del_i dx^i - (1/2) pi^{ij} del_i del_j") {
        auto pc = poisson_constant();
        const auto& W = *pc->weil();
        const auto& sig = W.signature();
        Element expect = gen(sig, "del1") * gen(sig, shifted_name("x1")) +
                         gen(sig, "del2") * gen(sig, shifted_name("x2")) -
                         gen(sig, "del1") * gen(sig, "del2");
        CHECK(chern_simons_element(*pc) == expect);
    }
    SUBCASE("courant: cs = p_i dW q^i + (1/2) g_ab xi^a dW xi^b - pi") {
        for (auto model : {courant_exact_line(), courant_so3_double()}) {
            const auto& W = *model->weil();
            const auto& sig = W.signature();
            const auto& csig = model->ce()->signature();
            Element expect = Element::zero(sig);
            for (GenId g = 0; g < csig->size(); ++g) {
                const auto& decl = csig->gen(g);
                if (decl.weight == 2)
                    expect += Element::generator(sig, g) * W.differential().image(W.ce()->signature()->require(
                                  "q" + decl.name.substr(1)));
            }
            // 1/2 g_ab xi^a dW xi^b over the pairing block
            for (GenId a = 0; a < csig->size(); ++a) {
                if (csig->gen(a).weight != 1) continue;
                for (GenId b = 0; b < csig->size(); ++b) {
                    if (csig->gen(b).weight != 1) continue;
                    const Rat& gab = model->pairing()[a][b];
                    if (gab == 0) continue;
                    expect += scale(gab / 2,
                                    Element::generator(sig, a) * W.differential().image(b));
                }
            }
            expect -= W.include(hamiltonian(*model));
            CHECK(chern_simons_element(*model) == expect);
        }
    }
    SUBCASE("line models: cs = c dc") {
        for (int k : {0, 1, 2}) {
            auto lm = line_model(k);
            const auto& sig = lm->weil()->signature();
            CHECK(chern_simons_element(*lm) == gen(sig, "c") * gen(sig, shifted_name("c")));
        }
    }
}

TEST_CASE("verify_transgression: canonical triple, exact shift, zero triple") {
    auto so3 = so3_model();
    const auto& W = *so3->weil();
    Element pi = hamiltonian(*so3);
    Element cs = chern_simons_element(*so3);
    Element mu = scale(Rat(1, 2), pi);

    auto rep = verify_transgression(W, cs, so3->omega(), mu);
    CHECK(rep.pass());

    // cs + d_W(junk): first identity survives, second generically fails
    Element junk = gen(W.signature(), "t1");
    Element shifted = cs + W.differential().apply(junk);
    auto rep2 = verify_transgression(W, shifted, so3->omega(), mu);
    CHECK(rep2.differential_matches);
    CHECK(!rep2.projection_matches);

    auto rep3 = verify_transgression(W, Element::zero(W.signature()),
                                     Element::zero(W.signature()),
                                     Element::zero(W.ce()->signature()));
    CHECK(rep3.pass());
}

TEST_CASE("hamiltonian bracket probe runs and reports per generator") {
    auto so3 = so3_model();
    auto probes = hamiltonian_bracket_probe(*so3);
    CHECK(probes.size() == 3);
    // informational: every generator matches one of the two candidate signs here
    for (const auto& p : probes) CHECK((p.matches_plus || p.matches_minus));
}

TEST_CASE("randomized suite: transgression identities on Jacobi-passing models") {
    int attempts = 0;
    int accepted = 0;
    for_each_random_lie_model(
        83, 50,
        [&](const std::shared_ptr<const SymplecticModel>& m) {
            ++accepted;
            const auto& W = *m->weil();
            Element pi = hamiltonian(*m);
            Element cs = chern_simons_element(*m);
            CHECK(W.differential().apply(cs) == m->omega());
            CHECK(W.project_ce(cs) == scale(Rat(1, m->grade()), pi));
            CHECK(W.shift().apply(W.include(pi)) == W.iota_v().apply(m->omega()));
            CHECK(m->ce()->differential().apply(pi).is_zero());
        },
        &attempts);
    CHECK(accepted == 50);
    // the Jacobi filter must actually be filtering
    CHECK(attempts > accepted);
}
