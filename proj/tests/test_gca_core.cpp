#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gcw/render.hpp"
#include "test_support.hpp"

using namespace gcw;
using namespace gcw::testing;

TEST_CASE("normalize: Koszul signs and odd squares") {
    auto sig = mixed_signature();
    const GenId t1 = sig->require("t1"), t2 = sig->require("t2");

    SUBCASE("odd square vanishes") {
        auto [sign, mono] = normalize(*sig, std::vector<GenId>{t1, t1});
        CHECK(sign == 0);
    }
    SUBCASE("odd-even swap has no sign") {
        const GenId b = sig->require("b");
        auto [sign, mono] = normalize(*sig, std::vector<GenId>{b, t1});
        CHECK(sign == 1);
        CHECK(mono.factors().size() == 2);
        CHECK(mono.factors()[0].gen == t1);
    }
    SUBCASE("adjacent odd-odd swap flips") {
        auto [sign, mono] = normalize(*sig, std::vector<GenId>{t2, t1});
        CHECK(sign == -1);
    }
}

TEST_CASE("normalize: three odd generators out of order") {
    auto sig = odd_triple();
    const GenId t1 = 0, t2 = 1, t3 = 2;
    // [t2, t1, t3]: one adjacent odd-odd swap
    auto [sign, mono] = normalize(*sig, std::vector<GenId>{t2, t1, t3});
    CHECK(sign == -1);
    CHECK(mono.degree() == 3);
    CHECK(mono.factors() == std::vector<Monomial::Factor>{{t1, 1}, {t2, 1}, {t3, 1}});
}

TEST_CASE("normalize is idempotent on normal forms") {
    Sampler s(7);
    auto sig = mixed_signature();
    for (int i = 0; i < 200; ++i) {
        Monomial m = s.random_monomial(sig, 5);
        std::vector<GenId> word;
        for (const auto& f : m.factors())
            for (std::uint32_t e = 0; e < f.exp; ++e) word.push_back(f.gen);
        auto [sign, again] = normalize(*sig, word);
        CHECK(sign == 1);
        CHECK(again == m);
    }
}

TEST_CASE("multiply: unit, odd square, hand-expanded product") {
    auto sig = odd_triple();
    Element t1 = gen(sig, "t1"), t2 = gen(sig, "t2");

    CHECK(Element::unit(sig) * t1 == t1);
    CHECK((t1 * t1).is_zero());

    // (t1 + t2)(t1 - t2) = -t1 t2 + t2 t1 = -2 t1 t2
    Element lhs = (t1 + t2) * (t1 - t2);
    Element expected = scale(Rat(-2), t1 * t2);
    CHECK(lhs == expected);
}

TEST_CASE("add and scale prune zero terms") {
    auto sig = odd_triple();
    Element t1 = gen(sig, "t1");
    CHECK((t1 + scale(Rat(-1), t1)).is_zero());
    CHECK(scale(Rat(0), t1).is_zero());
    Element pi = scale(Rat(-1), gen(sig, "t1") * gen(sig, "t2") * gen(sig, "t3"));
    CHECK((pi + (-pi)).is_zero());
}

TEST_CASE("graded commutativity, associativity, distributivity on random elements") {
    Sampler s(11);
    auto sig = mixed_signature();
    for (int i = 0; i < 120; ++i) {
        Element a = s.random_homogeneous(sig, 3, 3);
        Element b = s.random_homogeneous(sig, 3, 3);
        Element c = s.random_element(sig, 3, 3);
        if (a.is_zero() || b.is_zero()) continue;
        const int da = *a.degree(), db = *b.degree();
        Element ab = a * b;
        Element ba = b * a;
        CHECK(ab == ((da * db) % 2 == 0 ? ba : -ba));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("substitute: identity, kill, algebra morphism") {
    auto sig = mixed_signature();
    const auto size = static_cast<GenId>(sig->size());

    std::vector<std::optional<Element>> identity(size);
    for (GenId g = 0; g < size; ++g) identity[g] = Element::generator(sig, g);

    Element w = gen(sig, "t1") * gen(sig, "b") + scale(Rat(1, 2), gen(sig, "q") * gen(sig, "q"));
    CHECK(substitute(w, identity, sig) == w);

    SUBCASE("shifted-to-zero substitution kills") {
        auto twogen = make_signature({{"c", 3}});
        auto weil = weil_extension(twogen);
        Element dc = Element::generator(weil, 1);
        std::vector<std::optional<Element>> images(2);
        images[0] = Element::generator(weil, 0);
        images[1] = Element::zero(weil);
        CHECK(substitute(dc * dc, images, weil).is_zero());
    }

    SUBCASE("missing image throws") {
        std::vector<std::optional<Element>> none(size);
        CHECK_THROWS_AS(substitute(w, none, sig), Error);
    }

    SUBCASE("degree mismatch throws unless unchecked") {
        std::vector<std::optional<Element>> bad = identity;
        bad[sig->require("t1")] = gen(sig, "b"); // degree 2 into degree 1
        CHECK_THROWS_AS(substitute(w, bad, sig), DegreeMismatchError);
        CHECK_NOTHROW(substitute(w, bad, sig, DegreeCheck::off));
    }

    SUBCASE("multiplicative on random pairs") {
        Sampler s(13);
        // a random degree-preserving assignment
        std::vector<std::optional<Element>> images(size);
        for (GenId g = 0; g < size; ++g) {
            Element img = Element::zero(sig);
            for (int tries = 0; tries < 40 && img.is_zero(); ++tries) {
                Element cand = s.random_homogeneous(sig, 2, 3);
                if (!cand.is_zero() && cand.homogeneous_of_degree(sig->gen(g).total_degree()))
                    img = cand;
            }
            if (img.is_zero()) img = Element::generator(sig, g);
            images[g] = img;
        }
        for (int i = 0; i < 60; ++i) {
            Element a = s.random_element(sig, 3, 3);
            Element b = s.random_element(sig, 3, 3);
            CHECK(substitute(a * b, images, sig) == substitute(a, images, sig) * substitute(b, images, sig));
        }
    }
}

TEST_CASE("signature mismatches are rejected") {
    auto a = odd_triple();
    auto b = mixed_signature();
    CHECK_THROWS_AS(gen(a, "t1") + gen(b, "t1"), SignatureMismatchError);
    CHECK_THROWS_AS(gen(a, "t1") * gen(b, "t1"), SignatureMismatchError);
    CHECK_THROWS_AS(normalize(*a, std::vector<GenId>{99}), UnknownGeneratorError);
}

TEST_CASE("degree queries flag mixed elements") {
    auto sig = mixed_signature();
    Element mixed = gen(sig, "t1") + gen(sig, "b");
    CHECK(!mixed.degree().has_value());
    CHECK(gen(sig, "t1").degree() == 1);
    CHECK(gen(sig, "q").degree() == 0);
    CHECK(Element::zero(sig).degree() == std::nullopt);
    CHECK(mixed.homogeneous_of_degree(1) == false);
}

TEST_CASE("rendering is canonical and deterministic") {
    auto sig = odd_triple();
    Element e = scale(Rat(1, 2), gen(sig, "t1") * gen(sig, "t2")) - gen(sig, "t3");
    CHECK(render_plain(e) == "-t3 + 1/2*t1*t2");
    CHECK(render_plain(Element::zero(sig)) == "0");
    CHECK(render_plain(Element::constant(sig, Rat(-3, 4))) == "-3/4");
}
