#pragma once

#include "gcw/element.hpp"

#include <random>

namespace gcw {

/// Deterministic random values for the seeded property suites. All draws go
/// through one engine so a single seed reproduces an entire run.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    int uniform(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(rng_);
    }

    bool chance(double p) {
        std::bernoulli_distribution d(p);
        return d(rng_);
    }

    /// Small nonzero rationals; denominators kept tiny so products stay
    /// readable in failure output.
    Rat small_rat() {
        static const Rat pool[] = {Rat(1),     Rat(-1),    Rat(2),     Rat(-2),
                                   Rat(3),     Rat(-3),    Rat(1, 2),  Rat(-1, 2),
                                   Rat(1, 3),  Rat(-1, 3), Rat(3, 2),  Rat(-3, 2)};
        return pool[static_cast<std::size_t>(uniform(0, 11))];
    }

    Monomial random_monomial(const SigPtr& sig, int max_factors) {
        const int nfac = uniform(0, max_factors);
        std::vector<GenId> word;
        for (int i = 0; i < nfac; ++i)
            word.push_back(static_cast<GenId>(uniform(0, static_cast<int>(sig->size()) - 1)));
        auto [sign, m] = normalize(*sig, word);
        if (sign == 0) return Monomial();
        return m;
    }

    Element random_element(const SigPtr& sig, int max_terms, int max_factors) {
        Element e = Element::zero(sig);
        const int nterms = uniform(1, max_terms);
        for (int i = 0; i < nterms; ++i)
            e.add_term(random_monomial(sig, max_factors), small_rat());
        return e;
    }

    /// One homogeneous component of a random element (total degree).
    Element random_homogeneous(const SigPtr& sig, int max_terms, int max_factors) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            Element e = random_element(sig, max_terms, max_factors);
            auto parts = e.by_degree();
            if (parts.empty()) continue;
            int pick = uniform(0, static_cast<int>(parts.size()) - 1);
            for (auto& [deg, part] : parts)
                if (pick-- == 0) return part;
        }
        return Element::zero(sig);
    }

  private:
    std::mt19937_64 rng_;
};

} // namespace gcw
