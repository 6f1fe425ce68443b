#pragma once

#include "gcw/errors.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gcw {

using GenId = std::uint32_t;

/// One generator of a free graded-commutative algebra. `weight` is the
/// grade of the underlying coordinate; `form_degree` is 1 exactly for the
/// shifted partner of a coordinate. Koszul signs are governed by the total
/// degree weight + form_degree, never by the weight alone.
struct GeneratorDecl {
    std::string name;
    int weight = 0;
    int form_degree = 0; // 0 or 1
    bool shifted = false;
    std::optional<GenId> partner; // links a coordinate and its shifted copy

    int total_degree() const { return weight + form_degree; }
    bool odd() const { return total_degree() % 2 != 0; }

    bool operator==(const GeneratorDecl&) const = default;
};

/// Ordered generator table. Declaration order doubles as the monomial
/// normal-form order, so a signature is immutable once built.
class AlgebraSignature {
  public:
    explicit AlgebraSignature(std::vector<GeneratorDecl> gens);

    std::size_t size() const { return gens_.size(); }
    const GeneratorDecl& gen(GenId id) const;
    const std::vector<GeneratorDecl>& generators() const { return gens_; }

    std::optional<GenId> find(const std::string& name) const;
    GenId require(const std::string& name) const;

    /// True when every generator has a partner (a Weil-type signature,
    /// domain of the shift differential and the Euler contraction).
    bool has_partners() const;

    bool operator==(const AlgebraSignature& other) const { return gens_ == other.gens_; }

  private:
    std::vector<GeneratorDecl> gens_;
};

using SigPtr = std::shared_ptr<const AlgebraSignature>;

/// Unshifted signature from (name, weight) pairs; weights must be >= 0.
SigPtr make_signature(const std::vector<std::pair<std::string, int>>& gens);

/// Doubles a coordinate-only signature with shifted partners: generator i
/// gains partner n + i of the same weight and form-degree 1, named by
/// prefixing the bold-d mark. Declaration order: originals first.
SigPtr weil_extension(const SigPtr& base);

/// Display name of the shifted copy of `base_name`.
std::string shifted_name(const std::string& base_name);

inline bool same_signature(const SigPtr& a, const SigPtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace gcw
