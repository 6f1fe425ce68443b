#pragma once

#include "gcw/errors.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gcw {

enum class FactorKind { circle, interval };

struct WorldvolumeFactor {
    FactorKind kind;
    std::string coord;
    bool operator==(const WorldvolumeFactor&) const = default;
};

/// Oriented product of unit circles (coordinates in [0,1)) and at most one
/// unit interval. Factor order fixes the orientation and the canonical
/// ordering of coordinate differentials.
class Worldvolume {
  public:
    explicit Worldvolume(std::vector<WorldvolumeFactor> factors);

    std::size_t dimension() const { return factors_.size(); }
    const std::vector<WorldvolumeFactor>& factors() const { return factors_; }
    const WorldvolumeFactor& factor(std::size_t i) const { return factors_.at(i); }

    std::optional<std::size_t> find(const std::string& coord) const;
    std::optional<std::size_t> interval_index() const;
    bool closed() const { return !interval_index().has_value(); }

    /// The boundary torus: the same circle factors with the interval
    /// removed. Only valid when an interval is present.
    std::shared_ptr<const Worldvolume> boundary() const;

    bool operator==(const Worldvolume& o) const { return factors_ == o.factors_; }

  private:
    std::vector<WorldvolumeFactor> factors_;
};

using WvPtr = std::shared_ptr<const Worldvolume>;

WvPtr make_torus(const std::vector<std::string>& coords);

inline bool same_worldvolume(const WvPtr& a, const WvPtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace gcw
