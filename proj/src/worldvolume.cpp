#include "gcw/worldvolume.hpp"

#include <set>

namespace gcw {

Worldvolume::Worldvolume(std::vector<WorldvolumeFactor> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw Error("worldvolume must have dimension >= 1");
    if (factors_.size() > 64) throw Error("worldvolume dimension is limited to 64");
    std::set<std::string> names;
    std::size_t intervals = 0;
    for (const auto& f : factors_) {
        if (f.coord.empty()) throw Error("worldvolume coordinate with empty name");
        if (!names.insert(f.coord).second)
            throw Error("duplicate worldvolume coordinate '" + f.coord + "'");
        if (f.kind == FactorKind::interval) ++intervals;
    }
    if (intervals > 1) throw Error("worldvolume supports at most one interval factor");
}

std::optional<std::size_t> Worldvolume::find(const std::string& coord) const {
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (factors_[i].coord == coord) return i;
    return std::nullopt;
}

std::optional<std::size_t> Worldvolume::interval_index() const {
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (factors_[i].kind == FactorKind::interval) return i;
    return std::nullopt;
}

WvPtr Worldvolume::boundary() const {
    auto idx = interval_index();
    if (!idx) throw DomainError("boundary: worldvolume has no interval factor");
    std::vector<WorldvolumeFactor> rest;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (i != *idx) rest.push_back(factors_[i]);
    return std::make_shared<Worldvolume>(std::move(rest));
}

WvPtr make_torus(const std::vector<std::string>& coords) {
    std::vector<WorldvolumeFactor> f;
    f.reserve(coords.size());
    for (const auto& c : coords) f.push_back({FactorKind::circle, c});
    return std::make_shared<Worldvolume>(std::move(f));
}

} // namespace gcw
