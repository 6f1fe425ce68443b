#include "gcw/signature.hpp"

#include <unordered_set>

namespace gcw {

AlgebraSignature::AlgebraSignature(std::vector<GeneratorDecl> gens) : gens_(std::move(gens)) {
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const auto& g = gens_[i];
        if (!seen.insert(g.name).second)
            throw Error("duplicate generator name '" + g.name + "' in signature");
        if (g.weight < 0) throw Error("generator '" + g.name + "' has negative weight");
        if (g.form_degree != 0 && g.form_degree != 1)
            throw Error("generator '" + g.name + "' has form-degree outside {0,1}");
        if (g.shifted != (g.form_degree == 1))
            throw Error("generator '" + g.name + "': shifted flag disagrees with form-degree");
        if (g.partner) {
            if (*g.partner >= gens_.size())
                throw Error("generator '" + g.name + "' has out-of-range partner");
        }
    }
    // Partner links must be mutual and must pair a coordinate with a shifted
    // copy of the same weight.
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const auto& g = gens_[i];
        if (!g.partner) continue;
        const auto& p = gens_[*g.partner];
        if (!p.partner || *p.partner != i)
            throw Error("partner link of '" + g.name + "' is not mutual");
        if (p.weight != g.weight || p.shifted == g.shifted)
            throw Error("partner of '" + g.name + "' must be its shifted copy of equal weight");
    }
}

const GeneratorDecl& AlgebraSignature::gen(GenId id) const {
    if (id >= gens_.size()) throw UnknownGeneratorError("generator id out of range");
    return gens_[id];
}

std::optional<GenId> AlgebraSignature::find(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<GenId>(i);
    return std::nullopt;
}

GenId AlgebraSignature::require(const std::string& name) const {
    if (auto id = find(name)) return *id;
    throw UnknownGeneratorError("unknown generator '" + name + "'");
}

bool AlgebraSignature::has_partners() const {
    for (const auto& g : gens_)
        if (!g.partner) return false;
    return !gens_.empty();
}

SigPtr make_signature(const std::vector<std::pair<std::string, int>>& gens) {
    std::vector<GeneratorDecl> decls;
    decls.reserve(gens.size());
    for (const auto& [name, weight] : gens)
        decls.push_back({name, weight, 0, false, std::nullopt});
    return std::make_shared<AlgebraSignature>(std::move(decls));
}

std::string shifted_name(const std::string& base_name) { return "𝐝" + base_name; }

SigPtr weil_extension(const SigPtr& base) {
    if (!base) throw Error("weil_extension: null signature");
    const auto n = static_cast<GenId>(base->size());
    std::vector<GeneratorDecl> decls;
    decls.reserve(2 * n);
    for (GenId i = 0; i < n; ++i) {
        const auto& g = base->gen(i);
        if (g.shifted) throw Error("weil_extension: signature already carries shifted generators");
        decls.push_back({g.name, g.weight, 0, false, n + i});
    }
    for (GenId i = 0; i < n; ++i) {
        const auto& g = base->gen(i);
        decls.push_back({shifted_name(g.name), g.weight, 1, true, i});
    }
    return std::make_shared<AlgebraSignature>(std::move(decls));
}

} // namespace gcw
