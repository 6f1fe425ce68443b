#pragma once

#include "gcw/derivation.hpp"

#include <memory>

namespace gcw {

/// One named item of a structured check report.
struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;   // witness rendering on failure, empty otherwise
    bool skipped = false; // skipped items do not count as failures
};

struct CheckReport {
    std::vector<CheckItem> items;
    bool all_pass() const {
        for (const auto& i : items)
            if (!i.pass && !i.skipped) return false;
        return true;
    }
    void add(std::string name, bool pass, std::string detail = "") {
        items.push_back({std::move(name), pass, std::move(detail), false});
    }
    void add_skipped(std::string name, std::string detail = "") {
        items.push_back({std::move(name), false, std::move(detail), true});
    }
};

/// Returns the generator on which d*d fails first, together with the
/// offending value, or nullopt when d is nilpotent.
std::optional<std::pair<GenId, Element>> nilpotency_witness(const Derivation& d);

/// A free graded-commutative algebra on coordinate generators together with
/// a square-zero degree-one derivation.
class CEAlgebra {
  public:
    /// Throws BuildError when d_ce fails d^2 = 0; the witness is rendered
    /// into the message.
    CEAlgebra(std::string name, SigPtr sig, Derivation d_ce);

    const std::string& name() const { return name_; }
    const SigPtr& signature() const { return sig_; }
    const Derivation& differential() const { return d_ce_; }

  private:
    std::string name_;
    SigPtr sig_;
    Derivation d_ce_;
};

using CEPtr = std::shared_ptr<const CEAlgebra>;

/// The Weil algebra of a CE algebra: the signature doubled by shifted
/// partners, with differential d_W agreeing with both presentations
///   d_W x = d_CE x + dx,   d_W dx = -d(d_CE x)       (generator rules)
///   d_W = d + L_v                                     (Cartan form)
/// — the agreement and d_W^2 = 0 are verified at construction.
class WeilAlgebra {
  public:
    explicit WeilAlgebra(CEPtr ce);

    const CEPtr& ce() const { return ce_; }
    const SigPtr& signature() const { return sig_; }
    const Derivation& differential() const { return d_w_; }
    const Derivation& shift() const { return shift_d_; }
    const Derivation& vector_field() const { return v_; }
    const Derivation& iota_v() const { return iota_v_; }
    const Derivation& iota_euler() const { return iota_eps_; }

    std::size_t base_size() const { return ce_->signature()->size(); }
    GenId shifted_id(GenId base) const { return static_cast<GenId>(base + base_size()); }

    /// Inclusion of the CE algebra as the unshifted subalgebra.
    Element include(const Element& ce_elem) const;

    /// The projection i*: x -> x, dx -> 0; a dg-algebra morphism onto CE.
    Element project_ce(const Element& w) const;

  private:
    CEPtr ce_;
    SigPtr sig_;
    Derivation d_w_;
    Derivation shift_d_;
    Derivation v_;
    Derivation iota_v_;
    Derivation iota_eps_;
};

using WeilPtr = std::shared_ptr<const WeilAlgebra>;

WeilPtr build_weil(CEPtr ce);

struct HorizontalityReport {
    bool horizontal = true;
    std::vector<Monomial> offending;
};

/// True iff every monomial is a product of shifted generators only.
HorizontalityReport is_horizontal(const WeilAlgebra& W, const Element& w);

struct InvariantPolynomialReport {
    bool closed = false;
    bool horizontal = false;
    bool invariant() const { return closed && horizontal; }
};

InvariantPolynomialReport is_invariant_polynomial(const WeilAlgebra& W, const Element& w);

} // namespace gcw
