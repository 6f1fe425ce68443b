#pragma once

#include "gcw/fieldform.hpp"
#include "gcw/models.hpp"

namespace gcw {

/// A sigma-model field: differential forms assigned to the coordinate
/// generators of a model, with the shifted generators forced to the
/// curvatures F^a = d(A^a) - A(d_CE x^a) so that evaluation is a chain map
/// W -> Ω•(Σ).
class FieldConfiguration {
  public:
    FieldConfiguration(WvPtr wv, std::shared_ptr<const SymplecticModel> model,
                       std::vector<FieldForm> images);

    const WvPtr& worldvolume() const { return wv_; }
    const std::shared_ptr<const SymplecticModel>& model() const { return model_; }

    const FieldForm& image(GenId g) const { return images_.at(g); }
    const FieldForm& curvature(GenId g) const { return curvatures_.at(g); }
    bool is_flat() const;

    /// Image of an arbitrary Weil-algebra element under the induced
    /// dg-algebra morphism.
    FieldForm evaluate(const Element& w) const;

    /// Pullback to the slice t = endpoint of the interval factor.
    FieldConfiguration restrict_to_end(int endpoint) const;

  private:
    WvPtr wv_;
    std::shared_ptr<const SymplecticModel> model_;
    std::vector<FieldForm> images_;
    std::vector<FieldForm> curvatures_;
};

struct ActionReport {
    CircleScalar value_cs;         // ∫ cs(A)
    CircleScalar value_lagrangian; // ∫ (1/2 w_ab A^a dA^b - A(pi))
    CircleScalar difference;
    CircleScalar kinetic_term;     // the two Lagrangian summands separately
    CircleScalar hamiltonian_term;
    FieldForm cs_form;         // integrands, kept for the quadrature cross-check
    FieldForm lagrangian_form;
    bool closed = false;
    bool equal() const { return difference.is_zero(); }
};

/// Both routes to the action value; on a closed worldvolume they agree
/// exactly. Worldvolume dimension must be grade + 1.
ActionReport aksz_action(const FieldConfiguration& A);

struct StokesReport {
    CircleScalar boundary_value; // oriented sum over the two end slices
    CircleScalar bulk_value;     // ∫_N omega(F)
    CircleScalar at_end1;
    CircleScalar at_end0;
    int orientation_sign = 1;
    bool equal() const;
};

/// Boundary-vs-bulk identity on a cylinder: the worldvolume must contain
/// exactly one interval factor and have dimension grade + 2. The boundary
/// carries the orientation (slice at 1) - (slice at 0), transported through
/// the factor ordering.
StokesReport stokes_check(const FieldConfiguration& A);

/// Parsed field file: worldvolume line plus one expression per generator.
struct FieldSpec {
    std::vector<WorldvolumeFactor> factors;
    struct ImageLine {
        std::string gen;
        std::string expr;
        SourceLoc loc;
    };
    std::vector<ImageLine> images;
};

struct FieldParseResult {
    std::optional<FieldSpec> spec;
    std::vector<ParseError> errors;
};

FieldParseResult parse_field_spec(const std::string& text);

/// Resolves a parsed field file against a model: generators without an
/// image line get the zero form. Throws BuildError on unknown generators or
/// degree mismatches.
FieldConfiguration build_field_configuration(const FieldSpec& spec,
                                             std::shared_ptr<const SymplecticModel> model);

/// Expression parser for field files (differentials, sin/cos, interval
/// powers); exposed for tests.
std::optional<FieldForm> parse_field_expr(const std::string& text, const WvPtr& wv,
                                          std::vector<ParseError>& errors, std::size_t line = 0);

} // namespace gcw
