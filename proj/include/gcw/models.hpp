#pragma once

#include "gcw/symplectic.hpp"

#include <optional>

namespace gcw {

struct SourceLoc {
    std::size_t line = 0;
    std::size_t col = 0;
};

/// Parsed form of an .alg file: generator table, differential expressions
/// (kept as text until build), optional symplectic block.
struct AlgebroidSpec {
    struct Generator {
        std::string name;
        int grade = 0;
        SourceLoc loc;
    };
    struct Differential {
        std::string gen;
        std::string expr;
        SourceLoc loc;
    };
    struct Pair {
        std::string a;
        std::string b;
        Rat value;
        SourceLoc loc;
    };

    std::string name;
    std::vector<Generator> generators;
    std::vector<Differential> differentials;
    std::optional<int> symplectic_grade;
    std::vector<Pair> pairs;
};

struct ParseError {
    std::size_t line = 0;
    std::size_t col = 0;
    std::string cls; // syntax | bad-literal | bad-grade | duplicate-generator |
                     // duplicate-differential | unknown-identifier | structure
    std::string message;
};

struct SpecParseResult {
    std::optional<AlgebroidSpec> spec; // set only when errors is empty
    std::vector<ParseError> errors;
};

/// Parses an .alg document. All syntax and name-resolution problems are
/// collected with line/column; nothing is silently accepted.
SpecParseResult parse_spec(const std::string& text);

/// Result of turning a spec into algebra objects. `checks` carries the
/// itemized pass/fail list (nilpotency, pairing axioms, ...); `model` is
/// set when the spec has a symplectic block and every check passed.
struct ModelBuildResult {
    CEPtr ce;
    std::shared_ptr<const SymplecticModel> model;
    CheckReport checks;
    bool ok() const { return checks.all_pass(); }
};

ModelBuildResult build_from_spec(const AlgebroidSpec& spec);

/// Canonical .alg rendering of a built model; parses back to an equal model.
std::string serialize(const SymplecticModel& m, const std::string& name);

/// Parses an expression of the .alg grammar over `sig`. Returns nullopt and
/// fills `errors` on failure. `line` seeds the reported locations.
std::optional<Element> parse_element_expr(const std::string& text, const SigPtr& sig,
                                          std::vector<ParseError>& errors, std::size_t line = 0);

/// Lie algebra with invariant pairing: d t^a = -1/2 C^a_{bc} t^b t^c,
/// omega = 1/2 P_ab dt^a dt^b, grade 2. C is indexed [a][b][c].
std::shared_ptr<const SymplecticModel> lie_algebra_model(
    const std::vector<std::vector<std::vector<Rat>>>& C, const RatMatrix& P,
    const std::string& name = "lie");

/// so(3) with C^a_bc the Levi-Civita tensor and P the identity.
std::shared_ptr<const SymplecticModel> so3_model();

/// Poisson structure on coordinates x1..xm: entries of the tensor are
/// expressions of the .alg grammar in the x's. Grade 1.
std::shared_ptr<const SymplecticModel> poisson_model(
    std::size_t m, const std::vector<std::vector<std::string>>& tensor,
    const std::string& name = "poisson");

/// Courant data: base coordinates q1..qm (grade 0), frame xi1..xir
/// (grade 1), momenta p1..pm (grade 2); g constant symmetric invertible,
/// anchor P[i][a] and torsion T[a][b][c] are expressions in the q's.
/// Grade 2; d^2 = 0 encodes the Courant axioms.
std::shared_ptr<const SymplecticModel> courant_model(
    std::size_t m, std::size_t r, const RatMatrix& g,
    const std::vector<std::vector<std::string>>& P,
    const std::vector<std::vector<std::vector<std::string>>>& T,
    const std::string& name = "courant");

/// One generator c of odd weight 2k+1 with zero differential and
/// omega = dc ∧ dc; grade 4k+2.
std::shared_ptr<const SymplecticModel> line_model(int k);

/// General entry behind line_model: refuses even weights, where the only
/// binary invariant polynomial is zero.
std::shared_ptr<const SymplecticModel> line_model_of_weight(int weight);

} // namespace gcw
