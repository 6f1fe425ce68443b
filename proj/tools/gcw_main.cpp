#include "gcw/aksz.hpp"
#include "gcw/report.hpp"
#include "gcw/sampling.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitParseError = 2;

struct Options {
    std::string format = "plain";
    std::uint64_t seed = 0;
    std::size_t max_terms = 0;
    bool float_check = false;
};

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void print_parse_errors(const std::string& path, const std::vector<gcw::ParseError>& errors) {
    for (const auto& e : errors)
        std::cout << "error[" << e.cls << "] " << path << ":" << e.line << ":" << e.col << ": "
                  << e.message << "\n";
}

/// Loads and builds a model file. Returns nullopt after printing
/// diagnostics; sets `exit_code` accordingly.
std::optional<gcw::ModelBuildResult> load_spec(const std::string& path, int& exit_code) {
    auto text = read_file(path);
    if (!text) {
        std::cout << "error[io] cannot read '" << path << "'\n";
        exit_code = kExitParseError;
        return std::nullopt;
    }
    auto parsed = gcw::parse_spec(*text);
    if (!parsed.spec) {
        print_parse_errors(path, parsed.errors);
        exit_code = kExitParseError;
        return std::nullopt;
    }
    return gcw::build_from_spec(*parsed.spec);
}

gcw::Format format_of(const Options& opt) {
    auto f = gcw::parse_format(opt.format);
    return f ? *f : gcw::Format::plain;
}

/// Seeded random sample of the structure identities on the built algebra:
/// d_W^2 = 0 and i* d_W = d_CE i* on random Weil elements.
void seeded_structure_checks(const gcw::ModelBuildResult& built, std::uint64_t seed,
                             gcw::ReportBuilder& report) {
    if (!built.model) return;
    const auto& W = *built.model->weil();
    gcw::Sampler sampler(seed);
    const int rounds = 20;
    bool dw2 = true;
    bool morphism = true;
    for (int i = 0; i < rounds; ++i) {
        gcw::Element w = sampler.random_element(W.signature(), 4, 4);
        if (!W.differential().apply(W.differential().apply(w)).is_zero()) dw2 = false;
        gcw::Element lhs = W.project_ce(W.differential().apply(w));
        gcw::Element rhs = built.ce->differential().apply(W.project_ce(w));
        if (!(lhs == rhs)) morphism = false;
    }
    report.check({"dw_squared_random_sample", dw2, "", false});
    report.check({"projection_chain_map_random_sample", morphism, "", false});
}

int cmd_check(const std::string& path, const Options& opt) {
    int exit_code = kExitOk;
    auto built = load_spec(path, exit_code);
    if (!built) return exit_code;

    gcw::ReportBuilder report("check");
    report.kv("model", built->ce ? built->ce->name() : "(unbuilt)");
    report.checks(built->checks);
    if (built->model) {
        report.kv("grade", std::to_string(built->model->grade()));
        seeded_structure_checks(*built, opt.seed, report);
    } else if (built->ce && built->checks.all_pass()) {
        // no symplectic block: still exercise the Weil extension
        try {
            gcw::build_weil(built->ce);
            report.check({"weil_nilpotent", true, "", false});
        } catch (const gcw::Error& e) {
            report.check({"weil_nilpotent", false, e.what(), false});
        }
    }
    std::cout << report.render(format_of(opt));
    return report.all_checks_pass() ? kExitOk : kExitCheckFailure;
}

int cmd_derive(const std::string& path, const Options& opt) {
    int exit_code = kExitOk;
    auto built = load_spec(path, exit_code);
    if (!built) return exit_code;

    gcw::ReportBuilder report("derive");
    report.kv("model", built->ce ? built->ce->name() : "(unbuilt)");
    report.checks(built->checks);
    if (!built->model) {
        report.check({"symplectic_block_present", false,
                      "derive needs a spec with a 'symplectic' block", false});
        std::cout << report.render(format_of(opt));
        return kExitCheckFailure;
    }
    const auto& model = *built->model;
    const auto& W = *model.weil();
    const gcw::Format fmt = format_of(opt);
    auto render = [&](const gcw::Element& e) {
        return fmt == gcw::Format::latex ? gcw::render_latex(e) : gcw::render_plain(e);
    };

    report.kv("grade", std::to_string(model.grade()));
    const gcw::Element pi = gcw::hamiltonian(model);
    const gcw::Element cs = gcw::chern_simons_element(model);
    auto trans = gcw::verify_transgression(W, cs, model.omega(),
                                           gcw::scale(gcw::Rat(1, model.grade()), pi));
    report.check({"transgression_dw_cs_equals_omega", trans.differential_matches, "", false});
    report.check({"transgression_proj_cs_equals_pi_over_n", trans.projection_matches, "", false});

    const auto& sig = *W.signature();
    for (gcw::GenId g = 0; g < sig.size(); ++g)
        report.element("d_W[" + sig.gen(g).name + "]", render(W.differential().image(g)));
    report.element("omega", render(model.omega()));
    report.element("pi", render(pi));
    report.element("cs", render(cs));

    // Exploratory only: how {pi, -} compares with ±d_CE on generators.
    std::ostringstream probe;
    for (const auto& p : gcw::hamiltonian_bracket_probe(model)) {
        if (!probe.str().empty()) probe << " ";
        probe << model.ce()->signature()->gen(p.gen).name << ":"
              << (p.matches_plus && p.matches_minus ? "both"
                  : p.matches_plus                  ? "+d_CE"
                  : p.matches_minus                 ? "-d_CE"
                                                    : "neither");
    }
    report.kv("bracket_probe", probe.str());

    std::cout << report.render(fmt);
    return report.all_checks_pass() ? kExitOk : kExitCheckFailure;
}

std::optional<gcw::FieldConfiguration> load_field(const std::string& path,
                                                  std::shared_ptr<const gcw::SymplecticModel> model,
                                                  int& exit_code) {
    auto text = read_file(path);
    if (!text) {
        std::cout << "error[io] cannot read '" << path << "'\n";
        exit_code = kExitParseError;
        return std::nullopt;
    }
    auto parsed = gcw::parse_field_spec(*text);
    if (!parsed.spec) {
        print_parse_errors(path, parsed.errors);
        exit_code = kExitParseError;
        return std::nullopt;
    }
    try {
        return gcw::build_field_configuration(*parsed.spec, std::move(model));
    } catch (const gcw::Error& e) {
        std::cout << "error[field] " << e.what() << "\n";
        exit_code = kExitCheckFailure;
        return std::nullopt;
    }
}

int with_model_and_field(const std::string& command, const std::string& spec_path,
                         const std::string& field_path, const Options& opt,
                         const std::function<int(const gcw::ModelBuildResult&,
                                                 const gcw::FieldConfiguration&)>& run) {
    int exit_code = kExitOk;
    auto built = load_spec(spec_path, exit_code);
    if (!built) return exit_code;
    if (!built->model) {
        gcw::ReportBuilder report(command);
        report.kv("model", built->ce ? built->ce->name() : "(unbuilt)");
        report.checks(built->checks);
        if (built->checks.all_pass())
            report.check({"symplectic_block_present", false,
                          "this command needs a spec with a 'symplectic' block", false});
        std::cout << report.render(format_of(opt));
        return kExitCheckFailure;
    }
    auto field = load_field(field_path, built->model, exit_code);
    if (!field) return exit_code;
    return run(*built, *field);
}

int cmd_action(const std::string& spec_path, const std::string& field_path, const Options& opt) {
    return with_model_and_field(
        "action", spec_path, field_path, opt,
        [&](const gcw::ModelBuildResult& built, const gcw::FieldConfiguration& A) {
            gcw::ReportBuilder report("action");
            report.kv("model", built.ce->name());
            gcw::ActionReport act;
            try {
                act = gcw::aksz_action(A);
            } catch (const gcw::DomainError& e) {
                std::cout << "error[domain] " << e.what() << "\n";
                return kExitCheckFailure;
            }
            report.kv("worldvolume_closed", act.closed ? "yes" : "no");
            report.scalar("value_cs", act.value_cs);
            report.scalar("value_lagrangian", act.value_lagrangian);
            report.scalar("kinetic_term", act.kinetic_term);
            report.scalar("hamiltonian_term", act.hamiltonian_term);
            report.scalar("difference", act.difference);
            if (act.closed)
                report.check({"action_equality", act.equal(), "", false});
            else
                report.check({"action_equality", false,
                              "open worldvolume: difference reported, not asserted", true});
            if (opt.float_check) {
                const double q_cs = gcw::quadrature(act.cs_form);
                const double e_cs = act.value_cs.to_double();
                const double q_lag = gcw::quadrature(act.lagrangian_form);
                const double e_lag = act.value_lagrangian.to_double();
                auto ok = [](double q, double e) {
                    return std::abs(q - e) <= 1e-9 * std::max(1.0, std::abs(e));
                };
                report.check({"float_cross_check", ok(q_cs, e_cs) && ok(q_lag, e_lag), "", false});
            }
            std::cout << report.render(format_of(opt));
            return report.all_checks_pass() ? kExitOk : kExitCheckFailure;
        });
}

int cmd_stokes(const std::string& spec_path, const std::string& field_path, const Options& opt) {
    return with_model_and_field(
        "stokes", spec_path, field_path, opt,
        [&](const gcw::ModelBuildResult& built, const gcw::FieldConfiguration& A) {
            gcw::ReportBuilder report("stokes");
            report.kv("model", built.ce->name());
            gcw::StokesReport st;
            try {
                st = gcw::stokes_check(A);
            } catch (const gcw::DomainError& e) {
                std::cout << "error[domain] " << e.what() << "\n";
                return kExitCheckFailure;
            }
            report.kv("orientation_sign", st.orientation_sign > 0 ? "+1" : "-1");
            report.scalar("boundary_at_1", st.at_end1);
            report.scalar("boundary_at_0", st.at_end0);
            report.scalar("boundary_total", st.boundary_value);
            report.scalar("bulk_omega_of_curvature", st.bulk_value);
            report.check({"stokes_equality", st.equal(), "", false});
            std::cout << report.render(format_of(opt));
            return report.all_checks_pass() ? kExitOk : kExitCheckFailure;
        });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gcw — graded Chern-Weil engine: validate algebroid specs, derive "
                 "Hamiltonian/Chern-Simons data, evaluate AKSZ actions exactly"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "Output format: plain|latex|structured")
        ->default_val("plain");
    app.add_option("--seed", opt.seed, "Seed for the randomized structure suites")->default_val(0);
    app.add_option("--max-terms", opt.max_terms,
                   "Abort if any intermediate expression exceeds this many terms (0 = unlimited)")
        ->default_val(0);

    std::string spec_path, field_path;

    auto* check = app.add_subcommand("check", "Parse and validate an algebroid spec");
    check->fallthrough();
    check->add_option("spec", spec_path, "Path to the .alg file")->required();

    auto* derive = app.add_subcommand("derive", "Derive omega, pi and cs with identity checks");
    derive->fallthrough();
    derive->add_option("spec", spec_path, "Path to the .alg file")->required();

    auto* action = app.add_subcommand("action", "Evaluate the action functional both ways");
    action->fallthrough();
    action->add_option("spec", spec_path, "Path to the .alg file")->required();
    action->add_option("field", field_path, "Path to the field file")->required();
    action->add_flag("--float-check", opt.float_check, "Run the quadrature cross-check");

    auto* stokes = app.add_subcommand("stokes", "Boundary-vs-bulk check on a cylinder");
    stokes->fallthrough();
    stokes->add_option("spec", spec_path, "Path to the .alg file")->required();
    stokes->add_option("field", field_path, "Path to the field file")->required();

    CLI11_PARSE(app, argc, argv);

    if (!gcw::parse_format(opt.format)) {
        std::cout << "error[usage] unknown format '" << opt.format << "'\n";
        return kExitParseError;
    }
    gcw::set_term_budget(opt.max_terms);

    try {
        if (check->parsed()) return cmd_check(spec_path, opt);
        if (derive->parsed()) return cmd_derive(spec_path, opt);
        if (action->parsed()) return cmd_action(spec_path, field_path, opt);
        if (stokes->parsed()) return cmd_stokes(spec_path, field_path, opt);
    } catch (const gcw::TermBudgetError& e) {
        std::cout << "error[budget] " << e.what() << "\n";
        return kExitCheckFailure;
    } catch (const gcw::Error& e) {
        std::cout << "error[internal] " << e.what() << "\n";
        return kExitCheckFailure;
    } catch (const std::exception& e) {
        std::cout << "error[internal] " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitOk;
}
