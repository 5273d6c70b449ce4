// nadosc: command-line front end for the non-Abelian Dirac oscillator
// toolkit. Subcommands: verify-algebra, gauge-check, fields, spectrum,
// symmetry. Results go to stdout or files; diagnostics to stderr.
// Exit codes: 0 all asserted checks pass, 1 check or runtime failure,
// 2 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nadosc/clifford.hpp"
#include "nadosc/config.hpp"
#include "nadosc/gauge_algebra.hpp"
#include "nadosc/gauge_poly.hpp"
#include "nadosc/hamiltonian.hpp"
#include "nadosc/nonabelian_fields.hpp"
#include "nadosc/report.hpp"
#include "nadosc/results_io.hpp"
#include "nadosc/symmetry.hpp"

namespace {

using namespace nadosc;

RunConfig load_config(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("", "cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    RunConfig c = parse_config(buf.str());
    if (const char* tol = std::getenv("NADOSC_TOL"))
        apply_tolerance_override(c, tol);
    return c;
}

int emit_report(const CheckReport& report) {
    std::cout << report_to_text(report);
    std::cout.flush();
    return report.all_passed() ? 0 : 1;
}

int run_verify_algebra() {
    const GammaSet g = build_dirac_set();
    CheckReport report = verify_clifford(g);

    const ComplexMatrix i4 = ComplexMatrix::identity(4);
    report.add_check("beta_squared", max_abs(g.beta * g.beta - i4), 0.0);
    for (int k = 1; k <= 3; ++k)
        report.add_check("alpha_squared_" + std::to_string(k),
                         max_abs(g.alpha[k - 1] * g.alpha[k - 1] - i4), 0.0);
    for (int k = 1; k <= 3; ++k)
        report.add_check(
            "alpha_beta_anticommutator_" + std::to_string(k),
            max_abs(bracket(g.alpha[k - 1], g.beta, BracketKind::Anticommutator)),
            0.0);
    for (int i = 1; i <= 3; ++i)
        for (int j = i; j <= 3; ++j) {
            ComplexMatrix ac =
                bracket(g.alpha[i - 1], g.alpha[j - 1], BracketKind::Anticommutator);
            if (i == j) ac -= 2.0 * i4;
            report.add_check("alpha_pair_anticommutator_" + std::to_string(i) +
                                 std::to_string(j),
                             max_abs(ac), 0.0);
        }

    const SigmaTensor sig = sigma_tensor(g);
    double antisym = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            antisym = std::max(antisym,
                               max_abs(sig.comp[mu][nu] + sig.comp[nu][mu]));
    report.add_check("sigma_tensor_antisymmetry", antisym, 0.0);
    for (int k = 1; k <= 3; ++k)
        report.add_check(
            "sigma_0" + std::to_string(k) + "_equals_i_alpha",
            max_abs(sig.comp[0][k] - Complex(0.0, 1.0) * g.alpha[k - 1]), 0.0);
    report.add_check("sigma_12_equals_spin_3",
                     max_abs(sig.comp[1][2] - g.sigma_big[2]), 0.0);

    // Hermiticity pattern of the representation.
    report.add_check("gamma0_hermitian", hermiticity_residual(g.gamma[0]), 0.0);
    for (int k = 1; k <= 3; ++k)
        report.add_check("gamma" + std::to_string(k) + "_antihermitian",
                         max_abs(g.gamma[k].dagger() + g.gamma[k]), 0.0);
    for (int k = 1; k <= 3; ++k)
        report.add_check("alpha" + std::to_string(k) + "_hermitian",
                         hermiticity_residual(g.alpha[k - 1]), 0.0);

    report.append(spin_identity_check(g));
    report.append(verify_lie(build_charges(1.0)));
    return emit_report(report);
}

void print_tensor(const char* label, const PolyFieldTensor& f) {
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu)
            if (!f.comp[mu][nu].is_zero())
                std::cout << label << " F[" << mu << nu
                          << "] = " << f.comp[mu][nu].to_string() << "\n";
}

int run_gauge_check(int example) {
    if (example != 1 && example != 2)
        throw ConfigError("example", "--example must be 1 or 2");
    const Rational coupling(1);
    CheckReport report;

    if (example == 1) {
        const PolyFourPotential raw =
            example_potential(ExampleField::Ex1Raw, coupling);
        const ScalarPoly lam = example_gauge_function(1, coupling);
        const PolyFourPotential transformed = gauge_transform(raw, lam);
        const PolyFourPotential covariant =
            example_potential(ExampleField::Ex1Covariant, coupling);

        const PolyFieldTensor f_raw = field_tensor_poly(raw);
        const PolyFieldTensor f_tr = field_tensor_poly(transformed);
        print_tensor("tensor", f_tr);
        report.add_check("field_tensor_gauge_invariance",
                         tensor_residual(f_raw, f_tr), 0.0,
                         "F(ex1_raw) == F(ex1_transformed)");
        report.add_check("field_tensor_boost_form",
                         tensor_residual(f_tr, boost_form_tensor(coupling)), 0.0,
                         "F matches c (u^mu x^nu - u^nu x^mu)");
        double pot_res = 0.0;
        for (int mu = 0; mu < 4; ++mu)
            pot_res = std::max(pot_res, ScalarPoly::residual(
                                            covariant.comp[mu],
                                            transformed.comp[mu]));
        report.add_check("covariant_potential_matches_transformed", pot_res, 0.0);
        report.add_check("covariant_field_tensor",
                         tensor_residual(field_tensor_poly(covariant), f_raw),
                         0.0);
        report.add_check("pure_gauge_tensor_vanishes",
                         tensor_residual(field_tensor_poly(grad4(lam)),
                                         PolyFieldTensor{}),
                         0.0);
    } else {
        const PolyFourPotential raw =
            example_potential(ExampleField::Ex2Raw, coupling);
        const ScalarPoly lam = example_gauge_function(2, coupling);
        const PolyFourPotential transformed = gauge_transform(raw, lam);
        const PolyFourPotential covariant =
            example_potential(ExampleField::Ex2Covariant, coupling);

        const PolyFieldTensor f_raw = field_tensor_poly(raw);
        const PolyFieldTensor f_tr = field_tensor_poly(transformed);
        print_tensor("tensor", f_tr);
        report.add_check("field_tensor_gauge_invariance",
                         tensor_residual(f_raw, f_tr), 0.0,
                         "F(ex2_raw) == F(ex2_transformed)");

        PolyFieldTensor expected;
        expected.comp[1][2] = ScalarPoly(Rational(2) * coupling);
        expected.comp[2][1] = -expected.comp[1][2];
        report.add_check("field_tensor_constant_magnetic",
                         tensor_residual(f_raw, expected), 0.0,
                         "F^{12} = 2c, all other components vanish");
        report.add_check("pure_gauge_tensor_vanishes",
                         tensor_residual(field_tensor_poly(grad4(lam)),
                                         PolyFieldTensor{}),
                         0.0);

        double pot_res = 0.0;
        for (int mu = 0; mu < 4; ++mu)
            pot_res = std::max(pot_res, ScalarPoly::residual(
                                            covariant.comp[mu],
                                            transformed.comp[mu]));
        report.add_finding("covariant_potential_mismatch", pot_res,
                           "the covariant rewrite does not reproduce the "
                           "transformed potential");
        report.add_finding(
            "covariant_field_tensor_mismatch",
            tensor_residual(field_tensor_poly(covariant), f_raw),
            "tensor of the covariant rewrite vs the direct tensor");
        report.add_finding(
            "boost_form_tensor_mismatch",
            tensor_residual(f_raw, boost_form_tensor(coupling)),
            "direct tensor vs c (u^mu x^nu - u^nu x^mu); the true tensor is "
            "a constant magnetic component");
    }
    return emit_report(report);
}

int run_fields(const std::string& config_path) {
    const RunConfig cfg = load_config(config_path);
    const GaugeParams p = to_gauge_params(cfg);
    const ChargeSet charges = build_charges(cfg.kappa_q);
    const GammaSet g = build_dirac_set();

    const NBFieldTensor nb = nb_field_tensor(p, charges);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) {
            const NBComponent& c = nb.comp[mu][nu];
            if (c.abelian.is_zero() && max_abs(c.color) == 0.0) continue;
            std::cout << "component F[" << mu << nu
                      << "]: abelian = " << c.abelian.to_string()
                      << "; color = " << render_color_matrix(c.color) << "\n";
        }

    CheckReport report;
    const ExtraPotential ep = build_extra_potentials(p, charges);
    const ColorTensor direct = ext_field_tensor(ep);
    const ColorTensor closed = ext_field_tensor_closed(p, charges, -1.0);
    const ColorTensor variant = ext_field_tensor_closed(p, charges, +1.0);

    double oracle = 0.0, herm = 0.0, antisym = 0.0, variant_res = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            oracle = std::max(oracle, max_abs_diff(direct[mu][nu], closed[mu][nu]));
            herm = std::max(herm, hermiticity_residual(direct[mu][nu]));
            antisym = std::max(antisym,
                               max_abs(direct[mu][nu] + direct[nu][mu]));
            if (mu != 0 && nu != 0)
                variant_res = std::max(
                    variant_res, max_abs_diff(direct[mu][nu], variant[mu][nu]));
        }
    std::string oracle_note = "commutator route against the closed forms";
    if (cfg.kappa_q != 1.0)
        oracle_note += "; the closed forms presume kappa_q = 1 (measured "
                       "closure scale is 2*kappa_q), so a residual here is "
                       "the real discrepancy for this normalization";
    report.add_check("ext_tensor_direct_vs_closed", oracle, 1e-12,
                     oracle_note);
    report.add_check("ext_tensor_hermiticity", herm, 1e-15);
    report.add_check("ext_tensor_antisymmetry", antisym, 0.0);

    // Coupling scaling: temporal components linear in eta, spatial quadratic.
    GaugeParams p2 = p;
    p2.eta = 2.0 * p.eta;
    const ColorTensor direct2 =
        ext_field_tensor(build_extra_potentials(p2, charges));
    double lin = 0.0, quad = 0.0, scale = 1.0;
    for (int k = 1; k <= 3; ++k) {
        lin = std::max(lin, max_abs_diff(direct2[0][k], 2.0 * direct[0][k]));
        scale = std::max(scale, max_abs(direct2[0][k]));
    }
    quad = max_abs_diff(direct2[1][2], 4.0 * direct[1][2]);
    scale = std::max(scale, max_abs(direct2[1][2]));
    report.add_check("ext_tensor_eta_scaling_linear", lin, 1e-12 * scale);
    report.add_check("ext_tensor_eta_scaling_quadratic", quad, 1e-12 * scale);

    report.add_finding("spatial_closed_form_sign_variant", variant_res,
                       "adopted spatial sign matches the direct commutator; "
                       "value is the residual of the flipped-sign variant");

    const double prefactor = p.kappa * p.e_charge / (4.0 * p.mass);
    const InteractionTerm term = interaction_term(nb, g, prefactor);
    const ComplexMatrix closed_temporal =
        closed_temporal_interaction(p, charges, g);
    const double closed_norm = max_abs(closed_temporal);
    const double ratio =
        closed_norm > 0.0 ? max_abs(term.temporal_color) / closed_norm : 0.0;
    report.add_finding("temporal_interaction_coefficient_ratio", ratio,
                       "direct contraction vs the closed-form expression; "
                       "the direct route carries twice the coefficient");
    report.add_finding(
        "interaction_position_form", term.position_linear.max_coefficient_abs(),
        "the contraction is linear in position, not in momentum; value is "
        "the largest position-coefficient magnitude");
    return emit_report(report);
}

int run_spectrum(const std::string& config_path, const std::string& out_path,
                 const std::string& csv_path, bool converge) {
    const RunConfig cfg = load_config(config_path);
    const HamiltonianMatrix h = assemble_hamiltonian(to_osc_params(cfg),
                                                     cfg.kappa_q);
    const SpectrumResult res = spectrum(h, converge);
    write_output(out_path, spectrum_to_json(res));
    if (!csv_path.empty()) write_output(csv_path, spectrum_to_csv(res));
    return 0;
}

int run_symmetry(const std::string& config_path) {
    const RunConfig cfg = load_config(config_path);
    if (cfg.dimension != 2)
        throw ConfigError("dimension",
                          "the symmetry report requires dimension = 2");
    const OscParams p = to_osc_params(cfg);
    const GammaSet g = build_dirac_set();
    const FockOperators f = fock_ops(p.truncation, p.dimension, p.mass, p.omega);
    const HamiltonianMatrix h = assemble_hamiltonian(p, cfg.kappa_q);
    const AngularOps a = build_angular(f, g);
    return emit_report(commutator_report(a, h, f, g, p));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-Abelian Dirac oscillator verification toolkit"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand(
        "verify-algebra", "Clifford, Lie-algebra and spin identity checks");

    int example = 0;
    auto* gauge = app.add_subcommand(
        "gauge-check", "gauge-invariance checks for the worked potentials");
    gauge->add_option("--example", example, "worked example, 1 or 2")
        ->required();

    std::string fields_config;
    auto* fields = app.add_subcommand(
        "fields", "non-Abelian field tensor components and oracle comparisons");
    fields->add_option("--config", fields_config, "JSON configuration file")
        ->required();

    std::string spectrum_config, spectrum_out, spectrum_csv;
    bool converge = false;
    auto* spectrum_cmd = app.add_subcommand(
        "spectrum", "eigenvalues of the oscillator Hamiltonian");
    spectrum_cmd
        ->add_option("--config", spectrum_config, "JSON configuration file")
        ->required();
    spectrum_cmd
        ->add_option("--out", spectrum_out, "output JSON path, or - for stdout")
        ->required();
    spectrum_cmd->add_option("--csv", spectrum_csv, "optional CSV export path");
    spectrum_cmd->add_flag("--converge", converge,
                           "recompute at doubled truncation and flag stable "
                           "eigenvalues");

    std::string sym_config;
    auto* sym = app.add_subcommand(
        "symmetry", "angular-momentum commutator report (dimension 2)");
    sym->add_option("--config", sym_config, "JSON configuration file")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return run_verify_algebra();
        if (gauge->parsed()) return run_gauge_check(example);
        if (fields->parsed()) return run_fields(fields_config);
        if (spectrum_cmd->parsed())
            return run_spectrum(spectrum_config, spectrum_out, spectrum_csv,
                                converge);
        if (sym->parsed()) return run_symmetry(sym_config);
    } catch (const ConfigError& e) {
        std::cerr << "nadosc: configuration error";
        if (!e.field().empty()) std::cerr << " (" << e.field() << ")";
        std::cerr << ": " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "nadosc: invalid input: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "nadosc: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "nadosc: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
