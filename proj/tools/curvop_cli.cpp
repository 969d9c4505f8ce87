#include "CLI11.hpp"

#include "curvop/bochner.hpp"
#include "curvop/io.hpp"
#include "curvop/oracle.hpp"
#include "curvop/verify.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>

using namespace curvop;

namespace {

struct ModelFlags {
    std::string kind;
    int n = 4;
    int m = 2;
    int p = 2, q = 2;
    double kappa = 1.0;
    double kappa1 = 1.0, kappa2 = 1.0;
    double scal = 1.0;
    std::uint64_t seed = 0;
};

void add_model_flags(CLI::App* cmd, ModelFlags& f) {
    cmd->add_option("--model", f.kind,
                    "model kind: constant|flat|fubini_study|sphere_product|random_einstein");
    cmd->add_option("--n", f.n, "dimension (constant, flat, random_einstein)");
    cmd->add_option("--m", f.m, "complex dimension (fubini_study)");
    cmd->add_option("--p", f.p, "first factor dimension (sphere_product)");
    cmd->add_option("--q", f.q, "second factor dimension (sphere_product)");
    cmd->add_option("--kappa", f.kappa, "sectional curvature (constant)");
    cmd->add_option("--kappa1", f.kappa1, "first factor curvature (sphere_product)");
    cmd->add_option("--kappa2", f.kappa2, "second factor curvature (sphere_product)");
    cmd->add_option("--scal", f.scal, "scalar curvature (random_einstein)");
    cmd->add_option("--seed", f.seed, "random seed (random_einstein)");
}

ModelSpec to_model_spec(const ModelFlags& f) {
    ModelSpec ms;
    ms.kind = model_kind_from_string(f.kind);
    ms.n = f.n;
    ms.m = f.m;
    ms.p = f.p;
    ms.q = f.q;
    ms.kappa = f.kappa;
    ms.kappa1 = f.kappa1;
    ms.kappa2 = f.kappa2;
    ms.scal = f.scal;
    ms.seed = f.seed;
    return ms;
}

AlgCurvature load_tensor(const std::string& input, const ModelFlags& model) {
    if (!input.empty() && !model.kind.empty())
        throw std::invalid_argument("pass either --input or --model, not both");
    if (!input.empty()) return tensor_from_json(read_json_file(input));
    if (!model.kind.empty()) return build_model(to_model_spec(model));
    throw std::invalid_argument("missing input: pass --input FILE or --model KIND");
}

double resolve_theta_flag(const std::string& theta, int n, double alpha) {
    if (theta == "auto") return resolve_theta(n, alpha);
    std::size_t used = 0;
    const double value = std::stod(theta, &used);
    if (used != theta.size())
        throw std::invalid_argument("--theta must be a number or \"auto\"");
    return value;
}

int cmd_spectrum(const std::string& input, const ModelFlags& model,
                 const std::string& output) {
    const AlgCurvature R = load_tensor(input, model);
    const int n = R.dim();
    const Spectrum spec = spectrum(second_kind_matrix(R, Sym2Basis(n)));
    const double scal = scalar(R);
    std::printf("n = %d\n", n);
    std::printf("N = %d\n", spec.size());
    std::printf("lambda_min = %.12g\n", spec.values.front());
    std::printf("lambda_max = %.12g\n", spec.values.back());
    std::printf("mean = %.12g\n", spec.mean);
    std::printf("scal = %.12g\n", scal);
    if (!output.empty()) write_json_file(output, spectrum_to_json(spec, n, scal));
    return 0;
}

int cmd_check_cone(const std::string& input, const ModelFlags& model, double alpha,
                   const std::string& theta_flag) {
    int n = 0;
    Spectrum spec;
    if (!input.empty() && model.kind.empty()) {
        const json j = read_json_file(input);
        if (j.contains("eigenvalues")) {
            SpectrumFile f = spectrum_from_json(j);
            n = f.n;
            spec = std::move(f.spec);
        } else {
            const AlgCurvature R = tensor_from_json(j);
            n = R.dim();
            spec = spectrum(second_kind_matrix(R, Sym2Basis(n)));
        }
    } else {
        const AlgCurvature R = load_tensor(input, model);
        n = R.dim();
        spec = spectrum(second_kind_matrix(R, Sym2Basis(n)));
    }

    const double theta = resolve_theta_flag(theta_flag, n, alpha);
    const ConeCheck check = in_cone(spec, ConeParams{alpha, theta});
    std::printf("n = %d\n", n);
    std::printf("alpha = %.12g\n", alpha);
    std::printf("theta = %.12g\n", theta);
    std::printf("member = %s\n", check.member ? "true" : "false");
    std::printf("slack = %.12g\n", check.slack);
    return check.member ? 0 : 1;
}

int cmd_thresholds(int n, int grid, const std::string& output) {
    if (grid < 2) throw std::invalid_argument("--grid must be at least 2 rows");
    const double hi = alpha_max(n);
    const int N = traceless_sym2_dim(n);
    const char* regime = n >= 6 ? "high" : "low";
    json rows = json::array();
    std::printf("n,N,alpha,theta,alpha_max,regime\n");
    for (int i = 0; i < grid; ++i) {
        const double alpha = 1.0 + (hi - 1.0) * i / (grid - 1);
        const double theta = resolve_theta(n, alpha);
        std::printf("%d,%d,%.12g,%.12g,%.12g,%s\n", n, N, alpha, theta, hi, regime);
        rows.push_back(threshold_to_json(n, alpha));
    }
    if (!output.empty()) write_json_file(output, rows);
    return 0;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opt, const std::string& grid,
               const std::string& output) {
    if (!grid.empty() && grid != "default")
        throw std::invalid_argument("--grid: only \"default\" is defined");
    const std::vector<SuiteReport> reports = run_suites(suite, opt);
    long total = 0;
    json summary;
    summary["suites"] = json::array();
    for (const SuiteReport& r : reports) {
        total += r.violations;
        std::printf("%s: samples=%ld violations=%ld worst_slack=%.6g\n", r.suite.c_str(),
                    long(r.samples), long(r.violations), r.reported_slack());
        for (const std::string& f : r.failures) std::printf("  %s\n", f.c_str());
        summary["suites"].push_back({{"suite", r.suite},
                                     {"samples", r.samples},
                                     {"violations", r.violations},
                                     {"worst_slack", r.reported_slack()}});
    }
    summary["total_violations"] = total;
    if (!output.empty()) write_json_file(output, summary);
    std::printf("total violations: %ld\n", total);
    return total == 0 ? 0 : 1;
}

int cmd_minimize(int n, double alpha, int restarts, std::uint64_t seed, double tol) {
    const double hi = alpha_max(n);
    if (alpha < 1.0 || alpha > hi) {
        std::printf("alpha = %.12g outside the admissible range [1, %.12g] for n = %d\n",
                    alpha, hi, n);
        return 2;
    }
    const double theta = resolve_theta(n, alpha);
    const int N = traceless_sym2_dim(n);
    const ConeParams p{alpha, theta};
    const double A = lambda1_bound(N, p);

    const MinFResult fr = minimize_F(N, A, restarts, seed);
    const LpResult lp = lp_min_lambda1(N, p);

    std::printf("n = %d\n", n);
    std::printf("N = %d\n", N);
    std::printf("alpha = %.12g\n", alpha);
    std::printf("theta = %.12g\n", theta);
    std::printf("A = %.12g\n", A);
    std::printf("F_min = %.12g\n", fr.min_value);
    std::printf("F_pattern_zeros = %d\n", fr.pattern.zeros);
    std::printf("F_restarts_converged = %d/%d\n", fr.restarts_converged, fr.restarts_total);
    std::printf("lp_min_lambda1 = %.12g\n", lp.min_lambda1);
    std::printf("closed_form_bound = %.12g\n", -A);
    std::printf("lp_gap = %.6g\n", std::fabs(lp.min_lambda1 + A));

    const bool lp_ok = std::fabs(lp.min_lambda1 + A) <= tol;
    const bool f_ok = fr.min_value >= -1e-8;
    if (!lp_ok) std::printf("mismatch: lp minimum differs from the closed form\n");
    if (!f_ok) std::printf("mismatch: F dips below zero in the admissible range\n");
    return lp_ok && f_ok ? 0 : 1;
}

int cmd_model(const ModelFlags& model, const std::string& output) {
    if (output.empty()) throw std::invalid_argument("model: --output FILE is required");
    const AlgCurvature R = build_model(to_model_spec(model));
    write_json_file(output, tensor_to_json(R));
    std::printf("n = %d\n", R.dim());
    std::printf("scal = %.12g\n", scalar(R));
    std::printf("wrote %s\n", output.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"curvature operator of the second kind: spectra, cones, verification"};
    app.require_subcommand(1);

    ModelFlags spectrum_model;
    std::string spectrum_input, spectrum_output;
    CLI::App* sub_spectrum = app.add_subcommand("spectrum", "eigenvalues of a tensor");
    sub_spectrum->add_option("--input", spectrum_input, "tensor JSON file");
    sub_spectrum->add_option("--output", spectrum_output, "spectrum JSON file to write");
    add_model_flags(sub_spectrum, spectrum_model);

    ModelFlags cone_model;
    std::string cone_input, cone_theta = "auto";
    double cone_alpha = 1.0;
    CLI::App* sub_cone = app.add_subcommand("check-cone", "eigenvalue cone membership");
    sub_cone->add_option("--input", cone_input, "tensor or spectrum JSON file");
    sub_cone->add_option("--alpha", cone_alpha, "cone weight")->required();
    sub_cone->add_option("--theta", cone_theta, "cone offset, number or \"auto\"");
    add_model_flags(sub_cone, cone_model);

    int thr_n = 0, thr_grid = 12;
    std::string thr_output;
    CLI::App* sub_thr = app.add_subcommand("thresholds", "threshold table for a dimension");
    sub_thr->add_option("--n", thr_n, "dimension")->required();
    sub_thr->add_option("--grid", thr_grid, "number of alpha rows");
    sub_thr->add_option("--output", thr_output, "JSON file to write");

    std::string ver_suite, ver_grid, ver_output;
    VerifyOptions ver_opt;
    CLI::App* sub_verify = app.add_subcommand("verify", "run invariant suites");
    sub_verify->add_option("--suite", ver_suite, "identities|cone|bochner|oracles|all")
        ->required();
    sub_verify->add_option("--n", ver_opt.n, "restrict to one dimension");
    sub_verify->add_option("--count", ver_opt.count, "samples per case");
    sub_verify->add_option("--seed", ver_opt.seed, "base seed");
    sub_verify->add_option("--perturb", ver_opt.perturb,
                           "relative distortion of the sum-ratio constant");
    sub_verify->add_option("--grid", ver_grid, "grid preset (\"default\")");
    sub_verify->add_option("--output", ver_output, "summary JSON file to write");

    int min_n = 0, min_restarts = 8;
    double min_alpha = 1.0, min_tol = 1e-9;
    std::uint64_t min_seed = 0;
    CLI::App* sub_min = app.add_subcommand("minimize", "oracle minimizers vs closed forms");
    sub_min->add_option("--n", min_n, "dimension")->required();
    sub_min->add_option("--alpha", min_alpha, "cone weight")->required();
    sub_min->add_option("--restarts", min_restarts, "projected gradient restarts");
    sub_min->add_option("--seed", min_seed, "base seed");
    sub_min->add_option("--tol", min_tol, "agreement tolerance");

    ModelFlags model_model;
    std::string model_output;
    CLI::App* sub_model = app.add_subcommand("model", "write a model tensor to JSON");
    sub_model->add_option("--output", model_output, "tensor JSON file to write");
    add_model_flags(sub_model, model_model);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sub_spectrum->parsed())
            return cmd_spectrum(spectrum_input, spectrum_model, spectrum_output);
        if (sub_cone->parsed())
            return cmd_check_cone(cone_input, cone_model, cone_alpha, cone_theta);
        if (sub_thr->parsed()) return cmd_thresholds(thr_n, thr_grid, thr_output);
        if (sub_verify->parsed()) return cmd_verify(ver_suite, ver_opt, ver_grid, ver_output);
        if (sub_min->parsed())
            return cmd_minimize(min_n, min_alpha, min_restarts, min_seed, min_tol);
        if (sub_model->parsed()) return cmd_model(model_model, model_output);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
