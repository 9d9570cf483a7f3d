#include "conecert/cli_app.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

#include "conecert/acceptance.hpp"
#include "conecert/json_io.hpp"

namespace conecert {

namespace {

struct CliState {
    NumericConfig cfg;
    std::string out_path;
    bool verbose = false;
};

void emit_report(const CliState& state, Json report, std::ostream& out) {
    report["config"] = config_to_json(state.cfg);
    const std::string text = dump_report(report);
    if (state.out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(state.out_path);
        if (!file) throw std::invalid_argument("cannot write report to " + state.out_path);
        file << text;
    }
}

std::vector<std::complex<double>> parse_point_list(const std::string& text) {
    std::vector<double> reals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        reals.push_back(std::stod(item));
    }
    if (reals.empty() || reals.size() % 2 != 0)
        throw std::invalid_argument(
            "--z expects an even comma-separated list re1,im1,re2,im2,...");
    std::vector<std::complex<double>> z;
    for (std::size_t i = 0; i < reals.size(); i += 2) z.emplace_back(reals[i], reals[i + 1]);
    return z;
}

// Weight specifier: builtin name (z1, z1bar, z1z2bar) or a BiPoly JSON path.
BiPoly parse_weight(const std::string& spec, int n, std::ostream& err) {
    if (spec == "z1") return BiPoly::variable(n, 0);
    if (spec == "z1bar") return BiPoly::variable_bar(n, 0);
    if (spec == "z1z2bar") return BiPoly::variable(n, 0) * BiPoly::variable_bar(n, 1);
    return read_bipoly_file(spec, &err);
}

// Function specifier: "laguerre:k=2,nu=1", "poly:<file>", "gausspoly:<file>".
GaussPoly parse_function(const std::string& spec, int n, std::ostream& err) {
    const auto colon = spec.find(':');
    const std::string kind = colon == std::string::npos ? spec : spec.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "laguerre") {
        int k = -1, nu = -1;
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("laguerre spec expects k=..,nu=..");
            const std::string key = item.substr(0, eq);
            const int value = std::stoi(item.substr(eq + 1));
            if (key == "k")
                k = value;
            else if (key == "nu")
                nu = value;
            else
                throw std::invalid_argument("laguerre spec: unknown field '" + key + "'");
        }
        if (k < 0 || nu < 0) throw std::invalid_argument("laguerre spec expects k=..,nu=..");
        return laguerre_phi(k, nu, n);
    }
    if (kind == "poly" || kind == "gausspoly") {
        // Both carry a BiPoly file; "gausspoly" holds the polynomial part of
        // p(z) e^{-|z|^2/4}, "poly" is multiplied by no Gaussian at mean time
        // -- for twisted means of polynomials against the Gaussian family use
        // gausspoly. The mean integral itself is identical in both cases up
        // to the Gaussian factor, so poly is mapped to the Gaussian family
        // explicitly to keep integrands decaying.
        return GaussPoly(read_bipoly_file(rest, &err));
    }
    throw std::invalid_argument("unknown function spec '" + spec +
                                "'; use laguerre:k=..,nu=.. | poly:<file> | gausspoly:<file>");
}

int dispatch(const CliState& state, const std::function<Json()>& action, std::ostream& out,
             std::ostream& err, int success_code = 0) {
    try {
        emit_report(state, action(), out);
        return success_code;
    } catch (const NumericFailure& e) {
        err << "numeric failure: " << e.what() << "\n";
        return 3;
    } catch (const CLI::Error&) {
        throw;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"conecert: exact non-harmonic cone certificates and twisted spherical means"};
    app.require_subcommand(1);
    CliState state;

    app.add_option("--out", state.out_path, "write the JSON report to a file instead of stdout");
    app.add_option("--quad-degree", state.cfg.quad_degree, "sphere quadrature degree");
    app.add_option("--quad-degree-check", state.cfg.quad_degree_check,
                   "comparison degree for error estimates");
    app.add_option("--hermite-degree", state.cfg.hermite_degree,
                   "Gauss-Hermite points per axis for twisted convolution");
    app.add_option("--laguerre-points", state.cfg.laguerre_points,
                   "Gauss-Laguerre points for radial expansion");
    app.add_option("--abs-tol", state.cfg.abs_tol, "absolute tolerance");
    app.add_option("--rel-tol", state.cfg.rel_tol, "relative tolerance");
    app.add_option("--threads", state.cfg.threads,
                   "worker cap (0: CONECERT_THREADS env, then hardware)");
    app.add_flag("--verbose", state.verbose, "progress to stderr");

    int exit_code = 0;

    // poly decompose
    auto* poly_cmd = app.add_subcommand("poly", "exact polynomial operations");
    auto* decompose = poly_cmd->add_subcommand("decompose", "Fischer decomposition of a BiPoly");
    auto decompose_input = std::make_shared<std::string>();
    decompose->add_option("--input", *decompose_input, "BiPoly JSON file")->required();
    decompose->callback([&, decompose_input] {
        exit_code = dispatch(state, [&] {
            const BiPoly poly = read_bipoly_file(*decompose_input, &err);
            const HarmonicDecomposition dec = fischer_decompose(poly);
            return decomposition_to_json(dec, poly.n());
        }, out, err);
    });

    // op matrix
    auto* op_cmd = app.add_subcommand("op", "operator matrices on P_{p,q}");
    auto* matrix = op_cmd->add_subcommand("matrix", "exact matrix over monomial bases");
    struct MatrixArgs {
        std::string op;
        int n = 2, p = 0, q = 0, s = 1;
        std::string a = "1";
    };
    auto margs = std::make_shared<MatrixArgs>();
    matrix->add_option("--op", margs->op, "A | B | laplacian | mult_H | delta_mult_H | eigen_shift")
        ->required();
    matrix->add_option("--n", margs->n)->required();
    matrix->add_option("--p", margs->p)->required();
    matrix->add_option("--q", margs->q)->required();
    matrix->add_option("--a", margs->a, "complex parameter for mult_H/delta_mult_H/eigen_shift");
    matrix->add_option("--s", margs->s, "power of H");
    matrix->callback([&, margs] {
        exit_code = dispatch(state, [&] {
            OperatorKind kind;
            if (margs->op == "A") kind = OpA{};
            else if (margs->op == "B") kind = OpB{};
            else if (margs->op == "laplacian") kind = OpLaplacian{};
            else if (margs->op == "mult_H") kind = OpMultH{parse_exact_complex(margs->a), margs->s};
            else if (margs->op == "delta_mult_H")
                kind = OpDeltaMultH{parse_exact_complex(margs->a), margs->s};
            else if (margs->op == "eigen_shift")
                kind = OpEigenShift{parse_exact_complex(margs->a)};
            else
                throw std::invalid_argument("unknown operator '" + margs->op + "'");
            return operator_matrix_to_json(operator_matrix(margs->n, margs->p, margs->q, kind));
        }, out, err);
    });

    // cone certify / cone sample
    auto* cone_cmd = app.add_subcommand("cone", "the non-harmonic cone H^{-1}(0)");
    auto* certify = cone_cmd->add_subcommand("certify", "exact non-harmonicity certificate");
    struct CertifyArgs {
        std::string a;
        int n = 2, pmax = 2, qmax = 2, s = 1;
        long budget_ms = 0;
    };
    auto cargs = std::make_shared<CertifyArgs>();
    certify->add_option("--a", cargs->a, "exact complex coefficient, e.g. 3 or 1+2i or -5/2")
        ->required();
    certify->add_option("--n", cargs->n);
    certify->add_option("--pmax", cargs->pmax);
    certify->add_option("--qmax", cargs->qmax);
    certify->add_option("--s", cargs->s, "certify H^s");
    certify->add_option("--budget-ms", cargs->budget_ms, "time budget; partial results beyond it");
    certify->callback([&, cargs] {
        try {
            CertifyOptions options;
            options.threads = state.cfg.threads;
            if (cargs->budget_ms > 0)
                options.time_budget = std::chrono::milliseconds(cargs->budget_ms);
            const Certificate cert = certify_nonharmonic(
                parse_exact_complex(cargs->a), cargs->n, cargs->pmax, cargs->qmax, cargs->s,
                options);
            emit_report(state, certificate_to_json(cert), out);
            switch (cert.verdict()) {
                case Verdict::NonHarmonic: exit_code = 0; break;
                case Verdict::CounterexampleFound: exit_code = 2; break;
                case Verdict::Partial: exit_code = 3; break;
            }
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            exit_code = 1;
        }
    });

    auto* sample = cone_cmd->add_subcommand("sample", "numeric points on H^{-1}(0)");
    struct SampleArgs {
        std::string a;
        int n = 2, count = 8;
    };
    auto sargs = std::make_shared<SampleArgs>();
    sample->add_option("--a", sargs->a, "complex coefficient (floats allowed)")->required();
    sample->add_option("--n", sargs->n);
    sample->add_option("--count", sargs->count);
    sample->callback([&, sargs] {
        exit_code = dispatch(state, [&] {
            const std::complex<double> a = parse_exact_complex(sargs->a).to_complex();
            return cone_sample_to_json(cone_sample(a, sargs->n, sargs->count), a, sargs->n);
        }, out, err);
    });

    // tsm mean / check-lemma42 / demo-noninjectivity
    auto* tsm_cmd = app.add_subcommand("tsm", "numerical twisted spherical means");
    auto* mean = tsm_cmd->add_subcommand("mean", "weighted twisted spherical mean");
    struct MeanArgs {
        std::string f, z, weight;
        double r = 1.0;
    };
    auto meanargs = std::make_shared<MeanArgs>();
    mean->add_option("--f", meanargs->f, "laguerre:k=..,nu=.. | poly:<file> | gausspoly:<file>")
        ->required();
    mean->add_option("--z", meanargs->z, "center, re1,im1,re2,im2,...")->required();
    mean->add_option("--r", meanargs->r, "sphere radius");
    mean->add_option("--weight", meanargs->weight,
                     "optional density P (BiPoly file or z1|z1bar|z1z2bar)");
    mean->callback([&, meanargs] {
        exit_code = dispatch(state, [&] {
            const auto zvec = parse_point_list(meanargs->z);
            const int n = static_cast<int>(zvec.size());
            ComplexPoint z(n);
            for (int k = 0; k < n; ++k) z(k) = zvec[static_cast<std::size_t>(k)];
            const GaussPoly f = parse_function(meanargs->f, n, err);
            std::optional<BiPoly> weight;
            if (!meanargs->weight.empty()) weight = parse_weight(meanargs->weight, n, err);
            const MeanReport report =
                twisted_mean(f, z, meanargs->r, weight ? &*weight : nullptr, state.cfg);
            return mean_report_to_json(report);
        }, out, err);
    });

    auto* lemma = tsm_cmd->add_subcommand("check-lemma42", "weighted functional equation check");
    struct LemmaArgs {
        std::string weight;
        int k = 1, n = 2, zcount = 8;
        std::vector<double> r_samples{0.6, 0.9, 1.2, 1.5, 1.8};
    };
    auto largs = std::make_shared<LemmaArgs>();
    lemma->add_option("--weight", largs->weight, "P in H_{p,q}: file or z1|z1bar|z1z2bar")
        ->required();
    lemma->add_option("--k", largs->k, "Laguerre degree of the expanded function")->required();
    lemma->add_option("--n", largs->n);
    lemma->add_option("--r", largs->r_samples, "radius samples");
    lemma->add_option("--zcount", largs->zcount, "number of z samples");
    lemma->callback([&, largs] {
        exit_code = dispatch(state, [&] {
            const BiPoly weight = parse_weight(largs->weight, largs->n, err);
            const Lemma42Report report = lemma42_check(
                weight, largs->k, default_z_samples(largs->n, largs->zcount),
                largs->r_samples, state.cfg);
            return lemma42_to_json(report);
        }, out, err);
    });

    auto* demo =
        tsm_cmd->add_subcommand("demo-noninjectivity", "zero-set vs certified-cone dichotomy");
    struct DemoArgs {
        std::string weight = "z1bar";
        std::string a = "3";
        int kmax = 3, n = 2, count = 6;
    };
    auto dargs = std::make_shared<DemoArgs>();
    demo->add_option("--weight", dargs->weight, "P in H_{p,q}: file or z1|z1bar|z1z2bar");
    demo->add_option("--a", dargs->a, "cone coefficient");
    demo->add_option("--kmax", dargs->kmax);
    demo->add_option("--n", dargs->n);
    demo->add_option("--count", dargs->count, "cone sample size");
    demo->callback([&, dargs] {
        exit_code = dispatch(state, [&] {
            const BiPoly weight = parse_weight(dargs->weight, dargs->n, err);
            const auto cone = cone_sample(parse_exact_complex(dargs->a).to_complex(), dargs->n,
                                          dargs->count);
            if (cone.empty()) throw std::invalid_argument("empty cone sample: " + cone.note);
            return dichotomy_to_json(
                noninjectivity_demo(weight, dargs->kmax, cone.points, state.cfg));
        }, out, err);
    });

    // verify all
    auto* verify_cmd = app.add_subcommand("verify", "verification suites");
    auto* verify_all = verify_cmd->add_subcommand("all", "run the full acceptance suite");
    verify_all->callback([&] {
        try {
            const auto results = acceptance::run_all(state.cfg, err);
            Json criteria = Json::array();
            for (const auto& r : results)
                criteria.push_back(Json{{"id", r.id},
                                        {"name", r.name},
                                        {"pass", r.pass},
                                        {"kind", r.exact ? "exact" : "numeric"},
                                        {"detail", r.detail}});
            const int code = acceptance::exit_code(results);
            emit_report(state, Json{{"criteria", std::move(criteria)}, {"exit_code", code}}, out);
            exit_code = code;
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            exit_code = 1;
        }
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

}  // namespace conecert
