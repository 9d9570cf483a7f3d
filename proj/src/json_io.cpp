#include "conecert/json_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace conecert {

namespace {

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what) {
    throw std::invalid_argument("BiPoly JSON: " + pointer + ": " + what);
}

Rational rational_at(const Json& j, const std::string& pointer, bool* normalized) {
    if (!j.is_string()) schema_error(pointer, "expected a rational string");
    const std::string text = j.get<std::string>();
    Rational q;
    try {
        q = parse_rational(text);
    } catch (const std::exception& e) {
        schema_error(pointer, e.what());
    }
    if (normalized && format_rational(q) != text) *normalized = true;
    return q;
}

MultiIndex multi_index_at(const Json& j, int n, const std::string& pointer) {
    if (!j.is_array()) schema_error(pointer, "expected an array of exponents");
    if (static_cast<int>(j.size()) != n) {
        std::ostringstream msg;
        msg << "length " << j.size() << " does not match n=" << n;
        schema_error(pointer, msg.str());
    }
    std::vector<int> entries;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& e = j[i];
        if (!e.is_number_integer() || e.get<long long>() < 0)
            schema_error(pointer + "/" + std::to_string(i), "expected a non-negative integer");
        entries.push_back(e.get<int>());
    }
    return MultiIndex(std::move(entries));
}

}  // namespace

Json bipoly_to_json(const BiPoly& poly) {
    Json terms = Json::array();
    for (const auto& [key, c] : poly.terms()) {
        Json term;
        term["alpha"] = key.alpha.entries();
        term["beta"] = key.beta.entries();
        term["coef"] = {{"re", format_rational(c.re)}, {"im", format_rational(c.im)}};
        terms.push_back(std::move(term));
    }
    return Json{{"n", poly.n()}, {"terms", std::move(terms)}};
}

BiPoly bipoly_from_json(const Json& j, bool* normalized) {
    if (!j.is_object()) schema_error("", "expected an object");
    if (!j.contains("n") || !j["n"].is_number_integer())
        schema_error("/n", "missing or non-integer ambient dimension");
    const int n = j["n"].get<int>();
    if (n < 1) schema_error("/n", "must be >= 1");
    if (!j.contains("terms") || !j["terms"].is_array())
        schema_error("/terms", "missing term array");

    BiPoly acc(n);
    const auto& terms = j["terms"];
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string base = "/terms/" + std::to_string(i);
        const auto& term = terms[i];
        if (!term.is_object()) schema_error(base, "expected an object");
        for (const char* field : {"alpha", "beta", "coef"})
            if (!term.contains(field)) schema_error(base + "/" + field, "missing");
        const MultiIndex alpha = multi_index_at(term["alpha"], n, base + "/alpha");
        const MultiIndex beta = multi_index_at(term["beta"], n, base + "/beta");
        const auto& coef = term["coef"];
        if (!coef.is_object() || !coef.contains("re") || !coef.contains("im"))
            schema_error(base + "/coef", "expected {\"re\": .., \"im\": ..}");
        const ExactComplex c(rational_at(coef["re"], base + "/coef/re", normalized),
                             rational_at(coef["im"], base + "/coef/im", normalized));
        acc = acc + BiPoly::monomial(n, alpha, beta, c);
    }
    return acc;
}

BiPoly read_bipoly_file(const std::string& path, std::ostream* warnings) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open polynomial file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    bool normalized = false;
    BiPoly poly = bipoly_from_json(j, &normalized);
    if (normalized && warnings)
        *warnings << "warning: " << path << ": non-reduced fractions were normalized\n";
    return poly;
}

void write_bipoly_file(const BiPoly& poly, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write polynomial file: " + path);
    out << dump_report(bipoly_to_json(poly));
}

Json exact_complex_to_json(const ExactComplex& v) { return format_exact_complex(v); }

Json rational_matrix_to_json(const ExactMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(format_exact_complex(m(r, c)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Json config_to_json(const NumericConfig& cfg) {
    return Json{{"quad_degree", cfg.quad_degree},
                {"quad_degree_check", cfg.quad_degree_check},
                {"hermite_degree", cfg.hermite_degree},
                {"laguerre_points", cfg.laguerre_points},
                {"abs_tol", cfg.abs_tol},
                {"rel_tol", cfg.rel_tol},
                {"threads", cfg.threads}};
}

NumericConfig config_from_json(const Json& j) {
    NumericConfig cfg;
    if (j.contains("quad_degree")) cfg.quad_degree = j["quad_degree"].get<int>();
    if (j.contains("quad_degree_check")) cfg.quad_degree_check = j["quad_degree_check"].get<int>();
    if (j.contains("hermite_degree")) cfg.hermite_degree = j["hermite_degree"].get<int>();
    if (j.contains("laguerre_points")) cfg.laguerre_points = j["laguerre_points"].get<int>();
    if (j.contains("abs_tol")) cfg.abs_tol = j["abs_tol"].get<double>();
    if (j.contains("rel_tol")) cfg.rel_tol = j["rel_tol"].get<double>();
    if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
    return cfg;
}

Json decomposition_to_json(const HarmonicDecomposition& dec, int n) {
    Json comps = Json::array();
    for (const auto& comp : dec.components) comps.push_back(bipoly_to_json(comp));
    (void)n;
    return Json{{"bidegree", {dec.p, dec.q}}, {"components", std::move(comps)}};
}

Json certificate_to_json(const Certificate& cert) {
    Json kernels = Json::array();
    const KernelReport* witness = nullptr;
    for (const auto& k : cert.kernels) {
        kernels.push_back(Json{{"p", k.p}, {"q", k.q}, {"dim", k.dim}});
        if (k.dim > 0 && !witness) witness = &k;
    }
    Json j{{"a", format_exact_complex(cert.a)},
           {"n", cert.n},
           {"s", cert.s},
           {"range", {cert.p_max, cert.q_max}},
           {"kernels", std::move(kernels)},
           {"irreducible_rank", cert.irreducible_rank},
           {"verdict", cert.verdict_string()}};
    if (witness && witness->witness)
        j["counterexample"] = bipoly_to_json(*witness->witness);
    if (!cert.untested.empty()) {
        Json untested = Json::array();
        for (const auto& [p, q] : cert.untested) untested.push_back({p, q});
        j["untested"] = std::move(untested);
    }
    return j;
}

Json operator_matrix_to_json(const OperatorMatrix& op) {
    auto basis_json = [](const MonomialBasis& basis) {
        Json keys = Json::array();
        for (const auto& key : basis.keys())
            keys.push_back(Json{{"alpha", key.alpha.entries()}, {"beta", key.beta.entries()}});
        return Json{{"n", basis.n()}, {"p", basis.p()}, {"q", basis.q()}, {"monomials", keys}};
    };
    return Json{{"domain", basis_json(op.domain)},
                {"codomain", basis_json(op.codomain)},
                {"matrix", rational_matrix_to_json(op.entries)}};
}

Json mean_report_to_json(const MeanReport& report) {
    return Json{{"value", {{"re", report.value.real()}, {"im", report.value.imag()}}},
                {"rule", {{"kind", report.rule.kind}, {"n", report.rule.n}, {"degree", report.rule.degree}}},
                {"err_est", report.err_est}};
}

Json cone_sample_to_json(const ConeSampleResult& result, std::complex<double> a, int n) {
    Json points = Json::array();
    for (const auto& z : result.points) {
        Json coords = Json::array();
        for (int k = 0; k < z.size(); ++k) {
            coords.push_back(z(k).real());
            coords.push_back(z(k).imag());
        }
        points.push_back(std::move(coords));
    }
    return Json{{"a", {{"re", a.real()}, {"im", a.imag()}}},
                {"n", n},
                {"points", std::move(points)},
                {"residuals", result.residuals},
                {"note", result.note}};
}

Json lemma42_to_json(const Lemma42Report& report) {
    Json j{{"n", report.n},
           {"p", report.p},
           {"q", report.q},
           {"k", report.k},
           {"zero_branch", report.zero_branch}};
    if (report.zero_branch) {
        j["max_abs_value"] = report.max_abs_value;
    } else {
        j["z_separability_cv"] = report.max_cv;
        j["r_profile_residual"] = report.profile_residual;
        j["fitted_constant"] = {{"re", report.fitted_constant.real()},
                                {"im", report.fitted_constant.imag()}};
    }
    j["r_samples"] = report.r_samples;
    return j;
}

Json dichotomy_to_json(const DichotomyReport& report) {
    return Json{{"max_on_zero_set", report.max_on_zero_set},
                {"max_on_cone", report.max_on_cone},
                {"vanish_tol", report.vanish_tol},
                {"detect_threshold", report.detect_threshold},
                {"k_max", report.k_max},
                {"r_samples", report.r_samples},
                {"zero_set_vanishes", report.zero_set_vanishes()},
                {"cone_detects", report.cone_detects()}};
}

std::string dump_report(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace conecert
