#pragma once

#include <nlohmann/json_fwd.hpp>

#include <iosfwd>

#include "conecert/certify.hpp"
#include "conecert/cone_sample.hpp"
#include "conecert/config.hpp"
#include "conecert/fischer.hpp"
#include "conecert/twisted.hpp"

namespace conecert {

using Json = nlohmann::json;

// BiPoly schema:
//   {"n": int, "terms": [{"alpha": [..], "beta": [..],
//                         "coef": {"re": "num/den", "im": "num/den"}}]}
// Rationals are decimal-integer fraction strings, written canonically as
// "num/den"; non-reduced input is normalized (and flagged via `normalized`).
// Schema violations throw std::invalid_argument with a JSON-pointer path.
Json bipoly_to_json(const BiPoly& poly);
BiPoly bipoly_from_json(const Json& j, bool* normalized = nullptr);

BiPoly read_bipoly_file(const std::string& path, std::ostream* warnings = nullptr);
void write_bipoly_file(const BiPoly& poly, const std::string& path);

Json exact_complex_to_json(const ExactComplex& v);  // canonical "a+bi" string
Json rational_matrix_to_json(const ExactMatrix& m); // row-major rational strings

Json config_to_json(const NumericConfig& cfg);
NumericConfig config_from_json(const Json& j);

Json decomposition_to_json(const HarmonicDecomposition& dec, int n);
Json certificate_to_json(const Certificate& cert);
Json operator_matrix_to_json(const OperatorMatrix& op);
Json mean_report_to_json(const MeanReport& report);
Json cone_sample_to_json(const ConeSampleResult& result, std::complex<double> a, int n);
Json lemma42_to_json(const Lemma42Report& report);
Json dichotomy_to_json(const DichotomyReport& report);

// Canonical serialization used for every report file: 2-space indent, sorted
// keys, trailing newline. Re-running with the embedded config reproduces the
// bytes exactly.
std::string dump_report(const Json& j);

}  // namespace conecert
