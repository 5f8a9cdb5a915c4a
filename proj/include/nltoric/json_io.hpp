#ifndef NLTORIC_JSON_IO_HPP
#define NLTORIC_JSON_IO_HPP

#include <json.hpp>

#include "nltoric/catalog.hpp"

// Interchange formats. All numbers are exact: integers as JSON numbers
// (decimal strings beyond 64 bits), rationals as {"num": .., "den": ..}.
// No floats appear anywhere in the I/O surface.

namespace nltoric {

using json = nlohmann::ordered_json;

json int_to_json(const Int& x);
Int int_from_json(const json& j);
json rat_to_json(const Rat& q);  // plain integer when den == 1
json ivec_to_json(const std::vector<Int>& v);
std::vector<Int> ivec_from_json(const json& j);
json rvec_to_json(const std::vector<Rat>& v);

// Fan schema: { "dim": int, "rays": [[int,..],..], "max_cones": [[int,..],..],
//               "name": string? }
json fan_to_json(const Fan& fan);
Fan fan_from_json(const json& j);
Fan load_fan_file(const std::string& path);

json divisor_to_json(const DivisorClass& d);
json polynomial_to_json(const CoxPolynomial& f);
CoxPolynomial polynomial_from_json(const ClassGroup& cg, const json& j);

json cohomology_to_json(const CohomologyTable& t);
json check_results_to_json(const std::vector<CheckResult>& results);
json bound_report_to_json(const BoundReport& rep);
json syzygy_report_to_json(const SyzygyReport& rep);
json oda_report_to_json(const OdaWindowReport& rep);
json lines_to_json(const std::vector<InvariantLine>& lines);
json validation_to_json(const ValidationReport& rep);

// Top-level report envelope: deterministic for fixed inputs and seed.
json make_report(const std::string& command, json inputs, json results, std::uint64_t seed);

extern const char* const kArtifactVersion;

}  // namespace nltoric

#endif
