#pragma once

// JSON and CSV encodings shared by the CLI, the golden files and the tests.
// Coefficients are strings "num/den" in lowest terms (integers without the
// denominator), lowest degree first.

#include "elephant/families.hpp"
#include "elephant/moments.hpp"
#include "elephant/ratpoly.hpp"
#include "elephant/roots.hpp"
#include "elephant/walk.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>

namespace elephant::io {

using json = nlohmann::json;

json to_json(const DensePoly& p);
json to_json(const PowerSeries& s);
json to_json(const LaurentPoly& l);

DensePoly poly_from_json(const json& j);
PowerSeries series_from_json(const json& j);
LaurentPoly laurent_from_json(const json& j);

/// {family, n, a, coeffs}; a is null for families without a parameter.
json family_record(Family family, unsigned n, const std::optional<Rational>& a, const DensePoly& p);

/// {n, a, roots:[{lo, hi, mid_float, exact}], interlaced_with_next}
json root_report(unsigned n, const Rational& a, const RootList& roots,
                 const std::optional<bool>& interlaced_with_next);

json interlacing_to_json(const InterlacingReport& report);

/// Only entries with positive probability are listed.
json distribution_to_json(const DistributionTable& table);
DistributionTable distribution_from_json(const json& j);
void write_distribution_csv(std::ostream& out, const DistributionTable& table);

json empirical_to_json(const EmpiricalTable& table);
void write_empirical_csv(std::ostream& out, const EmpiricalTable& table);

/// Columns n, a, value_num, value_den, value_float, predicted_leading, ratio.
/// The last two are left empty where the prediction does not apply.
void write_moments_csv_header(std::ostream& out);
void write_moments_csv_row(std::ostream& out, const MomentRecord& record);

/// Shortest round-trip decimal for a double.
std::string format_double(double value);

}  // namespace elephant::io
