#ifndef VINC_SERIALIZE_HPP
#define VINC_SERIALIZE_HPP

#include <json.hpp>

#include "bijections.hpp"
#include "deletion.hpp"
#include "enumerate.hpp"
#include "series.hpp"
#include "wilf.hpp"

namespace vinc {

// JSON views of the report structs, shared by the C API and the test suites.
nlohmann::json to_json(const StatTable& t);
nlohmann::json to_json(const WilfReport& r);
nlohmann::json to_json(const SetCoincidenceReport& r);
nlohmann::json to_json(const WilfClasses& c);
nlohmann::json to_json(const BijectionReport& r);
nlohmann::json to_json(const RevDelCertificate& c);
nlohmann::json to_json(const SeriesBruteforceReport& r);
/// Coefficient table {"family":..., "N":..., "F":[{"n","a","coeff"},...]}.
nlohmann::json series_to_json(Family f, const FamilySeries& s);
nlohmann::json coeff_to_json(SeriesInt v);

}  // namespace vinc

#endif
