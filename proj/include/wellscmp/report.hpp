#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wellscmp/canonical_families.hpp"
#include "wellscmp/gibbs.hpp"
#include "wellscmp/majorization.hpp"
#include "wellscmp/temperature.hpp"
#include "wellscmp/value.hpp"
#include "wellscmp/wells.hpp"

namespace wellscmp {

inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::json;

/// Everything a run needs to be reproduced. Timing lives in its own field
/// so the rest of a report is stable across reruns.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> params;
  std::optional<uint64_t> seed;
  std::string arithmetic = "exact";
  std::string version = kToolVersion;
  double elapsed_ms = 0.0;
};

/// {"exact": "5/9"} for rationals, {"float": 0.5555} otherwise.
Json tag_value(const Value& v);
Json tag_float(double d);

Json manifest_json(const RunManifest& m);

Json wells_report_json(const WellsReport& r);
Json tminus_report_json(const TMinusReport& r);
Json canonical_report_json(const CanonicalReport& r);
Json family_certs_json(const std::vector<FamilyCertificate>& certs);
Json power_analog_json(const PowerAnalogReport& r);
Json majorization_cert_json(const MajorizationCertificate& c);
Json karamata_json(const KaramataReport& r);
Json theorem_report_json(const TheoremReport& r);
Json gks_json(const GksReport& r);
Json domination_json(const DominationReport& r);
Json ginibre_json(const GinibreReport& r);
Json scaling_json(const ScalingReport& r);
Json ensemble_json(const EnsembleReport& r);
Json bounds_json(const TemperatureBounds& b);
Json measure_json(const EvenMeasure& mu, unsigned moments_to);

std::string csv_escape(const std::string& cell);
std::string csv_row(const std::vector<std::string>& cells);
std::string value_cell(const Value& v);

std::string wells_report_csv(const WellsReport& r);
std::string tminus_report_csv(const TMinusReport& r);
std::string canonical_report_csv(const CanonicalReport& r);
std::string family_certs_csv(const std::vector<FamilyCertificate>& certs);
std::string power_analog_csv(const PowerAnalogReport& r);
std::string theorem_report_csv(const TheoremReport& r);
std::string gks_csv(const GksReport& r);
std::string domination_csv(const DominationReport& r);
std::string ginibre_csv(const GinibreReport& r);
std::string scaling_csv(const ScalingReport& r);
std::string ensemble_csv(const EnsembleReport& r);
std::string bounds_csv(const TemperatureBounds& b);
std::string measure_csv(const EvenMeasure& mu, unsigned moments_to);

}  // namespace wellscmp
