#pragma once

#include <string>

#include <json.hpp>

#include "sumprod/fpset.hpp"
#include "sumprod/spectrum.hpp"
#include "sumprod/stats.hpp"
#include "sumprod/verify.hpp"

namespace sumprod {

// Floats are emitted with 12 significant digits; exact quantities (counts,
// sizes, rationals) are emitted exactly, rationals as "num/den" strings.

double round12(double x);
nlohmann::json json_double(double x);
nlohmann::json json_u128(u128 v);  // number if it fits in uint64, else string
std::string format_double(double x);

// Set literal: {"p": <prime>, "elements": [..]} with elements strictly
// increasing, each in [0, p).
nlohmann::json set_to_json(const FpSet& a);
FpSet set_from_json(const nlohmann::json& j);

nlohmann::json energy_to_json(const EnergyReport& r);
nlohmann::json alg_to_json(const AlgReport& r);
nlohmann::json spectrum_to_json(const SpectrumReport& r, size_t magnitudes_cap = 4096);
nlohmann::json pair_difference_to_json(const PairDifferenceReport& r);
nlohmann::json spec_energy_to_json(const SpecEnergyBound& r);
nlohmann::json max_gauss_to_json(const MaxGauss& r, const SubgroupSpec& h);
nlohmann::json scale_trace_to_json(const ScaleTrace& t);
nlohmann::json growth_trace_to_json(const GrowthTrace& t);
nlohmann::json record_to_json(const VerificationRecord& r);

inline constexpr const char* kGaussCsvHeader = "p,d,delta,max_gauss,delta_prime";
std::string gauss_row_csv(const GaussRow& row);

}  // namespace sumprod
