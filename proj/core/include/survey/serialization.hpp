#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "survey/estimator.hpp"
#include "survey/functionals.hpp"
#include "survey/optimizer.hpp"

namespace survey {

std::string prior_to_json(const Prior& prior);
Prior prior_from_json(const std::string& text);

// Stores structure (pieces, flats, atoms), not tables: piece CDF values are
// recomputable from prior + alpha.
std::string offer_to_json(const OfferDistribution& dist);
OfferDistribution offer_from_json(const std::string& text);

std::string design_to_json(const Design& design);
Design design_from_json(const std::string& text);

std::string report_to_json(const SimulationReport& report);
std::string report_to_csv(const SimulationReport& report);  // header + one row

std::string certificate_to_json(const CertificateReport& report);
std::string certificate_table_to_csv(const CertificateReport& report);  // x,H rows

// File helpers (throw InvalidInput on I/O failure).
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace survey
