#pragma once

#include <json.hpp>

#include "specgraph/bounds.hpp"
#include "specgraph/families.hpp"
#include "specgraph/params.hpp"
#include "specgraph/spectra.hpp"
#include "specgraph/verify.hpp"

namespace specgraph {

// JSON views of the report types. Every document carries schema_version so
// downstream consumers can pin the layout.
inline constexpr const char* kSchemaVersion = "1";

nlohmann::json to_json(const GraphParams& p);
nlohmann::json to_json(const SpectralData& sd);
nlohmann::json to_json(const KTreeCertificate& cert);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const VerificationReport& report);

// One CSV line per suite for summary tables.
std::string verification_csv_header();
std::string verification_csv_row(const VerificationReport& report);

}  // namespace specgraph
