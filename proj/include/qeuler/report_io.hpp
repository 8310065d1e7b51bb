#pragma once

// Serialization of identity and cross-check reports: JSON mirrors the typed
// structures, CSV cells hold the canonical text forms.

#include "qeuler/identity.hpp"

#include <json.hpp>

#include <string>

namespace qeuler {

/// Only the fields the theorem reads.
nlohmann::json point_to_json(TheoremId id, const Point& pt);
/// "p=3 m=1 h=1 n=2 x=-1"
std::string point_label(TheoremId id, const Point& pt);

nlohmann::json report_to_json(const IdentityReport& rep);
/// JSON array of reports.
nlohmann::json reports_to_json(const GridResult& res);
/// Plain-text table of per-theorem counts followed by the first failures.
std::string summary_table(const GridResult& res);

nlohmann::json crosscheck_to_json(const CrosscheckReport& rep);
std::string crosscheck_csv(const CrosscheckReport& rep);
std::string crosscheck_text(const CrosscheckReport& rep);

}  // namespace qeuler
