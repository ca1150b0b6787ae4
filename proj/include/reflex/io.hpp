#pragma once

#include "reflex/classify.hpp"
#include "reflex/numthy.hpp"
#include "reflex/simplex.hpp"
#include "reflex/weights.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace reflex::io {

using nlohmann::ordered_json;

/// JSON array of decimal strings.
ordered_json partition_to_json(const numthy::UnitPartition& p);
/// {"weights": [...], "total": "...", "m": "..."}, weights sorted descending.
ordered_json weights_to_json(const weights::WeightSystem& q);
/// {"dim": d, "vertices": [[...], ...]} with decimal-string entries.
ordered_json simplex_to_json(const simplex::LatticeSimplex& s);
ordered_json matrix_to_json(const IntMatrix& m);
simplex::LatticeSimplex simplex_from_json(const nlohmann::json& j);
simplex::LatticeSimplex read_simplex_file(const std::string& path);

/// {"statement", "holds", "extremals": [...]} plus length / checked counts.
ordered_json sweep_to_json(const numthy::SweepVerdict& v);
ordered_json kprop_to_json(const numthy::KpropReport& r);

/// RFC 4180 quoting: fields containing a comma, quote or line break are
/// quoted with inner quotes doubled.
std::string csv_field(std::string_view field);

inline constexpr const char* kCsvHeader = "d,weights,partition,m,lambda,volume,points,maxEdge,selfDual";

void export_csv(const std::vector<classify::ClassRecord>& records, std::ostream& out);
void export_csv(const std::vector<classify::ClassRecord>& records, const std::string& path);

}  // namespace reflex::io
