#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gitq/chambers.hpp"
#include "gitq/hilbert.hpp"
#include "gitq/stability.hpp"
#include "gitq/toric.hpp"
#include "gitq/walls.hpp"

namespace gitq {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "gitq/1";

// Parsing. Indices are 1-based on input.

/// "2,2,2,1,1,1" or "1/4,1/4,..."; rational vectors are cleared to the
/// primitive integer polarization.
Polarization parse_polarization(std::string_view text);
/// "1,4" -> {0,3}; every entry must lie in 1..n.
IndexSet parse_index_list(std::string_view text, int n);
/// One point per line, three rationals separated by whitespace. Blank lines
/// and lines starting with '#' are skipped.
PointConfiguration parse_points(std::istream& in);

// Rendering. Indices are 1-based and weights are decimal strings.

Json to_json(IndexSet s);
Json to_json(const Polarization& m);
Json to_json(const StabilityVerdict& v);
Json to_json(const GenericStability& g);
Json to_json(const Chamber& c);
Json to_json(const ChamberAtlas& atlas);
Json to_json(const ChamberLookup& lookup);
Json to_json(const QuotientClassification& q);
Json to_json(const WallCrossingReport& r);
Json to_json(const ToricModel& m);
Json to_json(const std::vector<HilbertRow>& rows);

Json atlas_document(const ChamberAtlas& atlas);

}  // namespace gitq
