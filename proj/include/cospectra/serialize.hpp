#pragma once

#include "cospectra/beta_solver.hpp"
#include "cospectra/centrality.hpp"
#include "cospectra/exact_walks.hpp"
#include "cospectra/spectral.hpp"

#include <json.hpp>

#include <string>

namespace cospectra {

using Json = nlohmann::ordered_json;

/// Version tag stamped on every top-level document.
inline constexpr const char* kSchemaVersion = "cospectra/1";

/// {"value": "<truncated decimal>", "digits": P}
Json real_to_json(const Real& x, int digits);

Json to_json(const WalkTable& walks);
WalkTable walk_table_from_json(const Json& j);

Json to_json(const CharPoly& cp);
CharPoly char_poly_from_json(const Json& j);

Json to_json(const SpectralData& sd);
Json to_json(const Partition& p);
Json to_json(const CentralityReport& report);
/// Header `vertex,value,digits,class` then one row per vertex.
std::string to_csv(const CentralityReport& report);
Json to_json(const EntropyResult& e, int digits);

Json to_json(const Bracket& b);
Json to_json(const BetaRoot& root);
Json to_json(const RationalProbe& probe, int digits);
Json to_json(const RegularityReport& report);

} // namespace cospectra
