#pragma once

#include <json.hpp>

#include "specpart/bounds.hpp"
#include "specpart/designs.hpp"
#include "specpart/partition.hpp"

namespace specpart {

// Witness payload: {"n": int, "cliques": [[int, ...], ...]}. The host graph
// of a partition is exactly the union of its clique edges, so the payload
// reconstructs it; validity is the caller's concern.
nlohmann::json partition_to_json(const CliquePartition& p);
CliquePartition partition_from_json(const nlohmann::json& j);

// {"v": int, "blocks": [[int, ...], ...]}
nlohmann::json design_to_json(const Design& d);
Design design_from_json(const nlohmann::json& j);

// {name, quantity, params, raw, strengthened, equality_diagnosis} plus the
// certificate payloads when present.
nlohmann::json report_to_json(const BoundReport& r);

nlohmann::json dashboard_to_json(const Dashboard& d);

}  // namespace specpart
