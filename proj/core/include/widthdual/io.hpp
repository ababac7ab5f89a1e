#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "widthdual/closure.hpp"
#include "widthdual/duality.hpp"
#include "widthdual/family.hpp"
#include "widthdual/functions.hpp"
#include "widthdual/report.hpp"
#include "widthdual/tree.hpp"
#include "widthdual/width.hpp"

// JSON text forms. Subsets are arrays of element indices, families and
// partitions are arrays of subsets in canonical order, e.g. [[0,1],[2]].

namespace widthdual::io {

using nlohmann::json;

json to_json(Subset s);
json to_json(const SetFamily& f);
json to_json(const Partition& p);
/// {"partition": [[...]], "pointed": <block index>}
json to_json(const PointedPartition& p);
/// {"maximal": [[...]]}
json to_json(const SmallSetSystem& s);
/// {"minimal": [[...]]}
json to_json(const UpFamily& f);
/// {"edges": [[u,v],...], "leaves": {"<node>": [...]}}
json to_json(const PartitioningTree& t);
json to_json(const Certificate& c);
json to_json(const PropertyReport& r);
json to_json(const Counterexample& c);
/// {"members": [...], "axioms": n, "derivations": [{"member": i, "left": ..., "right": ...}]}
json to_json(const ClosureTable& t);

Subset subset_from_json(const json& j, const GroundSet& ground);
SetFamily family_from_json(const json& j, const GroundSet& ground);
Partition partition_from_json(const json& j, const GroundSet& ground);
PointedPartition pointed_from_json(const json& j, const GroundSet& ground);
SmallSetSystem small_sets_from_json(const json& j, const GroundSet& ground);
UpFamily up_family_from_json(const json& j, const GroundSet& ground);
PartitioningTree tree_from_json(const json& j, const GroundSet& ground);
Certificate certificate_from_json(const json& j, const GroundSet& ground);

/// Canonical textual key of a partition or subset, e.g. "[[0,1],[2]]".
std::string key(const Partition& p);
std::string key(Subset s);

/// A set of partitions: either a bare array of partitions or
/// {"ground_size": n, "partitions": [...]}. Without ground_size the ground
/// set is inferred from the largest element.
std::pair<GroundSet, std::vector<Partition>> partition_set_from_json(const json& j, int cap = kGroundCap);

/// {"ground_size": n, "partition_function": {"<partition key>": value, ...}, "default": value?}
/// or {"ground_size": n, "connectivity_function": {"<subset key>": value, ...}} (loaded as max_f).
/// Values are integers, "p/q" strings, or "inf".
PartitionFunction partition_function_from_json(const json& j, int cap = kGroundCap);

Value value_from_json(const json& j);
json to_json(const Value& v);

}  // namespace widthdual::io
