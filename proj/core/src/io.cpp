#include "widthdual/io.hpp"

#include <algorithm>

#include "widthdual/errors.hpp"

namespace widthdual::io {

json to_json(Subset s) { return s.elements(); }

json to_json(const SetFamily& f) {
  json out = json::array();
  for (Subset b : f) out.push_back(to_json(b));
  return out;
}

json to_json(const Partition& p) { return to_json(p.family()); }

json to_json(const PointedPartition& p) {
  return json{{"partition", to_json(p.base())}, {"pointed", p.pointed_index()}};
}

json to_json(const SmallSetSystem& s) {
  json maximal = json::array();
  for (Subset m : s.maximal_members()) maximal.push_back(to_json(m));
  return json{{"maximal", maximal}};
}

json to_json(const UpFamily& f) {
  json minimal = json::array();
  for (Subset m : f.minimal_members()) minimal.push_back(to_json(m));
  return json{{"minimal", minimal}};
}

json to_json(const PartitioningTree& t) {
  json edges = json::array();
  for (auto [u, v] : t.edges()) edges.push_back({u, v});
  json leaves = json::object();
  for (auto leaf : t.leaves()) leaves[std::to_string(leaf)] = to_json(*t.label(leaf));
  return json{{"edges", edges}, {"leaves", leaves}};
}

json to_json(const Certificate& c) {
  json out{{"kind", std::string(to_string(c.kind))},
           {"parameter", std::string(to_string(c.parameter))},
           {"k", c.k},
           {"graph", c.graph}};
  if (c.tree) out["tree"] = to_json(*c.tree);
  if (c.bramble) out["bramble"] = to_json(*c.bramble);
  return out;
}

json to_json(const Counterexample& c) {
  json out = json::object();
  if (!c.pointed.empty()) {
    json pairs = json::array();
    for (const auto& p : c.pointed) pairs.push_back(to_json(p));
    out["pointed"] = pairs;
  }
  if (!c.sets.empty()) {
    json sets = json::array();
    for (Subset s : c.sets) sets.push_back(to_json(s));
    out["sets"] = sets;
  }
  if (c.small_sets) out["small_sets"] = to_json(*c.small_sets);
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

json to_json(const PropertyReport& r) {
  json out{{"property", r.property}, {"holds", r.holds}, {"exhaustive", r.exhaustive}};
  if (r.counterexample) out["counterexample"] = to_json(*r.counterexample);
  return out;
}

json to_json(const ClosureTable& t) {
  json members = json::array();
  for (const Partition& p : t.members()) members.push_back(to_json(p));
  json derivations = json::array();
  for (std::size_t i = t.axiom_count(); i < t.size(); ++i) {
    const auto& d = t.derivation(i);
    derivations.push_back({{"member", i}, {"left", to_json(d->left)}, {"right", to_json(d->right)}});
  }
  return json{{"ground_size", t.ground().size()},
              {"axioms", t.axiom_count()},
              {"members", members},
              {"derivations", derivations}};
}

json to_json(const Value& v) {
  if (!v.is_infinite() && v.finite().denominator() == 1) return v.finite().numerator();
  return v.to_string();
}

Value value_from_json(const json& j) {
  if (j.is_number_integer()) return Value(j.get<std::int64_t>());
  if (j.is_string()) return Value::parse(j.get<std::string>());
  throw ParseError("expected an integer, \"p/q\" or \"inf\", got " + j.dump());
}

Subset subset_from_json(const json& j, const GroundSet& ground) {
  if (!j.is_array()) throw ParseError("expected an array of element indices, got " + j.dump());
  Subset s;
  for (const json& e : j) {
    if (!e.is_number_integer()) throw ParseError("element index must be an integer, got " + e.dump());
    const int v = e.get<int>();
    if (v < 0 || v >= ground.size()) throw ParseError("element " + std::to_string(v) + " outside the ground set");
    if (s.contains(v)) throw ParseError("element " + std::to_string(v) + " repeated in " + j.dump());
    s |= Subset::singleton(v);
  }
  return s;
}

namespace {

std::vector<Subset> blocks_from_json(const json& j, const GroundSet& ground) {
  if (!j.is_array()) throw ParseError("expected an array of blocks, got " + j.dump());
  std::vector<Subset> blocks;
  for (const json& b : j) blocks.push_back(subset_from_json(b, ground));
  return blocks;
}

template <typename Fn>
auto rethrow_as_parse(Fn&& fn) {
  try {
    return fn();
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

int infer_ground_size(const json& partitions) {
  int top = -1;
  for (const json& p : partitions) {
    if (!p.is_array()) throw ParseError("expected a partition, got " + p.dump());
    for (const json& b : p) {
      if (!b.is_array()) throw ParseError("expected a block, got " + b.dump());
      for (const json& e : b) {
        if (e.is_number_integer()) top = std::max(top, e.get<int>());
      }
    }
  }
  return top + 1;
}

}  // namespace

SetFamily family_from_json(const json& j, const GroundSet& ground) {
  auto blocks = blocks_from_json(j, ground);
  return rethrow_as_parse([&] { return SetFamily(std::move(blocks)); });
}

Partition partition_from_json(const json& j, const GroundSet& ground) {
  auto blocks = blocks_from_json(j, ground);
  return rethrow_as_parse([&] { return Partition(std::move(blocks), ground.full()); });
}

PointedPartition pointed_from_json(const json& j, const GroundSet& ground) {
  if (!j.is_object() || !j.contains("partition") || !j.contains("pointed")) {
    throw ParseError("pointed partition needs \"partition\" and \"pointed\"");
  }
  Partition p = partition_from_json(j.at("partition"), ground);
  const auto idx = j.at("pointed").get<std::size_t>();
  if (idx >= p.size()) throw ParseError("pointed index out of range");
  const Subset block = p.blocks()[idx];
  return PointedPartition(std::move(p), block);
}

SmallSetSystem small_sets_from_json(const json& j, const GroundSet& ground) {
  const json& arr = j.is_object() ? j.at("maximal") : j;
  return SmallSetSystem(blocks_from_json(arr, ground));
}

UpFamily up_family_from_json(const json& j, const GroundSet& ground) {
  const json& arr = j.is_object() ? j.at("minimal") : j;
  return UpFamily(blocks_from_json(arr, ground));
}

PartitioningTree tree_from_json(const json& j, const GroundSet& ground) {
  if (!j.is_object() || !j.contains("edges") || !j.contains("leaves")) {
    throw ParseError("tree needs \"edges\" and \"leaves\"");
  }
  int nodes = 0;
  std::vector<std::pair<int, int>> edges;
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("tree edge must be [u, v], got " + e.dump());
    const int u = e[0].get<int>();
    const int v = e[1].get<int>();
    if (u < 0 || v < 0) throw ParseError("negative tree node id");
    edges.emplace_back(u, v);
    nodes = std::max({nodes, u + 1, v + 1});
  }
  std::vector<std::optional<Subset>> labels;
  for (const auto& [name, block] : j.at("leaves").items()) {
    std::size_t used = 0;
    int id = -1;
    try {
      id = std::stoi(name, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != name.size() || id < 0) throw ParseError("bad leaf node id '" + name + "'");
    nodes = std::max(nodes, id + 1);
    if (labels.size() < static_cast<std::size_t>(nodes)) labels.resize(static_cast<std::size_t>(nodes));
    labels[static_cast<std::size_t>(id)] = subset_from_json(block, ground);
  }
  labels.resize(static_cast<std::size_t>(nodes));
  PartitioningTree t;
  for (const auto& l : labels) {
    if (l) {
      t.add_leaf(*l);
    } else {
      t.add_internal();
    }
  }
  rethrow_as_parse([&] {
    for (auto [u, v] : edges) t.add_edge(u, v);
    t.validate(ground.full());
    return 0;
  });
  return t;
}

Certificate certificate_from_json(const json& j, const GroundSet& ground) {
  Certificate c;
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "tree") {
      c.kind = Certificate::Kind::kTree;
      c.tree = tree_from_json(j.at("tree"), ground);
    } else if (kind == "bramble") {
      c.kind = Certificate::Kind::kBramble;
      c.bramble = up_family_from_json(j.at("bramble"), ground);
    } else {
      throw ParseError("unknown certificate kind '" + kind + "'");
    }
    c.parameter = parse_parameter(j.at("parameter").get<std::string>());
    c.k = j.at("k").get<int>();
    c.graph = j.at("graph").get<std::string>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  return c;
}

std::string key(const Partition& p) { return to_json(p).dump(); }
std::string key(Subset s) { return to_json(s).dump(); }

std::pair<GroundSet, std::vector<Partition>> partition_set_from_json(const json& j, int cap) {
  const json* arr = &j;
  int n = -1;
  if (j.is_object()) {
    if (!j.contains("partitions")) throw ParseError("partition set needs \"partitions\"");
    arr = &j.at("partitions");
    if (j.contains("ground_size")) n = j.at("ground_size").get<int>();
  }
  if (!arr->is_array()) throw ParseError("\"partitions\" must be an array");
  if (n < 0) n = infer_ground_size(*arr);
  GroundSet ground = rethrow_as_parse([&] { return GroundSet(n, cap); });
  std::vector<Partition> out;
  for (const json& p : *arr) {
    Partition part = partition_from_json(p, ground);
    if (std::find(out.begin(), out.end(), part) == out.end()) out.push_back(std::move(part));
  }
  return {std::move(ground), std::move(out)};
}

PartitionFunction partition_function_from_json(const json& j, int cap) {
  if (!j.is_object() || !j.contains("ground_size")) throw ParseError("function input needs \"ground_size\"");
  GroundSet ground = rethrow_as_parse([&] { return GroundSet(j.at("ground_size").get<int>(), cap); });
  if (j.contains("partition_function")) {
    std::vector<std::pair<Partition, Value>> entries;
    for (const auto& [k, v] : j.at("partition_function").items()) {
      json parsed;
      try {
        parsed = json::parse(k);
      } catch (const json::exception&) {
        throw ParseError("bad partition key '" + k + "'");
      }
      entries.emplace_back(partition_from_json(parsed, ground), value_from_json(v));
    }
    std::optional<Value> fallback;
    if (j.contains("default")) fallback = value_from_json(j.at("default"));
    return rethrow_as_parse([&] { return table_pf(ground, entries, fallback); });
  }
  if (j.contains("connectivity_function")) {
    std::vector<std::pair<Subset, Value>> entries;
    for (const auto& [k, v] : j.at("connectivity_function").items()) {
      json parsed;
      try {
        parsed = json::parse(k);
      } catch (const json::exception&) {
        throw ParseError("bad subset key '" + k + "'");
      }
      entries.emplace_back(subset_from_json(parsed, ground), value_from_json(v));
    }
    return rethrow_as_parse([&] { return max_f(connectivity_from_table(ground, entries)); });
  }
  throw ParseError("function input needs \"partition_function\" or \"connectivity_function\"");
}

}  // namespace widthdual::io
