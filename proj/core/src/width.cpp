#include "widthdual/width.hpp"

#include <algorithm>

#include "widthdual/errors.hpp"
#include "widthdual/search.hpp"

namespace widthdual {

std::string_view to_string(Parameter p) {
  switch (p) {
    case Parameter::kTreewidth: return "treewidth";
    case Parameter::kBranchwidth: return "branchwidth";
    case Parameter::kRankwidth: return "rankwidth";
  }
  return "unknown";
}

Parameter parse_parameter(std::string_view name) {
  if (name == "treewidth" || name == "tw") return Parameter::kTreewidth;
  if (name == "branchwidth" || name == "bw") return Parameter::kBranchwidth;
  if (name == "rankwidth" || name == "rw") return Parameter::kRankwidth;
  throw InvalidArgument("unknown width parameter '" + std::string(name) + "'");
}

std::string_view to_string(Certificate::Kind kind) { return kind == Certificate::Kind::kTree ? "tree" : "bramble"; }

namespace {

// Branch and rank decompositions are cubic trees. Without the degree bound a
// star of singletons would give max_f <= 2 (resp. 1) on every graph.
constexpr std::size_t kCubic = 3;

PartitionFunction function_for(const Graph& g, Parameter parameter) {
  switch (parameter) {
    case Parameter::kTreewidth: return memoized(border(g));
    case Parameter::kBranchwidth: return memoized(at_most_blocks(max_f(vertex_boundary_f(g)), kCubic));
    case Parameter::kRankwidth: return memoized(at_most_blocks(max_f(cut_rank_f(g)), kCubic));
  }
  throw InvalidArgument("unknown width parameter");
}

}  // namespace

WidthInstance::WidthInstance(const Graph& g, Parameter parameter)
    : parameter_(parameter), psi_(function_for(g, parameter)) {}

Value WidthInstance::threshold(int k) const {
  return Value(static_cast<std::int64_t>(parameter_ == Parameter::kTreewidth ? k + 1 : k));
}

std::vector<std::string> warnings(const Graph& g, Parameter parameter) {
  std::vector<std::string> out;
  if (parameter == Parameter::kTreewidth && g.is_union_of_stars()) {
    out.emplace_back("graph is a union of stars; the border correspondence with treewidth does not apply");
  }
  if (!g.is_connected()) out.emplace_back("graph is disconnected; widths follow the definitions as-is");
  return out;
}

std::optional<PartitioningTree> find_width_tree(const WidthInstance& instance, int k, int cap) {
  const LevelSet level = instance.level_set(k);
  return find_compatible_tree(instance.ground(), [&level](const Partition& p) { return level.contains(p); },
                              SmallSetSystem::singletons(instance.ground()), cap);
}

int compute_width(const Graph& g, Parameter parameter, int cap) {
  const WidthInstance instance(g, parameter);
  // Every value is bounded by the vertex count: there P_k holds every
  // partition with finite Ψ, which includes all cubic-tree node partitions.
  const int limit = g.vertex_count() + 1;
  for (int k = 0; k <= limit; ++k) {
    if (find_width_tree(instance, k, cap)) return k;
  }
  throw Error("no compatible tree found up to k = " + std::to_string(limit));
}

Certificate certify(const Graph& g, Parameter parameter, int k, int cap) {
  if (k < 0) throw InvalidArgument("certify: k must be non-negative");
  const WidthInstance instance(g, parameter);
  Certificate c;
  c.parameter = parameter;
  c.k = k;
  c.graph = graph_hash(g);
  if (auto tree = find_width_tree(instance, k, cap)) {
    c.kind = Certificate::Kind::kTree;
    c.tree = std::move(tree);
    return c;
  }

  const GroundSet& ground = instance.ground();
  const LevelSet level = instance.level_set(k);
  const auto members = level.enumerate(cap);
  const SmallSetSystem small = SmallSetSystem::singletons(ground);
  // An upward-closed Br meets every member of P_k↑ iff no compatible tree
  // has all its leaves outside Br.
  const PartitionPredicate in_level = [&level](const Partition& p) { return level.contains(p); };
  auto meets_closure = [&](const UpFamily& br) {
    return !find_compatible_tree(ground, in_level, SubsetPredicate([&br](Subset s) { return !br.contains(s); }), cap);
  };
  auto verify = [&](const UpFamily& br) { return is_big_bramble(br, members, small); };
  auto built = construct_big_bramble(meets_closure, ground, small, verify);
  if (!built || !built->verified) {
    throw Error("certify: no tree at k = " + std::to_string(k) + " but bramble construction did not verify");
  }
  c.kind = Certificate::Kind::kBramble;
  c.bramble = std::move(built->family);
  return c;
}

Verification verify_certificate(const Certificate& c, const Graph& g, int cap) {
  auto fail = [](std::string why) { return Verification{false, std::move(why)}; };
  if (c.graph != graph_hash(g)) return fail("graph hash mismatch");
  if (c.k < 0) return fail("negative k");
  const WidthInstance instance(g, c.parameter);
  const GroundSet& ground = instance.ground();
  const LevelSet level = instance.level_set(c.k);

  if (c.kind == Certificate::Kind::kTree) {
    if (!c.tree) return fail("tree certificate without a tree");
    try {
      c.tree->validate(ground.full());
    } catch (const InvalidArgument& e) {
      return fail(std::string("invalid tree: ") + e.what());
    }
    for (auto leaf : c.tree->leaves()) {
      if (c.tree->label(leaf)->size() != 1) return fail("leaf " + c.tree->label(leaf)->to_string() + " is not a singleton");
    }
    const auto internal = c.tree->internal_nodes();
    if (internal.empty()) {
      if (!level.contains(c.tree->displayed_partition())) return fail("displayed partition exceeds the threshold");
    }
    for (auto v : internal) {
      const Partition np = c.tree->node_partition(v);
      if (!level.contains(np)) {
        return fail("node-partition " + np.to_string() + " has value " + instance.function()(np).to_string() +
                    " above threshold " + level.threshold().to_string());
      }
    }
    return Verification{true, {}};
  }

  if (!c.bramble) return fail("bramble certificate without a bramble");
  const SmallSetSystem small = SmallSetSystem::singletons(ground);
  for (Subset m : c.bramble->minimal_members()) {
    if (!ground.contains(m)) return fail("bramble member " + m.to_string() + " outside the ground set");
    if (small.is_small(m)) return fail("bramble member " + m.to_string() + " is small");
  }
  const auto members = level.enumerate(cap);
  if (!is_bramble(*c.bramble, members)) return fail("family is not a bramble of the level set");
  return Verification{true, {}};
}

}  // namespace widthdual
