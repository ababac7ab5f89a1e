#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "widthdual/duality.hpp"
#include "widthdual/functions.hpp"
#include "widthdual/graph.hpp"
#include "widthdual/limits.hpp"
#include "widthdual/tree.hpp"

namespace widthdual {

enum class Parameter { kTreewidth, kBranchwidth, kRankwidth };

std::string_view to_string(Parameter p);
Parameter parse_parameter(std::string_view name);

/// The partition function and ground set a width parameter is measured on:
/// treewidth uses border(G) on the edges with threshold k+1; branchwidth uses
/// max_f(vertex boundary) on the edges and rankwidth max_f(cut rank) on the
/// vertices, both with threshold k.
class WidthInstance {
 public:
  WidthInstance(const Graph& g, Parameter parameter);

  Parameter parameter() const { return parameter_; }
  const GroundSet& ground() const { return psi_.ground(); }
  const PartitionFunction& function() const { return psi_; }
  Value threshold(int k) const;
  LevelSet level_set(int k) const { return LevelSet(psi_, threshold(k)); }

 private:
  Parameter parameter_;
  PartitionFunction psi_;
};

/// Caveats the definitions do not cover: treewidth on a union of stars,
/// disconnected inputs.
std::vector<std::string> warnings(const Graph& g, Parameter parameter);

/// Singleton-leaf partitioning tree compatible with P_k, if any.
std::optional<PartitioningTree> find_width_tree(const WidthInstance& instance, int k, int cap = kSearchCap);

/// Least k >= 0 admitting a compatible tree with singleton leaves.
int compute_width(const Graph& g, Parameter parameter, int cap = kSearchCap);

struct Certificate {
  enum class Kind { kTree, kBramble };

  Kind kind = Kind::kTree;
  Parameter parameter = Parameter::kTreewidth;
  int k = 0;
  std::string graph;  // graph_hash of the input
  std::optional<PartitioningTree> tree;
  std::optional<UpFamily> bramble;
};

std::string_view to_string(Certificate::Kind kind);

/// A compatible tree when width <= k, otherwise a big bramble (small sets are
/// ∅ and singletons) over P_k built by greedy minimization. Throws Error if
/// neither side can be produced and verified.
Certificate certify(const Graph& g, Parameter parameter, int k, int cap = kSearchCap);

struct Verification {
  bool ok = false;
  std::string reason;  // empty when ok
  explicit operator bool() const { return ok; }
};

/// Re-derives the certificate's claim from the definitions.
Verification verify_certificate(const Certificate& c, const Graph& g, int cap = kSearchCap);

}  // namespace widthdual
