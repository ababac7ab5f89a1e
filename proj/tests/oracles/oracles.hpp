#pragma once

// Brute-force reference implementations used only by the tests. They work on
// raw bit masks and share no algorithm with the library: "finer" is decided
// by rewriting, closures by enumerating trees, widths by enumerating every
// decomposition tree, brambles by enumerating families.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Mask = std::uint32_t;
using Family = std::vector<Mask>;  // sorted, duplicate-free
using Edge = std::pair<int, int>;

Family normalize(Family f);

// ---- refinement by rewriting ----

/// Every family reachable from `start` by deleting one element from a set or
/// splitting one set into a partition of itself (breadth first).
std::set<Family> rewrite_closure(const Family& start);
bool rewrite_finer(const Family& finer, const Family& coarser);

// ---- set partitions ----

std::vector<Family> all_partitions(int n);
/// All families of nonempty subsets of {0..n-1}; only sane for n <= 3.
std::vector<Family> all_families(int n);

// ---- trees ----

struct Tree {
  std::vector<std::vector<int>> adj;
  std::vector<int> leaf;  // leaf index or -1 for internal nodes
  int leaves = 0;
};

/// Every unrooted tree on n labelled leaves with internal degrees >= 3
/// (only degree exactly 3 when cubic), each exactly once.
std::vector<Tree> all_trees(int n, bool cubic);

/// Node partition of internal node v, with leaf i carrying labels[i].
Family node_partition(const Tree& t, int v, const std::vector<Mask>& labels);

/// Displayed partitions of all partial partitioning trees compatible with p.
/// Trees without internal nodes count only when their partition is in p.
std::set<Family> closure_by_trees(int n, const std::vector<Family>& p);

// ---- brambles and duality ----

/// All downward-closed families of subsets of {0..n-1}, as membership tables
/// indexed by mask.
std::vector<std::vector<bool>> all_small_systems(int n);

/// Literal search over every explicit family of big sets (n <= 3).
bool big_bramble_exists_literal(int n, const std::vector<Family>& q, const std::vector<bool>& small);
/// Search over upward closures of antichains of big sets.
bool big_bramble_exists_antichain(int n, const std::vector<Family>& q, const std::vector<bool>& small);

bool is_dualising(int n, const std::vector<Family>& q);
bool is_refining(int n, const std::vector<Family>& q);
bool is_pushing(int n, const std::vector<Family>& p);

// ---- graphs and widths ----

struct Graph {
  int n = 0;
  std::vector<Edge> edges;
};

/// Graphs with exactly `vertices` vertices, one per isomorphism class.
std::vector<Graph> graphs_up_to_iso(int vertices);
/// Connected graphs with 2..max_edges edges and no isolated vertices, one per
/// isomorphism class.
std::vector<Graph> connected_graphs(int max_edges);

int border(const Graph& g, const Family& edge_partition);
int vertex_boundary(const Graph& g, Mask edge_set);
int cut_rank(const Graph& g, Mask vertex_set);

int treewidth(const Graph& g);    // min over all trees on the edges
int branchwidth(const Graph& g);  // min over cubic trees on the edges
int rankwidth(const Graph& g);    // min over cubic trees on the vertices
/// Classical treewidth by trying every elimination order.
int treewidth_by_elimination(const Graph& g);

}  // namespace oracle
