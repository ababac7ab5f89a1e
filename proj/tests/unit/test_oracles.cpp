// Sanity checks on the brute-force oracles themselves, against known counts.
#include <doctest.h>

#include "oracles.hpp"

namespace {

oracle::Graph g(int n, std::vector<std::pair<int, int>> edges) { return oracle::Graph{n, std::move(edges)}; }

}  // namespace

TEST_CASE("partition counts are Bell numbers") {
  CHECK(oracle::all_partitions(1).size() == 1);
  CHECK(oracle::all_partitions(3).size() == 5);
  CHECK(oracle::all_partitions(4).size() == 15);
  CHECK(oracle::all_partitions(5).size() == 52);
}

TEST_CASE("tree counts") {
  // Unrooted trees with n labelled leaves and internal degree >= 3; cubic ones are (2n-5)!!.
  CHECK(oracle::all_trees(3, false).size() == 1);
  CHECK(oracle::all_trees(4, false).size() == 4);
  CHECK(oracle::all_trees(5, false).size() == 26);
  CHECK(oracle::all_trees(6, false).size() == 236);
  CHECK(oracle::all_trees(4, true).size() == 3);
  CHECK(oracle::all_trees(5, true).size() == 15);
  CHECK(oracle::all_trees(6, true).size() == 105);
}

TEST_CASE("down-closed systems are counted by Dedekind numbers") {
  CHECK(oracle::all_small_systems(2).size() == 6);
  CHECK(oracle::all_small_systems(3).size() == 20);
  CHECK(oracle::all_small_systems(4).size() == 168);
}

TEST_CASE("graph enumeration") {
  CHECK(oracle::graphs_up_to_iso(4).size() == 11);
  CHECK(oracle::graphs_up_to_iso(5).size() == 34);
  // Connected graphs by edge count: 1, 3, 5, 12 for 2..5 edges.
  CHECK(oracle::connected_graphs(5).size() == 21);
}

TEST_CASE("rewrite refinement") {
  const oracle::Family fine{0b001, 0b010, 0b100};
  const oracle::Family coarse{0b011, 0b100};
  CHECK(oracle::rewrite_finer(fine, coarse));
  CHECK_FALSE(oracle::rewrite_finer(coarse, fine));
  CHECK(oracle::rewrite_finer({}, coarse));
  CHECK_FALSE(oracle::rewrite_finer(coarse, {}));
}

TEST_CASE("width oracles on named graphs") {
  const auto k4 = g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const auto c4 = g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const auto p4 = g(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(oracle::treewidth(k4) == 3);
  CHECK(oracle::treewidth_by_elimination(k4) == 3);
  CHECK(oracle::treewidth(c4) == 2);
  CHECK(oracle::treewidth(p4) == 1);
  CHECK(oracle::treewidth_by_elimination(p4) == 1);
  CHECK(oracle::branchwidth(k4) == 3);
  CHECK(oracle::branchwidth(g(3, {{0, 1}, {1, 2}, {2, 0}})) == 2);
  CHECK(oracle::rankwidth(c4) == 1);
  CHECK(oracle::rankwidth(g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})) == 2);
  CHECK(oracle::cut_rank(c4, 0b0101) == 1);
  CHECK(oracle::cut_rank(c4, 0b0011) == 2);
  CHECK(oracle::vertex_boundary(k4, 0b000001) == 2);
}
