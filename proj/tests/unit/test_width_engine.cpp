#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "widthdual/closure.hpp"
#include "widthdual/errors.hpp"
#include "widthdual/graph.hpp"
#include "widthdual/search.hpp"
#include "widthdual/width.hpp"

using namespace widthdual;
using testing_helpers::S;

namespace {

Graph to_graph(const oracle::Graph& g) {
  std::vector<Graph::Edge> edges(g.edges.begin(), g.edges.end());
  return Graph(g.n, edges);
}

oracle::Graph to_oracle(const Graph& g) { return oracle::Graph{g.vertex_count(), g.edges()}; }

const Graph kK3 = parse_graph("0 1\n1 2\n2 0\n");
const Graph kK4 = parse_graph("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
const Graph kC4 = parse_graph("0 1\n1 2\n2 3\n3 0\n");
const Graph kP4 = parse_graph("0 1\n1 2\n2 3\n");

}  // namespace

TEST_CASE("find_compatible_tree examples") {
  const GroundSet e(3);
  const auto mf = max_f(vertex_boundary_f(kK3));
  const auto within = [&](int k) { return [&mf, k](const Partition& p) { return mf(p) <= Value(k); }; };

  const auto tree = find_compatible_tree(e, within(2), SmallSetSystem::singletons(e));
  REQUIRE(tree);
  CHECK(tree->internal_nodes().size() == 1);
  CHECK(tree->displayed_partition() == Partition::singletons(e.full()));
  CHECK(mf(tree->node_partitions().front()) == Value(2));

  CHECK_FALSE(find_compatible_tree(e, within(1), SmallSetSystem::singletons(e)));

  for (int n = 2; n <= 6; ++n) {
    const GroundSet g(n);
    const auto any = find_compatible_tree(g, [](const Partition&) { return true; }, SmallSetSystem::singletons(g));
    REQUIRE(any);
    CHECK(any->displayed_partition() == Partition::singletons(g.full()));
  }
  CHECK_THROWS_AS(find_compatible_tree(GroundSet(11), [](const Partition&) { return true; },
                                       SmallSetSystem::singletons(GroundSet(11))),
                  CapExceeded);
}

TEST_CASE("tree search leaf conditions") {
  const GroundSet e(4);
  // With everything small the single leaf {E} works once {E} is a member.
  const auto whole_only = [&](const Partition& p) { return p.size() == 1; };
  auto t = find_compatible_tree(e, whole_only, SmallSetSystem::everything(e));
  REQUIRE(t);
  CHECK(t->node_count() == 1);
  // A two-block member is displayed by a single edge.
  const Partition two{S({0, 1}), S({2, 3})};
  t = find_compatible_tree(e, [&](const Partition& p) { return p == two; }, SmallSetSystem({S({0, 1}), S({2, 3})}));
  REQUIRE(t);
  CHECK(t->displayed_partition() == two);
  // ... but only as a member: nothing else is vacuously compatible.
  CHECK_FALSE(find_compatible_tree(e, [](const Partition&) { return false; }, SmallSetSystem::everything(e)));
}

TEST_CASE("tree search agrees with the closure view") {
  // A compatible tree with small leaves exists iff the closure has a small partition.
  for (int n : {3, 4}) {
    const GroundSet e(n);
    const auto all = enumerate_partitions(e);
    const auto systems = oracle::all_small_systems(n);
    for (std::uint64_t pick = 0; pick < (n == 3 ? 32u : 300u); ++pick) {
      const std::uint64_t bits = n == 3 ? pick : (pick * 2654435761u) & 0x7fff;
      std::vector<Partition> p;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if ((bits >> i) & 1u) p.push_back(all[i]);
      }
      const auto table = closure(e, p);
      const auto member = [&](const Partition& x) { return std::find(p.begin(), p.end(), x) != p.end(); };
      for (std::size_t si = 0; si < systems.size(); si += (n == 3 ? 1 : 7)) {
        std::vector<Subset> small;
        for (std::size_t s = 0; s < systems[si].size(); ++s) {
          if (systems[si][s]) small.push_back(Subset(static_cast<Subset::Bits>(s)));
        }
        const SmallSetSystem sys = small.empty() ? SmallSetSystem::nothing() : SmallSetSystem(small);
        const auto tree = find_compatible_tree(e, member, sys);
        CHECK(tree.has_value() == has_small_partition(table.members(), sys));
        if (tree && !tree->internal_nodes().empty()) CHECK(is_compatible(*tree, member));
        if (tree) CHECK(is_small_partition(tree->displayed_partition(), sys));
      }
    }
  }
}

TEST_CASE("golden widths") {
  CHECK(compute_width(kK4, Parameter::kTreewidth) == 3);
  CHECK(compute_width(kC4, Parameter::kTreewidth) == 2);
  CHECK(compute_width(kP4, Parameter::kTreewidth) == 1);
  CHECK(compute_width(kK3, Parameter::kBranchwidth) == 2);
  CHECK(compute_width(kK4, Parameter::kBranchwidth) == 3);
  CHECK(compute_width(kC4, Parameter::kRankwidth) == 1);
  CHECK(compute_width(parse_graph("0 1\n1 2\n2 3\n3 4\n4 0\n"), Parameter::kRankwidth) == 2);
  CHECK_THROWS_AS(compute_width(parse_graph("0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 9\n9 10\n10 11\n"),
                                Parameter::kTreewidth),
                  CapExceeded);
}

TEST_CASE("widths match brute-force tree enumeration on small connected graphs") {
  for (const auto& og : oracle::connected_graphs(5)) {
    const Graph g = to_graph(og);
    CAPTURE(serialize_graph(g));
    const int tw = compute_width(g, Parameter::kTreewidth);
    CHECK(tw == oracle::treewidth(og));
    if (!g.is_union_of_stars()) CHECK(tw == oracle::treewidth_by_elimination(og));
    CHECK(compute_width(g, Parameter::kBranchwidth) == oracle::branchwidth(og));
  }
}

TEST_CASE("branchwidth matches the cubic-tree oracle up to seven edges") {
  const std::vector<const char*> graphs{
      "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n",             // K4
      "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n",             // C6
      "0 1\n1 2\n2 3\n3 0\n0 2\n1 3\n0 4\n",        // K4 plus a pendant edge
      "0 1\n1 2\n2 0\n2 3\n3 4\n4 2\n4 5\n",        // bowtie with a tail
      "0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n",        // C7
      "0 1\n0 2\n0 3\n1 4\n2 4\n3 4\n1 2\n",        // K2,3 plus an edge
  };
  for (const char* text : graphs) {
    const Graph g = parse_graph(text);
    CAPTURE(text);
    CHECK(compute_width(g, Parameter::kBranchwidth) == oracle::branchwidth(to_oracle(g)));
  }
}

TEST_CASE("rankwidth matches the cubic-tree oracle on all graphs up to five vertices") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& og : oracle::graphs_up_to_iso(n)) {
      const Graph g = to_graph(og);
      CAPTURE(serialize_graph(g));
      CHECK(compute_width(g, Parameter::kRankwidth) == oracle::rankwidth(og));
    }
  }
}

TEST_CASE("certificates: exclusivity, verification, and the width threshold") {
  const std::vector<Graph> graphs{kK3, kK4, kC4, kP4, parse_graph("0 1\n1 2\n2 0\n2 3\n")};
  for (const Graph& g : graphs) {
    for (Parameter p : {Parameter::kTreewidth, Parameter::kBranchwidth, Parameter::kRankwidth}) {
      const int w = compute_width(g, p);
      for (int k = 0; k <= w + 1; ++k) {
        const Certificate c = certify(g, p, k);
        CHECK(c.tree.has_value() != c.bramble.has_value());
        CHECK((c.kind == Certificate::Kind::kTree) == (k >= w));
        CHECK(c.graph == graph_hash(g));
        const auto v = verify_certificate(c, g);
        CHECK_MESSAGE(v.ok, v.reason);
      }
    }
  }
}

TEST_CASE("certify examples") {
  const Certificate tree = certify(kK3, Parameter::kBranchwidth, 2);
  CHECK(tree.kind == Certificate::Kind::kTree);
  const Certificate br = certify(kK3, Parameter::kBranchwidth, 1);
  REQUIRE(br.kind == Certificate::Kind::kBramble);
  const auto& members = br.bramble->minimal_members();
  for (Subset m : members) CHECK(m.size() >= 2);
  for (Subset a : members) {
    for (Subset b : members) CHECK(a.intersects(b));
  }
  CHECK(certify(kK4, Parameter::kTreewidth, 3).kind == Certificate::Kind::kTree);
  CHECK(certify(kK4, Parameter::kTreewidth, 1).kind == Certificate::Kind::kBramble);
  CHECK_THROWS_AS(certify(kK4, Parameter::kTreewidth, -1), InvalidArgument);
}

TEST_CASE("verify rejects tampered certificates") {
  Certificate tree = certify(kK4, Parameter::kTreewidth, 3);
  tree.k = 2;
  CHECK_FALSE(verify_certificate(tree, kK4).ok);

  Certificate br = certify(kK4, Parameter::kTreewidth, 1);
  auto members = br.bramble->minimal_members();
  members.front() = S({0});
  br.bramble = UpFamily(members);
  const auto v = verify_certificate(br, kK4);
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.reason.empty());

  Certificate other = certify(kK4, Parameter::kTreewidth, 3);
  CHECK_FALSE(verify_certificate(other, kC4).ok);

  Certificate missing = certify(kK4, Parameter::kTreewidth, 3);
  missing.tree.reset();
  CHECK_FALSE(verify_certificate(missing, kK4).ok);

  // A bramble claimed at k >= width cannot verify.
  Certificate high = certify(kK4, Parameter::kTreewidth, 1);
  high.k = 3;
  CHECK_FALSE(verify_certificate(high, kK4).ok);
}

TEST_CASE("width equals the least k with a tree certificate, and a bramble just below") {
  for (const auto& og : oracle::connected_graphs(4)) {
    const Graph g = to_graph(og);
    for (Parameter p : {Parameter::kTreewidth, Parameter::kBranchwidth, Parameter::kRankwidth}) {
      const int w = compute_width(g, p);
      CHECK(certify(g, p, w).kind == Certificate::Kind::kTree);
      if (w > 0) {
        const Certificate below = certify(g, p, w - 1);
        CHECK(below.kind == Certificate::Kind::kBramble);
        CHECK(verify_certificate(below, g).ok);
      }
    }
  }
}

TEST_CASE("closure view of the level set, up to six edges") {
  for (const char* text : {"0 1\n1 2\n2 0\n", "0 1\n1 2\n2 3\n3 0\n", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n",
                           "0 1\n1 2\n2 3\n3 4\n4 5\n"}) {
    const Graph g = parse_graph(text);
    for (Parameter p : {Parameter::kTreewidth, Parameter::kBranchwidth}) {
      const WidthInstance inst(g, p);
      for (int k = 0; k <= 3; ++k) {
        const auto level = inst.level_set(k).enumerate();
        const auto table = closure(inst.ground(), level);
        const bool via_closure = table.contains(Partition::singletons(inst.ground().full()));
        CHECK(find_width_tree(inst, k).has_value() == via_closure);
      }
    }
  }
}

TEST_CASE("warnings") {
  CHECK_FALSE(warnings(parse_graph("0 1\n0 2\n0 3\n"), Parameter::kTreewidth).empty());
  CHECK(warnings(parse_graph("0 1\n0 2\n0 3\n"), Parameter::kBranchwidth).empty());
  CHECK_FALSE(warnings(parse_graph("0 1\n1 2\n3 4\n4 5\n"), Parameter::kBranchwidth).empty());
  CHECK(warnings(kK4, Parameter::kTreewidth).empty());
}

TEST_CASE("parameters") {
  CHECK(parse_parameter("tw") == Parameter::kTreewidth);
  CHECK(parse_parameter("rankwidth") == Parameter::kRankwidth);
  CHECK(to_string(Parameter::kBranchwidth) == "branchwidth");
  CHECK_THROWS_AS(parse_parameter("pathwidth"), InvalidArgument);
  CHECK(WidthInstance(kK4, Parameter::kTreewidth).threshold(2) == Value(3));
  CHECK(WidthInstance(kK4, Parameter::kBranchwidth).threshold(2) == Value(2));
  CHECK(WidthInstance(kK4, Parameter::kRankwidth).ground().size() == 4);
  CHECK(WidthInstance(kK4, Parameter::kTreewidth).ground().size() == 6);
}
