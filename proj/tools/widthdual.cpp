// widthdual: exact width computation, duality certificates, closures and
// property checks for partition sets.
//
// Exit status: 0 success or property holds, 1 property fails or no
// certificate of the requested kind, 2 usage, input or cap error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "widthdual/closure.hpp"
#include "widthdual/errors.hpp"
#include "widthdual/graph.hpp"
#include "widthdual/io.hpp"
#include "widthdual/properties.hpp"
#include "widthdual/width.hpp"

namespace {

using nlohmann::json;
using namespace widthdual;

constexpr int kExitOk = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;

struct Options {
  int cap = -1;  // -1: the routine's own default
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  bool json = false;

  std::string param;
  int k = 0;
  std::string input;
  std::string dot;
  std::string partitions;
  std::string property;
  std::string cert;
};

int cap_or(const Options& o, int fallback) { return o.cap >= 0 ? o.cap : fallback; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void print_warnings(const Graph& g, Parameter p) {
  for (const auto& w : warnings(g, p)) std::cerr << "warning: " << w << "\n";
}

int run_width(const Options& o) {
  const Graph g = read_graph_file(o.input);
  const Parameter p = parse_parameter(o.param);
  print_warnings(g, p);
  const int w = compute_width(g, p, cap_or(o, kSearchCap));
  if (o.json) {
    std::cout << json{{"parameter", std::string(to_string(p))}, {"width", w}, {"graph", graph_hash(g)}}.dump() << "\n";
  } else {
    std::cout << w << "\n";
  }
  return kExitOk;
}

int run_certify(const Options& o) {
  const Graph g = read_graph_file(o.input);
  const Parameter p = parse_parameter(o.param);
  if (o.k < 0) throw InvalidArgument("--k must be non-negative");
  print_warnings(g, p);
  const Certificate c = certify(g, p, o.k, cap_or(o, kSearchCap));
  if (!o.dot.empty()) {
    if (!c.tree) {
      std::cerr << "note: no tree to export, certificate is a bramble\n";
    } else {
      std::ofstream out(o.dot);
      if (!out) throw ParseError("cannot write " + o.dot);
      out << c.tree->to_dot();
    }
  }
  if (o.json) {
    std::cout << io::to_json(c).dump() << "\n";
  } else {
    std::cout << to_string(c.kind) << " " << to_string(p) << " k=" << c.k << "\n";
    if (c.tree) {
      for (const Partition& np : c.tree->node_partitions()) std::cout << "  node " << np.to_string() << "\n";
    } else {
      for (Subset m : c.bramble->minimal_members()) std::cout << "  member " << m.to_string() << "\n";
    }
  }
  return kExitOk;
}

int run_closure(const Options& o) {
  auto [ground, axioms] = io::partition_set_from_json(read_json_file(o.partitions));
  const ClosureTable table = closure(ground, axioms, cap_or(o, kClosureCap));
  if (o.json) {
    std::cout << io::to_json(table).dump() << "\n";
  } else {
    for (std::size_t i = 0; i < table.size(); ++i) {
      std::cout << table.members()[i].to_string() << (table.is_axiom(i) ? "" : "  (derived)") << "\n";
    }
  }
  return kExitOk;
}

PropertyReport check_property(const Options& o, const json& input) {
  const std::string& prop = o.property;
  if (prop == "pushing" || prop == "refining" || prop == "strongly-refining" || prop == "dualising") {
    auto [ground, q] = io::partition_set_from_json(input);
    if (prop == "pushing") return is_pushing(q);
    if (prop == "refining") return is_refining(q);
    if (prop == "strongly-refining") return is_strongly_refining(q);
    DualisingOptions d;
    d.cap = cap_or(o, kDualisingCap);
    d.samples = o.samples;
    d.seed = o.seed;
    return is_dualising(ground, q, d);
  }
  const PartitionFunction psi = memoized(io::partition_function_from_json(input));
  const int cap = cap_or(o, kEnumerationCap);
  if (prop == "submodular") return is_submodular_pf(psi, cap);
  if (prop == "weakly-submodular-old") return is_weakly_submodular_old(psi, cap);
  return is_weakly_submodular_new(psi, cap);
}

int run_check(const Options& o) {
  const PropertyReport r = check_property(o, read_json_file(o.input));
  if (o.json) {
    std::cout << io::to_json(r).dump() << "\n";
  } else {
    std::cout << r.property << ": " << (r.holds ? "holds" : "fails") << (r.exhaustive ? "" : " (sampled)") << "\n";
    if (r.counterexample && !r.counterexample->detail.empty()) std::cout << "  " << r.counterexample->detail << "\n";
  }
  return r.holds ? kExitOk : kExitFails;
}

int run_verify(const Options& o) {
  const Graph g = read_graph_file(o.input);
  const json j = read_json_file(o.cert);
  Verification v;
  try {
    // The certificate's ground set is the one its parameter measures on.
    const Parameter p = parse_parameter(j.at("parameter").get<std::string>());
    const WidthInstance instance(g, p);
    v = verify_certificate(io::certificate_from_json(j, instance.ground()), g, cap_or(o, kSearchCap));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  } catch (const ParseError& e) {
    v = Verification{false, e.what()};
  }
  if (o.json) {
    std::cout << json{{"ok", v.ok}, {"reason", v.reason}}.dump() << "\n";
  } else {
    std::cout << (v.ok ? "ok" : "rejected: " + v.reason) << "\n";
  }
  return v.ok ? kExitOk : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"widthdual: partition-set duality and exact width certificates"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Options o;
  app.add_option("--cap", o.cap, "Size cap for the exponential routine this command runs")
      ->envname("WIDTHDUAL_CAP")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", o.seed, "Seed for sampled property checks")->envname("WIDTHDUAL_SEED");
  app.add_option("--samples", o.samples, "Sampled small-set systems above the dualising cap")
      ->envname("WIDTHDUAL_SAMPLES");
  app.add_flag("--json", o.json, "Machine-readable output")->envname("WIDTHDUAL_JSON");

  const std::vector<std::string> params{"treewidth", "branchwidth", "rankwidth", "tw", "bw", "rw"};

  auto* width = app.add_subcommand("width", "Compute treewidth, branchwidth or rankwidth exactly");
  width->add_option("--param", o.param)->required()->check(CLI::IsMember(params));
  width->add_option("--input", o.input, "Edge-list graph file")->required()->check(CLI::ExistingFile);

  auto* cert = app.add_subcommand("certify", "Emit a tree or bramble certificate at threshold k");
  cert->add_option("--param", o.param)->required()->check(CLI::IsMember(params));
  cert->add_option("--k", o.k)->required();
  cert->add_option("--input", o.input, "Edge-list graph file")->required()->check(CLI::ExistingFile);
  cert->add_option("--dot", o.dot, "Write a tree certificate as DOT");

  auto* clos = app.add_subcommand("closure", "Merge-closure of a partition set");
  clos->add_option("--partitions", o.partitions, "JSON partition set")->required()->check(CLI::ExistingFile);

  auto* check = app.add_subcommand("check", "Decide a structural property");
  check->add_option("--property", o.property)
      ->required()
      ->check(CLI::IsMember({"pushing", "refining", "strongly-refining", "dualising", "submodular",
                             "weakly-submodular-old", "weakly-submodular-new"}));
  check->add_option("--input", o.input, "JSON partition set or partition function")
      ->required()
      ->check(CLI::ExistingFile);

  auto* ver = app.add_subcommand("verify", "Check a certificate against a graph");
  ver->add_option("--cert", o.cert, "JSON certificate")->required()->check(CLI::ExistingFile);
  ver->add_option("--input", o.input, "Edge-list graph file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*width) return run_width(o);
    if (*cert) return run_certify(o);
    if (*clos) return run_closure(o);
    if (*check) return run_check(o);
    return run_verify(o);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}
