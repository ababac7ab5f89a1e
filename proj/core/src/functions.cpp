#include "widthdual/functions.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "widthdual/enumerate.hpp"
#include "widthdual/errors.hpp"

namespace widthdual {

PartitionFunction::PartitionFunction(GroundSet ground, Evaluator evaluator, std::string descriptor)
    : ground_(std::move(ground)), evaluator_(std::move(evaluator)), descriptor_(std::move(descriptor)) {}

PartitionFunction memoized(const PartitionFunction& psi) {
  struct Cache {
    std::mutex mu;
    std::unordered_map<std::uint64_t, Value> values;
  };
  auto cache = std::make_shared<Cache>();
  auto eval = [psi, cache](const Partition& p) {
    const auto key = p.key();
    {
      std::lock_guard lock(cache->mu);
      if (auto it = cache->values.find(key); it != cache->values.end()) return it->second;
    }
    Value v = psi(p);
    std::lock_guard lock(cache->mu);
    cache->values.emplace(key, v);
    return v;
  };
  return PartitionFunction(psi.ground(), eval, psi.descriptor());
}

PartitionFunction indicator_pf(const GroundSet& ground, std::span<const Partition> members) {
  auto keys = std::make_shared<std::unordered_map<std::uint64_t, char>>();
  for (const Partition& p : members) keys->emplace(p.key(), 1);
  auto eval = [keys, full = ground.full()](const Partition& p) {
    return Value(p.ground() == full && keys->count(p.key()) ? 0 : 1);
  };
  return PartitionFunction(ground, eval, "indicator");
}

PartitionFunction table_pf(const GroundSet& ground, const std::vector<std::pair<Partition, Value>>& entries,
                           std::optional<Value> fallback) {
  auto table = std::make_shared<std::unordered_map<std::uint64_t, Value>>();
  for (const auto& [p, v] : entries) {
    if (p.ground() != ground.full()) throw InvalidArgument("table entry " + p.to_string() + " is not a partition of E");
    if (!table->emplace(p.key(), v).second) throw InvalidArgument("duplicate table entry " + p.to_string());
  }
  auto eval = [table, fallback](const Partition& p) {
    if (auto it = table->find(p.key()); it != table->end()) return it->second;
    if (fallback) return *fallback;
    throw InvalidArgument("partition function table has no value for " + p.to_string());
  };
  return PartitionFunction(ground, eval, "table");
}

SetFunction::SetFunction(GroundSet ground, const std::function<Value(Subset)>& rule) : ground_(std::move(ground)) {
  for (Subset s : all_subsets(ground_)) table_.push_back(rule(s));
}

SetFunction::SetFunction(GroundSet ground, std::vector<Value> table)
    : ground_(std::move(ground)), table_(std::move(table)) {
  if (table_.size() != (std::size_t{1} << ground_.size())) throw InvalidArgument("set function table has wrong size");
}

PropertyReport verify_connectivity(const SetFunction& f, int cap) {
  const GroundSet& ground = f.ground();
  if (ground.size() > cap) {
    throw CapExceeded("connectivity verification over " + std::to_string(ground.size()) + " elements exceeds cap " +
                      std::to_string(cap));
  }
  const auto subsets = all_subsets(ground);
  for (Subset a : subsets) {
    if (f(a) != f(ground.complement(a))) {
      return PropertyReport::fail("connectivity", Counterexample{{}, {a}, std::nullopt,
                                                                  "not symmetric: f(A) = " + f(a).to_string() +
                                                                      ", f(A^c) = " + f(ground.complement(a)).to_string()});
    }
  }
  auto violation = [&](Subset a, Subset b) {
    return PropertyReport::fail(
        "connectivity", Counterexample{{}, {a, b}, std::nullopt,
                                       "not submodular: f(A)+f(B) = " + (f(a) + f(b)).to_string() +
                                           " < f(A∪B)+f(A∩B) = " + (f(a | b) + f(a & b)).to_string()});
  };
  const bool finite = std::none_of(f.table().begin(), f.table().end(), [](const Value& v) { return v.is_infinite(); });
  if (finite) {
    // For finite values submodularity is equivalent to the local exchange
    // inequality f(S+i) + f(S+j) >= f(S+i+j) + f(S).
    for (Subset s : subsets) {
      const auto outside = ground.complement(s).elements();
      for (std::size_t x = 0; x < outside.size(); ++x) {
        for (std::size_t y = x + 1; y < outside.size(); ++y) {
          const Subset a = s | Subset::singleton(outside[x]);
          const Subset b = s | Subset::singleton(outside[y]);
          if (f(a) + f(b) < f(a | b) + f(s)) return violation(a, b);
        }
      }
    }
  } else {
    for (Subset a : subsets) {
      for (Subset b : subsets) {
        if (f(a) + f(b) < f(a | b) + f(a & b)) return violation(a, b);
      }
    }
  }
  return PropertyReport::pass("connectivity");
}

ConnectivityFunction::ConnectivityFunction(SetFunction f, std::string descriptor, int verify_cap)
    : f_(std::move(f)), descriptor_(std::move(descriptor)) {
  if (f_.ground().size() > verify_cap) return;
  const PropertyReport report = verify_connectivity(f_, verify_cap);
  if (!report.holds) throw InvalidArgument(descriptor_ + " is not a connectivity function: " + report.counterexample->detail);
}

ConnectivityFunction connectivity_from_table(const GroundSet& ground,
                                             const std::vector<std::pair<Subset, Value>>& entries) {
  const std::size_t size = std::size_t{1} << ground.size();
  std::vector<std::optional<Value>> table(size);
  for (const auto& [s, v] : entries) {
    if (!ground.contains(s)) throw InvalidArgument("subset " + s.to_string() + " outside the ground set");
    if (table[s.bits()] && *table[s.bits()] != v) throw InvalidArgument("conflicting values for " + s.to_string());
    table[s.bits()] = v;
  }
  std::vector<Value> full(size);
  for (std::size_t bits = 0; bits < size; ++bits) {
    const Subset s(static_cast<Subset::Bits>(bits));
    const auto& mine = table[bits];
    const auto& mirror = table[ground.complement(s).bits()];
    if (mine && mirror && *mine != *mirror) {
      throw InvalidArgument("asymmetric values for " + s.to_string() + " and its complement");
    }
    if (!mine && !mirror) throw InvalidArgument("no value for " + s.to_string() + " or its complement");
    full[bits] = mine ? *mine : *mirror;
  }
  return ConnectivityFunction(SetFunction(ground, std::move(full)), "table");
}

PartitionFunction border(const Graph& g) {
  std::vector<Subset> incident;
  for (int v = 0; v < g.vertex_count(); ++v) incident.push_back(g.incident_edges(v));
  auto eval = [incident](const Partition& p) {
    std::int64_t count = 0;
    for (Subset inc : incident) {
      int touched = 0;
      for (Subset b : p.blocks()) {
        if (b.intersects(inc) && ++touched == 2) break;
      }
      if (touched >= 2) ++count;
    }
    return Value(count);
  };
  return PartitionFunction(GroundSet(g.edge_count()), eval, "border");
}

ConnectivityFunction vertex_boundary_f(const Graph& g) {
  GroundSet ground(g.edge_count());
  std::vector<Subset> incident;
  for (int v = 0; v < g.vertex_count(); ++v) incident.push_back(g.incident_edges(v));
  auto rule = [&](Subset a) {
    const Subset rest = ground.complement(a);
    return Value(static_cast<std::int64_t>(
        std::count_if(incident.begin(), incident.end(), [&](Subset inc) { return inc.intersects(a) && inc.intersects(rest); })));
  };
  return ConnectivityFunction(SetFunction(ground, rule), "vertex_boundary");
}

namespace {

int gf2_rank(std::vector<Subset::Bits> rows) {
  int rank = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] == 0) continue;
    ++rank;
    const Subset::Bits pivot = rows[i] & (0 - rows[i]);
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (rows[j] & pivot) rows[j] ^= rows[i];
    }
  }
  return rank;
}

}  // namespace

ConnectivityFunction cut_rank_f(const Graph& g) {
  GroundSet ground(g.vertex_count());
  std::vector<Subset> nbr;
  for (int v = 0; v < g.vertex_count(); ++v) nbr.push_back(g.neighbourhood(v));
  auto rule = [&](Subset a) {
    const Subset rest = ground.complement(a);
    std::vector<Subset::Bits> rows;
    for (int v : a.elements()) rows.push_back((nbr[static_cast<std::size_t>(v)] & rest).bits());
    return Value(static_cast<std::int64_t>(gf2_rank(std::move(rows))));
  };
  return ConnectivityFunction(SetFunction(ground, rule), "cut_rank");
}

PartitionFunction max_f(const ConnectivityFunction& f) {
  auto eval = [f](const Partition& p) {
    Value best = f(p.blocks().front());
    for (Subset b : p.blocks()) best = std::max(best, f(b));
    return best;
  };
  return PartitionFunction(f.ground(), eval, "max_f(" + f.descriptor() + ")");
}

PartitionFunction at_most_blocks(PartitionFunction psi, std::size_t max_blocks) {
  const std::string descriptor = psi.descriptor() + "[<=" + std::to_string(max_blocks) + " blocks]";
  GroundSet ground = psi.ground();
  auto eval = [psi = std::move(psi), max_blocks](const Partition& p) {
    return p.size() > max_blocks ? Value::infinity() : psi(p);
  };
  return PartitionFunction(std::move(ground), eval, descriptor);
}

std::vector<Partition> LevelSet::enumerate(int cap) const {
  std::vector<Partition> out;
  for_each_partition(psi_.ground(), [&](const Partition& p) {
    if (contains(p)) out.push_back(p);
  }, std::nullopt, cap);
  return out;
}

}  // namespace widthdual
