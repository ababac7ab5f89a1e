#include "widthdual/family.hpp"

#include <algorithm>
#include <sstream>

#include "widthdual/errors.hpp"

namespace widthdual {

std::vector<Subset> canonical(std::vector<Subset> blocks) {
  std::sort(blocks.begin(), blocks.end(), canonical_less);
  return blocks;
}

SetFamily::SetFamily(std::vector<Subset> blocks) : blocks_(canonical(std::move(blocks))) {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].empty()) throw InvalidArgument("set family contains an empty block");
    if (i > 0 && blocks_[i] == blocks_[i - 1]) {
      throw InvalidArgument("set family contains duplicate block " + blocks_[i].to_string());
    }
  }
}

SetFamily SetFamily::normalized(std::vector<Subset> blocks) {
  std::erase_if(blocks, [](Subset s) { return s.empty(); });
  blocks = canonical(std::move(blocks));
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  return SetFamily(std::move(blocks));
}

SetFamily SetFamily::union_of(const SetFamily& a, const SetFamily& b) {
  std::vector<Subset> all(a.blocks_);
  all.insert(all.end(), b.blocks_.begin(), b.blocks_.end());
  return normalized(std::move(all));
}

bool SetFamily::contains(Subset block) const {
  return std::binary_search(blocks_.begin(), blocks_.end(), block, canonical_less);
}

Subset SetFamily::support() const {
  Subset s;
  for (Subset b : blocks_) s |= b;
  return s;
}

std::string SetFamily::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << ',';
    os << blocks_[i].to_string();
  }
  os << '}';
  return os.str();
}

namespace {

void require_disjoint(const SetFamily& f) {
  Subset seen;
  for (Subset b : f) {
    if (seen.intersects(b)) throw InvalidArgument("partition blocks overlap: " + f.to_string());
    seen |= b;
  }
}

}  // namespace

Partition::Partition(std::vector<Subset> blocks) : family_(std::move(blocks)) {
  if (family_.empty()) throw InvalidArgument("a partition needs at least one block");
  require_disjoint(family_);
  ground_ = family_.support();
}

Partition::Partition(std::vector<Subset> blocks, Subset ground) : Partition(std::move(blocks)) {
  if (ground_ != ground) {
    throw InvalidArgument("blocks " + family_.to_string() + " do not cover " + ground.to_string());
  }
}

Partition Partition::singletons(Subset ground) {
  std::vector<Subset> blocks;
  for (int e : ground.elements()) blocks.push_back(Subset::singleton(e));
  return Partition(std::move(blocks));
}

std::uint64_t Partition::key() const {
  if (ground_.bits() >> 16) throw CapExceeded("partition keys support at most 16 elements");
  std::uint64_t k = 0;
  std::uint64_t index = 0;
  for (Subset b : family_) {
    for (int e : b.elements()) k |= index << (4 * e);
    ++index;
  }
  return k;
}

PointedPartition::PointedPartition(Partition base, Subset pointed)
    : base_(std::move(base)), pointed_(pointed) {
  if (!base_.contains(pointed_)) {
    throw InvalidArgument("pointed block " + pointed_.to_string() + " is not a block of " + base_.to_string());
  }
}

std::size_t PointedPartition::pointed_index() const {
  auto blocks = base_.blocks();
  return static_cast<std::size_t>(std::find(blocks.begin(), blocks.end(), pointed_) - blocks.begin());
}

SetFamily PointedPartition::rest() const {
  std::vector<Subset> out;
  for (Subset b : base_.blocks()) {
    if (b != pointed_) out.push_back(b);
  }
  return SetFamily(std::move(out));
}

std::vector<PointedPartition> pointed_forms(std::span<const Partition> partitions) {
  std::vector<PointedPartition> out;
  for (const Partition& p : partitions) {
    for (Subset b : p.blocks()) out.emplace_back(p, b);
  }
  return out;
}

Subset overlap(const SetFamily& family) {
  Subset once;
  Subset twice;
  for (Subset b : family) {
    twice |= once & b;
    once |= b;
  }
  return twice;
}

SetFamily remove_from(const SetFamily& family, Subset removed) {
  std::vector<Subset> out;
  out.reserve(family.size());
  for (Subset b : family) out.push_back(b - removed);
  return SetFamily::normalized(std::move(out));
}

namespace {

bool assign_finer(std::span<const Subset> fine, std::span<const Subset> coarse, std::size_t i,
                  std::vector<Subset>& used, std::vector<std::size_t>& assignment) {
  if (i == fine.size()) return true;
  const Subset x = fine[i];
  for (std::size_t j = 0; j < coarse.size(); ++j) {
    if (!x.subset_of(coarse[j]) || x.intersects(used[j])) continue;
    used[j] |= x;
    assignment[i] = j;
    if (assign_finer(fine, coarse, i + 1, used, assignment)) return true;
    used[j] -= x;
  }
  return false;
}

bool augment(std::size_t i, std::span<const Subset> fine, std::span<const Subset> coarse,
             std::vector<char>& visited, std::vector<std::size_t>& owner) {
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  for (std::size_t j = 0; j < coarse.size(); ++j) {
    if (visited[j] || !fine[i].subset_of(coarse[j])) continue;
    visited[j] = 1;
    if (owner[j] == kFree || augment(owner[j], fine, coarse, visited, owner)) {
      owner[j] = i;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<RefinementWitness> is_finer(const SetFamily& finer, const SetFamily& coarser) {
  // A block sequence arises by deletions and splits iff each finer block sits
  // inside a coarser block and the blocks drawn from one coarser block are
  // pairwise disjoint.
  std::vector<Subset> used(coarser.size());
  RefinementWitness w{std::vector<std::size_t>(finer.size())};
  if (!assign_finer(finer.blocks(), coarser.blocks(), 0, used, w.assignment)) return std::nullopt;
  return w;
}

std::optional<RefinementWitness> is_strongly_finer(const SetFamily& finer, const SetFamily& coarser) {
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  if (finer.size() > coarser.size()) return std::nullopt;
  std::vector<std::size_t> owner(coarser.size(), kFree);
  for (std::size_t i = 0; i < finer.size(); ++i) {
    std::vector<char> visited(coarser.size(), 0);
    if (!augment(i, finer.blocks(), coarser.blocks(), visited, owner)) return std::nullopt;
  }
  RefinementWitness w{std::vector<std::size_t>(finer.size())};
  for (std::size_t j = 0; j < owner.size(); ++j) {
    if (owner[j] != kFree) w.assignment[owner[j]] = j;
  }
  return w;
}

bool is_finer_coordinatewise(std::span<const SetFamily> finer, std::span<const SetFamily> coarser) {
  if (finer.size() > coarser.size()) return false;
  for (std::size_t i = 0; i < finer.size(); ++i) {
    if (!is_finer(finer[i], coarser[i])) return false;
  }
  return true;
}

Partition merge(const PointedPartition& left, const PointedPartition& right) {
  const Subset ground = left.base().ground();
  if (right.base().ground() != ground) throw InvalidArgument("merge: partitions of different ground sets");
  if (right.pointed() != ground - left.pointed()) {
    throw InvalidArgument("merge: pointed blocks " + left.pointed().to_string() + " and " +
                          right.pointed().to_string() + " are not complementary");
  }
  std::vector<Subset> blocks;
  for (Subset b : left.rest()) blocks.push_back(b);
  for (Subset b : right.rest()) blocks.push_back(b);
  return Partition(std::move(blocks), ground);
}

SetFamily covering(const PointedPartition& left, const PointedPartition& right) {
  return SetFamily::union_of(left.rest(), right.rest());
}

PointedPartition absorb(const PointedPartition& p, Subset f) {
  std::vector<Subset> blocks;
  const Subset grown = p.pointed() | f;
  blocks.push_back(grown);
  for (Subset b : p.rest()) {
    const Subset shrunk = b - f;
    if (!shrunk.empty()) blocks.push_back(shrunk);
  }
  return PointedPartition(Partition(std::move(blocks), p.base().ground()), grown);
}

}  // namespace widthdual
