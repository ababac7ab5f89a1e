#include "widthdual/subset.hpp"

#include <sstream>
#include <unordered_set>

#include "widthdual/errors.hpp"

namespace widthdual {

Subset Subset::of(std::initializer_list<int> elements) {
  return of(std::vector<int>(elements));
}

Subset Subset::of(const std::vector<int>& elements) {
  Bits bits = 0;
  for (int e : elements) {
    if (e < 0 || e >= kMaxElements) {
      throw InvalidArgument("element " + std::to_string(e) + " out of range");
    }
    bits |= Bits{1} << e;
  }
  return Subset(bits);
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (Bits b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::string Subset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

bool canonical_less(Subset a, Subset b) {
  if (a == b) return false;
  // Lists agree below the lowest differing element e. Whichever set holds e
  // sorts first unless the other set has nothing left above e (it is then a
  // proper prefix).
  const Subset::Bits diff = a.bits() ^ b.bits();
  const Subset::Bits low = diff & (0 - diff);
  const Subset::Bits above = ~((low << 1) - 1);
  if (a.bits() & low) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

GroundSet::GroundSet(int size, int cap) : size_(size) {
  if (cap > Subset::kMaxElements) cap = Subset::kMaxElements;
  if (size < 2) throw InvalidArgument("ground set needs at least 2 elements, got " + std::to_string(size));
  if (size > cap) {
    throw CapExceeded("ground set of size " + std::to_string(size) + " exceeds cap " + std::to_string(cap));
  }
}

GroundSet::GroundSet(std::vector<std::string> labels, int cap)
    : GroundSet(static_cast<int>(labels.size()), cap) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw InvalidArgument("duplicate ground-set label '" + l + "'");
  }
  labels_ = std::move(labels);
}

}  // namespace widthdual
