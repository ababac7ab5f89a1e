#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace widthdual {

/// An exact value in Q ∪ {+∞}, the codomain of partition and connectivity
/// functions.
class Value {
 public:
  using Rational = boost::rational<std::int64_t>;

  constexpr Value() = default;
  Value(std::int64_t v) : finite_(v) {}  // NOLINT(google-explicit-constructor)
  Value(Rational r) : finite_(r) {}      // NOLINT(google-explicit-constructor)

  static Value infinity() {
    Value v;
    v.infinite_ = true;
    return v;
  }
  /// Parses an integer, "p/q", or "inf"/"+inf"/"infinity".
  static Value parse(std::string_view text);

  bool is_infinite() const { return infinite_; }
  /// Undefined for +∞.
  const Rational& finite() const { return finite_; }
  std::string to_string() const;

  friend Value operator+(const Value& a, const Value& b);
  friend bool operator==(const Value& a, const Value& b);
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  Rational finite_{0};
  bool infinite_ = false;
};

}  // namespace widthdual
