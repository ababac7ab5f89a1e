#include "widthdual/value.hpp"

#include <charconv>

#include "widthdual/errors.hpp"

namespace widthdual {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("not a value: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Value Value::parse(std::string_view text) {
  if (text == "inf" || text == "+inf" || text == "infinity" || text == "+infinity") return infinity();
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Value(parse_int(text, text));
  const std::int64_t num = parse_int(text.substr(0, slash), text);
  const std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Value(Rational(num, den));
}

std::string Value::to_string() const {
  if (infinite_) return "inf";
  if (finite_.denominator() == 1) return std::to_string(finite_.numerator());
  return std::to_string(finite_.numerator()) + "/" + std::to_string(finite_.denominator());
}

Value operator+(const Value& a, const Value& b) {
  if (a.infinite_ || b.infinite_) return Value::infinity();
  return Value(a.finite_ + b.finite_);
}

bool operator==(const Value& a, const Value& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.finite_ == b.finite_;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  if (a.finite_ < b.finite_) return std::strong_ordering::less;
  if (b.finite_ < a.finite_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace widthdual
