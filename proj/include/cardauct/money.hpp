#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "cardauct/errors.hpp"

namespace cardauct {

// Exact currency amount in signed integer micro-units (10^-6 of one unit).
// Every mechanism computation stays in integers; there is no rounding
// anywhere. Parsing accepts at most six fractional digits so that
// Money::parse(x.str()) == x for every representable value.
class Money {
public:
  static constexpr std::int64_t kScale = 1'000'000;

  constexpr Money() = default;

  static constexpr Money from_micros(std::int64_t micros) { return Money(micros); }
  static constexpr Money from_units(std::int64_t units) { return Money(units * kScale); }

  constexpr std::int64_t micros() const { return micros_; }

  constexpr Money operator-() const { return Money(-micros_); }
  constexpr Money& operator+=(Money other) {
    micros_ += other.micros_;
    return *this;
  }
  constexpr Money& operator-=(Money other) {
    micros_ -= other.micros_;
    return *this;
  }

  friend constexpr Money operator+(Money a, Money b) { return Money(a.micros_ + b.micros_); }
  friend constexpr Money operator-(Money a, Money b) { return Money(a.micros_ - b.micros_); }
  friend constexpr auto operator<=>(Money a, Money b) = default;

  // Parses "[-]digits[.digits]" with up to six fractional digits.
  static Money parse(std::string_view text);

  // Minimal exact decimal form: no trailing fractional zeros, no '.' when
  // the amount is a whole number of units.
  std::string str() const;

private:
  constexpr explicit Money(std::int64_t micros) : micros_(micros) {}

  std::int64_t micros_ = 0;
};

inline Money Money::parse(std::string_view text) {
  const std::string_view original = text;
  auto fail = [&]() -> Money {
    throw InputError("bad money value: '" + std::string(original) + "'");
  };

  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) fail();

  std::int64_t units = 0;
  std::size_t pos = 0;
  bool any_digit = false;
  for (; pos < text.size() && text[pos] != '.'; ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') fail();
    if (units > (INT64_MAX - 9) / 10) fail();
    units = units * 10 + (c - '0');
    any_digit = true;
  }
  std::int64_t frac = 0;
  if (pos < text.size()) {  // at '.'
    ++pos;
    std::size_t digits = 0;
    for (; pos < text.size(); ++pos, ++digits) {
      char c = text[pos];
      if (c < '0' || c > '9' || digits >= 6) fail();
      frac = frac * 10 + (c - '0');
      any_digit = true;
    }
    for (; digits < 6; ++digits) frac *= 10;
  }
  if (!any_digit) fail();
  if (units > INT64_MAX / kScale - 1) fail();
  std::int64_t micros = units * kScale + frac;
  return Money(negative ? -micros : micros);
}

inline std::string Money::str() const {
  std::int64_t m = micros_;
  std::string sign;
  if (m < 0) {
    sign = "-";
    m = -m;
  }
  std::string out = sign + std::to_string(m / kScale);
  std::int64_t frac = m % kScale;
  if (frac != 0) {
    std::string f = std::to_string(frac);
    f.insert(f.begin(), 6 - f.size(), '0');
    while (f.back() == '0') f.pop_back();
    out += '.' + f;
  }
  return out;
}

}  // namespace cardauct
