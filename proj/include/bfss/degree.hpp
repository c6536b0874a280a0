#ifndef BFSS_DEGREE_HPP
#define BFSS_DEGREE_HPP

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include "bfss/errors.hpp"

namespace bfss {

// Signed decimal with exactly four fractional digits, stored as an integer
// count of 1e-4 units. The representable range is [-1.0000, +1.0000].
// min/max, 1-x on [0,1] and -1-x on [-1,0] stay inside the range, so all
// arithmetic the grade algebra needs is closed and exact.
class Degree {
public:
  static constexpr std::int32_t scale = 10000;  // ticks per unit

  constexpr Degree() : ticks_(0) {}

  static Degree from_ticks(std::int32_t ticks) {
    if (ticks < -scale || ticks > scale)
      throw OutOfRange("degree " + raw_string(ticks) + " outside [-1,1]");
    return Degree(ticks);
  }

  // Accepts an optional sign, an integer part and a '.' followed by one to
  // four fractional digits: "0.5", "-0.25", "1", "+0.1234". Anything else is
  // a ParseError; syntactically valid values outside [-1,1] are OutOfRange.
  static Degree parse(std::string_view text);

  // Minimal decimal form: no trailing fractional zeros, no '.' when whole,
  // no sign on zero. parse(str()) == *this for every representable value.
  std::string str() const { return raw_string(ticks_); }

  constexpr std::int32_t ticks() const { return ticks_; }

  constexpr static Degree zero() { return Degree(0); }
  constexpr static Degree one() { return Degree(scale); }
  constexpr static Degree minus_one() { return Degree(-scale); }

  auto operator<=>(const Degree&) const = default;
  bool operator==(const Degree&) const = default;

private:
  constexpr explicit Degree(std::int32_t ticks) : ticks_(ticks) {}

  static std::string raw_string(std::int64_t ticks) {
    std::string out;
    std::int64_t t = ticks;
    if (t < 0) {
      out.push_back('-');
      t = -t;
    }
    out += std::to_string(t / scale);
    const auto frac = static_cast<int>(t % scale);
    if (frac != 0) {
      char digits[8];
      std::snprintf(digits, sizeof digits, "%04d", frac);
      std::string_view f(digits, 4);
      while (f.back() == '0') f.remove_suffix(1);
      out.push_back('.');
      out += f;
    }
    return out;
  }

  std::int32_t ticks_;
};

inline Degree Degree::parse(std::string_view text) {
  const auto original = std::string(text);
  const auto fail = [&] { return ParseError("bad decimal literal '" + original + "'"); };

  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  std::size_t i = 0;
  std::int64_t whole = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
    whole = whole * 10 + (text[i] - '0');
    if (whole > scale) throw OutOfRange("degree '" + original + "' outside [-1,1]");
    ++i;
  }
  if (i == 0) throw fail();  // integer part is required

  std::int64_t frac = 0;
  int frac_digits = 0;
  if (i < text.size()) {
    if (text[i] != '.') throw fail();
    ++i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      frac = frac * 10 + (text[i] - '0');
      ++frac_digits;
      if (frac_digits > 4) throw fail();
      ++i;
    }
    if (frac_digits == 0) throw fail();
  }
  if (i != text.size()) throw fail();

  for (int k = frac_digits; k < 4; ++k) frac *= 10;
  std::int64_t ticks = whole * scale + frac;
  if (negative) ticks = -ticks;
  if (ticks < -scale || ticks > scale)
    throw OutOfRange("degree '" + original + "' outside [-1,1]");
  return Degree(static_cast<std::int32_t>(ticks));
}

inline Degree min(Degree a, Degree b) { return a <= b ? a : b; }
inline Degree max(Degree a, Degree b) { return a >= b ? a : b; }

// 1 - x, exact; closed on [0,1].
inline Degree one_minus(Degree d) { return Degree::from_ticks(Degree::scale - d.ticks()); }

// -1 - x, exact; closed on [-1,0].
inline Degree minus_one_minus(Degree d) { return Degree::from_ticks(-Degree::scale - d.ticks()); }

}  // namespace bfss

#endif  // BFSS_DEGREE_HPP
