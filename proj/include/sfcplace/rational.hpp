#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sfcplace {

class RationalOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Exact rational with 64-bit numerator/denominator. Always normalized:
// gcd(num, den) == 1 and den > 0. Arithmetic goes through 128-bit
// intermediates and throws RationalOverflow if the reduced result does not
// fit back into 64 bits.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT implicit
  Rational(std::int64_t num, std::int64_t den);

  // Parses "12", "-3.25", "1e-3", "7/4".
  static Rational parse(std::string_view text);
  // Exact value of the shortest decimal that round-trips to `value`.
  static Rational from_double(double value);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  double to_double() const;
  // "p" or "p/q".
  std::string str() const;
  // Exact decimal when the expansion terminates, otherwise 17 significant
  // digits.
  std::string decimal() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Least common multiple of denominators, overflow-checked.
std::int64_t lcm_checked(std::int64_t a, std::int64_t b);

}  // namespace sfcplace
