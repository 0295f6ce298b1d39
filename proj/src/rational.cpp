#include "sfcplace/rational.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <iomanip>

namespace sfcplace {
namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

[[noreturn]] void bad_number(std::string_view text) {
  throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = from_wide(num, den);
}

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits64(num) || !fits64(den)) throw RationalOverflow("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad_number(text);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational n = parse(s.substr(0, slash));
    Rational d = parse(s.substr(slash + 1));
    if (d.is_zero()) bad_number(text);
    return n / d;
  }

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  int exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    auto exp_text = s.substr(e + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    auto [p, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc{} || p != exp_text.data() + exp_text.size()) bad_number(text);
    s = s.substr(0, e);
  }
  __int128 mantissa = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (char c : s) {
    if (c == '.') {
      if (seen_point) bad_number(text);
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9') bad_number(text);
    seen_digit = true;
    mantissa = mantissa * 10 + (c - '0');
    if (mantissa > (static_cast<__int128>(1) << 100)) throw RationalOverflow("decimal too long");
    if (seen_point) --exponent;
  }
  if (!seen_digit) bad_number(text);
  if (negative) mantissa = -mantissa;
  __int128 den = 1;
  while (exponent > 0) {
    mantissa *= 10;
    --exponent;
    if (!fits64(mantissa)) throw RationalOverflow("decimal too large");
  }
  while (exponent < 0) {
    den *= 10;
    ++exponent;
    if (den > (static_cast<__int128>(1) << 100)) throw RationalOverflow("decimal too small");
  }
  return from_wide(mantissa, den);
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite number");
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) throw std::invalid_argument("cannot format number");
  return parse(std::string_view(buf, static_cast<std::size_t>(p - buf)));
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::decimal() const {
  if (den_ == 1) return std::to_string(num_);
  std::int64_t d = den_;
  int twos = 0, fives = 0;
  while (d % 2 == 0) d /= 2, ++twos;
  while (d % 5 == 0) d /= 5, ++fives;
  if (d != 1) {
    std::ostringstream os;
    os << std::setprecision(17) << to_double();
    return os.str();
  }
  int digits = std::max(twos, fives);
  __int128 scaled = static_cast<__int128>(num_);
  __int128 factor = 1;
  for (int i = 0; i < digits; ++i) factor *= 10;
  scaled = scaled * (factor / den_);
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string body;
  while (scaled > 0) {
    body.insert(body.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
    scaled /= 10;
  }
  while (static_cast<int>(body.size()) <= digits) body.insert(body.begin(), '0');
  body.insert(body.end() - digits, '.');
  return negative ? "-" + body : body;
}

Rational Rational::operator-() const {
  if (num_ == std::numeric_limits<std::int64_t>::min()) throw RationalOverflow("rational overflow");
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) {
    *this = from_wide(static_cast<__int128>(num_) + o.num_, den_);
  } else {
    *this = from_wide(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                      static_cast<__int128>(den_) * o.den_);
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  *this = from_wide(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  *this = from_wide(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  __int128 g = gcd128(a, b);
  __int128 l = static_cast<__int128>(a) / g * b;
  if (l < 0) l = -l;
  if (!fits64(l)) throw RationalOverflow("lcm overflow");
  return static_cast<std::int64_t>(l);
}

}  // namespace sfcplace
