#include "mvsep/fraction.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

namespace mvsep {

namespace {
__extension__ using Wide = __int128;
}  // namespace

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  std::int64_t g = std::gcd(a, b);
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a / g, b, &out)) {
    throw std::overflow_error("lcm overflows 64 bits");
  }
  return out;
}

Fraction::Fraction(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw AlgebraError("fraction denominator must be positive");
  if (num < 0 || num > den) {
    throw AlgebraError("fraction " + std::to_string(num) + "/" + std::to_string(den) +
                       " lies outside [0,1]");
  }
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

namespace {

std::int64_t parseNatural(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw ParseError("malformed fraction '" + std::string(whole) + "'");
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ParseError("malformed fraction '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Fraction Fraction::parse(std::string_view text) {
  for (char c : text) {
    if (!(c == '/' || (c >= '0' && c <= '9'))) {
      throw ParseError("malformed fraction '" + std::string(text) + "'");
    }
  }
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    std::int64_t v = parseNatural(text, text);
    if (v > 1) throw ParseError("'" + std::string(text) + "' is not in [0,1]");
    return Fraction{v, 1};
  }
  std::int64_t p = parseNatural(text.substr(0, slash), text);
  std::int64_t q = parseNatural(text.substr(slash + 1), text);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (p > q) throw ParseError("'" + std::string(text) + "' is not in [0,1]");
  if (std::gcd(p, q) != 1) {
    throw ParseError("'" + std::string(text) + "' is not in lowest terms");
  }
  return Fraction{p, q};
}

std::string Fraction::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Fraction truncatedSum(const Fraction& x, const Fraction& y) {
  std::int64_t den = lcm64(x.den(), y.den());
  std::int64_t num = x.num() * (den / x.den()) + y.num() * (den / y.den());
  return num >= den ? Fraction::one() : Fraction{num, den};
}

Fraction complement(const Fraction& x) { return Fraction{x.den() - x.num(), x.den()}; }

Fraction truncatedProduct(const Fraction& x, const Fraction& y) {
  return complement(truncatedSum(complement(x), complement(y)));
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

}  // namespace mvsep
