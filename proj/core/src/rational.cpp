#include "crgs/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "crgs/error.hpp"

namespace crgs {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

Rational reduce128(u128 num, u128 den) {
  u128 a = num, b = den;
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  if (num > kMax || den > kMax) {
    throw Error(ErrorCode::InvariantViolation, "rational overflow");
  }
  return Rational(static_cast<std::uint64_t>(num),
                  static_cast<std::uint64_t>(den));
}

}  // namespace

Rational::Rational(std::uint64_t num, std::uint64_t den) {
  if (den == 0) {
    throw Error(ErrorCode::InvariantViolation, "rational with zero denominator");
  }
  const std::uint64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    auto parse_u64 = [](std::string_view s) -> std::optional<std::uint64_t> {
      if (s.empty() || s.size() > 18) return std::nullopt;
      std::uint64_t v = 0;
      for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
      }
      return v;
    };
    auto n = parse_u64(text.substr(0, slash));
    auto d = parse_u64(text.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return Rational(*n, *d);
  }

  std::uint64_t int_part = 0;
  std::uint64_t frac = 0;
  std::uint64_t scale = 1;
  std::size_t digits = 0;
  bool seen_dot = false;
  for (char c : text) {
    if (c == '.') {
      if (seen_dot) return std::nullopt;
      seen_dot = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    if (++digits > 18) return std::nullopt;
    const auto d = static_cast<std::uint64_t>(c - '0');
    if (seen_dot) {
      frac = frac * 10 + d;
      scale *= 10;
    } else {
      int_part = int_part * 10 + d;
    }
  }
  if (digits == 0) return std::nullopt;
  return reduce128(static_cast<u128>(int_part) * scale + frac, scale);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  const u128 lhs = static_cast<u128>(a.num_) * b.den_;
  const u128 rhs = static_cast<u128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational operator+(const Rational& a, const Rational& b) {
  return reduce128(static_cast<u128>(a.num_) * b.den_ +
                       static_cast<u128>(b.num_) * a.den_,
                   static_cast<u128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  const u128 lhs = static_cast<u128>(a.num_) * b.den_;
  const u128 rhs = static_cast<u128>(b.num_) * a.den_;
  if (lhs < rhs) {
    throw Error(ErrorCode::InvariantViolation, "negative rational");
  }
  return reduce128(lhs - rhs, static_cast<u128>(a.den_) * b.den_);
}

Distance one_minus_ratio(std::uint64_t part, std::uint64_t whole) {
  if (whole == 0 || part > whole) {
    throw Error(ErrorCode::InvariantViolation,
                "distance ratio outside [0,1]: " + std::to_string(part) + "/" +
                    std::to_string(whole));
  }
  return Rational(whole - part, whole);
}

}  // namespace crgs
