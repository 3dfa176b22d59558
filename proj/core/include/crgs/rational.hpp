#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace crgs {

/// Non-negative exact fraction, always stored in lowest terms with den > 0.
///
/// Distances and cover thresholds are compared through this type so that
/// boundary cases such as D = delta = 1/5 are decided exactly.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::uint64_t num, std::uint64_t den);

  static Rational integer(std::uint64_t v) { return Rational(v, 1); }

  /// Parses "0.2", "1", ".25", "3/4". Returns nullopt on malformed text or
  /// when the value would not fit in 64-bit terms.
  static std::optional<Rational> parse(std::string_view text);

  std::uint64_t num() const noexcept { return num_; }
  std::uint64_t den() const noexcept { return den_; }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  std::string to_string() const;

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) noexcept;

  friend Rational operator+(const Rational& a, const Rational& b);
  /// Requires a >= b.
  friend Rational operator-(const Rational& a, const Rational& b);

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

/// Pattern distance value in [0, 1].
using Distance = Rational;

/// 1 - part/whole, for 0 <= part <= whole, whole > 0.
Distance one_minus_ratio(std::uint64_t part, std::uint64_t whole);

/// Result of a min-sequence-cover query: either a finite distance or +infinity
/// when the pattern has no proper super-pattern in the reference set.
class CoverBound {
 public:
  static CoverBound infinity() { return CoverBound(); }
  static CoverBound finite(Distance d) { return CoverBound(d); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  const Distance& value() const { return value_.value(); }

  /// Strict comparison against a finite threshold; +infinity exceeds all.
  bool exceeds(const Rational& threshold) const noexcept {
    return is_infinite() || *value_ > threshold;
  }

  std::string to_string() const {
    return is_infinite() ? std::string("inf") : value_->to_string();
  }

  friend bool operator==(const CoverBound&, const CoverBound&) = default;

 private:
  CoverBound() = default;
  explicit CoverBound(Distance d) : value_(d) {}
  std::optional<Distance> value_;
};

}  // namespace crgs
