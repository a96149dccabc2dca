#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace insdel {

/// Exact rational arithmetic on int64 numerator/denominator.
/// Always stored normalized with a positive denominator. Construction
/// parameters (delta, epsilon, rho, ...) and every rate bound in this
/// library are rationals so that parameter relations can be checked
/// without floating-point slack.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  /// Parses "a/b" or "a".
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::strong_ordering operator<=>(const Rational& o) const;

  /// Largest integer <= value.
  std::int64_t floor() const;
  /// Smallest integer >= value.
  std::int64_t ceil() const;

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

 private:
  static Rational make(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational operator+(std::int64_t a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(std::int64_t a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(std::int64_t a, const Rational& b) { return Rational(a) * b; }

}  // namespace insdel
