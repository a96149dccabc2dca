#include "insdel/rational.hpp"

#include <numeric>

namespace insdel {

namespace {

std::int64_t checked_cast(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
  return static_cast<std::int64_t>(v);
}

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

}  // namespace

Rational Rational::make(__int128 num, __int128 den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Rational r;
  r.num_ = checked_cast(num);
  r.den_ = checked_cast(den);
  return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) { *this = make(num, den); }

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(std::stoll(std::string(text)));
    }
    std::int64_t n = std::stoll(std::string(text.substr(0, slash)));
    std::int64_t d = std::stoll(std::string(text.substr(slash + 1)));
    return Rational(n, d);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("cannot parse rational: " + std::string(text));
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("rational out of range: " + std::string(text));
  }
}

Rational Rational::operator-() const { return make(-static_cast<__int128>(num_), den_); }

Rational Rational::operator+(const Rational& o) const {
  return make(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
              static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  return make(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw std::invalid_argument("rational division by zero");
  return make(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  __int128 lhs = static_cast<__int128>(num_) * o.den_;
  __int128 rhs = static_cast<__int128>(o.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace insdel
