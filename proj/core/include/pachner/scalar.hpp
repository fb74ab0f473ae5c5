#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pachner {

/// Exact arbitrary-precision rational, always in lowest terms with a
/// positive denominator. Division by zero throws Error{DivisionByZero}.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : q_(static_cast<long>(value)) {}  // NOLINT
  Scalar(long numerator, long denominator);
  explicit Scalar(mpq_class q);

  /// Accepts "n", "-n", "n/d" in base 10.
  static Scalar parse(std::string_view text);

  /// Always "num/den", e.g. "0/1", "-3/7".
  std::string str() const;

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  const mpq_class& raw() const { return q_; }
  double to_double() const { return q_.get_d(); }

  Scalar operator-() const { return Scalar(mpq_class(-q_)); }

  Scalar& operator+=(const Scalar& rhs) { q_ += rhs.q_; return *this; }
  Scalar& operator-=(const Scalar& rhs) { q_ -= rhs.q_; return *this; }
  Scalar& operator*=(const Scalar& rhs) { q_ *= rhs.q_; return *this; }
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  mpq_class q_;
};

Scalar pow(Scalar base, unsigned exponent);

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

}  // namespace pachner
