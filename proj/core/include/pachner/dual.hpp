#pragma once

#include <ostream>

#include "pachner/scalar.hpp"

namespace pachner {

/**
 * First-order dual number value + eps * derivative, eps^2 = 0.
 *
 * Evaluating a rational function with one input lifted as (x, 1) and all
 * others as (c, 0) yields (f(x), df/dx(x)). Over Scalar the derivative is
 * exact. Division requires a nonzero value part in the divisor; the
 * underlying scalar reports DivisionByZero otherwise.
 */
template <typename T>
class Dual {
 public:
  using value_type = T;

  Dual() : value_(0), derivative_(0) {}
  Dual(T value) : value_(std::move(value)), derivative_(0) {}  // NOLINT
  Dual(int value) : value_(value), derivative_(0) {}           // NOLINT
  Dual(T value, T derivative) : value_(std::move(value)), derivative_(std::move(derivative)) {}

  const T& value() const { return value_; }
  const T& derivative() const { return derivative_; }

  Dual operator-() const { return Dual(-value_, -derivative_); }

  Dual& operator+=(const Dual& o) {
    value_ += o.value_;
    derivative_ += o.derivative_;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    value_ -= o.value_;
    derivative_ -= o.derivative_;
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    derivative_ = derivative_ * o.value_ + value_ * o.derivative_;
    value_ *= o.value_;
    return *this;
  }
  Dual& operator/=(const Dual& o) {
    // (u/v)' = (u'v - uv') / v^2; dividing in two steps keeps the value check first.
    T quotient = value_ / o.value_;
    derivative_ = (derivative_ - quotient * o.derivative_) / o.value_;
    value_ = std::move(quotient);
    return *this;
  }

  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend Dual operator/(Dual a, const Dual& b) { return a /= b; }

  /// Full equality (value and derivative).
  friend bool operator==(const Dual& a, const Dual& b) {
    return a.value_ == b.value_ && a.derivative_ == b.derivative_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Dual& d) {
    return os << d.value_ << " + eps*" << d.derivative_;
  }

 private:
  T value_;
  T derivative_;
};

using DualScalar = Dual<Scalar>;

inline DualScalar dual_lift(const Scalar& x, const Scalar& seed) { return DualScalar(x, seed); }

/// Zero test on the value part; used for denominator checks in generic code.
template <typename T>
bool is_zero(const Dual<T>& d) {
  return is_zero(d.value());
}

inline const Scalar& value_of(const Scalar& s) { return s; }
template <typename T>
const T& value_of(const Dual<T>& d) {
  return d.value();
}

}  // namespace pachner
