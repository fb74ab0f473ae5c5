#include "pachner/scalar.hpp"

#include <utility>

#include "pachner/error.hpp"

namespace pachner {

Scalar::Scalar(long numerator, long denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  }
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Scalar::Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw Error(ErrorCode::InvalidConfig, "empty rational");
  const auto slash = s.find('/');
  const auto valid_int = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorCode::InvalidConfig, "malformed rational '" + s + "'");
  }
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  return Scalar(mpq_class(n, d));
}

std::string Scalar::str() const {
  return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  q_ /= rhs.q_;
  return *this;
}

Scalar pow(Scalar base, unsigned exponent) {
  Scalar result(1);
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

}  // namespace pachner
