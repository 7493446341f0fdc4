#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "hylag/errors.hpp"

namespace hylag {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// "p/q" with q omitted when 1; matches the wire format used everywhere.
inline std::string rational_to_string(const Rational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_string(const std::string& text);

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int i = 0; i < k; ++i) {
    result *= (n - i);
    result /= (i + 1);
  }
  return result;
}

// Element of Q[sqrt(3)], stored as a + b*sqrt(3).
struct QSqrt3 {
  Rational a;
  Rational b;

  QSqrt3() = default;
  QSqrt3(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}
  explicit QSqrt3(const Rational& r) : a(r), b(0) {}

  friend QSqrt3 operator+(const QSqrt3& x, const QSqrt3& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend QSqrt3 operator-(const QSqrt3& x, const QSqrt3& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend QSqrt3 operator*(const QSqrt3& x, const QSqrt3& y) {
    return {x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend QSqrt3 operator/(const QSqrt3& x, const QSqrt3& y) {
    // Multiply by the conjugate; norm a^2 - 3b^2 is nonzero for y != 0.
    const Rational norm = y.a * y.a - 3 * y.b * y.b;
    if (norm == 0) throw SingularityError("division by zero in Q[sqrt(3)]");
    QSqrt3 num = x * QSqrt3{y.a, -y.b};
    return {num.a / norm, num.b / norm};
  }
  friend bool operator==(const QSqrt3& x, const QSqrt3& y) {
    return x.a == y.a && x.b == y.b;
  }

  bool is_zero() const { return a == 0 && b == 0; }
  double value() const { return to_double(a) + to_double(b) * 1.7320508075688772935; }

  static QSqrt3 sqrt3() { return {Rational(0), Rational(1)}; }
};

}  // namespace hylag
