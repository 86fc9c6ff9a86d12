#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace platonic {

/// Exact element a + b*sqrt(5) of the quadratic field Q(sqrt5).
///
/// Both coefficients are arbitrary-precision rationals kept in canonical
/// form (reduced, positive denominator), so structural equality is value
/// equality and hashing is sound. The golden ratio tau = (1 + sqrt5)/2 lives
/// here, as do all rational numbers (b = 0).
class QSqrt5 {
 public:
  QSqrt5() = default;
  QSqrt5(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QSqrt5(mpq_class a, mpq_class b);
  explicit QSqrt5(mpq_class a);

  static QSqrt5 golden();
  static QSqrt5 sqrt5();

  /// Parses the textual form produced by to_string(), e.g. "-1/2 + 3√5".
  /// Also accepts "sqrt5" in place of "√5".
  static QSqrt5 parse(std::string_view text);

  const mpq_class& rational() const { return a_; }
  const mpq_class& irrational() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  QSqrt5 conjugate() const { return {a_, -b_}; }
  /// Field norm a^2 - 5 b^2 (product with the conjugate).
  mpq_class norm() const;

  QSqrt5& operator+=(const QSqrt5& o);
  QSqrt5& operator-=(const QSqrt5& o);
  QSqrt5& operator*=(const QSqrt5& o);
  QSqrt5& operator/=(const QSqrt5& o);

  friend QSqrt5 operator+(QSqrt5 x, const QSqrt5& y) { return x += y; }
  friend QSqrt5 operator-(QSqrt5 x, const QSqrt5& y) { return x -= y; }
  friend QSqrt5 operator*(QSqrt5 x, const QSqrt5& y) { return x *= y; }
  friend QSqrt5 operator/(QSqrt5 x, const QSqrt5& y) { return x /= y; }
  QSqrt5 operator-() const { return {-a_, -b_}; }

  friend bool operator==(const QSqrt5& x, const QSqrt5& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  /// Numeric order on the reals, decided exactly.
  friend std::strong_ordering operator<=>(const QSqrt5& x, const QSqrt5& y);

  std::string to_string() const;
  std::size_t hash() const;

 private:
  mpq_class a_{0};
  mpq_class b_{0};
};

QSqrt5 mul(const QSqrt5& x, const QSqrt5& y);

/// Multiplicative inverse via the conjugate. Throws DivisionByZero on 0.
QSqrt5 invert(const QSqrt5& x);

/// Exact sign of a + b*sqrt5 in {-1, 0, +1}; no floating point involved.
int sign(const QSqrt5& x);

/// Nearest-double approximation. For export only, never for decisions.
double to_double(const QSqrt5& x);

std::ostream& operator<<(std::ostream& os, const QSqrt5& x);

}  // namespace platonic

template <>
struct std::hash<platonic::QSqrt5> {
  std::size_t operator()(const platonic::QSqrt5& x) const noexcept {
    return x.hash();
  }
};
