#include "platonic/qsqrt5.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "platonic/error.hpp"

namespace platonic {

namespace {

constexpr std::string_view kRootGlyph = "√5";

std::size_t hash_mpz(mpz_srcptr z, std::size_t seed) {
  const auto mix = [&seed](std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  };
  mix(static_cast<std::size_t>(mpz_sgn(z) + 1));
  const std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs; ++i) {
    mix(static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i))));
  }
  return seed;
}

mpq_class parse_rational(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::string_view digits = s;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  const auto slash = digits.find('/');
  const auto all_digits = [](std::string_view part) {
    if (part.empty()) return false;
    for (char c : part) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  const bool ok = slash == std::string_view::npos
                      ? all_digits(digits)
                      : all_digits(digits.substr(0, slash)) &&
                            all_digits(digits.substr(slash + 1));
  if (!ok) throw ParseError("malformed rational '" + std::string(s) + "'");
  mpq_class q(std::string(s), 10);
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  q.canonicalize();
  return q;
}

std::string coefficient_prefix(const mpq_class& b) {
  if (b == 1) return "";
  if (b == -1) return "-";
  return b.get_str();
}

}  // namespace

QSqrt5::QSqrt5(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.get_den() == 0 || b_.get_den() == 0) throw DivisionByZero();
  a_.canonicalize();
  b_.canonicalize();
}

QSqrt5::QSqrt5(mpq_class a) : QSqrt5(std::move(a), mpq_class(0)) {}

QSqrt5 QSqrt5::golden() { return {mpq_class(1, 2), mpq_class(1, 2)}; }

QSqrt5 QSqrt5::sqrt5() { return {mpq_class(0), mpq_class(1)}; }

mpq_class QSqrt5::norm() const { return a_ * a_ - 5 * b_ * b_; }

QSqrt5& QSqrt5::operator+=(const QSqrt5& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrt5& QSqrt5::operator-=(const QSqrt5& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrt5& QSqrt5::operator*=(const QSqrt5& o) {
  if (o.is_rational()) {
    a_ *= o.a_;
    b_ *= o.a_;
    return *this;
  }
  mpq_class a = a_ * o.a_ + 5 * b_ * o.b_;
  mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QSqrt5& QSqrt5::operator/=(const QSqrt5& o) { return *this *= invert(o); }

std::strong_ordering operator<=>(const QSqrt5& x, const QSqrt5& y) {
  const int s = sign(x - y);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string QSqrt5::to_string() const {
  if (sgn(b_) == 0) return a_.get_str();
  if (sgn(a_) == 0) return coefficient_prefix(b_) + std::string(kRootGlyph);
  const mpq_class magnitude = abs(b_);
  return a_.get_str() + (sgn(b_) > 0 ? " + " : " - ") +
         coefficient_prefix(magnitude) + std::string(kRootGlyph);
}

QSqrt5 QSqrt5::parse(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  for (auto pos = s.find("sqrt5"); pos != std::string::npos; pos = s.find("sqrt5")) {
    s.replace(pos, 5, kRootGlyph);
  }
  if (s.empty()) throw ParseError("empty Q(sqrt5) literal");

  if (!s.ends_with(kRootGlyph)) return QSqrt5(parse_rational(s));

  const std::string body = s.substr(0, s.size() - kRootGlyph.size());
  if (body.find(kRootGlyph) != std::string::npos) {
    throw ParseError("repeated sqrt5 term in '" + std::string(text) + "'");
  }
  const auto split = body.find_last_of("+-");
  std::string rational_part;
  std::string coefficient = body;
  if (split != std::string::npos && split > 0) {
    rational_part = body.substr(0, split);
    coefficient = body.substr(split);
  }
  mpq_class b;
  if (coefficient.empty() || coefficient == "+") {
    b = 1;
  } else if (coefficient == "-") {
    b = -1;
  } else {
    b = parse_rational(coefficient);
  }
  mpq_class a = rational_part.empty() ? mpq_class(0) : parse_rational(rational_part);
  return {std::move(a), std::move(b)};
}

std::size_t QSqrt5::hash() const {
  std::size_t seed = 0;
  seed = hash_mpz(a_.get_num_mpz_t(), seed);
  seed = hash_mpz(a_.get_den_mpz_t(), seed);
  seed = hash_mpz(b_.get_num_mpz_t(), seed);
  seed = hash_mpz(b_.get_den_mpz_t(), seed);
  return seed;
}

QSqrt5 mul(const QSqrt5& x, const QSqrt5& y) { return x * y; }

QSqrt5 invert(const QSqrt5& x) {
  if (x.is_zero()) throw DivisionByZero();
  // a^2 - 5b^2 vanishes only at zero because sqrt5 is irrational.
  const mpq_class n = x.norm();
  return {x.rational() / n, -x.irrational() / n};
}

int sign(const QSqrt5& x) {
  const int sa = sgn(x.rational());
  const int sb = sgn(x.irrational());
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const mpq_class a2 = x.rational() * x.rational();
  const mpq_class b2 = 5 * x.irrational() * x.irrational();
  return a2 > b2 ? sa : sb;
}

double to_double(const QSqrt5& x) {
  if (x.is_rational()) return x.rational().get_d();
  // Evaluate via the conjugate when the terms cancel, to keep relative error small.
  const double a = x.rational().get_d();
  const double b = x.irrational().get_d();
  const double root = std::sqrt(5.0);
  const double direct = a + b * root;
  const double conj = a - b * root;
  if (std::fabs(direct) < 0.5 * std::fabs(conj) && conj != 0.0) {
    return x.norm().get_d() / conj;
  }
  return direct;
}

std::ostream& operator<<(std::ostream& os, const QSqrt5& x) {
  return os << x.to_string();
}

}  // namespace platonic
