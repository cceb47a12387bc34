#pragma once

#include <stdexcept>
#include <string>

#include "ospkit/rational.hpp"

namespace ospkit {

/// Element a + b*sqrt(2) of the real quadratic field Q(sqrt 2).
///
/// Zero iff a = 0 and b = 0. Every nonzero element is invertible:
/// (a + b*sqrt2)^-1 = (a - b*sqrt2) / (a^2 - 2 b^2), and the norm
/// a^2 - 2 b^2 never vanishes on nonzero elements since sqrt(2) is
/// irrational. Values are immutable in practice and safe to share
/// across threads.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(long n) : a_(n) {}  // NOLINT: implicit by design
  QSqrt2(Rational a) : a_(std::move(a)) {}  // NOLINT: implicit by design
  QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt2 sqrt2() { return QSqrt2(0, 1); }
  /// 1/sqrt(2), canonically stored as (0, 1/2).
  static QSqrt2 inv_sqrt2() { return QSqrt2(Rational(0), Rational(1, 2)); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QSqrt2 operator-() const { return QSqrt2(-a_, -b_); }
  QSqrt2& operator+=(const QSqrt2& o) { a_ += o.a_; b_ += o.b_; return *this; }
  QSqrt2& operator-=(const QSqrt2& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  QSqrt2& operator*=(const QSqrt2& o) {
    // (a1 + b1 s)(a2 + b2 s) = (a1 a2 + 2 b1 b2) + (a1 b2 + a2 b1) s
    Rational a = a_ * o.a_ + Rational(2) * b_ * o.b_;
    Rational b = a_ * o.b_ + o.a_ * b_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }

  QSqrt2 inv() const {
    if (is_zero()) throw std::domain_error("QSqrt2: division by zero");
    Rational norm = a_ * a_ - Rational(2) * b_ * b_;
    return QSqrt2(a_ / norm, -b_ / norm);
  }

  QSqrt2& operator/=(const QSqrt2& o) { return *this *= o.inv(); }

  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
  friend QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }
  friend bool operator==(const QSqrt2& x, const QSqrt2& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QSqrt2& x, const QSqrt2& y) { return !(x == y); }

  /// "p/q + r/s√2" with zero terms elided; "0" for zero.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    if (!a_.is_zero()) out = a_.to_string();
    if (!b_.is_zero()) {
      std::string root = root_part(b_);
      if (out.empty()) {
        out = root;
      } else if (root[0] == '-') {
        out += " - " + root.substr(1);
      } else {
        out += " + " + root;
      }
    }
    return out;
  }

  /// True when to_string() renders as two joined terms.
  bool is_composite() const { return !a_.is_zero() && !b_.is_zero(); }
  /// Display sign of a single-term value (used by vector printers).
  bool leading_minus() const {
    if (is_composite()) return false;
    return (b_.is_zero() ? a_.sign() : b_.sign()) < 0;
  }

 private:
  static std::string root_part(const Rational& b) {
    if (b == Rational(1)) return "√2";
    if (b == Rational(-1)) return "-√2";
    if (b.is_integer()) return b.to_string() + "√2";
    std::string num = b.num().get_str();
    std::string den = b.den().get_str();
    if (num == "1") return "√2/" + den;
    if (num == "-1") return "-√2/" + den;
    return num + "√2/" + den;
  }

  Rational a_;
  Rational b_;
};

}  // namespace ospkit
