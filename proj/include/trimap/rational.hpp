#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace trimap {

/// Arbitrary-precision rational. Always stored reduced, denominator > 0.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long value) : q_(value) {}  // NOLINT: implicit on purpose
  Rational(long num, long den) : q_(num, den) { canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { canonicalize(); }

  /// Parses "p" or "p/q" (arbitrary precision, optional sign).
  static Rational from_string(const std::string& text) {
    const auto slash = text.find('/');
    mpz_class num, den = 1;
    if (num.set_str(slash == std::string::npos ? text : text.substr(0, slash),
                    10) != 0) {
      throw std::invalid_argument("malformed rational: " + text);
    }
    if (slash != std::string::npos &&
        den.set_str(text.substr(slash + 1), 10) != 0) {
      throw std::invalid_argument("malformed rational: " + text);
    }
    return Rational(num, den);
  }

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational reciprocal() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return Rational(mpq_class(1) / q_);
  }

  double to_double() const { return q_.get_d(); }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const {
    return is_integer() ? q_.get_num().get_str() : q_.get_str();
  }

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.q_ != b.q_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.q_ < b.q_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.q_ <= b.q_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.q_ > b.q_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.q_ >= b.q_;
  }

 private:
  void canonicalize() {
    if (q_.get_den() == 0) throw std::domain_error("zero denominator");
    q_.canonicalize();
  }

  mpq_class q_;
};

}  // namespace trimap
