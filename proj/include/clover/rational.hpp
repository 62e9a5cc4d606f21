#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace clover {

/**
 * Arbitrary-precision rational number, always held in lowest terms with a
 * positive denominator. Construction and arithmetic are exact; two Rationals
 * compare equal iff they represent the same number, so reduced-form
 * identities (telescoped products, closed-form coefficients) can be checked
 * with operator==.
 *
 * Thin canonicalizing wrapper over GMP's mpq layer: every constructor
 * normalizes, and GMP keeps arithmetic results canonical when the operands
 * are.
 */
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(const mpz_class& value) : q_(value) {}
  Rational(long value) : q_(mpz_class(value)) {}
  Rational(int value) : q_(mpz_class(value)) {}

  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

  // Parses "p" or "p/q" in base 10.
  static Rational from_string(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
      throw std::invalid_argument("Rational: cannot parse \"" + text + "\"");
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    q.canonicalize();
    Rational r;
    r.q_ = std::move(q);
    return r;
  }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  double to_double() const { return q_.get_d(); }

  // "p/q", or just "p" when the denominator is 1.
  std::string to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.q_ == 0) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  Rational operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

 private:
  mpq_class q_;
};

}  // namespace clover
