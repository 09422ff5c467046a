#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

#include "fibercone/errors.hpp"
#include "fibercone/rng.hpp"

namespace fibercone {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar: arbitrary-precision numerator/denominator kept in
/// canonical form (reduced, positive denominator) by cpp_rational.
class Rational {
 public:
  /// Field descriptor; rationals need no runtime configuration.
  struct Spec {
    bool operator==(const Spec&) const = default;
    std::string name() const { return "QQ"; }
  };

  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}  // NOLINT: implicit by design
  explicit Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    v_ = boost::multiprecision::cpp_rational(num) /
         boost::multiprecision::cpp_rational(den);
  }

  static void validate(const Spec&) {}

  static Rational zero(const Spec&) { return Rational(); }
  static Rational one(const Spec&) { return Rational(1); }
  static Rational from_long(long long n, const Spec&) { return Rational(n); }

  /// Random scalar from a small symmetric integer range; used for generic
  /// coefficient choices (reductions, superficial candidates).
  static Rational sample(Rng& rng, const Spec&) {
    return Rational(static_cast<long long>(rng.below(201)) - 100);
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  BigInt num() const { return boost::multiprecision::numerator(v_); }
  BigInt den() const { return boost::multiprecision::denominator(v_); }

  Rational operator-() const { return Rational(-v_); }
  Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
  Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
  Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw DivisionByZeroError();
    return Rational(v_ / o.v_);
  }
  Rational inv() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero");
    return Rational(1) / *this;
  }

  bool operator==(const Rational& o) const { return v_ == o.v_; }

  std::string to_string() const {
    std::string s = num().str();
    if (den() != 1) s += "/" + den().str();
    return s;
  }

 private:
  explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
  boost::multiprecision::cpp_rational v_;
};

}  // namespace fibercone
