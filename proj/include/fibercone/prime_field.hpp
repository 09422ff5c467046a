#pragma once

#include <cstdint>
#include <string>

#include "fibercone/errors.hpp"
#include "fibercone/rng.hpp"

namespace fibercone {

/// Residue scalar in F_p, value stored in [0, p). Each scalar carries its
/// modulus so mixed-field arithmetic is caught at the operation site.
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  struct Spec {
    std::uint32_t p = kDefaultPrime;
    bool operator==(const Spec&) const = default;
    std::string name() const { return "F" + std::to_string(p); }
  };

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q = 2; q * q <= n; ++q)
      if (n % q == 0) return false;
    return true;
  }

  /// One-time modulus validation; scalar construction itself stays cheap.
  static void validate(const Spec& s) {
    if (!is_prime(s.p))
      throw HypothesisError("field modulus " + std::to_string(s.p) +
                            " is not prime");
  }

  PrimeField() : v_(0), p_(kDefaultPrime) {}
  PrimeField(long long n, std::uint32_t p) : p_(p) {
    long long r = n % static_cast<long long>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  static PrimeField zero(const Spec& s) { return PrimeField(0, s.p); }
  static PrimeField one(const Spec& s) { return PrimeField(1, s.p); }
  static PrimeField from_long(long long n, const Spec& s) {
    return PrimeField(n, s.p);
  }
  static PrimeField sample(Rng& rng, const Spec& s) {
    return PrimeField(static_cast<long long>(rng.below(s.p)), s.p);
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  PrimeField operator-() const {
    return raw(v_ == 0 ? 0 : p_ - v_, p_);
  }
  PrimeField operator+(const PrimeField& o) const {
    match(o);
    std::uint64_t s = std::uint64_t{v_} + o.v_;
    if (s >= p_) s -= p_;
    return raw(static_cast<std::uint32_t>(s), p_);
  }
  PrimeField operator-(const PrimeField& o) const {
    match(o);
    std::uint64_t s = std::uint64_t{v_} + p_ - o.v_;
    if (s >= p_) s -= p_;
    return raw(static_cast<std::uint32_t>(s), p_);
  }
  PrimeField operator*(const PrimeField& o) const {
    match(o);
    return raw(static_cast<std::uint32_t>(std::uint64_t{v_} * o.v_ % p_), p_);
  }
  PrimeField operator/(const PrimeField& o) const { return *this * o.inv(); }

  PrimeField inv() const {
    if (v_ == 0) throw DivisionByZeroError("inverse of zero in F_p");
    // extended Euclid
    std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    if (x0 < 0) x0 += p_;
    return raw(static_cast<std::uint32_t>(x0), p_);
  }

  bool operator==(const PrimeField& o) const {
    return p_ == o.p_ && v_ == o.v_;
  }

  std::string to_string() const { return std::to_string(v_); }

 private:
  static PrimeField raw(std::uint32_t v, std::uint32_t p) {
    PrimeField f;
    f.v_ = v;
    f.p_ = p;
    return f;
  }
  void match(const PrimeField& o) const {
    if (p_ != o.p_)
      throw HypothesisError("mixed prime-field moduli " + std::to_string(p_) +
                            " and " + std::to_string(o.p_));
  }

  std::uint32_t v_;
  std::uint32_t p_;
};

}  // namespace fibercone
