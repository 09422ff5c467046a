#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "fibercone/errors.hpp"

namespace fibercone {

/// Exponent vector of fixed arity with cached total degree.
class Monomial {
 public:
  explicit Monomial(std::vector<std::uint32_t> exps)
      : e_(std::move(exps)),
        deg_(std::accumulate(e_.begin(), e_.end(), std::uint32_t{0})) {}

  static Monomial one(std::size_t arity) {
    return Monomial(std::vector<std::uint32_t>(arity, 0));
  }

  std::size_t arity() const { return e_.size(); }
  std::uint32_t degree() const { return deg_; }
  std::uint32_t exp(std::size_t i) const { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }
  bool is_one() const { return deg_ == 0; }

  Monomial operator*(const Monomial& o) const {
    check_arity(o);
    std::vector<std::uint32_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
    return Monomial(std::move(r));
  }

  bool divides(const Monomial& o) const {
    check_arity(o);
    if (deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  /// this / o; requires o.divides(*this).
  Monomial quotient_by(const Monomial& o) const {
    check_arity(o);
    std::vector<std::uint32_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (o.e_[i] > e_[i])
        throw Error("monomial quotient requested for non-divisor");
      r[i] = e_[i] - o.e_[i];
    }
    return Monomial(std::move(r));
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check_arity(b);
    std::vector<std::uint32_t> r(a.e_.size());
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = std::max(a.e_[i], b.e_[i]);
    return Monomial(std::move(r));
  }

  bool coprime_with(const Monomial& o) const {
    check_arity(o);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }

  std::string to_string(const std::vector<std::string>& names) const {
    if (is_one()) return "1";
    std::string s;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += names[i];
      if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
    }
    return s;
  }

 private:
  void check_arity(const Monomial& o) const {
    if (e_.size() != o.e_.size())
      throw Error("monomial arity mismatch: " + std::to_string(e_.size()) +
                  " vs " + std::to_string(o.e_.size()));
  }

  std::vector<std::uint32_t> e_;
  std::uint32_t deg_;
};

}  // namespace fibercone
