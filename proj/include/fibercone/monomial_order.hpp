#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "fibercone/monomial.hpp"

namespace fibercone {

enum class OrderKind : std::uint8_t { Degrevlex, Lex, Elim };

/// Total, multiplicative well-order on monomials of one arity.
///
/// Degrevlex: higher total degree wins; ties broken by the last nonzero
/// entry of a - b being negative. Lex: first nonzero entry of a - b positive.
/// Elim(k): degrevlex on the first k variables dominates, ties fall through
/// to degrevlex on the rest -- an elimination order for the first k variables.
struct MonomialOrder {
  OrderKind kind = OrderKind::Degrevlex;
  std::uint32_t elim_block = 0;

  static MonomialOrder degrevlex() { return {OrderKind::Degrevlex, 0}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder elim(std::uint32_t k) { return {OrderKind::Elim, k}; }

  bool operator==(const MonomialOrder&) const = default;
  auto operator<=>(const MonomialOrder&) const = default;

  /// +1 if a > b, 0 if equal, -1 if a < b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case OrderKind::Degrevlex:
        return degrevlex_cmp(a, b, 0, a.arity());
      case OrderKind::Lex:
        return lex_cmp(a, b);
      case OrderKind::Elim: {
        int c = degrevlex_cmp(a, b, 0, elim_block);
        if (c != 0) return c;
        return degrevlex_cmp(a, b, elim_block, a.arity());
      }
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }

  std::string to_string() const {
    switch (kind) {
      case OrderKind::Degrevlex:
        return "degrevlex";
      case OrderKind::Lex:
        return "lex";
      case OrderKind::Elim:
        return "elim(" + std::to_string(elim_block) + ")";
    }
    return "?";
  }

 private:
  static int degrevlex_cmp(const Monomial& a, const Monomial& b,
                           std::size_t lo, std::size_t hi) {
    std::int64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a.exp(i);
      db += b.exp(i);
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;) {
      std::int64_t d = std::int64_t{a.exp(i)} - b.exp(i);
      if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
  }

  static int lex_cmp(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.arity(); ++i) {
      std::int64_t d = std::int64_t{a.exp(i)} - b.exp(i);
      if (d != 0) return d > 0 ? 1 : -1;
    }
    return 0;
  }
};

}  // namespace fibercone
