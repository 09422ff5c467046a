#pragma once

#include <concepts>
#include <string>

#include "fibercone/rng.hpp"

namespace fibercone {

/// Exact coefficient field. Models: Rational, PrimeField.
template <typename F>
concept Field = requires(const F a, const F b, Rng& rng,
                         const typename F::Spec& spec, long long n) {
  { F::validate(spec) };
  { F::zero(spec) } -> std::same_as<F>;
  { F::one(spec) } -> std::same_as<F>;
  { F::from_long(n, spec) } -> std::same_as<F>;
  { F::sample(rng, spec) } -> std::same_as<F>;
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a* b } -> std::same_as<F>;
  { a / b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a.inv() } -> std::same_as<F>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_one() } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

}  // namespace fibercone
