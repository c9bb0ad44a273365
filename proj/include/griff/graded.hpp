#pragma once

#include <concepts>

#include "griff/rat.hpp"

namespace griff {

// Contract for the ambient graded rings that carry characteristic-class
// computations: graded-commutative over Rat, truncated above top_degree,
// with exact homogeneous-component extraction and unit inversion.
template <typename R>
concept GradedRing = requires(const R a, const R b, const Rat& q, int k) {
  { a.top_degree() } -> std::convertible_to<int>;
  { a.component(k) } -> std::convertible_to<R>;
  { a.unit() } -> std::convertible_to<R>;
  { a.zero_like() } -> std::convertible_to<R>;
  { a.compatible(b) } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.constant_coeff() } -> std::convertible_to<Rat>;
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { a.scale(q) } -> std::convertible_to<R>;
  { a.inv() } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
};

}  // namespace griff
