#pragma once

#include <cstddef>
#include <span>

namespace abca {

// Pairwise (cascade) summation. Fixed reduction tree, so the result depends
// only on the input order.
template <typename T>
T pairwise_sum(std::span<const T> xs) {
  if (xs.size() <= 8) {
    T acc{};
    for (const T& x : xs) acc += x;
    return acc;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

}  // namespace abca
