#pragma once

// Allocation-free test kernels shared by the public testers and the
// enumeration loops. Every kernel takes the sequence as 0-based values `b`
// (b[0] is the largest element) and its prefix sums `H` with H[0] = 0 and
// H.size() == b.size() + 1. Returned witness indices are 1-based, 0 = none.

#include <algorithm>
#include <cstdint>
#include <span>

#include "degseq/sequence.hpp"

namespace degseq::kernels {

struct Outcome {
  bool pass = true;
  std::size_t witness = 0;
  std::uint32_t rounds = 0;
};

inline Degree pairs(Degree k) { return k * (k - 1) / 2; }

inline Outcome binomial(std::span<const Degree> b, std::span<const Degree> H) {
  const std::size_t n = b.size();
  const Degree total = H[n];
  for (std::size_t i = 1; i < n; ++i) {
    const auto si = static_cast<Degree>(i);
    if (H[i] > si * (si - 1) + (total - H[i])) return {false, i, 0};
  }
  return {};
}

// Splits the head (b_1..b_i) into its first h = floor(i/2) elements and the
// remaining i-h, and asks whether some edge count assignment
//   x1 edges first part <-> tail,  x2 second part <-> tail,
//   x3 between the parts, x4 inside the first, x5 inside the second
// can produce the head degrees:
//   H_h = x1 + x3 + 2 x4,  H_i - H_h = x2 + x3 + 2 x5,
// with x1 <= h(n-i), x2 <= (i-h)(n-i), x1 + x2 <= T_i,
//      x3 <= h(i-h), x4 <= C(h,2), x5 <= C(i-h,2).
// For a fixed x3 the inner counts are best chosen as large as possible, which
// leaves x1 = max(a - 2 C(h,2), a mod 2) with a = H_h - x3 (same for x2).
// Raising x3 by 2 never increases either, so only the two largest admissible
// x3 values need checking.
inline bool split_feasible(std::size_t n, std::size_t i, std::span<const Degree> H) {
  const auto sn = static_cast<Degree>(n);
  const auto si = static_cast<Degree>(i);
  const Degree h = si / 2;
  const Degree first = H[static_cast<std::size_t>(h)];
  const Degree second = H[i] - first;
  const Degree tail = H[n] - H[i];
  const Degree cap1 = h * (sn - si);
  const Degree cap2 = (si - h) * (sn - si);
  const Degree inner1 = 2 * pairs(h);
  const Degree inner2 = 2 * pairs(si - h);
  const Degree cross = std::min({h * (si - h), first, second});
  for (Degree x3 = cross; x3 >= 0 && x3 >= cross - 1; --x3) {
    const Degree a = first - x3;
    const Degree c = second - x3;
    const Degree x1 = std::max(a - inner1, a & 1);
    const Degree x2 = std::max(c - inner2, c & 1);
    if (x1 <= cap1 && x2 <= cap2 && x1 + x2 <= tail) return true;
  }
  return false;
}

inline Outcome headsplit(std::span<const Degree> b, std::span<const Degree> H) {
  const std::size_t n = b.size();
  for (std::size_t i = 2; i < n; ++i) {
    if (!split_feasible(n, i, H)) return {false, i, 0};
  }
  return {};
}

// Quadratic reference: every j in [1, n-1], tail capacity summed naively.
inline Outcome eg_basic(std::span<const Degree> b, std::span<const Degree> H) {
  const std::size_t n = b.size();
  if (H[n] % 2 != 0) return {false, 0, 0};
  for (std::size_t j = 1; j < n; ++j) {
    const auto sj = static_cast<Degree>(j);
    Degree capacity = 0;
    for (std::size_t k = j; k < n; ++k) capacity += std::min(sj, b[k]);
    if (H[j] > sj * (sj - 1) + capacity) return {false, j, 0};
  }
  return {};
}

// Checks only i <= r = max{s : s(s-1) < H_s}; rounds counts the evaluations.
inline Outcome eg_shortened(std::span<const Degree> b, std::span<const Degree> H) {
  const std::size_t n = b.size();
  if (H[n] % 2 != 0) return {false, 0, 0};
  std::size_t last = 0;
  for (std::size_t s = n; s >= 1; --s) {
    const auto ss = static_cast<Degree>(s);
    if (ss * (ss - 1) < H[s]) {
      last = s;
      break;
    }
  }
  Outcome out;
  for (std::size_t i = 1; i <= std::min(last, n - 1); ++i) {
    const auto si = static_cast<Degree>(i);
    Degree capacity = 0;
    for (std::size_t k = i; k < n; ++k) capacity += std::min(si, b[k]);
    ++out.rounds;
    if (H[i] > si * (si - 1) + capacity) {
      out.pass = false;
      out.witness = i;
      return out;
    }
  }
  return out;
}

// Tests only at checking points (last index of each equal-value block) while
// i(i-1) < H_i. rounds counts the inequality evaluations.
inline Outcome eg_jumping(std::span<const Degree> b, std::span<const Degree> H) {
  const std::size_t n = b.size();
  if (H[n] % 2 != 0) return {false, 0, 0};
  auto value = [&](std::size_t i) { return i <= n ? b[i - 1] : Degree{-1}; };
  Outcome out;
  std::size_t i = 1;
  while (i <= n && static_cast<Degree>(i) * static_cast<Degree>(i - 1) < H[i]) {
    while (value(i) == value(i + 1)) ++i;
    const auto si = static_cast<Degree>(i);
    Degree capacity = 0;
    for (std::size_t j = i; j < n; ++j) capacity += std::min(si, b[j]);
    ++out.rounds;
    if (H[i] > si * (si - 1) + capacity) {
      out.pass = false;
      out.witness = i;
      return out;
    }
    ++i;
  }
  return out;
}

// `weights` must hold at least n slots; slot j (1 <= j <= n-1) receives w_j.
inline void fill_weights(std::span<const Degree> b, std::span<std::size_t> weights) {
  const std::size_t n = b.size();
  std::fill(weights.begin(), weights.begin() + static_cast<std::ptrdiff_t>(n), 0);
  Degree previous = static_cast<Degree>(n) - 1;
  for (std::size_t i = 1; i <= n; ++i) {
    const Degree current = b[i - 1];
    if (current < previous) {
      for (Degree j = previous; j > current; --j) weights[static_cast<std::size_t>(j)] = i - 1;
      if (current > 0) weights[static_cast<std::size_t>(current)] = i;
    }
    previous = current;
  }
  for (Degree j = b[n - 1]; j >= 1; --j) weights[static_cast<std::size_t>(j)] = n;
}

// Linear test. Capacity of the tail at i is i(w_i - i) + H_n - H_{w_i} when
// i <= w_i, otherwise H_n - H_i. At i = n the weight is taken as 0.
inline Outcome eg_linear(std::span<const Degree> b, std::span<const Degree> H,
                         std::span<std::size_t> weights) {
  const std::size_t n = b.size();
  const Degree total = H[n];
  if (total % 2 != 0) return {false, 0, 0};
  fill_weights(b, weights);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t w = i < n ? weights[i] : 0;
    const auto si = static_cast<Degree>(i);
    Degree bound = si * (si - 1);
    if (i <= w) {
      bound += si * (static_cast<Degree>(w) - si) + total - H[w];
    } else {
      bound += total - H[i];
    }
    if (H[i] > bound) return {false, i, 0};
  }
  return {};
}

}  // namespace degseq::kernels
