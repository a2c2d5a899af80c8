#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace degseq {

using Degree = std::int64_t;

enum class SequenceErrorKind { NotMonotone, OutOfBounds, LengthMismatch, Empty };

const char* to_string(SequenceErrorKind kind);

class SequenceError : public std::invalid_argument {
 public:
  SequenceError(SequenceErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  SequenceErrorKind kind() const noexcept { return kind_; }

 private:
  SequenceErrorKind kind_;
};

/// A non-increasing sequence b_1 >= ... >= b_n with 0 <= b_i <= n-1.
///
/// Storage is 0-based: operator[](0) is b_1. Algorithms that follow the
/// 1-based textbook indexing use at(i) instead.
class DegreeSequence {
 public:
  /// Validates `raw` as an n-regular sequence. Input order is checked, never
  /// repaired.
  static DegreeSequence make(std::span<const Degree> raw, std::size_t n);
  static DegreeSequence make(std::span<const Degree> raw) { return make(raw, raw.size()); }
  static DegreeSequence make(std::initializer_list<Degree> raw) {
    return make(std::span<const Degree>(raw.begin(), raw.size()));
  }

  std::size_t size() const noexcept { return values_.size(); }
  Degree operator[](std::size_t k) const noexcept { return values_[k]; }
  /// 1-based access, 1 <= i <= n.
  Degree at(std::size_t i) const noexcept { return values_[i - 1]; }
  std::span<const Degree> values() const noexcept { return values_; }
  Degree sum() const noexcept;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  explicit DegreeSequence(std::vector<Degree> values) : values_(std::move(values)) {}
  std::vector<Degree> values_;
};

std::string to_string(const DegreeSequence& seq);

// Prefix sums H_0..H_n; the tail sum T_i = H_n - H_i is derived on demand.
class PrefixProfile {
 public:
  explicit PrefixProfile(const DegreeSequence& seq);

  std::size_t size() const noexcept { return sums_.size() - 1; }
  Degree head(std::size_t i) const noexcept { return sums_[i]; }
  Degree tail(std::size_t i) const noexcept { return sums_.back() - sums_[i]; }
  Degree total() const noexcept { return sums_.back(); }
  std::span<const Degree> sums() const noexcept { return sums_; }

 private:
  std::vector<Degree> sums_;
};

inline PrefixProfile prefix_profile(const DegreeSequence& seq) { return PrefixProfile(seq); }

/// Weight points w_1..w_{n-1}: w_i is the largest k with b_k >= i, 0 if none.
class WeightVector {
 public:
  explicit WeightVector(const DegreeSequence& seq);

  std::size_t size() const noexcept { return weights_.size() - 1; }
  /// 1 <= i <= n-1
  std::size_t at(std::size_t i) const noexcept { return weights_[i]; }

 private:
  std::vector<std::size_t> weights_;  // slot 0 unused
};

inline WeightVector weight_points(const DegreeSequence& seq) { return WeightVector(seq); }

/// Indices i (1-based) with i == n or b_i > b_{i+1}.
struct CheckpointSet {
  std::vector<std::size_t> indices;
  std::size_t count() const noexcept { return indices.size(); }
};

CheckpointSet checkpoints(const DegreeSequence& seq);

/// Drops the trailing zeros. The all-zero sequence maps to (0).
///
/// Returns nullopt when the positive prefix (b_1..b_p) is not p-regular, i.e.
/// b_1 >= p: a vertex of degree b_1 cannot find b_1 positive neighbours, so the
/// input is not graphical.
std::optional<DegreeSequence> strip_zeros(const DegreeSequence& seq);

/// Number of distinct values.
std::size_t rainbow_number(std::span<const Degree> values);

}  // namespace degseq
