#include "degseq/sequence.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace degseq {

const char* to_string(SequenceErrorKind kind) {
  switch (kind) {
    case SequenceErrorKind::NotMonotone: return "NotMonotone";
    case SequenceErrorKind::OutOfBounds: return "OutOfBounds";
    case SequenceErrorKind::LengthMismatch: return "LengthMismatch";
    case SequenceErrorKind::Empty: return "Empty";
  }
  return "Unknown";
}

DegreeSequence DegreeSequence::make(std::span<const Degree> raw, std::size_t n) {
  if (n == 0) {
    throw SequenceError(SequenceErrorKind::Empty, "sequence length must be positive");
  }
  if (raw.size() != n) {
    throw SequenceError(SequenceErrorKind::LengthMismatch,
                        "expected " + std::to_string(n) + " elements, got " +
                            std::to_string(raw.size()));
  }
  const auto upper = static_cast<Degree>(n) - 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (raw[k] < 0 || raw[k] > upper) {
      throw SequenceError(SequenceErrorKind::OutOfBounds,
                          "element " + std::to_string(k + 1) + " = " + std::to_string(raw[k]) +
                              " outside [0, " + std::to_string(upper) + "]");
    }
    if (k > 0 && raw[k - 1] < raw[k]) {
      throw SequenceError(SequenceErrorKind::NotMonotone,
                          "element " + std::to_string(k + 1) + " exceeds its predecessor");
    }
  }
  return DegreeSequence(std::vector<Degree>(raw.begin(), raw.end()));
}

Degree DegreeSequence::sum() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), Degree{0});
}

std::string to_string(const DegreeSequence& seq) {
  std::string out = "(";
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(seq[k]);
  }
  return out + ")";
}

PrefixProfile::PrefixProfile(const DegreeSequence& seq) : sums_(seq.size() + 1, 0) {
  for (std::size_t i = 1; i <= seq.size(); ++i) sums_[i] = sums_[i - 1] + seq.at(i);
}

WeightVector::WeightVector(const DegreeSequence& seq) : weights_(seq.size(), 0) {
  const std::size_t n = seq.size();
  // b_0 = n - 1 acts as a sentinel so values above b_1 get weight 0.
  Degree previous = static_cast<Degree>(n) - 1;
  for (std::size_t i = 1; i <= n; ++i) {
    const Degree current = seq.at(i);
    if (current < previous) {
      for (Degree j = previous; j > current; --j) weights_[j] = i - 1;
      if (current > 0) weights_[current] = i;
    }
    previous = current;
  }
  for (Degree j = seq.at(n); j >= 1; --j) weights_[j] = n;
}

CheckpointSet checkpoints(const DegreeSequence& seq) {
  CheckpointSet result;
  const std::size_t n = seq.size();
  for (std::size_t i = 1; i < n; ++i) {
    if (seq.at(i) > seq.at(i + 1)) result.indices.push_back(i);
  }
  result.indices.push_back(n);
  return result;
}

std::optional<DegreeSequence> strip_zeros(const DegreeSequence& seq) {
  auto values = seq.values();
  const auto positive = static_cast<std::size_t>(
      std::find(values.begin(), values.end(), Degree{0}) - values.begin());
  if (positive == 0) return DegreeSequence::make({0});
  if (positive == seq.size()) return seq;
  if (values[0] >= static_cast<Degree>(positive)) return std::nullopt;
  return DegreeSequence::make(values.first(positive));
}

std::size_t rainbow_number(std::span<const Degree> values) {
  return std::set<Degree>(values.begin(), values.end()).size();
}

}  // namespace degseq
