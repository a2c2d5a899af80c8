#pragma once

#include <optional>
#include <string_view>

#include "degseq/sequence.hpp"

namespace degseq {

// One-sided tests: Rejected proves the input is not graphical, Passed only
// means the test could not decide.

enum class FilterId { Parity, Binomial, Positive, Headsplitter };

std::string_view to_string(FilterId id);

struct FilterVerdict {
  enum class Outcome { Rejected, Passed };

  Outcome outcome = Outcome::Passed;
  std::optional<FilterId> rejected_by;
  std::optional<std::size_t> witness_index;  // 1-based

  bool passed() const noexcept { return outcome == Outcome::Passed; }

  static FilterVerdict pass() { return {}; }
  static FilterVerdict reject(FilterId id, std::optional<std::size_t> witness = std::nullopt) {
    return {Outcome::Rejected, id, witness};
  }
};

FilterVerdict parity_test(const DegreeSequence& seq, const PrefixProfile& profile);

/// H_i <= i(i-1) + T_i for i in [1, n-1]; stops at the first violation.
FilterVerdict binomial_test(const DegreeSequence& seq, const PrefixProfile& profile);

/// Head splitting bound for i in [2, n-1]; see kernels::split_feasible.
FilterVerdict headsplitter_test(const DegreeSequence& seq, const PrefixProfile& profile);

/// b_1 <= p - 1 where p is the number of positive elements.
FilterVerdict positive_test(const DegreeSequence& seq);

struct CompositeOptions {
  bool positive_test = false;
};

/// Parity, binomial, [positive,] headsplitter in that order; first rejection
/// wins.
FilterVerdict composite_test(const DegreeSequence& seq, CompositeOptions options = {});

}  // namespace degseq
