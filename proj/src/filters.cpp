#include "degseq/filters.hpp"

#include <algorithm>

#include "degseq/kernels.hpp"

namespace degseq {

std::string_view to_string(FilterId id) {
  switch (id) {
    case FilterId::Parity: return "parity";
    case FilterId::Binomial: return "binomial";
    case FilterId::Positive: return "positive";
    case FilterId::Headsplitter: return "headsplitter";
  }
  return "unknown";
}

namespace {

FilterVerdict from_kernel(kernels::Outcome outcome, FilterId id) {
  if (outcome.pass) return FilterVerdict::pass();
  return FilterVerdict::reject(id, outcome.witness);
}

}  // namespace

FilterVerdict parity_test(const DegreeSequence&, const PrefixProfile& profile) {
  if (profile.total() % 2 != 0) return FilterVerdict::reject(FilterId::Parity);
  return FilterVerdict::pass();
}

FilterVerdict binomial_test(const DegreeSequence& seq, const PrefixProfile& profile) {
  return from_kernel(kernels::binomial(seq.values(), profile.sums()), FilterId::Binomial);
}

FilterVerdict headsplitter_test(const DegreeSequence& seq, const PrefixProfile& profile) {
  return from_kernel(kernels::headsplit(seq.values(), profile.sums()), FilterId::Headsplitter);
}

FilterVerdict positive_test(const DegreeSequence& seq) {
  const auto values = seq.values();
  const auto positive = std::count_if(values.begin(), values.end(), [](Degree d) { return d > 0; });
  if (seq[0] > positive - 1 && seq[0] > 0) return FilterVerdict::reject(FilterId::Positive, 1);
  return FilterVerdict::pass();
}

FilterVerdict composite_test(const DegreeSequence& seq, CompositeOptions options) {
  const PrefixProfile profile(seq);
  if (auto v = parity_test(seq, profile); !v.passed()) return v;
  if (auto v = binomial_test(seq, profile); !v.passed()) return v;
  if (options.positive_test) {
    if (auto v = positive_test(seq); !v.passed()) return v;
  }
  return headsplitter_test(seq, profile);
}

}  // namespace degseq
