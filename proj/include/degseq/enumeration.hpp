#pragma once

// Exhaustive walks over n-regular sequences, the G(n) counting pipeline and
// its slice-parallel driver.
//
// Sequences are visited in reverse lexicographic order starting from
// (n-1, ..., n-1). A slice fixes the leading elements; slices with distinct
// prefixes of equal length are disjoint, and the prefixes produced by
// slice_plan cover the whole space. Each slice is walked by its own generator,
// so workers share nothing and the merged report does not depend on the
// thread count or on scheduling.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "degseq/counting.hpp"
#include "degseq/precise.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

enum class SequenceKind { Regular, Even, ZerofreeEven };

std::string_view to_string(SequenceKind kind);
SequenceKind parse_kind(std::string_view name);

/// Successor-based generator. values() and prefix_sums() describe the current
/// sequence while !done(). Advancing costs amortized O(1): only the trailing
/// run that changes is rewritten, and the parity of the sum is read off the
/// maintained prefix sums.
class SequenceGenerator {
 public:
  SequenceGenerator(std::size_t n, SequenceKind kind, std::span<const Degree> fixed_prefix = {});

  bool done() const noexcept { return done_; }
  std::span<const Degree> values() const noexcept { return values_; }
  /// H_0..H_n
  std::span<const Degree> prefix_sums() const noexcept { return sums_; }
  void advance();

 private:
  bool step();
  bool admissible() const noexcept;
  void resum(std::size_t from);

  std::size_t n_;
  SequenceKind kind_;
  std::size_t frozen_;
  Degree floor_;
  bool done_ = false;
  std::vector<Degree> values_;
  std::vector<Degree> sums_;
};

/// Visits every sequence of `kind` once; returns the number visited.
BigCount generate(std::size_t n, SequenceKind kind,
                  const std::function<void(std::span<const Degree>)>& visitor);

struct SliceTask {
  std::size_t n = 0;
  std::vector<Degree> fixed_prefix;
  SequenceKind kind = SequenceKind::ZerofreeEven;
};

/// One task per admissible leading value; from n >= 16 (or when
/// `prefix_length` is 2) one task per admissible leading pair. A space with
/// no admissible prefix yields a single unconstrained task.
std::vector<SliceTask> slice_plan(std::size_t n, SequenceKind kind,
                                  std::optional<std::size_t> prefix_length = std::nullopt);

struct CountReport {
  std::size_t n = 0;
  SequenceKind kind = SequenceKind::ZerofreeEven;
  std::optional<Algorithm> algorithm;
  BigCount total_seen = 0;
  BigCount accepted = 0;
  std::vector<BigCount> per_b1;            // index = first element
  std::vector<BigCount> rounds_histogram;  // index i-1 holds f_i
  // filter_census only: zerofree even sequences passing the binomial test and
  // the composite filter.
  BigCount binomial_passed = 0;
  BigCount filters_passed = 0;
  // count_graphical only: G(n) from the zerofree counts of 2..n.
  std::optional<BigCount> derived_total;
};

/// Component-wise exact sum. Throws std::invalid_argument (MixedReports) when
/// n, kind or algorithm differ. The empty list yields a zero report.
CountReport aggregate(std::span<const CountReport> reports);

/// What a walk computes per visited sequence.
struct Analysis {
  enum class Mode { Graphical, Census, JumpingRounds };
  Mode mode = Mode::Graphical;
  Algorithm algorithm = Algorithm::ErdosGallaiLinear;
};

/// Walks one slice on the calling thread.
CountReport run_slice(const SliceTask& task, const Analysis& analysis);

/// Serial reference: one generator over the whole space, no slicing.
CountReport run_serial(std::size_t n, SequenceKind kind, const Analysis& analysis);

/// OpenMP driver: tasks are distributed dynamically over `threads` workers
/// and merged in task order.
CountReport run_parallel(std::span<const SliceTask> tasks, const Analysis& analysis,
                         unsigned threads);

struct CheckpointOptions {
  std::filesystem::path path;
};

/// G_z(n) over zerofree even n-sequences (accepted, per_b1), plus G(n) in
/// derived_total. With a checkpoint, completed slices found in the file are
/// not recomputed and newly completed ones are appended as
/// `n,kind,prefix,accepted,total_seen`.
CountReport count_graphical(std::size_t n, Algorithm algorithm, unsigned threads,
                            const std::optional<CheckpointOptions>& checkpoint = std::nullopt);

/// One pass over zerofree even n-sequences counting binomial, composite-filter
/// and EGL acceptances.
CountReport filter_census(std::size_t n, unsigned threads);

struct CensusRow {
  std::size_t n = 0;
  BigCount zerofree_even;       // E_z(n)
  BigCount zerofree_binomial;   // zerofree sequences passing the binomial test
  BigCount zerofree_filtered;   // ... and the head splitting test
  BigCount zerofree_graphical;  // G_z(n)
  BigCount binomial;            // 1 + sum_{k<=n} zerofree_binomial(k)
  BigCount filtered;            // 1 + sum_{k<=n} zerofree_filtered(k)
  BigCount graphical;           // G(n)
};

/// Rows 1..max_n. The cumulative columns count even n-sequences whose
/// zero-stripped form passes the respective test.
std::vector<CensusRow> census_table(std::size_t max_n, unsigned threads);

/// per_b1[d] = number of n-graphical sequences (zeros allowed) with b_1 = d.
CountReport b1_distribution(std::size_t n, unsigned threads);

/// rounds_histogram[i-1] = number of even non-graphical n-sequences that the
/// jumping test rejects after exactly i inequality evaluations.
CountReport egj_round_histogram(std::size_t n, unsigned threads);

/// Reads the checkpoint file; returns the records matching (n, kind).
struct CheckpointRecord {
  std::size_t n = 0;
  SequenceKind kind = SequenceKind::ZerofreeEven;
  std::vector<Degree> prefix;
  BigCount accepted = 0;
  BigCount total_seen = 0;
};
std::vector<CheckpointRecord> read_checkpoint(const std::filesystem::path& path);
std::string format_checkpoint(const CheckpointRecord& record);

/// `threads` argument meaning "use every available core".
unsigned default_threads();

}  // namespace degseq
