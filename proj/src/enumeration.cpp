#include "degseq/enumeration.hpp"

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "degseq/kernels.hpp"

namespace degseq {

std::string_view to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::Regular: return "regular";
    case SequenceKind::Even: return "even";
    case SequenceKind::ZerofreeEven: return "zerofree-even";
  }
  return "?";
}

SequenceKind parse_kind(std::string_view name) {
  for (auto kind : {SequenceKind::Regular, SequenceKind::Even, SequenceKind::ZerofreeEven}) {
    if (to_string(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown sequence kind: " + std::string(name));
}

namespace {

Degree floor_of(SequenceKind kind) { return kind == SequenceKind::ZerofreeEven ? 1 : 0; }

}  // namespace

SequenceGenerator::SequenceGenerator(std::size_t n, SequenceKind kind,
                                     std::span<const Degree> fixed_prefix)
    : n_(n), kind_(kind), frozen_(fixed_prefix.size()), floor_(floor_of(kind)),
      values_(n), sums_(n + 1, 0) {
  if (n == 0) throw std::invalid_argument("sequence length must be positive");
  if (fixed_prefix.size() > n) throw std::invalid_argument("prefix longer than the sequence");
  const Degree top = static_cast<Degree>(n) - 1;
  for (std::size_t k = 0; k < fixed_prefix.size(); ++k) {
    if (fixed_prefix[k] < floor_ || fixed_prefix[k] > top ||
        (k > 0 && fixed_prefix[k] > fixed_prefix[k - 1])) {
      throw std::invalid_argument("prefix is not an admissible leading run");
    }
  }
  if (floor_ > top) {
    done_ = true;
    return;
  }
  std::copy(fixed_prefix.begin(), fixed_prefix.end(), values_.begin());
  const Degree fill = fixed_prefix.empty() ? top : fixed_prefix.back();
  std::fill(values_.begin() + static_cast<std::ptrdiff_t>(frozen_), values_.end(), fill);
  resum(0);
  if (!admissible()) advance();
}

bool SequenceGenerator::admissible() const noexcept {
  return kind_ == SequenceKind::Regular || sums_[n_] % 2 == 0;
}

void SequenceGenerator::resum(std::size_t from) {
  for (std::size_t k = from; k < n_; ++k) sums_[k + 1] = sums_[k] + values_[k];
}

bool SequenceGenerator::step() {
  std::size_t j = n_;
  while (j > frozen_ && values_[j - 1] == floor_) --j;
  if (j == frozen_) {
    done_ = true;
    return false;
  }
  const Degree lowered = --values_[j - 1];
  std::fill(values_.begin() + static_cast<std::ptrdiff_t>(j), values_.end(), lowered);
  resum(j - 1);
  return true;
}

void SequenceGenerator::advance() {
  while (step()) {
    if (admissible()) return;
  }
}

BigCount generate(std::size_t n, SequenceKind kind,
                  const std::function<void(std::span<const Degree>)>& visitor) {
  std::uint64_t visited = 0;
  for (SequenceGenerator gen(n, kind); !gen.done(); gen.advance()) {
    visitor(gen.values());
    ++visited;
  }
  return visited;
}

namespace {

void extend_prefixes(std::size_t n, SequenceKind kind, std::size_t depth, std::vector<Degree>& prefix,
                     std::vector<SliceTask>& out) {
  if (prefix.size() == depth) {
    out.push_back(SliceTask{n, prefix, kind});
    return;
  }
  const Degree top = prefix.empty() ? static_cast<Degree>(n) - 1 : prefix.back();
  for (Degree d = top; d >= floor_of(kind); --d) {
    prefix.push_back(d);
    extend_prefixes(n, kind, depth, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<SliceTask> slice_plan(std::size_t n, SequenceKind kind,
                                  std::optional<std::size_t> prefix_length) {
  const std::size_t depth = std::min(n, prefix_length.value_or(n >= 16 ? 2 : 1));
  std::vector<SliceTask> tasks;
  std::vector<Degree> prefix;
  extend_prefixes(n, kind, depth, prefix, tasks);
  // An empty space still gets one task so that reports carry n and kind.
  if (tasks.empty()) tasks.push_back(SliceTask{n, {}, kind});
  return tasks;
}

namespace {

void add_into(std::vector<BigCount>& into, const std::vector<BigCount>& from) {
  if (into.size() < from.size()) into.resize(from.size(), 0);
  for (std::size_t k = 0; k < from.size(); ++k) into[k] += from[k];
}

std::size_t histogram_slots(std::size_t n) { return (n + 1) / 2 + 1; }

}  // namespace

CountReport aggregate(std::span<const CountReport> reports) {
  CountReport total;
  if (reports.empty()) return total;
  total.n = reports.front().n;
  total.kind = reports.front().kind;
  total.algorithm = reports.front().algorithm;
  for (const auto& r : reports) {
    if (r.n != total.n || r.kind != total.kind || r.algorithm != total.algorithm) {
      throw std::invalid_argument("MixedReports: reports differ in n, kind or algorithm");
    }
    total.total_seen += r.total_seen;
    total.accepted += r.accepted;
    total.binomial_passed += r.binomial_passed;
    total.filters_passed += r.filters_passed;
    add_into(total.per_b1, r.per_b1);
    add_into(total.rounds_histogram, r.rounds_histogram);
  }
  return total;
}

namespace {

// Per-walk tallies in machine words; converted to BigCount once per walk.
struct Tally {
  explicit Tally(std::size_t n) : per_b1(n, 0), rounds(histogram_slots(n), 0), weights(n + 1, 0) {}

  std::uint64_t seen = 0;
  std::uint64_t accepted = 0;
  std::uint64_t binomial = 0;
  std::uint64_t filtered = 0;
  std::vector<std::uint64_t> per_b1;
  std::vector<std::uint64_t> rounds;
  std::vector<std::size_t> weights;
};

bool decide(Algorithm algorithm, std::span<const Degree> b, std::span<const Degree> H,
            std::span<std::size_t> weights) {
  switch (algorithm) {
    case Algorithm::ErdosGallaiLinear: return kernels::eg_linear(b, H, weights).pass;
    case Algorithm::ErdosGallaiJumping: return kernels::eg_jumping(b, H).pass;
    case Algorithm::ErdosGallaiShortened: return kernels::eg_shortened(b, H).pass;
    case Algorithm::ErdosGallai: return kernels::eg_basic(b, H).pass;
    default: return is_graphical(DegreeSequence::make(b), algorithm).graphical;
  }
}

void visit(const Analysis& analysis, std::span<const Degree> b, std::span<const Degree> H,
           Tally& tally) {
  ++tally.seen;
  bool graphical = false;
  switch (analysis.mode) {
    case Analysis::Mode::Graphical:
      graphical = decide(analysis.algorithm, b, H, tally.weights);
      break;
    case Analysis::Mode::Census:
      if (kernels::binomial(b, H).pass) {
        ++tally.binomial;
        if (kernels::headsplit(b, H).pass) ++tally.filtered;
      }
      graphical = kernels::eg_linear(b, H, tally.weights).pass;
      break;
    case Analysis::Mode::JumpingRounds: {
      const auto outcome = kernels::eg_jumping(b, H);
      graphical = outcome.pass;
      if (!graphical && outcome.rounds > 0) {
        if (outcome.rounds > tally.rounds.size()) tally.rounds.resize(outcome.rounds, 0);
        ++tally.rounds[outcome.rounds - 1];
      }
      break;
    }
  }
  if (graphical) {
    ++tally.accepted;
    ++tally.per_b1[static_cast<std::size_t>(b[0])];
  }
}

std::optional<Algorithm> reported_algorithm(const Analysis& analysis) {
  switch (analysis.mode) {
    case Analysis::Mode::Graphical: return analysis.algorithm;
    case Analysis::Mode::Census: return Algorithm::ErdosGallaiLinear;
    case Analysis::Mode::JumpingRounds: return Algorithm::ErdosGallaiJumping;
  }
  return std::nullopt;
}

CountReport to_report(std::size_t n, SequenceKind kind, const Analysis& analysis, const Tally& t) {
  CountReport r;
  r.n = n;
  r.kind = kind;
  r.algorithm = reported_algorithm(analysis);
  r.total_seen = t.seen;
  r.accepted = t.accepted;
  r.binomial_passed = t.binomial;
  r.filters_passed = t.filtered;
  r.per_b1.assign(t.per_b1.begin(), t.per_b1.end());
  r.rounds_histogram.assign(t.rounds.begin(), t.rounds.end());
  return r;
}

CountReport walk(std::size_t n, SequenceKind kind, std::span<const Degree> prefix,
                 const Analysis& analysis) {
  Tally tally(n);
  for (SequenceGenerator gen(n, kind, prefix); !gen.done(); gen.advance()) {
    visit(analysis, gen.values(), gen.prefix_sums(), tally);
  }
  return to_report(n, kind, analysis, tally);
}

using Completion = std::function<void(const SliceTask&, const CountReport&)>;

CountReport run_tasks(std::size_t n, SequenceKind kind, std::span<const SliceTask> tasks,
                      const Analysis& analysis, unsigned threads, const Completion& done) {
  std::vector<CountReport> reports(tasks.size());
  const auto count = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1u, threads))
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto& task = tasks[static_cast<std::size_t>(i)];
    reports[static_cast<std::size_t>(i)] = run_slice(task, analysis);
    if (done) {
#pragma omp critical(degseq_checkpoint)
      done(task, reports[static_cast<std::size_t>(i)]);
    }
  }
  CountReport merged = aggregate(reports);
  merged.n = n;
  merged.kind = kind;
  merged.algorithm = reported_algorithm(analysis);
  if (merged.per_b1.size() < n) merged.per_b1.resize(n, 0);
  if (merged.rounds_histogram.size() < histogram_slots(n)) {
    merged.rounds_histogram.resize(histogram_slots(n), 0);
  }
  return merged;
}

}  // namespace

CountReport run_slice(const SliceTask& task, const Analysis& analysis) {
  return walk(task.n, task.kind, task.fixed_prefix, analysis);
}

CountReport run_serial(std::size_t n, SequenceKind kind, const Analysis& analysis) {
  return walk(n, kind, {}, analysis);
}

CountReport run_parallel(std::span<const SliceTask> tasks, const Analysis& analysis,
                         unsigned threads) {
  if (tasks.empty()) return aggregate({});
  return run_tasks(tasks.front().n, tasks.front().kind, tasks, analysis, threads, nullptr);
}

std::string format_checkpoint(const CheckpointRecord& record) {
  std::ostringstream line;
  line << record.n << ',' << to_string(record.kind) << ',';
  for (std::size_t k = 0; k < record.prefix.size(); ++k) {
    if (k) line << ';';
    line << record.prefix[k];
  }
  line << ',' << record.accepted << ',' << record.total_seen;
  return line.str();
}

std::vector<CheckpointRecord> read_checkpoint(const std::filesystem::path& path) {
  std::vector<CheckpointRecord> records;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string field; std::getline(ss, field, ',');) fields.push_back(field);
    if (fields.size() != 5) throw std::runtime_error("malformed checkpoint line: " + line);
    CheckpointRecord r;
    r.n = std::stoul(fields[0]);
    r.kind = parse_kind(fields[1]);
    std::stringstream ps(fields[2]);
    for (std::string v; std::getline(ps, v, ';');) r.prefix.push_back(std::stoll(v));
    r.accepted = BigCount(fields[3]);
    r.total_seen = BigCount(fields[4]);
    records.push_back(std::move(r));
  }
  return records;
}

namespace {

CountReport count_level(std::size_t n, Algorithm algorithm, unsigned threads,
                        const std::optional<CheckpointOptions>& checkpoint) {
  const Analysis analysis{Analysis::Mode::Graphical, algorithm};
  auto tasks = slice_plan(n, SequenceKind::ZerofreeEven);
  if (!checkpoint) {
    CountReport r = run_tasks(n, SequenceKind::ZerofreeEven, tasks, analysis, threads, nullptr);
    return r;
  }

  CountReport restored;
  restored.n = n;
  restored.kind = SequenceKind::ZerofreeEven;
  restored.algorithm = algorithm;
  restored.per_b1.assign(n, 0);
  std::vector<SliceTask> pending;
  const auto records = read_checkpoint(checkpoint->path);
  for (auto& task : tasks) {
    auto hit = std::find_if(records.begin(), records.end(), [&](const CheckpointRecord& r) {
      return r.n == n && r.kind == SequenceKind::ZerofreeEven && r.prefix == task.fixed_prefix;
    });
    if (hit == records.end()) {
      pending.push_back(std::move(task));
      continue;
    }
    restored.accepted += hit->accepted;
    restored.total_seen += hit->total_seen;
    restored.per_b1[static_cast<std::size_t>(hit->prefix.front())] += hit->accepted;
  }

  std::ofstream log(checkpoint->path, std::ios::app);
  const Completion append = [&](const SliceTask& task, const CountReport& r) {
    log << format_checkpoint({n, task.kind, task.fixed_prefix, r.accepted, r.total_seen}) << '\n';
    log.flush();
  };
  CountReport fresh = run_tasks(n, SequenceKind::ZerofreeEven, pending, analysis, threads, append);
  const CountReport parts[] = {restored, fresh};
  return aggregate(parts);
}

}  // namespace

CountReport count_graphical(std::size_t n, Algorithm algorithm, unsigned threads,
                            const std::optional<CheckpointOptions>& checkpoint) {
  std::vector<BigCount> zerofree(n + 1, 0);
  CountReport last;
  for (std::size_t k = 2; k <= n; ++k) {
    last = count_level(k, algorithm, threads, checkpoint);
    zerofree[k] = last.accepted;
  }
  if (n < 2) {
    last.n = n;
    last.algorithm = algorithm;
    last.per_b1.assign(n, 0);
  }
  last.derived_total = graphical_recurrence(zerofree, std::max<std::size_t>(n, 1))[n];
  return last;
}

CountReport filter_census(std::size_t n, unsigned threads) {
  const Analysis analysis{Analysis::Mode::Census, Algorithm::ErdosGallaiLinear};
  const auto tasks = slice_plan(n, SequenceKind::ZerofreeEven);
  return run_tasks(n, SequenceKind::ZerofreeEven, tasks, analysis, threads, nullptr);
}

std::vector<CensusRow> census_table(std::size_t max_n, unsigned threads) {
  std::vector<CensusRow> rows;
  BigCount binomial = 1, filtered = 1, graphical = 1;
  for (std::size_t n = 1; n <= max_n; ++n) {
    CensusRow row;
    row.n = n;
    if (n >= 2) {
      const CountReport r = filter_census(n, threads);
      row.zerofree_even = r.total_seen;
      row.zerofree_binomial = r.binomial_passed;
      row.zerofree_filtered = r.filters_passed;
      row.zerofree_graphical = r.accepted;
      binomial += r.binomial_passed;
      filtered += r.filters_passed;
      graphical += r.accepted;
    }
    row.binomial = binomial;
    row.filtered = filtered;
    row.graphical = graphical;
    rows.push_back(row);
  }
  return rows;
}

CountReport b1_distribution(std::size_t n, unsigned threads) {
  // A graphical n-sequence with p positive elements is a zerofree graphical
  // p-sequence padded with zeros.
  CountReport out;
  out.n = n;
  out.kind = SequenceKind::Even;
  out.algorithm = Algorithm::ErdosGallaiLinear;
  out.per_b1.assign(n, 0);
  out.per_b1[0] = 1;
  out.accepted = 1;
  out.total_seen = 1;
  const Analysis analysis{Analysis::Mode::Graphical, Algorithm::ErdosGallaiLinear};
  for (std::size_t p = 2; p <= n; ++p) {
    const auto tasks = slice_plan(p, SequenceKind::ZerofreeEven);
    const CountReport level = run_tasks(p, SequenceKind::ZerofreeEven, tasks, analysis, threads, nullptr);
    for (std::size_t d = 0; d < level.per_b1.size(); ++d) out.per_b1[d] += level.per_b1[d];
    out.accepted += level.accepted;
    out.total_seen += level.total_seen;
  }
  return out;
}

CountReport egj_round_histogram(std::size_t n, unsigned threads) {
  const Analysis analysis{Analysis::Mode::JumpingRounds, Algorithm::ErdosGallaiJumping};
  const auto tasks = slice_plan(n, SequenceKind::Even);
  return run_tasks(n, SequenceKind::Even, tasks, analysis, threads, nullptr);
}

unsigned default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace degseq
