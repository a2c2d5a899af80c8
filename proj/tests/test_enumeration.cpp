#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include <unistd.h>

#include "degseq/enumeration.hpp"
#include "oracles.hpp"

using namespace degseq;

namespace {

bool belongs(const oracle::Seq& s, SequenceKind kind) {
  if (kind == SequenceKind::Regular) return true;
  if (oracle::total(s) % 2) return false;
  return kind == SequenceKind::Even || oracle::zerofree(s);
}

std::vector<oracle::Seq> expected(std::size_t n, SequenceKind kind) {
  std::vector<oracle::Seq> out;
  for (auto& s : oracle::regular(n))
    if (belongs(s, kind)) out.push_back(s);
  return out;
}

std::vector<oracle::Seq> walk(std::size_t n, SequenceKind kind, const std::vector<Degree>& prefix = {}) {
  std::vector<oracle::Seq> out;
  for (SequenceGenerator gen(n, kind, prefix); !gen.done(); gen.advance()) {
    const auto v = gen.values();
    const auto h = gen.prefix_sums();
    REQUIRE(h.size() == n + 1);
    REQUIRE(h[0] == 0);
    for (std::size_t i = 0; i < n; ++i) REQUIRE(h[i + 1] == h[i] + v[i]);
    out.emplace_back(v.begin(), v.end());
  }
  return out;
}

void check_same(const CountReport& a, const CountReport& b) {
  CHECK(a.n == b.n);
  CHECK(a.kind == b.kind);
  CHECK(a.algorithm == b.algorithm);
  CHECK(a.total_seen == b.total_seen);
  CHECK(a.accepted == b.accepted);
  CHECK(a.per_b1 == b.per_b1);
  CHECK(a.rounds_histogram == b.rounds_histogram);
  CHECK(a.binomial_passed == b.binomial_passed);
  CHECK(a.filters_passed == b.filters_passed);
  CHECK(a.derived_total == b.derived_total);
}

const SequenceKind kKinds[] = {SequenceKind::Regular, SequenceKind::Even, SequenceKind::ZerofreeEven};

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("degseq_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST_CASE("generator visits each sequence once, in reverse lexicographic order") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (auto kind : kKinds) {
      INFO("n=", n, " kind=", to_string(kind));
      CHECK(walk(n, kind) == expected(n, kind));
    }
  }
}

TEST_CASE("fixed prefixes select exactly the matching sequences") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (auto kind : kKinds) {
      for (const auto& task : slice_plan(n, kind, 2)) {
        std::vector<oracle::Seq> want;
        for (auto& s : expected(n, kind))
          if (std::equal(task.fixed_prefix.begin(), task.fixed_prefix.end(), s.begin())) want.push_back(s);
        CHECK(walk(n, kind, task.fixed_prefix) == want);
      }
    }
  }
}

TEST_CASE("slice plans partition the space") {
  for (std::size_t n = 1; n <= 9; ++n) {
    for (auto kind : kKinds) {
      for (std::size_t depth : {1u, 2u}) {
        BigCount seen = 0;
        std::vector<std::vector<Degree>> prefixes;
        for (const auto& task : slice_plan(n, kind, depth)) {
          CHECK(task.n == n);
          CHECK(task.kind == kind);
          seen += run_slice(task, {}).total_seen;
          prefixes.push_back(task.fixed_prefix);
        }
        std::sort(prefixes.begin(), prefixes.end());
        CHECK(std::adjacent_find(prefixes.begin(), prefixes.end()) == prefixes.end());
        CHECK(seen == expected(n, kind).size());
      }
    }
  }
}

TEST_CASE("generate counts what it visits") {
  std::size_t calls = 0;
  const BigCount total = generate(6, SequenceKind::Even, [&](std::span<const Degree>) { ++calls; });
  CHECK(total == calls);
  CHECK(calls == expected(6, SequenceKind::Even).size());
  CHECK(generate(1, SequenceKind::ZerofreeEven, [](std::span<const Degree>) {}) == 0);
}

TEST_CASE("graphical counts against the oracle") {
  for (std::size_t n = 1; n <= 9; ++n) {
    std::size_t g = 0, gz = 0;
    std::vector<BigCount> per_b1(n, 0), per_b1_z(n, 0);
    for (const auto& s : oracle::regular(n)) {
      if (!oracle::graphical(s)) continue;
      ++g;
      ++per_b1[static_cast<std::size_t>(s[0])];
      if (oracle::zerofree(s)) {
        ++gz;
        ++per_b1_z[static_cast<std::size_t>(s[0])];
      }
    }
    const auto r = count_graphical(n, Algorithm::ErdosGallaiLinear, 2);
    CHECK(r.accepted == gz);
    CHECK(r.derived_total == BigCount(g));
    CHECK(r.per_b1 == per_b1_z);
    CHECK(b1_distribution(n, 2).per_b1 == per_b1);
  }
}

TEST_CASE("every algorithm counts the same") {
  const auto reference = count_graphical(8, Algorithm::ErdosGallaiLinear, 1);
  for (auto alg : kAllAlgorithms) {
    const auto r = count_graphical(8, alg, 2);
    CHECK(r.accepted == reference.accepted);
    CHECK(r.derived_total == reference.derived_total);
  }
}

TEST_CASE("census against the oracle") {
  const auto rows = census_table(9, 2);
  REQUIRE(rows.size() == 9);
  BigCount binomial = 1;
  for (std::size_t n = 1; n <= 9; ++n) {
    std::size_t even = 0, bin = 0, graphical = 0;
    for (const auto& s : expected(n, SequenceKind::ZerofreeEven)) {
      ++even;
      bin += oracle::binomial_ok(s);
      graphical += oracle::graphical(s);
    }
    if (n >= 2) binomial += bin;
    const auto& row = rows[n - 1];
    CHECK(row.n == n);
    CHECK(row.zerofree_even == even);
    CHECK(row.zerofree_binomial == bin);
    CHECK(row.zerofree_graphical == graphical);
    CHECK(row.binomial == binomial);
    CHECK(row.zerofree_filtered <= row.zerofree_binomial);
    CHECK(row.zerofree_filtered >= row.zerofree_graphical);
  }
  const auto single = filter_census(9, 1);
  CHECK(single.binomial_passed == rows[8].zerofree_binomial);
  CHECK(single.filters_passed == rows[8].zerofree_filtered);
}

TEST_CASE("jumping histogram covers every even non-graphical sequence") {
  for (std::size_t n = 3; n <= 9; ++n) {
    std::vector<BigCount> want((n + 1) / 2 + 1, 0);
    for (const auto& s : expected(n, SequenceKind::Even)) {
      if (oracle::graphical(s)) continue;
      // Rounds are the checkpoints visited up to the first failing one.
      std::size_t rounds = 0;
      for (std::size_t i = 1; i <= n; ++i) {
        if (i < n && s[i - 1] == s[i]) continue;
        ++rounds;
        std::int64_t lhs = 0, rhs = static_cast<std::int64_t>(i * (i - 1));
        for (std::size_t k = 0; k < n; ++k) {
          if (k < i) lhs += s[k];
          else rhs += std::min<std::int64_t>(s[k], static_cast<std::int64_t>(i));
        }
        if (lhs > rhs) break;
      }
      if (rounds > want.size()) want.resize(rounds, 0);
      ++want[rounds - 1];
    }
    CHECK(egj_round_histogram(n, 2).rounds_histogram == want);
  }
}

TEST_CASE("results do not depend on threads or slicing") {
  for (std::size_t n : {6u, 9u, 11u}) {
    const auto base = count_graphical(n, Algorithm::ErdosGallaiLinear, 1);
    for (unsigned t : {2u, 4u, 8u}) check_same(base, count_graphical(n, Algorithm::ErdosGallaiLinear, t));

    const Analysis census{Analysis::Mode::Census, Algorithm::ErdosGallaiLinear};
    const auto serial = run_serial(n, SequenceKind::ZerofreeEven, census);
    for (std::size_t depth : {1u, 2u, 3u}) {
      const auto tasks = slice_plan(n, SequenceKind::ZerofreeEven, depth);
      for (unsigned t : {1u, 3u, 8u}) check_same(serial, run_parallel(tasks, census, t));
    }
  }
}

TEST_CASE("aggregate rejects mixed reports") {
  CountReport a, b;
  a.n = 4;
  b.n = 5;
  const CountReport both[] = {a, b};
  CHECK_THROWS_AS(aggregate(both), std::invalid_argument);
  CHECK(aggregate(std::span<const CountReport>{}).total_seen == 0);
}

TEST_CASE("checkpointed runs resume to the same totals") {
  const auto path = scratch("resume");
  const auto plain = count_graphical(10, Algorithm::ErdosGallaiLinear, 2);
  check_same(plain, count_graphical(10, Algorithm::ErdosGallaiLinear, 2, CheckpointOptions{path}));

  auto records = read_checkpoint(path);
  REQUIRE(records.size() > 4);
  // Keep only the first half, as if the run had been interrupted.
  {
    std::ofstream out(path, std::ios::trunc);
    for (std::size_t k = 0; k < records.size() / 2; ++k) out << format_checkpoint(records[k]) << '\n';
  }
  check_same(plain, count_graphical(10, Algorithm::ErdosGallaiLinear, 4, CheckpointOptions{path}));
  CHECK(read_checkpoint(path).size() == records.size());

  // A complete log means no work and no new lines.
  check_same(plain, count_graphical(10, Algorithm::ErdosGallaiLinear, 1, CheckpointOptions{path}));
  CHECK(read_checkpoint(path).size() == records.size());
  std::filesystem::remove(path);
}

TEST_CASE("checkpoint lines round-trip") {
  const CheckpointRecord r{12, SequenceKind::ZerofreeEven, {11, 7}, BigCount(1234), BigCount(5678)};
  const std::string line = format_checkpoint(r);
  CHECK(line == "12,zerofree-even,11;7,1234,5678");
  const auto path = scratch("line");
  std::ofstream(path) << line << '\n';
  const auto back = read_checkpoint(path);
  REQUIRE(back.size() == 1);
  CHECK(back[0].n == 12);
  CHECK(back[0].prefix == r.prefix);
  CHECK(back[0].accepted == r.accepted);
  CHECK(back[0].total_seen == r.total_seen);
  std::filesystem::remove(path);
}

TEST_CASE("kind names") {
  for (auto kind : kKinds) CHECK(parse_kind(to_string(kind)) == kind);
  CHECK_THROWS(parse_kind("odd"));
}

TEST_CASE("empty spaces still produce a report for their n") {
  const auto tasks = slice_plan(1, SequenceKind::ZerofreeEven);
  REQUIRE(tasks.size() == 1);
  const auto r = run_parallel(tasks, {}, 2);
  CHECK(r.n == 1);
  CHECK(r.total_seen == 0);
  check_same(r, run_serial(1, SequenceKind::ZerofreeEven, {}));
}
