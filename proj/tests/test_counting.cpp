#include "doctest.h"

#include <vector>

#include "degseq/counting.hpp"
#include "oracles.hpp"

using namespace degseq;

namespace {

std::vector<std::vector<BigCount>> pascal(std::size_t rows) {
  std::vector<std::vector<BigCount>> t(rows + 1);
  for (std::size_t r = 0; r <= rows; ++r) {
    t[r].assign(r + 1, 1);
    for (std::size_t k = 1; k < r; ++k) t[r][k] = t[r - 1][k - 1] + t[r - 1][k];
  }
  return t;
}

ExactRational mean(const oracle::Moments& m) { return ExactRational(m.sum, m.count); }

ExactRational variance(const oracle::Moments& m) {
  const ExactRational mu = mean(m);
  return ExactRational(m.sum_sq, m.count) - mu * mu;
}

CountingErrorKind error_of(auto&& call) {
  try {
    call();
  } catch (const CountingError& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return CountingErrorKind::BadBounds;
}

}  // namespace

TEST_CASE("binomial against Pascal's triangle") {
  const auto t = pascal(120);
  for (std::uint64_t n = 0; n <= 120; ++n)
    for (std::uint64_t k = 0; k <= n; ++k) REQUIRE(binomial(n, k) == t[n][k]);
  CHECK(binomial(5, 7) == 0);
}

TEST_CASE("sequence counts against enumeration") {
  for (std::int64_t l = 0; l <= 2; ++l) {
    for (std::int64_t u = l; u <= 5; ++u) {
      for (std::uint64_t m = 1; m <= 6; ++m) {
        CHECK(count_regular(l, u, m) == oracle::nonincreasing(l, u, m).size());
        BigCount words = 1;
        for (std::uint64_t i = 0; i < m; ++i) words *= u - l + 1;
        CHECK(count_bounded(l, u, m) == words);
      }
    }
  }
  for (std::size_t n = 1; n <= 10; ++n) {
    std::size_t even = 0, zerofree = 0;
    for (const auto& s : oracle::regular(n)) {
      even += oracle::total(s) % 2 == 0;
      zerofree += oracle::zerofree(s);
    }
    CHECK(count_regular_n(n) == oracle::regular(n).size());
    CHECK(count_even(n) == even);
    CHECK(count_zerofree_regular(n) == zerofree);
  }
}

TEST_CASE("rainbow distribution against enumeration") {
  for (std::uint64_t n = 1; n <= 7; ++n) {
    for (std::uint64_t m = 1; m <= 7; ++m) {
      std::vector<std::size_t> by_k(std::min(n, m) + 1, 0);
      for (const auto& s : oracle::nonincreasing(0, static_cast<std::int64_t>(n) - 1, m))
        ++by_k[oracle::distinct(s)];
      for (std::uint64_t k = 1; k <= std::min(n, m); ++k) CHECK(rainbow_count(n, m, k) == by_k[k]);
    }
  }
}

TEST_CASE("rainbow moments against enumeration") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto m = oracle::rainbow_regular(n);
    CHECK(rainbow_regular_expectation(n) == mean(m));
    CHECK(rainbow_regular_variance(n) == variance(m));
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto m = oracle::rainbow_bounded(n);
    CHECK(rainbow_bounded_expectation(n) == mean(m));
    CHECK(rainbow_bounded_variance(n) == variance(m));
  }
}

TEST_CASE("block counts and mean block length") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto seqs = oracle::regular(n);
    for (std::size_t j = 1; j <= n; ++j) {
      std::size_t count = 0;
      ExactRational length_sum = 0;
      for (const auto& s : seqs) {
        const auto k = oracle::distinct(s);
        if (k < j) continue;
        ++count;
        length_sum += ExactRational(n, k);
      }
      CHECK(block_count(n, j) == count);
      CHECK(expected_block_length(n, j) == length_sum / count);
    }
  }
  CHECK(expected_block_length(2, 1) == ExactRational(5, 3));
  CHECK(block_count(3, 3) == 1);
  CHECK(block_count_ratio(2, 1) == ExactRational(block_count(3, 2), block_count(2, 1)));
}

TEST_CASE("block count ratio rises towards 4") {
  for (std::uint64_t j = 1; j <= 3; ++j) {
    ExactRational previous = 0;
    for (std::uint64_t n = j; n < 40; ++n) {
      const auto r = block_count_ratio(n, j);
      CHECK(r > previous);
      CHECK(r < 4);
      previous = r;
    }
  }
}

TEST_CASE("recurrence") {
  const std::vector<BigCount> gz{0, 0, 1, 2, 7, 20, 71};
  const auto g = graphical_recurrence(gz, 6);
  CHECK(g == std::vector<BigCount>{0, 1, 2, 4, 11, 31, 102});
  CHECK(error_of([&] { graphical_recurrence(gz, 7); }) == CountingErrorKind::IncompleteTable);
}

TEST_CASE("domain errors") {
  CHECK(error_of([] { count_regular(3, 2, 1); }) == CountingErrorKind::BadBounds);
  CHECK(error_of([] { count_bounded(3, 2, 1); }) == CountingErrorKind::BadBounds);
  CHECK(error_of([] { rainbow_count(3, 3, 0); }) == CountingErrorKind::BadK);
  CHECK(error_of([] { rainbow_count(3, 2, 3); }) == CountingErrorKind::BadK);
  CHECK(error_of([] { block_count(3, 0); }) == CountingErrorKind::BadJ);
  CHECK(error_of([] { expected_block_length(3, 4); }) == CountingErrorKind::EmptyCondition);
}

TEST_CASE("formatting") {
  CHECK(to_decimal(ExactRational(2, 3), 13) == "0.6666666666667");
  CHECK(to_decimal(ExactRational(19, 35), 13) == "0.5428571428571");
  CHECK(to_decimal(ExactRational(1), 3) == "1.000");
  CHECK(to_decimal(ExactRational(7, 2), 0) == "4");
  CHECK(to_string(ExactRational(6, 4)) == "3/2");
  CHECK(to_string(BigCount(12)) == "12");
}
