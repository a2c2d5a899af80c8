#include "degseq/counting.hpp"

#include <algorithm>

namespace degseq {

BigCount binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigCount result = 1;
  // result * (n - k + i) is divisible by i at every step.
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

namespace {

void require_bounds(std::int64_t l, std::int64_t u) {
  if (u < l) {
    throw CountingError(CountingErrorKind::BadBounds,
                        "upper bound " + std::to_string(u) + " below lower bound " +
                            std::to_string(l));
  }
}

ExactRational ratio(const BigCount& num, const BigCount& den) { return ExactRational(num, den); }

ExactRational power(const ExactRational& base, std::uint64_t exponent) {
  ExactRational out = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace

BigCount count_bounded(std::int64_t l, std::int64_t u, std::uint64_t m) {
  require_bounds(l, u);
  return boost::multiprecision::pow(BigCount(u - l + 1), static_cast<unsigned>(m));
}

BigCount count_regular(std::int64_t l, std::int64_t u, std::uint64_t m) {
  require_bounds(l, u);
  return binomial(static_cast<std::uint64_t>(u - l) + m, m);
}

BigCount count_regular_n(std::uint64_t n) { return binomial(2 * n - 1, n); }

BigCount count_zerofree_regular(std::uint64_t n) {
  if (n < 2) return 0;
  return binomial(2 * n - 2, n);
}

BigCount count_even(std::uint64_t n) {
  return (binomial(2 * n - 1, n) + binomial(n - 1, n / 2)) / 2;
}

BigCount rainbow_count(std::uint64_t n, std::uint64_t m, std::uint64_t k) {
  if (k < 1 || k > std::min(n, m)) {
    throw CountingError(CountingErrorKind::BadK, "k = " + std::to_string(k) + " outside [1, min(n, m)]");
  }
  return binomial(n, k) * binomial(m - 1, k - 1);
}

ExactRational rainbow_regular_expectation(std::uint64_t n) {
  return ExactRational(BigCount(n) * n, BigCount(2 * n - 1));
}

ExactRational rainbow_regular_variance(std::uint64_t n) {
  const BigCount d = 2 * n - 1;
  return ExactRational(BigCount(n) * n * (n - 1), 2 * d * d);
}

ExactRational rainbow_bounded_expectation(std::uint64_t n) {
  const ExactRational miss = power(ExactRational(BigCount(n - 1), BigCount(n)), n);
  return ExactRational(n) * (1 - miss);
}

ExactRational rainbow_bounded_variance(std::uint64_t n) {
  const ExactRational nn(n);
  const ExactRational miss = power(ExactRational(BigCount(n - 1), BigCount(n)), n);
  const ExactRational miss_two = n >= 2 ? power(ExactRational(BigCount(n - 2), BigCount(n)), n)
                                        : ExactRational(0);
  return nn * miss * (1 - miss) + nn * (nn - 1) * (miss_two - miss * miss);
}

BigCount block_count(std::uint64_t n, std::uint64_t j) {
  if (j < 1 || j > n) {
    throw CountingError(CountingErrorKind::BadJ, "j = " + std::to_string(j) + " outside [1, n]");
  }
  BigCount total = 0;
  for (std::uint64_t k = j; k <= n; ++k) total += binomial(n, k) * binomial(n - 1, k - 1);
  return total;
}

ExactRational expected_block_length(std::uint64_t n, std::uint64_t j) {
  if (j < 1 || j > n) {
    throw CountingError(CountingErrorKind::EmptyCondition,
                        "no n-regular sequence has " + std::to_string(j) + " blocks");
  }
  BigCount lengths = 0;
  for (std::uint64_t k = j; k <= n; ++k) {
    const BigCount c = binomial(n, k);
    lengths += c * c;
  }
  return ratio(lengths, block_count(n, j));
}

ExactRational block_count_ratio(std::uint64_t n, std::uint64_t j) {
  if (j < 1 || j > n) {
    throw CountingError(CountingErrorKind::EmptyCondition,
                        "no n-regular sequence has " + std::to_string(j) + " blocks");
  }
  return ratio(block_count(n + 1, j + 1), block_count(n, j));
}

std::vector<BigCount> graphical_recurrence(const std::vector<BigCount>& zerofree, std::uint64_t n) {
  if (n < 1 || zerofree.size() < n + 1) {
    throw CountingError(CountingErrorKind::IncompleteTable,
                        "need G_z(2.." + std::to_string(n) + ")");
  }
  std::vector<BigCount> g(n + 1, 0);
  g[1] = 1;
  for (std::uint64_t i = 2; i <= n; ++i) g[i] = g[i - 1] + zerofree[i];
  return g;
}

std::string to_decimal(const ExactRational& value, unsigned digits) {
  const BigCount num = boost::multiprecision::numerator(value);
  const BigCount den = boost::multiprecision::denominator(value);
  const BigCount scale = boost::multiprecision::pow(BigCount(10), digits);
  const BigCount scaled = (2 * num * scale + den) / (2 * den);
  const BigCount whole = scaled / scale;
  std::string frac = BigCount(scaled % scale).str();
  if (digits == 0) return whole.str();
  frac.insert(frac.begin(), digits - frac.size(), '0');
  return whole.str() + "." + frac;
}

std::string to_string(const BigCount& value) { return value.str(); }

std::string to_string(const ExactRational& value) {
  const BigCount den = boost::multiprecision::denominator(value);
  if (den == 1) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

}  // namespace degseq
