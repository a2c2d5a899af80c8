#pragma once

// Exact closed forms for sequence counts and rainbow statistics.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace degseq {

using BigCount = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

enum class CountingErrorKind { BadBounds, BadK, BadJ, EmptyCondition, IncompleteTable };

class CountingError : public std::domain_error {
 public:
  CountingError(CountingErrorKind kind, const std::string& what)
      : std::domain_error(what), kind_(kind) {}
  CountingErrorKind kind() const noexcept { return kind_; }

 private:
  CountingErrorKind kind_;
};

BigCount binomial(std::uint64_t n, std::uint64_t k);

/// (l,u,m)-bounded sequences: (u-l+1)^m.
BigCount count_bounded(std::int64_t l, std::int64_t u, std::uint64_t m);
/// (l,u,m)-regular (non-increasing) sequences: C(u-l+m, m).
BigCount count_regular(std::int64_t l, std::int64_t u, std::uint64_t m);
/// R(n) = C(2n-1, n).
BigCount count_regular_n(std::uint64_t n);
/// R_z(n) = C(2n-2, n), the zerofree n-regular sequences.
BigCount count_zerofree_regular(std::uint64_t n);
/// E(n) = (C(2n-1, n) + C(n-1, floor(n/2))) / 2.
BigCount count_even(std::uint64_t n);

/// (0,n-1,m)-regular sequences with exactly k distinct values:
/// C(n,k) C(m-1,k-1).
BigCount rainbow_count(std::uint64_t n, std::uint64_t m, std::uint64_t k);

ExactRational rainbow_regular_expectation(std::uint64_t n);
ExactRational rainbow_regular_variance(std::uint64_t n);
ExactRational rainbow_bounded_expectation(std::uint64_t n);
ExactRational rainbow_bounded_variance(std::uint64_t n);

/// c(n,j): n-regular sequences with at least j blocks of equal values.
BigCount block_count(std::uint64_t n, std::uint64_t j);

/// E[e_j | r >= j]: mean length of the j-th block over the n-regular
/// sequences that have one. Equals sum_{k>=j} C(n,k)^2 / c(n,j).
ExactRational expected_block_length(std::uint64_t n, std::uint64_t j);

/// c(n+1, j+1) / c(n, j). Tends to 4 for fixed j; kept for comparison with the
/// exact expectation above, which it does not equal.
ExactRational block_count_ratio(std::uint64_t n, std::uint64_t j);

/// G(i) for i = 1..n from G_z(i), i = 2..n: G(1) = 1, G(i) = G(i-1) + G_z(i).
/// `zerofree[i]` holds G_z(i); entries 0 and 1 are ignored. Throws
/// IncompleteTable when fewer than n+1 entries are supplied. The result is
/// indexed the same way (entry 0 unused and set to 0).
std::vector<BigCount> graphical_recurrence(const std::vector<BigCount>& zerofree, std::uint64_t n);

/// Decimal rendering rounded half-up to `digits` fractional digits (value >= 0).
std::string to_decimal(const ExactRational& value, unsigned digits);

std::string to_string(const BigCount& value);
std::string to_string(const ExactRational& value);

}  // namespace degseq
