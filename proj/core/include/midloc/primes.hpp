#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "midloc/rational.hpp"

namespace midloc {

/// Number of primes available from the built-in table.
std::size_t prime_table_size();

/// The i-th prime, 1-indexed: nth_prime(1) == 2. Throws std::out_of_range
/// past the table.
std::uint64_t nth_prime(std::size_t i);

/// Product of the first k primes; primorial(0) == 1.
BigInt primorial(std::size_t k);

/// Index k of the primorial class containing d: the set of +-n / primorial(k)
/// with n coprime to the first k primes, and {0} for k = 0. Classes are
/// pairwise disjoint, so k is unique when it exists.
using DeltaClass = std::optional<std::size_t>;

/// k when the reduced denominator of a nonzero d is primorial(k) with k >= 1;
/// 0 when d == 0; nullopt when the denominator is not a primorial.
DeltaClass delta_class(const Rational& d);

}  // namespace midloc
