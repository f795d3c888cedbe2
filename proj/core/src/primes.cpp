#include "midloc/primes.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace midloc {
namespace {

// Sieve limit: holds the first 78498 primes, far past anything a run reaches.
constexpr std::uint32_t kSieveLimit = 1'000'000;

const std::vector<std::uint32_t>& prime_table() {
  static const std::vector<std::uint32_t> table = [] {
    std::vector<bool> composite(kSieveLimit + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint32_t n = 2; n <= kSieveLimit; ++n) {
      if (composite[n]) continue;
      primes.push_back(n);
      for (std::uint64_t m = std::uint64_t{n} * n; m <= kSieveLimit; m += n) composite[m] = true;
    }
    return primes;
  }();
  return table;
}

}  // namespace

std::size_t prime_table_size() { return prime_table().size(); }

std::uint64_t nth_prime(std::size_t i) {
  const auto& table = prime_table();
  if (i == 0 || i > table.size()) {
    throw std::out_of_range("prime index " + std::to_string(i) + " outside table");
  }
  return table[i - 1];
}

BigInt primorial(std::size_t k) {
  BigInt product = 1;
  for (std::size_t i = 1; i <= k; ++i) product *= static_cast<unsigned long>(nth_prime(i));
  return product;
}

DeltaClass delta_class(const Rational& d) {
  if (d.is_zero()) return 0;
  BigInt rest = d.denominator();
  std::size_t k = 0;
  const auto& table = prime_table();
  while (rest != 1) {
    if (k == table.size()) return std::nullopt;
    unsigned long p = table[k];
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) return std::nullopt;
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    ++k;
  }
  // Denominator 1 is primorial(0), but class 0 holds only zero.
  if (k == 0) return std::nullopt;
  return k;
}

}  // namespace midloc
