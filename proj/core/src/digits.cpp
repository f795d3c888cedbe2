#include "midloc/digits.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "midloc/errors.hpp"

namespace midloc {
namespace {

void check_base(int base) {
  if (base != 2 && base != 3) throw std::invalid_argument("digit base must be 2 or 3");
}

// Long division of x in [0, 1). `accept(digit)` may stop the walk early by
// returning false, in which case nullopt is returned.
std::optional<DigitExpansion> long_division(const Rational& x, int base,
                                            const std::function<bool(Digit)>& accept) {
  check_base(base);
  if (x.sign() < 0 || x >= 1) throw std::invalid_argument("expansion needs 0 <= x < 1");
  const BigInt den = x.denominator();
  BigInt rem = x.numerator();
  std::map<BigInt, std::size_t> seen;  // remainder -> position of the digit it produces
  std::vector<Digit> digits;
  while (true) {
    auto [it, inserted] = seen.emplace(rem, digits.size());
    if (!inserted) {
      DigitExpansion out;
      out.base = base;
      out.preperiod.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(it->second));
      out.period.assign(digits.begin() + static_cast<std::ptrdiff_t>(it->second), digits.end());
      return out;
    }
    rem *= base;
    BigInt q;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), rem.get_mpz_t(), den.get_mpz_t());
    auto digit = static_cast<Digit>(q.get_ui());
    if (!accept(digit)) return std::nullopt;
    if (digits.size() == max_expansion_digits()) {
      throw ResourceLimit("base-" + std::to_string(base) + " expansion of a rational with a " +
                          std::to_string(mpz_sizeinbase(den.get_mpz_t(), 2)) +
                          "-bit denominator exceeds " + std::to_string(max_expansion_digits()) +
                          " digits");
    }
    digits.push_back(digit);
  }
}

}  // namespace

Digit DigitExpansion::digit(std::size_t i) const {
  if (i == 0) throw std::out_of_range("digit positions start at 1");
  if (i <= preperiod.size()) return preperiod[i - 1];
  return period[(i - 1 - preperiod.size()) % period.size()];
}

std::string DigitExpansion::to_string() const {
  std::string s = "0.";
  for (Digit d : preperiod) s.push_back(static_cast<char>('0' + d));
  s.push_back('(');
  for (Digit d : period) s.push_back(static_cast<char>('0' + d));
  s.push_back(')');
  return s;
}

DigitExpansion expand(const Rational& x, int base) {
  return *long_division(x, base, [](Digit) { return true; });
}

Rational evaluate(const DigitExpansion& expansion) {
  check_base(expansion.base);
  if (expansion.period.empty()) throw std::invalid_argument("expansion with empty period");
  const unsigned long b = static_cast<unsigned long>(expansion.base);
  BigInt pre = 0;
  for (Digit d : expansion.preperiod) pre = pre * b + d;
  BigInt rep = 0;
  for (Digit d : expansion.period) rep = rep * b + d;
  BigInt pre_scale;
  mpz_ui_pow_ui(pre_scale.get_mpz_t(), b, expansion.preperiod.size());
  BigInt rep_scale;
  mpz_ui_pow_ui(rep_scale.get_mpz_t(), b, expansion.period.size());
  // 0.P(Q) = (P + Q / (b^|Q| - 1)) / b^|P|
  return (Rational(pre) + Rational(rep, rep_scale - 1)) / Rational(pre_scale);
}

DigitExpansion normalized(DigitExpansion e) {
  if (e.period.empty()) throw std::invalid_argument("expansion with empty period");
  const std::size_t n = e.period.size();
  for (std::size_t len = 1; len <= n; ++len) {
    if (n % len != 0) continue;
    bool repeats = true;
    for (std::size_t i = len; i < n && repeats; ++i) repeats = e.period[i] == e.period[i - len];
    if (repeats) {
      e.period.resize(len);
      break;
    }
  }
  // Fold trailing preperiod digits into the period while they match its end.
  while (!e.preperiod.empty() && e.preperiod.back() == e.period.back()) {
    std::rotate(e.period.rbegin(), e.period.rbegin() + 1, e.period.rend());
    e.preperiod.pop_back();
  }
  return e;
}

DigitExpansion binary_map_form(const Rational& x) {
  if (x.sign() < 0 || x > Rational(1, 2)) {
    throw std::invalid_argument("binary_map_form needs 0 <= x <= 1/2");
  }
  DigitExpansion e = expand(x, 2);
  if (!e.terminates() || x <= Rational(1, 4)) return e;
  // Dyadic x in (1/4, 1/2]: ...1(0) becomes ...0(1).
  e.preperiod.back() = 0;
  e.period = {1};
  return e;
}

std::optional<DigitExpansion> cantor_digits(const Rational& x) {
  bool seen_one = false;
  auto accept = [&seen_one](Digit d) {
    if (seen_one) return d == 0;  // only "1 followed by zeros" can be rewritten
    if (d == 1) seen_one = true;
    return true;
  };
  auto e = long_division(x, 3, accept);
  if (!e) return std::nullopt;
  if (!seen_one) return e;
  // The single 1 must be the last preperiod digit of a terminating expansion.
  if (!e->terminates() || e->preperiod.empty() || e->preperiod.back() != 1) return std::nullopt;
  e->preperiod.back() = 0;
  e->period = {2};
  return e;
}

bool is_cantor(const Rational& x) { return cantor_digits(x.frac()).has_value(); }

}  // namespace midloc
