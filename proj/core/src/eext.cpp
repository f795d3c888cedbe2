#include "midloc/eext.hpp"

#include <cmath>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace midloc {
namespace {

// Sign of a*e + b with e in (lo, hi). Returns 0 if the bracket is too coarse.
int sign_with_bracket(const Rational& a, const Rational& b, const EBracket& e) {
  // a*e + b is monotone in e, so its range over the bracket has endpoints
  // a*lo + b and a*hi + b.
  Rational at_lo = a * e.lo + b;
  Rational at_hi = a * e.hi + b;
  if (at_lo.sign() > 0 && at_hi.sign() > 0) return 1;
  if (at_lo.sign() < 0 && at_hi.sign() < 0) return -1;
  return 0;
}

const EBracket& cached_bracket(std::size_t level) {
  // Brackets with 8, 16, 32, ... terms; built once, read-only afterwards.
  static std::mutex mu;
  static std::vector<EBracket> cache;
  std::lock_guard lock(mu);
  while (cache.size() <= level) cache.push_back(e_bracket(8u << cache.size()));
  return cache[level];
}

}  // namespace

EBracket e_bracket(unsigned terms) {
  if (terms < 2) throw std::invalid_argument("e_bracket needs at least 2 terms");
  Rational sum = 0;
  BigInt factorial = 1;
  for (unsigned n = 0; n < terms; ++n) {
    if (n > 0) factorial *= n;
    sum += Rational(BigInt(1), factorial);
  }
  // Tail after the terms 0..N-1 (N = terms): sum_{n>=N} 1/n! < 1/((N-1)! (N-1)).
  BigInt last = factorial * (terms - 1);
  return {sum, sum + Rational(BigInt(1), last)};
}

EExtNumber EExtNumber::parse(std::string_view text) {
  constexpr std::string_view kSuffix = "/e";
  if (text.size() < kSuffix.size() || text.substr(text.size() - kSuffix.size()) != kSuffix) {
    return EExtNumber(Rational::parse(text));
  }
  std::string_view body = text.substr(0, text.size() - kSuffix.size());
  // Split at the last '+' or '-' that is not a sign belonging to b itself.
  for (std::size_t i = body.size(); i-- > 1;) {
    char c = body[i];
    if ((c == '+' || c == '-') && body[i - 1] != '+' && body[i - 1] != '-') {
      std::string_view a = body.substr(0, i);
      std::string_view b = c == '+' ? body.substr(i + 1) : body.substr(i);
      return {Rational::parse(a), Rational::parse(b)};
    }
  }
  return {Rational(0), Rational::parse(body)};
}

int EExtNumber::sign() const {
  if (ecoef_.is_zero()) return rat_.sign();
  if (rat_.is_zero()) return ecoef_.sign();
  // sign(a + b/e) = sign(a*e + b) since e > 0.
  for (std::size_t level = 0; level < 6; ++level) {
    if (int s = sign_with_bracket(rat_, ecoef_, cached_bracket(level)); s != 0) return s;
  }
  for (unsigned terms = 512;; terms *= 2) {
    if (int s = sign_with_bracket(rat_, ecoef_, e_bracket(terms)); s != 0) return s;
  }
}

std::string EExtNumber::to_string() const {
  return rat_.to_string() + "+" + ecoef_.to_string() + "/e";
}

double EExtNumber::to_double() const {
  return rat_.to_double() + ecoef_.to_double() / std::exp(1.0);
}

EExtNumber& EExtNumber::operator+=(const EExtNumber& rhs) {
  rat_ += rhs.rat_;
  ecoef_ += rhs.ecoef_;
  return *this;
}

EExtNumber& EExtNumber::operator-=(const EExtNumber& rhs) {
  rat_ -= rhs.rat_;
  ecoef_ -= rhs.ecoef_;
  return *this;
}

EExtNumber& EExtNumber::operator*=(const Rational& scale) {
  rat_ *= scale;
  ecoef_ *= scale;
  return *this;
}

EExtNumber& EExtNumber::operator/=(const Rational& scale) {
  rat_ /= scale;
  ecoef_ /= scale;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const EExtNumber& value) {
  return os << value.to_string();
}

bool eext_is_algebraic(const EExtNumber& v) { return v.ecoef().is_zero(); }

std::optional<BigInt> eext_as_k_over_e(const EExtNumber& v) {
  if (!v.rat().is_zero() || !v.ecoef().is_integer() || v.ecoef().sign() < 0) return std::nullopt;
  return v.ecoef().numerator();
}

std::optional<BigInt> eext_algebraic_shift(const EExtNumber& d) {
  Rational k = -d.ecoef();
  if (!k.is_integer() || k.sign() <= 0) return std::nullopt;
  return k.numerator();
}

}  // namespace midloc
