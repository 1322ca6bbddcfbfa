#include "clean_sombor/radical_sum.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace clean_sombor {

namespace {

std::uint64_t isqrt(std::uint64_t x) {
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (static_cast<unsigned __int128>(s) * s > x) --s;
  while (static_cast<unsigned __int128>(s + 1) * (s + 1) <= x) ++s;
  return s;
}

}  // namespace

SquarefreeSplit split_square(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("split_square: zero has no squarefree part");
  SquarefreeSplit out;
  std::uint64_t rest = x;
  for (std::uint64_t p = 2; static_cast<unsigned __int128>(p) * p * p <= rest;
       p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) out.square_root_part *= p;
    if (e % 2) out.squarefree_part *= p;
  }
  // Every prime factor of `rest` now exceeds its cube root: rest is 1, q, q*q' or q^2.
  const std::uint64_t s = isqrt(rest);
  if (s * s == rest) {
    out.square_root_part *= s;
  } else {
    out.squarefree_part *= rest;
  }
  return out;
}

bool is_squarefree(std::uint64_t x) { return x != 0 && split_square(x).square_root_part == 1; }

RadicalSum sqrt_int(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("sqrt_int: radicand must be positive");
  return RadicalSum::term(Rational(1), x);
}

RadicalSum sqrt_int(const BigInt& x) {
  if (x <= 0) throw std::invalid_argument("sqrt_int: radicand must be positive");
  if (x > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("sqrt_int: radicand exceeds 64 bits");
  }
  return sqrt_int(x.convert_to<std::uint64_t>());
}

RadicalSum RadicalSum::term(const Rational& coefficient, Radicand radicand) {
  if (radicand == 0) throw std::invalid_argument("RadicalSum::term: radicand must be positive");
  RadicalSum out;
  const SquarefreeSplit split = split_square(radicand);
  out.add_canonical(split.squarefree_part, coefficient * BigInt(split.square_root_part));
  return out;
}

Rational RadicalSum::coefficient(Radicand squarefree) const {
  const auto it = terms_.find(squarefree);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RadicalSum::add_canonical(Radicand squarefree, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(squarefree, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& other) {
  for (const auto& [d, c] : other.terms_) add_canonical(d, c);
  return *this;
}

RadicalSum& RadicalSum::operator-=(const RadicalSum& other) {
  for (const auto& [d, c] : other.terms_) add_canonical(d, -c);
  return *this;
}

RadicalSum& RadicalSum::operator*=(const Rational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, c] : terms_) c *= q;
  return *this;
}

double RadicalSum::to_double() const {
  double sum = 0.0;
  for (const auto& [d, c] : terms_) {
    sum += c.convert_to<double>() * std::sqrt(static_cast<double>(d));
  }
  return sum;
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << '/' << denominator(q);
  return os.str();
}

std::string RadicalSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (d == 1) {
      out += clean_sombor::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out += clean_sombor::to_string(magnitude);
    out += "√";
    out += std::to_string(d);
  }
  return out;
}

}  // namespace clean_sombor
