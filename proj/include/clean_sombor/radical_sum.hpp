#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace clean_sombor {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact value of a finite sum  c_1*sqrt(d_1) + ... + c_m*sqrt(d_m)  with
/// rational c_i and distinct squarefree d_i >= 1.
///
/// Square roots of distinct squarefree integers are linearly independent
/// over Q, so the term map is a canonical form: two sums are equal as real
/// numbers iff their maps are equal. Zero is the empty map.
class RadicalSum {
 public:
  using Radicand = std::uint64_t;
  using TermMap = std::map<Radicand, Rational>;

  RadicalSum() = default;

  /// coefficient * sqrt(radicand); the radicand is reduced to squarefree
  /// form. Throws std::invalid_argument for radicand 0.
  static RadicalSum term(const Rational& coefficient, Radicand radicand);
  static RadicalSum rational(const Rational& value) { return term(value, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of sqrt(d) for squarefree d, zero if absent.
  Rational coefficient(Radicand squarefree) const;

  RadicalSum& operator+=(const RadicalSum& other);
  RadicalSum& operator-=(const RadicalSum& other);
  RadicalSum& operator*=(const Rational& q);

  friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
  friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }
  friend RadicalSum operator*(RadicalSum a, const Rational& q) { return a *= q; }
  friend RadicalSum operator*(const Rational& q, RadicalSum a) { return a *= q; }
  RadicalSum operator-() const { return *this * Rational(-1); }

  bool operator==(const RadicalSum&) const = default;

  double to_double() const;

  /// "576√2 + 16√85"; terms by ascending radicand, coefficients as p/q,
  /// unit coefficients omitted, "0" for zero.
  std::string to_string() const;

 private:
  void add_canonical(Radicand squarefree, const Rational& coefficient);

  TermMap terms_;
};

struct SquarefreeSplit {
  std::uint64_t square_root_part = 1;  // c in x = c^2 * d
  std::uint64_t squarefree_part = 1;   // d
};

/// Splits x >= 1 as c^2 * d with d squarefree.
SquarefreeSplit split_square(std::uint64_t x);

bool is_squarefree(std::uint64_t x);

/// sqrt(x) as an exact RadicalSum. Throws std::invalid_argument for x = 0.
RadicalSum sqrt_int(std::uint64_t x);

/// Same as sqrt_int, for radicands that arrive as big integers from formula
/// evaluation. Throws std::overflow_error above 2^64 - 1.
RadicalSum sqrt_int(const BigInt& x);

inline RadicalSum add(const RadicalSum& a, const RadicalSum& b) { return a + b; }
inline RadicalSum scale(const RadicalSum& a, const Rational& q) { return a * q; }
inline bool eq(const RadicalSum& a, const RadicalSum& b) { return a == b; }
inline double to_float(const RadicalSum& a) { return a.to_double(); }
inline std::string render(const RadicalSum& a) { return a.to_string(); }

std::string to_string(const Rational& q);

}  // namespace clean_sombor
