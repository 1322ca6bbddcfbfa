#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "clean_sombor/radical_sum.hpp"
#include "clean_sombor/ring_arith.hpp"

namespace clean_sombor {

enum class FormulaTag { odd_prime_power, power_of_two, two_prime_case, general_k };

std::string_view to_string(FormulaTag tag);

/// Inputs every closed form is evaluated from. `r` comes from enumeration.
struct FormulaCase {
  FormulaTag tag = FormulaTag::odd_prime_power;
  std::uint64_t n = 0;
  std::uint64_t phi = 0;
  std::uint64_t r = 0;
  unsigned k = 0;
  unsigned two_exponent = 0;
};

/// Whether `tag` applies to the factorization shape recorded in `c`.
bool tag_applies(const FormulaCase& c, FormulaTag tag);

/// Builds the case snapshot for Z_n, picking the most specific tag
/// (two_prime_case rather than general_k when k = 2). Throws
/// std::invalid_argument for n < 3.
FormulaCase formula_case(const ResidueRing& ring);

/// n = p^a, p odd:  (phi - 2)/2 * sqrt(2).
RadicalSum formula_odd_prime_power(std::uint64_t phi);

/// n = 2^a:  (phi - 4)/2 * sqrt(2) for a >= 3, zero for a in {1, 2}.
RadicalSum formula_power_of_two(std::uint64_t phi, unsigned alpha);

/// n = p^a q^b, summed over the six edge families of Cl2:
///   3/2 sqrt2 (phi-r) + 2r sqrt(4+(1+phi)^2) + 2(phi-r) sqrt(9+(2+phi)^2)
///   + sqrt2 (phi-r)(2+phi)(phi-r+1) + r^2 sqrt2 (1+phi)
///   + 2r(phi-r) sqrt(2phi^2+6phi+5)
RadicalSum formula_two_primes(std::uint64_t phi, std::uint64_t r);

/// General k >= 2 expression, transcribed term by term without correction:
///   sqrt2/2 (phi-r)(2^k-1)
///   + (2^k-2) [ r sqrt((2^k-2)^2+(2^k-3+phi)^2) + (phi-r) sqrt((2^k-1)^2+(2^k-2+phi)^2) ]
///   + sqrt2 r^2 (2^(k-1)-1)(2^k-3+phi)
///   + 2r(phi-r)(2^(k-1)-1) sqrt((2^k-3+phi)^2+(2^k-2+phi)^2)
///   + sqrt2 (phi-r)^2 (2^(k-1)-1)(2^k-2+phi)
///   + C_k [ sqrt2 r (2^k-3+phi) + sqrt2 (phi-r)(2^k-2+phi) ]
/// with C_k = pair_class_coefficient_literal(k).
RadicalSum formula_general_k(std::uint64_t phi, std::uint64_t r, unsigned k);

/// 2^(2k-1) - 6*2^(k-1) + 4, as written in the general expression.
BigInt pair_class_coefficient_literal(unsigned k);
/// binom(2^k - 2, 2) - (2^(k-1) - 1), the count it is meant to equal.
BigInt pair_class_coefficient_derived(unsigned k);

/// Evaluates the formula for `tag` on `c`. Throws std::invalid_argument if
/// the tag does not fit the factorization in `c`.
RadicalSum formula_value(const FormulaCase& c, FormulaTag tag);

struct FormulaEvaluation {
  FormulaCase formula_case;
  RadicalSum value;
  /// General-k expression, present whenever k >= 2 (equals `value` for k >= 3).
  std::optional<RadicalSum> general_value;
  /// Literal and derived pair-class coefficients agree (k >= 2 only).
  bool pair_coefficient_consistent = true;
};

/// Dispatches on the shape of n. For k = 2 the two-prime value is primary and
/// the general-k value is attached for comparison.
FormulaEvaluation evaluate(const ResidueRing& ring);

}  // namespace clean_sombor
